// ybe: batch front-end for validating solutions of the set-theoretic
// Yang-Baxter equation and exploring their structure groups, finite braided
// quotients, permutation groups, and group algebras.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "ybe/braided_group.hpp"
#include "ybe/group_algebra.hpp"
#include "ybe/report.hpp"
#include "ybe/solution_io.hpp"

namespace {

using namespace ybe;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
};

void emit(const Report& rep, const Options& opt) {
  std::cout << (opt.json ? rep.render_json() : rep.render_text());
}

std::string perm_str(const Perm& p) {
  std::vector<int> v(p.begin(), p.end());
  return format_int_vector(v, 1);
}

void add_header(Report& rep, const SolutionFile& file) {
  if (!file.name.empty()) rep.add("name", file.name);
  rep.add("n", file.solution.order());
}

void add_validation(Report& rep, const ValidationReport& v) {
  rep.add("nondegenerate", v.nondegenerate);
  rep.add("involutive", v.involutive);
  rep.add("braided", v.braided);
  rep.add("square_free", v.square_free);
  rep.add("lri", v.lri_holds);
  if (v.first_violation) {
    rep.add("violated_axiom", axiom_name(v.first_violation->axiom));
    rep.add("witness", format_int_vector(v.first_violation->where, 1));
  }
}

int cmd_validate(const std::string& path, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  ValidationReport v = validate(file.solution);
  Report rep;
  add_header(rep, file);
  add_validation(rep, v);
  rep.add("valid", v.ok());
  emit(rep, opt);
  return v.ok() ? kExitPass : kExitCheckFailed;
}

int cmd_degree(const std::string& path, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  Report rep;
  add_header(rep, file);
  rep.add("cyclic_degree", cyclic_degree(file.solution));
  emit(rep, opt);
  return kExitPass;
}

int cmd_order(const std::string& path, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  GroupContext ctx = GroupContext::make(file.solution);
  Report rep;
  add_header(rep, file);
  rep.add("enumeration", perm_str(ctx.enumeration().perm));
  rep.add("condition_a", ctx.rewrite_system().cond_a);
  rep.add("condition_b", ctx.rewrite_system().cond_b);
  rep.add("condition_c", ctx.rewrite_system().cond_c);
  emit(rep, opt);
  return kExitPass;
}

int cmd_reduce(const std::string& path, const std::string& word_text,
               const Options& opt) {
  SolutionFile file = load_solution_file(path);
  GroupContext ctx = GroupContext::make(file.solution);
  SignedWord word = parse_word(word_text, ctx.n());
  // File letters are relabeled to their positions under the good enumeration.
  for (auto& sl : word) sl.letter = ctx.enumeration().perm[sl.letter];
  GroupElement g = reduce_word(ctx, word);
  Report rep;
  add_header(rep, file);
  rep.add("enumeration", perm_str(ctx.enumeration().perm));
  rep.add("alpha", format_int_vector(g.alpha));
  rep.add("kappa", format_int_vector(g.kappa));
  emit(rep, opt);
  return kExitPass;
}

void write_mul_table_csv(const FiniteBraidedGroup& q, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << "*";
  for (int j = 0; j < q.order(); ++j) out << "," << q.label(j);
  out << "\n";
  for (int i = 0; i < q.order(); ++i) {
    out << q.label(i);
    for (int j = 0; j < q.order(); ++j) out << "," << q.label(q.mul(i, j));
    out << "\n";
  }
}

void add_axioms(Report& rep, const BraidedAxiomsReport& ax) {
  rep.add("group_axioms", ax.group_axioms);
  rep.add("ML0", ax.ml0);
  rep.add("ML1", ax.ml1);
  rep.add("ML2", ax.ml2);
  rep.add("MR0", ax.mr0);
  rep.add("MR1", ax.mr1);
  rep.add("MR2", ax.mr2);
  rep.add("M3", ax.m3);
  rep.add("involutive_braiding", ax.involutive);
  rep.add("nondegenerate_braiding", ax.nondegenerate);
  if (ax.first_violation) rep.add("axiom_violation", *ax.first_violation);
}

int cmd_quotient(const std::string& path, const std::string& table_out,
                 bool check_axioms, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  GroupContext ctx = GroupContext::make(file.solution);
  FiniteBraidedGroup q = quotient(ctx);
  Report rep;
  add_header(rep, file);
  rep.add("p", ctx.p());
  rep.add("quotient_order", q.order());
  bool ok = true;
  if (check_axioms) {
    BraidedAxiomsReport ax = check_braided_axioms(q);
    add_axioms(rep, ax);
    ok = ax.ok();
  }
  if (!table_out.empty()) {
    write_mul_table_csv(q, table_out);
    rep.add("table_file", table_out);
  }
  emit(rep, opt);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_pgroup(const std::string& path, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  PermGroup pg = permutation_group(file.solution);
  int p = cyclic_degree(file.solution);
  long long pn = 1;
  for (int i = 0; i < file.solution.order(); ++i) pn *= p;
  Report rep;
  add_header(rep, file);
  rep.add("p", p);
  rep.add("order", pg.order());
  rep.add("order_divides_p_to_n", pn % pg.order() == 0);
  for (std::size_t i = 0; i < pg.generators.size(); ++i)
    rep.add("L_x" + std::to_string(i + 1), perm_str(pg.generators[i]));
  emit(rep, opt);
  return kExitPass;
}

std::vector<SignedWord> signed_words_up_to(int n, int len) {
  std::vector<SignedWord> out{SignedWord{}};
  std::size_t lo = 0, hi = 1;
  for (int l = 1; l <= len; ++l) {
    std::size_t next_lo = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int s = 0; s < n; ++s)
        for (int e : {1, -1}) {
          SignedWord w = out[i];
          w.push_back({s, e});
          out.push_back(std::move(w));
        }
    lo = next_lo;
    hi = out.size();
  }
  return out;
}

int cmd_check_a(const SolutionFile& file, int len_bound,
                unsigned long long seed, const Options& opt) {
  GroupContext ctx = GroupContext::make(file.solution);
  Report rep;
  add_header(rep, file);
  rep.add("theorem", "A");
  rep.add("p", ctx.p());

  auto words = signed_words_up_to(ctx.n(), len_bound);
  long long split_checks = 0, split_bad = 0;
  for (const SignedWord& w : words) {
    GroupElement whole = reduce_word(ctx, w);
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      SignedWord a(w.begin(), w.begin() + cut);
      SignedWord b(w.begin() + cut, w.end());
      ++split_checks;
      if (!(mul(ctx, reduce_word(ctx, a), reduce_word(ctx, b)) == whole))
        ++split_bad;
    }
    if (!(reduce_word(ctx, ctx.canonical_word(whole)) == whole)) ++split_bad;
  }
  rep.add("words_checked", static_cast<long long>(words.size()));
  rep.add("split_checks", split_checks);
  rep.add("split_failures", split_bad);

  long long pn = 1;
  bool coset_ok = true;
  for (int i = 0; i < ctx.n(); ++i) pn *= ctx.p();
  long long coset_checks = 0;
  if (pn <= 4096) {
    std::mt19937_64 rng(seed);
    FiniteBraidedGroup q = quotient(ctx);
    for (int idx = 0; idx < q.order(); ++idx) {
      GroupElement y{q.element(idx), std::vector<long long>(ctx.n(), 0)};
      for (int t = 0; t < 3; ++t) {
        GroupElement w = ctx.identity();
        for (int i = 0; i < ctx.n(); ++i)
          w.kappa[i] = static_cast<long long>(rng() % 5) - 2;
        ++coset_checks;
        if (mul(ctx, y, w).alpha != y.alpha) coset_ok = false;
      }
    }
  }
  rep.add("coset_checks", coset_checks);
  rep.add("cosets_disjoint", coset_ok);
  bool ok = split_bad == 0 && coset_ok;
  rep.add("pass", ok);
  emit(rep, opt);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_check_b(const SolutionFile& file, const Options& opt) {
  GroupContext ctx = GroupContext::make(file.solution);
  FiniteBraidedGroup q = quotient(ctx);
  PermGroup pg = permutation_group(ctx.solution());
  BraidedAxiomsReport ax = check_braided_axioms(q);
  EpimorphismReport epi = quotient_epimorphism_check(q, pg);

  long long pn = 1;
  for (int i = 0; i < ctx.n(); ++i) pn *= ctx.p();
  std::set<int> letter_images;
  for (int i = 0; i < ctx.n(); ++i)
    letter_images.insert(q.index_of(reduce_word(ctx, {{i, 1}}).alpha));
  bool embeds = static_cast<int>(letter_images.size()) == ctx.n();

  Report rep;
  add_header(rep, file);
  rep.add("theorem", "B");
  rep.add("p", ctx.p());
  rep.add("quotient_order", q.order());
  rep.add("order_is_p_to_n", q.order() == pn);
  add_axioms(rep, ax);
  rep.add("x_embeds", embeds);
  rep.add("pgroup_order", pg.order());
  rep.add("pgroup_order_divides", epi.order_divides);
  rep.add("epimorphism", epi.is_homomorphism && epi.surjective);
  rep.add("kernel_size", epi.kernel_size);
  if (epi.p_prime) rep.add("pgroup_is_p_group", epi.image_order_p_power);
  bool ok = q.order() == pn && ax.ok() && embeds && epi.ok();
  rep.add("pass", ok);
  emit(rep, opt);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_check_c(const SolutionFile& file, unsigned long long seed,
                const Options& opt) {
  GroupContext ctx = GroupContext::make(file.solution);
  const FieldDesc rational = FieldDesc::rational();
  Report rep;
  add_header(rep, file);
  rep.add("theorem", "C");
  rep.add("p", ctx.p());

  // Freeness: products of basis elements decompose onto a single basis
  // element with a unit monomial coefficient.
  FiniteBraidedGroup q = quotient(ctx);
  long long basis_checks = 0;
  bool basis_ok = true;
  for (int i = 0; i < q.order() && basis_ok; ++i)
    for (int j = 0; j < q.order(); ++j) {
      GroupElement y{q.element(i), std::vector<long long>(ctx.n(), 0)};
      GroupElement z{q.element(j), std::vector<long long>(ctx.n(), 0)};
      AlgebraElement prod = algebra_mul(
          ctx, AlgebraElement::term(rational, y, Scalar::one(rational)),
          AlgebraElement::term(rational, z, Scalar::one(rational)));
      auto dec = decompose(ctx, prod, Side::right);
      ++basis_checks;
      if (dec.size() != 1 || dec.begin()->second.support_size() != 1 ||
          !(dec.begin()->second.terms().begin()->second ==
            Scalar::one(rational))) {
        basis_ok = false;
        break;
      }
    }
  rep.add("basis_pairs_checked", basis_checks);
  rep.add("free_module_basis", basis_ok);

  // Roundtrip of decompose/recompose on seeded random elements, both sides.
  std::mt19937_64 rng(seed);
  bool roundtrip_ok = true;
  for (int t = 0; t < 100; ++t) {
    AlgebraElement a(rational);
    for (int term = 0; term < 5; ++term) {
      GroupElement g = ctx.identity();
      for (int i = 0; i < ctx.n(); ++i) {
        g.alpha[i] = static_cast<int>(rng() % ctx.p());
        g.kappa[i] = static_cast<long long>(rng() % 7) - 3;
      }
      a.add_term(g, Scalar::from_int(rational,
                                     static_cast<long long>(rng() % 9) - 4));
    }
    for (Side side : {Side::right, Side::left})
      if (!(recompose(ctx, decompose(ctx, a, side), side, rational) == a))
        roundtrip_ok = false;
  }
  rep.add("decompose_roundtrip", roundtrip_ok);

  // Centrality of the power sums over the rationals and over F_5.
  bool central_ok = true;
  for (FieldDesc f : {rational, FieldDesc::prime(5)})
    for (int k = 1; k <= ctx.n(); ++k) {
      CentralityReport c = is_central_on_generators(ctx, power_sum(ctx, k, f));
      if (!c.central) central_ok = false;
    }
  rep.add("power_sums_central", central_ok);

  bool ok = basis_ok && roundtrip_ok && central_ok;
  rep.add("pass", ok);
  emit(rep, opt);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_enumerate(int n, bool up_to_iso, const Options& opt) {
  auto list = enumerate_square_free(n, up_to_iso);
  Report rep;
  rep.add("n", n);
  rep.add("up_to_iso", up_to_iso);
  rep.add("count", static_cast<long long>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i)
    rep.add("solution_" + std::to_string(i), solution_to_json(list[i]));
  emit(rep, opt);
  return kExitPass;
}

FieldDesc parse_field(const std::string& text) {
  if (text == "rational") return FieldDesc::rational();
  if (text.rfind("p:", 0) == 0) {
    unsigned q = 0;
    try {
      q = static_cast<unsigned>(std::stoul(text.substr(2)));
    } catch (const std::exception&) {
      throw ParseError("bad field \"" + text + "\"");
    }
    return FieldDesc::prime(q);
  }
  throw ParseError("bad field \"" + text +
                   "\" (expected rational or p:<q>)");
}

int cmd_algebra(const std::string& path, bool center_check,
                const std::string& field_text, const Options& opt) {
  SolutionFile file = load_solution_file(path);
  GroupContext ctx = GroupContext::make(file.solution);
  FieldDesc f = parse_field(field_text);
  Report rep;
  add_header(rep, file);
  rep.add("field", f.str());
  bool ok = true;
  if (center_check) {
    for (int k = 1; k <= ctx.n(); ++k) {
      CentralityReport c = is_central_on_generators(ctx, power_sum(ctx, k, f));
      rep.add("s" + std::to_string(k) + "_central", c.central);
      if (!c.central) {
        ok = false;
        rep.add("s" + std::to_string(k) + "_witness",
                "x" + std::to_string(c.witness->letter + 1) +
                    (c.witness->exp < 0 ? "^-1" : ""));
      }
    }
  }
  rep.add("pass", ok);
  emit(rep, opt);
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for square-free set-theoretic solutions of the "
               "Yang-Baxter equation"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit the report as JSON");

  std::string path, word_text, table_out, theorem, field_text = "rational";
  int len_bound = 3, enum_n = 0;
  unsigned long long seed = 1;
  bool check_axioms = false, up_to_iso = false, center_check = false;

  auto* validate_cmd = app.add_subcommand("validate", "check all axioms");
  validate_cmd->add_option("file", path)->required();

  auto* degree_cmd = app.add_subcommand("degree", "print the cyclic degree");
  degree_cmd->add_option("file", path)->required();

  auto* order_cmd =
      app.add_subcommand("order", "find a good enumeration of the letters");
  order_cmd->add_option("file", path)->required();

  auto* reduce_cmd =
      app.add_subcommand("reduce", "normal form of a word in the group");
  reduce_cmd->add_option("file", path)->required();
  reduce_cmd->add_option("--word", word_text, "e.g. \"x3 x1^-2\"")->required();

  auto* quotient_cmd =
      app.add_subcommand("quotient", "build the finite quotient group");
  quotient_cmd->add_option("file", path)->required();
  quotient_cmd->add_option("--table", table_out, "write the mul table as CSV");
  quotient_cmd->add_flag("--check-axioms", check_axioms,
                         "exhaustively check the braided-group axioms");

  auto* pgroup_cmd =
      app.add_subcommand("pgroup", "the permutation group of left actions");
  pgroup_cmd->add_option("file", path)->required();

  auto* check_cmd = app.add_subcommand("check", "run a theorem suite");
  check_cmd->add_option("file", path)->required();
  check_cmd->add_option("--theorem", theorem, "A, B, or C")->required();
  check_cmd->add_option("--len-bound", len_bound, "word length bound");
  check_cmd->add_option("--seed", seed, "seed for sampled checks");

  auto* enum_cmd =
      app.add_subcommand("enumerate", "list square-free solutions");
  enum_cmd->add_option("--n", enum_n, "order")->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso);

  auto* algebra_cmd = app.add_subcommand("algebra", "group-algebra checks");
  algebra_cmd->add_option("file", path)->required();
  algebra_cmd->add_flag("--center-check", center_check,
                        "verify the power sums are central");
  algebra_cmd->add_option("--field", field_text, "rational or p:<q>");

  for (auto* sub : {validate_cmd, degree_cmd, order_cmd, reduce_cmd,
                    quotient_cmd, pgroup_cmd, check_cmd, enum_cmd, algebra_cmd})
    sub->add_flag("--json", opt.json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, opt);
    if (degree_cmd->parsed()) return cmd_degree(path, opt);
    if (order_cmd->parsed()) return cmd_order(path, opt);
    if (reduce_cmd->parsed()) return cmd_reduce(path, word_text, opt);
    if (quotient_cmd->parsed())
      return cmd_quotient(path, table_out, check_axioms, opt);
    if (pgroup_cmd->parsed()) return cmd_pgroup(path, opt);
    if (check_cmd->parsed()) {
      SolutionFile file = load_solution_file(path);
      if (theorem == "A") return cmd_check_a(file, len_bound, seed, opt);
      if (theorem == "B") return cmd_check_b(file, opt);
      if (theorem == "C") return cmd_check_c(file, seed, opt);
      std::cerr << "error: unknown theorem \"" << theorem << "\"\n";
      return kExitUsage;
    }
    if (enum_cmd->parsed()) return cmd_enumerate(enum_n, up_to_iso, opt);
    if (algebra_cmd->parsed())
      return cmd_algebra(path, center_check, field_text, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
