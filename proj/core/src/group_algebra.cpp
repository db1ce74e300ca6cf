#include "ybe/group_algebra.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace ybe {

namespace {

bool small_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

unsigned long mod_pow(unsigned long base, unsigned long e, unsigned long q) {
  unsigned long r = 1;
  base %= q;
  while (e) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldDesc FieldDesc::prime(unsigned q) {
  if (!small_prime(q))
    throw std::invalid_argument("prime field characteristic must be prime");
  return {Kind::prime, q};
}

std::string FieldDesc::str() const {
  return kind == Kind::rational ? "rational" : "p:" + std::to_string(q);
}

Scalar Scalar::from_int(FieldDesc f, long long v) {
  Scalar s(f);
  if (f.kind == FieldDesc::Kind::rational) {
    s.rat_ = static_cast<long>(v);
  } else {
    long long r = v % static_cast<long long>(f.q);
    if (r < 0) r += f.q;
    s.res_ = static_cast<unsigned long>(r);
  }
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(FieldDesc::rational());
  s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.rat_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return f_.kind == FieldDesc::Kind::rational ? rat_ == 0 : res_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.kind == FieldDesc::Kind::rational)
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % f_.q;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.kind == FieldDesc::Kind::rational)
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = (res_ + f_.q - o.res_) % f_.q;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.kind == FieldDesc::Kind::rational)
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = res_ * o.res_ % f_.q;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.kind == FieldDesc::Kind::rational)
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : f_.q - res_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  Scalar s(f_);
  if (f_.kind == FieldDesc::Kind::rational)
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_pow(res_, f_.q - 2, f_.q);  // Fermat
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.kind == FieldDesc::Kind::rational ? rat_ == o.rat_
                                              : res_ == o.res_;
}

std::string Scalar::str() const {
  if (f_.kind == FieldDesc::Kind::rational) return rat_.get_str();
  return std::to_string(res_);
}

LaurentPoly LaurentPoly::monomial(FieldDesc f, std::vector<long long> kappa,
                                  const Scalar& c) {
  LaurentPoly out(f);
  out.add_term(kappa, c);
  return out;
}

void LaurentPoly::add_term(const std::vector<long long>& kappa,
                           const Scalar& c) {
  if (!(c.field() == f_)) throw std::invalid_argument("scalar field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(kappa, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [kappa, c] : o.terms_) out.add_term(kappa, c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(f_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      std::vector<long long> k(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
      out.add_term(k, ca * cb);
    }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return f_ == o.f_ && terms_ == o.terms_;
}

bool is_symmetric(const LaurentPoly& f) {
  // Adjacent transpositions generate Sym(n), so swapping each neighboring
  // pair of kappa positions and comparing term maps settles symmetry.
  for (const auto& [kappa, c] : f.terms()) {
    for (std::size_t i = 0; i + 1 < kappa.size(); ++i) {
      std::vector<long long> swapped = kappa;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = f.terms().find(swapped);
      if (it == f.terms().end() || !(it->second == c)) return false;
    }
  }
  return true;
}

AlgebraElement AlgebraElement::term(FieldDesc f, const GroupElement& g,
                                    const Scalar& c) {
  AlgebraElement out(f);
  out.add_term(g, c);
  return out;
}

void AlgebraElement::add_term(const GroupElement& g, const Scalar& c) {
  if (!(c.field() == f_)) throw std::invalid_argument("scalar field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return f_ == o.f_ && terms_ == o.terms_;
}

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("algebra field mismatch");
  AlgebraElement out = a;
  for (const auto& [g, c] : b.terms()) out.add_term(g, c);
  return out;
}

AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out(a.field());
  for (const auto& [g, coeff] : a.terms()) out.add_term(g, c * coeff);
  return out;
}

AlgebraElement algebra_mul(const GroupContext& ctx, const AlgebraElement& a,
                           const AlgebraElement& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("algebra field mismatch");
  AlgebraElement out(a.field());
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms())
      out.add_term(mul(ctx, g, h), cg * ch);
  return out;
}

AlgebraElement algebra_one(const GroupContext& ctx, FieldDesc f) {
  return AlgebraElement::term(f, ctx.identity(), Scalar::one(f));
}

AlgebraElement from_laurent(const GroupContext& ctx, const LaurentPoly& f) {
  AlgebraElement out(f.field());
  for (const auto& [kappa, c] : f.terms()) {
    GroupElement g = ctx.identity();
    g.kappa = kappa;
    out.add_term(g, c);
  }
  return out;
}

bool has_positive_support(const AlgebraElement& a) {
  for (const auto& [g, c] : a.terms())
    for (long long k : g.kappa)
      if (k < 0) return false;
  return true;
}

std::map<std::vector<int>, LaurentPoly> decompose(const GroupContext& ctx,
                                                  const AlgebraElement& a,
                                                  Side side) {
  std::map<std::vector<int>, LaurentPoly> out;
  for (const auto& [g, c] : a.terms()) {
    std::vector<long long> kappa = g.kappa;
    if (side == Side::left) {
      // y·W = (ʸW)·y, and ʸ(x_i^p) = (ʸx_i)^p, so the left coefficient is
      // kappa pushed forward along the left action of y on the positions.
      SignedWord y_word;
      for (int i = 0; i < ctx.n(); ++i)
        if (g.alpha[i] != 0) y_word.push_back({i, g.alpha[i]});
      Perm sigma = left_action_perm(ctx.solution(), y_word);
      std::vector<long long> moved(kappa.size(), 0);
      for (std::size_t i = 0; i < kappa.size(); ++i)
        moved[sigma[i]] = kappa[i];
      kappa = std::move(moved);
    }
    auto [it, inserted] =
        out.try_emplace(g.alpha, LaurentPoly(a.field()));
    it->second.add_term(kappa, c);
  }
  return out;
}

AlgebraElement recompose(const GroupContext& ctx,
                         const std::map<std::vector<int>, LaurentPoly>& coeffs,
                         Side side, FieldDesc f) {
  AlgebraElement out(f);
  for (const auto& [alpha, poly] : coeffs) {
    Perm sigma;
    if (side == Side::left) {
      SignedWord y_word;
      for (int i = 0; i < ctx.n(); ++i)
        if (alpha[i] != 0) y_word.push_back({i, alpha[i]});
      sigma = left_action_perm(ctx.solution(), y_word);
    }
    for (const auto& [kappa, c] : poly.terms()) {
      GroupElement g{alpha, kappa};
      if (side == Side::left)
        for (std::size_t i = 0; i < kappa.size(); ++i)
          g.kappa[i] = kappa[sigma[i]];
      out.add_term(g, c);
    }
  }
  return out;
}

AlgebraElement power_sum(const GroupContext& ctx, int k, FieldDesc f) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
  AlgebraElement out(f);
  for (int i = 0; i < ctx.n(); ++i)
    out.add_term(ctx.fp_generator(i, k), Scalar::one(f));
  return out;
}

CentralityReport is_central_on_generators(const GroupContext& ctx,
                                          const AlgebraElement& a) {
  CentralityReport rep;
  rep.central = true;
  for (int i = 0; i < ctx.n() && rep.central; ++i)
    for (int sgn : {1, -1}) {
      GroupElement gen = sgn > 0 ? ctx.letter(i) : inv(ctx, ctx.letter(i));
      AlgebraElement g =
          AlgebraElement::term(a.field(), gen, Scalar::one(a.field()));
      ++rep.checks;
      if (!(algebra_mul(ctx, a, g) == algebra_mul(ctx, g, a))) {
        rep.central = false;
        rep.witness = SignedLetter{i, sgn};
        break;
      }
    }
  return rep;
}

ZeroDivisorReport zero_divisor_probe(const GroupContext& ctx,
                                     unsigned long long seed, int trials,
                                     FieldDesc f) {
  if (trials < 1)
    throw std::invalid_argument("zero_divisor_probe: trials must be positive");
  ZeroDivisorReport rep;
  std::mt19937_64 rng(seed);
  // Explicit modulo keeps the trial stream identical across standard
  // libraries.
  auto rand_int = [&rng](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() %
                                       static_cast<unsigned long long>(
                                           hi - lo + 1));
  };
  auto random_element = [&]() {
    AlgebraElement e(f);
    while (e.is_zero()) {
      int support = static_cast<int>(rand_int(1, 4));
      for (int t = 0; t < support; ++t) {
        GroupElement g = ctx.identity();
        for (int i = 0; i < ctx.n(); ++i) {
          g.alpha[i] = static_cast<int>(rand_int(0, ctx.p() - 1));
          g.kappa[i] = rand_int(-2, 2);
        }
        long long c = rand_int(-2, 2);
        if (c == 0) c = 1;
        e.add_term(g, Scalar::from_int(f, c));
      }
    }
    return e;
  };
  for (int t = 0; t < trials; ++t) {
    AlgebraElement a = random_element();
    AlgebraElement b = random_element();
    ++rep.trials;
    if (algebra_mul(ctx, a, b).is_zero()) ++rep.violations;
  }
  return rep;
}

}  // namespace ybe
