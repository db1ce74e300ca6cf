#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "ybe/pbw.hpp"

using namespace ybe;

namespace {

Enumeration identity_enum(int n) { return Enumeration{identity_perm(n)}; }

Word nf_as_word(const MonoidNF& nf) {
  Word w;
  for (std::size_t i = 0; i < nf.gamma.size(); ++i)
    for (long long c = 0; c < nf.gamma[i]; ++c) w.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

TEST_CASE("relations_of the trivial solution commutes everything") {
  RewriteSystem rs = relations_of(trivial_solution(3), identity_enum(3));
  for (int j = 1; j < 3; ++j)
    for (int i = 0; i < j; ++i)
      CHECK(rs.image(j, i) == std::pair<int, int>{i, j});
  CHECK(rs.cond_a);
  CHECK(rs.cond_b);
  CHECK(rs.cond_c);
}

TEST_CASE("relations_of SF4 matches the table evaluation") {
  RewriteSystem rs = relations_of(oracle::sf4(), identity_enum(4));
  // 0-based reducts of the six descents
  CHECK(rs.image(1, 0) == std::pair<int, int>{0, 1});  // x2x1 -> x1x2
  CHECK(rs.image(2, 0) == std::pair<int, int>{1, 3});  // x3x1 -> x2x4
  CHECK(rs.image(3, 0) == std::pair<int, int>{1, 2});  // x4x1 -> x2x3
  CHECK(rs.image(2, 1) == std::pair<int, int>{0, 3});  // x3x2 -> x1x4
  CHECK(rs.image(3, 1) == std::pair<int, int>{0, 2});  // x4x2 -> x1x3
  CHECK(rs.image(3, 2) == std::pair<int, int>{2, 3});  // x4x3 -> x3x4
  CHECK(rs.cond_a);
  CHECK(rs.cond_b);
  CHECK(rs.cond_c);
}

TEST_CASE("find_good_enumeration") {
  CHECK(is_identity_perm(find_good_enumeration(trivial_solution(4)).perm));
  CHECK(is_identity_perm(find_good_enumeration(oracle::sf4()).perm));
  Solution bad = Solution::from_left_action(2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(find_good_enumeration(bad), std::invalid_argument);
  CHECK_THROWS_AS(find_good_enumeration(trivial_solution(3), 2),
                  std::invalid_argument);
}

TEST_CASE("good enumerations exist for every enumerated solution") {
  for (int n = 1; n <= 4; ++n)
    for (const Solution& s : enumerate_square_free(n, true)) {
      Enumeration e = find_good_enumeration(s);
      RewriteSystem rs = relations_of(s, e);
      CHECK(rs.pbw());
    }
}

TEST_CASE("normal_form_monoid on SF4") {
  RewriteSystem rs = relations_of(oracle::sf4(), identity_enum(4));
  CHECK(normal_form_monoid(rs, Word{1, 0}).gamma ==
        std::vector<long long>{1, 1, 0, 0});
  CHECK(normal_form_monoid(rs, Word{2, 0}).gamma ==
        std::vector<long long>{0, 1, 0, 1});
  // an already ordered word is untouched
  CHECK(normal_form_monoid(rs, Word{0, 0, 2, 3}).gamma ==
        std::vector<long long>{2, 0, 1, 1});
  CHECK(normal_form_monoid(rs, SignedWord{{1, 2}}).gamma ==
        std::vector<long long>{0, 2, 0, 0});
  CHECK_THROWS_AS(normal_form_monoid(rs, SignedWord{{0, -1}}),
                  std::invalid_argument);
}

TEST_CASE("normal form is a congruence: nf(uv) = nf(nf(u) nf(v))") {
  Solution s = oracle::three_cycle4();
  RewriteSystem rs = relations_of(s, identity_enum(4));
  std::vector<Word> words = {{3, 2, 1}, {2, 3, 0, 1}, {3, 3, 2}, {1, 0}, {}};
  for (const Word& u : words)
    for (const Word& v : words) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Word glued = nf_as_word(normal_form_monoid(rs, u));
      Word vnf = nf_as_word(normal_form_monoid(rs, v));
      glued.insert(glued.end(), vnf.begin(), vnf.end());
      CHECK(normal_form_monoid(rs, uv) == normal_form_monoid(rs, glued));
    }
}

TEST_CASE("rewriting agrees with the congruence-closure oracle") {
  // words of length 4 on the order-3 solutions; the acceptance suite runs
  // the full bound
  for (const Solution& s : enumerate_square_free(3, true)) {
    Enumeration e = find_good_enumeration(s);
    Solution pos = relabel(s, e.perm);
    RewriteSystem rs = relations_of(pos, identity_enum(3));
    auto classes = oracle::monoid_classes(pos, 4);
    std::map<int, MonoidNF> class_nf;
    for (const auto& [w, cls] : classes) {
      MonoidNF nf = normal_form_monoid(rs, w);
      CHECK(classes.at(nf_as_word(nf)) == cls);  // nf stays in the class
      auto [it, inserted] = class_nf.emplace(cls, nf);
      if (!inserted) CHECK(it->second == nf);  // one nf per class
    }
  }
}

TEST_CASE("rewrite steps strictly descend, so long words terminate") {
  RewriteSystem rs = relations_of(oracle::sf4(), identity_enum(4));
  Word worst;
  for (int i = 0; i < 40; ++i) worst.push_back(3 - (i % 4));
  Word nf = normal_form_word(rs, worst);
  CHECK(std::is_sorted(nf.begin(), nf.end()));
  CHECK(nf.size() == worst.size());  // relations preserve degree
}

TEST_CASE("Y has p^n ordered monomials below the cyclic degree") {
  int p = 3, n = 4;
  long long count = 0;
  std::vector<int> gamma(n, 0);
  for (bool done = false; !done;) {
    ++count;
    int i = n - 1;
    while (i >= 0 && ++gamma[i] == p) gamma[i--] = 0;
    done = i < 0;
  }
  CHECK(count == 81);
}

TEST_CASE("solution_from_rewrite_system") {
  SUBCASE("free abelian rules give the trivial solution") {
    RewriteSystem rs(3);
    for (int j = 1; j < 3; ++j)
      for (int i = 0; i < j; ++i) rs.set_image(j, i, {i, j});
    rs.cond_a = rs.cond_b = rs.cond_c = true;
    CHECK(solution_from_rewrite_system(rs) == trivial_solution(3));
  }
  SUBCASE("roundtrip through relations_of") {
    for (int n = 2; n <= 4; ++n)
      for (const Solution& s : enumerate_square_free(n, true)) {
        Enumeration e = find_good_enumeration(s);
        Solution pos = relabel(s, e.perm);
        CHECK(solution_from_rewrite_system(relations_of(s, e)) == pos);
      }
  }
  SUBCASE("flag violations are rejected") {
    RewriteSystem rs(2);
    rs.set_image(1, 0, {1, 0});
    CHECK_THROWS_AS(solution_from_rewrite_system(rs), std::invalid_argument);
  }
}
