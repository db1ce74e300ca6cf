#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/braided_group.hpp"

namespace ybe {

/// Identifies the coefficient field: the rationals, or the prime field of a
/// given characteristic.
struct FieldDesc {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  unsigned q = 0;

  static FieldDesc rational() { return {}; }
  static FieldDesc prime(unsigned q);  // throws unless q is a prime

  bool operator==(const FieldDesc&) const = default;
  std::string str() const;
};

/// An exact field scalar: an arbitrary-precision rational or a residue mod a
/// prime.  Mixed-field arithmetic throws std::invalid_argument.
class Scalar {
 public:
  Scalar() : Scalar(FieldDesc::rational()) {}
  explicit Scalar(FieldDesc f) : f_(f) {}

  static Scalar zero(FieldDesc f) { return Scalar(f); }
  static Scalar one(FieldDesc f) { return from_int(f, 1); }
  static Scalar from_int(FieldDesc f, long long v);
  static Scalar rational(long long num, long long den);

  const FieldDesc& field() const { return f_; }
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  FieldDesc f_;
  mpq_class rat_ = 0;
  unsigned long res_ = 0;
};

/// An element of k[F_p]: a finite-support map from κ-vectors in Z^n to
/// scalars, where κ stands for the monomial x_1^{pκ_1} ... x_n^{pκ_n}.
/// Multiplication adds exponent vectors (F_p is free abelian).
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldDesc f) : f_(f) {}

  static LaurentPoly monomial(FieldDesc f, std::vector<long long> kappa,
                              const Scalar& c);

  const FieldDesc& field() const { return f_; }
  const std::map<std::vector<long long>, Scalar>& terms() const {
    return terms_;
  }

  /// Adds c at kappa, coalescing and dropping zero coefficients.
  void add_term(const std::vector<long long>& kappa, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  bool operator==(const LaurentPoly& o) const;

 private:
  FieldDesc f_;
  std::map<std::vector<long long>, Scalar> terms_;
};

/// True iff the polynomial is invariant under the n-1 adjacent
/// transpositions of κ-positions (hence under all of Sym(n)).
bool is_symmetric(const LaurentPoly& f);

/// An element of the group algebra k[G]: a finite-support map from group
/// elements to scalars.  Zero coefficients are never stored; equality is
/// support-and-coefficient equality.
class AlgebraElement {
 public:
  explicit AlgebraElement(FieldDesc f) : f_(f) {}

  static AlgebraElement term(FieldDesc f, const GroupElement& g,
                             const Scalar& c);

  const FieldDesc& field() const { return f_; }
  const std::map<GroupElement, Scalar, GroupElementLess>& terms() const {
    return terms_;
  }

  void add_term(const GroupElement& g, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  bool operator==(const AlgebraElement& o) const;

 private:
  FieldDesc f_;
  std::map<GroupElement, Scalar, GroupElementLess> terms_;
};

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& a);
AlgebraElement algebra_mul(const GroupContext& ctx, const AlgebraElement& a,
                           const AlgebraElement& b);

/// The unit element 1·e of k[G].
AlgebraElement algebra_one(const GroupContext& ctx, FieldDesc f);

/// Embeds k[F_p] into k[G] (alpha = 0 on every term).
AlgebraElement from_laurent(const GroupContext& ctx, const LaurentPoly& f);

/// True iff every term has κ ≥ 0 componentwise, i.e. the element lies in
/// the image of the monoid algebra kS inside k[G].
bool has_positive_support(const AlgebraElement& a);

/// Splits a along the free k[F_p]-basis Y.  Side::right collects
/// a = Σ_y y·f_y keyed by the alpha vector y; Side::left produces
/// a = Σ_y f'_y·y where f'_y is f_y with κ-positions permuted by the left
/// action of y on X.
std::map<std::vector<int>, LaurentPoly> decompose(const GroupContext& ctx,
                                                  const AlgebraElement& a,
                                                  Side side);

/// Inverse of decompose on its image (exact roundtrip, both sides).
AlgebraElement recompose(const GroupContext& ctx,
                         const std::map<std::vector<int>, LaurentPoly>& coeffs,
                         Side side, FieldDesc f);

/// The power sum s_k = Σ_i x_i^{kp} as an algebra element.
AlgebraElement power_sum(const GroupContext& ctx, int k, FieldDesc f);

struct CentralityReport {
  bool central = false;
  long long checks = 0;
  /// First generator (x_i or x_i⁻¹) failing to commute, when not central.
  std::optional<SignedLetter> witness;
};

/// Checks a·g = g·a for g over all x_i and x_i⁻¹; since X ∪ X⁻¹ generates
/// G, success certifies centrality in k[G].
CentralityReport is_central_on_generators(const GroupContext& ctx,
                                          const AlgebraElement& a);

struct ZeroDivisorReport {
  long long trials = 0;
  long long violations = 0;

  bool ok() const { return violations == 0; }
};

/// Multiplies seeded pseudo-random pairs of nonzero elements (support ≤ 4,
/// coefficients in {-2..2}) and reports any zero product.  A violation is a
/// fatal arithmetic bug, never expected behavior.
ZeroDivisorReport zero_divisor_probe(const GroupContext& ctx,
                                     unsigned long long seed, int trials,
                                     FieldDesc f = FieldDesc::rational());

}  // namespace ybe
