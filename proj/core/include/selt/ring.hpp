#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selt/partition.hpp"

// The Z[z]-algebra Z[z, c_1, c_2, ...] / (c_{p,p} : p >= 1), graded by
// deg z = 1 and deg c_i = i, and its basis of Pfaffians sigma_lambda.

namespace selt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// z^z * c_{c[0]} c_{c[1]} ..., with c sorted ascending and every index >= 1.
struct Monomial {
  int z = 0;
  std::vector<int> c;

  int degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// An element of the free ring Z[z, c_1, c_2, ...].
class RingElement {
 public:
  RingElement() = default;

  static RingElement constant(const Integer& v);
  static RingElement z_power(int k);
  /// c_i, with c_0 = 1.
  static RingElement c(int i);
  static RingElement monomial(Monomial m, const Integer& coeff = 1);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;

  /// Adds coeff * m, dropping the term if it cancels.
  void add(const Monomial& m, const Integer& coeff);

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Integer& k) const;
  RingElement& operator+=(const RingElement& o);
  bool operator==(const RingElement&) const = default;

  /// e.g. "c_1^2 - 2*c_2 - z*c_1"; "0" for zero.
  std::string to_string() const;

 private:
  std::map<Monomial, Integer> terms_;
};

/// c_{p,q} = sum over 0 <= a <= b <= q of
/// (-1)^b (binom(b,a) + binom(b-1,a)) z^a c_{p+b-a} c_{q-b}, in the free ring.
RingElement c_pq(int p, int q);

/// Pfaffian of (c_{lambda_i, lambda_j}), padding odd lengths with a 0 part.
RingElement sigma(const StrictPartition& lambda);

/// Reduces x modulo the relations c_{p,p} = 0 by rewriting c_p^2 into the
/// remaining terms of c_{p,p}. The result has squarefree c-parts, so every
/// term is z^k c_nu with nu strict.
RingElement normal_form(const RingElement& x);

/// A polynomial in z with integer coefficients.
class ZPolynomial {
 public:
  ZPolynomial() = default;
  static ZPolynomial monomial(const Integer& coeff, int power);

  const std::map<int, Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add(int power, const Integer& coeff);
  /// (e, k) when the polynomial is e * z^k with e != 0.
  std::optional<std::pair<Integer, int>> as_monomial() const;

  bool operator==(const ZPolynomial&) const = default;
  /// e.g. "2", "z", "3*z^2", "z + 2"; "0" for zero.
  std::string to_string() const;

 private:
  std::map<int, Integer> coeffs_;
};

/// x = sum over nu of f_nu(z) sigma_nu. lambda and mu are set when the
/// expansion is of sigma_lambda * sigma_mu.
struct SigmaExpansion {
  StrictPartition lambda;
  StrictPartition mu;
  int degree = 0;
  std::map<StrictPartition, ZPolynomial> terms;

  /// Zero when nu is absent.
  ZPolynomial coefficient(const StrictPartition& nu) const;
};

enum class SolveMethod {
  /// Linear system for degree <= kLinearSystemMaxDegree, normal form above.
  kAuto,
  /// Exact rational elimination in the graded slice of the free ring.
  kLinearSystem,
  /// Normal form followed by triangular back-substitution.
  kNormalForm,
};

inline constexpr int kLinearSystemMaxDegree = 8;

/// The unique f_nu(z) with x = sum f_nu(z) sigma_nu modulo the relations.
/// Throws HomogeneityError unless every term of x has degree d, and
/// SolveError if the basis solve is inconsistent, not unique, or
/// non-integral.
SigmaExpansion expand_in_sigma_basis(const RingElement& x, int degree,
                                     SolveMethod method = SolveMethod::kAuto);

/// sigma_lambda * sigma_mu in the sigma basis, memoized per thread.
const SigmaExpansion& product_expansion(const StrictPartition& lambda, const StrictPartition& mu,
                                        SolveMethod method = SolveMethod::kAuto);

/// The coefficient of sigma_nu in sigma_lambda * sigma_mu.
ZPolynomial frak_D(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu, SolveMethod method = SolveMethod::kAuto);

/// frak_D / (2^{L - Delta} z^Delta) with Delta = |lambda|+|mu|-|nu| and
/// L = l(lambda)+l(mu)-l(nu). A negative L - Delta multiplies by
/// 2^{Delta - L}. Throws FormError unless frak_D is zero or e * z^Delta and
/// the result is nonnegative, and DivisibilityError if 2^{L - Delta} does not
/// divide e.
Integer frak_d(const StrictPartition& lambda, const StrictPartition& mu,
               const StrictPartition& nu, SolveMethod method = SolveMethod::kAuto);

}  // namespace selt
