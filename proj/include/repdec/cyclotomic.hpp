#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repdec/rational.hpp"

namespace repdec {

// Exact element of the cyclotomic field Q(zeta_n), zeta_n = exp(2*pi*i/n).
//
// Storage is a sparse list of (exponent, coefficient) pairs over a fixed
// canonical basis of Q(zeta_n). The basis is the tensor product, over the
// prime powers p^v dividing n, of per-component bases of Q(zeta_{p^v}):
//
//   p odd : { zeta_{p^v}^b : p^{v-1} <= b < p^v }
//   p = 2 : { zeta_{p^v}^b : 0 <= b < 2^{v-1} }   (b = 0 only when v = 1)
//
// An exponent j in [0, n) is a basis exponent when every prime component of
// j (the exponent of zeta_{p^v} in the factorisation zeta_n^j =
// prod_p zeta_{p^v}^{b_p}) lies in the set above. Violations are rewritten
// with the relation sum_{k=0}^{p-1} zeta_{p^v}^{b + k p^{v-1}} = 0, which is
// local to one prime component. Within a fixed order, equality of field
// elements is therefore equality of the stored data.
//
// The declared order is never lowered by arithmetic; reduced() computes the
// conductor form and is applied at module boundaries.
class Cyclotomic {
public:
  using Term = std::pair<long, Rational>;
  using Terms = std::vector<Term>;

  Cyclotomic() : n_(1) {}
  explicit Cyclotomic(const Rational& r) : n_(1) {
    if (!r.is_zero()) c_.emplace_back(0, r);
  }
  explicit Cyclotomic(long k) : Cyclotomic(Rational(k)) {}

  // Canonicalises arbitrary (exponent, coefficient) pairs at the given order.
  // Exponents are taken mod n; n = 0 is rejected.
  Cyclotomic(long order, Terms raw_terms);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  // zeta_n^k
  static Cyclotomic root_of_unity(long n, long k);

  long order() const { return n_; }
  const Terms& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(const Rational& r) const;

  // Multiplicative inverse; throws on zero. Found through the minimal
  // polynomial of the element over Q, so the cost scales with the degree of
  // the subfield the element actually generates.
  Cyclotomic inverse() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  // Complex conjugation: zeta_n^k -> zeta_n^{n-k}, extended Q-linearly.
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  // Field-element equality (operands of different orders are compared in the
  // common field).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Rewrites into Q(zeta_m) for the smallest m dividing the order (the
  // conductor of the element, with m never congruent to 2 mod 4).
  Cyclotomic reduced() const;
  // Same element in Q(zeta_m) for a multiple m of the current order.
  Cyclotomic embedded(long m) const;

  std::optional<Rational> rational_value() const;
  bool is_real() const { return *this == conj(); }

  std::complex<double> evalf() const;
  std::string str() const;
  // Hash of the conductor form; equal field elements hash equally.
  std::size_t hash() const;

private:
  long n_;
  Terms c_;  // sorted by exponent, canonical basis only, no zero coefficients

  friend struct CycloInternals;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

// Exact positive square root of a positive rational, as an element of a
// cyclotomic field (via quadratic Gauss sums over the odd prime factors and
// zeta_8 for the factor 2). Rejects r <= 0 and radicands whose squarefree
// part cannot be factored by trial division + primality testing.
Cyclotomic sqrt_rational(const Rational& r);

}  // namespace repdec
