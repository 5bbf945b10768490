#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "repdec/cyclotomic.hpp"

using repdec::Cyclotomic;
using repdec::Rational;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Random sparse element with small rational coefficients, deterministic.
Cyclotomic random_cyclotomic(std::mt19937_64& rng, long max_order = 24) {
  static const long orders[] = {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24};
  std::uniform_int_distribution<int> oi(0, 12);
  long n = orders[oi(rng)];
  while (n > max_order) n = orders[oi(rng)];
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<long> expd(0, n - 1);
  std::uniform_int_distribution<long> numd(-6, 6);
  std::uniform_int_distribution<long> dend(1, 4);
  Cyclotomic::Terms terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) terms.emplace_back(expd(rng), Rational(numd(rng), dend(rng)));
  return Cyclotomic(n, terms);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace

TEST_CASE("canonicalize examples") {
  // Sum of all cube roots of unity vanishes.
  Cyclotomic a(3, {{0, 1}, {1, 1}, {2, 1}});
  CHECK(a.is_zero());

  // zeta_4^2 = -1, a rational element.
  Cyclotomic b(4, {{2, 1}});
  CHECK(b == Cyclotomic(Rational(-1)));
  CHECK(b.rational_value().value() == Rational(-1));

  // Sum of all 5th roots vanishes.
  Cyclotomic c(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(c.is_zero());

  CHECK_THROWS_AS(Cyclotomic(0, {}), repdec::Error);
}

TEST_CASE("canonical form is unique per order") {
  // 1 and -zeta_3 - zeta_3^2 are the same element and must share data.
  Cyclotomic one3 = Cyclotomic::one().embedded(3);
  Cyclotomic alt(3, {{1, -1}, {2, -1}});
  CHECK(one3.coeffs() == alt.coeffs());
  CHECK(one3.order() == 3);
}

TEST_CASE("arith examples") {
  CHECK(zeta(8) * zeta(8) == zeta(8, 2));
  for (long n : {5L, 7L, 12L}) {
    for (long k = 0; k < n; ++k) {
      CHECK(zeta(n, k).inverse() == zeta(n, (n - k) % n));
    }
  }
  Cyclotomic lhs = (Cyclotomic::one() + zeta(3)) * (Cyclotomic::one() + zeta(3, 2));
  CHECK(lhs == Cyclotomic::one());
}

TEST_CASE("conjugate examples") {
  CHECK(zeta(4).conj() == zeta(4, 3));
  Cyclotomic r(Rational(3, 2));
  CHECK(r.conj() == r);
  Cyclotomic z = Cyclotomic::one() + zeta(4);
  CHECK(z * z.conj() == Cyclotomic(Rational(2)));
  // Involution.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Cyclotomic a = random_cyclotomic(rng);
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("sqrt_rational examples") {
  CHECK(sqrt_rational(Rational(9, 4)) == Cyclotomic(Rational(3, 2)));
  CHECK(sqrt_rational(Rational(2)) == zeta(8) + zeta(8, 7));
  Cyclotomic s5 = sqrt_rational(Rational(5));
  CHECK(s5 == zeta(5, 1) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4));
  CHECK(close(s5.evalf(), {2.2360679774997896, 0.0}));
  CHECK_THROWS_AS(sqrt_rational(Rational(0)), repdec::Error);
  CHECK_THROWS_AS(sqrt_rational(Rational(-3)), repdec::Error);
}

TEST_CASE("sqrt_rational squares back exactly, 200 random rationals") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> d(1, 999);
  for (int i = 0; i < 200; ++i) {
    Rational r(d(rng), d(rng));
    Cyclotomic s = sqrt_rational(r);
    CHECK(s * s == Cyclotomic(r));
    // Positive root under the standard embedding.
    CHECK(s.evalf().real() > 0);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    Cyclotomic a = random_cyclotomic(rng);
    Cyclotomic b = random_cyclotomic(rng);
    Cyclotomic c = random_cyclotomic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic::one());
    }
  }
}

TEST_CASE("conjugation is a ring involution") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    Cyclotomic a = random_cyclotomic(rng);
    Cyclotomic b = random_cyclotomic(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("float evaluation matches exact arithmetic") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 60; ++i) {
    Cyclotomic a = random_cyclotomic(rng);
    Cyclotomic b = random_cyclotomic(rng);
    CHECK(close((a + b).evalf(), a.evalf() + b.evalf()));
    CHECK(close((a * b).evalf(), a.evalf() * b.evalf()));
    if (!a.is_zero()) {
      CHECK(close(a.inverse().evalf(), 1.0 / a.evalf()));
    }
  }
}

TEST_CASE("reduce_order finds the conductor") {
  // zeta_12^4 is a primitive cube root.
  Cyclotomic z = zeta(12, 4);
  CHECK(z.reduced().order() == 3);
  // Rational disguised at order 24.
  Cyclotomic r = Cyclotomic(Rational(7, 3)).embedded(24);
  CHECK(r.reduced().order() == 1);
  // sqrt(2) lives in Q(zeta_8), also when written at order 40.
  Cyclotomic s = sqrt_rational(Rational(2)).embedded(40);
  CHECK(s.reduced().order() == 8);
  // Random round trips: reduced value equals the original.
  std::mt19937_64 rng(45);
  for (int i = 0; i < 60; ++i) {
    Cyclotomic a = random_cyclotomic(rng);
    Cyclotomic ar = a.reduced();
    CHECK(ar == a);
    CHECK(ar.reduced().order() == ar.order());
  }
}

TEST_CASE("hash agrees across representations") {
  Cyclotomic a = zeta(12, 4);
  Cyclotomic b = zeta(3).embedded(24);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("order is preserved by arithmetic, not auto-lowered") {
  Cyclotomic z = zeta(8, 2);  // = i, conductor 4, declared order 8
  CHECK(z.order() == 8);
  CHECK((z * z).order() == 8);
  CHECK(z.reduced().order() == 4);
}
