#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repdec/errors.hpp"
#include "repdec/linalg.hpp"

using repdec::Cyclotomic;
using repdec::Matrix;
using repdec::Rational;

namespace {

Matrix from_longs(int r, int c, std::initializer_list<long> vals) {
  Matrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Cyclotomic(Rational(*it++));
  return m;
}

Matrix random_int_matrix(std::mt19937_64& rng, int n, long lo = -4, long hi = 4) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Cyclotomic(Rational(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("row_reduce examples") {
  Matrix a = from_longs(2, 2, {1, 1, 1, 1});
  auto ra = row_reduce(a);
  CHECK(ra.rank == 1);
  REQUIRE(ra.kernel.dim() == 1);
  // Kernel vector proportional to (1, -1).
  const Matrix& k = ra.kernel.basis();
  CHECK((a * k).is_zero());

  auto rid = row_reduce(Matrix::identity(4));
  CHECK(rid.rank == 4);
  CHECK(rid.kernel.dim() == 0);

  Matrix ones = from_longs(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(row_reduce(ones).rank == 1);
}

TEST_CASE("row_reduce rank-nullity and exact kernel on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Matrix m = random_int_matrix(rng, n, -2, 2);
    auto r = row_reduce(m);
    CHECK(r.rank + r.kernel.dim() == n);
    if (r.kernel.dim() > 0) CHECK((m * r.kernel.basis()).is_zero());
    CHECK(r.column_space.dim() == r.rank);
  }
}

TEST_CASE("invert examples") {
  CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));

  Matrix d(2, 2);
  d.at(0, 0) = Cyclotomic(Rational(2));
  d.at(1, 1) = Cyclotomic::root_of_unity(3, 1);
  Matrix di = invert(d);
  CHECK(di.at(0, 0) == Cyclotomic(Rational(1, 2)));
  CHECK(di.at(1, 1) == Cyclotomic::root_of_unity(3, 2));

  Matrix u = from_longs(2, 2, {1, 1, 0, 1});
  CHECK(invert(u) == from_longs(2, 2, {1, -1, 0, 1}));

  CHECK_THROWS_AS(invert(from_longs(2, 2, {1, 1, 1, 1})), repdec::SingularMatrixError);
  CHECK_THROWS_AS(invert(Matrix(2, 3)), repdec::ShapeError);
}

TEST_CASE("invert on random invertible matrices") {
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 25) {
    int n = 2 + static_cast<int>(rng() % 5);  // degree <= 6
    Matrix m = random_int_matrix(rng, n);
    try {
      Matrix mi = invert(m);
      CHECK((mi * m).is_identity());
      CHECK((m * mi).is_identity());
      ++done;
    } catch (const repdec::SingularMatrixError&) {
      // draw again
    }
  }
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));

  Matrix swap2 = from_longs(2, 2, {0, 1, 1, 0});
  Matrix k = kronecker(swap2, Matrix::identity(2));
  // Block-swap permutation matrix.
  Matrix expected(4, 4);
  expected.at(0, 2) = Cyclotomic::one();
  expected.at(1, 3) = Cyclotomic::one();
  expected.at(2, 0) = Cyclotomic::one();
  expected.at(3, 1) = Cyclotomic::one();
  CHECK(k == expected);

  // Mixed-product identity on random 2x2 pairs, exact.
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_int_matrix(rng, 2), b = random_int_matrix(rng, 2);
    Matrix c = random_int_matrix(rng, 2), d = random_int_matrix(rng, 2);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }
}

TEST_CASE("ldl_hermitian examples") {
  auto [li, di] = ldl_hermitian(Matrix::identity(3));
  CHECK(li == Matrix::identity(3));
  CHECK(di == Matrix::identity(3));

  Matrix a = from_longs(2, 2, {4, 2, 2, 3});
  auto [l, d] = ldl_hermitian(a);
  CHECK(l == from_longs(2, 2, {1, 0, /**/ 0, 1}) + from_longs(2, 2, {0, 0, /**/ 0, 0}).scaled(Rational(0)) + [] {
    Matrix half(2, 2);
    half.at(1, 0) = Cyclotomic(Rational(1, 2));
    return half;
  }());
  CHECK(d.at(0, 0) == Cyclotomic(Rational(4)));
  CHECK(d.at(1, 1) == Cyclotomic(Rational(2)));
  CHECK(l * d * l.conj_transpose() == a);

  // [[2, i], [-i, 2]] -> L = [[1,0],[-i/2,1]], D = diag(2, 3/2).
  Matrix h(2, 2);
  h.at(0, 0) = Cyclotomic(Rational(2));
  h.at(0, 1) = Cyclotomic::root_of_unity(4, 1);
  h.at(1, 0) = -Cyclotomic::root_of_unity(4, 1);
  h.at(1, 1) = Cyclotomic(Rational(2));
  auto [l2, d2] = ldl_hermitian(h);
  CHECK(d2.at(0, 0) == Cyclotomic(Rational(2)));
  CHECK(d2.at(1, 1) == Cyclotomic(Rational(3, 2)));
  CHECK(l2.at(1, 0) == (-Cyclotomic::root_of_unity(4, 1)).scaled(Rational(1, 2)));
  CHECK(l2 * d2 * l2.conj_transpose() == h);

  Matrix z(2, 2);
  CHECK_THROWS_AS(ldl_hermitian(z), repdec::ZeroPivotError);
}

TEST_CASE("ldl_hermitian reconstructs 100 random positive-definite matrices") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Matrix m = random_int_matrix(rng, n, -3, 3);
    // N N* + I is Hermitian positive definite.
    Matrix a = m * m.conj_transpose() + Matrix::identity(n);
    auto [l, d] = ldl_hermitian(a);
    CHECK(l * d * l.conj_transpose() == a);
    for (int i = 0; i < n; ++i) {
      CHECK(l.at(i, i).is_one());
      CHECK(d.at(i, i).is_real());
    }
  }
}

TEST_CASE("trace_inner_product examples") {
  CHECK(trace_inner_product(Matrix::identity(5), Matrix::identity(5)) ==
        Cyclotomic(Rational(5)));
  Matrix e11(2, 2), e12(2, 2);
  e11.at(0, 0) = Cyclotomic::one();
  e12.at(0, 1) = Cyclotomic::one();
  CHECK(trace_inner_product(e11, e12).is_zero());
  Matrix j3 = from_longs(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(trace_inner_product(j3, j3) == Cyclotomic(Rational(9)));
  CHECK_THROWS_AS(trace_inner_product(Matrix(2, 2), Matrix(3, 3)), repdec::ShapeError);
  // Conjugate symmetry.
  std::mt19937_64 rng(15);
  Matrix a = random_int_matrix(rng, 3), b = random_int_matrix(rng, 3);
  CHECK(trace_inner_product(a, b) == trace_inner_product(b, a).conj());
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Matrix a = random_int_matrix(rng, n);
    Matrix x = random_int_matrix(rng, n);
    Matrix b = a * x;
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  // Inconsistent system.
  Matrix a = from_longs(2, 1, {1, 1});
  Matrix b = from_longs(2, 1, {1, 2});
  CHECK(!solve(a, b).has_value());
}
