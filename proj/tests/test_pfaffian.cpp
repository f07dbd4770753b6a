#include <doctest.h>

#include <random>
#include <stdexcept>

#include "selt/pfaffian.hpp"

using selt::pfaffian;
using Matrix = std::vector<std::vector<long long>>;

namespace {

// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
long long bareiss_det(Matrix a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix random_skew(size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      m[i][j] = dist(rng);
      m[j][i] = -m[i][j];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("small closed forms") {
  CHECK(pfaffian<long long>({}, 0, 1) == 1);
  CHECK(pfaffian<long long>({{0}}, 0, 1) == 0);
  CHECK(pfaffian<long long>({{0, 5}, {-5, 0}}, 0, 1) == 5);
  const long long a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  const Matrix m{{0, a, b, c}, {-a, 0, d, e}, {-b, -d, 0, f}, {-c, -e, -f, 0}};
  CHECK(pfaffian<long long>(m, 0, 1) == a * f - b * e + c * d);
}

TEST_CASE("square of the Pfaffian is the determinant") {
  std::mt19937 rng(20240611);
  for (size_t n = 0; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix m = random_skew(n, rng);
      const long long pf = pfaffian<long long>(m, 0, 1);
      CHECK(pf * pf == bareiss_det(m));
    }
  }
}

TEST_CASE("rejects non-square input") {
  CHECK_THROWS_AS(pfaffian<long long>({{0, 1}}, 0, 1), std::invalid_argument);
}
