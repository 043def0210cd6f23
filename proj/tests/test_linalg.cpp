#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/linalg.hpp"

using namespace bgg;

namespace {

QMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  QMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

TEST_CASE("rank and kernel on hand cases") {
  QMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank_of(m) == 2);
  QMat k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK(is_zero(m * k));

  QMat id3 = identity(3);
  CHECK(rank_of(id3) == 3);
  CHECK(kernel_basis(id3).cols() == 0);

  QMat z = QMat::Zero(2, 5);
  CHECK(rank_of(z) == 0);
  CHECK(kernel_basis(z).cols() == 5);
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
  Rng rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.next() % 7);
    Eigen::Index c = 1 + static_cast<Eigen::Index>(rng.next() % 7);
    QMat m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j)
        m(i, j) = Rational(static_cast<long long>(rng.next() % 7) - 3,
                           1 + static_cast<long long>(rng.next() % 2));
    Eigen::Index rk = rank_of(m);
    QMat ker = kernel_basis(m);
    CHECK(rk + ker.cols() == c);
    CHECK(is_zero(m * ker));
    CHECK(rank_of(ker) == ker.cols());

    QMat img = image_basis(m);
    CHECK(img.cols() == rk);
    CHECK(span_contains(img, m));

    // solvable system: b in the image
    QVec x(c);
    for (Eigen::Index j = 0; j < c; ++j) x(j) = Rational(static_cast<long long>(rng.next() % 5) - 2);
    QVec b = m * x;
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
  }
}

TEST_CASE("inconsistent systems are reported") {
  QMat m = from_rows({{1, 0}, {0, 0}});
  QVec b(2);
  b(0) = Rational(1);
  b(1) = Rational(2);
  CHECK(!solve(m, b).has_value());
}

TEST_CASE("exact eigenspaces") {
  QMat m = from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, 5}});
  QMat e2 = eigenspace_basis(m, Rational(2));
  CHECK(e2.cols() == 1);  // Jordan block: geometric multiplicity 1
  CHECK(is_zero(m * e2 - Rational(2) * e2));
  QMat e5 = eigenspace_basis(m, Rational(5));
  CHECK(e5.cols() == 1);
  CHECK(eigenspace_basis(m, Rational(3)).cols() == 0);
  // rational eigenvalue
  QMat h = from_rows({{1, 1}, {1, 1}});
  CHECK(eigenspace_basis(h * Rational(1, 2), Rational(1)).cols() == 1);
}

TEST_CASE("coords_in_basis recovers coordinates") {
  QMat basis = from_rows({{1, 1}, {0, 1}, {2, 0}});
  QVec v = basis.col(0) * Rational(3) + basis.col(1) * Rational(-2, 5);
  QVec c = coords_in_basis(basis, v);
  CHECK(c(0) == Rational(3));
  CHECK(c(1) == Rational(-2, 5));
}
