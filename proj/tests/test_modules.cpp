#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "bgg/errors.hpp"
#include "bgg/modules.hpp"
#include "support/freudenthal.hpp"

using namespace bgg;

namespace {

std::map<std::string, long long> weight_multiplicities(const WeightModule& m) {
  std::map<std::string, long long> out;
  for (const Weight& w : m.weights) ++out[weight_str(w)];
  return out;
}

std::vector<int> all_nodes(int rank) {
  std::vector<int> v;
  for (int i = 1; i <= rank; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("sl2 irreps") {
  RootSystem rs = build_root_system(1);
  WeightModule m = irrep(rs, {1}, make_weight({2}));
  CHECK(m.dim() == 3);
  auto mult = weight_multiplicities(m);
  CHECK(mult[weight_str(make_weight({2}))] == 1);
  CHECK(mult[weight_str(make_weight({0}))] == 1);
  CHECK(mult[weight_str(make_weight({-2}))] == 1);
  verify_module(rs, m);
  CHECK(weyl_dim(rs, {1}, make_weight({2})) == BigInt(3));
}

TEST_CASE("adjoint of sl4 has dimension 15") {
  RootSystem rs = build_root_system(3);
  WeightModule m = irrep(rs, all_nodes(3), make_weight({1, 0, 1}));
  CHECK(m.dim() == 15);
  verify_module(rs, m);
}

TEST_CASE("sl3 adjoint weights match Freudenthal") {
  RootSystem rs = build_root_system(2);
  WeightModule m = irrep(rs, {1, 2}, make_weight({1, 1}));
  CHECK(m.dim() == 8);
  auto got = weight_multiplicities(m);
  auto expect = bggtest::freudenthal_multiplicities(rs, {1, 2}, make_weight({1, 1}));
  CHECK(got == expect);
  CHECK(got[weight_str(make_weight({0, 0}))] == 2);
}

TEST_CASE("random dominant weights: dimension formula and Freudenthal agree") {
  struct Case {
    int rank;
    std::vector<long long> lam;
  };
  std::vector<Case> cases = {
      {1, {3}}, {1, {5}}, {2, {2, 0}}, {2, {0, 2}}, {2, {2, 1}}, {2, {1, 2}},
      {3, {1, 0, 0}}, {3, {0, 1, 0}}, {3, {1, 1, 0}}, {3, {0, 1, 1}}, {3, {2, 0, 0}},
      {3, {1, 0, 1}}, {3, {0, 2, 0}}, {3, {1, 1, 1}}};
  for (const Case& c : cases) {
    RootSystem rs = build_root_system(c.rank);
    Weight lam = Weight::Zero(c.rank);
    for (int i = 0; i < c.rank; ++i) lam(i) = Rational(c.lam[static_cast<size_t>(i)]);
    WeightModule m = irrep(rs, all_nodes(c.rank), lam);
    CHECK(BigInt(static_cast<long long>(m.dim())) == weyl_dim(rs, all_nodes(c.rank), lam));
    auto got = weight_multiplicities(m);
    auto expect = bggtest::freudenthal_multiplicities(rs, all_nodes(c.rank), lam);
    CHECK(got == expect);
    verify_module(rs, m);
  }
}

TEST_CASE("constructed irreps are irreducible") {
  // brute force: the closure of any nonzero basis vector under raising and
  // lowering operators is the whole module
  struct Case {
    int rank;
    std::vector<long long> lam;
  };
  for (const Case& c : {Case{1, {2}}, Case{2, {1, 1}}, Case{3, {1, 0, 1}}}) {
    RootSystem rs = build_root_system(c.rank);
    Weight lam = Weight::Zero(c.rank);
    for (int i = 0; i < c.rank; ++i) lam(i) = Rational(c.lam[static_cast<size_t>(i)]);
    WeightModule m = irrep(rs, all_nodes(c.rank), lam);
    std::vector<QMat> gens;
    for (int n : m.acting_nodes) {
      gens.push_back(m.E.at(n));
      gens.push_back(m.F.at(n));
    }
    for (Eigen::Index b = 0; b < m.dim(); ++b) {
      SpanReducer span(m.dim());
      QVec seed = QVec::Zero(m.dim());
      seed(b) = Rational(1);
      span.insert(seed);
      std::vector<QVec> frontier{seed};
      while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const QVec& v : frontier) {
          for (const QMat& g : gens) {
            QVec img = g * v;
            if (span.insert(img)) next.push_back(img);
          }
        }
        frontier = std::move(next);
      }
      CHECK(span.rank() == m.dim());
    }
  }
}

TEST_CASE("levi irreps carry central characters") {
  RootSystem rs = build_root_system(3);
  // Levi of p = nodes {2,3}; rational central coordinate at node 1
  Weight lam = Weight::Zero(3);
  lam(0) = Rational(1, 2);
  lam(1) = Rational(1);
  lam(2) = Rational(0);
  WeightModule m = irrep(rs, {2, 3}, lam);
  CHECK(m.dim() == 3);
  CHECK(m.weights[0] == lam);
  verify_module(rs, m);
  // all weights share the same central character: value on the grading
  // element of node 1 differs only through the Levi root directions
  CHECK_THROWS_AS(irrep(rs, {2, 3}, make_weight({0, -1, 0})), RepresentabilityError);
  CHECK_THROWS_AS(irrep(rs, {2, 3}, make_weight({0, 1, 2}) * Rational(1, 2)),
                  RepresentabilityError);
}

TEST_CASE("duals, tensors, powers") {
  RootSystem rs = build_root_system(3);
  WeightModule std4 = irrep(rs, all_nodes(3), make_weight({1, 0, 0}));
  CHECK(std4.dim() == 4);

  SUBCASE("top exterior power is the determinant line") {
    WeightModule det = ext_power(std4, 4);
    CHECK(det.dim() == 1);
    CHECK(det.weights[0] == Weight::Zero(3));
  }

  SUBCASE("double dual is the identity") {
    WeightModule dd = dual(dual(std4));
    CHECK(dd.dim() == std4.dim());
    for (int n : std4.acting_nodes) {
      CHECK(dd.E.at(n) == std4.E.at(n));
      CHECK(dd.F.at(n) == std4.F.at(n));
    }
    for (size_t i = 0; i < std4.weights.size(); ++i) CHECK(dd.weights[i] == std4.weights[i]);
  }

  SUBCASE("dual is a module") {
    verify_module(rs, dual(std4));
    verify_module(rs, dual(irrep(rs, all_nodes(3), make_weight({0, 1, 0}))));
  }

  SUBCASE("tensor satisfies the derivation rule") {
    WeightModule t = tensor(std4, dual(std4));
    verify_module(rs, t);
    CHECK(t.dim() == 16);
  }
}

TEST_CASE("sym_power of the sl2 standard module is the spin-1 irrep") {
  RootSystem rs = build_root_system(1);
  WeightModule std2 = irrep(rs, {1}, make_weight({1}));
  WeightModule s2 = sym_power(std2, 2);
  CHECK(s2.dim() == 3);
  verify_module(rs, s2);
  WeightModule v2 = irrep(rs, {1}, make_weight({2}));
  CHECK(weight_multiplicities(s2) == weight_multiplicities(v2));
  // explicit intertwiner: solve T with T E = E' T, T F = F' T, T Hw = ...
  // build as kernel of the commuting-linear-map system
  Eigen::Index d = 3;
  QMat sys(2 * d * d, d * d);
  auto put = [&](Eigen::Index row, const QMat& A, const QMat& B) {
    // constraint: T * A - B * T = 0, vectorized column-major: rows indexed (i,j)
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
          sys(row + i * d + j, k * d + i) += A(k, j);        // (T A)_{ij} -> T_{ik} A_{kj}
          sys(row + i * d + j, j * d + k) -= B(i, k);        // (B T)_{ij} -> B_{ik} T_{kj}
        }
      }
    }
  };
  // unknown T stored column-major: T_{ik} at index k*d+i
  sys.setZero();
  put(0, s2.E.at(1), v2.E.at(1));
  put(d * d, s2.F.at(1), v2.F.at(1));
  QMat ker = kernel_basis(sys);
  REQUIRE(ker.cols() >= 1);
  QMat T = QMat::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index i = 0; i < d; ++i) T(i, k) = ker(k * d + i, 0);
  CHECK(rank_of(T) == d);  // isomorphism
  CHECK(is_zero(T * s2.E.at(1) - v2.E.at(1) * T));
  CHECK(is_zero(T * s2.F.at(1) - v2.F.at(1) * T));
}

TEST_CASE("twist shifts only central coordinates") {
  RootSystem rs = build_root_system(3);
  WeightModule m = irrep(rs, {2, 3}, make_weight({0, 1, 0}));
  Weight delta = Weight::Zero(3);
  delta(0) = Rational(-3, 2);
  WeightModule t = twist(m, delta);
  CHECK(t.E.at(2) == m.E.at(2));
  CHECK(t.F.at(3) == m.F.at(3));
  for (size_t i = 0; i < m.weights.size(); ++i) CHECK(t.weights[i] == m.weights[i] + delta);
  // twist by zero is the identity
  WeightModule z = twist(m, Weight::Zero(3));
  for (size_t i = 0; i < m.weights.size(); ++i) CHECK(z.weights[i] == m.weights[i]);
  // non-central twist is rejected
  CHECK_THROWS_AS(twist(m, make_weight({0, 1, 0})), ParseError);
  // trivial rep of the Levi twisted by w is one-dimensional with weight w
  // in the central coordinate
  WeightModule triv = irrep(rs, {2, 3}, Weight::Zero(3));
  WeightModule tw = twist(triv, delta);
  CHECK(tw.dim() == 1);
  CHECK(tw.weights[0] == delta);
}

TEST_CASE("casimir eigenvalues") {
  SUBCASE("trivial module") {
    RootSystem rs = build_root_system(2);
    QMat c = casimir_matrix(rs, trivial_module(2));
    CHECK(is_zero(c));
  }
  SUBCASE("adjoint of sl3 has eigenvalue 6") {
    RootSystem rs = build_root_system(2);
    WeightModule adj = irrep(rs, {1, 2}, make_weight({1, 1}));
    QMat c = casimir_matrix(rs, adj);
    CHECK(c == Rational(6) * identity(adj.dim()));
    CHECK(casimir_eigenvalue(rs, {1, 2}, make_weight({1, 1})) == Rational(6));
  }
  SUBCASE("sl2 fundamental has eigenvalue 3/2") {
    RootSystem rs = build_root_system(1);
    WeightModule m = irrep(rs, {1}, make_weight({1}));
    QMat c = casimir_matrix(rs, m);
    CHECK(c == Rational(3, 2) * identity(2));
    CHECK(casimir_eigenvalue(rs, {1}, make_weight({1})) == Rational(3, 2));
  }
  SUBCASE("block scalar on decomposables") {
    RootSystem rs = build_root_system(1);
    WeightModule m = tensor(irrep(rs, {1}, make_weight({1})), irrep(rs, {1}, make_weight({1})));
    QMat c = casimir_matrix(rs, m);
    // eigenvalues are c(2) = 4 and c(0) = 0; (C - 4)(C - 0) = 0
    CHECK(is_zero((c - Rational(4) * identity(4)) * c));
    // Casimir commutes with the generators
    CHECK(is_zero(c * m.E.at(1) - m.E.at(1) * c));
  }
}

TEST_CASE("module labels use the dual-highest-weight convention") {
  RootSystem rs = build_root_system(2);
  WeightModule std3 = irrep(rs, {1, 2}, make_weight({1, 0}));
  CHECK(module_label(std3) == make_weight({0, 1}));
  CHECK(module_label(dual(std3)) == make_weight({1, 0}));
  CHECK(module_label(coefficient_module(rs, {1, 2}, make_weight({1, 0}))) ==
        make_weight({1, 0}));
}

TEST_CASE("restriction along a pair") {
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {1}, {1, 2});
  WeightModule std4 = irrep(rs, all_nodes(3), make_weight({1, 0, 0}));
  RestrictedModule r = restrict_module(std4, pair);
  CHECK(r.levi_module.acting_nodes == std::vector<int>{2, 3});
  // p-grading layers: line + 3-dim complement
  REQUIRE(r.grade_layer_dims.size() == 2);
  std::vector<int> dims;
  for (const auto& [g, d] : r.grade_layer_dims) dims.push_back(d);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 3});
  // relative nilradical acts nilpotently
  for (const auto& [i, a] : r.rel_e_action) {
    QMat p = a;
    for (int t = 0; t < 4; ++t) p = p * a;
    CHECK(is_zero(p));
  }
  // trivial module restricts to trivial
  RestrictedModule rt = restrict_module(trivial_module(3), pair);
  CHECK(rt.levi_module.dim() == 1);
}

TEST_CASE("dimension guard") {
  RootSystem rs = build_root_system(3);
  setenv("BGG_MAX_DIM", "10", 1);
  CHECK_THROWS_AS(irrep(rs, all_nodes(3), make_weight({1, 0, 1})), RepresentabilityError);
  unsetenv("BGG_MAX_DIM");
  CHECK(irrep(rs, all_nodes(3), make_weight({1, 0, 1})).dim() == 15);
}
