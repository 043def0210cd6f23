#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/errors.hpp"
#include "bgg/machine.hpp"

using namespace bgg;

namespace {

RelativeComplex path_complex(const Weight& label) {
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {1}, {1, 2});
  return build_complex_from_label(pair, label);
}

RelativeComplex borel_sl3(const Weight& label) {
  RootSystem rs = build_root_system(2);
  ParabolicPair pair = build_pair(rs, {}, {1, 2});
  return build_complex_from_label(pair, label);
}

bool vec_zero(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

void check_splitting_contract(const RelativeComplex& cx, const FilteredOperator& op) {
  const int k = op.degree;
  OperatorPolynomial s = splitting_operator(cx, op);
  QMat m = cx.d_down[static_cast<size_t>(k + 1)] * op.matrix;
  HarmonicProjector proj = harmonic_projector(cx, k);

  // record reproduces the matrix
  CHECK(is_zero(evaluate_polynomial(cx, op, s.coefficients) - s.matrix));
  // polynomial degree is the factor count
  CHECK(s.coefficients.size() == s.factors.size() + 1);
  // the factor list alone rebuilds the matrix: product of (M - a id)/(-a)
  {
    QMat rebuilt = identity(cx.dim(k));
    for (const auto& [a, grade] : s.factors) {
      rebuilt = rebuilt * ((m - a * identity(cx.dim(k))) * (Rational(-1) / a));
    }
    CHECK(is_zero(rebuilt - s.matrix));
  }

  // pi_H o S = pi_H and (d_down D) o S = 0 on ker(d_down)
  const QMat& ker = proj.kernel;
  QMat s_ker = s.matrix * ker;
  CHECK(is_zero(cx.d_down[static_cast<size_t>(k)] * s_ker));
  CHECK(is_zero(proj.project_matrix(s_ker) - proj.project_matrix(ker)));
  CHECK(is_zero(m * s_ker));
  // S vanishes on im(d_down)
  CHECK(is_zero(s.matrix * proj.im_down));

  // uniqueness via perturbation: (d_down D) is injective on im(d_down), so
  // adding any nonzero im-vector breaks the third characterizing condition
  QMat m_im = m * proj.im_down;
  CHECK(rank_of(m_im) == proj.im_down.cols());
  for (Eigen::Index j = 0; j < m_im.cols(); ++j) CHECK(!vec_zero(m_im.col(j)));
}

void check_q_contract(const RelativeComplex& cx, const FilteredOperator& op) {
  const int k = op.degree;
  QMat m = cx.d_down[static_cast<size_t>(k + 1)] * op.matrix;
  InverseOperator qe = q_operator(cx, op, QMethod::EigenPolynomial);
  InverseOperator qn = q_operator(cx, op, QMethod::NeumannSeries);
  // both are right inverses on im(d_down)
  CHECK(is_zero(m * qe.on_image - qe.image_basis_cols));
  CHECK(is_zero(m * qn.on_image - qn.image_basis_cols));
  // and they agree as maps on im(d_down)
  CHECK(is_zero(qe.on_image - qn.on_image));
  // record reproduces the matrix
  REQUIRE(qe.polynomial.has_value());
  CHECK(is_zero(evaluate_polynomial(cx, op, qe.polynomial->coefficients) -
                qe.polynomial->matrix));
  // Q has image inside im(d_down)
  CHECK(span_contains(qe.image_basis_cols, qe.on_image));
  // S = id - Q (d_down D) on ker(d_down)
  CHECK(splitting_matches_inverse(cx, op));
}

}  // namespace

TEST_CASE("compressable operators: construction and invariants") {
  RelativeComplex cx = path_complex(make_weight({0, 1, 0}));
  FilteredOperator model = make_compressable(cx, 0, 0);
  CHECK(model.matrix == cx.d_up[0]);
  verify_filtered_operator(cx, model);
  FilteredOperator seeded = make_compressable(cx, 0, 7);
  verify_filtered_operator(cx, seeded);
  FilteredOperator seeded2 = make_compressable(cx, 0, 8);
  verify_filtered_operator(cx, seeded2);
  // difference of two compressable operators strictly raises the filtration
  QMat diff = seeded.matrix - seeded2.matrix;
  for (Eigen::Index i = 0; i < diff.rows(); ++i) {
    for (Eigen::Index j = 0; j < diff.cols(); ++j) {
      if (!diff(i, j).is_zero()) {
        CHECK(cx.grades[1][static_cast<size_t>(i)] > cx.grades[0][static_cast<size_t>(j)]);
      }
    }
  }
  // determinism
  FilteredOperator again = make_compressable(cx, 0, 7);
  CHECK(again.matrix == seeded.matrix);
  CHECK_THROWS_AS(make_compressable(cx, 2, 1), ParseError);
}

TEST_CASE("splitting operator contract across complexes and seeds") {
  std::vector<RelativeComplex> cxs;
  cxs.push_back(path_complex(make_weight({0, 0, 0})));
  cxs.push_back(path_complex(make_weight({0, 1, 0})));
  cxs.push_back(path_complex(make_weight({1, 0, 1})));
  cxs.push_back(borel_sl3(make_weight({1, 1})));
  for (const RelativeComplex& cx : cxs) {
    for (int k = 0; k < std::min(cx.top, 2); ++k) {
      for (std::uint64_t seed : {0ULL, 3ULL, 11ULL}) {
        FilteredOperator op = make_compressable(cx, k, seed);
        check_splitting_contract(cx, op);
      }
    }
  }
}

TEST_CASE("splitting on the model with one-dimensional homology") {
  RelativeComplex cx = path_complex(make_weight({0, 0, 0}));
  FilteredOperator op = make_compressable(cx, 0, 0);
  OperatorPolynomial s = splitting_operator(cx, op);
  // trivial coefficients: the composed operator vanishes, S is the identity
  CHECK(s.matrix == identity(cx.dim(0)));
}

TEST_CASE("inverse operator contract") {
  std::vector<RelativeComplex> cxs;
  cxs.push_back(path_complex(make_weight({0, 1, 0})));
  cxs.push_back(path_complex(make_weight({1, 0, 1})));
  cxs.push_back(borel_sl3(make_weight({1, 0})));
  for (const RelativeComplex& cx : cxs) {
    for (int k = 0; k < std::min(cx.top, 2); ++k) {
      for (std::uint64_t seed : {0ULL, 5ULL}) {
        FilteredOperator op = make_compressable(cx, k, seed);
        check_q_contract(cx, op);
      }
    }
  }
}

TEST_CASE("q operator on the model truncates to the inverse Laplacian") {
  RelativeComplex cx = path_complex(make_weight({0, 1, 0}));
  FilteredOperator op = make_compressable(cx, 0, 0);
  InverseOperator qn = q_operator(cx, op, QMethod::NeumannSeries);
  // with the model operator the Neumann series stops at j = 0, so
  // Q = box^{-1} on im(d_down): box * Q = id there
  CHECK(is_zero(cx.box[0] * qn.on_image - qn.image_basis_cols));
}

TEST_CASE("empty image gives the empty inverse") {
  RelativeComplex cx = path_complex(make_weight({0, 0, 0}));
  // trivial coefficients: no nonzero eigenvalues, im(d_down) = 0
  FilteredOperator op = make_compressable(cx, 0, 4);
  InverseOperator q = q_operator(cx, op, QMethod::EigenPolynomial);
  CHECK(q.image_basis_cols.cols() == 0);
  CHECK(q.on_image.cols() == 0);
}

TEST_CASE("compressed operator") {
  RelativeComplex cx = path_complex(make_weight({0, 1, 0}));
  SUBCASE("model gives the zero compressed operator") {
    FilteredOperator op = make_compressable(cx, 0, 0);
    CompressedOperator c = compressed_operator(cx, op);
    CHECK(is_zero(c.matrix));
  }
  SUBCASE("kernel correspondence") {
    for (std::uint64_t seed : {0ULL, 9ULL, 13ULL}) {
      FilteredOperator op = make_compressable(cx, 0, seed);
      CompressedOperator c = compressed_operator(cx, op);
      // phi in ker(D) cap ker(d_down) projects injectively into ker(comp)
      QMat stacked(op.matrix.rows() + cx.d_down[0].rows(), cx.dim(0));
      stacked.topRows(op.matrix.rows()) = op.matrix;
      stacked.bottomRows(cx.d_down[0].rows()) = cx.d_down[0];
      QMat z = kernel_basis(stacked);
      HarmonicProjector proj = harmonic_projector(cx, 0);
      QMat classes = proj.project_matrix(z);
      CHECK(rank_of(classes) == z.cols());
      CHECK(is_zero(c.matrix * classes));
    }
  }
}

TEST_CASE("sequence checks on the model") {
  RelativeComplex cx = path_complex(make_weight({0, 1, 0}));
  SequenceReport rep = sequence_checks(cx, model_sequence(cx));
  for (bool b : rep.laplacian_kernel_in_kernel) CHECK(b);
  CHECK(rep.is_complex);
  CHECK(rep.compressed_squares_zero);
  CHECK(rep.cohomology_dims == rep.compressed_cohomology_dims);
  CHECK(rep.splitting_induces_isomorphism);
  // cohomology of the model equals the homology dimensions
  HomologySummary s = homology(cx);
  for (size_t k = 0; k < rep.cohomology_dims.size(); ++k) {
    CHECK(rep.cohomology_dims[k] == s.hodge[k].harmonic);
  }
}

TEST_CASE("sequence checks on a conjugated square-zero sequence") {
  for (const Weight& lam : {make_weight({0, 1, 0}), make_weight({1, 0, 1})}) {
    RelativeComplex cx = path_complex(lam);
    auto ops = conjugated_model_sequence(cx, 21);
    bool nontrivial = false;
    for (size_t k = 0; k < ops.size(); ++k) {
      verify_filtered_operator(cx, ops[k]);
      if (!is_zero(ops[k].matrix - cx.d_up[k])) nontrivial = true;
    }
    CHECK(nontrivial);
    SequenceReport rep = sequence_checks(cx, ops);
    CHECK(rep.is_complex);
    CHECK(rep.compressed_squares_zero);
    CHECK(rep.cohomology_dims == rep.compressed_cohomology_dims);
    CHECK(rep.splitting_induces_isomorphism);
    for (bool b : rep.laplacian_kernel_in_kernel) CHECK(b);
  }
}

TEST_CASE("sequence checks report broken hypotheses") {
  RelativeComplex cx = borel_sl3(make_weight({1, 1}));
  // independent random perturbations in each degree rarely square to zero
  std::vector<FilteredOperator> ops;
  for (int k = 0; k < cx.top; ++k) ops.push_back(make_compressable(cx, k, 17 + k));
  SequenceReport rep = sequence_checks(cx, ops);
  CHECK(!rep.is_complex);
  CHECK(rep.compressed_cohomology_dims.empty());
}

TEST_CASE("the kernel identity of the q operator holds degreewise") {
  RelativeComplex cx = borel_sl3(make_weight({1, 0}));
  for (int k = 1; k <= cx.top; ++k) {
    FilteredOperator below = make_compressable(cx, k - 1, 3);
    InverseOperator q = q_operator(cx, below, QMethod::EigenPolynomial);
    REQUIRE(q.polynomial.has_value());
    // d_down (id - D_{k-1} Q d_down) = 0 on all of C_k
    const QMat& dd = cx.d_down[static_cast<size_t>(k)];
    QMat lhs = dd - dd * (below.matrix * (q.polynomial->matrix * dd));
    CHECK(is_zero(lhs));
  }
}

TEST_CASE("splitting and inverse contracts at rank 4") {
  RootSystem rs = build_root_system(4);
  ParabolicPair pair = build_pair(rs, {1}, {1, 3});
  RelativeComplex cx = build_complex_from_label(pair, make_weight({0, 1, 0, 0}));
  for (int k : {0, 2}) {
    FilteredOperator op = make_compressable(cx, k, 6);
    verify_filtered_operator(cx, op);
    check_splitting_contract(cx, op);
    check_q_contract(cx, op);
  }
}

TEST_CASE("insertion stability") {
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {}, {1, 2});
  AdjointModule adj = make_adjoint_module(pair);
  verify_module(rs, adj.module);
  RelativeComplex cxA = build_complex(pair, adj.module);

  SUBCASE("the full space is stable") {
    QMat full = identity(cxA.dim(2));
    InsertionCheck c = insertion_stability(cxA, 2, full, cxA, adj, full);
    CHECK(c.stable);
  }
  SUBCASE("the empty module is stable") {
    QMat full = identity(cxA.dim(2));
    QMat none(cxA.dim(2), 0);
    InsertionCheck c = insertion_stability(cxA, 2, full, cxA, adj, none);
    CHECK(c.stable);
  }
  SUBCASE("two nilradical legs with adjoint values, sl4 node 1") {
    QMat f = lambda2_mid_span(cxA, {1});
    CHECK(f.cols() > 0);
    CHECK(f.cols() < cxA.dim(2));
    InsertionCheck c = insertion_stability(cxA, 2, f, cxA, adj, f);
    CHECK(c.stable);
  }
  SUBCASE("mixed span is stable as well") {
    QMat f = mixed_mid_span(cxA, adj, {1});
    CHECK(f.cols() > 0);
    InsertionCheck c = insertion_stability(cxA, 2, f, cxA, adj, f);
    CHECK(c.stable);
  }
}
