#ifndef BGG_MACHINE_HPP
#define BGG_MACHINE_HPP

#include <optional>
#include <vector>

#include "bgg/complex.hpp"

namespace bgg {

/// A degree-(+1) linear map C_k -> C_{k+1} that preserves the filtration and
/// whose degree-zero graded part is the cohomology differential of the
/// complex.  Any such map can be fed to the splitting machinery.
struct FilteredOperator {
  int degree = 0;   ///< source degree k
  QMat matrix;      ///< dim(k+1) x dim(k)
  std::uint64_t seed = 0;
};

/// The model operator plus a pseudorandom strictly-filtration-raising
/// perturbation with small rational entries.  Seed zero gives the model
/// itself; fixed seeds give identical operators on every platform.
FilteredOperator make_compressable(const RelativeComplex& cx, int k, std::uint64_t seed);

/// Checks the filtration and graded-part invariants.  Throws InternalError.
void verify_filtered_operator(const RelativeComplex& cx, const FilteredOperator& op);

/// Projection data for one chain degree: ker(d_down) = im(d_down) + ker(box).
struct HarmonicProjector {
  QMat im_down;    ///< columns spanning im(d_down) in C_k
  QMat harmonic;   ///< columns spanning ker(box) in C_k
  QMat kernel;     ///< columns spanning ker(d_down) in C_k

  /// Coordinates of the harmonic part of x (x must lie in ker(d_down)).
  QVec project(const QVec& x) const;
  QMat project_matrix(const QMat& cols) const;
};
HarmonicProjector harmonic_projector(const RelativeComplex& cx, int k);

/// An operator built as an explicit polynomial in d_down o D, together with
/// its construction record: the eigenvalue/grade factor list and the
/// coefficient vector of the polynomial.
struct OperatorPolynomial {
  std::vector<std::pair<Rational, Rational>> factors;  ///< (eigenvalue, grade)
  std::vector<Rational> coefficients;                  ///< ascending powers of d_down o D
  QMat matrix;                                         ///< evaluated on C_k
};

/// Evaluates the stored coefficient vector at d_down o D; used to confirm
/// the record reproduces the matrix.
QMat evaluate_polynomial(const RelativeComplex& cx, const FilteredOperator& op,
                         const std::vector<Rational>& coefficients);

/// The splitting operator: the normalized product over grades and distinct
/// nonzero Laplacian eigenvalues of (d_down o D - a id).  Satisfies
/// pi_H o S = pi_H, (d_down o D) o S = 0 and S|_{im d_down} = 0; S(alpha) is
/// the unique representative with those properties over each homology class.
OperatorPolynomial splitting_operator(const RelativeComplex& cx, const FilteredOperator& op);

enum class QMethod { EigenPolynomial, NeumannSeries };

/// Right inverse of d_down o D on im(d_down): as a universal polynomial
/// (recursively assembled from partial-fraction interpolations per grade) or
/// as a finite Neumann series against the graded Laplacian.
struct InverseOperator {
  QMethod method;
  QMat image_basis_cols;            ///< basis B of im(d_down) in C_k
  QMat on_image;                    ///< Q restricted to B, columns in C_k coords
  std::optional<OperatorPolynomial> polynomial;  ///< set for the polynomial method
};
InverseOperator q_operator(const RelativeComplex& cx, const FilteredOperator& op,
                           QMethod method);

/// Exact check of S = id - Q (d_down o D) on ker(d_down).
bool splitting_matches_inverse(const RelativeComplex& cx, const FilteredOperator& op);

/// The compressed operator pi_H o D o S between harmonic spaces, together
/// with the kernel correspondence data.
struct CompressedOperator {
  QMat matrix;           ///< harmonic_{k+1} x harmonic_k
  QMat harmonic_source;  ///< harmonic basis of C_k
  QMat harmonic_target;  ///< harmonic basis of C_{k+1}
};
CompressedOperator compressed_operator(const RelativeComplex& cx, const FilteredOperator& op);

/// Full report over a sequence of compressable operators in consecutive
/// degrees (one per degree 0..top-1): sequence Laplacian kernels, inherited
/// zero compositions, and the cohomology comparison through the splitting
/// operators when the sequence is a complex.
struct SequenceReport {
  std::vector<bool> laplacian_kernel_in_kernel;  ///< per degree
  std::vector<bool> composition_zero;            ///< D_k o D_{k-1} = 0, per k
  bool is_complex = false;
  bool compressed_squares_zero = false;
  std::vector<Eigen::Index> cohomology_dims;             ///< of the operator sequence
  std::vector<Eigen::Index> compressed_cohomology_dims;  ///< of the compressed sequence
  bool splitting_induces_isomorphism = false;
};
SequenceReport sequence_checks(const RelativeComplex& cx,
                               const std::vector<FilteredOperator>& ops);

/// The model sequence (the cohomology differentials themselves).
std::vector<FilteredOperator> model_sequence(const RelativeComplex& cx);

/// A square-zero perturbed sequence: the model conjugated degreewise by
/// (id + strictly-raising), still compressable, with nonzero perturbation.
std::vector<FilteredOperator> conjugated_model_sequence(const RelativeComplex& cx,
                                                        std::uint64_t seed);

/// The Levi of p acting on itself: basis h_i, then e/f at the Levi roots,
/// with the positions of the relative-root lowering vectors recorded (they
/// carry the projection to the opposite nilradical).
struct AdjointModule {
  WeightModule module;
  std::vector<int> rel_f_index;  ///< basis position of f_alpha per relative root
  std::vector<int> q_part_index; ///< basis positions spanning q/p_+
};
AdjointModule make_adjoint_module(const ParabolicPair& pair);

/// Insertion-stability check: for every phi in span(E) in degree k of cxV
/// and psi in span(F) in degree 2 of the adjoint complex, the alternation of
/// inserting the opposite-nilradical part of psi into phi, followed by the
/// homology differential, must land back in span(E).
struct InsertionCheck {
  bool stable = true;
  int witness_phi = -1, witness_psi = -1;
};
InsertionCheck insertion_stability(const RelativeComplex& cxV, int k, const QMat& E_cols,
                                   const RelativeComplex& cxA, const AdjointModule& adj,
                                   const QMat& F_cols);

/// Span of the degree-2 adjoint-valued forms whose two legs both pair with
/// the nilradical of the intermediate parabolic cut out by mid_nodes.
QMat lambda2_mid_span(const RelativeComplex& cxA, const std::vector<int>& mid_nodes);

/// Same, plus the forms with one leg there and values in q.
QMat mixed_mid_span(const RelativeComplex& cxA, const AdjointModule& adj,
                    const std::vector<int>& mid_nodes);

}  // namespace bgg

#endif
