#ifndef BGG_COMPLEX_HPP
#define BGG_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgg/modules.hpp"
#include "bgg/parabolic.hpp"

namespace bgg {

/// Basis element of C_k = Lambda^k(q_+/p_+) (x) V: a sorted tuple of local
/// relative-root indices and a coefficient-module basis index.
struct ChainBasisElement {
  std::vector<int> form;
  Eigen::Index coeff = 0;
};

/// The relative chain complex of a parabolic pair with coefficients in a
/// module V over the Levi of p.
///
/// d_down[k] : C_k -> C_{k-1} is the Lie algebra homology differential of
/// the relative nilradical; d_up[k] : C_k -> C_{k+1} is the cohomology
/// differential of the opposite algebra, transported through the trace-form
/// duality.  box[k] is their anticommutator.  Weight labels follow the
/// dual-highest-weight convention: a summand is labelled by minus its lowest
/// weight (the highest weight of its dual), which is the convention under
/// which the affine-orbit bookkeeping comes out sign-free.
struct RelativeComplex {
  ParabolicPair pair;
  WeightModule coeff;
  std::optional<Weight> coeff_label;  ///< set when V was built from a label

  int top = 0;  ///< dim of the relative nilradical
  std::vector<std::vector<ChainBasisElement>> basis;
  std::vector<std::vector<Weight>> wts;
  std::vector<std::vector<Rational>> grades;  ///< filtration degree per element
  std::vector<QMat> d_up;
  std::vector<QMat> d_down;
  std::vector<QMat> box;
  /// Levi-of-q generator actions on each chain space.
  std::vector<std::map<int, QMat>> levi_E;
  std::vector<std::map<int, QMat>> levi_F;

  Eigen::Index dim(int k) const {
    return static_cast<Eigen::Index>(basis[static_cast<size_t>(k)].size());
  }
  /// Basis indices of chain degree k with the given weight.
  std::vector<Eigen::Index> weight_block(int k, const Weight& w) const;
  /// Distinct weights occurring in degree k, in a deterministic order.
  std::vector<Weight> weights_in_degree(int k) const;
};

RelativeComplex build_complex(const ParabolicPair& pair, const WeightModule& coeff);

/// Convenience: coefficients built from a weight label (V has lowest weight
/// -lam, so the degree-0 homology is labelled lam).
RelativeComplex build_complex_from_label(const ParabolicPair& pair, const Weight& lam);

namespace detail {
/// Fault-injection hook for the selftest: builds the complex with the sign
/// of the bracket term of the homology differential flipped.  With -1 the
/// codifferential no longer squares to zero on nonabelian nilradicals, so
/// the differential and Hodge criteria must fail.
RelativeComplex build_complex_with_codifferential_sign(const ParabolicPair& pair,
                                                       const WeightModule& coeff,
                                                       int bracket_sign);
}  // namespace detail

struct HomologySummand {
  Weight label;       ///< minus the lowest weight of the summand
  int multiplicity;   ///< number of copies
  BigInt dimension;   ///< total Laplacian-kernel dimension of the copies
};

struct HodgeDims {
  Eigen::Index chain = 0, im_down = 0, harmonic = 0, im_up = 0;
};

struct HomologySummary {
  std::vector<std::vector<HomologySummand>> per_degree;
  std::vector<HodgeDims> hodge;
};

HomologySummary homology(const RelativeComplex& cx);

/// Per-degree multisets of labels from the relative Hasse quotient and the
/// affine orbit inside the Levi of p.
std::vector<std::vector<Weight>> kostant_predict(const ParabolicPair& pair, const Weight& lam);

/// Sorted label strings per degree, with multiplicity, for multiset compare.
std::vector<std::vector<std::string>> summary_label_multiset(const HomologySummary& s);
std::vector<std::vector<std::string>> predict_label_multiset(
    const std::vector<std::vector<Weight>>& pred);

/// Distinct nonzero Laplacian eigenvalues on the graded pieces of
/// im(d_down) in degree k, keyed by filtration degree.
std::vector<std::pair<Rational, std::vector<Rational>>> spectrum(const RelativeComplex& cx,
                                                                 int k);

/// Blockwise Casimir consistency: one global constant kappa such that
/// 2 * (Laplacian eigenvalue on a block labelled mu) equals
/// kappa * (c(lam) - c(mu)) with c(x) = <x, x + 2 rho_p> in the trace form.
struct CasimirBlockReport {
  int degree;
  Weight label;
  Rational eigenvalue;
  Rational casimir_difference;
};
struct CasimirConsistency {
  Rational kappa;
  bool consistent = false;
  std::vector<CasimirBlockReport> blocks;
};
CasimirConsistency casimir_consistency(const RelativeComplex& cx);

/// Two-step homology comparison: H_k(q_+, V) against the direct sum over
/// i + j = k of H_i(q_+/p_+, H_j(p_+, V)), both sides computed explicitly.
struct KunnethReport {
  std::vector<std::vector<std::string>> left;
  std::vector<std::vector<std::string>> right;
  bool equal = false;
};
KunnethReport kunneth_compare(const RootSystem& rs, const ParabolicPair& pair,
                              const Weight& lam_tilde);

/// Harmonic spaces of the complex as explicit modules over the Levi of q
/// of the complex's own pair (used to feed homologies back in as
/// coefficients).
std::vector<WeightModule> harmonic_modules(const RelativeComplex& cx);

/// Structural checks: squares vanish, weight-block-diagonality, exact grade
/// preservation, Levi equivariance, Hodge decomposition, Euler
/// characteristic.  Throws InternalError on failure.
void verify_complex(const RelativeComplex& cx);

/// Assembles the operator on Lambda^k(form) (x) V induced by a one-body
/// operator on the form line and an operator on V (derivation rule).
QMat chain_operator(const RelativeComplex& cx, int k, const QMat& form_op, const QMat& coeff_op);

}  // namespace bgg

#endif
