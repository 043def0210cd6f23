#ifndef BGG_PARABOLIC_HPP
#define BGG_PARABOLIC_HPP

#include <string>
#include <vector>

#include "bgg/root_system.hpp"

namespace bgg {

/// Nested parabolic pair q < p < g, cut out by two nested sets of crossed
/// Dynkin nodes.  g is realized as sl(rank+1) on matrix units, so every
/// bracket is an exact integer commutator.
///
/// Basis conventions, fixed once for bit-exact matrices:
///  - nilradical bases are ordered by grading, then by root order;
///  - the relative nilradical basis lists the roots in q_+ \ p_+.
struct ParabolicPair {
  RootSystem rs;
  std::vector<int> crossed_p;  ///< sorted, 1-based
  std::vector<int> crossed_q;  ///< sorted, 1-based, contains crossed_p

  std::vector<int> roots_p_plus;  ///< indices into rs.positive_roots
  std::vector<int> roots_q_plus;
  std::vector<int> roots_rel;     ///< q_+ \ p_+, ordered by (grade, root order)
  std::vector<int> grade_rel;     ///< grading of each relative root

  std::vector<int> uncrossed_p;   ///< Levi nodes of p
  std::vector<int> uncrossed_q;   ///< Levi nodes of q

  int dim_p_plus() const { return static_cast<int>(roots_p_plus.size()); }
  int dim_q_plus() const { return static_cast<int>(roots_q_plus.size()); }
  int dim_rel() const { return static_cast<int>(roots_rel.size()); }

  /// Filtration grade of a weight: its value on the relative grading element.
  Rational grade_of(const Weight& w) const;
};

ParabolicPair build_pair(const RootSystem& rs, const std::vector<int>& crossed_p,
                         const std::vector<int>& crossed_q);

/// Matrix-unit realization of sl(rank+1).
QMat mat_e(const RootSystem& rs, int root);  ///< E_{lo, hi+1}
QMat mat_f(const RootSystem& rs, int root);  ///< E_{hi+1, lo}
QMat mat_h(const RootSystem& rs, int node);  ///< E_{ii} - E_{i+1,i+1}
QMat bracket(const QMat& a, const QMat& b);

/// Grading of a positive root with respect to a crossed-node set: the sum of
/// its coefficients at the crossed nodes.
int root_grade(const RootSystem& rs, int root, const std::vector<int>& crossed);

/// Expansion of a traceless matrix in the basis {h_i} + {e_alpha} + {f_alpha}:
/// returns (h coords, e coords per positive root, f coords per positive root).
struct AlgebraCoords {
  QVec h;
  QVec e;
  QVec f;
};
AlgebraCoords algebra_coords(const RootSystem& rs, const QMat& x);

/// Trace form matrix of p/p_+ in the basis {h_1..h_n, e_alpha, f_alpha :
/// alpha in the Levi of p}, together with that basis as matrices.
struct InvariantPairing {
  std::vector<QMat> basis;
  std::vector<std::string> basis_labels;
  std::vector<Weight> basis_weights;
  QMat matrix;
};
InvariantPairing invariant_pairing(const ParabolicPair& pair);

/// Consecutive runs of uncrossed-in-p nodes: each is an A-type block of the
/// semisimple part of the Levi of p.
struct LeviBlock {
  int lo = 0, hi = 0;  ///< 1-based node range in the ambient diagram
  RootSystem sub;      ///< A_{hi-lo+1} root system of the block
};
std::vector<LeviBlock> levi_blocks(const ParabolicPair& pair);

/// Half-sum of the positive roots of the Levi of p, as an ambient weight.
Weight levi_rho(const RootSystem& rs, const std::vector<int>& uncrossed);

/// Positive roots supported on the given node set (as indices).
std::vector<int> roots_supported_on(const RootSystem& rs, const std::vector<int>& nodes);

/// Parses "A3 p=1 q=1,2" (p= may be empty or omitted for p = g).
struct PairSpec {
  int rank = 0;
  std::vector<int> crossed_p;
  std::vector<int> crossed_q;
};
PairSpec parse_pair_spec(const std::string& s);
std::string render_pair_spec(const PairSpec& spec);

/// Structural checks: bracket tables close correctly, Jacobi identity on
/// basis triples, ideal property of p_+, representative independence of the
/// induced bracket on q_+/p_+, grading compatibility, pairing invariance
/// and annihilator identities.  Throws InternalError on failure.
void verify_pair(const ParabolicPair& pair);

}  // namespace bgg

#endif
