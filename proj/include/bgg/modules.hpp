#ifndef BGG_MODULES_HPP
#define BGG_MODULES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgg/parabolic.hpp"
#include "bgg/root_system.hpp"

namespace bgg {

/// Explicit finite-dimensional module over a Levi subalgebra of sl(rank+1)
/// (the whole algebra when every node is acting).  Basis vectors carry full
/// ambient weights, so central characters of the Levi ride along for free;
/// h_i acts diagonally through them, and E/F matrices exist for the acting
/// nodes only.
struct WeightModule {
  int rank = 0;
  std::vector<int> acting_nodes;  ///< sorted, 1-based
  std::vector<Weight> weights;
  std::map<int, QMat> E;
  std::map<int, QMat> F;
  std::vector<std::string> labels;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(weights.size()); }
  QMat h_action(int node) const;
};

/// Overridable dimension guard (BGG_MAX_DIM), default 20000.
long long max_module_dim();

WeightModule trivial_module(int rank);

/// Standard module of the A-type block on nodes [lo..hi]: dimension
/// hi - lo + 2, realized on the matrix columns the block acts on.
WeightModule block_standard_module(const RootSystem& rs, int lo, int hi);

WeightModule tensor(const WeightModule& a, const WeightModule& b);
WeightModule ext_power(const WeightModule& m, int k);
WeightModule sym_power(const WeightModule& m, int k);
WeightModule dual(const WeightModule& m);

/// Shifts every weight by `delta`; delta must vanish at the acting nodes
/// (it is a character of the center of the Levi).
WeightModule twist(const WeightModule& m, const Weight& delta);

/// Irreducible module with highest weight `lam` over the Levi spanned by
/// `acting_nodes`: built as the span of the lowering orbit of the top vector
/// inside a tensor product of fundamental modules, then twisted so the
/// highest weight matches lam at the remaining (central) coordinates.
/// lam must be dominant integral at the acting nodes; other coordinates are
/// arbitrary rationals.
WeightModule irrep(const RootSystem& rs, const std::vector<int>& acting_nodes,
                   const Weight& lam);

/// dual(irrep(lam)): the module whose lowest weight is -lam.  This is the
/// module the homology engine attaches to a weight label.
WeightModule coefficient_module(const RootSystem& rs, const std::vector<int>& acting_nodes,
                                const Weight& lam);

/// Action matrix of the positive-root vector (or its negative-root partner)
/// for the given root index, obtained from nested generator brackets.
/// The root must be supported on the acting nodes.
QMat root_action_e(const RootSystem& rs, const WeightModule& m, int root);
QMat root_action_f(const RootSystem& rs, const WeightModule& m, int root);

/// Casimir element of the acting Levi with respect to the trace form.
QMat casimir_matrix(const RootSystem& rs, const WeightModule& m);

/// Eigenvalue oracle <lam, lam + 2 rho_levi> in the trace-form normalization.
Rational casimir_eigenvalue(const RootSystem& rs, const std::vector<int>& acting_nodes,
                            const Weight& lam);

/// Weyl dimension formula over the roots supported on `nodes`.
BigInt weyl_dim(const RootSystem& rs, const std::vector<int>& nodes, const Weight& lam);

/// Weights of the lowest-weight line(s): basis vectors of ker of all F_i.
/// For an irreducible module this is a single line.
std::vector<Weight> lowest_weights(const WeightModule& m);
std::vector<Weight> highest_weights(const WeightModule& m);

/// The label of an irreducible module: minus its lowest weight (equivalently
/// the highest weight of the dual).  Weight labels throughout the homology
/// machinery use this convention.
Weight module_label(const WeightModule& m);

/// Restriction of a module along a parabolic pair: the module over the Levi
/// of p (generators at uncrossed-p nodes only) plus the action matrices of
/// the relative nilradical root vectors and the dimensions of the p-grading
/// layers of the weight space.
struct RestrictedModule {
  WeightModule levi_module;
  std::map<int, QMat> rel_e_action;  ///< keyed by position in pair.roots_rel
  std::map<int, QMat> rel_f_action;
  std::map<std::string, int> grade_layer_dims;  ///< grade value -> dimension
};
RestrictedModule restrict_module(const WeightModule& m, const ParabolicPair& pair);

/// Checks the commutation relations [E_i,F_j] = delta_ij H_i,
/// [H_i, E_j] = a_ij E_j, the Serre relations, diagonality of h, and
/// existence of a highest-weight vector.  Throws InternalError on failure.
void verify_module(const RootSystem& rs, const WeightModule& m);

}  // namespace bgg

#endif
