#ifndef BGG_ROOT_SYSTEM_HPP
#define BGG_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "bgg/linalg.hpp"

namespace bgg {

/// A weight in fundamental-weight coordinates: entry i is the value on the
/// coroot h_i.  All weights of the ambient algebra and of its Levi factors
/// are carried in these coordinates.
using Weight = QVec;

Weight make_weight(std::initializer_list<long long> coords);
std::string weight_str(const Weight& w);

/// Root data for type A_n, 1 <= n <= 7.  The invariant form is the trace
/// form of the defining representation, normalized so every root has
/// squared length 2; its Gram matrix on fundamental coordinates is the
/// inverse Cartan matrix.
struct RootSystem {
  int rank = 0;
  Eigen::MatrixXi cartan;
  std::vector<Weight> simple_roots;    ///< simple root i-1 in fundamental coords
  std::vector<Weight> positive_roots;  ///< ordered by (height, node span)
  /// positive root r = alpha_lo + ... + alpha_hi, stored as (lo, hi), 1-based.
  std::vector<std::pair<int, int>> spans;
  Weight rho;
  QMat gram;  ///< inverse Cartan matrix

  /// Index into positive_roots of the root with the given span; -1 if none.
  int root_index(int lo, int hi) const;
};

RootSystem build_root_system(int rank);

/// Invariant form <a, b> = a^T C^{-1} b.
Rational form(const RootSystem& rs, const Weight& a, const Weight& b);

/// <lam, alpha^vee> for the positive root with index r (type A: alpha^vee = alpha).
Rational pair_coroot(const RootSystem& rs, const Weight& lam, int root);

bool is_integral(const Weight& w);
bool is_dominant(const Weight& w);
/// Dominance/integrality at the given (1-based) nodes only.
bool is_dominant_at(const Weight& w, const std::vector<int>& nodes);
bool is_integral_at(const Weight& w, const std::vector<int>& nodes);

/// lam is regular iff <lam + rho, alpha^vee> != 0 for all positive roots.
bool character_is_regular(const RootSystem& rs, const Weight& lam);

/// Element of the Weyl group S_{rank+1}.  Stored as the permutation
/// pi (0-based, w(eps_i) = eps_{pi[i]}); the canonical reduced word is
/// recomputed on demand, taking the smallest left descent first.
struct WeylWord {
  std::vector<int> perm;

  static WeylWord identity(int rank);
  static WeylWord simple(int rank, int i);                    ///< s_i, 1-based node
  static WeylWord from_word(int rank, const std::vector<int>& word);

  int length() const;  ///< number of inversions
  bool is_identity() const;
  std::vector<int> reduced_word() const;  ///< canonical, 1-based nodes

  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord& a, const WeylWord& b) { return a.perm == b.perm; }
  friend bool operator<(const WeylWord& a, const WeylWord& b) { return a.perm < b.perm; }
};

/// Linear action of w on a weight.
Weight weyl_apply(const RootSystem& rs, const WeylWord& w, const Weight& lam);

/// Affine action w.lam = w(lam + rho) - rho.
Weight affine_action(const RootSystem& rs, const WeylWord& w, const Weight& lam);

/// Affine action with a caller-supplied rho (used for Levi subsystems,
/// where rho is the half-sum of the Levi positive roots).
Weight affine_action_with_rho(const RootSystem& rs, const WeylWord& w, const Weight& lam,
                              const Weight& rho);

/// Number of positive roots sent to negative roots by w.
int inversions_on_roots(const RootSystem& rs, const WeylWord& w);

/// Minimal-length coset representatives of W_l \ W, graded by length, where
/// W_l is generated by the reflections at the uncrossed nodes.  Grade 0 is
/// the identity; within a grade, words are sorted by permutation.
std::vector<std::vector<WeylWord>> hasse_quotient(const RootSystem& rs,
                                                  const std::vector<int>& crossed);

/// Relative variant: representatives inside the subgroup W_r generated by
/// the nodes in `sub_nodes`, minimal for the parabolic generated by
/// `levi_nodes` (levi_nodes must be contained in sub_nodes).
std::vector<std::vector<WeylWord>> hasse_quotient_in(const RootSystem& rs,
                                                     const std::vector<int>& sub_nodes,
                                                     const std::vector<int>& levi_nodes);

}  // namespace bgg

#endif
