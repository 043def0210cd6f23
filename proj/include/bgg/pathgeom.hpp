#ifndef BGG_PATHGEOM_HPP
#define BGG_PATHGEOM_HPP

#include <array>
#include <string>

#include "bgg/complex.hpp"

namespace bgg {
namespace pathgeom {

/// Parameters of a sequence instance on a five-dimensional generalized path
/// geometry: a density weight w (rational) and two symmetric-power degrees.
struct PathGeomCase {
  Rational w;
  int k = 0;
  int l = 0;
};

/// Bundle name S^c V*(a, b); c = 0 renders as a plain density bundle E(a, b).
struct BundleName {
  int sym_degree = 0;
  Rational density_a, density_b;
  std::string rendered;
};

BundleName make_bundle_name(int sym_degree, const Rational& a, const Rational& b);

/// Weight of the Levi module a bundle name stands for: (A + c, B - 2c, c).
Weight bundle_to_weight(const BundleName& b);

/// Bundle name realizing a weight (a, b, c) with c a nonnegative integer.
BundleName weight_to_bundle(const Weight& w);

/// The three-term sequence attached to (w, k, l): homology weights, bundle
/// names and the orders of the two operators.  The orders are symbol-level
/// metadata, not recomputed facts.
struct PathSequence {
  std::array<Weight, 3> weights;
  std::array<BundleName, 3> bundles;
  std::array<int, 2> orders;
};
PathSequence sequence(const PathGeomCase& c);

/// Containment in a standard sequence: exactly one of four mutually
/// exclusive window conditions, available only for integral w.
enum class SubsequenceClass { A, B, C, D, None };
SubsequenceClass classify_subsequence(const PathGeomCase& c);
std::string class_name(SubsequenceClass c);

/// Singular infinitesimal character walls: w = -1-k, w = -2-k-l,
/// w = -3-2k-l.  wall = 0 when regular.
struct SingularityInfo {
  bool singular = false;
  int wall = 0;
};
SingularityInfo singular_character(const PathGeomCase& c);

/// The tensor bundle on the three-dimensional leaf space whose sections the
/// sequence resolves in the flat situation: the trace-free part of
/// S^l T*N (x) S^k TN twisted by the density [w + 2l].  The attached weight
/// is the one the bundle induces for the intermediate parabolic, which
/// round-trips to the degree-0 weight of the sequence.
struct TensorBundleLabel {
  int tn_power = 0;     ///< k
  int tstar_power = 0;  ///< l
  Rational density;     ///< w + 2l
  std::string rendered;
  Weight weight;
  std::string note;
};
TensorBundleLabel tensor_bundle(const PathGeomCase& c);

/// Cross-validation against the homology engine: the three sequence weights
/// must be exactly the per-degree homology labels of the sl(4) line/flag
/// pair with coefficient label (w+k, l, k).  Requires integral w.
struct EngineValidation {
  bool match = false;
  std::vector<std::vector<std::string>> engine;
  std::vector<std::vector<std::string>> predicted;
};
EngineValidation validate_with_engine(const PathGeomCase& c);

}  // namespace pathgeom
}  // namespace bgg

#endif
