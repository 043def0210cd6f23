#ifndef BGG_JSON_IO_HPP
#define BGG_JSON_IO_HPP

#include <json.hpp>

#include "bgg/complex.hpp"
#include "bgg/machine.hpp"
#include "bgg/pathgeom.hpp"

namespace bgg {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "bgg/1";

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j, int rank);
Weight parse_weight(const std::string& csv, int rank);

Json word_json(const WeylWord& w);

/// Sparse triplet form [[row, col, "num/den"], ...].
Json matrix_json(const QMat& m);

Json root_system_json(const RootSystem& rs);
/// Bases of the nilradicals and the structure constants of the brackets
/// between the stored basis vectors.
Json pair_json(const ParabolicPair& pair);
Json module_json(const WeightModule& m);
Json hasse_json(const std::vector<std::vector<WeylWord>>& graded);
Json homology_json(const RelativeComplex& cx, const HomologySummary& s);

/// Dynkin-coefficient rendering with markers on the crossed nodes,
/// e.g. "(1x,-2x,1)" for the crossed set {1,2}.
std::string weight_plain(const Weight& w, const std::vector<int>& crossed);
Json spectrum_json(const RelativeComplex& cx);
Json casimir_json(const CasimirConsistency& c);
Json kunneth_json(const KunnethReport& r);
Json sequence_report_json(const SequenceReport& r);
Json path_case_json(const pathgeom::PathGeomCase& c, bool validate);

}  // namespace bgg

#endif
