#include "bgg/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w(i).to_string());
  return a;
}

Weight weight_from_json(const Json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) {
    throw ParseError("weight: expected an array of " + std::to_string(rank) + " rationals");
  }
  Weight w = Weight::Zero(rank);
  for (int i = 0; i < rank; ++i) w(i) = Rational::from_string(j[static_cast<size_t>(i)].get<std::string>());
  return w;
}

Weight parse_weight(const std::string& csv, int rank) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (static_cast<int>(parts.size()) != rank) {
    throw ParseError("weight '" + csv + "': expected " + std::to_string(rank) + " coordinates");
  }
  Weight w = Weight::Zero(rank);
  for (int i = 0; i < rank; ++i) {
    try {
      w(i) = Rational::from_string(parts[static_cast<size_t>(i)]);
    } catch (const std::exception&) {
      throw ParseError("weight '" + csv + "': bad coordinate '" + parts[static_cast<size_t>(i)] + "'");
    }
  }
  return w;
}

Json word_json(const WeylWord& w) {
  Json a = Json::array();
  for (int i : w.reduced_word()) a.push_back(i);
  return a;
}

Json matrix_json(const QMat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json trip = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) trip.push_back(Json::array({r, c, m(r, c).to_string()}));
    }
  }
  j["entries"] = std::move(trip);
  return j;
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "A" + std::to_string(rs.rank);
  j["rank"] = rs.rank;
  Json roots = Json::array();
  for (const Weight& a : rs.positive_roots) roots.push_back(weight_json(a));
  j["positive_roots"] = std::move(roots);
  j["rho"] = weight_json(rs.rho);
  Json cart = Json::array();
  for (int i = 0; i < rs.rank; ++i) {
    Json row = Json::array();
    for (int k = 0; k < rs.rank; ++k) row.push_back(rs.cartan(i, k));
    cart.push_back(std::move(row));
  }
  j["cartan"] = std::move(cart);
  return j;
}

Json pair_json(const ParabolicPair& pair) {
  const RootSystem& rs = pair.rs;
  Json j;
  j["schema"] = kSchema;
  PairSpec spec{rs.rank, pair.crossed_p, pair.crossed_q};
  j["pair"] = render_pair_spec(spec);
  j["dim_p_plus"] = pair.dim_p_plus();
  j["dim_q_plus"] = pair.dim_q_plus();
  j["dim_relative"] = pair.dim_rel();
  auto root_list = [&](const std::vector<int>& idx) {
    Json a = Json::array();
    for (int r : idx) a.push_back(weight_json(rs.positive_roots[static_cast<size_t>(r)]));
    return a;
  };
  j["basis_p_plus"] = root_list(pair.roots_p_plus);
  j["basis_q_plus"] = root_list(pair.roots_q_plus);
  Json rel = Json::array();
  for (size_t i = 0; i < pair.roots_rel.size(); ++i) {
    Json e;
    e["root"] = weight_json(rs.positive_roots[static_cast<size_t>(pair.roots_rel[i])]);
    e["grade"] = pair.grade_rel[i];
    rel.push_back(std::move(e));
  }
  j["relative_basis"] = std::move(rel);
  // structure constants of the brackets among the q_+ root vectors:
  // [e_a, e_b] = sum_c N_{ab}^c e_c
  Json sc = Json::array();
  for (size_t a = 0; a < pair.roots_q_plus.size(); ++a) {
    for (size_t b = a + 1; b < pair.roots_q_plus.size(); ++b) {
      QMat br = bracket(mat_e(rs, pair.roots_q_plus[a]), mat_e(rs, pair.roots_q_plus[b]));
      AlgebraCoords c = algebra_coords(rs, br);
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const Rational& v = c.e(static_cast<Eigen::Index>(r));
        if (!v.is_zero()) {
          sc.push_back(Json::array(
              {static_cast<int>(a), static_cast<int>(b), static_cast<int>(r), v.to_string()}));
        }
      }
    }
  }
  j["structure_constants_q_plus"] = std::move(sc);
  return j;
}

std::string weight_plain(const Weight& w, const std::vector<int>& crossed) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w(i).to_string();
    if (std::find(crossed.begin(), crossed.end(), static_cast<int>(i) + 1) != crossed.end()) {
      os << "x";
    }
  }
  os << ")";
  return os.str();
}

Json module_json(const WeightModule& m) {
  Json j;
  j["schema"] = kSchema;
  j["dim"] = m.dim();
  j["acting_nodes"] = m.acting_nodes;
  j["labels"] = m.labels;
  Json ws = Json::array();
  for (const Weight& w : m.weights) ws.push_back(weight_json(w));
  j["weights"] = std::move(ws);
  Json gens;
  for (int n : m.acting_nodes) {
    Json g;
    g["e"] = matrix_json(m.E.at(n));
    g["f"] = matrix_json(m.F.at(n));
    gens[std::to_string(n)] = std::move(g);
  }
  j["generators"] = std::move(gens);
  return j;
}

Json hasse_json(const std::vector<std::vector<WeylWord>>& graded) {
  Json j;
  j["schema"] = kSchema;
  Json by_length = Json::array();
  size_t total = 0;
  for (const auto& grade : graded) {
    Json words = Json::array();
    for (const WeylWord& w : grade) words.push_back(word_json(w));
    total += grade.size();
    by_length.push_back(std::move(words));
  }
  j["words_by_length"] = std::move(by_length);
  j["count"] = total;
  return j;
}

Json homology_json(const RelativeComplex& cx, const HomologySummary& s) {
  Json j;
  j["schema"] = kSchema;
  PairSpec spec{cx.pair.rs.rank, cx.pair.crossed_p, cx.pair.crossed_q};
  j["pair"] = render_pair_spec(spec);
  if (cx.coeff_label) j["coefficient"] = weight_json(*cx.coeff_label);
  Json degrees = Json::array();
  for (size_t k = 0; k < s.per_degree.size(); ++k) {
    Json d;
    d["degree"] = k;
    d["chain_dim"] = s.hodge[k].chain;
    Json hodge;
    hodge["im_codifferential"] = s.hodge[k].im_down;
    hodge["harmonic"] = s.hodge[k].harmonic;
    hodge["im_differential"] = s.hodge[k].im_up;
    d["hodge"] = std::move(hodge);
    Json sums = Json::array();
    for (const HomologySummand& sm : s.per_degree[k]) {
      Json e;
      e["weight"] = weight_json(sm.label);
      e["multiplicity"] = sm.multiplicity;
      e["dimension"] = sm.dimension.to_string();
      sums.push_back(std::move(e));
    }
    d["summands"] = std::move(sums);
    Json groups = Json::array();
    for (const auto& [grade, vals] : spectrum(cx, static_cast<int>(k))) {
      Json g;
      g["filtration_degree"] = grade.to_string();
      Json vs = Json::array();
      for (const Rational& v : vals) vs.push_back(v.to_string());
      g["eigenvalues"] = std::move(vs);
      groups.push_back(std::move(g));
    }
    d["spectrum"] = std::move(groups);
    degrees.push_back(std::move(d));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json spectrum_json(const RelativeComplex& cx) {
  Json j;
  j["schema"] = kSchema;
  Json degrees = Json::array();
  for (int k = 0; k <= cx.top; ++k) {
    Json d;
    d["degree"] = k;
    Json groups = Json::array();
    for (const auto& [grade, vals] : spectrum(cx, k)) {
      Json g;
      g["filtration_degree"] = grade.to_string();
      Json vs = Json::array();
      for (const Rational& v : vals) vs.push_back(v.to_string());
      g["eigenvalues"] = std::move(vs);
      groups.push_back(std::move(g));
    }
    d["nonzero_eigenvalues"] = std::move(groups);
    degrees.push_back(std::move(d));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json casimir_json(const CasimirConsistency& c) {
  Json j;
  j["schema"] = kSchema;
  j["kappa"] = c.kappa.to_string();
  j["consistent"] = c.consistent;
  Json blocks = Json::array();
  for (const CasimirBlockReport& b : c.blocks) {
    Json e;
    e["degree"] = b.degree;
    e["weight"] = weight_json(b.label);
    e["eigenvalue"] = b.eigenvalue.to_string();
    e["casimir_difference"] = b.casimir_difference.to_string();
    blocks.push_back(std::move(e));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json kunneth_json(const KunnethReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["equal"] = r.equal;
  j["one_step"] = r.left;
  j["two_step"] = r.right;
  return j;
}

Json sequence_report_json(const SequenceReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["laplacian_kernel_in_kernel"] = r.laplacian_kernel_in_kernel;
  j["composition_zero"] = r.composition_zero;
  j["is_complex"] = r.is_complex;
  if (r.is_complex) {
    j["compressed_squares_zero"] = r.compressed_squares_zero;
    j["cohomology_dims"] = r.cohomology_dims;
    j["compressed_cohomology_dims"] = r.compressed_cohomology_dims;
    j["splitting_induces_isomorphism"] = r.splitting_induces_isomorphism;
  }
  return j;
}

Json path_case_json(const pathgeom::PathGeomCase& c, bool validate) {
  using namespace pathgeom;
  Json j;
  j["schema"] = kSchema;
  j["w"] = c.w.to_string();
  j["k"] = c.k;
  j["l"] = c.l;
  PathSequence s = sequence(c);
  Json ws = Json::array(), bs = Json::array();
  for (int i = 0; i < 3; ++i) {
    ws.push_back(weight_json(s.weights[static_cast<size_t>(i)]));
    bs.push_back(s.bundles[static_cast<size_t>(i)].rendered);
  }
  j["weights"] = std::move(ws);
  j["bundles"] = std::move(bs);
  j["orders"] = s.orders;
  j["class"] = class_name(classify_subsequence(c));
  SingularityInfo si = singular_character(c);
  j["singular"] = si.singular;
  j["wall"] = si.wall;
  TensorBundleLabel t = tensor_bundle(c);
  Json tb;
  tb["label"] = t.rendered;
  tb["density"] = t.density.to_string();
  tb["weight"] = weight_json(t.weight);
  tb["note"] = t.note;
  j["tensor_bundle"] = std::move(tb);
  if (validate) {
    EngineValidation v = validate_with_engine(c);
    j["engine_match"] = v.match;
    j["engine_weights"] = v.engine;
  }
  return j;
}

}  // namespace bgg
