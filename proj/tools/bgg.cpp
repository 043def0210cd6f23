// Command-line front end: every operation of the library behind a
// subcommand, reports as versioned JSON on stdout.
//
// Exit codes: 0 success, 2 parse errors, 3 representability errors,
// 4 internal-consistency errors.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "bgg/errors.hpp"
#include "bgg/json_io.hpp"
#include "bgg/selftest.hpp"

namespace {

using namespace bgg;

struct PairArgs {
  std::string algebra;
  std::string p_nodes, q_nodes;
  std::string pair_string;

  PairSpec spec() const {
    if (!pair_string.empty()) return parse_pair_spec(pair_string);
    if (algebra.empty()) throw ParseError("missing algebra (e.g. A3)");
    std::string s = algebra;
    if (!p_nodes.empty()) s += " p=" + p_nodes;
    if (!q_nodes.empty()) s += " q=" + q_nodes;
    return parse_pair_spec(s);
  }
};

void add_pair_options(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("algebra", args.algebra, "algebra, e.g. A3");
  cmd->add_option("--p", args.p_nodes, "crossed nodes of p (comma separated; empty for p = g)");
  cmd->add_option("--q", args.q_nodes, "crossed nodes of q (comma separated)");
  cmd->add_option("--pair", args.pair_string, "full pair spec, e.g. 'A3 p=1 q=1,2'");
}

ParabolicPair build_from(const PairArgs& args) {
  PairSpec spec = args.spec();
  RootSystem rs = build_root_system(spec.rank);
  return build_pair(rs, spec.crossed_p, spec.crossed_q);
}

std::vector<int> parse_nodes(const std::string& csv) {
  std::vector<int> nodes;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) nodes.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return nodes;
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(1) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    os << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact relative homology and splitting machinery for nested parabolics in type A"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");
  bool plain = false;
  app.add_flag("--plain", plain, "terse text output with crossed-node weight rendering");

  // rootsys (with an optional parabolic pair dump)
  PairArgs rootsys_args;
  auto* c_rootsys = app.add_subcommand("rootsys", "root system data, optionally with a pair dump");
  add_pair_options(c_rootsys, rootsys_args);

  // hasse
  auto* c_hasse = app.add_subcommand("hasse", "minimal coset representatives, graded by length");
  std::string hasse_algebra, hasse_crossed;
  c_hasse->add_option("algebra", hasse_algebra, "algebra, e.g. A3")->required();
  c_hasse->add_option("--crossed", hasse_crossed, "crossed nodes");

  // orbit
  auto* c_orbit = app.add_subcommand("orbit", "affine action of a Weyl word on a weight");
  std::string orbit_algebra, orbit_word, orbit_weight;
  c_orbit->add_option("algebra", orbit_algebra)->required();
  c_orbit->add_option("--word", orbit_word, "reduced word, e.g. 1,2");
  c_orbit->add_option("--weight", orbit_weight, "weight coordinates")->required();

  // homology
  PairArgs hom_args;
  auto* c_hom = app.add_subcommand("homology", "relative chain complex and homology");
  add_pair_options(c_hom, hom_args);
  std::string hom_hw;
  bool hom_dump_coeff = false;
  c_hom->add_option("--hw", hom_hw, "coefficient weight label")->required();
  c_hom->add_flag("--dump-coefficient", hom_dump_coeff,
                  "include the coefficient module (weights and sparse generator matrices)");

  // spectrum
  PairArgs spec_args;
  auto* c_spec = app.add_subcommand("spectrum", "nonzero Laplacian eigenvalues per grade");
  add_pair_options(c_spec, spec_args);
  std::string spec_hw;
  c_spec->add_option("--hw", spec_hw, "coefficient weight label")->required();

  // kostant-check
  PairArgs kc_args;
  auto* c_kc = app.add_subcommand("kostant-check", "calibrated Casimir eigenvalue comparison");
  add_pair_options(c_kc, kc_args);
  std::string kc_hw;
  c_kc->add_option("--hw", kc_hw, "coefficient weight label")->required();

  // kunneth
  PairArgs kun_args;
  auto* c_kun = app.add_subcommand("kunneth", "two-step homology factorization check");
  add_pair_options(c_kun, kun_args);
  std::string kun_hw;
  c_kun->add_option("--hw", kun_hw, "dominant integral weight of g")->required();

  // splitting
  PairArgs split_args;
  auto* c_split = app.add_subcommand("splitting", "splitting operator identities");
  add_pair_options(c_split, split_args);
  std::string split_hw;
  int split_degree = 0;
  std::uint64_t split_seed = 0;
  c_split->add_option("--hw", split_hw)->required();
  c_split->add_option("--degree", split_degree, "source degree");
  c_split->add_option("--seed", split_seed, "perturbation seed (0 = model operator)");

  // qop
  PairArgs q_args;
  auto* c_q = app.add_subcommand("qop", "inverse operator by both constructions");
  add_pair_options(c_q, q_args);
  std::string q_hw;
  int q_degree = 0;
  std::uint64_t q_seed = 0;
  c_q->add_option("--hw", q_hw)->required();
  c_q->add_option("--degree", q_degree);
  c_q->add_option("--seed", q_seed);

  // compressed
  PairArgs comp_args;
  auto* c_comp = app.add_subcommand("compressed", "compressed operator between homologies");
  add_pair_options(c_comp, comp_args);
  std::string comp_hw;
  int comp_degree = 0;
  std::uint64_t comp_seed = 0;
  c_comp->add_option("--hw", comp_hw)->required();
  c_comp->add_option("--degree", comp_degree);
  c_comp->add_option("--seed", comp_seed);

  // insertion
  PairArgs ins_args;
  auto* c_ins = app.add_subcommand("insertion", "insertion-stability check");
  add_pair_options(c_ins, ins_args);
  std::string ins_mid = "1", ins_module = "lambda2";
  c_ins->add_option("--mid", ins_mid, "crossed nodes of the intermediate parabolic");
  c_ins->add_option("--module", ins_module, "lambda2 | mixed | full");

  // pathgeom
  auto* c_path = app.add_subcommand("pathgeom", "five-dimensional path geometry sequences");
  std::string path_w = "0";
  int path_k = 0, path_l = 0;
  bool path_validate = false;
  c_path->add_option("--w", path_w, "density parameter (rational)");
  c_path->add_option("--k", path_k);
  c_path->add_option("--l", path_l);
  c_path->add_flag("--validate", path_validate, "cross-check against the homology engine");

  // selftest
  auto* c_self = app.add_subcommand("selftest", "run the full acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*c_rootsys) {
      PairSpec spec = rootsys_args.spec();
      RootSystem rs = build_root_system(spec.rank);
      Json j = root_system_json(rs);
      if (!spec.crossed_q.empty() || !spec.crossed_p.empty()) {
        j["parabolic"] = pair_json(build_pair(rs, spec.crossed_p, spec.crossed_q));
      }
      emit(j, out_path);
    } else if (*c_hasse) {
      RootSystem rs = build_root_system(parse_pair_spec(hasse_algebra).rank);
      Json j = hasse_json(hasse_quotient(rs, parse_nodes(hasse_crossed)));
      j["schema"] = kSchema;
      emit(j, out_path);
    } else if (*c_orbit) {
      RootSystem rs = build_root_system(parse_pair_spec(orbit_algebra).rank);
      WeylWord w = WeylWord::from_word(rs.rank, parse_nodes(orbit_word));
      Weight lam = parse_weight(orbit_weight, rs.rank);
      Json j;
      j["schema"] = kSchema;
      j["word"] = word_json(w);
      j["weight"] = weight_json(lam);
      j["result"] = weight_json(affine_action(rs, w, lam));
      emit(j, out_path);
    } else if (*c_hom) {
      ParabolicPair pair = build_from(hom_args);
      Weight lam = parse_weight(hom_hw, pair.rs.rank);
      RelativeComplex cx = build_complex_from_label(pair, lam);
      HomologySummary s = homology(cx);
      if (plain) {
        std::ostringstream os;
        os << "pair " << render_pair_spec({pair.rs.rank, pair.crossed_p, pair.crossed_q})
           << "  coefficient " << weight_plain(lam, pair.crossed_p) << "\n";
        for (size_t k = 0; k < s.per_degree.size(); ++k) {
          os << "H_" << k << ":";
          for (const HomologySummand& sm : s.per_degree[k]) {
            os << " " << weight_plain(sm.label, pair.crossed_q) << " x" << sm.multiplicity
               << " (dim " << sm.dimension << ")";
          }
          if (s.per_degree[k].empty()) os << " 0";
          os << "\n";
        }
        std::cout << os.str();
      } else {
        Json j = homology_json(cx, s);
        Json pred = Json::array();
        for (const auto& degree : kostant_predict(pair, lam)) {
          Json d = Json::array();
          for (const Weight& w : degree) d.push_back(weight_json(w));
          pred.push_back(std::move(d));
        }
        j["predicted"] = std::move(pred);
        if (hom_dump_coeff) j["coefficient_module"] = module_json(cx.coeff);
        emit(j, out_path);
      }
    } else if (*c_spec) {
      ParabolicPair pair = build_from(spec_args);
      RelativeComplex cx = build_complex_from_label(pair, parse_weight(spec_hw, pair.rs.rank));
      emit(spectrum_json(cx), out_path);
    } else if (*c_kc) {
      ParabolicPair pair = build_from(kc_args);
      RelativeComplex cx = build_complex_from_label(pair, parse_weight(kc_hw, pair.rs.rank));
      emit(casimir_json(casimir_consistency(cx)), out_path);
    } else if (*c_kun) {
      ParabolicPair pair = build_from(kun_args);
      Weight lam = parse_weight(kun_hw, pair.rs.rank);
      emit(kunneth_json(kunneth_compare(pair.rs, pair, lam)), out_path);
    } else if (*c_split) {
      ParabolicPair pair = build_from(split_args);
      RelativeComplex cx = build_complex_from_label(pair, parse_weight(split_hw, pair.rs.rank));
      FilteredOperator op = make_compressable(cx, split_degree, split_seed);
      verify_filtered_operator(cx, op);
      OperatorPolynomial s = splitting_operator(cx, op);
      HarmonicProjector proj = harmonic_projector(cx, split_degree);
      QMat m = cx.d_down[static_cast<size_t>(split_degree + 1)] * op.matrix;
      QMat s_ker = s.matrix * proj.kernel;
      Json j;
      j["schema"] = kSchema;
      j["degree"] = split_degree;
      j["seed"] = split_seed;
      Json factors = Json::array();
      for (const auto& [a, grade] : s.factors) {
        factors.push_back(Json::array({grade.to_string(), a.to_string()}));
      }
      j["factors"] = std::move(factors);
      Json verdicts;
      verdicts["projection_preserved"] =
          is_zero(proj.project_matrix(s_ker) - proj.project_matrix(proj.kernel));
      verdicts["composition_vanishes"] = is_zero(m * s_ker);
      verdicts["vanishes_on_image"] = is_zero(s.matrix * proj.im_down);
      verdicts["uniqueness_perturbation"] =
          rank_of(m * proj.im_down) == proj.im_down.cols();
      j["verdicts"] = std::move(verdicts);
      bool all = true;
      for (const auto& [key, v] : j["verdicts"].items()) all = all && v.get<bool>();
      j["all_pass"] = all;
      emit(j, out_path);
    } else if (*c_q) {
      ParabolicPair pair = build_from(q_args);
      RelativeComplex cx = build_complex_from_label(pair, parse_weight(q_hw, pair.rs.rank));
      FilteredOperator op = make_compressable(cx, q_degree, q_seed);
      InverseOperator qe = q_operator(cx, op, QMethod::EigenPolynomial);
      InverseOperator qn = q_operator(cx, op, QMethod::NeumannSeries);
      QMat m = cx.d_down[static_cast<size_t>(q_degree + 1)] * op.matrix;
      Json j;
      j["schema"] = kSchema;
      j["degree"] = q_degree;
      j["seed"] = q_seed;
      Json factors = Json::array();
      if (qe.polynomial) {
        for (const auto& [a, grade] : qe.polynomial->factors) {
          factors.push_back(Json::array({grade.to_string(), a.to_string()}));
        }
      }
      j["factors"] = std::move(factors);
      Json verdicts;
      verdicts["right_inverse_polynomial"] = is_zero(m * qe.on_image - qe.image_basis_cols);
      verdicts["right_inverse_neumann"] = is_zero(m * qn.on_image - qn.image_basis_cols);
      verdicts["methods_agree"] = is_zero(qe.on_image - qn.on_image);
      verdicts["splitting_identity"] = splitting_matches_inverse(cx, op);
      j["verdicts"] = std::move(verdicts);
      bool all = true;
      for (const auto& [key, v] : j["verdicts"].items()) all = all && v.get<bool>();
      j["all_pass"] = all;
      emit(j, out_path);
    } else if (*c_comp) {
      ParabolicPair pair = build_from(comp_args);
      RelativeComplex cx = build_complex_from_label(pair, parse_weight(comp_hw, pair.rs.rank));
      FilteredOperator op = make_compressable(cx, comp_degree, comp_seed);
      CompressedOperator c = compressed_operator(cx, op);
      Json j;
      j["schema"] = kSchema;
      j["degree"] = comp_degree;
      j["seed"] = comp_seed;
      j["matrix"] = matrix_json(c.matrix);
      j["source_dim"] = c.harmonic_source.cols();
      j["target_dim"] = c.harmonic_target.cols();
      emit(j, out_path);
    } else if (*c_ins) {
      ParabolicPair pair = build_from(ins_args);
      AdjointModule adj = make_adjoint_module(pair);
      RelativeComplex cxA = build_complex(pair, adj.module);
      QMat f;
      if (ins_module == "lambda2") {
        f = lambda2_mid_span(cxA, parse_nodes(ins_mid));
      } else if (ins_module == "mixed") {
        f = mixed_mid_span(cxA, adj, parse_nodes(ins_mid));
      } else if (ins_module == "full") {
        f = identity(cxA.dim(2));
      } else {
        throw ParseError("insertion: unknown module '" + ins_module + "'");
      }
      InsertionCheck c = insertion_stability(cxA, 2, f, cxA, adj, f);
      Json j;
      j["schema"] = kSchema;
      j["module"] = ins_module;
      j["span_dim"] = f.cols();
      j["stable"] = c.stable;
      if (!c.stable) {
        j["witness_phi"] = c.witness_phi;
        j["witness_psi"] = c.witness_psi;
      }
      emit(j, out_path);
    } else if (*c_path) {
      pathgeom::PathGeomCase c{Rational::from_string(path_w), path_k, path_l};
      if (plain) {
        pathgeom::PathSequence s = pathgeom::sequence(c);
        std::vector<int> crossed = {1, 2};
        std::ostringstream os;
        os << "w=" << c.w << " k=" << c.k << " l=" << c.l << "\n";
        for (int i = 0; i < 3; ++i) {
          os << "W_" << i << " = " << s.bundles[static_cast<size_t>(i)].rendered << "  "
             << weight_plain(s.weights[static_cast<size_t>(i)], crossed) << "\n";
        }
        os << "orders " << s.orders[0] << ", " << s.orders[1] << "; class "
           << pathgeom::class_name(pathgeom::classify_subsequence(c));
        pathgeom::SingularityInfo si = pathgeom::singular_character(c);
        if (si.singular) os << "; singular (wall " << si.wall << ")";
        os << "; resolves " << pathgeom::tensor_bundle(c).rendered << "\n";
        std::cout << os.str();
      } else {
        emit(path_case_json(c, path_validate), out_path);
      }
    } else if (*c_self) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<CriterionResult> results = run_selftest();
      auto t1 = std::chrono::steady_clock::now();
      for (const CriterionResult& r : results) {
        std::cerr << "criterion " << r.id << " [" << r.name << "]: "
                  << (r.pass ? "PASS" : "FAIL") << " in " << r.millis << " ms\n";
      }
      std::cerr << "selftest: " << results.size() << " criteria in "
                << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                << " ms\n";
      Json j = selftest_report(results);
      emit(j, out_path);
      if (!j["all_pass"].get<bool>()) return 4;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json err{{"error", e.what()}, {"kind", "parse"}};
    std::cout << err.dump(1) << "\n";
    return 2;
  } catch (const RepresentabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json err{{"error", e.what()}, {"kind", "representability"}};
    std::cout << err.dump(1) << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json err{{"error", e.what()}, {"kind", "internal"}};
    std::cout << err.dump(1) << "\n";
    return 4;
  }
  return 0;
}
