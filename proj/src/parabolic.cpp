#include "bgg/parabolic.hpp"

#include <algorithm>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

int root_grade(const RootSystem& rs, int root, const std::vector<int>& crossed) {
  auto [lo, hi] = rs.spans[static_cast<size_t>(root)];
  int g = 0;
  for (int n : crossed) {
    if (n >= lo && n <= hi) ++g;
  }
  return g;
}

std::vector<int> roots_supported_on(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<int> out;
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    auto [lo, hi] = rs.spans[r];
    bool ok = true;
    for (int j = lo; j <= hi; ++j) {
      if (!contains(nodes, j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<int>(r));
  }
  return out;
}

ParabolicPair build_pair(const RootSystem& rs, const std::vector<int>& crossed_p,
                         const std::vector<int>& crossed_q) {
  ParabolicPair pair;
  pair.rs = rs;
  pair.crossed_p = sorted_unique(crossed_p);
  pair.crossed_q = sorted_unique(crossed_q);
  for (int n : pair.crossed_q) {
    if (n < 1 || n > rs.rank) throw ParseError("build_pair: node out of range");
  }
  for (int n : pair.crossed_p) {
    if (!contains(pair.crossed_q, n)) {
      throw ParseError("build_pair: crossed_p must be contained in crossed_q");
    }
  }
  for (int i = 1; i <= rs.rank; ++i) {
    if (!contains(pair.crossed_p, i)) pair.uncrossed_p.push_back(i);
    if (!contains(pair.crossed_q, i)) pair.uncrossed_q.push_back(i);
  }
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    int ri = static_cast<int>(r);
    bool in_p = root_grade(rs, ri, pair.crossed_p) > 0;
    bool in_q = root_grade(rs, ri, pair.crossed_q) > 0;
    if (in_p) pair.roots_p_plus.push_back(ri);
    if (in_q) pair.roots_q_plus.push_back(ri);
    if (in_q && !in_p) pair.roots_rel.push_back(ri);
  }
  // relative basis ordered by grading then by root order
  std::stable_sort(pair.roots_rel.begin(), pair.roots_rel.end(), [&](int a, int b) {
    return root_grade(rs, a, pair.crossed_q) < root_grade(rs, b, pair.crossed_q);
  });
  for (int r : pair.roots_rel) pair.grade_rel.push_back(root_grade(rs, r, pair.crossed_q));
  return pair;
}

Rational ParabolicPair::grade_of(const Weight& w) const {
  // value on the relative grading element: sum over relative crossed nodes i
  // of (C^{-1} w)_i, since the dual basis element of alpha_i has coordinates
  // given by row i of the inverse Cartan matrix.
  Rational acc(0);
  for (int n : crossed_q) {
    if (std::find(crossed_p.begin(), crossed_p.end(), n) != crossed_p.end()) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (!w(j).is_zero()) acc += rs.gram(n - 1, j) * w(j);
    }
  }
  return acc;
}

QMat mat_e(const RootSystem& rs, int root) {
  auto [lo, hi] = rs.spans[static_cast<size_t>(root)];
  QMat m = QMat::Zero(rs.rank + 1, rs.rank + 1);
  m(lo - 1, hi) = Rational(1);
  return m;
}

QMat mat_f(const RootSystem& rs, int root) {
  auto [lo, hi] = rs.spans[static_cast<size_t>(root)];
  QMat m = QMat::Zero(rs.rank + 1, rs.rank + 1);
  m(hi, lo - 1) = Rational(1);
  return m;
}

QMat mat_h(const RootSystem& rs, int node) {
  QMat m = QMat::Zero(rs.rank + 1, rs.rank + 1);
  m(node - 1, node - 1) = Rational(1);
  m(node, node) = Rational(-1);
  return m;
}

QMat bracket(const QMat& a, const QMat& b) { return a * b - b * a; }

AlgebraCoords algebra_coords(const RootSystem& rs, const QMat& x) {
  AlgebraCoords c;
  const int n = rs.rank;
  c.h = QVec::Zero(n);
  c.e = QVec::Zero(static_cast<Eigen::Index>(rs.positive_roots.size()));
  c.f = QVec::Zero(static_cast<Eigen::Index>(rs.positive_roots.size()));
  // diagonal part: partial sums recover h-coordinates
  Rational run(0);
  for (int i = 0; i < n; ++i) {
    run += x(i, i);
    c.h(i) = run;
  }
  for (size_t r = 0; r < rs.spans.size(); ++r) {
    auto [lo, hi] = rs.spans[r];
    c.e(static_cast<Eigen::Index>(r)) = x(lo - 1, hi);
    c.f(static_cast<Eigen::Index>(r)) = x(hi, lo - 1);
  }
  return c;
}

InvariantPairing invariant_pairing(const ParabolicPair& pair) {
  InvariantPairing ip;
  const RootSystem& rs = pair.rs;
  for (int i = 1; i <= rs.rank; ++i) {
    ip.basis.push_back(mat_h(rs, i));
    ip.basis_labels.push_back("h" + std::to_string(i));
    ip.basis_weights.push_back(Weight::Zero(rs.rank));
  }
  std::vector<int> levi_roots = roots_supported_on(rs, pair.uncrossed_p);
  for (int r : levi_roots) {
    ip.basis.push_back(mat_e(rs, r));
    auto [lo, hi] = rs.spans[static_cast<size_t>(r)];
    ip.basis_labels.push_back("e[" + std::to_string(lo) + ".." + std::to_string(hi) + "]");
    ip.basis_weights.push_back(rs.positive_roots[static_cast<size_t>(r)]);
  }
  for (int r : levi_roots) {
    ip.basis.push_back(mat_f(rs, r));
    auto [lo, hi] = rs.spans[static_cast<size_t>(r)];
    ip.basis_labels.push_back("f[" + std::to_string(lo) + ".." + std::to_string(hi) + "]");
    ip.basis_weights.push_back(-rs.positive_roots[static_cast<size_t>(r)]);
  }
  const size_t d = ip.basis.size();
  ip.matrix = QMat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      ip.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (ip.basis[i] * ip.basis[j]).trace();
    }
  }
  return ip;
}

std::vector<LeviBlock> levi_blocks(const ParabolicPair& pair) {
  std::vector<LeviBlock> blocks;
  const std::vector<int>& u = pair.uncrossed_p;
  size_t i = 0;
  while (i < u.size()) {
    size_t j = i;
    while (j + 1 < u.size() && u[j + 1] == u[j] + 1) ++j;
    LeviBlock b;
    b.lo = u[i];
    b.hi = u[j];
    b.sub = build_root_system(b.hi - b.lo + 1);
    blocks.push_back(std::move(b));
    i = j + 1;
  }
  return blocks;
}

Weight levi_rho(const RootSystem& rs, const std::vector<int>& uncrossed) {
  Weight rho = Weight::Zero(rs.rank);
  for (int r : roots_supported_on(rs, uncrossed)) {
    rho += rs.positive_roots[static_cast<size_t>(r)];
  }
  return rho * Rational(1, 2);
}

PairSpec parse_pair_spec(const std::string& s) {
  PairSpec spec;
  std::istringstream is(s);
  std::string tok;
  bool have_alg = false;
  auto parse_nodes = [](const std::string& t) {
    std::vector<int> nodes;
    std::string cur;
    for (char ch : t + ",") {
      if (ch == ',') {
        if (!cur.empty()) {
          try {
            nodes.push_back(std::stoi(cur));
          } catch (const std::exception&) {
            throw ParseError("pair spec: bad node '" + cur + "'");
          }
          cur.clear();
        }
      } else {
        cur.push_back(ch);
      }
    }
    return sorted_unique(nodes);
  };
  while (is >> tok) {
    if (!have_alg) {
      if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'a')) {
        throw ParseError("pair spec: expected algebra like 'A3', got '" + tok + "'");
      }
      try {
        spec.rank = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw ParseError("pair spec: bad rank in '" + tok + "'");
      }
      have_alg = true;
    } else if (tok.rfind("p=", 0) == 0) {
      spec.crossed_p = parse_nodes(tok.substr(2));
    } else if (tok.rfind("q=", 0) == 0) {
      spec.crossed_q = parse_nodes(tok.substr(2));
    } else {
      throw ParseError("pair spec: unexpected token '" + tok + "'");
    }
  }
  if (!have_alg) throw ParseError("pair spec: empty");
  return spec;
}

std::string render_pair_spec(const PairSpec& spec) {
  std::ostringstream os;
  os << "A" << spec.rank;
  auto emit = [&os](const char* key, const std::vector<int>& nodes) {
    os << " " << key << "=";
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (i) os << ",";
      os << nodes[i];
    }
  };
  emit("p", spec.crossed_p);
  emit("q", spec.crossed_q);
  return os.str();
}

void verify_pair(const ParabolicPair& pair) {
  const RootSystem& rs = pair.rs;
  auto fail = [](const std::string& msg) { throw InternalError("verify_pair: " + msg); };

  // p_+ contained in q_+
  for (int r : pair.roots_p_plus) {
    if (std::find(pair.roots_q_plus.begin(), pair.roots_q_plus.end(), r) ==
        pair.roots_q_plus.end()) {
      fail("p_+ not contained in q_+");
    }
  }

  // assemble bases as matrices
  std::vector<QMat> p_basis;  // all of p: h + levi e/f + p_+
  for (int i = 1; i <= rs.rank; ++i) p_basis.push_back(mat_h(rs, i));
  for (int r : roots_supported_on(rs, pair.uncrossed_p)) {
    p_basis.push_back(mat_e(rs, r));
    p_basis.push_back(mat_f(rs, r));
  }
  std::vector<QMat> pp_basis;
  for (int r : pair.roots_p_plus) {
    p_basis.push_back(mat_e(rs, r));
    pp_basis.push_back(mat_e(rs, r));
  }

  auto in_pp_span = [&](const QMat& x) {
    AlgebraCoords c = algebra_coords(rs, x);
    for (int i = 0; i < rs.rank; ++i)
      if (!c.h(i).is_zero()) return false;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
      if (!c.f(static_cast<Eigen::Index>(r)).is_zero()) return false;
      bool in_pp = std::find(pair.roots_p_plus.begin(), pair.roots_p_plus.end(),
                             static_cast<int>(r)) != pair.roots_p_plus.end();
      if (!in_pp && !c.e(static_cast<Eigen::Index>(r)).is_zero()) return false;
    }
    return true;
  };

  // [p_+, p] in p_+
  for (const QMat& z : pp_basis) {
    for (const QMat& x : p_basis) {
      if (!in_pp_span(bracket(z, x))) fail("[p_+, p] not contained in p_+");
    }
  }

  // Jacobi identity on a spanning set
  std::vector<QMat> g_basis;
  for (int i = 1; i <= rs.rank; ++i) g_basis.push_back(mat_h(rs, i));
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    g_basis.push_back(mat_e(rs, static_cast<int>(r)));
    g_basis.push_back(mat_f(rs, static_cast<int>(r)));
  }
  for (const QMat& a : g_basis) {
    for (const QMat& b : g_basis) {
      for (const QMat& c : g_basis) {
        QMat j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        if (!is_zero(j)) fail("Jacobi identity failed");
      }
    }
  }

  // induced bracket on q_+/p_+ is representative independent:
  // [p_+, q_+] stays in p_+
  for (const QMat& z : pp_basis) {
    for (int r : pair.roots_q_plus) {
      if (!in_pp_span(bracket(z, mat_e(rs, r)))) fail("[p_+, q_+] escaped p_+");
    }
  }

  // grading compatibility on relative roots
  for (size_t a = 0; a < pair.roots_rel.size(); ++a) {
    for (size_t b = 0; b < pair.roots_rel.size(); ++b) {
      QMat br = bracket(mat_e(rs, pair.roots_rel[a]), mat_e(rs, pair.roots_rel[b]));
      AlgebraCoords c = algebra_coords(rs, br);
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        if (c.e(static_cast<Eigen::Index>(r)).is_zero()) continue;
        int g = root_grade(rs, static_cast<int>(r), pair.crossed_q);
        if (g != pair.grade_rel[a] + pair.grade_rel[b]) fail("bracket grading mismatch");
      }
    }
  }

  // invariant pairing: non-degenerate, ad-invariant, annihilator identity
  InvariantPairing ip = invariant_pairing(pair);
  if (rank_of(ip.matrix) != ip.matrix.rows()) fail("pairing degenerate");
  for (size_t i = 0; i < ip.basis.size(); ++i) {
    for (size_t j = 0; j < ip.basis.size(); ++j) {
      for (size_t k = 0; k < ip.basis.size(); ++k) {
        Rational lhs = (bracket(ip.basis[i], ip.basis[j]) * ip.basis[k]).trace() +
                       (ip.basis[j] * bracket(ip.basis[i], ip.basis[k])).trace();
        if (!lhs.is_zero()) fail("pairing not invariant");
      }
    }
  }
  // annihilator of q/p_+ inside p/p_+ is q_+/p_+: the q-part of the basis is
  // h + levi-of-q e/f + relative e's; its annihilator must be exactly the
  // span of the relative e's.
  {
    std::vector<Eigen::Index> q_cols, rel_cols;
    for (size_t b = 0; b < ip.basis.size(); ++b) {
      AlgebraCoords c = algebra_coords(rs, ip.basis[b]);
      bool has_rel_f = false, is_rel_e = false;
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        bool rel = std::find(pair.roots_rel.begin(), pair.roots_rel.end(), static_cast<int>(r)) !=
                   pair.roots_rel.end();
        if (rel && !c.f(static_cast<Eigen::Index>(r)).is_zero()) has_rel_f = true;
        if (rel && !c.e(static_cast<Eigen::Index>(r)).is_zero()) is_rel_e = true;
      }
      if (!has_rel_f) q_cols.push_back(static_cast<Eigen::Index>(b));
      if (is_rel_e) rel_cols.push_back(static_cast<Eigen::Index>(b));
    }
    QMat pairing_block = select_rows(ip.matrix, q_cols);
    QMat ann = kernel_basis(pairing_block);
    if (ann.cols() != static_cast<Eigen::Index>(rel_cols.size())) {
      fail("annihilator dimension mismatch");
    }
    QMat rel_span = QMat::Zero(ip.matrix.rows(), static_cast<Eigen::Index>(rel_cols.size()));
    for (size_t j = 0; j < rel_cols.size(); ++j) rel_span(rel_cols[j], static_cast<Eigen::Index>(j)) = Rational(1);
    if (!span_contains(rel_span, ann)) fail("annihilator is not q_+/p_+");
  }

  // weight multiset duality between (q_+/p_+)^* and p/q
  {
    std::vector<std::string> dual_weights, pq_weights;
    for (int r : pair.roots_rel) {
      dual_weights.push_back(weight_str(-rs.positive_roots[static_cast<size_t>(r)]));
      pq_weights.push_back(weight_str(-rs.positive_roots[static_cast<size_t>(r)]));
    }
    std::sort(dual_weights.begin(), dual_weights.end());
    std::sort(pq_weights.begin(), pq_weights.end());
    if (dual_weights != pq_weights) fail("duality weight multisets differ");
  }
}

}  // namespace bgg
