#include "bgg/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

bool vec_is_zero(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

// local bracket tables on the relative nilradical and its opposite
struct BracketTables {
  // [x_a, x_b] = sum_c coeff * x_c, keyed by (a, b), local indices
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> e, f;
};

BracketTables rel_brackets(const ParabolicPair& pair) {
  const RootSystem& rs = pair.rs;
  const int n = pair.dim_rel();
  BracketTables t;
  t.e.assign(static_cast<size_t>(n), std::vector<std::vector<std::pair<int, Rational>>>(
                                         static_cast<size_t>(n)));
  t.f = t.e;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      QMat be = bracket(mat_e(rs, pair.roots_rel[static_cast<size_t>(a)]),
                        mat_e(rs, pair.roots_rel[static_cast<size_t>(b)]));
      QMat bf = bracket(mat_f(rs, pair.roots_rel[static_cast<size_t>(a)]),
                        mat_f(rs, pair.roots_rel[static_cast<size_t>(b)]));
      AlgebraCoords ce = algebra_coords(rs, be);
      AlgebraCoords cf = algebra_coords(rs, bf);
      for (int i = 0; i < rs.rank; ++i) {
        if (!ce.h(i).is_zero() || !cf.h(i).is_zero()) {
          throw InternalError("rel_brackets: bracket left the nilradical");
        }
      }
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        Rational ve = ce.e(static_cast<Eigen::Index>(r));
        Rational vf = cf.f(static_cast<Eigen::Index>(r));
        if (ve.is_zero() && vf.is_zero()) continue;
        auto it = std::find(pair.roots_rel.begin(), pair.roots_rel.end(), static_cast<int>(r));
        if (it == pair.roots_rel.end()) {
          throw InternalError("rel_brackets: bracket not supported on relative roots");
        }
        int c = static_cast<int>(it - pair.roots_rel.begin());
        if (!ve.is_zero()) t.e[static_cast<size_t>(a)][static_cast<size_t>(b)].emplace_back(c, ve);
        if (!vf.is_zero()) t.f[static_cast<size_t>(a)][static_cast<size_t>(b)].emplace_back(c, vf);
      }
    }
  }
  return t;
}

int prepend_sort_sign(int c, const std::vector<int>& rest) {
  int cnt = 0;
  for (int r : rest)
    if (r < c) ++cnt;
  return (cnt % 2 == 0) ? 1 : -1;
}

}  // namespace

std::vector<Eigen::Index> RelativeComplex::weight_block(int k, const Weight& w) const {
  std::vector<Eigen::Index> idx;
  const auto& ws = wts[static_cast<size_t>(k)];
  for (size_t i = 0; i < ws.size(); ++i) {
    if (ws[i] == w) idx.push_back(static_cast<Eigen::Index>(i));
  }
  return idx;
}

std::vector<Weight> RelativeComplex::weights_in_degree(int k) const {
  std::map<std::string, Weight> seen;
  for (const Weight& w : wts[static_cast<size_t>(k)]) seen.emplace(weight_str(w), w);
  std::vector<Weight> out;
  for (auto& [s, w] : seen) out.push_back(w);
  return out;
}

QMat chain_operator(const RelativeComplex& cx, int k, const QMat& form_op,
                    const QMat& coeff_op) {
  const int n = cx.top;
  const Eigen::Index vd = cx.coeff.dim();
  auto subs = subsets_of_size(n, k);
  const Eigen::Index dim = cx.dim(k);
  QMat out = QMat::Zero(dim, dim);
  std::map<std::vector<int>, Eigen::Index> index_of;
  for (size_t s = 0; s < subs.size(); ++s) index_of[subs[s]] = static_cast<Eigen::Index>(s) * vd;
  for (size_t s = 0; s < subs.size(); ++s) {
    const auto& sub = subs[s];
    Eigen::Index cbase = static_cast<Eigen::Index>(s) * vd;
    out.block(cbase, cbase, vd, vd) += coeff_op;
    for (size_t pos = 0; pos < sub.size(); ++pos) {
      int src = sub[pos];
      for (int t = 0; t < n; ++t) {
        if (form_op(t, src).is_zero()) continue;
        bool dup = false;
        for (size_t u = 0; u < sub.size(); ++u) {
          if (u != pos && sub[u] == t) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        std::vector<int> ns = sub;
        ns[pos] = t;
        int sign = 1;
        for (size_t u = pos; u > 0 && ns[u] < ns[u - 1]; --u) {
          std::swap(ns[u], ns[u - 1]);
          sign = -sign;
        }
        for (size_t u = pos; u + 1 < ns.size() && ns[u] > ns[u + 1]; ++u) {
          std::swap(ns[u], ns[u + 1]);
          sign = -sign;
        }
        Eigen::Index rbase = index_of.at(ns);
        Rational val = Rational(sign) * form_op(t, src);
        for (Eigen::Index m = 0; m < vd; ++m) out(rbase + m, cbase + m) += val;
      }
    }
  }
  return out;
}

namespace {
RelativeComplex build_complex_impl(const ParabolicPair& pair, const WeightModule& coeff,
                                   int bracket_sign);
}

RelativeComplex build_complex(const ParabolicPair& pair, const WeightModule& coeff) {
  return build_complex_impl(pair, coeff, 1);
}

namespace detail {
RelativeComplex build_complex_with_codifferential_sign(const ParabolicPair& pair,
                                                       const WeightModule& coeff,
                                                       int bracket_sign) {
  return build_complex_impl(pair, coeff, bracket_sign);
}
}  // namespace detail

namespace {
RelativeComplex build_complex_impl(const ParabolicPair& pair, const WeightModule& coeff,
                                   int bracket_sign) {
  const RootSystem& rs = pair.rs;
  if (coeff.rank != rs.rank) throw ParseError("build_complex: coefficient rank mismatch");
  for (int n : pair.uncrossed_p) {
    if (!contains(coeff.acting_nodes, n)) {
      throw RepresentabilityError(
          "build_complex: coefficient does not act on the Levi of p (node " +
          std::to_string(n) + ")");
    }
  }
  // relative module requirement: p_+ must act trivially wherever it acts at all
  for (int r : pair.roots_p_plus) {
    auto [lo, hi] = rs.spans[static_cast<size_t>(r)];
    bool covered = true;
    for (int j = lo; j <= hi; ++j) {
      if (!contains(coeff.acting_nodes, j)) covered = false;
    }
    if (covered && !is_zero(root_action_e(rs, coeff, r))) {
      throw RepresentabilityError("build_complex: coefficient is not relative (p_+ acts)");
    }
  }

  RelativeComplex cx;
  cx.pair = pair;
  cx.coeff = coeff;
  cx.top = pair.dim_rel();
  const int n = cx.top;
  const Eigen::Index vd = coeff.dim();

  // actions of the relative root vectors on the coefficients
  std::vector<QMat> act_e, act_f;
  for (int i = 0; i < n; ++i) {
    act_e.push_back(root_action_e(rs, coeff, pair.roots_rel[static_cast<size_t>(i)]));
    act_f.push_back(root_action_f(rs, coeff, pair.roots_rel[static_cast<size_t>(i)]));
  }
  BracketTables br = rel_brackets(pair);

  // bases, weights, grades
  std::vector<std::map<std::vector<int>, Eigen::Index>> base_of(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto subs = subsets_of_size(n, k);
    std::vector<ChainBasisElement> elems;
    std::vector<Weight> ws;
    std::vector<Rational> gs;
    for (size_t s = 0; s < subs.size(); ++s) {
      base_of[static_cast<size_t>(k)][subs[s]] = static_cast<Eigen::Index>(s) * vd;
      Weight formw = Weight::Zero(rs.rank);
      for (int i : subs[s]) {
        formw += rs.positive_roots[static_cast<size_t>(pair.roots_rel[static_cast<size_t>(i)])];
      }
      for (Eigen::Index m = 0; m < vd; ++m) {
        ChainBasisElement e;
        e.form = subs[s];
        e.coeff = m;
        elems.push_back(e);
        Weight w = formw + coeff.weights[static_cast<size_t>(m)];
        ws.push_back(w);
        gs.push_back(pair.grade_of(w));
      }
    }
    cx.basis.push_back(std::move(elems));
    cx.wts.push_back(std::move(ws));
    cx.grades.push_back(std::move(gs));
  }

  // homology differential (degree -1)
  cx.d_down.resize(static_cast<size_t>(n) + 1);
  cx.d_down[0] = QMat::Zero(0, cx.dim(0));
  for (int k = 1; k <= n; ++k) {
    QMat d = QMat::Zero(cx.dim(k - 1), cx.dim(k));
    auto subs = subsets_of_size(n, k);
    for (size_t s = 0; s < subs.size(); ++s) {
      const auto& sub = subs[s];
      Eigen::Index cbase = static_cast<Eigen::Index>(s) * vd;
      // action terms, 1-based sign (-1)^{i+1}
      for (size_t i = 0; i < sub.size(); ++i) {
        std::vector<int> rest = sub;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        int sign = (i % 2 == 0) ? 1 : -1;
        Eigen::Index rbase = base_of[static_cast<size_t>(k - 1)].at(rest);
        d.block(rbase, cbase, vd, vd) += Rational(sign) * act_e[static_cast<size_t>(sub[i])];
      }
      // bracket terms, 1-based sign (-1)^{i+j+1}
      for (size_t i = 0; i < sub.size(); ++i) {
        for (size_t j = i + 1; j < sub.size(); ++j) {
          std::vector<int> rest = sub;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          int base_sign = (((i + 1 + j + 1 + 1) % 2 == 0) ? 1 : -1) * bracket_sign;
          for (const auto& [c, kappa] : br.e[static_cast<size_t>(sub[i])][static_cast<size_t>(sub[j])]) {
            if (contains(rest, c)) continue;
            std::vector<int> tgt = rest;
            tgt.push_back(c);
            std::sort(tgt.begin(), tgt.end());
            Rational val = Rational(base_sign * prepend_sort_sign(c, rest)) * kappa;
            Eigen::Index rbase = base_of[static_cast<size_t>(k - 1)].at(tgt);
            for (Eigen::Index m = 0; m < vd; ++m) d(rbase + m, cbase + m) += val;
          }
        }
      }
    }
    cx.d_down[static_cast<size_t>(k)] = std::move(d);
  }

  // cohomology differential (degree +1) through the trace-form duality
  cx.d_up.resize(static_cast<size_t>(n) + 1);
  cx.d_up[static_cast<size_t>(n)] = QMat::Zero(0, cx.dim(n));
  for (int k = 0; k < n; ++k) {
    QMat d = QMat::Zero(cx.dim(k + 1), cx.dim(k));
    auto targets = subsets_of_size(n, k + 1);
    for (size_t t = 0; t < targets.size(); ++t) {
      const auto& tgt = targets[t];
      Eigen::Index rbase = static_cast<Eigen::Index>(t) * vd;
      // action terms: remove one entry, 0-based sign (-1)^i
      for (size_t i = 0; i < tgt.size(); ++i) {
        std::vector<int> src = tgt;
        src.erase(src.begin() + static_cast<std::ptrdiff_t>(i));
        int sign = (i % 2 == 0) ? 1 : -1;
        Eigen::Index cbase = base_of[static_cast<size_t>(k)].at(src);
        d.block(rbase, cbase, vd, vd) += Rational(sign) * act_f[static_cast<size_t>(tgt[i])];
      }
      // bracket terms: 0-based sign (-1)^{i+j}
      for (size_t i = 0; i < tgt.size(); ++i) {
        for (size_t j = i + 1; j < tgt.size(); ++j) {
          std::vector<int> rest = tgt;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          int base_sign = ((i + j) % 2 == 0) ? 1 : -1;
          for (const auto& [c, kappa] : br.f[static_cast<size_t>(tgt[i])][static_cast<size_t>(tgt[j])]) {
            if (contains(rest, c)) continue;
            std::vector<int> src = rest;
            src.push_back(c);
            std::sort(src.begin(), src.end());
            Rational val = Rational(base_sign * prepend_sort_sign(c, rest)) * kappa;
            Eigen::Index cbase = base_of[static_cast<size_t>(k)].at(src);
            for (Eigen::Index m = 0; m < vd; ++m) d(rbase + m, cbase + m) += val;
          }
        }
      }
    }
    cx.d_up[static_cast<size_t>(k)] = std::move(d);
  }

  // Laplacian
  for (int k = 0; k <= n; ++k) {
    QMat b = QMat::Zero(cx.dim(k), cx.dim(k));
    if (k < n) b += cx.d_down[static_cast<size_t>(k + 1)] * cx.d_up[static_cast<size_t>(k)];
    if (k > 0) b += cx.d_up[static_cast<size_t>(k - 1)] * cx.d_down[static_cast<size_t>(k)];
    cx.box.push_back(std::move(b));
  }

  // Levi-of-q action on each degree
  cx.levi_E.resize(static_cast<size_t>(n) + 1);
  cx.levi_F.resize(static_cast<size_t>(n) + 1);
  for (int node : pair.uncrossed_q) {
    // one-body operators on the form line
    QMat fe = QMat::Zero(n, n), ff = QMat::Zero(n, n);
    for (int b = 0; b < n; ++b) {
      QMat bre = bracket(mat_e(rs, rs.root_index(node, node)),
                         mat_e(rs, pair.roots_rel[static_cast<size_t>(b)]));
      QMat brf = bracket(mat_f(rs, rs.root_index(node, node)),
                         mat_e(rs, pair.roots_rel[static_cast<size_t>(b)]));
      AlgebraCoords ce = algebra_coords(rs, bre);
      AlgebraCoords cf = algebra_coords(rs, brf);
      for (int a = 0; a < n; ++a) {
        Eigen::Index root = static_cast<Eigen::Index>(pair.roots_rel[static_cast<size_t>(a)]);
        fe(a, b) = ce.e(root);
        ff(a, b) = cf.e(root);
      }
    }
    for (int k = 0; k <= n; ++k) {
      cx.levi_E[static_cast<size_t>(k)][node] = chain_operator(cx, k, fe, coeff.E.at(node));
      cx.levi_F[static_cast<size_t>(k)][node] = chain_operator(cx, k, ff, coeff.F.at(node));
    }
  }
  return cx;
}
}  // namespace

RelativeComplex build_complex_from_label(const ParabolicPair& pair, const Weight& lam) {
  WeightModule coeff = coefficient_module(pair.rs, pair.uncrossed_p, lam);
  RelativeComplex cx = build_complex(pair, coeff);
  cx.coeff_label = lam;
  return cx;
}

namespace {

// basis vectors of the lowest-weight slice of a subspace: kernel of every
// Levi lowering operator restricted to span(cols), returned in ambient coords
QMat lowest_slice(const RelativeComplex& cx, int k, const QMat& cols) {
  if (cols.cols() == 0) return cols;
  QMat stacked(0, cols.cols());
  for (int node : cx.pair.uncrossed_q) {
    QMat img = cx.levi_F[static_cast<size_t>(k)].at(node) * cols;
    QMat ns(stacked.rows() + img.rows(), cols.cols());
    if (stacked.rows() > 0) ns.topRows(stacked.rows()) = stacked;
    ns.bottomRows(img.rows()) = img;
    stacked = ns;
  }
  if (stacked.rows() == 0) return cols;  // Borel case: everything is lowest
  QMat ker = kernel_basis(stacked);
  return cols * ker;
}

// scalar action of box on span(cols); throws if not scalar
Rational scalar_eigenvalue(const RelativeComplex& cx, int k, const QMat& cols) {
  const QMat& b = cx.box[static_cast<size_t>(k)];
  std::optional<Rational> value;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    QVec x = cols.col(j);
    QVec y = b * x;
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!x(i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    Rational a = y(piv) / x(piv);
    if (!vec_is_zero(y - a * x)) {
      throw InternalError("laplacian is not scalar on an isotypic block");
    }
    if (value && *value != a) {
      throw InternalError("laplacian eigenvalue differs within an isotypic block");
    }
    value = a;
  }
  if (!value) throw InternalError("scalar_eigenvalue: empty block");
  return *value;
}

}  // namespace

HomologySummary homology(const RelativeComplex& cx) {
  HomologySummary s;
  const RootSystem& rs = cx.pair.rs;
  s.per_degree.resize(static_cast<size_t>(cx.top) + 1);
  for (int k = 0; k <= cx.top; ++k) {
    HodgeDims hd;
    hd.chain = cx.dim(k);
    hd.im_down = (k < cx.top) ? rank_of(cx.d_down[static_cast<size_t>(k + 1)]) : 0;
    hd.im_up = (k > 0) ? rank_of(cx.d_up[static_cast<size_t>(k - 1)]) : 0;
    BigInt total_dim(0);
    for (const Weight& nu : cx.weights_in_degree(k)) {
      std::vector<Eigen::Index> idx = cx.weight_block(k, nu);
      QMat block = QMat::Zero(cx.dim(k), static_cast<Eigen::Index>(idx.size()));
      // kernel of box restricted to the weight block
      QMat sub(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              cx.box[static_cast<size_t>(k)](idx[i], idx[j]);
      QMat ker = kernel_basis(sub);
      if (ker.cols() == 0) continue;
      hd.harmonic += ker.cols();
      // scatter to ambient coordinates
      QMat amb = QMat::Zero(cx.dim(k), ker.cols());
      for (size_t i = 0; i < idx.size(); ++i) amb.row(idx[i]) = ker.row(static_cast<Eigen::Index>(i));
      QMat low = lowest_slice(cx, k, amb);
      if (low.cols() == 0) continue;
      Eigen::Index mult = rank_of(low);
      if (mult == 0) continue;
      HomologySummand summand;
      summand.label = -nu;
      summand.multiplicity = static_cast<int>(mult);
      if (!is_dominant_at(summand.label, cx.pair.uncrossed_q) ||
          !is_integral_at(summand.label, cx.pair.uncrossed_q)) {
        throw InternalError("homology: summand label is not dominant integral for the Levi of q");
      }
      summand.dimension =
          BigInt(mult) * weyl_dim(rs, cx.pair.uncrossed_q, summand.label);
      total_dim = total_dim + summand.dimension;
      s.per_degree[static_cast<size_t>(k)].push_back(std::move(summand));
    }
    if (total_dim != BigInt(static_cast<long long>(hd.harmonic))) {
      throw InternalError("homology: summand dimensions do not add up to the kernel");
    }
    s.hodge.push_back(hd);
  }
  return s;
}

std::vector<std::vector<Weight>> kostant_predict(const ParabolicPair& pair, const Weight& lam) {
  const RootSystem& rs = pair.rs;
  if (!is_dominant_at(lam, pair.uncrossed_p) || !is_integral_at(lam, pair.uncrossed_p)) {
    throw RepresentabilityError("kostant_predict: label not dominant integral for the Levi of p");
  }
  Weight rho_p = levi_rho(rs, pair.uncrossed_p);
  auto graded = hasse_quotient_in(rs, pair.uncrossed_p, pair.uncrossed_q);
  std::vector<std::vector<Weight>> out(static_cast<size_t>(pair.dim_rel()) + 1);
  for (size_t len = 0; len < graded.size(); ++len) {
    if (len >= out.size()) {
      if (!graded[len].empty()) throw InternalError("kostant_predict: word longer than top degree");
      continue;
    }
    for (const WeylWord& w : graded[len]) {
      out[len].push_back(affine_action_with_rho(rs, w, lam, rho_p));
    }
  }
  return out;
}

std::vector<std::vector<std::string>> summary_label_multiset(const HomologySummary& s) {
  std::vector<std::vector<std::string>> out(s.per_degree.size());
  for (size_t k = 0; k < s.per_degree.size(); ++k) {
    for (const HomologySummand& sm : s.per_degree[k]) {
      for (int c = 0; c < sm.multiplicity; ++c) out[k].push_back(weight_str(sm.label));
    }
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

std::vector<std::vector<std::string>> predict_label_multiset(
    const std::vector<std::vector<Weight>>& pred) {
  std::vector<std::vector<std::string>> out(pred.size());
  for (size_t k = 0; k < pred.size(); ++k) {
    for (const Weight& w : pred[k]) out[k].push_back(weight_str(w));
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

std::vector<std::pair<Rational, std::vector<Rational>>> spectrum(const RelativeComplex& cx,
                                                                 int k) {
  std::map<Rational, std::set<std::string>> seen;
  std::map<Rational, std::vector<Rational>> values;
  if (k < cx.top) {
    const QMat& d = cx.d_down[static_cast<size_t>(k + 1)];
    // group image columns by weight
    std::map<std::string, std::pair<Weight, std::vector<Eigen::Index>>> groups;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (vec_is_zero(d.col(j))) continue;
      const Weight& w = cx.wts[static_cast<size_t>(k + 1)][static_cast<size_t>(j)];
      auto& g = groups[weight_str(w)];
      g.first = w;
      g.second.push_back(j);
    }
    for (auto& [key, g] : groups) {
      QMat cols = select_columns(d, g.second);
      QMat basis = image_basis(cols);
      QMat low = lowest_slice(cx, k, basis);
      if (low.cols() == 0) continue;
      Rational a = scalar_eigenvalue(cx, k, low);
      if (a.is_zero()) {
        throw InternalError("spectrum: vanishing eigenvalue on the image of the codifferential");
      }
      Rational grade = cx.pair.grade_of(g.first);
      if (seen[grade].insert(a.to_string()).second) values[grade].push_back(a);
    }
  }
  std::vector<std::pair<Rational, std::vector<Rational>>> out;
  for (auto& [grade, vals] : values) {
    std::sort(vals.begin(), vals.end());
    out.emplace_back(grade, vals);
  }
  return out;
}

CasimirConsistency casimir_consistency(const RelativeComplex& cx) {
  const RootSystem& rs = cx.pair.rs;
  Weight lam = cx.coeff_label ? *cx.coeff_label : module_label(cx.coeff);
  Weight rho_p = levi_rho(rs, cx.pair.uncrossed_p);
  auto cas = [&](const Weight& x) { return form(rs, x, x + Rational(2) * rho_p); };
  Rational c_lam = cas(lam);

  CasimirConsistency rep;
  for (int k = 0; k <= cx.top; ++k) {
    for (const Weight& nu : cx.weights_in_degree(k)) {
      std::vector<Eigen::Index> idx = cx.weight_block(k, nu);
      QMat cols = QMat::Zero(cx.dim(k), static_cast<Eigen::Index>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i) cols(idx[i], static_cast<Eigen::Index>(i)) = Rational(1);
      QMat low = lowest_slice(cx, k, cols);
      if (low.cols() == 0) continue;
      CasimirBlockReport blk;
      blk.degree = k;
      blk.label = -nu;
      blk.eigenvalue = scalar_eigenvalue(cx, k, low);
      blk.casimir_difference = c_lam - cas(-nu);
      rep.blocks.push_back(std::move(blk));
    }
  }
  // calibrate one global constant
  bool have = false;
  Rational kappa(1);
  for (const auto& b : rep.blocks) {
    if (!b.casimir_difference.is_zero()) {
      kappa = Rational(2) * b.eigenvalue / b.casimir_difference;
      have = true;
      break;
    }
  }
  (void)have;
  for (const auto& b : rep.blocks) {
    if (Rational(2) * b.eigenvalue != kappa * b.casimir_difference) {
      throw InternalError("casimir_consistency: no single calibration constant fits");
    }
  }
  rep.kappa = kappa;
  rep.consistent = true;
  return rep;
}

namespace {

WeightModule module_from_subspace(int rank, const std::vector<int>& acting,
                                  const std::vector<Weight>& ambient_weights,
                                  const std::map<int, QMat>& E_amb,
                                  const std::map<int, QMat>& F_amb, const QMat& cols,
                                  const RootSystem& rs) {
  WeightModule m;
  m.rank = rank;
  m.acting_nodes = acting;
  const Eigen::Index d = cols.cols();
  // weights: columns must be weight pure
  std::map<std::string, std::pair<Weight, std::vector<Eigen::Index>>> groups;
  for (Eigen::Index j = 0; j < d; ++j) {
    std::optional<Weight> w;
    for (Eigen::Index i = 0; i < cols.rows(); ++i) {
      if (cols(i, j).is_zero()) continue;
      if (!w) {
        w = ambient_weights[static_cast<size_t>(i)];
      } else if (!(*w == ambient_weights[static_cast<size_t>(i)])) {
        throw InternalError("module_from_subspace: column mixes weights");
      }
    }
    if (!w) throw InternalError("module_from_subspace: zero column");
    m.weights.push_back(*w);
    m.labels.push_back("c" + std::to_string(j));
    auto& g = groups[weight_str(*w)];
    g.first = *w;
    g.second.push_back(j);
  }
  auto express = [&](const QVec& v, const Weight& w) {
    QVec out = QVec::Zero(d);
    if (vec_is_zero(v)) return out;
    auto it = groups.find(weight_str(w));
    if (it == groups.end()) throw InternalError("module_from_subspace: not invariant");
    QMat basis = select_columns(cols, it->second.second);
    auto sol = solve(basis, v);
    if (!sol) throw InternalError("module_from_subspace: not invariant");
    for (size_t j = 0; j < it->second.second.size(); ++j) {
      out(it->second.second[j]) = (*sol)(static_cast<Eigen::Index>(j));
    }
    return out;
  };
  for (int node : acting) {
    QMat e = QMat::Zero(d, d), f = QMat::Zero(d, d);
    const Weight& alpha = rs.simple_roots[static_cast<size_t>(node - 1)];
    for (Eigen::Index j = 0; j < d; ++j) {
      e.col(j) = express(E_amb.at(node) * cols.col(j), m.weights[static_cast<size_t>(j)] + alpha);
      f.col(j) = express(F_amb.at(node) * cols.col(j), m.weights[static_cast<size_t>(j)] - alpha);
    }
    m.E[node] = e;
    m.F[node] = f;
  }
  return m;
}

}  // namespace

std::vector<WeightModule> harmonic_modules(const RelativeComplex& cx) {
  std::vector<WeightModule> out;
  for (int k = 0; k <= cx.top; ++k) {
    // deterministic harmonic basis: per weight (sorted), kernel columns
    std::vector<QVec> vecs;
    for (const Weight& nu : cx.weights_in_degree(k)) {
      std::vector<Eigen::Index> idx = cx.weight_block(k, nu);
      QMat sub(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              cx.box[static_cast<size_t>(k)](idx[i], idx[j]);
      QMat ker = kernel_basis(sub);
      for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        QVec amb = QVec::Zero(cx.dim(k));
        for (size_t i = 0; i < idx.size(); ++i) amb(idx[i]) = ker(static_cast<Eigen::Index>(i), c);
        vecs.push_back(amb);
      }
    }
    QMat cols(cx.dim(k), static_cast<Eigen::Index>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j) cols.col(static_cast<Eigen::Index>(j)) = vecs[j];
    if (cols.cols() == 0) {
      WeightModule empty;
      empty.rank = cx.pair.rs.rank;
      empty.acting_nodes = cx.pair.uncrossed_q;
      for (int node : cx.pair.uncrossed_q) {
        empty.E[node] = QMat::Zero(0, 0);
        empty.F[node] = QMat::Zero(0, 0);
      }
      out.push_back(std::move(empty));
      continue;
    }
    out.push_back(module_from_subspace(cx.pair.rs.rank, cx.pair.uncrossed_q,
                                       cx.wts[static_cast<size_t>(k)],
                                       cx.levi_E[static_cast<size_t>(k)],
                                       cx.levi_F[static_cast<size_t>(k)], cols, cx.pair.rs));
  }
  return out;
}

KunnethReport kunneth_compare(const RootSystem& rs, const ParabolicPair& pair,
                              const Weight& lam_tilde) {
  std::vector<int> all_nodes;
  for (int i = 1; i <= rs.rank; ++i) all_nodes.push_back(i);
  WeightModule big = coefficient_module(rs, all_nodes, lam_tilde);

  // left side: absolute homology of q_+
  ParabolicPair abs_q = build_pair(rs, {}, pair.crossed_q);
  RelativeComplex left_cx = build_complex(abs_q, big);
  KunnethReport rep;
  rep.left = summary_label_multiset(homology(left_cx));

  // right side: first the homology of p_+, then the relative homology
  ParabolicPair abs_p = build_pair(rs, {}, pair.crossed_p);
  RelativeComplex inner = build_complex(abs_p, big);
  std::vector<WeightModule> hp = harmonic_modules(inner);

  rep.right.assign(static_cast<size_t>(pair.dim_rel() + abs_p.dim_rel()) + 1,
                   std::vector<std::string>{});
  for (size_t j = 0; j < hp.size(); ++j) {
    if (hp[j].dim() == 0) continue;
    RelativeComplex relc = build_complex(pair, hp[j]);
    auto labels = summary_label_multiset(homology(relc));
    for (size_t i = 0; i < labels.size(); ++i) {
      auto& dst = rep.right[i + j];
      dst.insert(dst.end(), labels[i].begin(), labels[i].end());
    }
  }
  for (auto& v : rep.right) std::sort(v.begin(), v.end());
  while (rep.right.size() > rep.left.size() && rep.right.back().empty()) rep.right.pop_back();
  while (rep.left.size() > rep.right.size() && rep.left.back().empty()) rep.left.pop_back();
  rep.equal = rep.left == rep.right;
  return rep;
}

void verify_complex(const RelativeComplex& cx) {
  auto fail = [](const std::string& m) { throw InternalError("verify_complex: " + m); };
  const int n = cx.top;
  for (int k = 0; k <= n; ++k) {
    // squares vanish
    if (k + 2 <= n) {
      if (!is_zero(cx.d_up[static_cast<size_t>(k + 1)] * cx.d_up[static_cast<size_t>(k)]))
        fail("d_up^2 != 0");
    }
    if (k >= 2) {
      if (!is_zero(cx.d_down[static_cast<size_t>(k - 1)] * cx.d_down[static_cast<size_t>(k)]))
        fail("d_down^2 != 0");
    }
    // weights and grades preserved
    auto check_graded = [&](const QMat& d, int from, int to) {
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        for (Eigen::Index i = 0; i < d.rows(); ++i) {
          if (d(i, j).is_zero()) continue;
          if (!(cx.wts[static_cast<size_t>(to)][static_cast<size_t>(i)] ==
                cx.wts[static_cast<size_t>(from)][static_cast<size_t>(j)]))
            fail("differential does not preserve weights");
          if (cx.grades[static_cast<size_t>(to)][static_cast<size_t>(i)] !=
              cx.grades[static_cast<size_t>(from)][static_cast<size_t>(j)])
            fail("differential does not preserve the filtration grade");
        }
      }
    };
    if (k < n) check_graded(cx.d_up[static_cast<size_t>(k)], k, k + 1);
    if (k > 0) check_graded(cx.d_down[static_cast<size_t>(k)], k, k - 1);
    // Levi equivariance
    for (int node : cx.pair.uncrossed_q) {
      if (k < n) {
        if (!is_zero(cx.levi_E[static_cast<size_t>(k + 1)].at(node) * cx.d_up[static_cast<size_t>(k)] -
                     cx.d_up[static_cast<size_t>(k)] * cx.levi_E[static_cast<size_t>(k)].at(node)))
          fail("d_up not equivariant");
      }
      if (k > 0) {
        if (!is_zero(cx.levi_F[static_cast<size_t>(k - 1)].at(node) * cx.d_down[static_cast<size_t>(k)] -
                     cx.d_down[static_cast<size_t>(k)] * cx.levi_F[static_cast<size_t>(k)].at(node)))
          fail("d_down not equivariant");
      }
    }
  }
  // Hodge decomposition per degree
  HomologySummary hs = homology(cx);
  long long euler_chain = 0, euler_hom = 0;
  for (int k = 0; k <= n; ++k) {
    const HodgeDims& hd = hs.hodge[static_cast<size_t>(k)];
    if (hd.im_down + hd.harmonic + hd.im_up != hd.chain) fail("Hodge dimensions do not add up");
    QMat down_img = (k < n) ? image_basis(cx.d_down[static_cast<size_t>(k + 1)]) : QMat(cx.dim(k), 0);
    QMat up_img = (k > 0) ? image_basis(cx.d_up[static_cast<size_t>(k - 1)]) : QMat(cx.dim(k), 0);
    QMat harm = kernel_basis(cx.box[static_cast<size_t>(k)]);
    QMat all = hcat(hcat(down_img, harm), up_img);
    if (rank_of(all) != hd.chain) fail("Hodge sum is not direct");
    // ker(d_down) = im(d_down) + harmonic, ker(d_up) = harmonic + im(d_up)
    if (k > 0) {
      Eigen::Index ker_down = cx.dim(k) - rank_of(cx.d_down[static_cast<size_t>(k)]);
      if (ker_down != hd.im_down + hd.harmonic) fail("ker(d_down) mismatch");
    } else if (hd.im_down + hd.harmonic != hd.chain) {
      fail("ker(d_down) mismatch in degree 0");
    }
    if (k < n) {
      Eigen::Index ker_up = cx.dim(k) - rank_of(cx.d_up[static_cast<size_t>(k)]);
      if (ker_up != hd.harmonic + hd.im_up) fail("ker(d_up) mismatch");
    } else if (hd.harmonic + hd.im_up != hd.chain) {
      fail("ker(d_up) mismatch in top degree");
    }
    euler_chain += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(hd.chain);
    euler_hom += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(hd.harmonic);
  }
  if (euler_chain != euler_hom) fail("Euler characteristics differ");
}

}  // namespace bgg
