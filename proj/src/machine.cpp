#include "bgg/machine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool vec_is_zero(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// polynomial helpers, coefficients ascending
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  Poly r = a;
  for (Rational& x : r) x *= c;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QMat poly_eval(const Poly& p, const QMat& m) {
  const Eigen::Index n = m.rows();
  QMat acc = QMat::Zero(n, n);
  // Horner
  for (size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    for (Eigen::Index d = 0; d < n; ++d) acc(d, d) += p[i];
  }
  return acc;
}

QMat compose_op(const RelativeComplex& cx, const FilteredOperator& op) {
  return cx.d_down[static_cast<size_t>(op.degree + 1)] * op.matrix;
}

}  // namespace

FilteredOperator make_compressable(const RelativeComplex& cx, int k, std::uint64_t seed) {
  if (k >= cx.top) throw ParseError("make_compressable: degree at or above the top");
  FilteredOperator op;
  op.degree = k;
  op.seed = seed;
  op.matrix = cx.d_up[static_cast<size_t>(k)];
  if (seed == 0) return op;
  const auto& gsrc = cx.grades[static_cast<size_t>(k)];
  const auto& gtgt = cx.grades[static_cast<size_t>(k + 1)];
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) {
      if (!(gtgt[static_cast<size_t>(i)] > gsrc[static_cast<size_t>(j)])) continue;
      std::uint64_t h = splitmix(seed ^ splitmix(static_cast<std::uint64_t>(i) * 0x1f123bb5ULL +
                                                 static_cast<std::uint64_t>(j) + 0x5bd1e995ULL));
      if (h % 3 != 0) continue;  // keep the perturbation sparse
      long long num = static_cast<long long>((h >> 8) % 7) - 3;  // -3..3
      long long den = 1 + static_cast<long long>((h >> 16) % 2);
      if (num == 0) num = 1;
      op.matrix(i, j) += Rational(num, den);
    }
  }
  return op;
}

void verify_filtered_operator(const RelativeComplex& cx, const FilteredOperator& op) {
  const auto& gsrc = cx.grades[static_cast<size_t>(op.degree)];
  const auto& gtgt = cx.grades[static_cast<size_t>(op.degree + 1)];
  const QMat& model = cx.d_up[static_cast<size_t>(op.degree)];
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) {
      const Rational& g_i = gtgt[static_cast<size_t>(i)];
      const Rational& g_j = gsrc[static_cast<size_t>(j)];
      if (g_i < g_j && !op.matrix(i, j).is_zero()) {
        throw InternalError("filtered operator lowers the filtration");
      }
      if (g_i == g_j && op.matrix(i, j) != model(i, j)) {
        throw InternalError("graded part differs from the cohomology differential");
      }
    }
  }
}

HarmonicProjector harmonic_projector(const RelativeComplex& cx, int k) {
  HarmonicProjector p;
  p.im_down = (k < cx.top) ? image_basis(cx.d_down[static_cast<size_t>(k + 1)])
                           : QMat(cx.dim(k), 0);
  p.harmonic = kernel_basis(cx.box[static_cast<size_t>(k)]);
  p.kernel = kernel_basis(cx.d_down[static_cast<size_t>(k)]);
  return p;
}

QVec HarmonicProjector::project(const QVec& x) const {
  QMat combined = hcat(im_down, harmonic);
  auto sol = solve(combined, x);
  if (!sol) throw InternalError("harmonic projection applied outside ker(d_down)");
  QVec out = QVec::Zero(harmonic.cols());
  for (Eigen::Index j = 0; j < harmonic.cols(); ++j) out(j) = (*sol)(im_down.cols() + j);
  return out;
}

QMat HarmonicProjector::project_matrix(const QMat& cols) const {
  QMat combined = hcat(im_down, harmonic);
  auto sol = solve_matrix(combined, cols);
  if (!sol) throw InternalError("harmonic projection applied outside ker(d_down)");
  return sol->bottomRows(harmonic.cols());
}

QMat evaluate_polynomial(const RelativeComplex& cx, const FilteredOperator& op,
                         const std::vector<Rational>& coefficients) {
  return poly_eval(coefficients, compose_op(cx, op));
}

OperatorPolynomial splitting_operator(const RelativeComplex& cx, const FilteredOperator& op) {
  const int k = op.degree;
  QMat m = compose_op(cx, op);
  OperatorPolynomial s;
  Poly poly{Rational(1)};
  for (const auto& [grade, values] : spectrum(cx, k)) {
    for (const Rational& a : values) {
      s.factors.emplace_back(a, grade);
      // factor (x - a) / (-a)
      Poly factor{Rational(1), Rational(-1) / a};
      poly = poly_mul(poly, factor);
    }
  }
  s.coefficients = poly;
  s.matrix = poly_eval(poly, m);
  return s;
}

InverseOperator q_operator(const RelativeComplex& cx, const FilteredOperator& op,
                           QMethod method) {
  const int k = op.degree;
  QMat m = compose_op(cx, op);
  InverseOperator q;
  q.method = method;
  q.image_basis_cols =
      (k < cx.top) ? image_basis(cx.d_down[static_cast<size_t>(k + 1)]) : QMat(cx.dim(k), 0);
  const QMat& b = q.image_basis_cols;
  if (b.cols() == 0) {
    q.on_image = QMat(cx.dim(k), 0);
    if (method == QMethod::EigenPolynomial) {
      OperatorPolynomial p;
      p.coefficients = {};
      p.matrix = QMat::Zero(cx.dim(k), cx.dim(k));
      q.polynomial = std::move(p);
    }
    return q;
  }

  if (method == QMethod::EigenPolynomial) {
    // per-grade interpolation polynomials, composed by the filtration
    // recursion from the deepest grade upward
    auto spec = spectrum(cx, k);  // sorted by grade ascending
    if (spec.empty()) throw InternalError("q_operator: image present but spectrum empty");
    std::optional<Poly> acc;
    OperatorPolynomial rec;
    for (auto it = spec.rbegin(); it != spec.rend(); ++it) {
      // Lagrange interpolation of 1/x at the grade's eigenvalues
      const auto& values = it->second;
      Poly qt{Rational(0)};
      for (size_t r = 0; r < values.size(); ++r) {
        Rational denom = values[r];
        Poly prod{Rational(1)};
        for (size_t s2 = 0; s2 < values.size(); ++s2) {
          if (s2 == r) continue;
          denom *= values[r] - values[s2];
          prod = poly_mul(prod, Poly{-values[s2], Rational(1)});
        }
        qt = poly_add(qt, poly_scale(prod, Rational(1) / denom));
        rec.factors.emplace_back(values[r], it->first);
      }
      if (!acc) {
        acc = qt;
      } else {
        // Q_lower = Qt + Q_upper (1 - x Qt): the correction term feeds the
        // deeper-grade inverse with the residue the shallow grade leaves
        Poly x_qt = poly_mul(Poly{Rational(0), Rational(1)}, qt);
        Poly one_minus(x_qt.size(), Rational(0));
        one_minus[0] = Rational(1);
        for (size_t i = 0; i < x_qt.size(); ++i) one_minus[i] -= x_qt[i];
        acc = poly_add(qt, poly_mul(*acc, one_minus));
      }
    }
    rec.coefficients = *acc;
    rec.matrix = poly_eval(*acc, m);
    q.on_image = rec.matrix * b;
    q.polynomial = std::move(rec);
    return q;
  }

  // Neumann series against the graded Laplacian on im(d_down)
  const QMat& box = cx.box[static_cast<size_t>(k)];
  auto box_im_opt = solve_matrix(b, box * b);
  if (!box_im_opt) throw InternalError("q_operator: Laplacian does not preserve im(d_down)");
  QMat box_im = *box_im_opt;
  auto m_im_opt = solve_matrix(b, m * b);
  if (!m_im_opt) throw InternalError("q_operator: operator does not preserve im(d_down)");
  QMat m_im = *m_im_opt;
  const Eigen::Index d = b.cols();
  auto box_inv_opt = solve_matrix(box_im, identity(d));
  if (!box_inv_opt) {
    throw InternalError("q_operator: graded Laplacian not invertible on im(d_down)");
  }
  QMat box_inv = *box_inv_opt;
  QMat nil = box_inv * (m_im - box_im);
  QMat series = identity(d);
  QMat power = nil;
  int sign = -1;
  for (Eigen::Index step = 0; step <= d + 1 && !is_zero(power); ++step) {
    series += Rational(sign) * power;
    power = power * nil;
    sign = -sign;
  }
  if (!is_zero(power)) throw InternalError("q_operator: Neumann series did not terminate");
  q.on_image = b * (series * box_inv);
  return q;
}

bool splitting_matches_inverse(const RelativeComplex& cx, const FilteredOperator& op) {
  OperatorPolynomial s = splitting_operator(cx, op);
  InverseOperator q = q_operator(cx, op, QMethod::EigenPolynomial);
  QMat m = compose_op(cx, op);
  QMat ker = kernel_basis(cx.d_down[static_cast<size_t>(op.degree)]);
  QMat qfull = q.polynomial ? q.polynomial->matrix
                            : QMat::Zero(cx.dim(op.degree), cx.dim(op.degree));
  QMat lhs = s.matrix * ker;
  QMat rhs = ker - qfull * (m * ker);
  return is_zero(lhs - rhs);
}

CompressedOperator compressed_operator(const RelativeComplex& cx, const FilteredOperator& op) {
  const int k = op.degree;
  OperatorPolynomial s = splitting_operator(cx, op);
  HarmonicProjector target = harmonic_projector(cx, k + 1);
  CompressedOperator out;
  out.harmonic_source = kernel_basis(cx.box[static_cast<size_t>(k)]);
  out.harmonic_target = target.harmonic;
  QMat lifted = op.matrix * (s.matrix * out.harmonic_source);
  for (Eigen::Index j = 0; j < lifted.cols(); ++j) {
    QVec check = cx.d_down[static_cast<size_t>(k + 1)] * lifted.col(j);
    if (!vec_is_zero(check)) {
      throw InternalError("compressed_operator: image not in ker(d_down)");
    }
  }
  out.matrix = target.project_matrix(lifted);
  return out;
}

std::vector<FilteredOperator> model_sequence(const RelativeComplex& cx) {
  std::vector<FilteredOperator> ops;
  for (int k = 0; k < cx.top; ++k) {
    FilteredOperator op;
    op.degree = k;
    op.matrix = cx.d_up[static_cast<size_t>(k)];
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<FilteredOperator> conjugated_model_sequence(const RelativeComplex& cx,
                                                        std::uint64_t seed) {
  // G_k = id + strictly-raising; D_k = G_{k+1} d_up G_k^{-1} squares to zero
  std::vector<QMat> g, ginv;
  for (int k = 0; k <= cx.top; ++k) {
    const auto& grades = cx.grades[static_cast<size_t>(k)];
    QMat gk = identity(cx.dim(k));
    for (Eigen::Index i = 0; i < gk.rows(); ++i) {
      for (Eigen::Index j = 0; j < gk.cols(); ++j) {
        if (!(grades[static_cast<size_t>(i)] > grades[static_cast<size_t>(j)])) continue;
        std::uint64_t h = splitmix((seed + static_cast<std::uint64_t>(k) * 0x9e37ULL) ^
                                   splitmix(static_cast<std::uint64_t>(i) * 131 +
                                            static_cast<std::uint64_t>(j)));
        if (h % 4 != 0) continue;
        gk(i, j) += Rational(static_cast<long long>((h >> 8) % 5) - 2);
      }
    }
    // inverse of unipotent: finite geometric series
    QMat n = gk - identity(cx.dim(k));
    QMat inv = identity(cx.dim(k));
    QMat p = n;
    int sign = -1;
    while (!is_zero(p)) {
      inv += Rational(sign) * p;
      p = p * n;
      sign = -sign;
    }
    g.push_back(gk);
    ginv.push_back(inv);
  }
  std::vector<FilteredOperator> ops;
  for (int k = 0; k < cx.top; ++k) {
    FilteredOperator op;
    op.degree = k;
    op.seed = seed;
    op.matrix = g[static_cast<size_t>(k + 1)] * cx.d_up[static_cast<size_t>(k)] *
                ginv[static_cast<size_t>(k)];
    ops.push_back(std::move(op));
  }
  return ops;
}

SequenceReport sequence_checks(const RelativeComplex& cx,
                               const std::vector<FilteredOperator>& ops) {
  if (static_cast<int>(ops.size()) != cx.top) {
    throw ParseError("sequence_checks: expected one operator per degree below the top");
  }
  SequenceReport rep;
  const int n = cx.top;

  // sequence Laplacians: box_k = d_down D_k + D_{k-1} d_down
  for (int k = 0; k <= n; ++k) {
    QMat box = QMat::Zero(cx.dim(k), cx.dim(k));
    if (k < n) box += compose_op(cx, ops[static_cast<size_t>(k)]);
    if (k > 0) {
      box += ops[static_cast<size_t>(k - 1)].matrix * cx.d_down[static_cast<size_t>(k)];
    }
    QMat ker = kernel_basis(box);
    bool inside = is_zero(cx.d_down[static_cast<size_t>(k)] * ker);
    // and the kernel is exactly ker(d_down D_k) intersect ker(d_down)
    if (inside) {
      QMat m_k = (k < n) ? compose_op(cx, ops[static_cast<size_t>(k)])
                         : QMat::Zero(cx.dim(k), cx.dim(k));
      QMat stacked(m_k.rows() + cx.d_down[static_cast<size_t>(k)].rows(), cx.dim(k));
      stacked.topRows(m_k.rows()) = m_k;
      stacked.bottomRows(cx.d_down[static_cast<size_t>(k)].rows()) =
          cx.d_down[static_cast<size_t>(k)];
      inside = (kernel_basis(stacked).cols() == ker.cols());
    }
    rep.laplacian_kernel_in_kernel.push_back(inside);
  }

  rep.is_complex = true;
  for (int k = 1; k < n; ++k) {
    bool zero = is_zero(ops[static_cast<size_t>(k)].matrix * ops[static_cast<size_t>(k - 1)].matrix);
    rep.composition_zero.push_back(zero);
    if (!zero) rep.is_complex = false;
  }

  if (!rep.is_complex) return rep;

  // compressed operators, with a virtual zero operator in the top degree
  std::vector<CompressedOperator> comp;
  for (int k = 0; k < n; ++k) comp.push_back(compressed_operator(cx, ops[static_cast<size_t>(k)]));

  rep.compressed_squares_zero = true;
  for (int k = 1; k < n; ++k) {
    if (!is_zero(comp[static_cast<size_t>(k)].matrix * comp[static_cast<size_t>(k - 1)].matrix)) {
      rep.compressed_squares_zero = false;
    }
  }

  // cohomology dimensions on both sides
  for (int k = 0; k <= n; ++k) {
    Eigen::Index ker_dim, im_dim;
    if (k < n) {
      ker_dim = cx.dim(k) - rank_of(ops[static_cast<size_t>(k)].matrix);
    } else {
      ker_dim = cx.dim(k);
    }
    im_dim = (k > 0) ? rank_of(ops[static_cast<size_t>(k - 1)].matrix) : 0;
    rep.cohomology_dims.push_back(ker_dim - im_dim);

    Eigen::Index hdim = kernel_basis(cx.box[static_cast<size_t>(k)]).cols();
    Eigen::Index cker = (k < n) ? hdim - rank_of(comp[static_cast<size_t>(k)].matrix) : hdim;
    Eigen::Index cim = (k > 0) ? rank_of(comp[static_cast<size_t>(k - 1)].matrix) : 0;
    rep.compressed_cohomology_dims.push_back(cker - cim);
  }

  // the splitting operator induces an isomorphism in cohomology: lift a
  // basis of ker(comp_k) through S_k; the induced classes modulo im(D_{k-1})
  // must span a space of the full cohomology dimension on both sides
  rep.splitting_induces_isomorphism = true;
  for (int k = 0; k <= n; ++k) {
    if (rep.cohomology_dims[static_cast<size_t>(k)] !=
        rep.compressed_cohomology_dims[static_cast<size_t>(k)]) {
      rep.splitting_induces_isomorphism = false;
      continue;
    }
    QMat harm = kernel_basis(cx.box[static_cast<size_t>(k)]);
    QMat ckernel = (k < n) ? QMat(harm * kernel_basis(comp[static_cast<size_t>(k)].matrix))
                           : harm;
    QMat smat = (k < n) ? splitting_operator(cx, ops[static_cast<size_t>(k)]).matrix
                        : identity(cx.dim(k));
    QMat lifts = smat * ckernel;
    if (k < n && !is_zero(ops[static_cast<size_t>(k)].matrix * lifts)) {
      rep.splitting_induces_isomorphism = false;
      continue;
    }
    QMat op_image = (k > 0) ? image_basis(ops[static_cast<size_t>(k - 1)].matrix)
                            : QMat(cx.dim(k), 0);
    Eigen::Index base = rank_of(op_image);
    Eigen::Index class_span = rank_of(hcat(op_image, lifts)) - base;
    // surjectivity: the classes fill the operator-side cohomology; the
    // compressed side has the same dimension, and the compressed classes of
    // ckernel modulo im(comp_{k-1}) have exactly that dimension too, so
    // matching spans force injectivity
    if (class_span != rep.cohomology_dims[static_cast<size_t>(k)]) {
      rep.splitting_induces_isomorphism = false;
    }
  }
  return rep;
}

AdjointModule make_adjoint_module(const ParabolicPair& pair) {
  const RootSystem& rs = pair.rs;
  InvariantPairing ip = invariant_pairing(pair);
  AdjointModule adj;
  WeightModule& m = adj.module;
  m.rank = rs.rank;
  m.acting_nodes = pair.uncrossed_p;
  m.weights = ip.basis_weights;
  m.labels = ip.basis_labels;

  std::vector<int> levi_roots = roots_supported_on(rs, pair.uncrossed_p);
  // locate the f-part of each relative root in the pairing basis
  for (int rel : pair.roots_rel) {
    auto it = std::find(levi_roots.begin(), levi_roots.end(), rel);
    if (it == levi_roots.end()) throw InternalError("make_adjoint_module: relative root missing");
    int pos = static_cast<int>(it - levi_roots.begin());
    adj.rel_f_index.push_back(rs.rank + static_cast<int>(levi_roots.size()) + pos);
  }
  // q-part: everything except the relative f's
  for (size_t b = 0; b < ip.basis.size(); ++b) {
    if (std::find(adj.rel_f_index.begin(), adj.rel_f_index.end(), static_cast<int>(b)) ==
        adj.rel_f_index.end()) {
      adj.q_part_index.push_back(static_cast<int>(b));
    }
  }

  const Eigen::Index d = static_cast<Eigen::Index>(ip.basis.size());
  auto expand = [&](const QMat& x) {
    AlgebraCoords c = algebra_coords(rs, x);
    QVec v = QVec::Zero(d);
    for (int i = 0; i < rs.rank; ++i) v(i) = c.h(i);
    for (size_t r = 0; r < levi_roots.size(); ++r) {
      v(rs.rank + static_cast<Eigen::Index>(r)) = c.e(levi_roots[r]);
      v(rs.rank + static_cast<Eigen::Index>(levi_roots.size() + r)) = c.f(levi_roots[r]);
    }
    // anything outside the Levi span must vanish
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
      bool in_levi = std::find(levi_roots.begin(), levi_roots.end(), static_cast<int>(r)) !=
                     levi_roots.end();
      if (!in_levi && (!c.e(static_cast<Eigen::Index>(r)).is_zero() ||
                       !c.f(static_cast<Eigen::Index>(r)).is_zero())) {
        throw InternalError("make_adjoint_module: bracket escaped the Levi");
      }
    }
    return v;
  };
  for (int node : pair.uncrossed_p) {
    QMat e = QMat::Zero(d, d), f = QMat::Zero(d, d);
    QMat en = mat_e(rs, rs.root_index(node, node));
    QMat fn = mat_f(rs, rs.root_index(node, node));
    for (Eigen::Index j = 0; j < d; ++j) {
      e.col(j) = expand(bracket(en, ip.basis[static_cast<size_t>(j)]));
      f.col(j) = expand(bracket(fn, ip.basis[static_cast<size_t>(j)]));
    }
    m.E[node] = e;
    m.F[node] = f;
  }
  return adj;
}

namespace {

// block offsets of each form subset inside a chain degree
std::map<std::vector<int>, Eigen::Index> block_index(const RelativeComplex& cx, int k) {
  std::map<std::vector<int>, Eigen::Index> out;
  const auto& basis = cx.basis[static_cast<size_t>(k)];
  const Eigen::Index vd = cx.coeff.dim();
  for (size_t b = 0; b < basis.size(); b += static_cast<size_t>(vd)) {
    out[basis[b].form] = static_cast<Eigen::Index>(b);
  }
  return out;
}

// evaluation of a chain vector (degree k) on a tuple of opposite-nilradical
// basis directions; returns the coefficient-space vector
QVec eval_chain(const RelativeComplex& cx, const std::map<std::vector<int>, Eigen::Index>& blocks,
                const QVec& chain, const std::vector<int>& args) {
  const Eigen::Index vd = cx.coeff.dim();
  QVec out = QVec::Zero(vd);
  std::vector<int> sorted = args;
  int sign = 1;
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) return out;
      if (sorted[i] > sorted[j]) {
        std::swap(sorted[i], sorted[j]);
        sign = -sign;
      }
    }
  }
  auto it = blocks.find(sorted);
  if (it == blocks.end()) return out;
  for (Eigen::Index m = 0; m < vd; ++m) {
    const Rational& c = chain(it->second + m);
    if (!c.is_zero()) out(m) = Rational(sign) * c;
  }
  return out;
}

}  // namespace

InsertionCheck insertion_stability(const RelativeComplex& cxV, int k, const QMat& E_cols,
                                   const RelativeComplex& cxA, const AdjointModule& adj,
                                   const QMat& F_cols) {
  if (cxV.pair.crossed_q != cxA.pair.crossed_q || cxV.pair.crossed_p != cxA.pair.crossed_p) {
    throw ParseError("insertion_stability: the two complexes use different pairs");
  }
  if (k < 0 || k + 1 > cxV.top || cxA.top < 2) {
    throw ParseError("insertion_stability: degree out of range");
  }
  if (E_cols.rows() != cxV.dim(k) || F_cols.rows() != cxA.dim(2)) {
    throw ParseError("insertion_stability: span dimensions do not match the chain spaces");
  }
  const int n = cxV.top;
  InsertionCheck res;
  // subsets of size k+1 for the alternation output
  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == k + 1) {
        tuples.push_back(cur);
        return;
      }
      for (int v = start; v < n; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  // permutation list of k+1 entries
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(static_cast<size_t>(k) + 1);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto perm_sign = [](const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
  };

  auto blocks_k = block_index(cxV, k);
  auto blocks_k1 = block_index(cxV, k + 1);
  auto blocks_a2 = block_index(cxA, 2);
  SpanReducer espan(E_cols);
  const QMat& ddown = cxV.d_down[static_cast<size_t>(k + 1)];
  const Eigen::Index vd = cxV.coeff.dim();
  for (Eigen::Index pj = 0; pj < F_cols.cols(); ++pj) {
    QVec psi = F_cols.col(pj);
    for (Eigen::Index ej = 0; ej < E_cols.cols(); ++ej) {
      QVec phi = E_cols.col(ej);
      // assemble the alternation as a (k+1)-chain
      QVec chain = QVec::Zero(cxV.dim(k + 1));
      for (const auto& tup : tuples) {
        QVec val = QVec::Zero(vd);
        for (const auto& p : perms) {
          std::vector<int> args(tup.size());
          for (size_t i = 0; i < tup.size(); ++i) args[i] = tup[static_cast<size_t>(p[i])];
          // psi(X_{a0}, X_{a1}) in the adjoint module, projected to the
          // opposite nilradical
          QVec psival = eval_chain(cxA, blocks_a2, psi, {args[0], args[1]});
          for (int c = 0; c < n; ++c) {
            Rational z = psival(adj.rel_f_index[static_cast<size_t>(c)]);
            if (z.is_zero()) continue;
            std::vector<int> phi_args;
            phi_args.push_back(c);
            for (size_t i = 2; i < args.size(); ++i) phi_args.push_back(args[i]);
            QVec term = eval_chain(cxV, blocks_k, phi, phi_args);
            if (!vec_is_zero(term)) val += Rational(perm_sign(p)) * z * term;
          }
        }
        Eigen::Index base = blocks_k1.at(tup);
        for (Eigen::Index m = 0; m < vd; ++m) chain(base + m) = val(m);
      }
      // sparse apply of the homology differential
      QVec image = QVec::Zero(cxV.dim(k));
      for (Eigen::Index j = 0; j < chain.size(); ++j) {
        if (chain(j).is_zero()) continue;
        for (Eigen::Index i = 0; i < image.size(); ++i) {
          if (!ddown(i, j).is_zero()) image(i) += ddown(i, j) * chain(j);
        }
      }
      if (!vec_is_zero(image) && !espan.contains(image)) {
        res.stable = false;
        res.witness_phi = static_cast<int>(ej);
        res.witness_psi = static_cast<int>(pj);
        return res;
      }
    }
  }
  return res;
}

QMat lambda2_mid_span(const RelativeComplex& cxA, const std::vector<int>& mid_nodes) {
  const ParabolicPair& pair = cxA.pair;
  std::vector<Eigen::Index> cols;
  const auto& basis = cxA.basis[2];
  for (size_t b = 0; b < basis.size(); ++b) {
    bool ok = true;
    for (int c : basis[b].form) {
      if (root_grade(pair.rs, pair.roots_rel[static_cast<size_t>(c)], mid_nodes) == 0) ok = false;
    }
    if (ok) cols.push_back(static_cast<Eigen::Index>(b));
  }
  QMat out = QMat::Zero(cxA.dim(2), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out(cols[j], static_cast<Eigen::Index>(j)) = Rational(1);
  return out;
}

QMat mixed_mid_span(const RelativeComplex& cxA, const AdjointModule& adj,
                    const std::vector<int>& mid_nodes) {
  const ParabolicPair& pair = cxA.pair;
  std::vector<Eigen::Index> cols;
  const auto& basis = cxA.basis[2];
  for (size_t b = 0; b < basis.size(); ++b) {
    int legs = 0;
    for (int c : basis[b].form) {
      if (root_grade(pair.rs, pair.roots_rel[static_cast<size_t>(c)], mid_nodes) > 0) ++legs;
    }
    bool coeff_in_q = contains(adj.q_part_index, static_cast<int>(basis[b].coeff));
    if (legs == 2 || (legs >= 1 && coeff_in_q)) cols.push_back(static_cast<Eigen::Index>(b));
  }
  QMat out = QMat::Zero(cxA.dim(2), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out(cols[j], static_cast<Eigen::Index>(j)) = Rational(1);
  return out;
}

}  // namespace bgg
