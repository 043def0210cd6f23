#include "bgg/linalg.hpp"

namespace bgg {

std::vector<Eigen::Index> rref_in_place(QMat& m) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Eigen::Index rank_of(const QMat& m) {
  QMat t = m;
  return static_cast<Eigen::Index>(rref_in_place(t).size());
}

bool is_zero(const QMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

QMat kernel_basis(const QMat& m) {
  QMat t = m;
  std::vector<Eigen::Index> pivots = rref_in_place(t);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  QMat ker = QMat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    Eigen::Index fc = free_cols[k];
    ker(fc, static_cast<Eigen::Index>(k)) = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      ker(pivots[i], static_cast<Eigen::Index>(k)) = -t(static_cast<Eigen::Index>(i), fc);
    }
  }
  return ker;
}

QMat eigenspace_basis(const QMat& m, const Rational& lambda) {
  QMat shifted = m;
  for (Eigen::Index i = 0; i < m.rows() && i < m.cols(); ++i) shifted(i, i) -= lambda;
  return kernel_basis(shifted);
}

std::vector<Eigen::Index> independent_columns(const QMat& m) {
  QMat t = m;
  return rref_in_place(t);
}

QMat image_basis(const QMat& m) { return select_columns(m, independent_columns(m)); }

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  QMat aug = hcat(m, b);
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVec x = QVec::Zero(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) {
    x(pivots[i]) = aug(static_cast<Eigen::Index>(i), m.cols());
  }
  return x;
}

std::optional<QMat> solve_matrix(const QMat& m, const QMat& b) {
  QMat aug = hcat(m, b);
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  for (Eigen::Index p : pivots) {
    if (p >= m.cols()) return std::nullopt;
  }
  QMat x = QMat::Zero(m.cols(), b.cols());
  for (size_t i = 0; i < pivots.size(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      x(pivots[i], j) = aug(static_cast<Eigen::Index>(i), m.cols() + j);
    }
  }
  return x;
}

bool in_span(const QMat& basis, const QVec& v) { return solve(basis, v).has_value(); }

bool span_contains(const QMat& basis, const QMat& vs) {
  return solve_matrix(basis, vs).has_value();
}

QVec coords_in_basis(const QMat& basis, const QVec& v) {
  auto x = solve(basis, v);
  if (!x) throw std::runtime_error("coords_in_basis: vector outside span");
  return *x;
}

QMat identity(Eigen::Index n) {
  QMat m = QMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

QMat hcat(const QMat& a, const QMat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  QMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

QMat select_columns(const QMat& m, const std::vector<Eigen::Index>& cols) {
  QMat r(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) r.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
  return r;
}

QMat select_rows(const QMat& m, const std::vector<Eigen::Index>& rows) {
  QMat r(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) r.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
  return r;
}

SpanReducer::SpanReducer(const QMat& cols) : ambient_(cols.rows()) {
  for (Eigen::Index j = 0; j < cols.cols(); ++j) insert(cols.col(j));
}

QVec SpanReducer::reduce(const QVec& v) const {
  QVec r = v;
  for (const auto& [piv, u] : rows_) {
    if (!r(piv).is_zero()) {
      Rational f = r(piv);
      for (Eigen::Index i = 0; i < r.size(); ++i) {
        if (!u(i).is_zero()) r(i) -= f * u(i);
      }
    }
  }
  return r;
}

bool SpanReducer::insert(const QVec& v) {
  QVec r = reduce(v);
  Eigen::Index piv = -1;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) {
      piv = i;
      break;
    }
  }
  if (piv < 0) return false;
  Rational inv = Rational(1) / r(piv);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) r(i) *= inv;
  }
  rows_.emplace_back(piv, std::move(r));
  return true;
}

bool SpanReducer::contains(const QVec& v) const {
  QVec r = reduce(v);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) return false;
  }
  return true;
}

}  // namespace bgg
