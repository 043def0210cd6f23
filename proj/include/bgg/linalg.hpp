#ifndef BGG_LINALG_HPP
#define BGG_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bgg/rational.hpp"

namespace bgg {

using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Row-reduces `m` to reduced row echelon form in place.  Pivots are always
/// the first nonzero entry found scanning columns left to right, rows top to
/// bottom, so the result is deterministic.  Returns the pivot column indices.
std::vector<Eigen::Index> rref_in_place(QMat& m);

Eigen::Index rank_of(const QMat& m);

bool is_zero(const QMat& m);

/// Columns form a basis of ker(m).  Free variables are taken in column order.
QMat kernel_basis(const QMat& m);

/// Basis of the exact eigenspace ker(m - lambda id) of a square matrix.
QMat eigenspace_basis(const QMat& m, const Rational& lambda);

/// Columns of `m` with the pivot indices of rref(m): a deterministic subset
/// of the columns spanning the column space.
QMat image_basis(const QMat& m);

/// Indices of the pivot columns of rref(m).
std::vector<Eigen::Index> independent_columns(const QMat& m);

/// Solves m x = b exactly; empty if inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

/// Solves m X = B columnwise; empty if any column is inconsistent.
std::optional<QMat> solve_matrix(const QMat& m, const QMat& b);

/// True iff v lies in the column span of `basis`.
bool in_span(const QMat& basis, const QVec& v);

/// True iff every column of vs lies in the column span of `basis`.
bool span_contains(const QMat& basis, const QMat& vs);

/// Coordinates of v in the (independent) columns of `basis`; throws if
/// v is outside the span.
QVec coords_in_basis(const QMat& basis, const QVec& v);

QMat identity(Eigen::Index n);

/// Horizontal concatenation; either side may have zero columns.
QMat hcat(const QMat& a, const QMat& b);

/// Matrix with the selected columns of m, in the given order.
QMat select_columns(const QMat& m, const std::vector<Eigen::Index>& cols);

/// Matrix with the selected rows of m, in the given order.
QMat select_rows(const QMat& m, const std::vector<Eigen::Index>& rows);

/// Incremental span with O(dim * rank) membership tests.
class SpanReducer {
public:
  explicit SpanReducer(Eigen::Index ambient) : ambient_(ambient) {}
  explicit SpanReducer(const QMat& cols);

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const QVec& v);
  bool contains(const QVec& v) const;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

private:
  Eigen::Index ambient_;
  std::vector<std::pair<Eigen::Index, QVec>> rows_;  // (pivot, normalized vector)
  QVec reduce(const QVec& v) const;
};

}  // namespace bgg

#endif
