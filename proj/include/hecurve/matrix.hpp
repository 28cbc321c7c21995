#pragma once

#include <optional>
#include <vector>

#include "hecurve/poly.hpp"
#include "hecurve/rational.hpp"

namespace hecurve {

/// Dense matrix over Q.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<RatVec>& rows, int cols);
  static Mat from_long(const std::vector<std::vector<long>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  RatVec row(int i) const;
  RatVec col(int j) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  Mat transpose() const;
  Mat scaled(const Rat& c) const;
  RatVec apply(const RatVec& v) const;  // matrix * column vector
  bool is_zero() const;
  bool is_identity() const;

  std::string str() const;

 private:
  int r_, c_;
  RatVec a_;
};

struct EchelonResult {
  int rank = 0;
  std::vector<int> pivot_cols;
  Mat rref;  // rank many nonzero rows, reduced
};

/// Fraction-free (Bareiss) elimination, then normalization to reduced
/// row-echelon form over Q.
EchelonResult echelon_form(const Mat& m);

int mat_rank(const Mat& m);
/// Basis of the right kernel {x : m x = 0}.
std::vector<RatVec> mat_kernel(const Mat& m);
/// One solution of m x = rhs, if any.
std::optional<RatVec> mat_solve(const Mat& m, const RatVec& rhs);
std::optional<Mat> mat_inverse(const Mat& m);  // nullopt when singular; errors NotSquare
/// Monic characteristic polynomial det(tI - m); errors NotSquare.
Poly char_poly(const Mat& m);
Rat mat_trace(const Mat& m);

/// Incremental row span over a field, kept in reduced echelon form.
template <class F>
class SpanT {
 public:
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduce a vector against the span (eliminating all pivot coordinates).
  std::vector<F> reduce(std::vector<F> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const F& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      F factor = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - factor * rows_[r][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto red = reduce(v);
    for (const auto& x : red)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Insert a vector; returns true when the span grew.
  bool insert(std::vector<F> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) {
        piv = static_cast<int>(j);
        break;
      }
    }
    if (piv < 0) return false;
    F inv = v[piv].inv();
    for (auto& x : v) x = x * inv;
    // Back-eliminate the new pivot from existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
      const F& c = rows_[r][piv];
      if (c.is_zero()) continue;
      F factor = c;
      for (size_t j = 0; j < v.size(); ++j) rows_[r][j] = rows_[r][j] - factor * v[j];
    }
    // Keep rows ordered by pivot column.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

 private:
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

using RowSpan = SpanT<Rat>;

}  // namespace hecurve
