#include "hecurve/matrix.hpp"

#include <sstream>

namespace hecurve {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(static_cast<int>(rows[i].size()) == cols, Err::InvalidInput, "ragged matrix rows");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_long(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, Err::InvalidInput, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

RatVec Mat::row(int i) const {
  RatVec v(c_);
  for (int j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

RatVec Mat::col(int j) const {
  RatVec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  require(c_ == o.r_, Err::InvalidInput, "matrix product dimension mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int k = 0; k < c_; ++k) {
      const Rat& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Rat& y = o.at(k, j);
        if (!y.is_zero()) m.at(i, j) += x * y;
      }
    }
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  require(r_ == o.r_ && c_ == o.c_, Err::InvalidInput, "matrix sum dimension mismatch");
  Mat m(*this);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  require(r_ == o.r_ && c_ == o.c_, Err::InvalidInput, "matrix difference dimension mismatch");
  Mat m(*this);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::scaled(const Rat& c) const {
  Mat m(*this);
  for (auto& x : m.a_) x *= c;
  return m;
}

RatVec Mat::apply(const RatVec& v) const {
  require(static_cast<int>(v.size()) == c_, Err::InvalidInput, "matrix apply dimension mismatch");
  RatVec out(r_, Rat(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Fraction-free forward elimination on an integer matrix. Returns pivot
// columns; B is left in row-echelon form with exact divisions.
std::vector<int> bareiss_forward(std::vector<std::vector<mpz_class>>& B) {
  int rows = static_cast<int>(B.size());
  int cols = rows ? static_cast<int>(B[0].size()) : 0;
  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (B[i][col] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) std::swap(B[pr], B[r]);
    const mpz_class piv = B[r][col];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = B[i][j] * piv - B[i][col] * B[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        B[i][j] = t;
      }
      B[i][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

EchelonResult echelon_form(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> B(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < cols; ++j) {
      mpz_class d = m.at(i, j).den();
      mpz_class g = gcd(lcm, d);
      lcm = lcm / g * d;
    }
    for (int j = 0; j < cols; ++j) {
      const Rat& x = m.at(i, j);
      B[i][j] = x.num() * (lcm / x.den());
    }
  }
  std::vector<int> pivots = bareiss_forward(B);
  int rank = static_cast<int>(pivots.size());

  // Normalize to reduced echelon over Q.
  Mat rref(rank, cols);
  for (int r = 0; r < rank; ++r) {
    Rat inv = Rat(B[r][pivots[r]]).inv();
    for (int j = 0; j < cols; ++j) rref.at(r, j) = Rat(B[r][j]) * inv;
  }
  for (int r = rank - 1; r >= 0; --r) {
    for (int above = 0; above < r; ++above) {
      Rat c = rref.at(above, pivots[r]);
      if (c.is_zero()) continue;
      for (int j = pivots[r]; j < cols; ++j) rref.at(above, j) -= c * rref.at(r, j);
    }
  }
  return EchelonResult{rank, std::move(pivots), std::move(rref)};
}

int mat_rank(const Mat& m) { return echelon_form(m).rank; }

std::vector<RatVec> mat_kernel(const Mat& m) {
  EchelonResult e = echelon_form(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivot_cols) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec v(m.cols(), Rat(0));
    v[j] = Rat(1);
    for (int r = 0; r < e.rank; ++r) v[e.pivot_cols[r]] = -e.rref.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> mat_solve(const Mat& m, const RatVec& rhs) {
  require(static_cast<int>(rhs.size()) == m.rows(), Err::InvalidInput,
          "solve dimension mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  EchelonResult e = echelon_form(aug);
  for (int p : e.pivot_cols)
    if (p == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = e.rref.at(r, m.cols());
  return x;
}

std::optional<Mat> mat_inverse(const Mat& m) {
  require(m.rows() == m.cols(), Err::NotSquare, "inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  EchelonResult e = echelon_form(aug);
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

Rat mat_trace(const Mat& m) {
  require(m.rows() == m.cols(), Err::NotSquare, "trace of non-square matrix");
  Rat t(0);
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

Poly char_poly(const Mat& m) {
  require(m.rows() == m.cols(), Err::NotSquare, "characteristic polynomial of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: exact over Q.
  RatVec c(n + 1, Rat(0));
  c[n] = Rat(1);
  Mat M = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    M = m * M;
    Rat ck = -(mat_trace(M) / Rat(k));
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) M.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

}  // namespace hecurve
