#include "ghal/matrix.hpp"

#include <ostream>

#include "ghal/error.hpp"

namespace ghal {

GVec operator+(const GVec& a, const GVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector sizes differ");
  GVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

GVec operator-(const GVec& a, const GVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector sizes differ");
  GVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

GVec operator*(const GaussRat& c, const GVec& v) {
  GVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

GaussRat dot(const GVec& a, const GVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector sizes differ");
  GaussRat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const GVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

GMat GMat::identity(size_t n) {
  GMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
  return m;
}

GMat GMat::scalar(size_t n, const GaussRat& c) {
  GMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

GMat GMat::from_rows(const std::vector<GVec>& rows) {
  if (rows.empty()) return GMat();
  GMat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(errc::dimension_mismatch, "ragged rows");
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

GMat GMat::from_cols(const std::vector<GVec>& cols) {
  if (cols.empty()) return GMat();
  GMat m(cols[0].size(), cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) fail(errc::dimension_mismatch, "ragged columns");
    for (size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

GVec GMat::row(size_t r) const {
  GVec v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

GVec GMat::col(size_t c) const {
  GVec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

GMat GMat::transpose() const {
  GMat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

GMat GMat::conj_transpose() const {
  GMat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conj();
  return t;
}

bool GMat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool GMat::is_identity() const {
  if (!is_square()) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

GMat GMat::operator-() const {
  GMat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

GMat& GMat::operator+=(const GMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix add");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

GMat& GMat::operator-=(const GMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix sub");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

GMat operator*(const GMat& a, const GMat& b) {
  if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product shapes");
  GMat m(a.rows_, b.cols_);
  for (size_t r = 0; r < a.rows_; ++r)
    for (size_t k = 0; k < a.cols_; ++k) {
      const GaussRat& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (size_t c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        m.at(r, c) += ark * b.at(k, c);
      }
    }
  return m;
}

GVec operator*(const GMat& a, const GVec& v) {
  if (a.cols_ != v.size()) fail(errc::dimension_mismatch, "matrix-vector shapes");
  GVec out(a.rows_);
  for (size_t r = 0; r < a.rows_; ++r)
    for (size_t c = 0; c < a.cols_; ++c)
      if (!a.at(r, c).is_zero()) out[r] += a.at(r, c) * v[c];
  return out;
}

GMat operator*(const GaussRat& c, GMat m) {
  for (size_t r = 0; r < m.rows_; ++r)
    for (size_t k = 0; k < m.cols_; ++k) m.at(r, k) *= c;
  return m;
}

bool operator<(const GMat& a, const GMat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const GMat& m) {
  os << "[";
  for (size_t r = 0; r < m.rows(); ++r) {
    os << (r ? " [" : "[");
    for (size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.at(r, c);
    os << "]";
  }
  return os << "]";
}

Echelon reduced_row_echelon(GMat m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // First nonzero entry at or below row r.
    size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    GaussRat inv = m.at(r, c).inverse();
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      GaussRat f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

size_t rank(const GMat& m) { return reduced_row_echelon(m).pivot_cols.size(); }

std::vector<GVec> kernel(const GMat& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<GVec> basis;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    GVec v(m.cols());
    v[fc] = GaussRat(1);
    for (size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
      v[e.pivot_cols[pr]] = -e.rref.at(pr, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GVec> solve(const GMat& a, const GVec& b) {
  if (a.rows() != b.size()) fail(errc::dimension_mismatch, "solve shapes");
  GMat aug(a.rows(), a.cols() + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  GVec x(a.cols());
  for (size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
    x[e.pivot_cols[pr]] = e.rref.at(pr, a.cols());
  return x;
}

GaussRat det(const GMat& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
  GMat a = m;
  GaussRat d(1);
  size_t n = a.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) return GaussRat(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    GaussRat inv = a.at(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      GaussRat f = a.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

bool invertible(const GMat& m) { return m.is_square() && !det(m).is_zero(); }

GMat inverse(const GMat& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  size_t n = m.rows();
  GMat aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = GaussRat(1);
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivot_cols.size() != n || e.pivot_cols.back() != n - 1)
    fail(errc::singular, "matrix is not invertible");
  GMat inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv.at(r, c) = e.rref.at(r, n + c);
  return inv;
}

std::vector<GVec> row_space_basis(const std::vector<GVec>& vectors) {
  if (vectors.empty()) return {};
  Echelon e = reduced_row_echelon(GMat::from_rows(vectors));
  std::vector<GVec> basis;
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) basis.push_back(e.rref.row(r));
  return basis;
}

bool in_span(const std::vector<GVec>& basis, const GVec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<GVec> rows = basis;
  size_t r0 = rank(GMat::from_rows(rows));
  rows.push_back(v);
  return rank(GMat::from_rows(rows)) == r0;
}

} // namespace ghal
