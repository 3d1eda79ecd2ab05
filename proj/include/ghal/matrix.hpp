#ifndef GHAL_MATRIX_HPP
#define GHAL_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ghal/gaussrat.hpp"

namespace ghal {

using GVec = std::vector<GaussRat>;

GVec operator+(const GVec& a, const GVec& b);
GVec operator-(const GVec& a, const GVec& b);
GVec operator*(const GaussRat& c, const GVec& v);
GaussRat dot(const GVec& a, const GVec& b);
bool is_zero(const GVec& v);

// Dense matrix over the gaussian rationals.
class GMat {
public:
  GMat() : rows_(0), cols_(0) {}
  GMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static GMat identity(size_t n);
  static GMat zero(size_t rows, size_t cols) { return GMat(rows, cols); }
  static GMat from_rows(const std::vector<GVec>& rows);
  static GMat from_cols(const std::vector<GVec>& cols);
  static GMat scalar(size_t n, const GaussRat& c);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussRat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const GaussRat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  GVec row(size_t r) const;
  GVec col(size_t c) const;

  GMat transpose() const;
  GMat conj_transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  GMat operator-() const;
  GMat& operator+=(const GMat& o);
  GMat& operator-=(const GMat& o);
  friend GMat operator+(GMat a, const GMat& b) { return a += b; }
  friend GMat operator-(GMat a, const GMat& b) { return a -= b; }
  friend GMat operator*(const GMat& a, const GMat& b);
  friend GVec operator*(const GMat& a, const GVec& v);
  friend GMat operator*(const GaussRat& c, GMat m);

  friend bool operator==(const GMat& a, const GMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const GMat& a, const GMat& b) { return !(a == b); }
  // Deterministic total order for use as a container key.
  friend bool operator<(const GMat& a, const GMat& b);

  // All entries flattened row-major.
  const std::vector<GaussRat>& flat() const { return data_; }

private:
  size_t rows_, cols_;
  std::vector<GaussRat> data_;
};

std::ostream& operator<<(std::ostream& os, const GMat& m);

// Row echelon form via Gaussian elimination with first-nonzero pivoting, fully
// deterministic. Returns the reduced form and the pivot column of each pivot row.
struct Echelon {
  GMat rref;
  std::vector<size_t> pivot_cols;
};

Echelon reduced_row_echelon(GMat m);

size_t rank(const GMat& m);

// Exact basis of the right null space { v : M v = 0 }. Empty iff M is injective.
std::vector<GVec> kernel(const GMat& m);

// Exact solution of A x = b, or nullopt if the system is inconsistent. When the
// solution space is positive-dimensional the pivot-based particular solution
// (free variables zero) is returned.
std::optional<GVec> solve(const GMat& a, const GVec& b);

GaussRat det(const GMat& m);
bool invertible(const GMat& m);
GMat inverse(const GMat& m);

// Basis (as a set of rows in reduced echelon form) of the span of the given vectors.
std::vector<GVec> row_space_basis(const std::vector<GVec>& vectors);

// Is v in the row span of basis (basis need not be reduced)?
bool in_span(const std::vector<GVec>& basis, const GVec& v);

} // namespace ghal

#endif
