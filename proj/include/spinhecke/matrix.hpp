#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinhecke/coeff.hpp"

namespace spinhecke {

class LMatrix {
 public:
  LMatrix() = default;
  LMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static LMatrix identity(std::size_t n);
  static LMatrix scalar(std::size_t n, const Laurent& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Laurent& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Laurent& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Laurent>& entries() const { return a_; }

  LMatrix& operator+=(const LMatrix& o);
  LMatrix& operator-=(const LMatrix& o);
  friend LMatrix operator+(LMatrix a, const LMatrix& b) { return a += b; }
  friend LMatrix operator-(LMatrix a, const LMatrix& b) { return a -= b; }
  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator*(const Laurent& c, const LMatrix& m);
  friend bool operator==(const LMatrix& a, const LMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  bool is_zero() const;
  // Kronecker product
  LMatrix kron(const LMatrix& o) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Laurent> a_;
};

LMatrix operator*(const LMatrix& a, const LMatrix& b);
LMatrix operator*(const Laurent& c, const LMatrix& m);

using LRows = std::vector<std::vector<Laurent>>;

// Rank over Q(i), entries must be constants.
std::size_t rank_constant(const LRows& rows);
// Rank after substituting q = q0; a lower bound for the generic rank.
std::size_t rank_specialized(const LRows& rows, const GaussRat& q0);
// Exact rank over Q(i)(q) by fraction-free elimination with content removal.
std::size_t rank_generic(const LRows& rows);
// Exact rank over Q(i)(q): a specialization certifies full row rank, otherwise rank_generic.
std::size_t rank_exact(const LRows& rows);

}  // namespace spinhecke
