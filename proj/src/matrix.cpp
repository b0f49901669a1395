#include "spinhecke/matrix.hpp"

#include <algorithm>

#include "spinhecke/errors.hpp"

namespace spinhecke {

LMatrix LMatrix::identity(std::size_t n) { return scalar(n, Laurent(1)); }

LMatrix LMatrix::scalar(std::size_t n, const Laurent& c) {
  LMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

LMatrix& LMatrix::operator+=(const LMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape_mismatch", "matrix shapes differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

LMatrix& LMatrix::operator-=(const LMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape_mismatch", "matrix shapes differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("shape_mismatch", "matrix shapes differ");
  LMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Laurent& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

LMatrix operator*(const Laurent& c, const LMatrix& m) {
  LMatrix r = m;
  for (auto& x : r.a_) x = c * x;
  return r;
}

bool LMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Laurent& x) { return x.is_zero(); });
}

LMatrix LMatrix::kron(const LMatrix& o) const {
  LMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

std::vector<std::vector<std::string>> LMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

namespace {

std::size_t rank_field(std::vector<std::vector<GaussRat>> m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    GaussRat inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      GaussRat f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_constant(const LRows& rows) {
  std::vector<std::vector<GaussRat>> m;
  for (const auto& r : rows) {
    std::vector<GaussRat> v;
    for (const auto& x : r) {
      if (!x.is_constant()) throw DomainError("non_constant", "matrix entry depends on q");
      v.push_back(x.constant_term());
    }
    m.push_back(std::move(v));
  }
  return rank_field(std::move(m));
}

std::size_t rank_specialized(const LRows& rows, const GaussRat& q0) {
  std::vector<std::vector<GaussRat>> m;
  for (const auto& r : rows) {
    std::vector<GaussRat> v;
    for (const auto& x : r) v.push_back(x.eval(q0));
    m.push_back(std::move(v));
  }
  return rank_field(std::move(m));
}

std::size_t rank_generic(const LRows& rows) {
  LRows m = rows;
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = m.size();
    for (std::size_t r = rank; r < m.size(); ++r)
      if (!m[r][c].is_zero() && (piv == m.size() || m[r][c].terms().size() < m[piv][c].terms().size())) piv = r;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const auto pivot_row = m[rank];
    const Laurent& a = pivot_row[c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      Laurent b = m[r][c];
      Laurent g;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = a * m[r][k] - b * pivot_row[k];
        if (!m[r][k].is_zero()) g = g.is_zero() ? m[r][k] : laurent_gcd(g, m[r][k]);
      }
      if (!g.is_zero() && !g.is_monomial())
        for (std::size_t k = c; k < cols; ++k) {
          Laurent quo;
          if (!m[r][k].exact_divide(g, quo)) throw Error("internal", "content division failed");
          m[r][k] = quo;
        }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const LRows& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t bound = std::min(rows.size(), cols);
  for (long v : {3L, 5L, 7L}) {
    if (rank_specialized(rows, GaussRat::rational(v, 2)) == bound) return bound;
  }
  return rank_generic(rows);
}

}  // namespace spinhecke
