#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinhecke/coeff.hpp"
#include "spinhecke/errors.hpp"

namespace spinhecke {

inline GaussRat field_inverse(const GaussRat& c) { return c.inverse(); }
inline Laurent field_inverse(const Laurent& c) { return c.inverse(); }

inline std::pair<std::string, bool> coeff_text(const GaussRat& c) {
  return {c.to_string(), c.is_atomic()};
}
inline std::pair<std::string, bool> coeff_text(const Laurent& c) {
  bool atomic = c.is_monomial() && c.terms()[0].second.is_atomic();
  return {c.to_string(), atomic};
}

// Dense univariate polynomial, c[k] is the coefficient of x^k.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const C& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)

  static UPoly x() { return monomial(C(1), 1); }
  static UPoly monomial(const C& c, int k) {
    std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
    v[static_cast<std::size_t>(k)] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int k) const {
    if (k < 0 || k > degree()) return C(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const C& lead() const {
    if (c_.empty()) throw DomainError("zero_polynomial", "leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly scaled(const C& s) const {
    UPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Division with remainder; needs an invertible leading coefficient of d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DomainError("division_by_zero", "polynomial division by zero");
    C inv = field_inverse(d.lead());
    UPoly r = *this;
    std::vector<C> qv(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, C(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      C f = r.lead() * inv;
      qv[static_cast<std::size_t>(shift)] = f;
      r -= monomial(f, shift) * d;
    }
    return {UPoly(std::move(qv)), r};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_inverse(lead()));
  }

  C eval(const C& x) const {
    C acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  // Highest power first: "p^2 - 3".
  std::string to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      auto [text, atomic] = coeff_text(c_[k]);
      textfmt::append_term(out, text, atomic, mono);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

// Monic gcd over a field.
template <class C>
UPoly<C> poly_gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using QPoly = UPoly<GaussRat>;

}  // namespace spinhecke
