#include "spinhecke/coeff.hpp"

#include <algorithm>

#include "spinhecke/errors.hpp"
#include "spinhecke/poly.hpp"

namespace spinhecke {

std::string to_string(const mpq_class& v) { return v.get_str(); }

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat GaussRat::rational(long num, long den) {
  if (den == 0) throw DomainError("division_by_zero", "zero denominator");
  return GaussRat(mpq_class(num, den));
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DomainError("division_by_zero", "inverse of zero");
  if (is_real()) return GaussRat(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

namespace {

std::string imag_text(const mpq_class& v) {
  if (v == 1) return "i";
  if (v == -1) return "-i";
  return v.get_str() + "*i";
}

}  // namespace

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string out = re_.get_str();
  if (sgn(im_) > 0) return out + " + " + imag_text(im_);
  return out + " - " + imag_text(-im_);
}

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, GaussRat(c));
}

Laurent::Laurent(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

Laurent::Laurent(const GaussRat& c, int exponent) {
  if (!c.is_zero()) terms_.emplace_back(exponent, c);
}

Laurent Laurent::epsilon() { return from_terms({{-1, GaussRat(-1)}, {1, GaussRat(1)}}); }

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Laurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero_polynomial", "exponent range of zero");
  return terms_.front().first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero_polynomial", "exponent range of zero");
  return terms_.back().first;
}

GaussRat Laurent::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_)
    if (e == exponent) return c;
  return GaussRat(0);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      GaussRat s = std::move(terms_[i].second);
      s += o.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1)
    return Laurent(a.terms_[0].second * b.terms_[0].second, a.terms_[0].first + b.terms_[0].first);
  int lo = a.terms_.front().first + b.terms_.front().first;
  int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<GaussRat> acc(static_cast<std::size_t>(hi - lo + 1));
  std::vector<bool> touched(acc.size(), false);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto k = static_cast<std::size_t>(ea + eb - lo);
      if (touched[k]) {
        acc[k] += ca * cb;
      } else {
        acc[k] = ca * cb;
        touched[k] = true;
      }
    }
  }
  Laurent r;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (touched[k] && !acc[k].is_zero()) r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Laurent Laurent::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Laurent r(1);
  Laurent b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return r;
}

Laurent Laurent::inverse() const {
  if (!is_monomial())
    throw DomainError("not_invertible", "only monomials are invertible in the Laurent ring: " + to_string());
  return Laurent(terms_[0].second.inverse(), -terms_[0].first);
}

Laurent Laurent::bar() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

GaussRat Laurent::eval(const GaussRat& q0) const {
  if (q0.is_zero()) throw DomainError("zero_substitution", "q0 = 0 is not allowed");
  GaussRat acc(0);
  GaussRat inv = q0.inverse();
  for (const auto& [e, c] : terms_) {
    GaussRat p(1);
    const GaussRat& base = e >= 0 ? q0 : inv;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
    acc += c * p;
  }
  return acc;
}

namespace {

QPoly to_poly(const Laurent& a, int& shift) {
  shift = a.min_exponent();
  std::vector<GaussRat> v(static_cast<std::size_t>(a.max_exponent() - shift + 1));
  for (const auto& [e, c] : a.terms()) v[static_cast<std::size_t>(e - shift)] = c;
  return QPoly(std::move(v));
}

Laurent from_poly(const QPoly& p, int shift) {
  std::vector<Laurent::Term> t;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) t.emplace_back(k + shift, p.coeff(k));
  return Laurent::from_terms(std::move(t));
}

}  // namespace

bool Laurent::exact_divide(const Laurent& d, Laurent& quotient) const {
  if (d.is_zero()) throw DomainError("division_by_zero", "Laurent division by zero");
  if (is_zero()) {
    quotient = Laurent();
    return true;
  }
  if (d.is_monomial()) {
    quotient = *this * d.inverse();
    return true;
  }
  int sa = 0, sd = 0;
  QPoly pa = to_poly(*this, sa);
  QPoly pd = to_poly(d, sd);
  auto [qq, r] = pa.divmod(pd);
  if (!r.is_zero()) return false;
  quotient = from_poly(qq, sa - sd);
  return true;
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b.is_zero() ? Laurent() : laurent_gcd(b, b);
  if (b.is_zero()) return laurent_gcd(a, a);
  int sa = 0, sb = 0;
  QPoly g = poly_gcd(to_poly(a, sa), to_poly(b, sb));
  return from_poly(g, 0);
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    textfmt::append_term(out, c.to_string(), c.is_atomic(), mono);
  }
  return out;
}

}  // namespace spinhecke

namespace spinhecke::textfmt {

void append_term(std::string& out, const std::string& coeff, bool coeff_atomic,
                 const std::string& mono) {
  std::string term;
  if (mono.empty()) {
    term = coeff;
  } else if (coeff == "1") {
    term = mono;
  } else if (coeff == "-1") {
    term = "-" + mono;
  } else if (coeff_atomic) {
    term = coeff + "*" + mono;
  } else {
    term = "(" + coeff + ")*" + mono;
  }
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace spinhecke::textfmt
