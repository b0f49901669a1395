#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace spinhecke {

// Exact Gaussian rational re + im*i.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0);

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Text such as "3/2", "-i", "1/2 + 3*i".
  std::string to_string() const;
  // True when to_string() has a single summand and can be juxtaposed without brackets.
  bool is_atomic() const { return sgn(re_) == 0 || sgn(im_) == 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Laurent polynomial in q with GaussRat coefficients, kept sorted by exponent with zeros pruned.
class Laurent {
 public:
  using Term = std::pair<int, GaussRat>;

  Laurent() = default;
  Laurent(long c);                 // NOLINT(google-explicit-constructor)
  Laurent(const GaussRat& c);      // NOLINT(google-explicit-constructor)
  Laurent(const GaussRat& c, int exponent);

  static Laurent q(int exponent = 1) { return Laurent(GaussRat(1), exponent); }
  // q - q^-1
  static Laurent epsilon();
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  GaussRat coefficient(int exponent) const;
  GaussRat constant_term() const { return coefficient(0); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const GaussRat& c);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent pow(int k) const;
  // Only monomials are units; throws DomainError otherwise.
  Laurent inverse() const;
  // q -> q^-1, coefficients untouched.
  Laurent bar() const;
  // Multiply by q^k.
  Laurent shifted(int k) const;
  // Substitute q = q0; q0 must be nonzero.
  GaussRat eval(const GaussRat& q0) const;

  // this / d when d divides this in the Laurent ring.
  bool exact_divide(const Laurent& d, Laurent& quotient) const;

  // "3/2*q^-1 + i*q^2"
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Laurent operator*(const Laurent& a, const Laurent& b);

// gcd of Laurent polynomials up to a unit, normalised monic with lowest exponent 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

std::string to_string(const mpq_class& v);

}  // namespace spinhecke

namespace spinhecke::textfmt {

// Appends coeff*mono to a running sum, choosing " + " or " - " and bracketing compound coefficients.
void append_term(std::string& out, const std::string& coeff, bool coeff_atomic,
                 const std::string& mono);

}  // namespace spinhecke::textfmt
