#include "spinhecke/jm_cyclotomic.hpp"

#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/isomorphisms.hpp"
#include "spinhecke/relations.hpp"

namespace spinhecke {

namespace {

using Clock = std::chrono::steady_clock;

std::string istr(int i) { return std::to_string(i); }

}  // namespace

JMImages jm_images(int n) {
  if (n < 1) throw DomainError("invalid_argument", "n must be positive");
  JMImages jm;
  jm.alg = SpinAlgebra::make(n, ZMode::Minus, false);
  const auto& alg = jm.alg;
  Laurent e = Laurent::epsilon(), e2 = e * e;
  GaussRat half = GaussRat::rational(1, 2);
  jm.p.push_back(SpinElement::scalar(alg, 1));
  jm.q.push_back(SpinElement(alg));
  for (int i = 1; i < n; ++i) {
    auto R = generator(alg, alg->R(i));
    const auto& p = jm.p.back();
    const auto& q = jm.q.back();
    auto pn = Laurent(-half) * (R * p * R) + Laurent(half) * e * (q * R + R * q) + Laurent(half) * e2 * p;
    auto qn = Laurent(half) * (R * q * R) + Laurent(half) * e * (p * R + R * p) - Laurent(half) * e2 * q;
    jm.p.push_back(pn);
    jm.q.push_back(qn);
  }
  return jm;
}

GeneratorMap<SpinAlgebra, SpinAlgebra> jm_map(const JMImages& jm) {
  auto image = [jm](Gen g) {
    std::size_t k = static_cast<std::size_t>(g.index - 1);
    if (g.kind == GenKind::p) return jm.p.at(k);
    if (g.kind == GenKind::q) return jm.q.at(k);
    return generator(jm.alg, g);
  };
  return GeneratorMap<SpinAlgebra, SpinAlgebra>(jm.alg, image);
}

Report jm_formula_checks(const JMImages& jm) {
  struct Formula {
    std::string name;
    const SpinElement* value;
    std::string text;
  };
  std::vector<Formula> fs;
  int n = jm.alg->n();
  if (n >= 2) {
    fs.push_back({"p2 = 1 + e^2", &jm.p[1], "1 + e^2"});
    fs.push_back({"q2 = e*R1", &jm.q[1], "e*R1"});
  }
  if (n >= 3) {
    fs.push_back({"p3 = e^2/2*(R1*R2 + R2*R1) + (1 + e^2)^2", &jm.p[2], "1/2*e^2*(R1*R2 + R2*R1) + (1 + e^2)^2"});
    fs.push_back({"q3 = e/2*(R1*R2*R1 + (2 + e^2)*R2)", &jm.q[2], "1/2*e*(R1*R2*R1 + (2 + e^2)*R2)"});
  }
  Report out;
  for (const auto& f : fs) {
    auto t0 = Clock::now();
    auto expect = parse_element(jm.alg, f.text);
    std::string got = f.value->to_string(), want = expect.to_string();
    out.push_back(make_check(f.name, *f.value == expect && got == want, true, t0, got));
  }
  return out;
}

Report jm_relation_suite(int n) {
  auto jm = jm_images(n);
  auto src = SpinAlgebra::make(n, ZMode::Minus, true);
  auto f = jm_map(jm);
  Report out;
  auto t0 = Clock::now();
  bool parity = true;
  for (int i = 0; i < n; ++i) {
    auto sp = jm.p[static_cast<std::size_t>(i)].parity(), sq = jm.q[static_cast<std::size_t>(i)].parity();
    parity = parity && sp == 0 && (jm.q[static_cast<std::size_t>(i)].is_zero() || sq == 1);
  }
  out.push_back(make_check("p_i even, q_i odd", parity, true, t0));
  append(out, check_relations_under(src, f, defining_relations(AlgebraKind::SpinAffine, n), "jm:"));
  return out;
}

std::pair<std::vector<HCElement>, std::vector<HCElement>> hc_jucys_murphy(int n) {
  auto hc = HCAlgebra::make(n, false);
  std::vector<HCElement> J{HCElement::scalar(hc, 1)}, Jinv{HCElement::scalar(hc, 1)};
  for (int i = 1; i < n; ++i) {
    std::string a = istr(i), b = istr(i + 1);
    auto lead = parse_element(hc, "T" + a + " + e*c" + a + "*c" + b);
    auto T = generator(hc, HCAlgebra::T(i));
    auto Tinv = parse_element(hc, "T" + a + " - e");
    auto lead_inv = parse_element(hc, "T" + a + " + e*c" + a + "*c" + b + " - e");
    J.push_back(lead * J.back() * T);
    Jinv.push_back(Tinv * Jinv.back() * lead_inv);
  }
  return {J, Jinv};
}

Report jm_hc_crosscheck(int n) {
  auto jm = jm_images(n);
  auto [J, Jinv] = hc_jucys_murphy(n);
  auto hc = HCAlgebra::make(n, false);
  auto ten = TensorAlgebra::make(n, false);
  auto f = phi_map(n, false);
  auto embed = [&](const SpinElement& x) {
    TensorElement out(ten);
    for (const auto& [w, c] : x.terms()) out += TensorElement::word(ten, TensorWord{0, w}, c);
    return out;
  };
  Laurent half(GaussRat::rational(1, 2));
  Report out;
  for (int i = 1; i <= n; ++i) {
    std::size_t k = static_cast<std::size_t>(i - 1);
    auto t0 = Clock::now();
    out.push_back(make_check("J" + istr(i) + "*J" + istr(i) + "^-1 = 1", J[k] * Jinv[k] == HCElement::scalar(hc, 1), true, t0));
    t0 = Clock::now();
    out.push_back(make_check("p" + istr(i) + " = phi(J + J^-1)/2", half * f(J[k] + Jinv[k]) == embed(jm.p[k]), true, t0));
    t0 = Clock::now();
    auto c = generator(hc, HCAlgebra::c(i));
    out.push_back(make_check("q" + istr(i) + " = phi((J - J^-1)c)/2", half * f((J[k] - Jinv[k]) * c) == embed(jm.q[k]),
                             true, t0));
  }
  return out;
}

A1Element operator*(const A1Element& a, const A1Element& b) {
  QPoly one_minus_p2 = QPoly(GaussRat(1)) - QPoly::monomial(GaussRat(1), 2);
  return {a.even * b.even + a.odd * b.odd * one_minus_p2, a.even * b.odd + a.odd * b.even};
}

namespace {

GaussRat constant_of(const Laurent& c) {
  if (!c.is_constant()) throw DomainError("non_constant_coefficient", "coefficients must not depend on q here");
  return c.constant_term();
}

}  // namespace

A1Element parse_a1(const std::string& text) {
  EvalContext<A1Element> ctx;
  ctx.scalar = [](const Laurent& c) { return A1Element{QPoly(constant_of(c)), QPoly()}; };
  ctx.gen = [](const GenRef& ref, bool inverse) {
    if (inverse) throw ParseError("negative_power", ref.name + " is not invertible", ref.offset);
    if ((ref.name == "p" || ref.name == "q") && (ref.index == -1 || ref.index == 1)) {
      if (ref.name == "p") return A1Element{QPoly::x(), QPoly()};
      return A1Element{QPoly(), QPoly(GaussRat(1))};
    }
    throw ParseError("unknown_generator", "only p1 and q1 may appear", ref.offset);
  };
  return evaluate(*parse_ast(text), ctx);
}

std::string ideal_case_text(IdealCase c) {
  switch (c) {
    case IdealCase::F:
      return "<f(p1)>";
    case IdealCase::GQ:
      return "<g(p1)*q1>";
    case IdealCase::PlusOne:
      return "<(p1 + 1)*g(p1), g(p1)*q1>";
    case IdealCase::MinusOne:
      return "<(p1 - 1)*g(p1), g(p1)*q1>";
  }
  return "";
}

namespace {

QPoly gcd_or(const QPoly& acc, const QPoly& x) { return acc.is_zero() ? x.monic() : poly_gcd(acc, x); }

QPoly one_minus_p2() { return QPoly(GaussRat(1)) - QPoly::monomial(GaussRat(1), 2); }

}  // namespace

CycIdeal classify_ideal(const std::vector<A1Element>& gens) {
  QPoly H, G;
  bool any = false;
  for (const auto& x : gens) {
    if (x.is_zero()) continue;
    any = true;
    if (!x.even.is_zero() && !x.odd.is_zero())
      throw DomainError("not_homogeneous", "ideal generators must be even or odd");
    if (!x.even.is_zero()) H = gcd_or(H, x.even);
    else G = gcd_or(G, x.odd);
  }
  if (!any) throw DomainError("zero_ideal", "the zero ideal has no cyclotomic quotient");
  // even part: (h) + (1 - p^2)(g); odd part: (h) + (g)
  QPoly f = H, g = G;
  if (!G.is_zero()) f = gcd_or(f, G * one_minus_p2());
  if (!H.is_zero()) g = gcd_or(g, H);
  return ideal_from_fg(f.monic(), g.monic());
}

CycIdeal ideal_from_fg(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("zero_ideal", "f and g must be nonzero");
  QPoly fm = f.monic(), gm = g.monic();
  if (!(fm.divmod(gm).second.is_zero()) || !((gm * one_minus_p2()).divmod(fm).second.is_zero()))
    throw DomainError("inconsistent_ideal", "need g | f and f | (p^2 - 1) g");
  int d = fm.degree() - gm.degree();
  if (d == 0) return {IdealCase::F, fm, gm};
  if (d == 2) return {IdealCase::GQ, fm, gm};
  QPoly quo = fm.divmod(gm).first;
  if (quo == QPoly::x() + QPoly(GaussRat(1))) return {IdealCase::PlusOne, fm, gm};
  if (quo == QPoly::x() - QPoly(GaussRat(1))) return {IdealCase::MinusOne, fm, gm};
  throw DomainError("inconsistent_ideal", "f/g must be p1 + 1 or p1 - 1");
}

unsigned long long cyclotomic_dim(const CycIdeal& ideal, int n) {
  if (n < 0) throw DomainError("invalid_argument", "n must be nonnegative");
  unsigned long long base = static_cast<unsigned long long>(ideal.f.degree() + ideal.g.degree());
  unsigned long long out = 1;
  for (int i = 1; i <= n; ++i) out *= base * static_cast<unsigned long long>(i);
  return out;
}

CyclotomicImage theorem63_map(const std::string& F, int n) {
  EvalContext<LPoly> ctx;
  ctx.scalar = [](const Laurent& c) { return LPoly(c); };
  ctx.gen = [](const GenRef& ref, bool inverse) {
    if (inverse || ref.name != "X" || (ref.index != -1 && ref.index != 1))
      throw ParseError("unknown_generator", "F must be a polynomial in X1", ref.offset);
    return LPoly::x();
  };
  return theorem63_map(evaluate(*parse_ast(F), ctx), n);
}

CyclotomicImage theorem63_map(const LPoly& F, int n) {
  int d = F.degree();
  if (d < 1) throw DomainError("invalid_polynomial", "F must have positive degree");
  Laurent a0 = F.coeff(0);
  if (!F.lead().is_one()) throw DomainError("technical_condition", "leading coefficient must be 1");
  for (int i = 0; i <= d; ++i)
    if (!(F.coeff(i) == a0 * F.coeff(d - i)))
      throw DomainError("technical_condition", "need a_i = a_0 a_{d-i} for i = " + istr(i));
  CyclotomicImage out;
  out.degree = d;
  out.k = d / 2;
  out.a0 = a0;
  bool plus = a0.is_one();
  out.case_number = d % 2 == 0 ? (plus ? 1 : 2) : (plus ? 3 : 4);

  auto hc = HCAlgebra::make(n, true);
  auto ten = TensorAlgebra::make(n, true);
  auto X = generator(hc, HCAlgebra::X(1));
  auto Xi = generator(hc, HCAlgebra::Xinv(1));
  auto x = HCElement::scalar(hc, 0);
  auto pw = HCElement::scalar(hc, 1);
  for (int i = 0; i < out.k; ++i) pw = pw * Xi;
  for (int i = 0; i <= d; ++i) {
    x += F.coeff(i) * pw;
    pw = pw * X;
  }
  auto img = phi_map(n, true)(x);
  out.image_text = img.to_string();
  std::vector<Laurent> ev, od;
  for (const auto& [w, c] : img.terms()) {
    const SpinWord& r = w.right;
    bool pure = !r.has_stair() && !r.z;
    for (int j = 2; j <= n; ++j) pure = pure && r.p(j) == 0;
    bool even = pure && w.cmask == 0 && r.qmask == 0;
    bool odd = pure && w.cmask == 1 && r.qmask == 1;
    if (!even && !odd) throw Error("internal", "image leaves the span of p1 and c1*q1");
    auto& v = even ? ev : od;
    std::size_t e = static_cast<std::size_t>(r.p(1));
    if (v.size() <= e) v.resize(e + 1);
    v[e] = c;
  }
  out.even = LPoly(ev);
  out.odd = LPoly(od);
  LPoly one(Laurent(1)), p = LPoly::x();
  if (out.odd.is_zero()) {
    out.shape = IdealCase::F;
    out.poly = out.even.monic();
  } else if (out.even.is_zero()) {
    out.shape = IdealCase::GQ;
    out.poly = out.odd.monic();
  } else if (out.even == -((p + one) * out.odd)) {
    out.shape = IdealCase::PlusOne;
    out.poly = out.odd.monic();
  } else if (out.even == -((p - one) * out.odd)) {
    out.shape = IdealCase::MinusOne;
    out.poly = out.odd.monic();
  } else {
    throw Error("internal", "image matches none of the four shapes");
  }
  int want = out.shape == IdealCase::GQ ? out.k - 1 : out.k;
  out.degrees_ok = static_cast<int>(out.shape) == out.case_number && out.poly.degree() == want;
  return out;
}

}  // namespace spinhecke
