// Acceptance gate: one PASS/FAIL line per criterion. Optional argv selects criteria by number.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "spinhecke/algebras.hpp"
#include "spinhecke/isomorphisms.hpp"
#include "spinhecke/jm_cyclotomic.hpp"
#include "spinhecke/localization.hpp"
#include "spinhecke/representations.hpp"
#include "spinhecke/spin_affine.hpp"
#include "spinhecke/suites.hpp"

using namespace spinhecke;
using Clock = std::chrono::steady_clock;

namespace {

constexpr unsigned kSeed = 1;

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Report()> run;
};

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

void tag(Report& r, const std::string& prefix) {
  for (auto& c : r) c.relation = prefix + c.relation;
}

void add(Report& into, Report more, const std::string& prefix) {
  tag(more, prefix);
  append(into, more);
}

Check fact(const std::string& name, bool holds, std::string detail = "") {
  return make_check(name, holds, true, Clock::now(), std::move(detail));
}

Report criterion1() {
  Report r;
  for (int n = 2; n <= 5; ++n) {
    auto alg = SpinAlgebra::make(n, ZMode::Minus, false);
    auto cov = SpinAlgebra::make(n, ZMode::Cover, false);
    std::size_t f = factorial(n);
    std::string s = "n=" + std::to_string(n) + ":";
    r.push_back(fact(s + "spin basis = n!", enumerate_basis(*alg).size() == f));
    r.push_back(fact(s + "covering basis = 2n!", enumerate_basis(*cov).size() == 2 * f));
    r.push_back(fact(s + "even spin basis = n!/2", even_basis(*alg).size() == f / 2));
    r.push_back(fact(s + "even covering basis = n!", even_basis(*cov).size() == f));
    add(r, dimension_suite(n), s);
  }
  for (int n = 1; n <= 4; ++n) r.push_back(closure_suite(AlgebraKind::Spin, n));
  for (int n = 1; n <= 3; ++n) {
    r.push_back(closure_suite(AlgebraKind::Covering, n));
    r.push_back(closure_suite(AlgebraKind::HeckeClifford, n));
  }
  return r;
}

Report iso_criterion(bool affine, int max_n) {
  Report r;
  IsoOptions opt;
  opt.seed = kSeed;
  opt.round_trips = 100;
  opt.max_exponent = 2;
  for (int n = 1; n <= max_n; ++n) add(r, iso_suite(n, affine, opt), "n=" + std::to_string(n) + ":");
  return r;
}

Report criterion4() {
  auto jm = jm_images(3);
  Report r = jm_formula_checks(jm);
  r.push_back(fact("p2 canonical text", jm.p[1].to_string() == "q^-2 - 1 + q^2", jm.p[1].to_string()));
  r.push_back(fact("q2 canonical text", jm.q[1].to_string() == "(-q^-1 + q)*R1", jm.q[1].to_string()));
  r.push_back(fact("p3 canonical text",
                   jm.p[2].to_string() ==
                       "q^-4 - 2*q^-2 + 3 - 2*q^2 + q^4 + (1/2*q^-2 - 1 + 1/2*q^2)*R1*R2 + "
                       "(1/2*q^-2 - 1 + 1/2*q^2)*R2*R1",
                   jm.p[2].to_string()));
  r.push_back(fact("q3 canonical text",
                   jm.q[2].to_string() ==
                       "(-1/2*q^-3 + 1/2*q^-1 - 1/2*q + 1/2*q^3)*R2 + (-1/2*q^-1 + 1/2*q)*R1*R2*R1",
                   jm.q[2].to_string()));
  append(r, jm_hc_crosscheck(3));
  return r;
}

Report criterion5() {
  Report r;
  for (int n = 2; n <= 5; ++n) {
    std::string s = "n=" + std::to_string(n) + ":";
    add(r, spin_module_suite(n, kSeed, 50, n <= 4), s);
    r.push_back(fact(s + "gamma span rank = n-1", gamma_span_rank(n) == static_cast<std::size_t>(n - 1)));
  }
  // gamma_i is the image of R_i
  for (int n = 3; n <= 5; ++n) {
    std::string s = "n=" + std::to_string(n) + ":";
    r.push_back(fact(s + "gamma1*gamma2*gamma1 = 2*gamma1 + (q^2+q^-2)*gamma2",
                     act_expression(n, "R1*R2*R1") == act_expression(n, "2*R1 + (q^2 + q^-2)*R2")));
    r.push_back(fact(s + "gamma2*gamma1*gamma2 = (q^2+q^-2)*gamma1 + 2*gamma2",
                     act_expression(n, "R2*R1*R2") == act_expression(n, "(q^2 + q^-2)*R1 + 2*R2")));
    r.push_back(fact(s + "gamma1^2 = -2 - e^2", act_expression(n, "R1^2") == act_expression(n, "-2 - e^2")));
  }
  return r;
}

Report criterion6() {
  auto a3 = SpinAlgebra::make(3, ZMode::Minus, true);
  Report r = center_suite(a3);
  r.push_back(odd_center_check(a3));
  auto a2 = SpinAlgebra::make(2, ZMode::Minus, true);
  Check c2 = odd_center_check(a2);
  r.push_back(c2);
  r.push_back(fact("q1*q2 marked as an expected failure", !c2.expected && !c2.holds));
  return r;
}

Report criterion7() {
  Report r;
  for (int n = 2; n <= 4; ++n) {
    IntertwinerOptions opt;
    opt.braid = n == 3;
    add(r, intertwiner_suite(SpinAlgebra::make(n, ZMode::Minus, true), opt), "n=" + std::to_string(n) + ":");
  }
  return r;
}

Report criterion8() {
  Report r;
  struct Sample {
    const char* F;
    int case_number;
    IdealCase shape;
  };
  for (Sample s : {Sample{"X1^2 + 3*X1 + 1", 1, IdealCase::F}, Sample{"X1^2 - 1", 2, IdealCase::GQ},
                   Sample{"X1^3 + 2*X1^2 + 2*X1 + 1", 3, IdealCase::PlusOne},
                   Sample{"X1^3 + 2*X1^2 - 2*X1 - 1", 4, IdealCase::MinusOne}}) {
    auto img = theorem63_map(s.F, 1);
    r.push_back(fact(std::string("case of ") + s.F,
                     img.case_number == s.case_number && img.shape == s.shape && img.degrees_ok,
                     ideal_case_text(img.shape) + " with " + img.poly.to_string("p1")));
  }
  auto ideal = classify_ideal({parse_a1("p1 - 1"), parse_a1("q1")});
  for (int n = 1; n <= 4; ++n) {
    auto d = cyclotomic_dim(ideal, n);
    r.push_back(fact("n=" + std::to_string(n) + ":dim <p1 - 1, q1> = n! = dim spin",
                     d == factorial(n) && d == algebra_dimension(AlgebraKind::Spin, n), std::to_string(d)));
  }
  return r;
}

Report criterion9() {
  Report r;
  for (int n = 1; n <= 3; ++n) {
    std::string s = "n=" + std::to_string(n) + ":";
    for (const auto& k : algebra_kind_names()) add(r, associativity_suite(parse_algebra_kind(k), n, kSeed, 200), s);
    add(r, idempotence_suite(n), s);
  }
  for (int n = 2; n <= 3; ++n) r.push_back(delta_regularity_check(SpinAlgebra::make(n, ZMode::Minus, true), 4));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "basis dimensions and closure", 120, criterion1},
      {2, "finite isomorphisms, n <= 3", 60, [] { return iso_criterion(false, 3); }},
      {3, "affine isomorphisms, n <= 2", 120, [] { return iso_criterion(true, 2); }},
      {4, "Jucys-Murphy formulas", 0, criterion4},
      {5, "basic spin supermodule, n <= 5", 0, criterion5},
      {6, "center at n = 3", 0, criterion6},
      {7, "intertwiners, n <= 4", 300, criterion7},
      {8, "cyclotomic correspondence", 0, criterion8},
      {9, "engine soundness, n <= 3", 0, criterion9},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = Clock::now();
    Report r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::size_t failed = 0;
    for (const auto& k : r) failed += !k.pass();
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    bool pass = error.empty() && failed == 0 && !r.empty() && in_time;
    ok = ok && pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << r.size()
              << " checks, " << static_cast<long>(secs * 1000) << " ms";
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << ")\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (!in_time) std::cout << "    over the time limit\n";
    for (const auto& k : r)
      if (!k.pass()) std::cout << "    failed: " << k.relation << (k.detail.empty() ? "" : " [" + k.detail + "]") << "\n";
    std::cout.flush();
  }
  return ok ? 0 : 1;
}
