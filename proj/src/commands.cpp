#include "spinhecke/commands.hpp"

#include <algorithm>

#include "spinhecke/algebras.hpp"
#include "spinhecke/errors.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/isomorphisms.hpp"
#include "spinhecke/jm_cyclotomic.hpp"
#include "spinhecke/localization.hpp"
#include "spinhecke/representations.hpp"
#include "spinhecke/spin_finite.hpp"
#include "spinhecke/suites.hpp"

namespace spinhecke {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

std::vector<std::string> command_names() {
  return {"nf", "mul", "map", "verify", "dims", "jm", "cyclotomic", "rep", "intertwine"};
}

std::vector<std::string> map_names() {
  std::vector<std::string> out{"phi", "psi", "phi-aff", "psi-aff", "jm"};
  for (bool affine : {false, true})
    for (const auto& s : involution_names(affine))
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

namespace {

std::string get_string(const json& a, const char* key) {
  if (!a.contains(key) || !a[key].is_string()) throw DomainError("missing_argument", std::string("--") + key + " is required");
  return a[key].get<std::string>();
}

std::string get_string_or(const json& a, const char* key, const std::string& dflt) {
  if (!a.contains(key) || a[key].is_null()) return dflt;
  if (!a[key].is_string()) throw DomainError("invalid_argument", std::string("--") + key + " must be a string");
  return a[key].get<std::string>();
}

int get_int_or(const json& a, const char* key, int dflt) {
  if (!a.contains(key) || a[key].is_null()) return dflt;
  if (!a[key].is_number_integer()) throw DomainError("invalid_argument", std::string("--") + key + " must be an integer");
  return a[key].get<int>();
}

int get_n(const json& a, int dflt = 3) {
  int n = get_int_or(a, "n", dflt);
  if (n < 1 || n > kMaxRank) throw DomainError("invalid_argument", "n must be between 1 and " + std::to_string(kMaxRank));
  return n;
}

bool timings(const json& a) { return a.contains("timings") && a["timings"].is_boolean() && a["timings"].get<bool>(); }

template <class A>
ojson element_json(const Element<A>& x) {
  ojson terms = ojson::array();
  for (const auto& [w, c] : x.terms()) {
    ojson t;
    t["coeff"] = c.to_string();
    ojson word = ojson::array();
    for (const Gen& g : x.algebra().letters(w)) word.push_back(gen_name(g));
    t["word"] = std::move(word);
    terms.push_back(std::move(t));
  }
  ojson out;
  out["text"] = x.to_string();
  out["terms"] = std::move(terms);
  return out;
}

ojson any_element_json(const AnyElement& x) {
  return std::visit([](const auto& e) { return element_json(e); }, x);
}

AnyElement parse_any(const AnyAlgebra& alg, const std::string& text) {
  return std::visit([&](const auto& a) -> AnyElement { return parse_element(a, text); }, alg);
}

ojson header(const std::string& algebra, int n) {
  ojson out;
  out["algebra"] = algebra;
  out["n"] = n;
  return out;
}

CommandResult cmd_nf(const json& a) {
  std::string name = get_string_or(a, "algebra", "spin");
  int n = get_n(a);
  std::string expr = get_string(a, "expr");
  auto alg = make_algebra(parse_algebra_kind(name), n);
  ojson out = header(name, n);
  out["expr"] = expr;
  out["normal_form"] = any_element_json(parse_any(alg, expr));
  return {out, kExitOk};
}

CommandResult cmd_mul(const json& a) {
  std::string name = get_string_or(a, "algebra", "spin");
  int n = get_n(a);
  std::string lhs = get_string(a, "lhs"), rhs = get_string(a, "rhs");
  auto alg = make_algebra(parse_algebra_kind(name), n);
  auto x = parse_any(alg, lhs), y = parse_any(alg, rhs);
  AnyElement prod = std::visit(
      [&](const auto& e) -> AnyElement {
        using E = std::decay_t<decltype(e)>;
        return e * std::get<E>(y);
      },
      x);
  ojson out = header(name, n);
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  out["product"] = any_element_json(prod);
  return {out, kExitOk};
}

CommandResult cmd_map(const json& a) {
  std::string name = get_string(a, "name");
  int n = get_n(a);
  std::string expr = get_string(a, "expr");
  ojson out;
  out["name"] = name;
  out["n"] = n;
  out["expr"] = expr;
  auto put = [&](const std::string& src, const std::string& dst, const ojson& img) {
    out["source"] = src;
    out["target"] = dst;
    out["image"] = img;
  };
  if (name == "phi" || name == "phi-aff") {
    bool aff = name == "phi-aff";
    auto src = HCAlgebra::make(n, aff);
    put(src->name(), TensorAlgebra::make(n, aff)->name(), element_json(evaluate_under(src, phi_map(n, aff), expr)));
  } else if (name == "psi" || name == "psi-aff") {
    bool aff = name == "psi-aff";
    auto src = TensorAlgebra::make(n, aff);
    put(src->name(), HCAlgebra::make(n, aff)->name(), element_json(evaluate_under(src, psi_map(n, aff), expr)));
  } else if (name == "jm") {
    auto src = SpinAlgebra::make(n, ZMode::Minus, true);
    auto jm = jm_images(n);
    put(src->name(), jm.alg->name(), element_json(evaluate_under(src, jm_map(jm), expr)));
  } else {
    std::string algebra = get_string_or(a, "algebra", "spin");
    AlgebraKind k = parse_algebra_kind(algebra);
    if (k != AlgebraKind::Spin && k != AlgebraKind::SpinAffine)
      throw DomainError("unsupported_algebra", "involutions act on spin or spin-affine");
    auto src = SpinAlgebra::make(n, ZMode::Minus, k == AlgebraKind::SpinAffine);
    put(src->name(), src->name(), element_json(evaluate_under(src, involution_map(src, name), expr)));
  }
  return {out, kExitOk};
}

CommandResult report_result(ojson out, const Report& r, const json& a) {
  out["all_pass"] = all_pass(r);
  out["report"] = report_json(r, timings(a));
  return {out, all_pass(r) ? kExitOk : kExitVerification};
}

CommandResult cmd_verify(const json& a) {
  SuiteArgs s;
  std::string suite = get_string(a, "suite");
  s.n = get_n(a);
  s.seed = static_cast<unsigned>(get_int_or(a, "seed", 1));
  std::string algebra = get_string_or(a, "algebra", "");
  if (!algebra.empty()) s.algebra = parse_algebra_kind(algebra);
  ojson out;
  out["suite"] = suite;
  out["n"] = s.n;
  out["seed"] = s.seed;
  if (!algebra.empty()) out["algebra"] = algebra;
  return report_result(out, run_suite(suite, s), a);
}

CommandResult cmd_dims(const json& a) {
  std::string name = get_string_or(a, "algebra", "spin");
  int n = get_n(a);
  AlgebraKind k = parse_algebra_kind(name);
  ojson out = header(name, n);
  out["dimension"] = algebra_dimension(k, n);
  if (k == AlgebraKind::Spin || k == AlgebraKind::Covering || k == AlgebraKind::HeckeT)
    out["even_dimension"] = even_dimension(k, n);
  return {out, kExitOk};
}

CommandResult cmd_jm(const json& a) {
  int n = get_n(a);
  auto jm = jm_images(n);
  ojson out;
  out["n"] = n;
  ojson p = ojson::array(), q = ojson::array();
  for (const auto& x : jm.p) p.push_back(x.to_string());
  for (const auto& x : jm.q) q.push_back(x.to_string());
  out["p"] = std::move(p);
  out["q"] = std::move(q);
  return {out, kExitOk};
}

ojson ideal_json(const CycIdeal& I, int n) {
  ojson out;
  out["case"] = static_cast<int>(I.form);
  out["form"] = ideal_case_text(I.form);
  out["f"] = I.f.to_string("p1");
  out["g"] = I.g.to_string("p1");
  out["dimension"] = cyclotomic_dim(I, n);
  return out;
}

CommandResult cmd_cyclotomic(const json& a) {
  int n = get_n(a, 1);
  ojson out;
  out["n"] = n;
  if (a.contains("ideal") && !a["ideal"].is_null()) {
    std::vector<A1Element> gens;
    ojson texts = ojson::array();
    for (const auto& g : a["ideal"]) {
      gens.push_back(parse_a1(g.get<std::string>()));
      texts.push_back(g.get<std::string>());
    }
    out["ideal"] = texts;
    out["classification"] = ideal_json(classify_ideal(gens), n);
    return {out, kExitOk};
  }
  std::string F = get_string(a, "F");
  auto r = theorem63_map(F, n);
  out["F"] = F;
  out["degree"] = r.degree;
  out["a0"] = r.a0.to_string();
  out["case"] = r.case_number;
  out["shape"] = ideal_case_text(r.shape);
  out[r.shape == IdealCase::F ? "f" : "g"] = r.poly.to_string("p1");
  out["image"] = r.image_text;
  out["degrees_ok"] = r.degrees_ok;
  unsigned long long dim = 1;
  for (int i = 1; i <= n; ++i) dim *= static_cast<unsigned long long>(r.degree) * static_cast<unsigned long long>(i);
  out["dimension"] = dim;
  return {out, kExitOk};
}

CommandResult cmd_rep(const json& a) {
  int n = get_n(a);
  std::string expr = get_string(a, "expr");
  auto m = act(parse_element(SpinAlgebra::make(n, ZMode::Minus, false), expr));
  ojson out;
  out["n"] = n;
  out["expr"] = expr;
  out["dimension"] = m.rows();
  out["matrix"] = m.to_strings();
  return {out, kExitOk};
}

CommandResult cmd_intertwine(const json& a) {
  int n = get_n(a);
  if (n < 2) throw DomainError("invalid_argument", "intertwiners need n >= 2");
  std::string check = get_string_or(a, "check", "all");
  auto alg = SpinAlgebra::make(n, ZMode::Minus, true);
  IntertwinerOptions opt;
  Report r;
  if (check == "all") {
    r = intertwiner_suite(alg, opt);
  } else if (check == "braid" || check == "far" || check == "square" || check == "conjugation") {
    opt.braid = check == "braid";
    opt.far = check == "far";
    for (const auto& c : intertwiner_suite(alg, opt)) {
      bool braid = c.relation.find('=') != std::string::npos &&
                   std::count(c.relation.begin(), c.relation.end(), '*') == 4;
      bool far = c.relation.find("= -gimel") != std::string::npos;
      bool square = c.relation.find("^2") != std::string::npos;
      bool keep = check == "braid" ? braid : check == "far" ? far : check == "square" ? square : !braid && !far && !square;
      if (keep) r.push_back(c);
    }
  } else {
    throw DomainError("invalid_argument", "--check must be all, square, conjugation, far or braid");
  }
  ojson out;
  out["n"] = n;
  out["check"] = check;
  return report_result(out, r, a);
}

ojson error_json(const std::string& code, const std::string& message) {
  ojson e;
  e["code"] = code;
  e["message"] = message;
  ojson out;
  out["error"] = e;
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const json& args) {
  try {
    if (command == "nf") return cmd_nf(args);
    if (command == "mul") return cmd_mul(args);
    if (command == "map") return cmd_map(args);
    if (command == "verify") return cmd_verify(args);
    if (command == "dims") return cmd_dims(args);
    if (command == "jm") return cmd_jm(args);
    if (command == "cyclotomic") return cmd_cyclotomic(args);
    if (command == "rep") return cmd_rep(args);
    if (command == "intertwine") return cmd_intertwine(args);
    return {error_json("unknown_command", "unknown command '" + command + "'"), kExitParse};
  } catch (const ParseError& e) {
    auto out = error_json(e.code(), e.what());
    out["error"]["offset"] = e.offset();
    return {out, kExitParse};
  } catch (const BudgetExceeded& e) {
    return {error_json(e.code(), e.what()), kExitInternal};
  } catch (const DomainError& e) {
    return {error_json(e.code(), e.what()), kExitParse};
  } catch (const Error& e) {
    return {error_json(e.code(), e.what()), kExitInternal};
  } catch (const nlohmann::json::exception& e) {
    return {error_json("invalid_argument", e.what()), kExitParse};
  } catch (const std::exception& e) {
    return {error_json("internal", e.what()), kExitInternal};
  }
}

}  // namespace spinhecke
