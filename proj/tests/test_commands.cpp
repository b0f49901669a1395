#include <doctest.h>

#include "spinhecke/algebras.hpp"
#include "spinhecke/commands.hpp"
#include "spinhecke/expr.hpp"

using namespace spinhecke;
using nlohmann::json;

TEST_CASE("nf of the braid word") {
  auto r = run_command("nf", {{"algebra", "spin"}, {"n", 3}, {"expr", "R2*R1*R2"}});
  REQUIRE(r.exit_code == kExitOk);
  auto alg = SpinAlgebra::make(3, ZMode::Minus, false);
  auto expected = parse_element(alg, "R1*R2*R1 - e^2*R2 + e^2*R1");
  CHECK(r.body["normal_form"]["text"] == expected.to_string());
  const auto& terms = r.body["normal_form"]["terms"];
  REQUIRE(terms.size() == 3);
  CHECK(terms[2]["word"] == json::array({"R1", "R2", "R1"}));
  CHECK(terms[2]["coeff"] == "1");
  // printed text parses back to the same element
  CHECK(parse_element(alg, r.body["normal_form"]["text"].get<std::string>()) == expected);
}

TEST_CASE("dims") {
  auto r = run_command("dims", {{"algebra", "spin"}, {"n", 4}});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.body["dimension"] == 24);
  CHECK(r.body["even_dimension"] == 12);
  CHECK(run_command("dims", {{"algebra", "covering"}, {"n", 3}}).body["dimension"] == 12);
  CHECK(run_command("dims", {{"algebra", "hecke-clifford"}, {"n", 3}}).body["dimension"] == 48);
}

TEST_CASE("mul and map") {
  auto r = run_command("mul", {{"algebra", "spin-affine"}, {"n", 2}, {"lhs", "p1^2"}, {"rhs", "1"}});
  CHECK(r.exit_code == kExitOk);
  auto s = run_command("nf", {{"algebra", "spin-affine"}, {"n", 2}, {"expr", "p1^2 + q1^2"}});
  CHECK(s.body["normal_form"]["text"] == "1");
  auto m = run_command("map", {{"name", "psi"}, {"n", 2}, {"expr", "R1"}});
  REQUIRE(m.exit_code == kExitOk);
  CHECK(m.body["target"] == "hecke-clifford(2)");
  auto back = run_command("map", {{"name", "phi"}, {"n", 2}, {"expr", m.body["image"]["text"]}});
  CHECK(back.exit_code == kExitOk);
  CHECK(back.body["image"]["text"] == "R1");
}

TEST_CASE("verify reports") {
  auto r = run_command("verify", {{"suite", "finite-iso"}, {"n", 2}});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.body["all_pass"] == true);
  for (const auto& c : r.body["report"]) {
    CHECK(c.contains("relation"));
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c.contains("millis"));
  }
  auto t = run_command("verify", {{"suite", "center"}, {"n", 2}, {"timings", true}});
  CHECK(t.body["report"][0]["millis"].is_number_integer());
}

TEST_CASE("deterministic output") {
  json a = {{"suite", "associativity"}, {"n", 2}, {"seed", 7}};
  CHECK(run_command("verify", a).body.dump() == run_command("verify", a).body.dump());
}

TEST_CASE("errors carry codes") {
  auto r = run_command("nf", {{"algebra", "spin"}, {"n", 3}, {"expr", "R5"}});
  CHECK(r.exit_code == kExitParse);
  CHECK(r.body["error"]["code"] == "index_out_of_range");
  CHECK(r.body["error"]["offset"] == 0);
  r = run_command("nf", {{"algebra", "spin"}, {"n", 3}, {"expr", "R1 + * R2"}});
  CHECK(r.exit_code == kExitParse);
  CHECK(r.body["error"]["offset"] == 5);
  CHECK(run_command("bogus", json::object()).exit_code == kExitParse);
  CHECK(run_command("nf", {{"algebra", "nope"}, {"expr", "1"}}).exit_code == kExitParse);
}

TEST_CASE("jm, cyclotomic, rep, intertwine") {
  auto j = run_command("jm", {{"n", 3}});
  CHECK(j.body["p"][1] == "q^-2 - 1 + q^2");
  auto c = run_command("cyclotomic", {{"F", "X1^2-1"}});
  CHECK(c.body["case"] == 2);
  CHECK(c.body["g"] == "1");
  auto d = run_command("cyclotomic", {{"ideal", {"p1-1", "q1"}}, {"n", 4}});
  CHECK(d.body["classification"]["dimension"] == 24);
  auto m = run_command("rep", {{"n", 4}, {"expr", "R1*R2"}});
  CHECK(m.body["dimension"] == 4);
  CHECK(m.body["matrix"].size() == 4);
  auto i = run_command("intertwine", {{"n", 3}, {"check", "far"}});
  CHECK(i.exit_code == kExitOk);
}
