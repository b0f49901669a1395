#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinhecke/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in spin, covering and Hecke-Clifford algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = true, timings = false;
  app.add_flag("--json,!--no-json", json_out, "JSON output (always on)");
  app.add_flag("--timings", timings, "include per-check millis in reports");

  nlohmann::json args;
  std::string algebra = "spin", expr, lhs, rhs, name, suite, F, check = "all";
  int n = 3, seed = 1;
  std::vector<std::string> ideal;

  auto with_n = [&](CLI::App* c, int dflt) { return c->add_option("--n", n, "rank")->default_val(dflt); };

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("--algebra", algebra)->default_val("spin");
  with_n(nf, 3);
  nf->add_option("--expr", expr)->required();

  auto* mul = app.add_subcommand("mul", "product of two expressions");
  mul->add_option("--algebra", algebra)->default_val("spin");
  with_n(mul, 3);
  mul->add_option("--lhs", lhs)->required();
  mul->add_option("--rhs", rhs)->required();

  auto* map = app.add_subcommand("map", "apply phi, psi, jm or an involution");
  map->add_option("--name", name)->required()->check(CLI::IsMember(spinhecke::map_names()));
  map->add_option("--algebra", algebra, "source algebra for involutions")->default_val("spin");
  with_n(map, 3);
  map->add_option("--expr", expr)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  with_n(verify, 3);
  verify->add_option("--seed", seed)->default_val(1);
  verify->add_option("--algebra", algebra, "restrict to one algebra family");

  auto* dims = app.add_subcommand("dims", "basis dimension");
  dims->add_option("--algebra", algebra)->default_val("spin");
  with_n(dims, 3);

  auto* jm = app.add_subcommand("jm", "Jucys-Murphy images");
  with_n(jm, 3);

  auto* cyc = app.add_subcommand("cyclotomic", "cyclotomic ideal correspondence");
  cyc->add_option("--F", F, "polynomial in X1");
  cyc->add_option("--ideal", ideal, "generators in p1, q1 (repeatable)");
  with_n(cyc, 1);

  auto* rep = app.add_subcommand("rep", "matrix of an element on the basic spin supermodule");
  with_n(rep, 3);
  rep->add_option("--expr", expr)->required();

  auto* inter = app.add_subcommand("intertwine", "intertwiner relations");
  with_n(inter, 3);
  inter->add_option("--check", check)->default_val("all")->check(
      CLI::IsMember({"all", "square", "conjugation", "far", "braid"}));

  CLI11_PARSE(app, argc, argv);
  (void)json_out;

  CLI::App* sub = app.get_subcommands().front();
  std::string cmd = sub->get_name();
  args["n"] = n;
  if (timings) args["timings"] = true;
  if (cmd == "nf" || cmd == "mul" || cmd == "dims" || cmd == "map") args["algebra"] = algebra;
  if (cmd == "nf" || cmd == "map" || cmd == "rep") args["expr"] = expr;
  if (cmd == "mul") {
    args["lhs"] = lhs;
    args["rhs"] = rhs;
  }
  if (cmd == "map") args["name"] = name;
  if (cmd == "verify") {
    args["suite"] = suite;
    args["seed"] = seed;
    if (sub->count("--algebra")) args["algebra"] = algebra;
  }
  if (cmd == "cyclotomic") {
    if (!ideal.empty()) args["ideal"] = ideal;
    else args["F"] = F;
  }
  if (cmd == "intertwine") args["check"] = check;

  auto r = spinhecke::run_command(cmd, args);
  std::cout << r.body.dump(2) << "\n";
  return r.exit_code;
}
