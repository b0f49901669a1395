#include "spinhecke/relations.hpp"

namespace spinhecke {

namespace {

std::string G(const std::string& k, int i) { return k + std::to_string(i); }
std::string pair_name(const std::string& base, int i, int j) {
  return base + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string one_name(const std::string& base, int i) { return base + "(" + std::to_string(i) + ")"; }

struct Letters {
  std::string L, P, Q, z;  // z is "(-1)", "1" or "z"
};

Letters letters_for(ZMode m) {
  switch (m) {
    case ZMode::Minus:
      return {"R", "p", "q", "(-1)"};
    case ZMode::Plus:
      return {"Tc", "P", "Q", "1"};
    case ZMode::Cover:
      return {"Tt", "Pt", "Qt", "z"};
  }
  return {};
}

void staircase_relations(std::vector<Relation>& out, ZMode m, int n) {
  Letters s = letters_for(m);
  std::string sq = m == ZMode::Minus ? "-(e^2+2)" : m == ZMode::Plus ? "q^2+q^-2+2" : "z*(q^2+q^-2+1)+1";
  for (int i = 1; i <= n - 1; ++i) out.push_back({one_name("square", i), G(s.L, i) + "*" + G(s.L, i), sq});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({pair_name("far", i, j), G(s.L, i) + "*" + G(s.L, j), s.z + "*" + G(s.L, j) + "*" + G(s.L, i)});
  for (int i = 1; i + 1 <= n - 1; ++i) {
    std::string a = G(s.L, i), b = G(s.L, i + 1);
    out.push_back({one_name("braid", i), a + "*" + b + "*" + a + " - " + b + "*" + a + "*" + b,
                   "e^2*(" + b + " - " + a + ")"});
  }
  if (m == ZMode::Cover) {
    out.push_back({"z-square", "z*z", "1"});
    for (int i = 1; i <= n - 1; ++i) out.push_back({one_name("z-central", i), "z*" + G(s.L, i), G(s.L, i) + "*z"});
  }
}

void affine_staircase_relations(std::vector<Relation>& out, ZMode m, int n) {
  Letters s = letters_for(m);
  std::string z = s.z;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({pair_name("pp", i, j), G(s.P, i) + "*" + G(s.P, j), G(s.P, j) + "*" + G(s.P, i)});
      out.push_back({pair_name("qq", i, j), G(s.Q, i) + "*" + G(s.Q, j), z + "*" + G(s.Q, j) + "*" + G(s.Q, i)});
    }
    for (int j = 1; j <= n; ++j)
      out.push_back({pair_name("pq", i, j), G(s.P, i) + "*" + G(s.Q, j), G(s.Q, j) + "*" + G(s.P, i)});
    out.push_back({one_name("norm", i), G(s.P, i) + "^2 - " + z + "*" + G(s.Q, i) + "^2", "1"});
    if (m == ZMode::Cover) {
      out.push_back({one_name("z-central-p", i), "z*" + G(s.P, i), G(s.P, i) + "*z"});
      out.push_back({one_name("z-central-q", i), "z*" + G(s.Q, i), G(s.Q, i) + "*z"});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::string L = G(s.L, i);
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      out.push_back({pair_name("rp-far", i, j), L + "*" + G(s.P, j), G(s.P, j) + "*" + L});
      out.push_back({pair_name("rq-far", i, j), L + "*" + G(s.Q, j), z + "*" + G(s.Q, j) + "*" + L});
    }
    std::string Pi = G(s.P, i), Pj = G(s.P, i + 1), Qi = G(s.Q, i), Qj = G(s.Q, i + 1);
    out.push_back({one_name("rp", i), L + "*" + Pi, Pj + "*" + L + " - e*" + Qj + " - e*" + z + "*" + Qi});
    out.push_back({one_name("rq", i), L + "*" + Qi, z + "*" + Qj + "*" + L + " - e*" + Pi + " - e*" + Pj});
    out.push_back({one_name("rpp", i), L + "*" + Pj, Pi + "*" + L + " + e*" + Qj + " + e*" + z + "*" + Qi});
    out.push_back({one_name("rqq", i), L + "*" + Qj,
                   z + "*" + Qi + "*" + L + " + " + z + "*e*" + Pi + " + " + z + "*e*" + Pj});
    std::string k = "1/8*(3-" + z + ")";
    out.push_back({one_name("p-recursion", i), Pj,
                   k + "*(" + z + "*" + L + "*" + Pi + "*" + L + " + e*" + L + "*" + Qi + " + e*" + Qi + "*" + L +
                       " + e^2*" + Pi + ")"});
    out.push_back({one_name("q-recursion", i), Qj,
                   k + "*(" + L + "*" + Qi + "*" + L + " + e*" + L + "*" + Pi + " + e*" + Pi + "*" + L +
                       " + e^2*" + z + "*" + Qi + ")"});
  }
}

void clifford_relations(std::vector<Relation>& out, int n) {
  for (int i = 1; i <= n; ++i) {
    out.push_back({one_name("c-square", i), G("c", i) + "^2", "1"});
    for (int j = i + 1; j <= n; ++j)
      out.push_back({pair_name("c-anti", i, j), G("c", i) + "*" + G("c", j), "-" + G("c", j) + "*" + G("c", i)});
  }
}

void hecke_relations(std::vector<Relation>& out, int n, bool clifford, bool affine) {
  for (int i = 1; i <= n - 1; ++i) {
    std::string T = G("T", i);
    out.push_back({one_name("quadratic", i), "(" + T + " - q)*(" + T + " + q^-1)", "0"});
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({pair_name("t-far", i, j), T + "*" + G("T", j), G("T", j) + "*" + T});
    if (i + 1 <= n - 1)
      out.push_back({one_name("t-braid", i), T + "*" + G("T", i + 1) + "*" + T, G("T", i + 1) + "*" + T + "*" + G("T", i + 1)});
  }
  if (clifford) {
    clifford_relations(out, n);
    for (int i = 1; i <= n - 1; ++i) {
      std::string T = G("T", i);
      out.push_back({one_name("tici", i), T + "*" + G("c", i), G("c", i + 1) + "*" + T});
      out.push_back({one_name("ticiplus1", i), T + "*" + G("c", i + 1),
                     G("c", i) + "*" + T + " - e*(" + G("c", i) + " - " + G("c", i + 1) + ")"});
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) out.push_back({pair_name("ticj", i, j), T + "*" + G("c", j), G("c", j) + "*" + T});
    }
  }
  if (!affine) return;
  for (int i = 1; i <= n; ++i) {
    std::string X = G("X", i);
    out.push_back({one_name("x-inverse", i), X + "*" + X + "^-1", "1"});
    out.push_back({one_name("x-inverse-left", i), X + "^-1*" + X, "1"});
    for (int j = i + 1; j <= n; ++j) out.push_back({pair_name("xx", i, j), X + "*" + G("X", j), G("X", j) + "*" + X});
    if (clifford) {
      out.push_back({one_name("xc", i), X + "*" + G("c", i), G("c", i) + "*" + X + "^-1"});
      for (int j = 1; j <= n; ++j)
        if (j != i) out.push_back({pair_name("xcj", i, j), X + "*" + G("c", j), G("c", j) + "*" + X});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::string T = G("T", i);
    std::string lead = clifford ? "(" + T + " + e*" + G("c", i) + "*" + G("c", i + 1) + ")" : T;
    out.push_back({one_name("txt", i), lead + "*" + G("X", i) + "*" + T, G("X", i + 1)});
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) out.push_back({pair_name("tixj", i, j), T + "*" + G("X", j), G("X", j) + "*" + T});
  }
}

void supercommute_relations(std::vector<Relation>& out, int n, bool affine) {
  for (int j = 1; j <= n; ++j) {
    std::string c = G("c", j);
    for (int i = 1; i <= n - 1; ++i) out.push_back({pair_name("rc", i, j), G("R", i) + "*" + c, "-" + c + "*" + G("R", i)});
    if (!affine) continue;
    for (int i = 1; i <= n; ++i) {
      out.push_back({pair_name("pc", i, j), G("p", i) + "*" + c, c + "*" + G("p", i)});
      out.push_back({pair_name("qc", i, j), G("q", i) + "*" + c, "-" + c + "*" + G("q", i)});
    }
  }
}

}  // namespace

std::vector<Relation> defining_relations(AlgebraKind k, int n) {
  std::vector<Relation> out;
  switch (k) {
    case AlgebraKind::Spin:
      staircase_relations(out, ZMode::Minus, n);
      break;
    case AlgebraKind::Covering:
      staircase_relations(out, ZMode::Cover, n);
      break;
    case AlgebraKind::HeckeT:
      staircase_relations(out, ZMode::Plus, n);
      break;
    case AlgebraKind::SpinAffine:
      staircase_relations(out, ZMode::Minus, n);
      affine_staircase_relations(out, ZMode::Minus, n);
      break;
    case AlgebraKind::CoveringAffine:
      staircase_relations(out, ZMode::Cover, n);
      affine_staircase_relations(out, ZMode::Cover, n);
      break;
    case AlgebraKind::HeckePQ:
      staircase_relations(out, ZMode::Plus, n);
      affine_staircase_relations(out, ZMode::Plus, n);
      break;
    case AlgebraKind::HeckeClifford:
      hecke_relations(out, n, true, false);
      break;
    case AlgebraKind::HeckeCliffordAffine:
      hecke_relations(out, n, true, true);
      break;
    case AlgebraKind::Hecke:
      hecke_relations(out, n, false, false);
      break;
    case AlgebraKind::HeckeAffine:
      hecke_relations(out, n, false, true);
      break;
    case AlgebraKind::Tensor:
      staircase_relations(out, ZMode::Minus, n);
      clifford_relations(out, n);
      supercommute_relations(out, n, false);
      break;
    case AlgebraKind::TensorAffine:
      staircase_relations(out, ZMode::Minus, n);
      affine_staircase_relations(out, ZMode::Minus, n);
      clifford_relations(out, n);
      supercommute_relations(out, n, true);
      break;
  }
  return out;
}

}  // namespace spinhecke
