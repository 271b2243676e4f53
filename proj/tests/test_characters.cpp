#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>

#include "wordlab/characters.hpp"
#include "wordlab/errors.hpp"

using namespace wordlab;

namespace {

struct Tables {
  FiniteGroup G;
  ClassTable T;
  ModPCharacterTable mp;
  ComplexCharacterTable ct;
};

Tables tables_for(const std::string& name) {
  Tables t{catalog_group(name), {}, {}, {}};
  t.T = conjugacy_classes(t.G);
  t.mp = character_table_mod_p(t.G, t.T);
  t.ct = lift_character_table(t.G, t.T, t.mp);
  return t;
}

std::vector<int> sorted_degrees(const std::vector<int>& d) {
  std::vector<int> out = d;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("dixon primes") {
  CHECK(dixon_prime(catalog_group("S3")) == 7);
  CHECK(dixon_prime(catalog_group("S4")) == 13);
  CHECK(dixon_prime(catalog_group("A5")) == 31);
  CHECK(dixon_prime(catalog_group("PSL(2,7)")) == 337);
}

TEST_CASE("class matrix of the identity class is the identity") {
  for (const char* name : {"S3", "Q8", "A4"}) {
    const FiniteGroup G = catalog_group(name);
    const ClassTable T = conjugacy_classes(G);
    const ClassMatrix M = class_matrix(G, T, 0);
    for (int j = 0; j < T.num_classes(); ++j)
      for (int k = 0; k < T.num_classes(); ++k)
        CHECK(M.a[j][k] == (j == k ? 1 : 0));
  }
}

TEST_CASE("class matrix rows on S3") {
  const FiniteGroup G = catalog_group("S3");
  const ClassTable T = conjugacy_classes(G);
  const int c2 = T.find("2A"), c3 = T.find("3A"), c1 = T.find("1A");
  REQUIRE(c2 >= 0);

  // transpositions times transpositions: 3 pairs multiply to the identity
  const ClassMatrix M2 = class_matrix(G, T, c2);
  CHECK(M2.a[c2][c1] == 3);

  // only one ordered pair of 3-cycles from C_i x C_j hits a fixed 3-cycle
  const ClassMatrix M3 = class_matrix(G, T, c3);
  CHECK(M3.a[c3][c3] == 1);
}

TEST_CASE("class matrix row sums weighted by class sizes") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4", "A5"}) {
    const FiniteGroup G = catalog_group(name);
    const ClassTable T = conjugacy_classes(G);
    for (int i = 0; i < T.num_classes(); ++i) {
      const ClassMatrix M = class_matrix(G, T, i);
      for (int j = 0; j < T.num_classes(); ++j) {
        long long sum = 0;
        for (int k = 0; k < T.num_classes(); ++k) sum += M.a[j][k] * T.sizes[k];
        CHECK(sum == static_cast<long long>(T.sizes[i]) * T.sizes[j]);
      }
    }
  }
}

TEST_CASE("character degrees across the catalog") {
  const std::map<std::string, std::vector<int>> expected = {
      {"S3", {1, 1, 2}},          {"S4", {1, 1, 2, 3, 3}},
      {"Q8", {1, 1, 1, 1, 2}},    {"A5", {1, 3, 3, 4, 5}},
      {"D4", {1, 1, 1, 1, 2}},    {"A4", {1, 1, 1, 3}},
      {"SL(2,3)", {1, 1, 1, 2, 2, 2, 3}},
      {"PSL(2,5)", {1, 3, 3, 4, 5}},
      {"PSL(2,7)", {1, 3, 3, 6, 7, 8}},
      {"D5", {1, 1, 2, 2}},       {"D6", {1, 1, 1, 1, 2, 2}}};
  for (const auto& [name, degs] : expected) {
    const Tables t = tables_for(name);
    CHECK(sorted_degrees(t.mp.degrees) == degs);
    CHECK(t.ct.degrees == t.mp.degrees);
    long long sum = 0;
    for (int d : t.ct.degrees) sum += static_cast<long long>(d) * d;
    CHECK(sum == t.G.order());
  }
}

TEST_CASE("abelian groups have all-degree-one tables") {
  for (const char* name : {"C2", "C3", "C4", "C5", "C6", "C8", "C12"}) {
    const Tables t = tables_for(name);
    CHECK(t.mp.num_characters() == t.G.order());
    for (int d : t.mp.degrees) CHECK(d == 1);
  }
}

TEST_CASE("mod-p row orthogonality") {
  for (const char* name : {"S3", "Q8", "S4", "A5"}) {
    const Tables t = tables_for(name);
    const long long p = t.mp.p;
    const long long gmod = t.G.order() % p;
    for (int x = 0; x < t.mp.num_characters(); ++x)
      for (int y = 0; y < t.mp.num_characters(); ++y) {
        long long s = 0;
        for (int k = 0; k < t.T.num_classes(); ++k) {
          const long long conj = t.mp.values[y][t.T.inverse_class[k]];
          s = (s + t.T.sizes[k] % p * t.mp.values[x][k] % p * conj) % p;
        }
        CHECK(s == (x == y ? gmod : 0));
      }
  }
}

TEST_CASE("lifted row orthogonality and conjugate symmetry") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4", "A5", "SL(2,3)",
                           "PSL(2,7)", "C8", "D6"}) {
    const Tables t = tables_for(name);
    for (int x = 0; x < t.ct.num_characters(); ++x) {
      for (int y = 0; y < t.ct.num_characters(); ++y) {
        std::complex<double> s = 0;
        for (int k = 0; k < t.T.num_classes(); ++k)
          s += static_cast<double>(t.T.sizes[k]) * t.ct.values[x][k] *
               std::conj(t.ct.values[y][k]);
        const double target = x == y ? t.G.order() : 0.0;
        CHECK(std::abs(s - target) < 1e-8 * t.G.order());
      }
      for (int k = 0; k < t.T.num_classes(); ++k) {
        // value at the inverse class is the complex conjugate
        const std::complex<double> direct = t.ct.values[x][t.T.inverse_class[k]];
        CHECK(std::abs(direct - std::conj(t.ct.values[x][k])) < kLiftTol);
        // values are bounded by the degree
        CHECK(std::abs(t.ct.values[x][k]) <= t.ct.degrees[x] + kLiftTol);
      }
      CHECK(std::abs(t.ct.values[x][0] - std::complex<double>(t.ct.degrees[x])) <
            kLiftTol);
    }
  }
}

TEST_CASE("known character values") {
  const Tables s3 = tables_for("S3");
  const int c3 = s3.T.find("3A");
  for (int x = 0; x < 3; ++x)
    if (s3.ct.degrees[x] == 2)
      CHECK(std::abs(s3.ct.values[x][c3] - std::complex<double>(-1)) < kLiftTol);

  const Tables a5 = tables_for("A5");
  const double golden = (1 + std::sqrt(5.0)) / 2;
  const int f5a = a5.T.find("5A"), f5b = a5.T.find("5B");
  for (int x = 0; x < 5; ++x) {
    if (a5.ct.degrees[x] != 3) continue;
    const double va = a5.ct.values[x][f5a].real();
    const double vb = a5.ct.values[x][f5b].real();
    const bool one_way = std::abs(va - golden) < 1e-8 &&
                         std::abs(vb - (1 - golden)) < 1e-8;
    const bool other_way = std::abs(vb - golden) < 1e-8 &&
                           std::abs(va - (1 - golden)) < 1e-8;
    CHECK((one_way || other_way));
  }
}

TEST_CASE("triple counts on S3 by hand") {
  const Tables t = tables_for("S3");
  const int c1 = t.T.find("1A"), c2 = t.T.find("2A"), c3 = t.T.find("3A");
  CHECK(triple_count_brute(t.G, t.T, c1, c3) == 2);
  CHECK(triple_count_brute(t.G, t.T, c3, c3) == 2);
  CHECK(triple_count_brute(t.G, t.T, c2, c3) == 0);
  CHECK(triple_count_formula(t.ct, t.T, c1, c3) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(triple_count_formula(t.ct, t.T, c3, c3) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(triple_count_formula(t.ct, t.T, c2, c3)) < 1e-8);
}

TEST_CASE("formula matches brute force on all class pairs") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4", "SL(2,3)", "A5"}) {
    const Tables t = tables_for(name);
    for (int D = 0; D < t.T.num_classes(); ++D)
      for (int C = 0; C < t.T.num_classes(); ++C) {
        const long long brute = triple_count_brute(t.G, t.T, D, C);
        const double formula = triple_count_formula(t.ct, t.T, D, C);
        CHECK(std::abs(formula - brute) <
              kFormulaTol * std::max(1.0, static_cast<double>(brute)));
        CHECK(std::llround(formula) == brute);
      }
  }
}

TEST_CASE("class power maps") {
  const FiniteGroup S3 = catalog_group("S3");
  const ClassTable TS3 = conjugacy_classes(S3);
  const auto id_map = class_power_map(S3, TS3, 1);
  const auto five_map = class_power_map(S3, TS3, 5);
  for (int c = 0; c < TS3.num_classes(); ++c) {
    CHECK(id_map[c] == c);
    CHECK(five_map[c] == c);
  }

  const FiniteGroup A5 = catalog_group("A5");
  const ClassTable TA5 = conjugacy_classes(A5);
  const auto sq = class_power_map(A5, TA5, 2);
  const int f5a = TA5.find("5A"), f5b = TA5.find("5B");
  CHECK(sq[f5a] == f5b);
  CHECK(sq[f5b] == f5a);
  CHECK(sq[TA5.find("1A")] == TA5.find("1A"));
  CHECK(sq[TA5.find("2A")] == TA5.find("2A"));
  CHECK(sq[TA5.find("3A")] == TA5.find("3A"));
}

TEST_CASE("class power maps are permutations for coprime exponents") {
  for (const char* name : {"S3", "Q8", "A4", "S4", "SL(2,3)", "A5"}) {
    const FiniteGroup G = catalog_group(name);
    const ClassTable T = conjugacy_classes(G);
    for (long long e = 1; e <= G.order(); ++e) {
      if (std::gcd(e, static_cast<long long>(G.order())) != 1) continue;
      auto pm = class_power_map(G, T, e);
      std::sort(pm.begin(), pm.end());
      for (int c = 0; c < T.num_classes(); ++c) CHECK(pm[c] == c);
    }
  }
}

TEST_CASE("power map composition") {
  const FiniteGroup G = catalog_group("S4");
  const ClassTable T = conjugacy_classes(G);
  const auto e5 = class_power_map(G, T, 5);
  const auto e7 = class_power_map(G, T, 7);
  const auto e35 = class_power_map(G, T, 35);
  for (int c = 0; c < T.num_classes(); ++c) CHECK(e35[c] == e5[e7[c]]);
}

TEST_CASE("galois invariance spot checks") {
  const Tables s3 = tables_for("S3");
  for (int D = 0; D < 3; ++D) {
    const TripleCountReport r =
        galois_check(s3.G, s3.T, s3.ct, D, s3.T.find("3A"), 5);
    CHECK(r.holds);
    CHECK(r.D_e == r.D);
    CHECK(r.C_e == r.C);
  }

  const Tables a5 = tables_for("A5");
  const TripleCountReport swap =
      galois_check(a5.G, a5.T, a5.ct, a5.T.find("5A"), a5.T.find("5B"), 2);
  CHECK(swap.holds);
  CHECK(swap.D == "5A");
  CHECK(swap.D_e == "5B");
  CHECK(swap.C == "5B");
  CHECK(swap.C_e == "5A");
  CHECK(swap.N_brute == swap.N_brute_e);

  const Tables q8 = tables_for("Q8");
  // the class of the unique involution against a class of order-4 elements
  const int D = q8.T.find("2A");
  const int C = q8.T.find("4A");
  REQUIRE(D >= 0);
  REQUIRE(C >= 0);
  const TripleCountReport r = galois_check(q8.G, q8.T, q8.ct, D, C, 3);
  CHECK(r.holds);
}

TEST_CASE("galois invariance for every coprime exponent on A5") {
  const Tables t = tables_for("A5");
  for (long long e = 1; e <= t.G.order(); ++e) {
    if (std::gcd(e, static_cast<long long>(t.G.order())) != 1) continue;
    for (int D = 0; D < t.T.num_classes(); ++D)
      for (int C = 0; C < t.T.num_classes(); ++C)
        CHECK(galois_check(t.G, t.T, t.ct, D, C, e).holds);
  }
}

TEST_CASE("rejected exponents") {
  const FiniteGroup G = catalog_group("S3");
  const ClassTable T = conjugacy_classes(G);
  CHECK_THROWS_AS(class_power_map(G, T, 0), ValidationError);
  CHECK_THROWS_AS(class_power_map(G, T, -3), ValidationError);
}

TEST_CASE("mod-p table metadata") {
  const Tables t = tables_for("S3");
  CHECK(t.mp.p == 7);
  CHECK(t.mp.primitive_root == 3);
  CHECK(t.mp.exponent == 6);
  // zeta = root^((p-1)/exp) has multiplicative order exp(G)
  long long x = t.mp.zeta, ord = 1;
  while (x != 1) {
    x = x * t.mp.zeta % t.mp.p;
    ++ord;
  }
  CHECK(ord == t.mp.exponent);
  CHECK(t.ct.exponent == 6);
}
