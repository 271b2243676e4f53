#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wordlab/classes.hpp"
#include "wordlab/group.hpp"

namespace wordlab {

/// Residual imaginary part allowed in the triple-count formula.
inline constexpr double kImagTol = 1e-8;
/// Numeric slack for lifted-table identities (orthogonality, conjugacy).
inline constexpr double kLiftTol = 1e-8;
/// Relative gap allowed between formula and brute-force triple counts.
inline constexpr double kFormulaTol = 1e-6;

/// Structure constants of one acting class:
/// a[j][k] = #{(x,y) in C_i x C_j : x*y = rep_k}.
struct ClassMatrix {
  int i = 0;
  std::vector<std::vector<long long>> a;
};

ClassMatrix class_matrix(const FiniteGroup& G, const ClassTable& T, int i);

/// Smallest prime p with p = 1 (mod exp(G)) and p > 2*sqrt(|G|).
long long dixon_prime(const FiniteGroup& G);

struct ModPCharacterTable {
  long long p = 0;
  long long primitive_root = 0;  // smallest primitive root of p
  long long zeta = 0;            // primitive_root^((p-1)/exponent)
  long long exponent = 1;        // exp(G)
  std::vector<int> degrees;
  std::vector<std::vector<long long>> values;  // [character][class], in [0,p)

  int num_characters() const { return static_cast<int>(values.size()); }
};

/// All irreducible characters mod p by simultaneous eigenspace splitting of
/// the class matrices. Characters are sorted by degree, then values.
ModPCharacterTable character_table_mod_p(const FiniteGroup& G, const ClassTable& T);

struct ComplexCharacterTable {
  long long exponent = 1;  // values are sums of powers of e^(2*pi*i/exponent)
  std::vector<int> degrees;
  std::vector<std::vector<std::complex<double>>> values;  // [character][class]

  int num_characters() const { return static_cast<int>(values.size()); }
};

/// Lift of the mod-p table to complex values via root-of-unity multiplicity
/// recovery on each class representative's cyclic group.
ComplexCharacterTable lift_character_table(const FiniteGroup& G,
                                           const ClassTable& T,
                                           const ModPCharacterTable& t);

/// N(D,C,C^-1): triples (a,b,c) in D^-1 x C^-1 x C with abc = 1, counted
/// exactly as |D| * #{(b,c): bc = rep(D^-1)^-1}.
long long triple_count_brute(const FiniteGroup& G, const ClassTable& T, int D,
                             int C);

/// The character-sum expression for N(D,C,C^-1); throws if the residual
/// imaginary part exceeds kImagTol.
double triple_count_formula(const ComplexCharacterTable& ct, const ClassTable& T,
                            int D, int C);

/// Permutation of class indices induced by x -> x^e. When gcd(e,|G|) > 1,
/// e is first replaced by e + d (d the maximal divisor of |G| coprime to e),
/// which is coprime to |G| and agrees with e on every element whose order is
/// coprime to e. Well-definedness is verified on every class member.
std::vector<int> class_power_map(const FiniteGroup& G, const ClassTable& T,
                                 long long e);

struct TripleCountReport {
  std::string D, C;
  std::string D_e, C_e;
  long long e = 1;
  long long N_brute = 0;
  long long N_brute_e = 0;
  double N_formula = 0.0;
  double N_formula_e = 0.0;
  bool brute_equal = false;
  bool formula_matches = false;
  bool formula_matches_e = false;
  bool holds = false;
};

/// Compares N(D,C,C^-1) with N(D^e,C^e,C^-e), each by brute force and by
/// the character formula.
TripleCountReport galois_check(const FiniteGroup& G, const ClassTable& T,
                               const ComplexCharacterTable& ct, int D, int C,
                               long long e);

}  // namespace wordlab
