#include "wordlab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "wordlab/errors.hpp"
#include "wordlab/modp.hpp"
#include "wordlab/numtheory.hpp"

namespace wordlab {

ClassMatrix class_matrix(const FiniteGroup& G, const ClassTable& T, int i) {
  const int r = T.num_classes();
  if (i < 0 || i >= r) throw ValidationError("class index out of range");
  ClassMatrix M;
  M.i = i;
  M.a.assign(r, std::vector<long long>(r, 0));
  std::vector<long long> cnt(G.order());
  for (int j = 0; j < r; ++j) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int x : T.classes[i])
      for (int y : T.classes[j]) ++cnt[G.mul(x, y)];
    for (int k = 0; k < r; ++k) M.a[j][k] = cnt[T.rep[k]];
  }
  return M;
}

long long dixon_prime(const FiniteGroup& G) {
  const long long m = G.exponent();
  const double bound = 2.0 * std::sqrt(static_cast<double>(G.order()));
  for (long long p = m + 1;; p += m)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

namespace {

// A common eigenspace of the class matrices processed so far; rows of the
// basis are kept in reduced echelon form so coordinates can be read off at
// the pivot columns.
struct Subspace {
  FpMatrix basis;
  std::vector<int> pivots;
};

Subspace make_subspace(long long p, const std::vector<std::vector<long long>>& vecs) {
  FpMatrix B;
  B.p = p;
  B.rows = static_cast<int>(vecs.size());
  B.cols = static_cast<int>(vecs[0].size());
  B.a.reserve(static_cast<std::size_t>(B.rows) * B.cols);
  for (const auto& v : vecs) B.a.insert(B.a.end(), v.begin(), v.end());
  std::vector<int> piv = fp_rref(B);
  if (static_cast<int>(piv.size()) != B.rows)
    throw InternalError("dependent basis while splitting eigenspaces");
  return {std::move(B), std::move(piv)};
}

std::vector<Subspace> split_with(const FpMatrix& M, const Subspace& S) {
  const long long p = M.p;
  const int r = M.cols;
  const int d = S.basis.rows;

  std::vector<std::vector<long long>> Mb(d);
  for (int j = 0; j < d; ++j) {
    std::vector<long long> bj(r);
    for (int col = 0; col < r; ++col) bj[col] = S.basis.at(j, col);
    Mb[j] = fp_matvec(M, bj);
  }

  // Coordinates of M*b_j in the basis, read at the pivot columns.
  FpMatrix R = FpMatrix::zero(p, d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) R.at(i, j) = Mb[j][S.pivots[i]];

  for (int j = 0; j < d; ++j)
    for (int col = 0; col < r; ++col) {
      long long acc = 0;
      for (int i = 0; i < d; ++i) acc = (acc + R.at(i, j) * S.basis.at(i, col)) % p;
      if (acc != Mb[j][col])
        throw InternalError("class matrix does not preserve a common eigenspace");
    }

  std::vector<Subspace> out;
  int found = 0;
  for (long long lam = 0; lam < p && found < d; ++lam) {
    FpMatrix A = R;
    for (int i = 0; i < d; ++i) A.at(i, i) = (A.at(i, i) - lam + p) % p;
    const auto kernel = fp_kernel(std::move(A));
    if (kernel.empty()) continue;
    std::vector<std::vector<long long>> vecs;
    for (const auto& kv : kernel) {
      std::vector<long long> v(r, 0);
      for (int t = 0; t < d; ++t) {
        if (kv[t] == 0) continue;
        for (int col = 0; col < r; ++col)
          v[col] = (v[col] + kv[t] * S.basis.at(t, col)) % p;
      }
      vecs.push_back(std::move(v));
    }
    found += static_cast<int>(vecs.size());
    out.push_back(make_subspace(p, vecs));
  }
  if (found != d)
    throw InternalError("eigenvalue scan lost dimensions: recovered " +
                        std::to_string(found) + " of " + std::to_string(d));
  return out;
}

}  // namespace

ModPCharacterTable character_table_mod_p(const FiniteGroup& G, const ClassTable& T) {
  const int r = T.num_classes();
  ModPCharacterTable t;
  t.p = dixon_prime(G);
  t.exponent = G.exponent();
  t.primitive_root = primitive_root(t.p);
  t.zeta = mod_pow(t.primitive_root, (t.p - 1) / t.exponent, t.p);
  const long long p = t.p;

  std::vector<Subspace> spaces;
  {
    std::vector<std::vector<long long>> id(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(make_subspace(p, id));
  }

  for (int i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(),
                    [](const Subspace& s) { return s.basis.rows == 1; }))
      break;
    const ClassMatrix cm = class_matrix(G, T, i);
    FpMatrix M = FpMatrix::zero(p, r, r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) M.at(j, k) = cm.a[j][k] % p;

    std::vector<Subspace> next;
    for (auto& S : spaces) {
      if (S.basis.rows == 1) {
        next.push_back(std::move(S));
        continue;
      }
      for (auto& piece : split_with(M, S)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }

  for (const auto& S : spaces)
    if (S.basis.rows != 1)
      throw InternalError("eigenspace splitting left a subspace of dimension " +
                          std::to_string(S.basis.rows));

  struct Row {
    int degree;
    std::vector<long long> chi;
  };
  std::vector<Row> rows;
  std::vector<long long> size_inv(r);
  for (int k = 0; k < r; ++k) size_inv[k] = mod_inv(T.sizes[k] % p, p);

  for (const auto& S : spaces) {
    if (S.basis.at(0, 0) == 0)
      throw InternalError("eigenvector vanishes at the identity class");
    const long long inv0 = mod_inv(S.basis.at(0, 0), p);
    std::vector<long long> omega(r);
    for (int k = 0; k < r; ++k) omega[k] = S.basis.at(0, k) * inv0 % p;

    long long s = 0;
    for (int k = 0; k < r; ++k)
      s = (s + omega[k] * omega[T.inverse_class[k]] % p * size_inv[k]) % p;
    if (s == 0) throw InternalError("degree recovery hit a zero norm");
    const long long d2 = G.order() % p * mod_inv(s, p) % p;
    long long d = sqrt_mod(d2, p);
    d = std::min(d, p - d);

    std::vector<long long> chi(r);
    for (int k = 0; k < r; ++k) chi[k] = d * omega[k] % p * size_inv[k] % p;
    rows.push_back({static_cast<int>(d), std::move(chi)});
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.chi < b.chi;
  });

  long long degsum = 0;
  for (const Row& row : rows) degsum += static_cast<long long>(row.degree) * row.degree;
  if (degsum != G.order())
    throw InternalError("degree squares sum to " + std::to_string(degsum) +
                        ", group order is " + std::to_string(G.order()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      long long acc = 0;
      for (int k = 0; k < r; ++k)
        acc = (acc + T.sizes[k] % p * rows[a].chi[k] % p *
                         rows[b].chi[T.inverse_class[k]]) %
              p;
      const long long expect = (a == b) ? G.order() % p : 0;
      if (acc != expect)
        throw InternalError("row orthogonality fails mod p for characters " +
                            std::to_string(a) + ", " + std::to_string(b));
    }

  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.chi));
  }
  return t;
}

ComplexCharacterTable lift_character_table(const FiniteGroup& G,
                                           const ClassTable& T,
                                           const ModPCharacterTable& t) {
  const int r = T.num_classes();
  const long long p = t.p;
  const long long m = t.exponent;

  ComplexCharacterTable ct;
  ct.exponent = m;
  ct.degrees = t.degrees;
  ct.values.assign(t.num_characters(), std::vector<std::complex<double>>(r));

  std::vector<std::vector<int>> pc(r);
  for (int k = 0; k < r; ++k) pc[k] = T.power_classes(k);

  std::vector<std::complex<double>> root(m);
  for (long long j = 0; j < m; ++j) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(m);
    root[j] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<long long> zinv_pow(m);
  zinv_pow[0] = 1;
  const long long zinv = mod_inv(t.zeta, p);
  for (long long j = 1; j < m; ++j) zinv_pow[j] = zinv_pow[j - 1] * zinv % p;
  const long long m_inv = mod_inv(m % p, p);

  for (int c = 0; c < t.num_characters(); ++c) {
    const int d = t.degrees[c];
    for (int k = 0; k < r; ++k) {
      const auto ord = static_cast<long long>(pc[k].size());
      std::complex<double> val = 0.0;
      long long total = 0;
      for (long long j = 0; j < m; ++j) {
        long long mu = 0;
        for (long long l = 0; l < m; ++l)
          mu = (mu + t.values[c][pc[k][l % ord]] * zinv_pow[j * l % m]) % p;
        mu = mu * m_inv % p;
        if (mu > d)
          throw InternalError("root-of-unity multiplicity " + std::to_string(mu) +
                              " exceeds degree " + std::to_string(d));
        total += mu;
        if (mu != 0) val += static_cast<double>(mu) * root[j];
      }
      if (total != d)
        throw InternalError("multiplicities sum to " + std::to_string(total) +
                            ", degree is " + std::to_string(d));
      ct.values[c][k] = val;
    }
  }
  return ct;
}

long long triple_count_brute(const FiniteGroup& G, const ClassTable& T, int D,
                             int C) {
  const int r = T.num_classes();
  if (D < 0 || D >= r || C < 0 || C >= r)
    throw ValidationError("class index out of range");
  const int target = G.inv(T.rep[T.inverse_class[D]]);
  long long pairs = 0;
  for (int b : T.classes[T.inverse_class[C]]) {
    const int c = G.mul(G.inv(b), target);
    if (T.class_of[c] == C) ++pairs;
  }
  return static_cast<long long>(T.sizes[D]) * pairs;
}

double triple_count_formula(const ComplexCharacterTable& ct, const ClassTable& T,
                            int D, int C) {
  const int r = T.num_classes();
  if (D < 0 || D >= r || C < 0 || C >= r)
    throw ValidationError("class index out of range");
  const int Ds = T.inverse_class[D];
  const int Cs = T.inverse_class[C];
  std::complex<double> sum = 0.0;
  for (int c = 0; c < ct.num_characters(); ++c)
    sum += ct.values[c][Ds] * ct.values[c][Cs] * ct.values[c][C] /
           static_cast<double>(ct.degrees[c]);
  const double pref = static_cast<double>(T.sizes[C]) * T.sizes[C] * T.sizes[D] /
                      T.group->order();
  const std::complex<double> N = pref * sum;
  if (std::abs(N.imag()) > kImagTol)
    throw InternalError("triple-count formula left an imaginary residual of " +
                        std::to_string(N.imag()));
  return N.real();
}

namespace {

long long coprime_exponent(const FiniteGroup& G, long long e) {
  if (e < 1) throw ValidationError("exponent must be >= 1");
  const long long n = G.order();
  if (std::gcd(e, n) == 1) return e;
  // e + (maximal divisor of |G| coprime to e) is coprime to |G| and agrees
  // with e modulo every element order coprime to e
  long long d = 1;
  for (const auto& [p, k] : factorize(static_cast<std::uint64_t>(n)))
    if (e % static_cast<long long>(p) != 0)
      for (int i = 0; i < k; ++i) d *= static_cast<long long>(p);
  return e + d;
}

}  // namespace

std::vector<int> class_power_map(const FiniteGroup& G, const ClassTable& T,
                                 long long e) {
  e = coprime_exponent(G, e);
  std::vector<int> out(T.num_classes());
  for (int c = 0; c < T.num_classes(); ++c) {
    const int target = T.class_of[G.power(T.rep[c], e)];
    for (int x : T.classes[c])
      if (T.class_of[G.power(x, e)] != target)
        throw InternalError("powering by " + std::to_string(e) +
                            " is not constant on class " + T.names[c]);
    out[c] = target;
  }
  return out;
}

TripleCountReport galois_check(const FiniteGroup& G, const ClassTable& T,
                               const ComplexCharacterTable& ct, int D, int C,
                               long long e) {
  const std::vector<int> pm = class_power_map(G, T, e);
  const int De = pm[D];
  const int Ce = pm[C];

  TripleCountReport rep;
  rep.D = T.names[D];
  rep.C = T.names[C];
  rep.D_e = T.names[De];
  rep.C_e = T.names[Ce];
  rep.e = e;
  rep.N_brute = triple_count_brute(G, T, D, C);
  rep.N_brute_e = triple_count_brute(G, T, De, Ce);
  rep.N_formula = triple_count_formula(ct, T, D, C);
  rep.N_formula_e = triple_count_formula(ct, T, De, Ce);

  const auto close = [](double f, long long n) {
    return std::abs(f - static_cast<double>(n)) <=
           kFormulaTol * std::max<double>(1.0, static_cast<double>(n));
  };
  rep.brute_equal = rep.N_brute == rep.N_brute_e;
  rep.formula_matches = close(rep.N_formula, rep.N_brute);
  rep.formula_matches_e = close(rep.N_formula_e, rep.N_brute_e);
  rep.holds = rep.brute_equal && rep.formula_matches && rep.formula_matches_e;
  return rep;
}

}  // namespace wordlab
