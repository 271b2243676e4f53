#include "wordlab/numtheory.hpp"

#include <numeric>

#include "wordlab/errors.hpp"

namespace wordlab {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2) {
    if (n % q) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [q, e] : factorize(n)) r -= r / q;
  return r;
}

std::uint64_t max_order_with_phi_at_most(std::uint64_t m) {
  // phi(n) > sqrt(n/2) for n > 6, so the scan bound 2m^2 + 2 is safe.
  std::uint64_t best = 1;
  for (std::uint64_t n = 1; n <= 2 * m * m + 2; ++n)
    if (euler_phi(n) <= m) best = n;
  return best;
}

std::uint64_t saturating_factorial(std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= m; ++i) {
    if (r > UINT64_MAX / i) return UINT64_MAX;
    r *= i;
  }
  return r;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = (__uint128_t)r * base % p;
    base = (__uint128_t)base * base % p;
    exp >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InternalError("mod_inv of 0");
  return mod_pow(a, p - 2, p);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root found; p not prime?");
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (mod_pow(a, (p - 1) / 2, p) != 1)
    throw InternalError("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);

  // Tonelli-Shanks, p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) == 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = mod_pow(z, q, p);
  std::uint64_t t = mod_pow(a, q, p);
  std::uint64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = (__uint128_t)t2 * t2 % p;
      ++i;
      if (i == m) throw InternalError("sqrt_mod: Tonelli-Shanks failed");
    }
    std::uint64_t b = mod_pow(c, std::uint64_t(1) << (m - i - 1), p);
    m = i;
    c = (__uint128_t)b * b % p;
    t = (__uint128_t)t * c % p;
    r = (__uint128_t)r * b % p;
  }
  return r;
}

}  // namespace wordlab
