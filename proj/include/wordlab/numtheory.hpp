#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wordlab {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Count of 1 <= k <= n with gcd(k, n) = 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Largest n with euler_phi(n) <= m, found by scanning n up to 2*m*m + 2.
std::uint64_t max_order_with_phi_at_most(std::uint64_t m);

/// m! capped at UINT64_MAX.
std::uint64_t saturating_factorial(std::uint64_t m);

/// base^exp capped at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);  // p prime, a != 0 mod p

/// Smallest generator of the multiplicative group mod prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Tonelli-Shanks square root mod odd prime p; throws InternalError if a is
/// not a quadratic residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

}  // namespace wordlab
