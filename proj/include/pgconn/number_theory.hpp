#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgconn {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  std::uint64_t value() const;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<PrimePower> pairs;

  std::uint64_t value() const;
  std::vector<std::uint64_t> primes() const;
  std::size_t prime_count() const { return pairs.size(); }
  /// Exponent of `prime`, zero when it does not divide.
  std::uint32_t exponent_of(std::uint64_t prime) const;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exponent);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t product(std::span<const std::uint64_t> values);

/// Inverse of a modulo m; requires gcd(a, m) == 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Returns l in [0, q_pow) with p*l == m (mod q_pow). p must be prime and
/// q_pow a power of a different prime.
std::uint64_t solve_congruence(std::uint64_t p, std::uint64_t m,
                               std::uint64_t q_pow);

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace pgconn
