#include "pgconn/number_theory.hpp"

#include <numeric>
#include <utility>

#include "pgconn/errors.hpp"

namespace pgconn {

std::uint64_t PrimePower::value() const { return ipow(prime, exponent); }

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& pp : pairs) v *= pp.value();
  return v;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(pairs.size());
  for (const auto& pp : pairs) out.push_back(pp.prime);
  return out;
}

std::uint32_t Factorization::exponent_of(std::uint64_t prime) const {
  for (const auto& pp : pairs)
    if (pp.prime == prime) return pp.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& pp : pairs) {
    if (!out.empty()) out += "*";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out.empty() ? "1" : out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: n must be positive");
  Factorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
    }
    f.pairs.push_back(pp);
  }
  if (n > 1) f.pairs.push_back({n, 1});
  return f;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.pairs.size() != 1) return std::nullopt;
  return f.pairs.front();
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  std::uint64_t phi = 1;
  for (const auto& pp : factorize(n).pairs)
    phi *= ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

std::uint64_t product(std::span<const std::uint64_t> values) {
  std::uint64_t p = 1;
  for (auto v : values) p *= v;
  return p;
}

namespace {

// Returns (g, x, y) with a*x + b*y = g.
struct Bezout {
  std::int64_t g, x, y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((v % sm) + sm) % sm);
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  const auto b = extended_gcd(static_cast<std::int64_t>(a % m),
                              static_cast<std::int64_t>(m));
  if (b.g != 1) throw InvalidArgument("mod_inverse: arguments not coprime");
  return reduce(b.x, m);
}

std::uint64_t solve_congruence(std::uint64_t p, std::uint64_t m,
                               std::uint64_t q_pow) {
  if (!is_prime(p)) throw InvalidArgument("solve_congruence: p must be prime");
  const auto q = as_prime_power(q_pow);
  if (!q) throw InvalidArgument("solve_congruence: modulus must be a prime power");
  if (std::gcd(p, q_pow) != 1)
    throw InvalidArgument("solve_congruence: p must not divide the modulus");
  // p*s + q_pow*t = 1, so l = s*m.
  const auto b = extended_gcd(static_cast<std::int64_t>(p),
                              static_cast<std::int64_t>(q_pow));
  const std::uint64_t s = reduce(b.x, q_pow);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(s) * (m % q_pow)) % q_pow);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace pgconn
