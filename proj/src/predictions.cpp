#include "pgconn/predictions.hpp"

#include <algorithm>

#include "pgconn/errors.hpp"

namespace pgconn {

std::string to_string(CutsetClaim c) {
  switch (c) {
    case CutsetClaim::none: return "none";
    case CutsetClaim::unique: return "unique";
    case CutsetClaim::count: return "count";
    case CutsetClaim::possibly_many: return "possibly-many";
    case CutsetClaim::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void check_increasing_primes(std::span<const std::uint64_t> primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw InvalidArgument(std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i - 1] >= primes[i])
      throw InvalidArgument("primes must be strictly increasing");
  }
}

void check_factorization(const Factorization& f) {
  if (f.pairs.empty()) throw InvalidArgument("empty factorization");
  check_increasing_primes(f.primes());
  for (const auto& pp : f.pairs)
    if (pp.exponent < 1) throw InvalidArgument("factorization exponent must be >= 1");
}

std::string sylow_product_label(const std::vector<std::uint64_t>& primes) {
  std::string out;
  for (auto p : primes) {
    if (!out.empty()) out += "*";
    out += "P" + std::to_string(p);
  }
  return out;
}

void add(Prediction& pr, std::string cond, bool holds) {
  pr.trace.push_back({std::move(cond), holds});
}

void set_unique(Prediction& pr, std::vector<std::uint64_t> primes) {
  pr.claim = CutsetClaim::unique;
  pr.cutset_count = 1;
  pr.cutset_description = "unique: " + sylow_product_label(primes);
  pr.cutset_primes = std::move(primes);
}

void set_possibly_many(Prediction& pr, std::vector<std::uint64_t> primes) {
  pr.claim = CutsetClaim::possibly_many;
  pr.cutset_description = "one of possibly several: " + sylow_product_label(primes);
  pr.cutset_primes = std::move(primes);
}

std::uint64_t squarefree_phi(std::span<const std::uint64_t> primes) {
  std::uint64_t phi = 1;
  for (auto p : primes) phi *= p - 1;
  return phi;
}

}  // namespace

Prediction kappa_cyclic(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("kappa_cyclic: n must be at least 2");
  const auto f = factorize(n);
  const auto& fp = f.pairs;
  const std::size_t r = fp.size();
  Prediction pr;
  add(pr, "n = " + f.to_string(), true);
  const std::uint64_t phi = euler_phi(n);

  if (r == 1) {
    add(pr, "n is a prime power (complete graph)", true);
    pr.applicable = true;
    pr.kappa = n - 1;
    pr.case_tag = "cyclic:prime-power";
    pr.claim = CutsetClaim::none;
    pr.cutset_description = "none (complete graph)";
    return pr;
  }
  pr.applicable = true;
  if (r == 2) {
    add(pr, "two prime divisors", true);
    pr.kappa = phi + ipow(fp[0].prime, fp[0].exponent - 1) * ipow(fp[1].prime, fp[1].exponent - 1);
    pr.case_tag = "cyclic:two-primes";
    const bool even = fp[0].prime == 2;
    add(pr, "p1 = 2", even);
    if (even) {
      pr.claim = CutsetClaim::count;
      pr.cutset_count = fp[1].exponent;
      pr.cutset_description = "count: " + std::to_string(fp[1].exponent);
    } else {
      pr.claim = CutsetClaim::unique;
      pr.cutset_count = 1;
      pr.cutset_description = "unique";
    }
    return pr;
  }
  if (r == 3) {
    add(pr, "three prime divisors", true);
    const auto [p1, n1] = fp[0];
    const auto [p2, n2] = fp[1];
    const auto [p3, n3] = fp[2];
    const bool even = p1 == 2;
    add(pr, "p1 = 2", even);
    if (even) {
      pr.kappa = phi + ipow(2, n1 - 1) * ipow(p2, n2 - 1) * ((p2 - 1) * ipow(p3, n3 - 1) + 2);
      pr.case_tag = "cyclic:three-primes-even";
    } else {
      pr.kappa = phi + ipow(p1, n1 - 1) * ipow(p2, n2 - 1) * ipow(p3, n3 - 1) * (p1 + p2 - 1);
      pr.case_tag = "cyclic:three-primes-odd";
    }
    pr.claim = CutsetClaim::unique;
    pr.cutset_count = 1;
    pr.cutset_description = "unique";
    return pr;
  }

  const auto primes = f.primes();
  const std::span<const std::uint64_t> head(primes.data(), r - 1);
  const bool cond = condition_two_phi(head);
  add(pr, "2 phi(p1...p_{r-1}) > p1...p_{r-1}", cond);
  if (!cond) {
    pr.applicable = false;
    pr.case_tag = "cyclic:many-primes";
    pr.cutset_description = "no prediction";
    return pr;
  }
  std::uint64_t scale = 1;
  for (const auto& pp : fp) scale *= ipow(pp.prime, pp.exponent - 1);
  pr.kappa = phi + scale * (product(head) - squarefree_phi(head));
  pr.case_tag = "cyclic:many-primes";
  pr.claim = CutsetClaim::unique;
  pr.cutset_count = 1;
  pr.cutset_description = "unique";
  return pr;
}

LowerBound kappa_cyclic_lower_bound(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("kappa_cyclic_lower_bound: n must be at least 2");
  const auto f = factorize(n);
  const bool squarefree = std::all_of(f.pairs.begin(), f.pairs.end(),
                                      [](const PrimePower& pp) { return pp.exponent == 1; });
  return {euler_phi(n) + 1, squarefree && f.pairs.size() <= 2};
}

bool condition_two_phi(std::span<const std::uint64_t> primes) {
  check_increasing_primes(primes);
  return 2 * squarefree_phi(primes) > product(primes);
}

InequalityCheck inequality_t_plus_1(std::span<const std::uint64_t> primes) {
  if (primes.empty()) throw InvalidArgument("inequality_t_plus_1: need t >= 1");
  check_increasing_primes(primes);
  unsigned __int128 lhs = primes.size() + 1, rhs = 1;
  for (auto q : primes) {
    lhs *= q - 1;
    rhs *= q;
  }
  return {lhs >= rhs, lhs == rhs};
}

Prediction kappa_single_noncyclic_sylow(const Factorization& f,
                                        std::uint64_t noncyclic_prime) {
  check_factorization(f);
  const auto primes = f.primes();
  const auto it = std::find(primes.begin(), primes.end(), noncyclic_prime);
  if (it == primes.end())
    throw InvalidArgument("non-cyclic prime " + std::to_string(noncyclic_prime) +
                          " does not divide the order");
  const std::size_t r = primes.size();
  Prediction pr;
  pr.case_tag = "nilpotent:single-noncyclic-sylow";
  add(pr, "|G| = " + f.to_string(), true);
  add(pr, "r >= 2", r >= 2);
  if (r < 2) {
    pr.cutset_description = "no prediction";
    return pr;
  }
  const bool large_prime = noncyclic_prime >= r + 1;
  const bool two_phi = condition_two_phi(std::span<const std::uint64_t>(primes.data(), r - 1));
  add(pr, "p_k >= r + 1", large_prime);
  add(pr, "2 phi(p1...p_{r-1}) > p1...p_{r-1}", two_phi);
  pr.applicable = large_prime || two_phi;
  if (!pr.applicable) {
    pr.cutset_description = "no prediction";
    return pr;
  }
  pr.kappa = f.value() / ipow(noncyclic_prime, f.exponent_of(noncyclic_prime));
  std::vector<std::uint64_t> others;
  for (auto p : primes)
    if (p != noncyclic_prime) others.push_back(p);
  set_unique(pr, std::move(others));
  return pr;
}

namespace {

void check_structure(const Factorization& f, const SylowStructure& s) {
  check_factorization(f);
  if (s.sylows.size() != f.pairs.size())
    throw InvalidArgument("Sylow structure does not match the factorization");
  for (std::size_t i = 0; i < f.pairs.size(); ++i)
    if (s.sylows[i].prime != f.pairs[i].prime || s.sylows[i].exponent != f.pairs[i].exponent)
      throw InvalidArgument("Sylow structure does not match the factorization");
}

}  // namespace

Prediction kappa_abelian_two_primes(const Factorization& f, const SylowStructure& s) {
  if (f.pairs.size() != 2)
    throw InvalidArgument("kappa_abelian_two_primes: order must have two prime divisors");
  check_structure(f, s);
  const auto& s1 = s.sylows[0];
  const auto& s2 = s.sylows[1];
  const std::uint64_t size1 = f.pairs[0].value(), size2 = f.pairs[1].value();
  Prediction pr;
  add(pr, "|G| = " + f.to_string(), true);
  add(pr, "P1 non-cyclic", !s1.cyclic);
  add(pr, "P2 non-cyclic", !s2.cyclic);

  if (s1.cyclic && s2.cyclic) {
    pr.case_tag = "abelian2:cyclic";
    pr.cutset_description = "no prediction";
    return pr;
  }
  if (s1.cyclic != s2.cyclic) {
    const bool p1_noncyclic = !s1.cyclic;
    const auto& other = p1_noncyclic ? f.pairs[1] : f.pairs[0];
    pr.applicable = true;
    pr.case_tag = "abelian2:one-noncyclic-sylow";
    pr.kappa = other.value();
    const bool many = s1.prime == 2 && p1_noncyclic;
    add(pr, "p1 = 2 with P1 non-cyclic and P2 cyclic", many);
    if (many)
      set_possibly_many(pr, {other.prime});
    else
      set_unique(pr, {other.prime});
    return pr;
  }

  const std::uint64_t c = s.min_maximal_cyclic_order;
  const std::uint64_t c_tilde = c - euler_phi(c);
  const bool odd_with_small_cyclic = s1.prime >= 3 && c == s1.prime * s2.prime;
  add(pr, "p1 >= 3 and a maximal cyclic subgroup of order p1*p2 exists",
      odd_with_small_cyclic);
  add(pr, "P1 elementary abelian", s1.elementary_abelian);
  if (!odd_with_small_cyclic && !s1.elementary_abelian) {
    pr.case_tag = "abelian2:both-noncyclic";
    pr.cutset_description = "no prediction";
    return pr;
  }
  pr.applicable = true;
  pr.case_tag = odd_with_small_cyclic ? "abelian2:both-noncyclic-order-p1p2"
                                      : "abelian2:both-noncyclic-elementary-p1";
  pr.kappa = std::min({size1, size2, c_tilde});
  pr.claim = CutsetClaim::unknown;
  pr.cutset_description = "min{|P1|, |P2|, |C~|} with |C| = " + std::to_string(c);
  return pr;
}

Prediction kappa_abelian_three_primes(const Factorization& f, const SylowStructure& s) {
  if (f.pairs.size() != 3)
    throw InvalidArgument("kappa_abelian_three_primes: order must have three prime divisors");
  check_structure(f, s);
  std::size_t k = 3, noncyclic = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (!s.sylows[i].cyclic) {
      ++noncyclic;
      k = i;
    }
  if (noncyclic != 1)
    throw InvalidArgument("kappa_abelian_three_primes: exactly one Sylow subgroup must be non-cyclic");
  const auto& fp = f.pairs;
  Prediction pr;
  pr.applicable = true;
  add(pr, "|G| = " + f.to_string(), true);
  add(pr, "p1 = 2", fp[0].prime == 2);
  add(pr, "non-cyclic Sylow at p = " + std::to_string(fp[k].prime), true);

  if (fp[0].prime == 2 && k == 0) {
    std::uint32_t c = 0;
    for (auto o = s.min_maximal_cyclic_order; o % 2 == 0; o /= 2) ++c;
    add(pr, "c > 1 (2-part of the least maximal cyclic order exceeds 2)", c > 1);
    if (c > 1) {
      pr.case_tag = "abelian3:noncyclic-2-sylow-c>1";
      pr.kappa = fp[1].value() * fp[2].value();
      set_possibly_many(pr, {fp[1].prime, fp[2].prime});
    } else {
      const auto inner = kappa_cyclic(s.min_maximal_cyclic_order);
      pr.case_tag = "abelian3:noncyclic-2-sylow-c=1";
      pr.kappa = inner.kappa;
      pr.claim = CutsetClaim::unknown;
      pr.cutset_description =
          "kappa of the cyclic group of order " + std::to_string(s.min_maximal_cyclic_order);
    }
    return pr;
  }
  std::vector<std::uint64_t> others;
  std::uint64_t kappa = 1;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) {
      others.push_back(fp[i].prime);
      kappa *= fp[i].value();
    }
  pr.case_tag = fp[0].prime == 2 ? "abelian3:noncyclic-odd-sylow-even-order"
                                 : "abelian3:noncyclic-sylow-odd-order";
  pr.kappa = kappa;
  set_unique(pr, std::move(others));
  return pr;
}

std::uint64_t gamma_cardinality(std::uint32_t m, std::uint64_t p2, std::uint32_t n2,
                                std::uint64_t p3, std::uint32_t n3) {
  if (m < 1 || n2 < 1 || n3 < 1)
    throw InvalidArgument("gamma_cardinality: exponents must be >= 1");
  if (!is_prime(p2) || !is_prime(p3) || p2 == 2 || p2 >= p3)
    throw InvalidArgument("gamma_cardinality: need odd primes p2 < p3");
  const std::uint64_t order = ipow(2, m) * ipow(p2, n2) * ipow(p3, n3);
  return euler_phi(order) +
         ipow(2, m - 1) * ipow(p2, n2 - 1) * ((p2 - 1) * ipow(p3, n3 - 1) + 2);
}

}  // namespace pgconn
