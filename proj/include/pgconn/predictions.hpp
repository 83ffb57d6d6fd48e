#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgconn/cyclic_structure.hpp"
#include "pgconn/number_theory.hpp"

namespace pgconn {

struct HypothesisCheck {
  std::string condition;
  bool holds = false;
};

/// What a closed form says about the minimum cut-sets.
enum class CutsetClaim {
  none,            // complete graph: no cut-sets at all
  unique,          // exactly one, given by `cutset_primes` when non-empty
  count,           // exactly `cutset_count` of them
  possibly_many,   // the Sylow product in `cutset_primes` is one of them
  unknown,
};

std::string to_string(CutsetClaim c);

struct Prediction {
  bool applicable = false;
  std::optional<std::uint64_t> kappa;
  std::string case_tag;
  CutsetClaim claim = CutsetClaim::unknown;
  std::uint64_t cutset_count = 0;
  /// Primes whose Sylow subgroups multiply to the predicted cut-set.
  std::vector<std::uint64_t> cutset_primes;
  std::string cutset_description;
  std::vector<HypothesisCheck> trace;
};

/// Vertex connectivity of the power graph of C_n, n >= 2.
Prediction kappa_cyclic(std::uint64_t n);

struct LowerBound {
  std::uint64_t bound = 0;
  bool equality = false;
};

/// phi(n) + 1, attained iff n is prime or a product of two distinct primes.
LowerBound kappa_cyclic_lower_bound(std::uint64_t n);

/// 2 phi(p_1...p_k) > p_1...p_k for strictly increasing primes.
bool condition_two_phi(std::span<const std::uint64_t> primes);

struct InequalityCheck {
  bool holds = false;
  bool equality = false;
};

/// (t+1) phi(q_1...q_t) >= q_1...q_t with its equality flag.
InequalityCheck inequality_t_plus_1(std::span<const std::uint64_t> primes);

/// Nilpotent group whose only non-cyclic Sylow subgroup is at
/// `noncyclic_prime`: the product of the other Sylow subgroups is then the
/// unique minimum cut-set whenever p_k >= r+1 or 2 phi(p_1...p_{r-1}) >
/// p_1...p_{r-1}. The caller must rule out a generalized quaternion
/// Sylow 2-subgroup.
Prediction kappa_single_noncyclic_sylow(const Factorization& f,
                                        std::uint64_t noncyclic_prime);

struct SylowStructure {
  std::vector<SylowTraits> sylows;  // ascending primes, one per prime of |G|
  std::uint64_t min_maximal_cyclic_order = 0;
};

/// Abelian group of order p_1^a p_2^b.
Prediction kappa_abelian_two_primes(const Factorization& f, const SylowStructure& s);

/// Abelian group of order p_1^a p_2^b p_3^c with exactly one non-cyclic
/// Sylow subgroup.
Prediction kappa_abelian_three_primes(const Factorization& f, const SylowStructure& s);

/// phi(2^m p2^n2 p3^n3) + 2^(m-1) p2^(n2-1) [(p2-1) p3^(n3-1) + 2].
std::uint64_t gamma_cardinality(std::uint32_t m, std::uint64_t p2, std::uint32_t n2,
                                std::uint64_t p3, std::uint32_t n3);

}  // namespace pgconn
