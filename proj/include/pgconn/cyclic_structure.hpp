#pragma once

#include <cstdint>
#include <vector>

#include "pgconn/group.hpp"

namespace pgconn {

struct CyclicSubgroup {
  ElementSet elements;
  ElementSet generators;
  Element generator;  // least generator index
  std::uint64_t order = 0;
  bool is_maximal = false;
};

/// <x> with its maximality flag.
CyclicSubgroup cyclic_subgroup(const Group& g, Element x);

/// Distinct cyclic subgroups, ordered by least generator.
std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g);

/// Maximal cyclic subgroups, ordered by least generator.
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g);

/// Elements of M that do not generate M.
ElementSet nongenerators(const CyclicSubgroup& m);

/// Union of M ∩ <y> over all y outside M. Rejects cyclic groups.
ElementSet external_overlap(const Group& g, const CyclicSubgroup& m);

/// Elements whose order is coprime to `prime`: in a nilpotent group, the
/// product of every Sylow subgroup except the one for `prime`.
ElementSet sylow_complement_product(const Group& g, std::uint64_t prime);

/// Product of the Sylow subgroups for `primes` (elements whose order has
/// prime support inside `primes`). Requires a nilpotent group.
ElementSet sylow_product(const Group& g, const std::vector<std::uint64_t>& primes);

/// Elements of M of order exactly d; d must divide |M|.
ElementSet elements_of_exact_order(const Group& g, const CyclicSubgroup& m,
                                   std::uint64_t d);
/// Elements of M whose order divides d, i.e. the order-d subgroup of M.
ElementSet elements_of_dividing_order(const Group& g, const CyclicSubgroup& m,
                                      std::uint64_t d);

/// Shape of M in an abelian group of order 2^a p^b q^c whose Sylow
/// 2-subgroup is the only non-cyclic one: |M| = 2^m p^n2 q^n3.
struct GammaShape {
  std::uint32_t m = 0;
  std::uint64_t p2 = 0;
  std::uint32_t n2 = 0;
  std::uint64_t p3 = 0;
  std::uint32_t n3 = 0;
};

/// Throws UnsupportedStructure unless g and m fit the GammaShape setting.
GammaShape gamma_shape(const Group& g, const CyclicSubgroup& m);

/// The cut-set built from the order shells of M: every element whose order
/// is 2^m p2^n2 p3^j (j >= 1), plus the subgroups of orders 2^m p2^(n2-1)
/// and 2^(m-1) p2^n2. Its size is checked against the closed form and a
/// mismatch throws std::logic_error.
ElementSet gamma_set(const Group& g, const CyclicSubgroup& m);

/// Maximal cyclic subgroup of least order, ties by least generator index.
CyclicSubgroup min_order_maximal_cyclic(const Group& g);

enum class WitnessStrategy { exhaustive, constructive };

/// Some beta outside M with alpha in <beta>. The exhaustive strategy returns
/// the least such index; the constructive one builds beta from the Sylow
/// components of M (abelian groups only). Throws WitnessNotFound when no
/// such beta exists.
Element external_generator_witness(const Group& g, const CyclicSubgroup& m,
                                   Element alpha,
                                   WitnessStrategy strategy = WitnessStrategy::exhaustive);

struct SylowTraits {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  bool cyclic = false;
  bool elementary_abelian = false;
  bool generalized_quaternion = false;
  /// Least order of a maximal cyclic subgroup of the Sylow subgroup.
  std::uint64_t min_maximal_cyclic_order = 0;
};

struct GroupProfile {
  Factorization order;
  bool abelian = false;
  bool cyclic = false;
  bool nilpotent = false;
  std::vector<SylowTraits> sylows;  // filled only for nilpotent groups
  std::uint64_t min_maximal_cyclic_order = 0;

  std::size_t noncyclic_sylow_count() const;
  bool all_sylows_noncyclic() const;
  bool is_p_group() const { return order.prime_count() == 1; }
};

GroupProfile profile_group(const Group& g);

}  // namespace pgconn
