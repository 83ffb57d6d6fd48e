#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgconn/number_theory.hpp"

namespace pgconn {

/// Index of a group element; index 0 is always the identity.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Subset of a group, one bit per element index. Doubles as a vertex set of
/// the power graph since vertex i is element i.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<std::size_t> to_indices(const ElementSet& s);
ElementSet from_indices(std::size_t universe, std::span<const std::size_t> idx);

/// Direct product of cyclic groups of prime-power order, kept in canonical
/// (prime, exponent) order.
class AbelianSpec {
 public:
  explicit AbelianSpec(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::uint64_t order() const;
  /// e.g. "C2xC2xC3".
  std::string label() const;

  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;

 private:
  std::vector<PrimePower> factors_;
};

class Group {
 public:
  enum class Backing { structured_abelian, cayley_table };

  /// Validates identity at index 0, inverses (latin square) and
  /// associativity (exhaustive up to 64 elements, sampled above).
  static Group from_table(std::string name, std::size_t size,
                          std::vector<std::uint32_t> table);

  std::size_t size() const { return size_; }
  const std::string& name() const { return name_; }
  Backing backing() const { return backing_; }
  /// Present only for structured-abelian groups.
  const std::optional<AbelianSpec>& abelian_spec() const { return spec_; }

  Element identity() const { return Element{0}; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, std::int64_t k) const;
  std::uint64_t order(Element a) const { return orders_.at(a.index); }

  bool is_abelian() const { return abelian_; }
  bool is_cyclic() const { return cyclic_; }

  /// Mixed-radix digits of a structured-abelian element, one per factor.
  std::span<const std::uint64_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint64_t> digits) const;

  std::vector<Element> elements() const;
  ElementSet empty_set() const { return ElementSet(size_); }

 private:
  friend Group make_abelian(const AbelianSpec& spec);
  friend Group make_cyclic(std::uint64_t n);

  Group() = default;
  void finish();

  std::size_t size_ = 0;
  std::string name_;
  Backing backing_ = Backing::cayley_table;
  std::optional<AbelianSpec> spec_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> digit_table_;  // size_ * moduli_.size()
  std::vector<std::uint32_t> table_;        // size_ * size_, row-major
  std::vector<std::uint32_t> inverses_;
  std::vector<std::uint64_t> orders_;
  bool abelian_ = false;
  bool cyclic_ = false;
};

Group make_cyclic(std::uint64_t n);
Group make_abelian(const AbelianSpec& spec);
/// Q_{2^m}, m >= 3: a^i b^j stored at index i + 2^{m-1} j.
Group make_generalized_quaternion(std::uint64_t order);
/// D_{2n}, n >= 3: r^i s^j stored at index i + n j.
Group make_dihedral(std::uint64_t order);

/// Image of residue k under Z_n -> C_n for a group built by make_cyclic.
Element cyclic_residue(const Group& g, std::uint64_t k);

std::uint64_t element_order(const Group& g, Element x);
ElementSet cyclic_closure(const Group& g, Element x);
/// Generators of <x>.
ElementSet generator_class(const Group& g, Element x);
/// All generator classes, ordered by least member.
std::vector<ElementSet> generator_classes(const Group& g);

struct SylowDecomposition {
  std::vector<PrimePower> primes;      // prime and exponent in |G|
  std::vector<ElementSet> subgroups;   // parallel to primes
  std::vector<std::vector<Element>> projection;  // [element][slot]

  std::size_t slot_of(std::uint64_t prime) const;
  Element project(Element x, std::size_t slot) const {
    return projection.at(x.index).at(slot);
  }
};

/// Sylow subgroups and per-prime components of every element. Throws
/// UnsupportedStructure when some Sylow subgroup is not normal.
SylowDecomposition sylow_decomposition(const Group& g);

}  // namespace pgconn
