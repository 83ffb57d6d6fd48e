#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgconn/connectivity.hpp"
#include "pgconn/group.hpp"
#include "pgconn/predictions.hpp"

namespace pgconn {

struct ResourceCaps {
  std::size_t max_vertices = 600;
  std::uint64_t max_combinations = kDefaultCombinationCap;
};

enum class Verdict { match, mismatch, skipped_hypothesis, skipped_resource };

std::string to_string(Verdict v);

using IndexSet = std::vector<std::size_t>;

struct VerificationReport {
  std::string group_label;
  std::string theorem_id;
  Prediction predicted;
  std::optional<std::size_t> observed_kappa;
  /// Canonical listing (sorted indices, lexicographic order) when the
  /// minimum cut-sets were enumerated.
  std::optional<std::vector<IndexSet>> observed_cutsets;
  bool cutsets_partial = false;
  Verdict verdict = Verdict::skipped_hypothesis;
  std::string note;
};

/// One spec per isomorphism class of abelian group of order 2..max_order,
/// by order, then by partition of each prime exponent in descending
/// lexicographic order (C8, C2xC4, C2xC2xC2).
std::vector<AbelianSpec> generate_abelian_corpus(std::uint64_t max_order);

/// Q8, Q16, Q32 and the dihedral groups of order 6..20.
std::vector<Group> exceptional_corpus();

/// Identifiers accepted by verify_theorem.
const std::vector<std::string>& theorem_ids();

/// `id` is one of thm11 (cyclic), thm12 (one non-cyclic Sylow subgroup),
/// thm13 (abelian, two primes), thm14 (abelian, three primes) or props (all
/// property suites on G).
VerificationReport verify_theorem(const std::string& id, const Group& g,
                                  const ResourceCaps& caps = {});

/// verify_theorem over a corpus on `jobs` threads, reports in corpus order.
std::vector<VerificationReport> verify_corpus(const std::string& id,
                                              const std::vector<Group>& corpus,
                                              const ResourceCaps& caps, unsigned jobs);

struct PropertyOutcome {
  std::string group_label;
  enum class Status { pass, fail, skipped, skipped_resource } status = Status::skipped;
  std::string detail;
};

struct PropertySummary {
  std::string suite_id;
  std::vector<PropertyOutcome> outcomes;

  std::size_t count(PropertyOutcome::Status s) const;
  bool all_passed() const { return count(PropertyOutcome::Status::fail) == 0; }
};

const std::vector<std::string>& property_suite_ids();

/// Throws InvalidArgument for an unknown suite id.
PropertySummary run_property_suite(const std::string& suite_id,
                                   const std::vector<Group>& corpus,
                                   const ResourceCaps& caps = {});

std::vector<IndexSet> canonical_listing(const std::vector<VertexSet>& sets);

}  // namespace pgconn
