#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgconn/errors.hpp"
#include "pgconn/power_graph.hpp"

namespace pgconn {

struct CutReport {
  VertexSet cut;
  /// Global connectivity for whole-graph reports; the local s-t
  /// connectivity for min_vertex_cut_between.
  std::size_t kappa = 0;
  bool is_minimum = false;
  bool is_minimal = false;
  std::optional<Separation> witness;
};

/// Thrown by the enumerations when the configured cap is exceeded.
using CutsetLimit = PartialResult<VertexSet>;

inline constexpr std::uint64_t kDefaultCombinationCap = 10'000'000;

/// kappa(g); n-1 for complete graphs. Requires at least two vertices.
std::size_t vertex_connectivity(const PowerGraph& g);

/// One minimum cut-set with a witnessing separation. For a complete graph
/// the cut is vertices 0..n-2 and there is no witness.
CutReport minimum_cut(const PowerGraph& g);

/// Minimum s-t vertex cut for distinct non-adjacent s, t.
CutReport min_vertex_cut_between(const PowerGraph& g, std::size_t s, std::size_t t);

/// Internally vertex-disjoint s-t paths (s and t included), at most `limit`.
std::vector<std::vector<std::size_t>> max_vertex_disjoint_paths(
    const PowerGraph& g, std::size_t s, std::size_t t,
    std::size_t limit = static_cast<std::size_t>(-1));

/// Every minimum cut-set, searched over unions of `classes` (which must
/// partition the vertices and contain {0} as a class member). Sorted
/// lexicographically by index list. Throws CutsetLimit past `cap` search
/// nodes.
std::vector<VertexSet> all_minimum_cutsets(const PowerGraph& g,
                                           const std::vector<VertexSet>& classes,
                                           std::size_t kappa,
                                           std::uint64_t cap = kDefaultCombinationCap);

/// Minimality report for a cut-set; throws InvalidArgument otherwise.
CutReport certify_minimal(const PowerGraph& g, const VertexSet& x);

/// Inclusion-minimal cut-sets found by minimal-separator enumeration on the
/// raw graph, without using generator classes. Sorted like
/// all_minimum_cutsets. Throws CutsetLimit past `cap` separators.
std::vector<VertexSet> enumerate_minimal_cutsets(const PowerGraph& g,
                                                 std::uint64_t cap = 1'000'000);

/// Vertices with equal closed neighbourhoods, ordered by least member.
std::vector<VertexSet> twin_classes(const PowerGraph& g);

}  // namespace pgconn
