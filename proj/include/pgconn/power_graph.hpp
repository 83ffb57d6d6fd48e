#pragma once

#include <string>
#include <vector>

#include "pgconn/group.hpp"

namespace pgconn {

using VertexSet = ElementSet;

/// Simple undirected graph on group elements, stored as a dense bit matrix.
/// Two distinct vertices are adjacent iff one lies in the cyclic subgroup
/// generated by the other.
class PowerGraph {
 public:
  /// Arbitrary simple graph from adjacency rows; used to exercise the graph
  /// algorithms on non-power graphs. Rows must be symmetric and loop-free.
  static PowerGraph from_adjacency(std::vector<VertexSet> rows, std::string label);

  std::size_t vertex_count() const { return rows_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  bool is_complete() const;
  const std::string& group_label() const { return label_; }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const { return ~empty_set(); }

 private:
  friend PowerGraph build_power_graph(const Group& g);

  std::vector<VertexSet> rows_;
  std::string label_;
};

/// Bipartition of the vertices left after removing a set, with no edge across.
struct Separation {
  VertexSet side_a;
  VertexSet side_b;
};

PowerGraph build_power_graph(const Group& g);

/// Components of the subgraph induced on V \ removed, ordered by least vertex.
std::vector<VertexSet> components_after_removal(const PowerGraph& g,
                                                const VertexSet& removed);

bool is_connected_after_removal(const PowerGraph& g, const VertexSet& removed);

/// Throws InvalidArgument when fewer than two vertices would remain.
bool is_cut_set(const PowerGraph& g, const VertexSet& x);

/// True iff x is a cut-set and x \ {v} is not a cut-set for every v in x.
bool is_minimal_cut_set(const PowerGraph& g, const VertexSet& x);

/// Throws InvalidArgument unless s partitions V \ x into two non-empty sides.
bool is_separation(const PowerGraph& g, const VertexSet& x, const Separation& s);

/// Connectivity of the power graph with the identity removed; |G| >= 3.
bool proper_power_graph_connected(const Group& g);

}  // namespace pgconn
