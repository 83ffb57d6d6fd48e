#include "pgconn/power_graph.hpp"

#include "pgconn/errors.hpp"

namespace pgconn {

PowerGraph PowerGraph::from_adjacency(std::vector<VertexSet> rows, std::string label) {
  const std::size_t n = rows.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].size() != n) throw InvalidArgument("adjacency row has wrong width");
    if (rows[v].test(v)) throw InvalidArgument("adjacency has a self-loop");
  }
  for (std::size_t u = 0; u < n; ++u)
    for (auto v = rows[u].find_first(); v != VertexSet::npos; v = rows[u].find_next(v))
      if (!rows[v].test(u)) throw InvalidArgument("adjacency is not symmetric");
  PowerGraph g;
  g.rows_ = std::move(rows);
  g.label_ = std::move(label);
  return g;
}

std::size_t PowerGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

bool PowerGraph::is_complete() const {
  for (const auto& r : rows_)
    if (r.count() + 1 != rows_.size()) return false;
  return true;
}

PowerGraph build_power_graph(const Group& grp) {
  const std::size_t n = grp.size();
  PowerGraph g;
  g.label_ = grp.name();
  g.rows_.assign(n, VertexSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    auto closure = cyclic_closure(grp, Element{static_cast<std::uint32_t>(x)});
    closure.reset(x);
    g.rows_[x] |= closure;
    for (auto y = closure.find_first(); y != VertexSet::npos; y = closure.find_next(y))
      g.rows_[y].set(x);
  }
  return g;
}

std::vector<VertexSet> components_after_removal(const PowerGraph& g,
                                                const VertexSet& removed) {
  if (removed.size() != g.vertex_count())
    throw InvalidArgument("vertex set has wrong universe size");
  std::vector<VertexSet> comps;
  VertexSet unvisited = ~removed;
  std::vector<std::size_t> stack;
  for (auto start = unvisited.find_first(); start != VertexSet::npos;
       start = unvisited.find_first()) {
    VertexSet comp = g.empty_set();
    comp.set(start);
    unvisited.reset(start);
    stack.assign(1, start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(v) & unvisited;
      unvisited -= fresh;
      comp |= fresh;
      for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w))
        stack.push_back(w);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected_after_removal(const PowerGraph& g, const VertexSet& removed) {
  return components_after_removal(g, removed).size() <= 1;
}

bool is_cut_set(const PowerGraph& g, const VertexSet& x) {
  if (x.size() != g.vertex_count())
    throw InvalidArgument("vertex set has wrong universe size");
  if (g.vertex_count() - x.count() < 2)
    throw InvalidArgument("is_cut_set: fewer than two vertices would remain");
  return components_after_removal(g, x).size() >= 2;
}

bool is_minimal_cut_set(const PowerGraph& g, const VertexSet& x) {
  if (!is_cut_set(g, x)) return false;
  // Returning v to the graph reconnects it iff v touches every component.
  const auto comps = components_after_removal(g, x);
  for (auto v = x.find_first(); v != VertexSet::npos; v = x.find_next(v))
    for (const auto& c : comps)
      if (!g.neighbors(v).intersects(c)) return false;
  return true;
}

bool is_separation(const PowerGraph& g, const VertexSet& x, const Separation& s) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n || s.side_a.size() != n || s.side_b.size() != n)
    throw InvalidArgument("vertex set has wrong universe size");
  if (s.side_a.none() || s.side_b.none())
    throw InvalidArgument("separation side is empty");
  if (s.side_a.intersects(s.side_b) || s.side_a.intersects(x) || s.side_b.intersects(x) ||
      (s.side_a | s.side_b | x).count() != n)
    throw InvalidArgument("separation does not partition the remaining vertices");
  for (auto a = s.side_a.find_first(); a != VertexSet::npos; a = s.side_a.find_next(a))
    if (g.neighbors(a).intersects(s.side_b)) return false;
  return true;
}

bool proper_power_graph_connected(const Group& grp) {
  if (grp.size() < 3)
    throw InvalidArgument("proper_power_graph_connected: |G| must be at least 3");
  const auto g = build_power_graph(grp);
  VertexSet identity = g.empty_set();
  identity.set(0);
  return is_connected_after_removal(g, identity);
}

}  // namespace pgconn
