#include "pgconn/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pgconn {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Unit vertex-capacity max-flow between two non-adjacent vertices. Every
// vertex v other than s and t is split into (v,in) -> (v,out) with capacity
// one; each edge u~v becomes an uncapacitated arc (u,out) -> (v,in).
class VertexFlow {
 public:
  VertexFlow(const PowerGraph& g, std::size_t s, std::size_t t)
      : g_(g), s_(s), t_(t), n_(g.vertex_count()),
        used_(n_, false), pred_(n_, kNone), succ_(n_, kNone) {}

  std::size_t run(std::size_t limit) {
    while (flow_ < limit && augment()) ++flow_;
    return flow_;
  }

  std::size_t value() const { return flow_; }

  // Vertices whose in-state is reachable in the residual graph but whose
  // out-state is not; valid once run() stopped without hitting its limit.
  VertexSet min_cut() {
    search();
    VertexSet cut = reach_in_ & ~reach_out_;
    cut.reset(t_);
    return cut;
  }

  std::vector<std::vector<std::size_t>> paths() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t v = 0; v < n_; ++v) {
      if (v == t_ || pred_[v] != s_) continue;
      std::vector<std::size_t> path{s_, v};
      for (std::size_t u = v; succ_[u] != t_ && path.size() <= n_; u = succ_[u])
        path.push_back(succ_[u]);
      path.push_back(t_);
      out.push_back(std::move(path));
    }
    return out;
  }

 private:
  enum class Step : std::uint8_t { none, arc, internal, back_internal, back_arc };

  // BFS over residual states. Returns true if t's in-state was reached.
  bool search() {
    reach_in_ = g_.empty_set();
    reach_out_ = g_.empty_set();
    from_in_.assign(n_, {Step::none, kNone});
    from_out_.assign(n_, {Step::none, kNone});
    std::deque<std::size_t> queue;  // 2v = (v,in), 2v+1 = (v,out)
    reach_out_.set(s_);
    queue.push_back(2 * s_ + 1);
    while (!queue.empty()) {
      const auto state = queue.front();
      queue.pop_front();
      const auto v = state / 2;
      if (state % 2 == 1) {
        if (v != s_ && used_[v] && !reach_in_.test(v)) {
          reach_in_.set(v);
          from_in_[v] = {Step::back_internal, v};
          queue.push_back(2 * v);
        }
        VertexSet fresh = g_.neighbors(v) & ~reach_in_;
        for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
          reach_in_.set(w);
          from_in_[w] = {Step::arc, v};
          if (w == t_) return true;
          queue.push_back(2 * w);
        }
      } else {
        if (!used_[v]) {
          if (!reach_out_.test(v)) {
            reach_out_.set(v);
            from_out_[v] = {Step::internal, v};
            queue.push_back(2 * v + 1);
          }
        } else {
          const auto p = pred_[v];
          if (p != kNone && !reach_out_.test(p)) {
            reach_out_.set(p);
            from_out_[p] = {Step::back_arc, v};
            queue.push_back(2 * p + 1);
          }
        }
      }
    }
    return false;
  }

  bool augment() {
    if (!search()) return false;
    struct Arc {
      std::size_t from, to;
    };
    std::vector<Arc> add_arcs, cancel_arcs;
    std::vector<std::size_t> open, close;
    std::size_t state = 2 * t_;
    while (state != 2 * s_ + 1) {
      const auto v = state / 2;
      if (state % 2 == 0) {
        const auto [kind, origin] = from_in_[v];
        if (kind == Step::arc) {
          add_arcs.push_back({origin, v});
          state = 2 * origin + 1;
        } else {
          close.push_back(v);
          state = 2 * v + 1;
        }
      } else {
        const auto [kind, origin] = from_out_[v];
        if (kind == Step::internal) {
          open.push_back(v);
          state = 2 * v;
        } else {
          cancel_arcs.push_back({v, origin});
          state = 2 * origin;
        }
      }
    }
    for (const auto& a : cancel_arcs) {
      if (succ_[a.from] == a.to) succ_[a.from] = kNone;
      if (pred_[a.to] == a.from) pred_[a.to] = kNone;
    }
    for (auto v : close) used_[v] = false;
    for (auto v : open) used_[v] = true;
    for (const auto& a : add_arcs) {
      if (a.from != s_) succ_[a.from] = a.to;
      if (a.to != t_) pred_[a.to] = a.from;
    }
    return true;
  }

  struct Origin {
    Step kind;
    std::size_t vertex;
  };

  const PowerGraph& g_;
  std::size_t s_, t_, n_;
  std::size_t flow_ = 0;
  std::vector<bool> used_;
  std::vector<std::size_t> pred_, succ_;
  VertexSet reach_in_, reach_out_;
  std::vector<Origin> from_in_, from_out_;
};

void check_pair(const PowerGraph& g, std::size_t s, std::size_t t) {
  if (s >= g.vertex_count() || t >= g.vertex_count())
    throw InvalidArgument("vertex index out of range");
  if (s == t) throw InvalidArgument("s and t must be distinct");
  if (g.adjacent(s, t)) throw InvalidArgument("s and t are adjacent");
}

Separation separation_for(const PowerGraph& g, const VertexSet& cut, std::size_t side_of) {
  auto comps = components_after_removal(g, cut);
  Separation sep{g.empty_set(), g.empty_set()};
  for (auto& c : comps) (c.test(side_of) ? sep.side_a : sep.side_b) |= c;
  return sep;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto x = a.find_first(), y = b.find_first();
  while (x != VertexSet::npos && y != VertexSet::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return x == VertexSet::npos && y != VertexSet::npos;
}

struct BestCut {
  std::size_t kappa;
  std::size_t s = kNone, t = kNone;
};

BestCut search_connectivity(const PowerGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidArgument("vertex connectivity needs at least two vertices");
  if (g.is_complete()) return {n - 1};

  const auto twins = twin_classes(g);
  std::vector<std::size_t> reps;
  for (const auto& c : twins) reps.push_back(c.find_first());

  std::size_t best = n - 1;
  for (auto v : reps)
    if (g.degree(v) + 1 < n) best = std::min(best, g.degree(v));

  struct Pair {
    std::size_t degree_sum, s, t;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (!g.adjacent(reps[i], reps[j]))
        pairs.push_back({g.degree(reps[i]) + g.degree(reps[j]), reps[i], reps[j]});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.degree_sum, a.s, a.t) < std::tie(b.degree_sum, b.s, b.t);
  });

  BestCut out{best};
  for (const auto& p : pairs) {
    VertexFlow flow(g, p.s, p.t);
    const auto f = flow.run(out.kappa + (out.s == kNone ? 1 : 0));
    if (f < out.kappa || (f == out.kappa && out.s == kNone)) {
      out = {f, p.s, p.t};
      if (out.kappa == 0) break;
    }
  }
  return out;
}

}  // namespace

std::vector<VertexSet> twin_classes(const PowerGraph& g) {
  std::map<VertexSet, std::size_t> index;
  std::vector<VertexSet> classes;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.set(v);
    auto [it, inserted] = index.try_emplace(std::move(closed), classes.size());
    if (inserted) classes.push_back(g.empty_set());
    classes[it->second].set(v);
  }
  return classes;
}

std::size_t vertex_connectivity(const PowerGraph& g) {
  return search_connectivity(g).kappa;
}

CutReport minimum_cut(const PowerGraph& g) {
  const auto best = search_connectivity(g);
  CutReport r;
  r.kappa = best.kappa;
  r.is_minimum = true;
  r.is_minimal = true;
  if (best.s == kNone) {
    r.cut = g.empty_set();
    for (std::size_t v = 0; v + 1 < g.vertex_count(); ++v) r.cut.set(v);
    return r;
  }
  VertexFlow flow(g, best.s, best.t);
  flow.run(static_cast<std::size_t>(-1));
  r.cut = flow.min_cut();
  r.witness = separation_for(g, r.cut, best.s);
  return r;
}

CutReport min_vertex_cut_between(const PowerGraph& g, std::size_t s, std::size_t t) {
  check_pair(g, s, t);
  VertexFlow flow(g, s, t);
  CutReport r;
  r.kappa = flow.run(static_cast<std::size_t>(-1));
  r.cut = flow.min_cut();
  r.is_minimal = is_minimal_cut_set(g, r.cut);
  r.witness = separation_for(g, r.cut, s);
  return r;
}

std::vector<std::vector<std::size_t>> max_vertex_disjoint_paths(const PowerGraph& g,
                                                                std::size_t s, std::size_t t,
                                                                std::size_t limit) {
  check_pair(g, s, t);
  VertexFlow flow(g, s, t);
  flow.run(limit);
  return flow.paths();
}

std::vector<VertexSet> all_minimum_cutsets(const PowerGraph& g,
                                           const std::vector<VertexSet>& classes,
                                           std::size_t kappa, std::uint64_t cap) {
  const std::size_t n = g.vertex_count();
  VertexSet cover = g.empty_set();
  std::size_t total = 0;
  for (const auto& c : classes) {
    if (c.size() != n) throw InvalidArgument("class has wrong universe size");
    if (c.none()) throw InvalidArgument("empty class");
    total += c.count();
    cover |= c;
  }
  if (total != n || cover.count() != n)
    throw InvalidArgument("classes do not partition the vertices");
  if (g.is_complete() || kappa + 2 > n) return {};

  std::size_t root = kNone;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].test(0))
      root = i;
    else
      order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].count() > classes[b].count();
  });
  std::vector<std::size_t> sizes, suffix(order.size() + 1, 0);
  for (auto i : order) sizes.push_back(classes[i].count());
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sizes[i];

  std::vector<VertexSet> found;
  std::uint64_t nodes = 0;
  VertexSet current = classes[root];

  auto dfs = [&](auto&& self, std::size_t from, std::size_t sum) -> void {
    if (++nodes > cap) {
      std::sort(found.begin(), found.end(), lex_less);
      throw CutsetLimit("minimum cut-set search exceeded " + std::to_string(cap) +
                            " combinations",
                        std::move(found));
    }
    if (sum == kappa) {
      if (is_cut_set(g, current)) found.push_back(current);
      return;
    }
    if (sum + suffix[from] < kappa) return;
    for (std::size_t j = from; j < order.size(); ++j) {
      if (sum + sizes[j] > kappa) continue;
      const auto& c = classes[order[j]];
      current |= c;
      self(self, j + 1, sum + sizes[j]);
      current -= c;
    }
  };
  if (classes[root].count() <= kappa) dfs(dfs, 0, classes[root].count());
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

CutReport certify_minimal(const PowerGraph& g, const VertexSet& x) {
  if (!is_cut_set(g, x)) throw InvalidArgument("certify_minimal: not a cut-set");
  CutReport r;
  r.cut = x;
  r.kappa = vertex_connectivity(g);
  r.is_minimum = x.count() == r.kappa;
  r.is_minimal = is_minimal_cut_set(g, x);
  if (r.is_minimal) r.witness = separation_for(g, x, (~x).find_first());
  return r;
}

std::vector<VertexSet> enumerate_minimal_cutsets(const PowerGraph& g, std::uint64_t cap) {
  std::set<VertexSet> seen;
  std::deque<VertexSet> pending;

  auto consider_components = [&](const VertexSet& removed) {
    for (const auto& c : components_after_removal(g, removed)) {
      VertexSet boundary = g.empty_set();
      for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
        boundary |= g.neighbors(v);
      boundary -= c;
      if (boundary.none()) continue;
      if (seen.insert(boundary).second) {
        if (seen.size() > cap) {
          std::vector<VertexSet> partial(seen.begin(), seen.end());
          throw CutsetLimit("minimal separator enumeration exceeded " +
                                std::to_string(cap) + " separators",
                            std::move(partial));
        }
        pending.push_back(boundary);
      }
    }
  };

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.set(v);
    consider_components(closed);
  }
  while (!pending.empty()) {
    const VertexSet s = std::move(pending.front());
    pending.pop_front();
    for (auto x = s.find_first(); x != VertexSet::npos; x = s.find_next(x))
      consider_components(s | g.neighbors(x));
  }

  std::vector<VertexSet> out;
  for (const auto& s : seen) {
    const auto comps = components_after_removal(g, s);
    if (comps.size() < 2) continue;
    bool all_full = true;
    for (const auto& c : comps) {
      VertexSet boundary = g.empty_set();
      for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
        boundary |= g.neighbors(v);
      if (!s.is_subset_of(boundary)) {
        all_full = false;
        break;
      }
    }
    if (all_full) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace pgconn
