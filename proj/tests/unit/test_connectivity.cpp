#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pgconn/connectivity.hpp"
#include "pgconn/cyclic_structure.hpp"
#include "pgconn/errors.hpp"

using namespace pgconn;

namespace {

Group ab(std::vector<PrimePower> f) { return make_abelian(AbelianSpec(std::move(f))); }

std::vector<std::uint64_t> masks(const std::vector<VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : sets) out.push_back(oracle::to_mask(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Group> small_groups() {
  return {make_cyclic(12), make_cyclic(18), ab({{2, 1}, {2, 1}, {3, 1}}),
          ab({{2, 2}, {2, 1}}), make_generalized_quaternion(8), make_dihedral(8),
          make_dihedral(10), ab({{3, 1}, {3, 1}}), make_cyclic(20)};
}

}  // namespace

TEST_CASE("kappa on random graphs matches exhaustive search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const auto adj = oracle::random_graph(n, density, rng);
    const auto g = oracle::from_matrix(adj);
    const auto expected = oracle::brute_kappa(adj);
    INFO("n=" << n << " trial=" << trial);
    CHECK(vertex_connectivity(g) == expected);
    const auto rep = minimum_cut(g);
    CHECK(rep.kappa == expected);
    CHECK(rep.cut.count() == expected);
    if (!g.is_complete()) {
      CHECK(oracle::is_cut(adj, oracle::to_mask(rep.cut)));
      REQUIRE(rep.witness.has_value());
      CHECK(is_separation(g, rep.cut, *rep.witness));
    }
  }
}

TEST_CASE("kappa of power graphs against both oracles") {
  for (const auto& grp : small_groups()) {
    INFO(grp.name());
    const auto graph = build_power_graph(grp);
    const auto adj = oracle::to_matrix(graph);
    const auto k = vertex_connectivity(graph);
    CHECK(k == oracle::brute_kappa(adj));
    CHECK(k == oracle::flow_kappa(adj));
  }
}

TEST_CASE("kappa examples") {
  CHECK(vertex_connectivity(build_power_graph(make_cyclic(8))) == 7);
  CHECK(vertex_connectivity(build_power_graph(make_generalized_quaternion(8))) == 2);
  CHECK(vertex_connectivity(build_power_graph(make_cyclic(12))) == 6);
  const auto c105 = build_power_graph(make_cyclic(105));
  CHECK(vertex_connectivity(c105) == oracle::flow_kappa(oracle::to_matrix(c105)));
  CHECK_THROWS_AS(vertex_connectivity(build_power_graph(make_cyclic(1))), InvalidArgument);

  const auto c8 = build_power_graph(make_cyclic(8));
  const auto rep = minimum_cut(c8);
  CHECK(rep.cut.count() == 7);
  CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("min_vertex_cut_between") {
  const auto klein = build_power_graph(ab({{2, 1}, {2, 1}}));
  const auto r = min_vertex_cut_between(klein, 1, 2);
  CHECK(r.kappa == 1);
  CHECK(to_indices(r.cut) == std::vector<std::size_t>{0});

  const auto q8g = make_generalized_quaternion(8);
  const auto q8 = build_power_graph(q8g);
  // two order-4 elements generating different subgroups
  std::size_t s = 8, t = 8;
  for (std::size_t x = 1; x < 8 && t == 8; ++x)
    if (element_order(q8g, oracle::el(x)) == 4) {
      if (s == 8) s = x;
      else if (!q8.adjacent(s, x)) t = x;
    }
  REQUIRE(t < 8);
  CHECK(min_vertex_cut_between(q8, s, t).kappa == 2);
  CHECK_THROWS_AS(min_vertex_cut_between(q8, 0, s), InvalidArgument);
  CHECK_THROWS_AS(min_vertex_cut_between(q8, s, s), InvalidArgument);
}

TEST_CASE("Menger consistency on sampled pairs") {
  std::mt19937_64 rng(3);
  for (const auto& grp : small_groups()) {
    const auto g = build_power_graph(grp);
    const auto adj = oracle::to_matrix(g);
    const std::size_t n = g.vertex_count();
    for (int i = 0; i < 30; ++i) {
      const std::size_t s = rng() % n, t = rng() % n;
      if (s == t || g.adjacent(s, t)) continue;
      const auto rep = min_vertex_cut_between(g, s, t);
      const auto paths = max_vertex_disjoint_paths(g, s, t);
      CHECK(paths.size() == rep.kappa);
      CHECK(rep.kappa == oracle::local_connectivity(adj, s, t));
      VertexSet used = g.empty_set();
      for (const auto& p : paths) {
        REQUIRE(p.size() >= 3);
        CHECK(p.front() == s);
        CHECK(p.back() == t);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) CHECK(g.adjacent(p[j], p[j + 1]));
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
          CHECK_FALSE(used.test(p[j]));
          used.set(p[j]);
        }
      }
      const auto comps = components_after_removal(g, rep.cut);
      for (const auto& c : comps) CHECK_FALSE((c.test(s) && c.test(t)));
    }
  }
}

TEST_CASE("max_vertex_disjoint_paths honours its limit") {
  const auto g = build_power_graph(make_cyclic(30));
  const auto adj = oracle::to_matrix(g);
  for (std::size_t t = 3; t < 30; ++t)
    if (!g.adjacent(2, t)) {
      CHECK(max_vertex_disjoint_paths(g, 2, t, 3).size() == 3);
      CHECK(max_vertex_disjoint_paths(g, 2, t).size() == oracle::local_connectivity(adj, 2, t));
      break;
    }
}

TEST_CASE("all_minimum_cutsets against exhaustive search") {
  for (const auto& grp : small_groups()) {
    INFO(grp.name());
    const auto g = build_power_graph(grp);
    const auto adj = oracle::to_matrix(g);
    const auto k = vertex_connectivity(g);
    const auto found = all_minimum_cutsets(g, generator_classes(grp), k);
    std::vector<std::uint64_t> expected;
    for (auto m : oracle::brute_minimal_cuts(adj))
      if (static_cast<std::size_t>(__builtin_popcountll(m)) == k) expected.push_back(m);
    CHECK(masks(found) == expected);
    for (std::size_t i = 1; i < found.size(); ++i)
      CHECK(to_indices(found[i - 1]) < to_indices(found[i]));
  }
}

TEST_CASE("minimum cut-set counts") {
  const auto count = [](const Group& grp) {
    const auto g = build_power_graph(grp);
    return all_minimum_cutsets(g, generator_classes(grp), vertex_connectivity(g)).size();
  };
  CHECK(count(make_cyclic(12)) == 1);
  CHECK(count(make_cyclic(18)) == 2);
  CHECK(count(make_cyclic(15)) == 1);
  CHECK(count(ab({{2, 1}, {2, 1}, {3, 1}})) == 4);
}

TEST_CASE("all_minimum_cutsets reports partial results at the cap") {
  const auto grp = make_cyclic(60);
  const auto g = build_power_graph(grp);
  const auto k = vertex_connectivity(g);
  try {
    (void)all_minimum_cutsets(g, generator_classes(grp), k, 2);
    FAIL("expected CutsetLimit");
  } catch (const CutsetLimit& e) {
    for (const auto& s : e.partial()) CHECK(s.count() == k);
  }
}

TEST_CASE("enumerate_minimal_cutsets against exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 9;
    const auto adj = oracle::random_graph(n, 0.45, rng);
    if (oracle::component_count(adj, std::vector<bool>(n, false)) != 1) continue;
    CHECK(masks(enumerate_minimal_cutsets(oracle::from_matrix(adj))) ==
          oracle::brute_minimal_cuts(adj));
  }
  for (const auto& grp : small_groups()) {
    const auto g = build_power_graph(grp);
    CHECK(masks(enumerate_minimal_cutsets(g)) == oracle::brute_minimal_cuts(oracle::to_matrix(g)));
  }
}

TEST_CASE("certify_minimal") {
  const auto grp = ab({{2, 1}, {2, 1}, {3, 1}});
  const auto g = build_power_graph(grp);
  const auto m = min_order_maximal_cyclic(grp);
  const auto rep = certify_minimal(g, nongenerators(m));
  CHECK_FALSE(rep.is_minimal);
  CHECK_FALSE(rep.is_minimum);

  const auto h = ab({{3, 1}, {3, 1}, {5, 1}});
  const auto gh = build_power_graph(h);
  const auto q = certify_minimal(gh, sylow_complement_product(h, 3));
  CHECK(q.is_minimal);
  CHECK(q.is_minimum);
  CHECK(q.kappa == 5);
  REQUIRE(q.witness.has_value());
  CHECK(is_separation(gh, q.cut, *q.witness));

  CHECK_THROWS_AS(certify_minimal(gh, gh.empty_set()), InvalidArgument);
}

TEST_CASE("twin classes") {
  const auto grp = make_cyclic(12);
  const auto g = build_power_graph(grp);
  const auto tw = twin_classes(g);
  VertexSet seen = g.empty_set();
  for (const auto& c : tw) {
    CHECK((seen & c).none());
    seen |= c;
    const auto u = c.find_first();
    for (auto v : to_indices(c)) {
      auto nu = g.neighbors(u), nv = g.neighbors(v);
      nu.set(u);
      nv.set(v);
      CHECK(nu == nv);
    }
  }
  CHECK(seen.all());
  // the identity and the four generators are universal, hence twins
  CHECK(tw.front().count() == 5);
}
