// Acceptance criteria: one PASS/FAIL line each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pgconn/connectivity.hpp"
#include "pgconn/cyclic_structure.hpp"
#include "pgconn/harness.hpp"
#include "pgconn/predictions.hpp"

using namespace pgconn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Group ab(std::vector<PrimePower> f) { return make_abelian(AbelianSpec(std::move(f))); }

std::vector<VertexSet> minimum_sets(const Group& g, std::size_t* kappa_out = nullptr) {
  const auto graph = build_power_graph(g);
  const auto k = vertex_connectivity(graph);
  if (kappa_out) *kappa_out = k;
  return all_minimum_cutsets(graph, generator_classes(g), k);
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome check_kappa_formula(const std::vector<std::uint64_t>& ns) {
  for (auto n : ns) {
    const auto pr = kappa_cyclic(n);
    const auto observed = vertex_connectivity(build_power_graph(make_cyclic(n)));
    if (!pr.applicable || *pr.kappa != observed)
      return fail("n=" + std::to_string(n) + " observed " + std::to_string(observed));
  }
  return {true, std::to_string(ns.size()) + " orders"};
}

Outcome criterion1() {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 2; n <= 120; ++n)
    if (factorize(n).prime_count() == 2) ns.push_back(n);
  return check_kappa_formula(ns);
}

Outcome criterion2() { return check_kappa_formula({30, 60, 90, 105}); }

Outcome criterion3() {
  for (auto [n, count] : {std::pair<std::uint64_t, std::size_t>{12, 1}, {18, 2}, {15, 1}}) {
    const auto pr = kappa_cyclic(n);
    const auto sets = minimum_sets(make_cyclic(n));
    if (sets.size() != count || pr.cutset_count != count)
      return fail("C" + std::to_string(n) + ": " + std::to_string(sets.size()) + " sets");
  }
  return {true, "C12:1 C18:2 C15:1"};
}

Outcome criterion4() {
  const auto g = ab({{2, 1}, {2, 1}, {3, 1}});
  const auto at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t x) {
    const std::vector<std::uint64_t> d{a, b, x};
    return static_cast<std::size_t>(g.from_digits(d).index);
  };
  std::vector<VertexSet> expected;
  const auto add = [&](std::vector<std::size_t> idx) { expected.push_back(from_indices(g.size(), idx)); };
  add({0, at(0, 0, 1), at(0, 0, 2)});   // <x>
  add({0, at(1, 0, 1), at(1, 0, 2)});   // 1, ax, ax^2
  add({0, at(0, 1, 1), at(0, 1, 2)});   // 1, bx, bx^2
  add({0, at(1, 1, 1), at(1, 1, 2)});   // 1, abx, abx^2
  std::size_t k = 0;
  const auto found = minimum_sets(g, &k);
  if (k != 3) return fail("kappa " + std::to_string(k));
  if (canonical_listing(found) != canonical_listing(expected))
    return fail(std::to_string(found.size()) + " minimum cut-sets, not the expected four");
  return {true, "kappa=3, four sets"};
}

Outcome criterion5() {
  for (std::uint64_t order : {8, 16}) {
    const auto g = make_generalized_quaternion(order);
    std::size_t involution = 0;
    for (auto x : g.elements())
      if (element_order(g, x) == 2) involution = x.index;
    std::size_t k = 0;
    const auto sets = minimum_sets(g, &k);
    const std::vector<std::size_t> expected{0, involution};
    if (k != 2 || sets.size() != 1 || to_indices(sets.front()) != expected)
      return fail("Q" + std::to_string(order));
  }
  for (std::uint64_t n = 3; n <= 10; ++n)
    if (vertex_connectivity(build_power_graph(make_dihedral(2 * n))) != 1)
      return fail("D" + std::to_string(2 * n));

  std::vector<Group> two_groups;
  for (const auto& s : generate_abelian_corpus(32))
    if (s.factors().front().prime == 2 && as_prime_power(s.order())) two_groups.push_back(make_abelian(s));
  for (auto& g : exceptional_corpus())
    if (g.size() <= 32 && as_prime_power(g.size()) && as_prime_power(g.size())->prime == 2)
      two_groups.push_back(std::move(g));
  for (const auto& g : two_groups) {
    if (g.size() < 3) continue;
    const auto prof = profile_group(g);
    const bool expected = prof.cyclic || prof.sylows.front().generalized_quaternion;
    if (proper_power_graph_connected(g) != expected) return fail("P*(" + g.name() + ")");
  }
  return {true, std::to_string(two_groups.size()) + " 2-groups checked"};
}

Outcome expect_match(const std::string& id, const Group& g, std::size_t kappa,
                     std::optional<VertexSet> unique = std::nullopt) {
  const auto r = verify_theorem(id, g);
  if (r.verdict != Verdict::match || r.observed_kappa != kappa)
    return fail(g.name() + ": " + to_string(r.verdict) + ", kappa " +
                (r.observed_kappa ? std::to_string(*r.observed_kappa) : "-"));
  if (unique) {
    if (!r.observed_cutsets || r.observed_cutsets->size() != 1 ||
        r.observed_cutsets->front() != to_indices(*unique))
      return fail(g.name() + ": minimum cut-set is not unique or not the expected one");
  }
  return {};
}

Outcome criterion6() {
  const auto g = ab({{3, 1}, {3, 1}, {5, 1}});
  if (auto o = expect_match("thm12", g, 5, sylow_product(g, {5})); !o.ok) return o;
  return {true, "kappa=5, unique Sylow 5-subgroup"};
}

Outcome criterion7() {
  const auto g1 = ab({{3, 1}, {3, 1}, {5, 1}, {5, 1}});
  if (auto o = expect_match("thm13", g1, 7); !o.ok) return o;
  const auto c = min_order_maximal_cyclic(g1);
  if (c.order != 15 || nongenerators(c).count() != 7) return fail("|C~| != 7");
  if (auto o = expect_match("thm13", ab({{2, 1}, {2, 1}, {3, 1}, {3, 1}}), 4); !o.ok) return o;
  return {true, "kappa=7 and kappa=4"};
}

Outcome criterion8() {
  if (auto o = expect_match("thm14", ab({{2, 1}, {2, 1}, {3, 1}, {5, 1}}), 12); !o.ok) return o;
  if (*kappa_cyclic(30).kappa != 12) return fail("kappa(C30) != 12");
  if (auto o = expect_match("thm14", ab({{2, 2}, {2, 2}, {3, 1}, {5, 1}}), 15); !o.ok) return o;
  const auto g = ab({{2, 1}, {3, 1}, {3, 1}, {5, 1}});
  if (auto o = expect_match("thm14", g, 10, sylow_product(g, {2, 5})); !o.ok) return o;
  return {true, "kappa=12, 15, 10 (unique P2*P5)"};
}

Outcome criterion9() {
  std::size_t checked = 0;
  for (const auto& g : {ab({{2, 1}, {2, 1}, {3, 1}, {5, 1}}), ab({{2, 2}, {2, 2}, {3, 1}, {5, 1}})}) {
    const auto graph = build_power_graph(g);
    for (const auto& m : maximal_cyclic_subgroups(g)) {
      const auto sh = gamma_shape(g, m);
      const auto gamma = gamma_set(g, m);
      const auto label = g.name() + " |M|=" + std::to_string(m.order);
      if (gamma.count() != gamma_cardinality(sh.m, sh.p2, sh.n2, sh.p3, sh.n3))
        return fail(label + ": size");
      if (!certify_minimal(graph, gamma).is_minimal) return fail(label + ": not minimal");
      const auto a = elements_of_exact_order(g, m, ipow(2, sh.m) * ipow(sh.p2, sh.n2));
      const auto comps = components_after_removal(graph, gamma);
      const auto rest = ~(gamma | a);
      const bool two = comps.size() == 2 &&
                       ((comps[0] == a && comps[1] == rest) || (comps[0] == rest && comps[1] == a));
      if (!two) return fail(label + ": " + std::to_string(comps.size()) + " components");
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " maximal cyclic subgroups"};
}

std::vector<Group> full_corpus() {
  std::vector<Group> corpus;
  for (const auto& s : generate_abelian_corpus(60)) corpus.push_back(make_abelian(s));
  for (auto& g : exceptional_corpus()) corpus.push_back(std::move(g));
  return corpus;
}

Outcome criterion10() {
  const auto corpus = full_corpus();
  const auto& suites = property_suite_ids();
  for (const auto& id : suites) {
    const auto s = run_property_suite(id, corpus);
    for (const auto& o : s.outcomes)
      if (o.status == PropertyOutcome::Status::fail) return fail(id + " on " + o.group_label + ": " + o.detail);
  }

  std::vector<PowerGraph> graphs;
  for (const auto& g : corpus) graphs.push_back(build_power_graph(g));
  std::mt19937_64 rng(2024);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    const auto& g = graphs[rng() % graphs.size()];
    const std::size_t n = g.vertex_count();
    if (g.is_complete()) continue;
    const std::size_t s = rng() % n, t = rng() % n;
    if (s == t || g.adjacent(s, t)) continue;
    const auto cut = min_vertex_cut_between(g, s, t);
    const auto paths = max_vertex_disjoint_paths(g, s, t);
    if (paths.size() != cut.kappa || cut.cut.count() != cut.kappa)
      return fail("Menger on " + g.group_label());
    for (const auto& c : components_after_removal(g, cut.cut))
      if (c.test(s) && c.test(t)) return fail("cut does not separate on " + g.group_label());
    ++pairs;
  }
  return {true, std::to_string(corpus.size()) + " groups, " + std::to_string(suites.size()) +
                    " suites, 1000 Menger pairs"};
}

void prime_tuples(const std::vector<std::uint64_t>& primes, std::size_t from, std::uint64_t prod,
                  std::vector<std::uint64_t>& cur, const std::function<void()>& visit) {
  for (std::size_t i = from; i < primes.size() && prod * primes[i] <= 1'000'000; ++i) {
    cur.push_back(primes[i]);
    visit();
    prime_tuples(primes, i + 1, prod * primes[i], cur, visit);
    cur.pop_back();
  }
}

Outcome criterion11() {
  const auto primes = primes_up_to(1'000'000);
  std::vector<std::uint64_t> cur;
  std::size_t tuples = 0;
  std::string bad;
  prime_tuples(primes, 0, 1, cur, [&] {
    ++tuples;
    const auto r = inequality_t_plus_1(cur);
    const bool eq_case = (cur.size() == 1 && cur[0] == 2) ||
                         (cur.size() == 2 && cur[0] == 2 && cur[1] == 3);
    if (bad.empty() && (!r.holds || r.equality != eq_case)) {
      std::ostringstream s;
      for (auto q : cur) s << q << ' ';
      bad = s.str();
    }
  });
  if (!bad.empty()) return fail("inequality at primes " + bad);

  std::mt19937_64 rng(99);
  const auto small = primes_up_to(100);
  std::size_t triples = 0;
  while (triples < 10'000) {
    const auto p = small[rng() % small.size()];
    const auto q = small[rng() % small.size()];
    if (p == q) continue;
    std::uint64_t q_pow = q;
    for (auto e = rng() % 4; e > 0 && q_pow * q <= 10'000; --e) q_pow *= q;
    const auto m = rng() % q_pow;
    const auto l = solve_congruence(p, m, q_pow);
    std::uint64_t scan = q_pow;
    for (std::uint64_t x = 0; x < q_pow; ++x)
      if ((p * x) % q_pow == m) {
        scan = x;
        break;
      }
    if (l != scan)
      return fail("solve_congruence(" + std::to_string(p) + "," + std::to_string(m) + "," +
                  std::to_string(q_pow) + ")");
    ++triples;
  }
  return {true, std::to_string(tuples) + " prime tuples, 10000 congruences"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cyclic two-prime formula, n <= 120", criterion1},
      {"cyclic three-prime formula, n in {30,60,90,105}", criterion2},
      {"minimum cut-set counts for C12, C18, C15", criterion3},
      {"(C2xC2)xC3 has exactly the four listed minimum cut-sets", criterion4},
      {"quaternion, dihedral and proper 2-group power graphs", criterion5},
      {"(C3xC3)xC5 single non-cyclic Sylow subgroup", criterion6},
      {"abelian groups with two prime divisors", criterion7},
      {"abelian groups with three prime divisors", criterion8},
      {"Gamma(M) size, minimality and components", criterion9},
      {"property suites and Menger consistency on the corpus", criterion10},
      {"number-theory inequality and congruence solver", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
