#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "pgconn/cyclic_structure.hpp"
#include "pgconn/errors.hpp"
#include "pgconn/group.hpp"

using namespace pgconn;

namespace {

std::map<std::uint64_t, std::size_t> order_histogram(const Group& g) {
  std::map<std::uint64_t, std::size_t> h;
  for (std::size_t i = 0; i < g.size(); ++i) ++h[oracle::order_by_multiplication(g, i)];
  return h;
}

void check_group_axioms(const Group& g) {
  const auto e = g.identity();
  for (auto x : g.elements()) {
    CHECK(g.multiply(e, x) == x);
    CHECK(g.multiply(x, e) == x);
    CHECK(g.multiply(x, g.inverse(x)) == e);
    CHECK(g.multiply(g.inverse(x), x) == e);
  }
}

std::vector<Group> sample_groups() {
  std::vector<Group> gs;
  gs.push_back(make_cyclic(12));
  gs.push_back(make_abelian(AbelianSpec({{2, 1}, {2, 1}, {3, 1}})));
  gs.push_back(make_abelian(AbelianSpec({{2, 2}, {2, 1}, {3, 1}})));
  gs.push_back(make_generalized_quaternion(8));
  gs.push_back(make_generalized_quaternion(16));
  gs.push_back(make_dihedral(12));
  return gs;
}

}  // namespace

TEST_CASE("make_cyclic") {
  const auto trivial = make_cyclic(1);
  CHECK(trivial.size() == 1);
  const auto c6 = make_cyclic(6);
  CHECK(element_order(c6, cyclic_residue(c6, 1)) == 6);
  const auto c12 = make_cyclic(12);
  CHECK(order_histogram(c12)[12] == 4);
  CHECK(c12.is_cyclic());
  CHECK_THROWS_AS(make_cyclic(0), InvalidArgument);
}

TEST_CASE("cyclic_residue is a homomorphism from Z_n") {
  for (std::uint64_t n : {6ULL, 12ULL, 30ULL, 49ULL}) {
    const auto g = make_cyclic(n);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        CHECK(g.multiply(cyclic_residue(g, i), cyclic_residue(g, j)) ==
              cyclic_residue(g, (i + j) % n));
  }
}

TEST_CASE("make_abelian") {
  const auto klein = make_abelian(AbelianSpec({{2, 1}, {2, 1}}));
  CHECK(klein.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(element_order(klein, oracle::el(i)) == 2);
  CHECK_FALSE(klein.is_cyclic());

  const auto g12 = make_abelian(AbelianSpec({{2, 1}, {2, 1}, {3, 1}}));
  CHECK(g12.size() == 12);
  CHECK(g12.name() == "C2xC2xC3");

  const auto g225 = make_abelian(AbelianSpec({{3, 1}, {3, 1}, {5, 2}}));
  CHECK(g225.size() == 225);
  std::set<std::uint64_t> orders;
  for (const auto& [o, c] : order_histogram(g225)) orders.insert(o);
  CHECK(orders == std::set<std::uint64_t>{1, 3, 5, 15, 25, 75});

  CHECK_THROWS_AS(AbelianSpec({{4, 1}}), InvalidArgument);
  CHECK_THROWS_AS(AbelianSpec({}), InvalidArgument);
  CHECK(AbelianSpec({{3, 1}, {2, 2}}) == AbelianSpec({{2, 2}, {3, 1}}));
}

TEST_CASE("digits round trip") {
  const auto g = make_abelian(AbelianSpec({{2, 2}, {2, 1}, {3, 1}}));
  for (auto x : g.elements()) {
    const auto d = g.digits(x);
    CHECK(g.from_digits(std::vector<std::uint64_t>(d.begin(), d.end())) == x);
  }
  CHECK_THROWS_AS(make_dihedral(6).digits(oracle::el(1)), InvalidArgument);
}

TEST_CASE("group axioms hold for every construction") {
  for (const auto& g : sample_groups()) {
    INFO(g.name());
    check_group_axioms(g);
  }
}

TEST_CASE("generalized quaternion groups") {
  const auto q8 = make_generalized_quaternion(8);
  auto h = order_histogram(q8);
  CHECK(h[2] == 1);
  CHECK(h[4] == 6);
  CHECK_FALSE(q8.is_abelian());

  const auto q16 = make_generalized_quaternion(16);
  h = order_histogram(q16);
  CHECK(h[2] == 1);
  // One maximal cyclic subgroup of order 8 and four of order 4, counted by brute force.
  std::set<std::vector<std::size_t>> subgroups;
  for (std::size_t x = 0; x < 16; ++x) subgroups.insert(to_indices(cyclic_closure(q16, oracle::el(x))));
  std::map<std::uint64_t, std::size_t> maximal_by_order;
  for (const auto& s : subgroups) {
    bool maximal = true;
    for (const auto& t : subgroups)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) maximal = false;
    if (maximal) ++maximal_by_order[s.size()];
  }
  CHECK(maximal_by_order == std::map<std::uint64_t, std::size_t>{{4, 4}, {8, 1}});
  const auto ms = maximal_cyclic_subgroups(q16);
  CHECK(ms.size() == 5);

  CHECK_THROWS_AS(make_generalized_quaternion(4), InvalidArgument);
  CHECK_THROWS_AS(make_generalized_quaternion(12), InvalidArgument);
}

TEST_CASE("dihedral groups") {
  const auto d6 = make_dihedral(6);
  std::size_t outside = 0;
  for (std::size_t x = 3; x < 6; ++x) outside += element_order(d6, oracle::el(x)) == 2;
  CHECK(outside == 3);
  CHECK(order_histogram(make_dihedral(8))[2] == 5);
  CHECK_THROWS_AS(make_dihedral(7), InvalidArgument);
  CHECK_THROWS_AS(make_dihedral(4), InvalidArgument);
}

TEST_CASE("element_order and cyclic_closure") {
  const auto g = make_abelian(AbelianSpec({{2, 2}, {3, 1}}));
  CHECK(element_order(g, g.identity()) == 1);
  const std::vector<std::uint64_t> d{1, 1};
  CHECK(element_order(g, g.from_digits(d)) == 12);

  const auto c8 = make_cyclic(8);
  const auto s = cyclic_closure(c8, cyclic_residue(c8, 2));
  CHECK(s.count() == 4);
  for (auto a : to_indices(s))
    for (auto b : to_indices(s)) CHECK(s.test(c8.multiply(oracle::el(a), oracle::el(b)).index));

  for (const auto& grp : sample_groups())
    for (auto x : grp.elements()) {
      const auto c = cyclic_closure(grp, x);
      CHECK(c.count() == element_order(grp, x));
      CHECK(grp.size() % c.count() == 0);
      CHECK(element_order(grp, x) == oracle::order_by_multiplication(grp, x.index));
    }
  CHECK(cyclic_closure(g, g.identity()).count() == 1);
}

TEST_CASE("generator classes partition the group") {
  const auto c6 = make_cyclic(6);
  CHECK(generator_class(c6, c6.identity()).count() == 1);
  CHECK(generator_class(c6, cyclic_residue(c6, 1)).count() == 2);

  const auto c12 = make_cyclic(12);
  CHECK(generator_classes(c12).size() == 6);  // one per divisor of 12

  for (const auto& g : sample_groups()) {
    INFO(g.name());
    const auto classes = generator_classes(g);
    ElementSet seen = g.empty_set();
    std::size_t total = 0;
    for (const auto& c : classes) {
      CHECK((seen & c).none());
      seen |= c;
      total += c.count();
      const auto x = oracle::el(c.find_first());
      CHECK(c.count() == oracle::phi_by_count(element_order(g, x)));
      for (auto y : to_indices(c)) CHECK(cyclic_closure(g, oracle::el(y)) == cyclic_closure(g, x));
    }
    CHECK(total == g.size());
    CHECK(seen.all());
  }
}

TEST_CASE("sylow_decomposition") {
  const auto c12 = make_cyclic(12);
  const auto s = sylow_decomposition(c12);
  REQUIRE(s.primes.size() == 2);
  CHECK(s.subgroups[s.slot_of(2)].count() == 4);
  CHECK(s.subgroups[s.slot_of(3)].count() == 3);
  CHECK_THROWS_AS(s.slot_of(5), InvalidArgument);

  const auto g = make_abelian(AbelianSpec({{2, 1}, {2, 1}, {3, 1}}));
  const auto sg = sylow_decomposition(g);
  const auto& p2 = sg.subgroups[sg.slot_of(2)];
  CHECK(p2.count() == 4);
  for (auto x : to_indices(p2))
    if (x != 0) CHECK(element_order(g, oracle::el(x)) == 2);
  CHECK(sg.subgroups[sg.slot_of(3)].count() == 3);

  for (const auto& grp : {g, make_generalized_quaternion(16), make_abelian(AbelianSpec({{2, 2}, {3, 1}, {5, 1}}))}) {
    const auto d = sylow_decomposition(grp);
    for (auto x : grp.elements()) {
      auto acc = grp.identity();
      for (std::size_t slot = 0; slot < d.primes.size(); ++slot) {
        const auto y = d.project(x, slot);
        CHECK(d.subgroups[slot].test(y.index));
        acc = grp.multiply(acc, y);
      }
      CHECK(acc == x);
    }
  }

  CHECK_THROWS_AS(sylow_decomposition(make_dihedral(6)), UnsupportedStructure);
  // D8 is a 2-group, hence nilpotent.
  CHECK_NOTHROW(sylow_decomposition(make_dihedral(8)));
}

TEST_CASE("from_table validation") {
  // Z_3 written out by hand.
  const std::vector<std::uint32_t> z3{0, 1, 2, 1, 2, 0, 2, 0, 1};
  const auto g = Group::from_table("Z3", 3, z3);
  CHECK(g.is_cyclic());
  CHECK_THROWS_AS(Group::from_table("bad", 3, {0, 1, 2, 1, 1, 0, 2, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Group::from_table("bad", 3, {1, 0, 2, 0, 1, 2, 2, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(Group::from_table("bad", 2, {0, 1, 1}), InvalidArgument);
  // A latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<std::uint32_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                        3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(Group::from_table("loop", 5, loop), InvalidArgument);
}
