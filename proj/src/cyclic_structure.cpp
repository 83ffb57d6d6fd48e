#include "pgconn/cyclic_structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pgconn/errors.hpp"
#include "pgconn/predictions.hpp"

namespace pgconn {

namespace {

Element elem(std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; }

// alpha ∈ <y>, given the generator class of <alpha>: <y> has a unique
// subgroup of order o(alpha), generated by y^(o(y)/o(alpha)).
bool in_closure(const Group& g, Element alpha, const ElementSet& alpha_generators,
                Element y) {
  const auto oa = g.order(alpha), oy = g.order(y);
  if (oy % oa != 0) return false;
  return alpha_generators.test(g.power(y, static_cast<std::int64_t>(oy / oa)).index);
}

// No element of `within` outside <x> has x as a power.
bool is_maximal_within(const Group& g, Element x, const ElementSet& x_generators,
                       const ElementSet& within) {
  const auto ox = g.order(x);
  for (auto h = within.find_first(); h != ElementSet::npos; h = within.find_next(h)) {
    const auto oh = g.order(elem(h));
    if (oh > ox && oh % ox == 0 && in_closure(g, x, x_generators, elem(h))) return false;
  }
  return true;
}

void check_divides(const CyclicSubgroup& m, std::uint64_t d) {
  if (d == 0 || m.order % d != 0)
    throw InvalidArgument("order " + std::to_string(d) + " does not divide |M| = " +
                          std::to_string(m.order));
}

ElementSet elements_with_prime_support(const Group& g,
                                       const std::vector<std::uint64_t>& primes) {
  ElementSet s = g.empty_set();
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::uint64_t o = g.order(elem(x));
    for (auto p : primes)
      while (o % p == 0) o /= p;
    if (o == 1) s.set(x);
  }
  return s;
}

}  // namespace

CyclicSubgroup cyclic_subgroup(const Group& g, Element x) {
  CyclicSubgroup c;
  c.elements = cyclic_closure(g, x);
  c.generators = generator_class(g, x);
  c.generator = elem(c.generators.find_first());
  c.order = g.order(x);
  c.is_maximal = is_maximal_within(g, x, c.generators, ~g.empty_set());
  return c;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g) {
  std::vector<CyclicSubgroup> out;
  ElementSet seen = g.empty_set();
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen.test(x)) continue;
    auto c = cyclic_subgroup(g, elem(x));
    seen |= c.generators;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g) {
  auto all = cyclic_subgroups(g);
  std::erase_if(all, [](const CyclicSubgroup& c) { return !c.is_maximal; });
  return all;
}

ElementSet nongenerators(const CyclicSubgroup& m) { return m.elements - m.generators; }

ElementSet external_overlap(const Group& g, const CyclicSubgroup& m) {
  if (g.is_cyclic()) throw InvalidArgument("external_overlap: group is cyclic");
  ElementSet out = g.empty_set();
  const ElementSet outside = ~m.elements;
  for (auto y = outside.find_first(); y != ElementSet::npos; y = outside.find_next(y))
    out |= cyclic_closure(g, elem(y)) & m.elements;
  return out;
}

ElementSet sylow_product(const Group& g, const std::vector<std::uint64_t>& primes) {
  const auto d = sylow_decomposition(g);
  for (auto p : primes) (void)d.slot_of(p);
  return elements_with_prime_support(g, primes);
}

ElementSet sylow_complement_product(const Group& g, std::uint64_t prime) {
  const auto d = sylow_decomposition(g);
  const auto slot = d.slot_of(prime);
  std::vector<std::uint64_t> others;
  for (std::size_t i = 0; i < d.primes.size(); ++i)
    if (i != slot) others.push_back(d.primes[i].prime);
  auto q = elements_with_prime_support(g, others);
  if (q.count() != g.size() / d.primes[slot].value())
    throw std::logic_error("sylow_complement_product: unexpected subgroup size");
  return q;
}

ElementSet elements_of_exact_order(const Group& g, const CyclicSubgroup& m,
                                   std::uint64_t d) {
  check_divides(m, d);
  ElementSet s = g.empty_set();
  for (auto x = m.elements.find_first(); x != ElementSet::npos; x = m.elements.find_next(x))
    if (g.order(elem(x)) == d) s.set(x);
  return s;
}

ElementSet elements_of_dividing_order(const Group& g, const CyclicSubgroup& m,
                                      std::uint64_t d) {
  check_divides(m, d);
  ElementSet s = g.empty_set();
  for (auto x = m.elements.find_first(); x != ElementSet::npos; x = m.elements.find_next(x))
    if (d % g.order(elem(x)) == 0) s.set(x);
  return s;
}

GammaShape gamma_shape(const Group& g, const CyclicSubgroup& m) {
  const auto prof = profile_group(g);
  if (!prof.abelian || prof.sylows.size() != 3)
    throw UnsupportedStructure("gamma_set: need an abelian group with three prime divisors");
  const auto& s = prof.sylows;
  if (s[0].prime != 2 || s[0].cyclic || !s[1].cyclic || !s[2].cyclic)
    throw UnsupportedStructure(
        "gamma_set: need a non-cyclic Sylow 2-subgroup and cyclic odd Sylow subgroups");
  if (!m.is_maximal) throw UnsupportedStructure("gamma_set: M is not maximal cyclic");
  GammaShape shape{0, s[1].prime, s[1].exponent, s[2].prime, s[2].exponent};
  std::uint64_t rest = m.order;
  while (rest % 2 == 0) {
    rest /= 2;
    ++shape.m;
  }
  if (shape.m == 0 || rest != ipow(shape.p2, shape.n2) * ipow(shape.p3, shape.n3))
    throw UnsupportedStructure("gamma_set: |M| does not have the form 2^m p^n2 q^n3");
  return shape;
}

ElementSet gamma_set(const Group& g, const CyclicSubgroup& m) {
  const auto sh = gamma_shape(g, m);
  const std::uint64_t two_m = ipow(2, sh.m);
  const std::uint64_t p2n = ipow(sh.p2, sh.n2);
  ElementSet out = g.empty_set();
  for (std::uint32_t j = 1; j <= sh.n3; ++j)
    out |= elements_of_exact_order(g, m, two_m * p2n * ipow(sh.p3, j));
  out |= elements_of_dividing_order(g, m, two_m * (p2n / sh.p2));
  out |= elements_of_dividing_order(g, m, (two_m / 2) * p2n);
  const auto expected = gamma_cardinality(sh.m, sh.p2, sh.n2, sh.p3, sh.n3);
  if (out.count() != expected)
    throw std::logic_error("gamma_set: built " + std::to_string(out.count()) +
                           " elements but the closed form gives " +
                           std::to_string(expected));
  return out;
}

CyclicSubgroup min_order_maximal_cyclic(const Group& g) {
  auto all = maximal_cyclic_subgroups(g);
  // Already ordered by generator; stable pick of the least order.
  return *std::min_element(all.begin(), all.end(),
                           [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
                             return a.order < b.order;
                           });
}

namespace {

Element exhaustive_witness(const Group& g, const CyclicSubgroup& m, Element alpha) {
  const auto alpha_gens = generator_class(g, alpha);
  const ElementSet outside = ~m.elements;
  for (auto y = outside.find_first(); y != ElementSet::npos; y = outside.find_next(y))
    if (in_closure(g, alpha, alpha_gens, elem(y))) return elem(y);
  throw WitnessNotFound("no element outside M has alpha as a power");
}

// Builds beta from M = <w_1>...<w_r> (w_i the Sylow components of M's
// generator) and order-p_i elements u_i of P_i lying outside M.
Element constructive_witness(const Group& g, const CyclicSubgroup& m, Element alpha) {
  if (!g.is_abelian())
    throw UnsupportedStructure("constructive witness needs an abelian group");
  const ElementSet outside = ~m.elements;
  if (alpha == g.identity()) return elem(outside.find_first());

  const auto d = sylow_decomposition(g);
  const std::size_t r = d.primes.size();
  std::vector<Element> w(r);
  std::vector<std::uint64_t> wo(r), mexp(r);
  for (std::size_t i = 0; i < r; ++i) {
    w[i] = d.project(m.generator, i);
    wo[i] = g.order(w[i]);
    const Element target = d.project(alpha, i);
    Element cur = g.identity();
    std::uint64_t k = 0;
    while (cur != target) {
      cur = g.multiply(cur, w[i]);
      if (++k >= wo[i]) throw std::logic_error("alpha component outside M");
    }
    mexp[i] = k;
  }
  const auto outside_order_p = [&](std::size_t i) -> std::optional<Element> {
    const auto& sub = d.subgroups[i];
    for (auto x = sub.find_first(); x != ElementSet::npos; x = sub.find_next(x))
      if (g.order(elem(x)) == d.primes[i].prime && !m.elements.test(x)) return elem(x);
    return std::nullopt;
  };

  Element beta = g.identity();
  bool built = false;
  for (std::size_t j = 0; j < r && !built; ++j) {
    if (mexp[j] != 0) continue;
    const auto u = outside_order_p(j);
    if (!u) throw WitnessNotFound("Sylow " + std::to_string(d.primes[j].prime) +
                                  "-subgroup is cyclic; no witness construction");
    beta = g.multiply(*u, alpha);
    built = true;
  }
  for (std::size_t i = 0; i < r && !built; ++i) {
    const auto p = d.primes[i].prime;
    if (mexp[i] % p != 0) continue;
    const auto u = outside_order_p(i);
    if (!u) continue;
    beta = g.multiply(*u, g.power(w[i], static_cast<std::int64_t>(mexp[i] / p)));
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      const auto k = solve_congruence(p, mexp[j], wo[j]);
      beta = g.multiply(beta, g.power(w[j], static_cast<std::int64_t>(k)));
    }
    built = true;
  }
  if (!built)
    throw WitnessNotFound("alpha generates M or every usable Sylow subgroup is cyclic");
  if (m.elements.test(beta.index) ||
      !in_closure(g, alpha, generator_class(g, alpha), beta))
    throw std::logic_error("constructive witness failed verification");
  return beta;
}

}  // namespace

Element external_generator_witness(const Group& g, const CyclicSubgroup& m,
                                   Element alpha, WitnessStrategy strategy) {
  if (alpha.index >= g.size() || !m.elements.test(alpha.index))
    throw InvalidArgument("external_generator_witness: alpha is not in M");
  return strategy == WitnessStrategy::exhaustive ? exhaustive_witness(g, m, alpha)
                                                 : constructive_witness(g, m, alpha);
}

std::size_t GroupProfile::noncyclic_sylow_count() const {
  return static_cast<std::size_t>(
      std::count_if(sylows.begin(), sylows.end(), [](const SylowTraits& s) { return !s.cyclic; }));
}

bool GroupProfile::all_sylows_noncyclic() const {
  return !sylows.empty() && noncyclic_sylow_count() == sylows.size();
}

GroupProfile profile_group(const Group& g) {
  GroupProfile p;
  if (g.size() > 1) p.order = factorize(g.size());
  p.abelian = g.is_abelian();
  p.cyclic = g.is_cyclic();
  p.min_maximal_cyclic_order = min_order_maximal_cyclic(g).order;

  SylowDecomposition d;
  try {
    d = sylow_decomposition(g);
    p.nilpotent = true;
  } catch (const UnsupportedStructure&) {
    p.nilpotent = false;
    return p;
  }
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    const auto& sub = d.subgroups[i];
    SylowTraits t;
    t.prime = d.primes[i].prime;
    t.exponent = d.primes[i].exponent;
    const auto size = d.primes[i].value();
    std::size_t involutions = 0;
    bool exponent_p = true, commutative = true;
    t.min_maximal_cyclic_order = size;
    for (auto x = sub.find_first(); x != ElementSet::npos; x = sub.find_next(x)) {
      const auto o = g.order(elem(x));
      if (o == size) t.cyclic = true;
      if (o == 2) ++involutions;
      if (o != 1 && o != t.prime) exponent_p = false;
      for (auto y = sub.find_next(x); commutative && y != ElementSet::npos; y = sub.find_next(y))
        if (g.multiply(elem(x), elem(y)) != g.multiply(elem(y), elem(x))) commutative = false;
      if (o > 1 && is_maximal_within(g, elem(x), generator_class(g, elem(x)), sub))
        t.min_maximal_cyclic_order = std::min(t.min_maximal_cyclic_order, o);
    }
    t.elementary_abelian = exponent_p && commutative;
    t.generalized_quaternion = t.prime == 2 && !t.cyclic && involutions == 1;
    p.sylows.push_back(t);
  }
  return p;
}

}  // namespace pgconn
