#include "pgconn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "pgconn/cyclic_structure.hpp"
#include "pgconn/errors.hpp"

namespace pgconn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::skipped_hypothesis: return "skipped-hypothesis";
    case Verdict::skipped_resource: return "skipped-resource";
  }
  return "unknown";
}

std::vector<IndexSet> canonical_listing(const std::vector<VertexSet>& sets) {
  std::vector<IndexSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(to_indices(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Element elem(std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; }

// Partitions of n into parts, descending lexicographic order.
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

std::vector<AbelianSpec> generate_abelian_corpus(std::uint64_t max_order) {
  if (max_order < 2) throw InvalidArgument("generate_abelian_corpus: max_order must be >= 2");
  std::vector<AbelianSpec> out;
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    const auto f = factorize(n);
    std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
    for (const auto& pp : f.pairs) per_prime.push_back(partitions(pp.exponent));
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
      std::vector<PrimePower> factors;
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (auto e : per_prime[i][pick[i]]) factors.push_back({f.pairs[i].prime, e});
      out.emplace_back(std::move(factors));
      std::size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == per_prime[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<Group> exceptional_corpus() {
  std::vector<Group> out;
  for (std::uint64_t order : {8, 16, 32}) out.push_back(make_generalized_quaternion(order));
  for (std::uint64_t order = 6; order <= 20; order += 2) out.push_back(make_dihedral(order));
  return out;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"thm11", "thm12", "thm13", "thm14", "props"};
  return ids;
}

namespace {

void push(Prediction& p, std::string cond, bool holds) {
  p.trace.push_back({std::move(cond), holds});
}

Prediction merge(Prediction structural, Prediction formula) {
  for (auto& h : formula.trace) {
    const bool seen = std::any_of(structural.trace.begin(), structural.trace.end(),
                                  [&](const HypothesisCheck& s) { return s.condition == h.condition; });
    if (!seen) structural.trace.push_back(std::move(h));
  }
  formula.trace = std::move(structural.trace);
  return formula;
}

SylowStructure structure_of(const GroupProfile& prof) {
  return {prof.sylows, prof.min_maximal_cyclic_order};
}

Prediction predict(const std::string& id, const Group& g, const GroupProfile& prof) {
  Prediction p;
  p.cutset_description = "no prediction";
  const std::size_t r = prof.order.prime_count();
  if (id == "thm11") {
    p.case_tag = "cyclic";
    push(p, "G cyclic", prof.cyclic);
    push(p, "|G| >= 2", g.size() >= 2);
    if (!prof.cyclic || g.size() < 2) return p;
    return merge(std::move(p), kappa_cyclic(g.size()));
  }
  if (id == "thm12") {
    p.case_tag = "nilpotent:single-noncyclic-sylow";
    push(p, "G nilpotent", prof.nilpotent);
    if (!prof.nilpotent) return p;
    push(p, "G non-cyclic", !prof.cyclic);
    push(p, "exactly one non-cyclic Sylow subgroup", prof.noncyclic_sylow_count() == 1);
    if (prof.cyclic || prof.noncyclic_sylow_count() != 1) return p;
    const auto it = std::find_if(prof.sylows.begin(), prof.sylows.end(),
                                 [](const SylowTraits& s) { return !s.cyclic; });
    const bool excluded = it == prof.sylows.begin() && it->prime == 2 &&
                          it->generalized_quaternion;
    push(p, "P_k not generalized quaternion when (k, p1) = (1, 2)", !excluded);
    if (excluded) {
      p.case_tag = "nilpotent:generalized-quaternion-excluded";
      return p;
    }
    push(p, "r >= 2", r >= 2);
    if (r < 2) return p;
    return merge(std::move(p), kappa_single_noncyclic_sylow(prof.order, it->prime));
  }
  if (id == "thm13" || id == "thm14") {
    const std::size_t want = id == "thm13" ? 2 : 3;
    p.case_tag = id == "thm13" ? "abelian2" : "abelian3";
    push(p, "G abelian", prof.abelian);
    push(p, "G non-cyclic", !prof.cyclic);
    push(p, "r = " + std::to_string(want), r == want);
    if (!prof.abelian || prof.cyclic || r != want) return p;
    if (want == 2) return merge(std::move(p), kappa_abelian_two_primes(prof.order, structure_of(prof)));
    push(p, "exactly one non-cyclic Sylow subgroup", prof.noncyclic_sylow_count() == 1);
    if (prof.noncyclic_sylow_count() != 1) return p;
    return merge(std::move(p), kappa_abelian_three_primes(prof.order, structure_of(prof)));
  }
  throw InvalidArgument("unknown theorem id '" + id + "'");
}

bool contains_set(const std::vector<VertexSet>& sets, const VertexSet& x) {
  return std::find(sets.begin(), sets.end(), x) != sets.end();
}

VerificationReport verify_properties(const Group& g, const ResourceCaps& caps) {
  VerificationReport rep;
  rep.group_label = g.name();
  rep.theorem_id = "props";
  rep.predicted.case_tag = "properties";
  rep.predicted.cutset_description = "no prediction";
  bool failed = false, resource = false;
  for (const auto& suite : property_suite_ids()) {
    const auto summary = run_property_suite(suite, {g}, caps);
    const auto& o = summary.outcomes.front();
    using S = PropertyOutcome::Status;
    if (o.status == S::skipped) continue;
    push(rep.predicted, suite, o.status == S::pass);
    if (o.status == S::fail) {
      failed = true;
      rep.note += (rep.note.empty() ? "" : "; ") + suite + ": " + o.detail;
    }
    if (o.status == S::skipped_resource) resource = true;
  }
  rep.verdict = failed ? Verdict::mismatch
                       : resource ? Verdict::skipped_resource : Verdict::match;
  return rep;
}

}  // namespace

VerificationReport verify_theorem(const std::string& id, const Group& g,
                                  const ResourceCaps& caps) {
  if (id == "props") return verify_properties(g, caps);
  VerificationReport rep;
  rep.group_label = g.name();
  rep.theorem_id = id;
  const auto prof = profile_group(g);
  rep.predicted = predict(id, g, prof);
  const auto& pr = rep.predicted;

  if (g.size() < 2 || g.size() > caps.max_vertices) {
    rep.verdict = pr.applicable && g.size() >= 2 ? Verdict::skipped_resource
                                                 : Verdict::skipped_hypothesis;
    if (g.size() > caps.max_vertices)
      rep.note = "group larger than the " + std::to_string(caps.max_vertices) + "-vertex cap";
    return rep;
  }

  const auto graph = build_power_graph(g);
  rep.observed_kappa = vertex_connectivity(graph);
  if (!pr.applicable) {
    rep.verdict = Verdict::skipped_hypothesis;
    rep.note = "hypotheses not met; observed kappa reported as data";
    return rep;
  }
  if (*pr.kappa != *rep.observed_kappa) {
    rep.verdict = Verdict::mismatch;
    rep.note = "kappa differs from the closed form";
    return rep;
  }
  if (pr.claim == CutsetClaim::unknown) {
    rep.verdict = Verdict::match;
    return rep;
  }
  if (pr.claim == CutsetClaim::none) {
    rep.observed_cutsets.emplace();
    rep.verdict = graph.is_complete() ? Verdict::match : Verdict::mismatch;
    if (rep.verdict == Verdict::mismatch) rep.note = "graph is not complete";
    return rep;
  }

  std::vector<VertexSet> found;
  try {
    found = all_minimum_cutsets(graph, generator_classes(g), *rep.observed_kappa,
                                caps.max_combinations);
  } catch (const CutsetLimit& e) {
    rep.observed_cutsets = canonical_listing(e.partial());
    rep.cutsets_partial = true;
    rep.verdict = Verdict::skipped_resource;
    rep.note = e.what();
    return rep;
  }
  rep.observed_cutsets = canonical_listing(found);

  std::optional<VertexSet> expected;
  if (!pr.cutset_primes.empty()) expected = sylow_product(g, pr.cutset_primes);
  bool ok = true;
  switch (pr.claim) {
    case CutsetClaim::unique:
      ok = found.size() == 1 && (!expected || found.front() == *expected);
      break;
    case CutsetClaim::count:
      ok = found.size() == pr.cutset_count;
      break;
    case CutsetClaim::possibly_many:
      ok = expected && contains_set(found, *expected);
      break;
    default:
      break;
  }
  rep.verdict = ok ? Verdict::match : Verdict::mismatch;
  if (!ok) rep.note = "minimum cut-sets differ from the prediction";
  return rep;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<VerificationReport> verify_corpus(const std::string& id,
                                              const std::vector<Group>& corpus,
                                              const ResourceCaps& caps, unsigned jobs) {
  if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
    throw InvalidArgument("unknown theorem id '" + id + "'");
  std::vector<VerificationReport> out(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = verify_theorem(id, corpus[i], caps);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---------------------------------------------------------------------------
// Property suites

std::size_t PropertySummary::count(PropertyOutcome::Status s) const {
  return static_cast<std::size_t>(std::count_if(
      outcomes.begin(), outcomes.end(), [s](const PropertyOutcome& o) { return o.status == s; }));
}

namespace {

using Status = PropertyOutcome::Status;

struct Check {
  Status status = Status::pass;
  std::string detail;
};

Check skip(std::string why = {}) { return {Status::skipped, std::move(why)}; }
Check fail(std::string why) { return {Status::fail, std::move(why)}; }
Check pass() { return {}; }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (auto i : to_indices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string m_text(const CyclicSubgroup& m) {
  return "M = <" + std::to_string(m.generator.index) + "> of order " + std::to_string(m.order);
}

struct Context {
  const Group& g;
  const ResourceCaps& caps;
  GroupProfile prof;
  std::optional<PowerGraph> graph_;
  std::optional<std::vector<CyclicSubgroup>> maximal_;
  std::optional<std::size_t> kappa_;

  Context(const Group& grp, const ResourceCaps& c) : g(grp), caps(c), prof(profile_group(grp)) {}

  const PowerGraph& graph() {
    if (!graph_) graph_ = build_power_graph(g);
    return *graph_;
  }
  const std::vector<CyclicSubgroup>& maximal() {
    if (!maximal_) maximal_ = maximal_cyclic_subgroups(g);
    return *maximal_;
  }
  std::size_t kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(graph());
    return *kappa_;
  }
  std::size_t r() const { return prof.order.prime_count(); }
};

Check mtilde_cutset(Context& c) {
  if (c.prof.cyclic) return skip("cyclic");
  for (const auto& m : c.maximal()) {
    const auto mt = nongenerators(m);
    if (!is_cut_set(c.graph(), mt)) return fail(m_text(m) + ": M~ is not a cut-set");
    const Separation sep{~m.elements, m.elements - mt};
    if (!is_separation(c.graph(), mt, sep))
      return fail(m_text(m) + ": (G\\M, M\\M~) is not a separation");
  }
  return pass();
}

Check mbar_cutset(Context& c) {
  if (c.prof.cyclic) return skip("cyclic");
  for (const auto& m : c.maximal()) {
    const auto mb = external_overlap(c.g, m);
    if (!mb.is_subset_of(nongenerators(m))) return fail(m_text(m) + ": M- not inside M~");
    if (!is_cut_set(c.graph(), mb)) return fail(m_text(m) + ": M- is not a cut-set");
  }
  return pass();
}

Check mbar_equals_mtilde(Context& c) {
  if (c.prof.cyclic || !c.prof.abelian) return skip("needs a non-cyclic abelian group");
  const bool all = c.prof.all_sylows_noncyclic();
  for (const auto& m : c.maximal()) {
    const bool equal = external_overlap(c.g, m) == nongenerators(m);
    if (equal != all)
      return fail(m_text(m) + ": M- = M~ is " + (equal ? "true" : "false") +
                  " but all Sylow subgroups non-cyclic is " + (all ? "true" : "false"));
  }
  return pass();
}

Check mtilde_minimal(Context& c) {
  if (c.prof.cyclic || !c.prof.abelian || c.r() < 2) return skip("needs a non-cyclic abelian group, r >= 2");
  const bool all = c.prof.all_sylows_noncyclic();
  for (const auto& m : c.maximal()) {
    const bool minimal = is_minimal_cut_set(c.graph(), nongenerators(m));
    if (minimal != all)
      return fail(m_text(m) + ": M~ minimal is " + (minimal ? "true" : "false") +
                  " but all Sylow subgroups non-cyclic is " + (all ? "true" : "false"));
  }
  return pass();
}

Check mbar_minimal(Context& c) {
  if (!c.prof.nilpotent || c.prof.noncyclic_sylow_count() < 2)
    return skip("needs a nilpotent group with two non-cyclic Sylow subgroups");
  for (const auto& m : c.maximal()) {
    if (!is_minimal_cut_set(c.graph(), external_overlap(c.g, m)))
      return fail(m_text(m) + ": M- is not a minimal cut-set");
    const auto comps = components_after_removal(c.graph(), nongenerators(m));
    const VertexSet outside = ~m.elements, gens = m.generators;
    if (comps.size() != 2 || !(contains_set(comps, outside) && contains_set(comps, gens)))
      return fail(m_text(m) + ": G\\M~ does not split into G\\M and M\\M~");
  }
  return pass();
}

Check size_compare(Context& c) {
  if (c.prof.cyclic || !c.prof.nilpotent) return skip("needs a non-cyclic nilpotent group");
  const auto cmin = min_order_maximal_cyclic(c.g);
  const auto ct = nongenerators(cmin).count();
  for (const auto& m : c.maximal())
    if (nongenerators(m).count() < ct)
      return fail(m_text(m) + ": |M~| < |C~| = " + std::to_string(ct));
  return pass();
}

// Maximal cyclic subgroups of the subgroup `sub`, counted via their generators.
std::size_t count_maximal_within(const Group& g, const ElementSet& sub, ElementSet* maximal_elems) {
  std::size_t classes = 0;
  ElementSet seen = g.empty_set();
  for (auto x = sub.find_first(); x != ElementSet::npos; x = sub.find_next(x)) {
    if (seen.test(x)) continue;
    const auto cls = generator_class(g, elem(x));
    seen |= cls;
    bool maximal = true;
    for (auto h = sub.find_first(); maximal && h != ElementSet::npos; h = sub.find_next(h))
      if (g.order(elem(h)) > g.order(elem(x)) && cyclic_closure(g, elem(h)).test(x)) maximal = false;
    if (maximal) {
      ++classes;
      if (maximal_elems) *maximal_elems |= cls;
    }
  }
  return classes;
}

Check max_cyclic_product(Context& c) {
  if (!c.prof.nilpotent || c.g.size() < 2) return skip("needs a nilpotent group");
  const auto d = sylow_decomposition(c.g);
  std::size_t expected = 1;
  std::vector<ElementSet> maximal_in(d.primes.size(), c.g.empty_set());
  for (std::size_t i = 0; i < d.primes.size(); ++i)
    expected *= count_maximal_within(c.g, d.subgroups[i], &maximal_in[i]);
  if (c.maximal().size() != expected)
    return fail(std::to_string(c.maximal().size()) + " maximal cyclic subgroups, product of Sylow counts is " +
                std::to_string(expected));
  for (const auto& m : c.maximal()) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < d.primes.size(); ++i) {
      const auto xi = d.project(m.generator, i);
      if (!maximal_in[i].test(xi.index))
        return fail(m_text(m) + ": Sylow component is not maximal cyclic");
      order *= c.g.order(xi);
    }
    if (order != m.order) return fail(m_text(m) + ": |M| differs from the product of components");
  }
  return pass();
}

Check witness(Context& c) {
  if (c.prof.cyclic || !c.prof.abelian) return skip("needs a non-cyclic abelian group");
  const bool all = c.prof.all_sylows_noncyclic();
  for (const auto& m : c.maximal()) {
    const auto mt = nongenerators(m);
    bool every = true;
    for (auto a = mt.find_first(); a != ElementSet::npos; a = mt.find_next(a)) {
      try {
        const auto beta = external_generator_witness(c.g, m, elem(a), WitnessStrategy::exhaustive);
        if (m.elements.test(beta.index) || !cyclic_closure(c.g, beta).test(a))
          return fail(m_text(m) + ": exhaustive witness invalid");
      } catch (const WitnessNotFound&) {
        every = false;
        continue;
      }
      if (all) {
        try {
          external_generator_witness(c.g, m, elem(a), WitnessStrategy::constructive);
        } catch (const std::exception& e) {
          return fail(m_text(m) + ": constructive witness for " + std::to_string(a) + " failed: " + e.what());
        }
      }
    }
    if (every != all)
      return fail(m_text(m) + ": witnesses exist for all of M~ is " + (every ? "true" : "false") +
                  " but all Sylow subgroups non-cyclic is " + (all ? "true" : "false"));
  }
  return pass();
}

std::optional<std::vector<VertexSet>> minimum_cutsets(Context& c, Check& out) {
  try {
    return all_minimum_cutsets(c.graph(), generator_classes(c.g), c.kappa(), c.caps.max_combinations);
  } catch (const CutsetLimit& e) {
    out = {Status::skipped_resource, e.what()};
    return std::nullopt;
  }
}

Check minimum_avoids_generators(Context& c) {
  if (!c.prof.abelian || c.r() != 2 || c.prof.noncyclic_sylow_count() != 2 ||
      c.prof.sylows[0].min_maximal_cyclic_order != 2)
    return skip("needs both Sylow subgroups non-cyclic and a maximal cyclic subgroup of order 2 in P1");
  Check out;
  const auto sets = minimum_cutsets(c, out);
  if (!sets) return out;
  for (const auto& x : *sets)
    for (const auto& m : c.maximal())
      if (x.intersects(m.generators))
        return fail("minimum cut-set " + set_text(x) + " contains a generator of " + m_text(m));
  return pass();
}

Check p2_minimum(Context& c) {
  if (!c.prof.abelian || c.r() != 2 || c.prof.sylows[0].prime != 2 || c.prof.sylows[0].cyclic ||
      !c.prof.sylows[1].cyclic)
    return skip("needs p1 = 2, P1 non-cyclic, P2 cyclic");
  const auto p2 = sylow_product(c.g, {c.prof.sylows[1].prime});
  if (!is_cut_set(c.graph(), p2)) return fail("P2 is not a cut-set");
  if (p2.count() != c.kappa())
    return fail("|P2| = " + std::to_string(p2.count()) + " but kappa = " + std::to_string(c.kappa()));
  return pass();
}

Check class_union(Context& c) {
  if (c.g.size() > 40) return skip("more than 40 vertices");
  if (c.graph().is_complete()) return skip("complete graph");
  std::vector<VertexSet> minimal;
  try {
    minimal = enumerate_minimal_cutsets(c.graph());
  } catch (const CutsetLimit& e) {
    return {Status::skipped_resource, e.what()};
  }
  const auto classes = generator_classes(c.g);
  std::vector<VertexSet> smallest;
  for (const auto& x : minimal) {
    if (!x.test(0)) return fail(set_text(x) + " misses the identity");
    if (!is_minimal_cut_set(c.graph(), x)) return fail(set_text(x) + " is not minimal");
    for (const auto& cls : classes)
      if (cls.intersects(x) && !cls.is_subset_of(x))
        return fail(set_text(x) + " splits the class " + set_text(cls));
    if (x.count() == c.kappa()) smallest.push_back(x);
  }
  Check out;
  const auto quotient = minimum_cutsets(c, out);
  if (!quotient) return out;
  if (canonical_listing(smallest) != canonical_listing(*quotient))
    return fail("class-quotient search and separator enumeration disagree on minimum cut-sets");
  return pass();
}

Check proper_pgroup(Context& c) {
  if (c.g.size() < 3 || !c.prof.is_p_group()) return skip("needs a p-group of order >= 3");
  const bool connected = proper_power_graph_connected(c.g);
  const bool expected = c.prof.cyclic || c.prof.sylows.front().generalized_quaternion;
  if (connected != expected)
    return fail(std::string("proper power graph connected is ") + (connected ? "true" : "false"));
  return pass();
}

Check sylow_complement_minimal(Context& c) {
  if (!c.prof.nilpotent || c.r() < 2) return skip("needs a nilpotent group, r >= 2");
  bool any = false;
  for (const auto& s : c.prof.sylows) {
    if (s.cyclic || s.generalized_quaternion) continue;
    any = true;
    const auto q = sylow_complement_product(c.g, s.prime);
    if (!is_minimal_cut_set(c.graph(), q))
      return fail("complement of the Sylow " + std::to_string(s.prime) + "-subgroup is not a minimal cut-set");
  }
  return any ? pass() : skip("no eligible non-cyclic Sylow subgroup");
}

Check gamma_cutset(Context& c) {
  const auto& s = c.prof.sylows;
  if (!c.prof.abelian || c.r() != 3 || s[0].prime != 2 || s[0].cyclic || !s[1].cyclic || !s[2].cyclic)
    return skip("needs p1 = 2 with only P1 non-cyclic, r = 3");
  for (const auto& m : c.maximal()) {
    VertexSet gamma;
    try {
      gamma = gamma_set(c.g, m);
    } catch (const std::logic_error& e) {
      return fail(m_text(m) + ": " + e.what());
    }
    if (!is_minimal_cut_set(c.graph(), gamma)) return fail(m_text(m) + ": Gamma(M) is not minimal");
    const auto sh = gamma_shape(c.g, m);
    const auto a = elements_of_exact_order(c.g, m, ipow(2, sh.m) * ipow(sh.p2, sh.n2));
    const VertexSet b = ~(a | gamma);
    const auto comps = components_after_removal(c.graph(), gamma);
    if (comps.size() != 2 || !contains_set(comps, a) || !contains_set(comps, b))
      return fail(m_text(m) + ": components of G\\Gamma(M) are not E(M, 2^m p2^n2) and the rest");
  }
  return pass();
}

Check menger(Context& c) {
  const auto& g = c.graph();
  if (g.is_complete()) return skip("complete graph");
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ c.g.size());
  std::uniform_int_distribution<std::size_t> pick(1, g.vertex_count() - 1);
  std::size_t done = 0;
  for (std::size_t attempt = 0; attempt < 2000 && done < 25; ++attempt) {
    const auto s = pick(rng), t = pick(rng);
    if (s == t || g.adjacent(s, t)) continue;
    ++done;
    const auto cut = min_vertex_cut_between(g, s, t);
    const auto paths = max_vertex_disjoint_paths(g, s, t);
    const std::string pair = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
    if (cut.cut.count() != cut.kappa || paths.size() != cut.kappa)
      return fail(pair + ": cut size, flow value and path count disagree");
    if (cut.cut.test(s) || cut.cut.test(t)) return fail(pair + ": cut contains an endpoint");
    for (const auto& comp : components_after_removal(g, cut.cut))
      if (comp.test(s) && comp.test(t)) return fail(pair + ": cut does not separate");
    VertexSet inner = g.empty_set();
    for (const auto& p : paths) {
      if (p.front() != s || p.back() != t) return fail(pair + ": path endpoints wrong");
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return fail(pair + ": path uses a non-edge");
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (inner.test(p[i])) return fail(pair + ": paths share a vertex");
        inner.set(p[i]);
      }
    }
  }
  return pass();
}

Check cyclic_bound(Context& c) {
  if (!c.prof.cyclic || c.g.size() < 2) return skip("needs a cyclic group of order >= 2");
  const auto k = c.kappa();
  // Prime powers give complete graphs.
  if (c.r() == 1) {
    if (k + 1 != c.g.size()) return fail("prime-power order but kappa != n - 1");
    return pass();
  }
  const auto lb = kappa_cyclic_lower_bound(c.g.size());
  if (k < lb.bound) return fail("kappa below phi(n) + 1");
  if ((k == lb.bound) != lb.equality) return fail("equality case of phi(n) + 1 mismatched");
  return pass();
}

Check cyclic_nongenerator_bound(Context& c) {
  if (!c.prof.cyclic || c.r() != 2 || c.prof.order.pairs[0].prime < 3)
    return skip("needs a cyclic group of order p^a q^b with 3 <= p < q");
  const auto n = c.g.size();
  if (c.kappa() <= n - euler_phi(n))
    return fail("kappa = " + std::to_string(c.kappa()) + " does not exceed |H~|");
  return pass();
}

using SuiteFn = std::function<Check(Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"mtilde-cutset", mtilde_cutset},
      {"mbar-cutset", mbar_cutset},
      {"mbar-equals-mtilde", mbar_equals_mtilde},
      {"mtilde-minimal", mtilde_minimal},
      {"mbar-minimal", mbar_minimal},
      {"size-compare", size_compare},
      {"max-cyclic-product", max_cyclic_product},
      {"witness", witness},
      {"minimum-avoids-generators", minimum_avoids_generators},
      {"p2-minimum", p2_minimum},
      {"class-union", class_union},
      {"proper-pgroup", proper_pgroup},
      {"sylow-complement-minimal", sylow_complement_minimal},
      {"gamma-cutset", gamma_cutset},
      {"menger", menger},
      {"cyclic-bound", cyclic_bound},
      {"cyclic-nongenerator-bound", cyclic_nongenerator_bound},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& property_suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

PropertySummary run_property_suite(const std::string& suite_id, const std::vector<Group>& corpus,
                                   const ResourceCaps& caps) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(),
                               [&](const auto& entry) { return entry.first == suite_id; });
  if (it == reg.end()) throw InvalidArgument("unknown property suite '" + suite_id + "'");
  PropertySummary summary;
  summary.suite_id = suite_id;
  for (const auto& g : corpus) {
    PropertyOutcome o;
    o.group_label = g.name();
    if (g.size() > caps.max_vertices) {
      o.status = Status::skipped_resource;
      o.detail = "group larger than the vertex cap";
    } else if (g.size() < 2) {
      o.status = Status::skipped;
      o.detail = "trivial group";
    } else {
      Context ctx(g, caps);
      auto check = it->second(ctx);
      o.status = check.status;
      o.detail = std::move(check.detail);
    }
    summary.outcomes.push_back(std::move(o));
  }
  return summary;
}

}  // namespace pgconn
