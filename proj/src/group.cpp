#include "pgconn/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pgconn/errors.hpp"

namespace pgconn {

std::vector<std::size_t> to_indices(const ElementSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

ElementSet from_indices(std::size_t universe, std::span<const std::size_t> idx) {
  ElementSet s(universe);
  for (auto i : idx) {
    if (i >= universe) throw InvalidArgument("element index out of range");
    s.set(i);
  }
  return s;
}

// --- AbelianSpec -----------------------------------------------------------

AbelianSpec::AbelianSpec(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("abelian spec: no factors");
  for (const auto& f : factors_) {
    if (!is_prime(f.prime))
      throw InvalidArgument("abelian spec: " + std::to_string(f.prime) +
                            " is not prime");
    if (f.exponent < 1) throw InvalidArgument("abelian spec: exponent < 1");
  }
  std::sort(factors_.begin(), factors_.end());
}

std::uint64_t AbelianSpec::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) n *= f.value();
  return n;
}

std::string AbelianSpec::label() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(f.value());
  }
  return out;
}

// --- Group -----------------------------------------------------------------

Element Group::multiply(Element a, Element b) const {
  if (backing_ == Backing::cayley_table)
    return Element{table_[a.index * size_ + b.index]};
  const std::size_t r = moduli_.size();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto d = (digit_table_[a.index * r + i] + digit_table_[b.index * r + i]) %
                   moduli_[i];
    index = index * moduli_[i] + d;
  }
  return Element{static_cast<std::uint32_t>(index)};
}

Element Group::inverse(Element a) const { return Element{inverses_.at(a.index)}; }

Element Group::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element result = identity();
  Element base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

std::span<const std::uint64_t> Group::digits(Element a) const {
  if (backing_ != Backing::structured_abelian)
    throw InvalidArgument("digits: group is not structured-abelian");
  const std::size_t r = moduli_.size();
  return {digit_table_.data() + a.index * r, r};
}

Element Group::from_digits(std::span<const std::uint64_t> digits) const {
  if (backing_ != Backing::structured_abelian || digits.size() != moduli_.size())
    throw InvalidArgument("from_digits: digit count does not match factors");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    index = index * moduli_[i] + digits[i] % moduli_[i];
  return Element{static_cast<std::uint32_t>(index)};
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

void Group::finish() {
  if (backing_ == Backing::structured_abelian) {
    const std::size_t r = moduli_.size();
    inverses_.resize(size_);
    orders_.resize(size_);
    for (std::size_t x = 0; x < size_; ++x) {
      std::uint64_t inv = 0, ord = 1;
      for (std::size_t i = 0; i < r; ++i) {
        const auto m = moduli_[i];
        const auto d = digit_table_[x * r + i];
        inv = inv * m + (m - d) % m;
        ord = std::lcm(ord, m / std::gcd(d, m));
      }
      inverses_[x] = static_cast<std::uint32_t>(inv);
      orders_[x] = ord;
    }
    abelian_ = true;
  } else {
    inverses_.assign(size_, 0);
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = 0; b < size_; ++b)
        if (table_[a * size_ + b] == 0) inverses_[a] = static_cast<std::uint32_t>(b);
    orders_.assign(size_, 1);
    for (std::size_t a = 1; a < size_; ++a) {
      Element cur{static_cast<std::uint32_t>(a)};
      std::uint64_t k = 1;
      while (cur.index != 0) {
        cur = multiply(cur, Element{static_cast<std::uint32_t>(a)});
        ++k;
      }
      orders_[a] = k;
    }
    abelian_ = true;
    for (std::size_t a = 0; a < size_ && abelian_; ++a)
      for (std::size_t b = a + 1; b < size_; ++b)
        if (table_[a * size_ + b] != table_[b * size_ + a]) {
          abelian_ = false;
          break;
        }
  }
  cyclic_ = std::any_of(orders_.begin(), orders_.end(),
                        [&](std::uint64_t o) { return o == size_; });
}

Group Group::from_table(std::string name, std::size_t size,
                        std::vector<std::uint32_t> table) {
  if (size == 0) throw InvalidArgument("group table: empty group");
  if (table.size() != size * size)
    throw InvalidArgument("group table: expected size*size entries");
  for (auto v : table)
    if (v >= size) throw InvalidArgument("group table: entry out of range");
  for (std::size_t i = 0; i < size; ++i)
    if (table[i] != i || table[i * size] != i)
      throw InvalidArgument("group table: index 0 is not the identity");
  // Latin square: every row and column is a permutation, so inverses exist.
  std::vector<char> seen(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < size; ++b) seen[table[a * size + b]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(size))
      throw InvalidArgument("group table: row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < size; ++b) seen[table[b * size + a]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(size))
      throw InvalidArgument("group table: column is not a permutation");
  }
  const auto mul = [&](std::size_t a, std::size_t b) { return table[a * size + b]; };
  const auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (size <= 64) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        for (std::size_t c = 0; c < size; ++c)
          if (!associative(a, b, c))
            throw InvalidArgument("group table: not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int i = 0; i < 200000; ++i)
      if (!associative(pick(rng), pick(rng), pick(rng)))
        throw InvalidArgument("group table: not associative");
  }

  Group g;
  g.size_ = size;
  g.name_ = std::move(name);
  g.backing_ = Backing::cayley_table;
  g.table_ = std::move(table);
  g.finish();
  return g;
}

Group make_abelian(const AbelianSpec& spec) {
  Group g;
  g.backing_ = Group::Backing::structured_abelian;
  g.spec_ = spec;
  g.name_ = spec.label();
  for (const auto& f : spec.factors()) g.moduli_.push_back(f.value());
  g.size_ = spec.order();
  const std::size_t r = g.moduli_.size();
  g.digit_table_.resize(g.size_ * r);
  for (std::size_t x = 0; x < g.size_; ++x) {
    std::uint64_t rest = x;
    for (std::size_t i = r; i-- > 0;) {
      g.digit_table_[x * r + i] = rest % g.moduli_[i];
      rest /= g.moduli_[i];
    }
  }
  g.finish();
  return g;
}

Group make_cyclic(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("make_cyclic: n must be positive");
  if (n == 1) {
    Group g;
    g.backing_ = Group::Backing::structured_abelian;
    g.name_ = "C1";
    g.size_ = 1;
    g.finish();
    return g;
  }
  Group g = make_abelian(AbelianSpec(factorize(n).pairs));
  g.name_ = "C" + std::to_string(n);
  return g;
}

Group make_generalized_quaternion(std::uint64_t order) {
  const auto pp = as_prime_power(order);
  if (!pp || pp->prime != 2 || order < 8)
    throw InvalidArgument("make_generalized_quaternion: order must be 2^m with m >= 3");
  const std::uint64_t n = order / 2;  // order of a
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % n, xb = x / n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t k = y % n, yb = y / n;
      std::uint64_t e, b;
      if (xb == 0) {
        e = (i + k) % n;
        b = yb;
      } else if (yb == 0) {  // a^i b a^k = a^{i-k} b
        e = (i + n - k) % n;
        b = 1;
      } else {  // a^i b a^k b = a^{i-k} b^2 = a^{i-k+n/2}
        e = (i + n - k + n / 2) % n;
        b = 0;
      }
      table[x * order + y] = static_cast<std::uint32_t>(e + n * b);
    }
  }
  return Group::from_table("Q" + std::to_string(order), order, std::move(table));
}

Group make_dihedral(std::uint64_t order) {
  if (order % 2 != 0 || order < 6)
    throw InvalidArgument("make_dihedral: order must be 2n with n >= 3");
  const std::uint64_t n = order / 2;
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % n, xs = x / n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t k = y % n, ys = y / n;
      const std::uint64_t e = xs == 0 ? (i + k) % n : (i + n - k) % n;
      table[x * order + y] = static_cast<std::uint32_t>(e + n * ((xs + ys) % 2));
    }
  }
  return Group::from_table("D" + std::to_string(order), order, std::move(table));
}

Element cyclic_residue(const Group& g, std::uint64_t k) {
  if (!g.is_cyclic() || g.backing() != Group::Backing::structured_abelian)
    throw InvalidArgument("cyclic_residue: group was not built by make_cyclic");
  if (g.size() == 1) return g.identity();
  std::vector<std::uint64_t> digits;
  for (const auto& f : g.abelian_spec()->factors()) digits.push_back(k % f.value());
  return g.from_digits(digits);
}

// --- element-level operations ----------------------------------------------

namespace {

void check_element(const Group& g, Element x) {
  if (x.index >= g.size()) throw InvalidArgument("element index out of range");
}

}  // namespace

std::uint64_t element_order(const Group& g, Element x) {
  check_element(g, x);
  return g.order(x);
}

ElementSet cyclic_closure(const Group& g, Element x) {
  check_element(g, x);
  ElementSet s = g.empty_set();
  Element cur = g.identity();
  do {
    s.set(cur.index);
    cur = g.multiply(cur, x);
  } while (cur.index != 0);
  return s;
}

ElementSet generator_class(const Group& g, Element x) {
  check_element(g, x);
  const std::uint64_t o = g.order(x);
  ElementSet s = g.empty_set();
  Element cur = x;
  for (std::uint64_t k = 1; k <= o; ++k) {
    if (std::gcd(k, o) == 1) s.set(cur.index);
    cur = g.multiply(cur, x);
  }
  return s;
}

std::vector<ElementSet> generator_classes(const Group& g) {
  std::vector<ElementSet> classes;
  ElementSet assigned = g.empty_set();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (assigned.test(i)) continue;
    auto cls = generator_class(g, Element{static_cast<std::uint32_t>(i)});
    assigned |= cls;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t SylowDecomposition::slot_of(std::uint64_t prime) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].prime == prime) return i;
  throw InvalidArgument("prime " + std::to_string(prime) + " does not divide |G|");
}

SylowDecomposition sylow_decomposition(const Group& g) {
  SylowDecomposition d;
  if (g.size() > 1) d.primes = factorize(g.size()).pairs;
  const auto elements = g.elements();

  for (const auto& pp : d.primes) {
    ElementSet sub = g.empty_set();
    for (auto x : elements) {
      std::uint64_t o = g.order(x);
      while (o % pp.prime == 0) o /= pp.prime;
      if (o == 1) sub.set(x.index);
    }
    if (g.backing() == Group::Backing::cayley_table) {
      // The p-elements form a subgroup of order p^e exactly when the Sylow
      // p-subgroup is unique, i.e. normal.
      bool normal = sub.count() == pp.value();
      const auto members = to_indices(sub);
      for (std::size_t a = 0; normal && a < members.size(); ++a)
        for (auto b : members)
          if (!sub.test(g.multiply(Element{static_cast<std::uint32_t>(members[a])},
                                   Element{static_cast<std::uint32_t>(b)}).index)) {
            normal = false;
            break;
          }
      for (std::size_t h = 0; normal && h < elements.size(); ++h)
        for (auto s : members) {
          const Element conj = g.multiply(
              g.multiply(elements[h], Element{static_cast<std::uint32_t>(s)}),
              g.inverse(elements[h]));
          if (!sub.test(conj.index)) {
            normal = false;
            break;
          }
        }
      if (!normal)
        throw UnsupportedStructure(g.name() + ": Sylow " + std::to_string(pp.prime) +
                                   "-subgroup is not normal (group not nilpotent)");
    }
    d.subgroups.push_back(std::move(sub));
  }

  // proj_p(x) = x^u with u == 1 mod (p-part of o(x)) and u == 0 mod the rest.
  d.projection.assign(g.size(), std::vector<Element>(d.primes.size(), g.identity()));
  for (auto x : elements) {
    const std::uint64_t o = g.order(x);
    for (std::size_t slot = 0; slot < d.primes.size(); ++slot) {
      std::uint64_t ppart = 1, rest = o;
      while (rest % d.primes[slot].prime == 0) {
        rest /= d.primes[slot].prime;
        ppart *= d.primes[slot].prime;
      }
      if (ppart == 1) continue;
      const std::uint64_t u = (rest * mod_inverse(rest % ppart, ppart)) % o;
      d.projection[x.index][slot] = g.power(x, static_cast<std::int64_t>(u));
    }
  }
  return d;
}

}  // namespace pgconn
