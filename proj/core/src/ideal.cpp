#include "prin/ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "prin/derive.hpp"

namespace prin {

namespace {

// Total order on polynomials used to make generator handling deterministic:
// by leading monomial, then term count, then termwise.
bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() != b.is_zero()) return b.is_zero();
  if (a.is_zero()) return false;
  int c = grevlex_cmp(a.leading_monomial(), b.leading_monomial());
  if (c != 0) return c < 0;
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int mc = grevlex_cmp(ia->first, ib->first);
    if (mc != 0) return mc < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading_coefficient());
}

void check_limits(const std::vector<Polynomial>& basis) {
  const Limits& lim = global_limits();
  if (basis.size() > lim.max_generators)
    throw resource_limit_error("Groebner basis exceeded max generator count (" +
                               std::to_string(lim.max_generators) + ")");
  for (const auto& g : basis)
    if (g.total_degree() > lim.max_total_degree)
      throw resource_limit_error("Groebner basis exceeded max total degree (" +
                                 std::to_string(lim.max_total_degree) + ")");
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial rem(f.ring());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        Monomial q = g.leading_monomial().quotient_of(lm);
        Rational c = p.leading_coefficient() / g.leading_coefficient();
        p = p - g * Polynomial::term(p.ring(), q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial lt = Polynomial::term(p.ring(), lm, p.leading_coefficient());
      rem = rem + lt;
      p = p - lt;
    }
  }
  return rem;
}

struct Pair {
  long sugar;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

// Buchberger with the sugar selection strategy and full reduction.
std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> basis;
  std::vector<long> sugar;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(make_monic(g));
    sugar.push_back(g.total_degree());
  }
  std::sort(basis.begin(), basis.end(), poly_less);
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              basis.end());
  check_limits(basis);
  sugar.assign(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) sugar[i] = basis[i].total_degree();

  std::set<Pair, PairLess> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      long s = l.degree() +
               std::max(sugar[i] - basis[i].total_degree(),
                        sugar[j] - basis[j].total_degree());
      pairs.insert(Pair{s, l, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    // Product criterion: coprime leading monomials reduce to zero.
    if (p.lcm == f.leading_monomial() * g.leading_monomial()) continue;
    Monomial qf = f.leading_monomial().quotient_of(p.lcm);
    Monomial qg = g.leading_monomial().quotient_of(p.lcm);
    Polynomial s = f * Polynomial::term(ring, qf, Rational(1)) -
                   g * Polynomial::term(ring, qg, Rational(1));
    Polynomial h = reduce_full(s, basis);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h));
    long sg = std::max(sugar[p.i] + qf.degree(), sugar[p.j] + qg.degree());
    sugar.push_back(std::max(sg, h.total_degree()));
    check_limits(basis);
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's; on equal leading monomials keep the first.
  std::vector<bool> drop(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || drop[j]) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        drop[i] = true;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) minimal.push_back(basis[i]);

  // Inter-reduce tails.
  std::vector<Polynomial> reduced(minimal.size(), Polynomial(ring));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = make_monic(reduce_full(minimal[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), poly_less);
  reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                               [](const Polynomial& f) { return f.is_zero(); }),
                reduced.end());
  return reduced;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<BasisCache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (*g.ring() != *ring_)
      throw ring_mismatch_error("generator does not live in the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Rational(1));
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->basis) return *cache_->basis;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(
      buchberger(ring_, gens_));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = std::move(basis);
  return *cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (*f.ring() != *ring_)
    throw ring_mismatch_error("normal_form: argument in a different ring");
  return reduce_full(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  if (*ring_ != *other.ring_)
    throw ring_mismatch_error("containment of ideals in different rings");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  if (*ring_ != *other.ring_)
    throw ring_mismatch_error("equality of ideals in different rings");
  // The reduced basis is unique.
  return groebner_basis() == other.groebner_basis();
}

bool Ideal::contains_one() const {
  const auto& basis = groebner_basis();
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

Ord Ideal::ord_at_origin() const {
  Ord best;
  for (const auto& g : gens_) {
    Ord o = g.ord_at_origin();
    if (!best.has_value() || (o.has_value() && *o < *best)) best = o;
  }
  return best;
}

Ord Ideal::ord_along_subspace(const std::vector<std::size_t>& vars) const {
  Ord best;
  for (const auto& g : gens_) {
    Ord o = g.ord_along_subspace(vars);
    if (!best.has_value() || (o.has_value() && *o < *best)) best = o;
  }
  return best;
}

Ideal Ideal::map_ring(const RingPtr& target,
                      const std::vector<std::size_t>& var_map) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.map_ring(target, var_map));
  return Ideal(target, std::move(gens));
}

Ideal Ideal::substitute(std::size_t var, const Polynomial& g) const {
  std::vector<Polynomial> gens;
  for (const auto& f : gens_) gens.push_back(f.substitute(var, g));
  return Ideal(ring_, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (*a.ring() != *b.ring())
    throw ring_mismatch_error("ideal sum across rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (*a.ring() != *b.ring())
    throw ring_mismatch_error("ideal product across rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  std::sort(gens.begin(), gens.end(), poly_less);
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Polynomial& x, const Polynomial& y) {
                           return x == y;
                         }),
             gens.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned long k) {
  if (k == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (unsigned long i = 1; i < k; ++i) r = ideal_product(r, a);
  return r;
}

MarkedIdeal marked_sum(const MarkedIdeal& a, const MarkedIdeal& b) {
  if (a.marking != b.marking)
    throw precondition_error("sum of marked ideals requires equal markings");
  return MarkedIdeal(ideal_sum(a.ideal, b.ideal), a.marking);
}

MarkedIdeal marked_product(const MarkedIdeal& a, const MarkedIdeal& b) {
  return MarkedIdeal(ideal_product(a.ideal, b.ideal), a.marking + b.marking);
}

long max_order(const Ideal& ideal) {
  if (ideal.is_zero())
    throw precondition_error("max_order of the zero ideal");
  Ideal d = ideal;
  long m = 0;
  const Limits& lim = global_limits();
  while (!d.contains_one()) {
    ++m;
    if (m > lim.max_total_degree)
      throw resource_limit_error("max_order exceeded the degree cap");
    d = derivative_ideal(d);
  }
  return m;
}

Ideal cosupport_ideal(const Ideal& ideal, long m) {
  if (m < 1) throw precondition_error("cosupport_ideal requires m >= 1");
  return derivative_ideal_r(ideal, m - 1);
}

} // namespace prin
