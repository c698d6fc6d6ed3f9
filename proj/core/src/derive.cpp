#include "prin/derive.hpp"

#include <numeric>

namespace prin {

namespace {

Ideal with_reduced_generators(Ideal ideal) {
  auto basis = ideal.groebner_basis();
  return Ideal(ideal.ring(), std::move(basis));
}

} // namespace

Ideal derivative_ideal(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& f : ideal.generators())
    for (std::size_t j = 0; j < ring->size(); ++j) gens.push_back(f.derivative(j));
  return with_reduced_generators(Ideal(ring, std::move(gens)));
}

Ideal derivative_ideal_r(const Ideal& ideal, long r) {
  Ideal d = ideal;
  for (long i = 0; i < r; ++i) {
    if (d.contains_one()) return d;
    d = derivative_ideal(d);
  }
  return d;
}

Ideal mc_ideal(const Ideal& ideal) {
  long m = max_order(ideal);
  if (m == 0) throw precondition_error("mc_ideal of the unit ideal");
  return derivative_ideal_r(ideal, m - 1);
}

Ideal log_derivative_ideal(const Ideal& ideal, std::size_t s_var) {
  const RingPtr& ring = ideal.ring();
  Polynomial xs = Polynomial::variable(ring, s_var);
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& f : ideal.generators()) {
    for (std::size_t j = 0; j < ring->size(); ++j) {
      Polynomial d = f.derivative(j);
      gens.push_back(j == s_var ? xs * d : d);
    }
  }
  return with_reduced_generators(Ideal(ring, std::move(gens)));
}

Ideal log_derivative_ideal_r(const Ideal& ideal, std::size_t s_var, long r) {
  Ideal d = ideal;
  for (long i = 0; i < r; ++i) d = log_derivative_ideal(d, s_var);
  return d;
}

bool is_D_balanced(const Ideal& ideal) {
  long m = max_order(ideal);
  if (m == 0) throw precondition_error("is_D_balanced of the unit ideal");
  Ideal d = ideal;
  for (long i = 1; i < m; ++i) {
    d = derivative_ideal(d);
    Ideal lhs = ideal_power(d, static_cast<unsigned long>(m));
    Ideal rhs = ideal_power(ideal, static_cast<unsigned long>(m - i));
    if (!rhs.contains_ideal(lhs)) return false;
  }
  return true;
}

bool is_MC_invariant(const Ideal& ideal) {
  long m = max_order(ideal);
  if (m == 0) throw precondition_error("is_MC_invariant of the unit ideal");
  Ideal mc = derivative_ideal_r(ideal, m - 1);
  Ideal prod = ideal_product(mc, derivative_ideal(ideal));
  return ideal.contains_ideal(prod);
}

TuningProfile tuning_profile(long m, long s) {
  if (m < 1 || s < 1)
    throw precondition_error("tuning_profile requires m >= 1 and s >= 1");
  TuningProfile profile;
  profile.m = m;
  profile.s = s;
  std::vector<long> c(static_cast<std::size_t>(m), 0);
  // Weight of c_j is m - j; minimal vectors satisfy total >= s and
  // total - (m - j) < s for every j with c_j > 0.
  auto minimal = [&](long total) {
    if (total < s) return false;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] > 0 && total - (m - static_cast<long>(j)) >= s) return false;
    return true;
  };
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long total) {
    if (j == c.size()) {
      if (minimal(total)) profile.exponent_vectors.push_back(c);
      return;
    }
    long w = m - static_cast<long>(j);
    for (long k = 0;; ++k) {
      c[j] = k;
      long t = total + k * w;
      if (t >= s + w) {
        // Any larger k is non-minimal in coordinate j.
        c[j] = 0;
        return;
      }
      rec(j + 1, t);
      if (t >= s) {
        c[j] = 0;
        return;
      }
    }
  };
  rec(0, 0);
  return profile;
}

Ideal tune(const Ideal& ideal, long s) {
  if (ideal.is_zero()) throw precondition_error("tune of the zero ideal");
  long m = max_order(ideal);
  if (m == 0) throw precondition_error("tune of the unit ideal");
  if (s < 1) throw precondition_error("tune requires s >= 1");
  TuningProfile profile = tuning_profile(m, s);
  std::vector<Ideal> powers; // D^j(I) for j = 0..m-1
  powers.push_back(ideal);
  for (long j = 1; j < m; ++j) powers.push_back(derivative_ideal(powers.back()));

  const Limits& lim = global_limits();
  std::vector<Polynomial> gens;
  for (const auto& c : profile.exponent_vectors) {
    Ideal prod = Ideal::unit(ideal.ring());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      prod = ideal_product(prod, ideal_power(powers[j], static_cast<unsigned long>(c[j])));
      if (prod.generators().size() > lim.max_generators)
        throw resource_limit_error("tune: generator explosion");
    }
    for (const auto& g : prod.generators()) gens.push_back(g);
    if (gens.size() > 4 * lim.max_generators)
      throw resource_limit_error("tune: generator explosion");
  }
  Ideal w(ideal.ring(), std::move(gens));
  return Ideal(w.ring(), w.groebner_basis());
}

long default_tuning_order(long m) {
  if (m < 1) throw precondition_error("tuning order requires m >= 1");
  long f = 1;
  for (long i = 2; i <= m; ++i) f *= i;
  return f;
}

long lcm_up_to(long m) {
  long l = 1;
  for (long i = 2; i <= m; ++i) l = std::lcm(l, i);
  return l;
}

long tuning_order_override(long m, long r) {
  if (m < 1) throw precondition_error("tuning order requires m >= 1");
  if (r < m - 1 || r < 1)
    throw precondition_error("tuning override requires r >= m-1");
  return r * lcm_up_to(m);
}

bool is_licensed_tuning_order(long m, long s) {
  long l = lcm_up_to(m);
  if (s <= 0 || s % l != 0) return false;
  return s / l >= std::max<long>(m - 1, 1);
}

namespace {

// Recursion over c_i for i = nvars..1. bits holds the achievable split
// degrees <= L as a bitmask; once bit L is set every completion splits, so
// the subtree is certified without expansion.
bool w9_rec(long i, long deg, unsigned long long bits, long L, long lo, long bound) {
  if ((bits >> L) & 1ULL) return true;
  if (i == 0) return deg < lo || deg > bound;
  unsigned long long b = bits;
  const unsigned long long mask = (L >= 63) ? ~0ULL : ((1ULL << (L + 1)) - 1);
  for (long d = deg;; d += i) {
    if (d > bound) return true;
    if (!w9_rec(i - 1, d, b, L, lo, bound)) return false;
    if ((b >> L) & 1ULL) return true;
    b = (b | (b << i)) & mask;
  }
}

} // namespace

bool check_claim_w9(long m, long degree_bound) {
  if (m < 1 || m > 5)
    throw precondition_error("check_claim_w9 supports 1 <= m <= 5");
  long L = lcm_up_to(m); // r = 1
  long lo = m * L;       // (r + m - 1) * lcm for r = 1
  return w9_rec(m, 0, 1ULL, L, lo, degree_bound);
}

} // namespace prin
