#include "prin/poly.hpp"

#include <sstream>

namespace prin {

Limits& global_limits() {
  static Limits limits;
  return limits;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Monomial(p.ring_->size()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->size());
  m[index] = 1;
  return term(std::move(ring), m, Rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (*ring_ != *o.ring_)
    throw ring_mismatch_error("polynomial operands live in different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return *ring_ == *o.ring_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial r = constant(ring_, Rational(1));
  Polynomial base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d(m);
    d[var] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(m[var])));
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& g) const {
  check_same_ring(g);
  // Group by the exponent of var, then evaluate with Horner's rule.
  std::map<std::uint32_t, Polynomial> layers;
  for (const auto& [m, c] : terms_) {
    Monomial rest(m);
    std::uint32_t e = rest[var];
    rest[var] = 0;
    auto [it, fresh] = layers.try_emplace(e, ring_);
    it->second.add_term(rest, c);
  }
  // Horner over the (sparse) exponent ladder.
  Polynomial r(ring_);
  std::uint32_t prev_exp = 0;
  bool have = false;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    if (!have) {
      r = it->second;
      prev_exp = it->first;
      have = true;
      continue;
    }
    r = r * g.pow(prev_exp - it->first) + it->second;
    prev_exp = it->first;
  }
  if (have && prev_exp > 0) r = r * g.pow(prev_exp);
  return r;
}

Polynomial Polynomial::map_ring(const RingPtr& target,
                                const std::vector<std::size_t>& var_map) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (var_map[i] == Ring::npos)
        throw precondition_error("map_ring: eliminated variable still occurs");
      t[var_map[i]] += m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

Polynomial Polynomial::set_var_to_zero(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    if (m[var] == 0) r.terms_.emplace(m, c);
  return r;
}

long Polynomial::var_order(std::size_t var) const {
  if (terms_.empty()) return -1;
  long k = -1;
  for (const auto& [m, c] : terms_) {
    long e = m[var];
    if (k < 0 || e < k) k = e;
    if (k == 0) break;
  }
  return k;
}

Polynomial Polynomial::divide_by_var_power(std::size_t var, long k) const {
  if (k == 0) return *this;
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] < k)
      throw precondition_error("divide_by_var_power: term not divisible by " +
                               ring_->name(var) + "^" + std::to_string(k));
    Monomial d(m);
    d[var] -= static_cast<std::uint32_t>(k);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  check_same_ring(g);
  if (g.is_zero()) return std::nullopt;
  Polynomial rem(*this);
  Polynomial quot(ring_);
  const Monomial& gl = g.leading_monomial();
  const Rational& gc = g.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rl = rem.leading_monomial();
    if (!gl.divides(rl)) return std::nullopt;
    Monomial q = gl.quotient_of(rl);
    Rational c = rem.leading_coefficient() / gc;
    quot.add_term(q, c);
    rem = rem - g * Polynomial::term(ring_, q, c);
  }
  return quot;
}

Ord Polynomial::ord_at_origin() const {
  if (terms_.empty()) return std::nullopt;
  long best = -1;
  for (const auto& [m, c] : terms_) {
    long d = m.degree();
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Ord Polynomial::ord_along_subspace(const std::vector<std::size_t>& vars) const {
  if (vars.empty())
    throw precondition_error("ord_along_subspace: empty variable set");
  if (terms_.empty()) return std::nullopt;
  long best = -1;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (auto v : vars) d += m[v];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed_coeff = false;
    if (a != 1 || m.is_one()) {
      os << rational_to_string(a);
      printed_coeff = true;
    }
    bool first_var = !printed_coeff;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

} // namespace prin
