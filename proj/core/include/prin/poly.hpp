#ifndef PRIN_POLY_HPP
#define PRIN_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prin/errors.hpp"
#include "prin/rational.hpp"
#include "prin/ring.hpp"

namespace prin {

// Order of vanishing; empty means +infinity (the zero polynomial / ideal).
using Ord = std::optional<long>;

inline bool ord_ge(const Ord& o, long m) { return !o.has_value() || *o >= m; }

// Exact multivariate polynomial over Q in canonical form: a term map keyed
// by monomial, leading term first, no zero coefficients stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermMap terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  long total_degree() const; // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned long e) const;

  // Formal partial derivative with respect to ring variable var.
  Polynomial derivative(std::size_t var) const;

  // Exact composition f[x_var := g]; g must live in the same ring.
  Polynomial substitute(std::size_t var, const Polynomial& g) const;

  // Transport to another ring through an index map: old variable i becomes
  // new variable var_map[i]. Entries of value Ring::npos must not occur in
  // any term (use set_var_to_zero first to eliminate a variable).
  Polynomial map_ring(const RingPtr& target,
                      const std::vector<std::size_t>& var_map) const;

  Polynomial set_var_to_zero(std::size_t var) const;

  // Largest k with x_var^k dividing every term.
  long var_order(std::size_t var) const;
  Polynomial divide_by_var_power(std::size_t var, long k) const;

  // Exact division by g: returns the quotient when f is a polynomial
  // multiple of g, nothing otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  // Minimal total degree of a term; infinity for 0.
  Ord ord_at_origin() const;

  // Minimal, over terms, of the summed exponents of the selected variables.
  Ord ord_along_subspace(const std::vector<std::size_t>& vars) const;

  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

private:
  void check_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

// Parses the ASCII polynomial grammar: rational literals `p` or `p/q`,
// declared variable names, operators + - * ^ (with ^ binding tightest),
// parentheses, insignificant whitespace. Implicit multiplication is a
// syntax error.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace prin

#endif
