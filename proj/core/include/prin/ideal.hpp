#ifndef PRIN_IDEAL_HPP
#define PRIN_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "prin/poly.hpp"

namespace prin {

// Finite generator list with a cached reduced Groebner basis. Values are
// immutable; the basis cache is filled once (compute-then-publish) and may
// be shared between copies.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Reduced Groebner basis w.r.t. grevlex; unique, so equality of ideals is
  // equality of bases. Throws resource_limit_error past the configured caps.
  const std::vector<Polynomial>& groebner_basis() const;

  // Remainder of f modulo the reduced basis; f is a member iff it is zero.
  Polynomial normal_form(const Polynomial& f) const;

  bool contains(const Polynomial& f) const;
  bool contains_ideal(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool contains_one() const;

  // Minimum of ord over generators (sharp for ideals).
  Ord ord_at_origin() const;
  Ord ord_along_subspace(const std::vector<std::size_t>& vars) const;

  Ideal map_ring(const RingPtr& target,
                 const std::vector<std::size_t>& var_map) const;
  Ideal substitute(std::size_t var, const Polynomial& g) const;

private:
  struct BasisCache {
    std::mutex mutex;
    std::shared_ptr<const std::vector<Polynomial>> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<BasisCache> cache_;
};

// A pair (I, m): an ideal carried with the order we pretend it has.
struct MarkedIdeal {
  MarkedIdeal(Ideal i, long m) : ideal(std::move(i)), marking(m) {
    if (m < 1) throw precondition_error("marking must be >= 1");
  }
  Ideal ideal;
  long marking;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned long k);

MarkedIdeal marked_sum(const MarkedIdeal& a, const MarkedIdeal& b);
MarkedIdeal marked_product(const MarkedIdeal& a, const MarkedIdeal& b);

inline bool ideal_equal(const Ideal& a, const Ideal& b) { return a.equals(b); }
inline bool ideal_contains(const Ideal& a, const Ideal& b) {
  return a.contains_ideal(b);
}

// Largest m >= 0 such that D^{m-1}(I) is a proper ideal; 0 for the unit
// ideal. Exact over the algebraic closure by the derivative criterion.
long max_order(const Ideal& ideal);

// D^{m-1}(I): an ideal whose zero set is the locus where ord >= m.
Ideal cosupport_ideal(const Ideal& ideal, long m);

} // namespace prin

#endif
