#ifndef PRIN_MONOMIAL_HPP
#define PRIN_MONOMIAL_HPP

#include <set>
#include <string>
#include <vector>

#include "prin/errors.hpp"

namespace prin {

// Combinatorial SNC divisor arrangement: ordered divisors with natural
// coefficients and the family of index subsets recorded as having nonempty
// intersection. The family is downward closed, contains every singleton,
// and no member exceeds the ambient dimension.
struct Arrangement {
  struct Divisor {
    std::string label;
    long a = 0;
  };

  long n = 0;
  std::vector<Divisor> divisors;
  std::set<std::vector<std::size_t>> complex;

  bool intersecting(const std::vector<std::size_t>& subset) const {
    return complex.count(subset) > 0;
  }

  void validate() const;
};

// Builds the downward closure from a list of maximal intersecting sets.
Arrangement make_arrangement(long n,
                             std::vector<Arrangement::Divisor> divisors,
                             const std::vector<std::vector<std::size_t>>& maximal);

struct ReductionMove {
  int codim = 0;                    // the phase r of the move
  std::vector<std::size_t> tuple;   // chosen ordered index tuple
  long new_coefficient = 0;         // appended divisor's coefficient (codim >= 2)
  long m_r = 0;                     // phase invariant snapshot before the move
  long n_r = 0;
};

struct ReductionTrace {
  std::vector<ReductionMove> moves;
};

// Blow-up of the stratum cut out by C: appends the new divisor with
// coefficient sum_C a_j - m and updates the intersection family. A
// singleton C decrements its coefficient by m and appends nothing.
Arrangement blowup_stratum(const Arrangement& a,
                           const std::vector<std::size_t>& C, long m);

// Runs phases 3.1 .. 3.n of the order reduction; afterwards every
// intersecting subset has coefficient sum < m. Deterministic.
std::pair<Arrangement, ReductionTrace> reduce_monomial(const Arrangement& a,
                                                       long m);

// The non-terminating control strategy: repeatedly blow up the crossing
// pair with the largest coefficient sum. Returns after max_steps moves or
// when no crossing pair remains.
ReductionTrace naive_strategy_trace(Arrangement a, long m, long max_steps,
                                    Arrangement* out_final = nullptr);

// {"m":..., "divisors":[{"label","a"}...], "complex":[[...]...]} with the
// complex listed by maximal sets.
std::string arrangement_to_json(const Arrangement& a, long m);
std::pair<Arrangement, long> arrangement_from_json(const std::string& text);

} // namespace prin

#endif
