#include "prin/monomial.hpp"

#include <algorithm>

namespace prin {

namespace {

bool is_subset(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void add_with_subsets(std::set<std::vector<std::size_t>>& family,
                      const std::vector<std::size_t>& s) {
  if (s.empty()) return;
  if (!family.insert(s).second) return;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::size_t> t;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) t.push_back(s[j]);
    add_with_subsets(family, t);
  }
}

} // namespace

void Arrangement::validate() const {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].a < 0) throw precondition_error("negative coefficient");
    if (!complex.count({i}))
      throw precondition_error("singleton " + std::to_string(i) +
                               " missing from the intersection family");
  }
  for (const auto& s : complex) {
    if (static_cast<long>(s.size()) > n)
      throw precondition_error("intersecting set larger than the dimension");
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw precondition_error("intersection sets must be sorted and distinct");
    for (auto j : s)
      if (j >= divisors.size()) throw precondition_error("divisor index out of range");
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::size_t> t;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) t.push_back(s[j]);
        if (!complex.count(t))
          throw precondition_error("intersection family not downward closed");
      }
    }
  }
}

Arrangement make_arrangement(long n,
                             std::vector<Arrangement::Divisor> divisors,
                             const std::vector<std::vector<std::size_t>>& maximal) {
  Arrangement a;
  a.n = n;
  a.divisors = std::move(divisors);
  for (std::size_t i = 0; i < a.divisors.size(); ++i)
    a.complex.insert({i});
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    add_with_subsets(a.complex, s);
  }
  a.validate();
  return a;
}

Arrangement blowup_stratum(const Arrangement& a,
                           const std::vector<std::size_t>& C, long m) {
  if (C.empty()) throw precondition_error("empty stratum");
  std::vector<std::size_t> c = C;
  std::sort(c.begin(), c.end());
  if (!a.intersecting(c))
    throw precondition_error("stratum is not recorded as intersecting");
  long sum = 0;
  for (auto j : c) sum += a.divisors[j].a;
  if (sum < m)
    throw precondition_error("stratum coefficient sum below m");

  Arrangement out = a;
  if (c.size() == 1) {
    out.divisors[c[0]].a -= m;
    return out;
  }

  std::size_t fresh = out.divisors.size();
  Arrangement::Divisor d;
  d.label = "E" + std::to_string(fresh + 1);
  d.a = sum - m;
  out.divisors.push_back(d);

  std::set<std::vector<std::size_t>> family;
  for (const auto& t : a.complex) {
    // Old strata survive exactly when they do not contain the center.
    if (!is_subset(c, t)) family.insert(t);
    // t picks up the new divisor when t and C met and C is not inside t.
    if (!is_subset(c, t)) {
      std::vector<std::size_t> tc = t;
      tc.insert(tc.end(), c.begin(), c.end());
      std::sort(tc.begin(), tc.end());
      tc.erase(std::unique(tc.begin(), tc.end()), tc.end());
      if (a.intersecting(tc) && static_cast<long>(t.size()) + 1 <= out.n) {
        std::vector<std::size_t> with_new = t;
        with_new.push_back(fresh);
        family.insert(with_new);
      }
    }
  }
  family.insert({fresh});
  out.complex = std::move(family);
  out.validate();
  return out;
}

namespace {

struct PhaseState {
  long best_sum = -1;
  long count = 0;
  std::vector<std::size_t> best_tuple;
};

// Lexicographically smallest r-tuple whose intersecting sum >= m is
// maximal, plus the (m_r, n_r) snapshot.
PhaseState scan_phase(const Arrangement& a, int r, long m) {
  PhaseState st;
  for (const auto& s : a.complex) {
    if (static_cast<int>(s.size()) != r) continue;
    long sum = 0;
    for (auto j : s) sum += a.divisors[j].a;
    if (sum < m) continue;
    if (sum > st.best_sum) {
      st.best_sum = sum;
      st.count = 1;
      st.best_tuple = s;
    } else if (sum == st.best_sum) {
      ++st.count;
      if (s < st.best_tuple) st.best_tuple = s;
    }
  }
  return st;
}

void check_star(const Arrangement& a, int upto, long m) {
  for (const auto& s : a.complex) {
    if (static_cast<int>(s.size()) > upto) continue;
    long sum = 0;
    for (auto j : s) sum += a.divisors[j].a;
    if (sum >= m)
      throw precondition_error("(*_s) re-broken for s = " +
                               std::to_string(s.size()));
  }
}

} // namespace

std::pair<Arrangement, ReductionTrace> reduce_monomial(const Arrangement& a0,
                                                       long m) {
  a0.validate();
  Arrangement a = a0;
  ReductionTrace trace;
  const Limits& lim = global_limits();
  std::size_t cap = std::max<std::size_t>(lim.max_steps, 1000000);

  for (int r = 1; r <= a.n; ++r) {
    long prev_mr = -1, prev_nr = -1;
    for (;;) {
      if (trace.moves.size() > cap)
        throw resource_limit_error("reduce_monomial exceeded the move cap");
      if (r > 1) check_star(a, r - 1, m);
      PhaseState st = scan_phase(a, r, m);
      if (st.best_sum < m) break;
      if (prev_mr >= 0) {
        bool decreasing = st.best_sum < prev_mr ||
                          (st.best_sum == prev_mr && st.count < prev_nr);
        if (!decreasing)
          throw resource_limit_error(
              "lexicographic invariant (m_r, n_r) failed to decrease");
      }
      prev_mr = st.best_sum;
      prev_nr = st.count;

      ReductionMove move;
      move.codim = r;
      move.tuple = st.best_tuple;
      move.m_r = st.best_sum;
      move.n_r = st.count;
      a = blowup_stratum(a, st.best_tuple, m);
      move.new_coefficient = r == 1 ? a.divisors[st.best_tuple[0]].a
                                    : a.divisors.back().a;
      trace.moves.push_back(std::move(move));
    }
  }
  return {a, trace};
}

ReductionTrace naive_strategy_trace(Arrangement a, long m, long max_steps,
                                    Arrangement* out_final) {
  a.validate();
  ReductionTrace trace;
  for (long step = 0; step < max_steps; ++step) {
    long best_sum = -1;
    std::vector<std::size_t> best;
    for (const auto& s : a.complex) {
      if (s.size() != 2) continue;
      long sum = a.divisors[s[0]].a + a.divisors[s[1]].a;
      if (sum > best_sum || (sum == best_sum && s < best)) {
        best_sum = sum;
        best = s;
      }
    }
    if (best_sum < m) break;
    ReductionMove move;
    move.codim = 2;
    move.tuple = best;
    move.m_r = best_sum;
    move.n_r = 0;
    a = blowup_stratum(a, best, m);
    move.new_coefficient = a.divisors.back().a;
    trace.moves.push_back(std::move(move));
  }
  if (out_final) *out_final = a;
  return trace;
}

} // namespace prin
