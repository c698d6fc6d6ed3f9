#ifndef PRIN_DERIVE_HPP
#define PRIN_DERIVE_HPP

#include <vector>

#include "prin/ideal.hpp"

namespace prin {

// D(I): generated by the generators and all their first partials. The
// result carries its reduced basis as generator list, so iterating stays
// small.
Ideal derivative_ideal(const Ideal& ideal);

// r-fold iterate; D^0(I) = I.
Ideal derivative_ideal_r(const Ideal& ideal, long r);

// MC(I) = D^{m-1}(I) with m = max_order(I). Rejects the unit ideal.
Ideal mc_ideal(const Ideal& ideal);

// Logarithmic derivative along S = (x_s = 0): generated by I, x_s*df/dx_s
// and df/dx_j for j != s.
Ideal log_derivative_ideal(const Ideal& ideal, std::size_t s_var);
Ideal log_derivative_ideal_r(const Ideal& ideal, std::size_t s_var, long r);

// (D^i I)^m contained in I^{m-i} for all 1 <= i < m, m = max_order(I).
bool is_D_balanced(const Ideal& ideal);

// MC(I) * D(I) contained in I.
bool is_MC_invariant(const Ideal& ideal);

// The minimal exponent vectors (c_0, ..., c_{m-1}) with
// sum (m-j) c_j >= s; together they generate W_s(I).
struct TuningProfile {
  long m = 0;
  long s = 0;
  std::vector<std::vector<long>> exponent_vectors;
};

TuningProfile tuning_profile(long m, long s);

// W_s(I), the maximal coefficient ideal of order s.
Ideal tune(const Ideal& ideal, long s);

// The driver's default tuning order m!.
long default_tuning_order(long m);

// Override hook: s = r * lcm(2..m) with r >= m-1; rejected otherwise.
long tuning_order_override(long m, long r);
bool is_licensed_tuning_order(long m, long s);

long lcm_up_to(long m);

// Exhaustively verifies, for r = 1, that every monomial in weighted
// variables u_1..u_m (deg u_i = i) of degree between (r+m-1)*lcm(2..m) and
// degree_bound splits off a factor of degree exactly r*lcm(2..m).
// Subtrees whose prefix already splits are counted without expansion.
bool check_claim_w9(long m, long degree_bound);

} // namespace prin

#endif
