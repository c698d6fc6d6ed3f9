#ifndef PRIN_BLOWUP_HPP
#define PRIN_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "prin/ideal.hpp"

namespace prin {

// One entry of the ordered exceptional list E. The locus is the chart
// variable cutting the divisor out, or a principal equation for the
// codimension-1 centers that are not coordinate hyperplanes; both absent
// when the divisor misses the chart. pullback_multiplicity accumulates the
// exponent of this divisor in the total pull-back of the chart ideal.
struct DivisorRecord {
  std::string label;
  long order_index = 0;
  std::optional<std::size_t> locus;
  std::optional<Polynomial> principal;
  long pullback_multiplicity = 0;

  bool meets_chart() const { return locus.has_value() || principal.has_value(); }
};

// An affine coordinate patch carrying the current transform and E.
struct Chart {
  long id = 0;
  long parent = -1;
  long depth = 0;
  std::string lineage; // human-readable, e.g. "root" or "step 2, z-chart"
  RingPtr ring;
  Ideal ideal;
  std::optional<long> marking; // present for marked charts
  std::vector<DivisorRecord> divisors;

  Chart(RingPtr r, Ideal i) : ring(std::move(r)), ideal(std::move(i)) {}

  long marking_or(long fallback) const { return marking.value_or(fallback); }
};

// A blow-up center: the coordinate subspace x_{v in vars} = 0, or a
// principal smooth hypersurface (g = 0) for trivial blow-ups.
struct Center {
  std::vector<std::size_t> vars;
  std::optional<Polynomial> principal;

  bool is_principal() const { return principal.has_value(); }
  bool is_codim1() const { return is_principal() || vars.size() == 1; }
};

struct LogStep {
  long step = 0;
  long chart_id = 0;
  std::vector<std::string> center_vars;
  std::optional<std::string> center_principal;
  long exponent_m = 0;
  std::vector<long> children;
  std::string new_divisor_label;
  // Coordinate-change records (no blow-up): x_subst_var := subst_poly.
  std::optional<std::string> subst_var;
  std::optional<std::string> subst_poly;
};

struct BlowupLog {
  std::vector<LogStep> steps;
};

// x -> x_1 -> x_2 -> ...
std::string bump_name(const std::string& name);
RingPtr bump_generation(const RingPtr& ring);

// Order of the chart ideal along the center (finite for nonzero ideals).
long center_order(const Ideal& ideal, const Center& center);

// Largest k with ideal contained in (g^k).
long principal_order(const Ideal& ideal, const Polynomial& g);

// The k-th chart of the blow-up of z, dividing by the exceptional
// coordinate to the power mu. Throws precondition_error when a generator
// is not divisible (signals ord_Z < mu).
Chart blowup_chart_with_exponent(const Chart& c, const Center& z,
                                 std::size_t k, long mu,
                                 const std::string& divisor_label);

// Marked charts divide by the marking, unmarked ones by the computed
// order along the center.
Chart blowup_chart(const Chart& c, const Center& z, std::size_t k,
                   const std::string& divisor_label = "E");

// Birational (controlled) transform with computed exponent.
Chart unmarked_transform(const Chart& c, const Center& z, std::size_t k,
                         const std::string& divisor_label = "E");

struct BlowupFan {
  std::vector<Chart> children;
  long exponent = 0;
};

// All standard charts of one blow-up; a codimension-1 center yields the
// single trivial chart on the same coordinates.
BlowupFan blowup_all_charts(const Chart& c, const Center& z,
                            const std::string& divisor_label);

// Chart in one fewer variable obtained by x_var := 0. Divisor records with
// that locus are dropped, the others re-indexed.
Chart restrict_to_hypersurface(const Chart& c, std::size_t var);

// JSON-lines round trip; bit-exact.
std::string log_to_jsonl(const BlowupLog& log);
BlowupLog log_from_jsonl(const std::string& text);

// Re-executes a log from the root chart; returns every chart ever created,
// indexed by id. Ids are assigned in creation order starting after root.
std::vector<Chart> replay_log(const Chart& root, const BlowupLog& log);

} // namespace prin

#endif
