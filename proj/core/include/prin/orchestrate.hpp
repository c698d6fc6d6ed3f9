#ifndef PRIN_ORCHESTRATE_HPP
#define PRIN_ORCHESTRATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prin/blowup.hpp"
#include "prin/derive.hpp"

namespace prin {

enum class ChartStatus { Active, Reduced, Error };

// The blow-up tree the drivers build: charts by id, parent/child links,
// per-chart status and the shared log.
class ChartTree {
public:
  explicit ChartTree(Chart root);

  const Chart& chart(long id) const { return charts_.at(static_cast<std::size_t>(id)); }
  Chart& chart(long id) { return charts_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return charts_.size(); }

  const std::vector<long>& children_of(long id) const;
  ChartStatus status(long id) const { return status_.at(static_cast<std::size_t>(id)); }
  void set_status(long id, ChartStatus s) { status_[static_cast<std::size_t>(id)] = s; }
  const std::string& note(long id) const { return notes_.at(static_cast<std::size_t>(id)); }
  void set_note(long id, std::string n) { notes_[static_cast<std::size_t>(id)] = std::move(n); }

  const BlowupLog& log() const { return log_; }

  // Performs one blow-up; children ids are assigned in creation order.
  std::vector<long> blow_up(long id, const Center& center);

  // Coordinate change x_var := replacement; recorded as a log line with a
  // single child chart.
  long rectify(long id, std::size_t var, const Polynomial& replacement);

  std::vector<long> active_leaves() const;
  std::vector<long> reduced_leaves() const;

private:
  std::vector<Chart> charts_;
  std::vector<ChartStatus> status_;
  std::vector<std::string> notes_;
  std::map<long, std::vector<long>> children_;
  BlowupLog log_;
  long divisor_counter_ = 0;
  static const std::vector<long> no_children_;
};

// I = M(I) * N(I) along the chart divisors: per-divisor exponents and the
// residual factor.
struct MonomialSplit {
  std::vector<std::pair<std::string, long>> monomial_part; // (label, c_i)
  Ideal nonmonomial;
};

MonomialSplit split_monomial(const Chart& c);

// An order-1 element of MC(I) rectified to a coordinate: the hypersurface
// variable plus the substitution that was needed (if any).
struct ContactResult {
  std::size_t variable = 0;
  std::optional<std::pair<std::size_t, Polynomial>> substitution;
};

ContactResult find_maximal_contact(const Chart& c);

// Order reduction for ideals: blow up along order-m centers until the
// maximal order of the chart transforms drops below m = max_order at entry.
ChartTree bo_drive(const Chart& root);

// Order reduction for the marked ideal (I, m).
ChartTree bmo_drive(const Chart& root, long m);

// Pushes the order-m locus off the divisor with the given order index.
ChartTree bd_drive(const Chart& root, long m, long divisor_order_index);

struct LeafCertificate {
  long chart_id = 0;
  std::string status;
  std::vector<std::string> final_generators;
  std::vector<std::pair<std::string, long>> divisor_exponents;
};

struct PrincipalizeReport {
  ChartTree tree;
  std::vector<LeafCertificate> certificates;
};

// Runs marked order reduction at m = 1 and certifies each leaf: the final
// transform is the unit ideal and the pull-back is the recorded monomial
// in exceptional divisors.
PrincipalizeReport principalize(const Chart& root);

// Independent re-check used by tests and reports.
bool certify_reduced(const Chart& c, long m);

} // namespace prin

#endif
