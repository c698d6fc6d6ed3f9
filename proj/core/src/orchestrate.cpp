#include "prin/orchestrate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace prin {

const std::vector<long> ChartTree::no_children_{};

ChartTree::ChartTree(Chart root) {
  root.id = 0;
  root.parent = -1;
  if (root.lineage.empty()) root.lineage = "root";
  charts_.push_back(std::move(root));
  status_.push_back(ChartStatus::Active);
  notes_.push_back("");
  for (const auto& d : charts_[0].divisors)
    divisor_counter_ = std::max(divisor_counter_, d.order_index + 1);
}

const std::vector<long>& ChartTree::children_of(long id) const {
  auto it = children_.find(id);
  return it == children_.end() ? no_children_ : it->second;
}

std::vector<long> ChartTree::blow_up(long id, const Center& center) {
  if (log_.steps.size() >= global_limits().max_steps)
    throw resource_limit_error("blow-up budget exhausted");
  Chart& base = chart(id);
  std::string label = "E" + std::to_string(divisor_counter_ + 1);
  bool reuses_existing = false;
  if (!center.is_principal() && center.vars.size() == 1) {
    for (const auto& d : base.divisors)
      if (d.locus == std::optional<std::size_t>(center.vars[0])) {
        label = d.label;
        reuses_existing = true;
      }
  }
  BlowupFan fan = blowup_all_charts(base, center, label);
  if (!reuses_existing) ++divisor_counter_;

  LogStep step;
  step.step = static_cast<long>(log_.steps.size());
  step.chart_id = id;
  for (auto v : center.vars) step.center_vars.push_back(base.ring->name(v));
  if (center.is_principal())
    step.center_principal = center.principal->to_string();
  step.exponent_m = fan.exponent;
  step.new_divisor_label = label;

  std::vector<long> ids;
  for (auto& child : fan.children) {
    child.id = static_cast<long>(charts_.size());
    child.parent = id;
    child.lineage = "step " + std::to_string(step.step) + ", " + child.lineage;
    ids.push_back(child.id);
    step.children.push_back(child.id);
    charts_.push_back(std::move(child));
    status_.push_back(ChartStatus::Active);
    notes_.push_back("");
  }
  children_[id] = ids;
  log_.steps.push_back(std::move(step));
  return ids;
}

long ChartTree::rectify(long id, std::size_t var, const Polynomial& replacement) {
  if (log_.steps.size() >= global_limits().max_steps)
    throw resource_limit_error("blow-up budget exhausted");
  Chart& base = chart(id);
  for (const auto& d : base.divisors)
    if (d.locus == std::optional<std::size_t>(var))
      throw precondition_error("rectification would move divisor " + d.label);

  Chart child = base;
  child.id = static_cast<long>(charts_.size());
  child.parent = id;
  child.ideal = base.ideal.substitute(var, replacement);
  child.lineage = base.ring->name(var) + " := " + replacement.to_string();
  for (auto& d : child.divisors)
    if (d.principal.has_value())
      d.principal = d.principal->substitute(var, replacement);

  LogStep step;
  step.step = static_cast<long>(log_.steps.size());
  step.chart_id = id;
  step.subst_var = base.ring->name(var);
  step.subst_poly = replacement.to_string();
  step.children.push_back(child.id);

  children_[id] = {child.id};
  charts_.push_back(std::move(child));
  status_.push_back(ChartStatus::Active);
  notes_.push_back("");
  log_.steps.push_back(std::move(step));
  return static_cast<long>(charts_.size()) - 1;
}

std::vector<long> ChartTree::active_leaves() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (status_[i] == ChartStatus::Active &&
        children_of(static_cast<long>(i)).empty())
      out.push_back(static_cast<long>(i));
  return out;
}

std::vector<long> ChartTree::reduced_leaves() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (status_[i] == ChartStatus::Reduced) out.push_back(static_cast<long>(i));
  return out;
}

bool certify_reduced(const Chart& c, long m) {
  if (c.ideal.is_zero()) return false;
  return cosupport_ideal(c.ideal, m).contains_one();
}

MonomialSplit split_monomial(const Chart& c) {
  if (c.ideal.is_zero())
    throw precondition_error("split_monomial of the zero ideal");
  std::vector<Polynomial> gens = c.ideal.generators();
  MonomialSplit split{{}, c.ideal};
  for (const auto& d : c.divisors) {
    if (!d.locus.has_value()) continue;
    long a = -1;
    for (const auto& g : gens) {
      long k = g.var_order(*d.locus);
      if (a < 0 || k < a) a = k;
    }
    if (a < 0) a = 0;
    split.monomial_part.emplace_back(d.label, a);
    if (a > 0)
      for (auto& g : gens) g = g.divide_by_var_power(*d.locus, a);
  }
  split.nonmonomial = Ideal(c.ring, std::move(gens));
  return split;
}

namespace {

bool cosupp_empty(const Ideal& ideal, long m) {
  if (ideal.is_zero()) return false;
  return cosupport_ideal(ideal, m).contains_one();
}

// ---------------------------------------------------------------------------
// Views: a chart restricted along a chain of coordinate hyperplanes. The
// analysis recurses in the sub-ring; centers come back in ambient indices.

struct ViewDivisor {
  long order_index = 0;
  std::size_t locus = 0; // in view coordinates
  std::string label;
};

struct View {
  RingPtr ring;
  RingPtr ambient_ring;
  Ideal payload;
  std::vector<std::size_t> to_ambient; // view var -> ambient var
  std::vector<std::size_t> path;       // ambient vars already set to zero
  std::vector<ViewDivisor> divisors;   // those meeting the view, by order index
};

View root_view(const Chart& chart, Ideal payload) {
  View v{chart.ring, chart.ring, std::move(payload), {}, {}, {}};
  v.to_ambient.resize(chart.ring->size());
  for (std::size_t i = 0; i < v.to_ambient.size(); ++i) v.to_ambient[i] = i;
  for (const auto& d : chart.divisors)
    if (d.locus.has_value())
      v.divisors.push_back(ViewDivisor{d.order_index, *d.locus, d.label});
  std::sort(v.divisors.begin(), v.divisors.end(),
            [](const ViewDivisor& a, const ViewDivisor& b) {
              return a.order_index < b.order_index;
            });
  return v;
}

std::optional<View> restrict_view(const View& v, std::size_t var) {
  std::vector<std::string> names;
  std::vector<std::size_t> var_map(v.ring->size(), Ring::npos);
  for (std::size_t i = 0, j = 0; i < v.ring->size(); ++i) {
    if (i == var) continue;
    names.push_back(v.ring->name(i));
    var_map[i] = j++;
  }
  RingPtr sub = make_ring(std::move(names));

  std::vector<Polynomial> gens;
  for (const auto& f : v.payload.generators()) {
    Polynomial g = f.set_var_to_zero(var);
    if (!g.is_zero()) gens.push_back(g.map_ring(sub, var_map));
  }
  if (gens.empty()) return std::nullopt;

  View out{sub, v.ambient_ring, Ideal(sub, std::move(gens)), {}, v.path, {}};
  out.path.push_back(v.to_ambient[var]);
  for (std::size_t i = 0; i < v.ring->size(); ++i)
    if (i != var) out.to_ambient.push_back(v.to_ambient[i]);
  for (const auto& d : v.divisors) {
    if (d.locus == var) continue;
    out.divisors.push_back(ViewDivisor{d.order_index, var_map[d.locus], d.label});
  }
  return out;
}

View with_payload(const View& v, Ideal payload) {
  View out = v;
  out.payload = std::move(payload);
  return out;
}

// ---------------------------------------------------------------------------
// Actions produced by the per-chart analysis.

struct Action {
  enum Kind { kCenter, kRectify } kind = kCenter;
  Center center;                              // ambient
  std::size_t rect_var = 0;                   // ambient
  std::optional<Polynomial> rect_replacement; // ambient ring
};

Action center_action(const View& v, std::vector<std::size_t> view_vars) {
  Action a;
  a.kind = Action::kCenter;
  a.center.vars = v.path;
  for (auto i : view_vars) a.center.vars.push_back(v.to_ambient[i]);
  std::sort(a.center.vars.begin(), a.center.vars.end());
  return a;
}

Action rectify_action(const View& v, std::size_t view_var,
                      const Polynomial& replacement_in_view) {
  Action a;
  a.kind = Action::kRectify;
  a.rect_var = v.to_ambient[view_var];
  a.rect_replacement =
      replacement_in_view.map_ring(v.ambient_ring, v.to_ambient);
  return a;
}

constexpr int kMaxDepth = 32;

std::optional<Action> bmo_next(const View& v, long m, int depth);

// --- maximal contact -------------------------------------------------------

struct ContactScan {
  std::size_t variable = 0;
  std::optional<Polynomial> replacement;
};

// An order-1 element h of mc solvable as h = c*x_i + g with g free of x_i;
// failing that, one invertible linear change of variables. Non-divisor
// variables are preferred.
std::optional<ContactScan> scan_contact(const Ideal& mc,
                                        const std::set<std::size_t>& divisor_vars) {
  const RingPtr& ring = mc.ring();
  const auto& basis = mc.groebner_basis();
  auto solvable_in = [&](const Polynomial& h, std::size_t i) -> bool {
    Monomial xi(ring->size());
    xi[i] = 1;
    if (h.terms().find(xi) == h.terms().end()) return false;
    for (const auto& [mono, coeff] : h.terms())
      if (mono[i] > 0 && mono != xi) return false;
    return true;
  };
  auto make_result = [&](const Polynomial& h, std::size_t i) -> ContactScan {
    ContactScan r;
    r.variable = i;
    Monomial xi(ring->size());
    xi[i] = 1;
    Rational c = h.terms().at(xi);
    Polynomial g = h - Polynomial::term(ring, xi, c);
    if (!g.is_zero())
      r.replacement = Polynomial::variable(ring, i) - g * (Rational(1) / c);
    return r;
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& h : basis) {
      for (std::size_t i = 0; i < ring->size(); ++i) {
        bool is_divisor = divisor_vars.count(i) > 0;
        if ((pass == 0) == is_divisor) continue;
        if (solvable_in(h, i)) return make_result(h, i);
      }
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& h : basis) {
      Polynomial linear(ring);
      for (const auto& [mono, coeff] : h.terms())
        if (mono.degree() == 1) linear.add_term(mono, coeff);
      if (linear.is_zero()) continue;
      for (std::size_t i = 0; i < ring->size(); ++i) {
        bool is_divisor = divisor_vars.count(i) > 0;
        if ((pass == 0) == is_divisor) continue;
        Monomial xi(ring->size());
        xi[i] = 1;
        auto it = linear.terms().find(xi);
        if (it == linear.terms().end()) continue;
        Rational c = it->second;
        Polynomial rest = linear - Polynomial::term(ring, xi, c);
        if (rest.is_zero()) continue;
        Polynomial replacement =
            Polynomial::variable(ring, i) - rest * (Rational(1) / c);
        if (solvable_in(h.substitute(i, replacement), i)) {
          ContactScan r;
          r.variable = i;
          r.replacement = replacement;
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

// --- dimension-one base case ----------------------------------------------

std::vector<Rational> rational_root_candidates(const Polynomial& g) {
  Integer lcm_den = 1;
  for (const auto& [m, c] : g.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer constant = 0, lead = 0;
  long lead_deg = -1, low_deg = -1;
  for (const auto& [m, c] : g.terms()) {
    long d = m.degree();
    Rational scaled = c * Rational(lcm_den);
    if (lead_deg < 0 || d > lead_deg) {
      lead_deg = d;
      lead = scaled.get_num();
    }
    if (low_deg < 0 || d < low_deg) {
      low_deg = d;
      constant = scaled.get_num();
    }
  }
  auto divisors_of = [](Integer n) {
    std::vector<Integer> out;
    if (n < 0) n = -n;
    if (n == 0) return out;
    Integer bound = 1000000;
    for (Integer d = 1; d * d <= n && d <= bound; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    }
    return out;
  };
  std::vector<Rational> candidates;
  for (const auto& p : divisors_of(constant))
    for (const auto& q : divisors_of(lead)) {
      Rational r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const Rational& a, const Rational& b) {
              int c = cmp(abs(a), abs(b));
              if (c != 0) return c < 0;
              return cmp(a, b) > 0;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return candidates;
}

std::optional<Rational> find_rational_root(const Polynomial& g) {
  for (const auto& a : rational_root_candidates(g)) {
    Polynomial val = g.substitute(0, Polynomial::constant(g.ring(), a));
    if (val.is_zero()) return a;
  }
  return std::nullopt;
}

// Center for (payload, m) on a line: the origin when the cosupport passes
// through it, else a translation bringing a rational cosupport point there.
std::optional<Action> dim1_next(const View& v, long m) {
  Ideal cos = cosupport_ideal(v.payload, m);
  if (cos.contains_one()) return std::nullopt;
  const auto& basis = cos.groebner_basis();
  if (basis.empty())
    throw precondition_error("dimension-one cosupport is the whole line");
  const Polynomial& g = basis[0];
  if (g.var_order(0) > 0) return center_action(v, {0});
  std::optional<Rational> root = find_rational_root(g);
  if (!root.has_value())
    throw precondition_error(
        "dimension-one cosupport has no rational point within reach: " +
        g.to_string());
  Polynomial repl = Polynomial::variable(v.ring, 0) +
                    Polynomial::constant(v.ring, *root);
  return rectify_action(v, 0, repl);
}

// ---------------------------------------------------------------------------

std::optional<Action> bo_next(const View& v, long m_t, int depth);

// Separation of cosupp(payload, s) from divisor d: trivial blow-up when the
// whole divisor sits inside the cosupport, else restrict and recurse.
std::optional<Action> bd_next(const View& v, long s, const ViewDivisor& d,
                              int depth) {
  if (depth > kMaxDepth) throw resource_limit_error("recursion depth cap hit");
  long along = -1;
  for (const auto& g : v.payload.generators()) {
    long k = g.var_order(d.locus);
    if (along < 0 || k < along) along = k;
  }
  if (along >= s) return center_action(v, {d.locus});
  auto sub = restrict_view(v, d.locus);
  if (!sub.has_value())
    throw precondition_error("divisor " + d.label +
                             " lies in the cosupport below its marking");
  return bmo_next(*sub, s, depth + 1);
}

std::optional<Action> bo_next(const View& v, long m_t, int depth) {
  if (depth > kMaxDepth) throw resource_limit_error("recursion depth cap hit");
  if (cosupp_empty(v.payload, m_t)) return std::nullopt;
  if (v.ring->size() == 1) return dim1_next(v, m_t);

  if (m_t > 8)
    throw resource_limit_error("tuning order " + std::to_string(m_t) +
                               "! is beyond the desk-scale cap");
  long s = default_tuning_order(m_t);
  Ideal w = m_t == 1 ? v.payload : tune(v.payload, s);

  // Make cosupp(W, s) disjoint from each divisor, in E order.
  for (const auto& d : v.divisors) {
    Ideal test =
        ideal_sum(cosupport_ideal(w, s),
                  Ideal(v.ring, {Polynomial::variable(v.ring, d.locus)}));
    if (test.contains_one()) continue;
    return bd_next(with_payload(v, w), s, d, depth);
  }

  // Maximal contact; the hypersurface is then treated like a divisor.
  std::set<std::size_t> divisor_vars;
  for (const auto& d : v.divisors) divisor_vars.insert(d.locus);
  Ideal mc = derivative_ideal_r(w, s - 1);
  std::optional<ContactScan> contact = scan_contact(mc, divisor_vars);
  if (!contact.has_value()) {
    // Principal codimension-one fallback: the cosupport itself is a smooth
    // hypersurface (g = 0), blown up trivially.
    const auto& wb = w.groebner_basis();
    if (s == 1 && wb.size() == 1 && v.path.empty()) {
      const Polynomial& g = wb[0];
      std::vector<Polynomial> jac = {g};
      for (std::size_t i = 0; i < v.ring->size(); ++i)
        jac.push_back(g.derivative(i));
      if (Ideal(v.ring, jac).contains_one()) {
        Action a;
        a.kind = Action::kCenter;
        a.center.principal = g;
        return a;
      }
    }
    throw precondition_error("non-rectifiable maximal contact");
  }
  if (contact->replacement.has_value())
    return rectify_action(v, contact->variable, *contact->replacement);

  std::size_t h = contact->variable;
  long along = -1;
  for (const auto& g : w.generators()) {
    long k = g.var_order(h);
    if (along < 0 || k < along) along = k;
  }
  if (along >= s) return center_action(v, {h});
  auto sub = restrict_view(with_payload(v, w), h);
  if (!sub.has_value())
    throw precondition_error(
        "restriction to the maximal contact hypersurface is zero");
  return bmo_next(*sub, s, depth + 1);
}

std::optional<Action> bmo_next(const View& v, long m, int depth) {
  if (depth > kMaxDepth) throw resource_limit_error("recursion depth cap hit");
  if (cosupp_empty(v.payload, m)) return std::nullopt;
  if (v.ring->size() == 1) return dim1_next(v, m);

  // Split I = M(I) * N(I) along the view divisors.
  std::vector<Polynomial> ngens = v.payload.generators();
  std::vector<long> coeff(v.divisors.size(), 0);
  for (std::size_t di = 0; di < v.divisors.size(); ++di) {
    long a = -1;
    for (const auto& g : ngens) {
      long k = g.var_order(v.divisors[di].locus);
      if (a < 0 || k < a) a = k;
    }
    coeff[di] = std::max<long>(a, 0);
    if (coeff[di] > 0)
      for (auto& g : ngens)
        g = g.divide_by_var_power(v.divisors[di].locus, coeff[di]);
  }
  Ideal n_part(v.ring, ngens);

  // Step 1: reduce the order of the nonmonomial part below m.
  bool n_unit = n_part.contains_one();
  long mn = 0;
  if (!n_unit) {
    mn = max_order(n_part);
    if (mn >= m) return bo_next(with_payload(v, n_part), mn, depth);
  }

  // Step 2: separate cosupp(I, m) from cosupp(N, s) via N^m + I^s.
  if (!n_unit && mn >= 1) {
    for (long s = mn; s >= 1; --s) {
      Ideal trick =
          ideal_sum(ideal_power(n_part, static_cast<unsigned long>(m)),
                    ideal_power(v.payload, static_cast<unsigned long>(s)));
      if (cosupp_empty(trick, m * s)) continue;
      long mk = max_order(trick);
      return bo_next(with_payload(v, trick), mk, depth);
    }
  }

  // Step 3: combinatorial reduction of the monomial part, phases over the
  // ordered divisor list; ties resolved lexicographically in E order.
  for (std::size_t r = 1; r <= v.ring->size() && r <= v.divisors.size(); ++r) {
    long best_sum = -1;
    std::vector<std::size_t> best;
    std::vector<std::size_t> comb;
    std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
      if (comb.size() == r) {
        long sum = 0;
        for (auto p : comb) sum += coeff[p];
        if (sum >= m && sum > best_sum) {
          best_sum = sum;
          best = comb;
        }
        return;
      }
      for (std::size_t p = start; p < v.divisors.size(); ++p) {
        comb.push_back(p);
        enumerate(p + 1);
        comb.pop_back();
      }
    };
    enumerate(0);
    if (best_sum >= m) {
      std::vector<std::size_t> vars;
      for (auto p : best) vars.push_back(v.divisors[p].locus);
      return center_action(v, vars);
    }
  }

  // Residual nonmonomial cosupport: principal smooth hypersurface.
  if (!n_unit && v.path.empty()) {
    const auto& nb = n_part.groebner_basis();
    if (nb.size() == 1) {
      const Polynomial& g = nb[0];
      std::vector<Polynomial> jac = {g};
      for (std::size_t i = 0; i < v.ring->size(); ++i)
        jac.push_back(g.derivative(i));
      if (Ideal(v.ring, jac).contains_one() &&
          principal_order(v.payload, g) >= m) {
        Action a;
        a.kind = Action::kCenter;
        a.center.principal = g;
        return a;
      }
    }
  }
  throw precondition_error(
      "marked order reduction found no applicable center on this chart");
}

enum class DriveKind { BO, BMO, BD };

struct DriveConfig {
  DriveKind kind;
  long m = 1;
  long divisor_index = 0; // bd only
};

void drive(ChartTree& tree, const DriveConfig& cfg) {
  std::vector<long> stack = {0};
  while (!stack.empty()) {
    long id = stack.back();
    stack.pop_back();
    const Chart& c = tree.chart(id);

    std::optional<Action> act;
    View v = root_view(c, c.ideal);
    switch (cfg.kind) {
      case DriveKind::BO:
        act = cosupp_empty(c.ideal, cfg.m) ? std::nullopt
                                           : bo_next(v, cfg.m, 0);
        break;
      case DriveKind::BMO:
        act = bmo_next(v, cfg.m, 0);
        break;
      case DriveKind::BD: {
        const ViewDivisor* target = nullptr;
        for (const auto& d : v.divisors)
          if (d.order_index == cfg.divisor_index) target = &d;
        if (target == nullptr) {
          act = std::nullopt; // divisor does not meet the chart: vacuous
        } else {
          Ideal test = ideal_sum(
              cosupport_ideal(c.ideal, cfg.m),
              Ideal(c.ring, {Polynomial::variable(c.ring, target->locus)}));
          act = test.contains_one() ? std::nullopt
                                    : bd_next(v, cfg.m, *target, 0);
        }
        break;
      }
    }

    if (!act.has_value()) {
      bool ok = cfg.kind == DriveKind::BD || certify_reduced(c, cfg.m);
      tree.set_status(id, ok ? ChartStatus::Reduced : ChartStatus::Error);
      if (!ok) tree.set_note(id, "certificate re-check failed");
      continue;
    }
    if (act->kind == Action::kRectify) {
      stack.push_back(tree.rectify(id, act->rect_var, *act->rect_replacement));
      continue;
    }
    std::vector<long> children = tree.blow_up(id, act->center);
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(*it);
  }
}

} // namespace

ContactResult find_maximal_contact(const Chart& c) {
  long m = max_order(c.ideal);
  if (m < 1) throw precondition_error("find_maximal_contact needs order >= 1");
  Ideal mc = derivative_ideal_r(c.ideal, m - 1);
  std::set<std::size_t> divisor_vars;
  for (const auto& d : c.divisors)
    if (d.locus.has_value()) divisor_vars.insert(*d.locus);
  std::optional<ContactScan> scan = scan_contact(mc, divisor_vars);
  if (!scan.has_value())
    throw precondition_error("non-rectifiable maximal contact");
  ContactResult r;
  r.variable = scan->variable;
  if (scan->replacement.has_value())
    r.substitution = std::make_pair(scan->variable, *scan->replacement);
  return r;
}

ChartTree bo_drive(const Chart& root) {
  Chart r = root;
  r.marking.reset();
  long m = r.ideal.is_zero() ? 0 : max_order(r.ideal);
  ChartTree tree(std::move(r));
  if (m == 0) {
    tree.set_status(0, ChartStatus::Reduced);
    return tree;
  }
  drive(tree, DriveConfig{DriveKind::BO, m, 0});
  return tree;
}

ChartTree bmo_drive(const Chart& root, long m) {
  if (m < 1) throw precondition_error("bmo_drive requires m >= 1");
  Chart r = root;
  r.marking = m;
  ChartTree tree(std::move(r));
  drive(tree, DriveConfig{DriveKind::BMO, m, 0});
  return tree;
}

ChartTree bd_drive(const Chart& root, long m, long divisor_order_index) {
  if (m < 1) throw precondition_error("bd_drive requires m >= 1");
  Chart r = root;
  r.marking = m;
  ChartTree tree(std::move(r));
  drive(tree, DriveConfig{DriveKind::BD, m, divisor_order_index});
  return tree;
}

PrincipalizeReport principalize(const Chart& root) {
  if (root.ideal.is_zero())
    throw precondition_error("principalize of the zero ideal");
  PrincipalizeReport report{bmo_drive(root, 1), {}};
  for (std::size_t i = 0; i < report.tree.size(); ++i) {
    long id = static_cast<long>(i);
    if (!report.tree.children_of(id).empty()) continue;
    const Chart& c = report.tree.chart(id);
    LeafCertificate cert;
    cert.chart_id = id;
    bool unit = c.ideal.contains_one();
    bool reduced = report.tree.status(id) == ChartStatus::Reduced;
    cert.status = (unit && reduced && certify_reduced(c, 1)) ? "reduced" : "error";
    for (const auto& g : c.ideal.groebner_basis())
      cert.final_generators.push_back(g.to_string());
    for (const auto& d : c.divisors)
      cert.divisor_exponents.emplace_back(d.label, d.pullback_multiplicity);
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

} // namespace prin
