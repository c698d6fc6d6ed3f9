#include "prin/blowup.hpp"

#include <algorithm>
#include <cctype>

namespace prin {

std::string bump_name(const std::string& name) {
  auto pos = name.rfind('_');
  if (pos != std::string::npos && pos + 1 < name.size()) {
    bool digits = true;
    for (std::size_t i = pos + 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) {
      long gen = std::stol(name.substr(pos + 1));
      return name.substr(0, pos + 1) + std::to_string(gen + 1);
    }
  }
  return name + "_1";
}

RingPtr bump_generation(const RingPtr& ring) {
  std::vector<std::string> names;
  names.reserve(ring->size());
  for (const auto& n : ring->names()) names.push_back(bump_name(n));
  return make_ring(std::move(names));
}

long center_order(const Ideal& ideal, const Center& center) {
  if (ideal.is_zero())
    throw precondition_error("center_order of the zero ideal");
  if (center.is_principal()) return principal_order(ideal, *center.principal);
  if (center.vars.empty())
    throw precondition_error("empty blow-up center");
  Ord o = ideal.ord_along_subspace(center.vars);
  return *o;
}

long principal_order(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero() || g.is_constant())
    throw precondition_error("principal center must be a nonconstant polynomial");
  long best = -1;
  for (const auto& f : ideal.generators()) {
    long k = 0;
    Polynomial cur = f;
    while (true) {
      auto q = cur.divide_exact(g);
      if (!q.has_value()) break;
      cur = *q;
      ++k;
      if (best >= 0 && k >= best) break;
    }
    if (best < 0 || k < best) best = k;
    if (best == 0) break;
  }
  return best < 0 ? 0 : best;
}

namespace {

// Divisors through the center contribute their accumulated multiplicity to
// the new exceptional divisor's pull-back exponent.
long pullback_through_center(const Chart& c, const Center& z) {
  long sum = 0;
  for (const auto& d : c.divisors) {
    if (d.locus.has_value()) {
      if (!z.is_principal() &&
          std::find(z.vars.begin(), z.vars.end(), *d.locus) != z.vars.end())
        sum += d.pullback_multiplicity;
    } else if (d.principal.has_value() && !z.is_principal()) {
      Polynomial g = *d.principal;
      for (auto v : z.vars) g = g.set_var_to_zero(v);
      if (g.is_zero()) sum += d.pullback_multiplicity;
    }
  }
  return sum;
}

long next_order_index(const Chart& c) {
  long idx = 0;
  for (const auto& d : c.divisors) idx = std::max(idx, d.order_index + 1);
  return idx;
}

Chart trivial_blowup(const Chart& c, const Center& z, long mu,
                     const std::string& divisor_label) {
  Chart child(c.ring, c.ideal);
  child.parent = c.id;
  child.depth = c.depth + 1;
  child.marking = c.marking;
  child.divisors = c.divisors;

  std::vector<Polynomial> gens;
  if (z.is_principal()) {
    const Polynomial& g = *z.principal;
    for (const auto& f : c.ideal.generators()) {
      Polynomial cur = f;
      for (long i = 0; i < mu; ++i) {
        auto q = cur.divide_exact(g);
        if (!q.has_value())
          throw precondition_error(
              "trivial blow-up: generator " + f.to_string() +
              " not divisible by (" + g.to_string() + ")^" + std::to_string(mu));
        cur = *q;
      }
      gens.push_back(cur);
    }
  } else {
    std::size_t v = z.vars[0];
    for (const auto& f : c.ideal.generators()) {
      if (f.var_order(v) < mu)
        throw precondition_error("trivial blow-up: generator " + f.to_string() +
                                 " not divisible by " + c.ring->name(v) + "^" +
                                 std::to_string(mu));
      gens.push_back(f.divide_by_var_power(v, mu));
    }
  }
  child.ideal = Ideal(c.ring, std::move(gens));
  child.lineage = "trivial";

  // The map is the identity, so no old divisor is pulled through; only the
  // division exponent accumulates.
  if (!z.is_principal()) {
    // Re-use an existing record at the same locus instead of duplicating it.
    for (auto& d : child.divisors) {
      if (d.locus == std::optional<std::size_t>(z.vars[0])) {
        d.pullback_multiplicity += mu;
        return child;
      }
    }
  }
  DivisorRecord rec;
  rec.label = divisor_label;
  rec.order_index = next_order_index(c);
  if (z.is_principal())
    rec.principal = *z.principal;
  else
    rec.locus = z.vars[0];
  rec.pullback_multiplicity = mu;
  child.divisors.push_back(rec);
  return child;
}

} // namespace

Chart blowup_chart_with_exponent(const Chart& c, const Center& z,
                                 std::size_t k, long mu,
                                 const std::string& divisor_label) {
  if (z.is_codim1()) return trivial_blowup(c, z, mu, divisor_label);
  if (std::find(z.vars.begin(), z.vars.end(), k) == z.vars.end())
    throw precondition_error("chart variable must belong to the center");
  for (auto v : z.vars)
    if (v >= c.ring->size())
      throw precondition_error("center variable out of range");

  RingPtr new_ring = bump_generation(c.ring);
  Polynomial yk = Polynomial::variable(new_ring, k);

  std::vector<std::size_t> identity(c.ring->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;

  std::vector<Polynomial> gens;
  for (const auto& f : c.ideal.generators()) {
    Polynomial g = f.map_ring(new_ring, identity);
    for (auto v : z.vars) {
      if (v == k) continue;
      g = g.substitute(v, Polynomial::variable(new_ring, v) * yk);
    }
    if (g.var_order(k) < mu)
      throw precondition_error(
          "blow-up: transform of " + f.to_string() + " not divisible by " +
          new_ring->name(k) + "^" + std::to_string(mu) +
          " (order along the center is below the required exponent)");
    gens.push_back(g.divide_by_var_power(k, mu));
  }

  Chart child(new_ring, Ideal(new_ring, std::move(gens)));
  child.parent = c.id;
  child.depth = c.depth + 1;
  child.marking = c.marking;
  child.lineage = c.ring->name(k) + "-chart";

  long carried = pullback_through_center(c, z);
  for (const auto& d : c.divisors) {
    DivisorRecord rec = d;
    if (d.locus.has_value() && *d.locus == k) {
      rec.locus.reset(); // the divisor leaves this chart
    } else if (d.principal.has_value()) {
      Polynomial g = d.principal->map_ring(new_ring, identity);
      for (auto v : z.vars) {
        if (v == k) continue;
        g = g.substitute(v, Polynomial::variable(new_ring, v) * yk);
      }
      long e = g.var_order(k);
      if (e > 0) g = g.divide_by_var_power(k, e);
      if (g.is_constant())
        rec.principal.reset();
      else
        rec.principal = g;
    }
    child.divisors.push_back(std::move(rec));
  }
  DivisorRecord rec;
  rec.label = divisor_label;
  rec.order_index = next_order_index(c);
  rec.locus = k;
  rec.pullback_multiplicity = mu + carried;
  child.divisors.push_back(std::move(rec));
  return child;
}

Chart blowup_chart(const Chart& c, const Center& z, std::size_t k,
                   const std::string& divisor_label) {
  long mu = c.marking.has_value() ? *c.marking : center_order(c.ideal, z);
  return blowup_chart_with_exponent(c, z, k, mu, divisor_label);
}

Chart unmarked_transform(const Chart& c, const Center& z, std::size_t k,
                         const std::string& divisor_label) {
  return blowup_chart_with_exponent(c, z, k, center_order(c.ideal, z),
                                    divisor_label);
}

BlowupFan blowup_all_charts(const Chart& c, const Center& z,
                            const std::string& divisor_label) {
  BlowupFan fan;
  fan.exponent = c.marking.has_value() ? *c.marking : center_order(c.ideal, z);
  if (z.is_codim1()) {
    fan.children.push_back(
        blowup_chart_with_exponent(c, z, 0, fan.exponent, divisor_label));
    return fan;
  }
  for (auto k : z.vars)
    fan.children.push_back(
        blowup_chart_with_exponent(c, z, k, fan.exponent, divisor_label));
  return fan;
}

std::vector<Chart> replay_log(const Chart& root, const BlowupLog& log) {
  std::vector<Chart> charts;
  charts.push_back(root);
  charts[0].id = 0;
  for (const auto& s : log.steps) {
    if (s.chart_id < 0 || s.chart_id >= static_cast<long>(charts.size()))
      throw precondition_error("replay: unknown chart id");
    const Chart base = charts[static_cast<std::size_t>(s.chart_id)];
    if (s.subst_var.has_value()) {
      std::size_t var = base.ring->index_of(*s.subst_var);
      if (var == Ring::npos)
        throw precondition_error("replay: unknown substitution variable");
      Polynomial repl = parse_polynomial(*s.subst_poly, base.ring);
      Chart child = base;
      child.parent = base.id;
      child.ideal = base.ideal.substitute(var, repl);
      child.lineage = *s.subst_var + " := " + *s.subst_poly;
      if (s.children.size() != 1 ||
          s.children[0] != static_cast<long>(charts.size()))
        throw precondition_error("replay: chart ids not in creation order");
      child.id = s.children[0];
      charts.push_back(std::move(child));
      continue;
    }
    Center z;
    if (s.center_principal.has_value())
      z.principal = parse_polynomial(*s.center_principal, base.ring);
    for (const auto& name : s.center_vars) {
      std::size_t idx = base.ring->index_of(name);
      if (idx == Ring::npos)
        throw precondition_error("replay: center variable '" + name +
                                 "' not in chart ring");
      z.vars.push_back(idx);
    }
    std::vector<std::size_t> chart_vars = z.is_codim1()
                                              ? std::vector<std::size_t>{0}
                                              : z.vars;
    if (chart_vars.size() != s.children.size())
      throw precondition_error("replay: child count mismatch");
    for (std::size_t i = 0; i < chart_vars.size(); ++i) {
      Chart child = blowup_chart_with_exponent(base, z, chart_vars[i],
                                               s.exponent_m,
                                               s.new_divisor_label);
      child.id = s.children[i];
      if (child.id != static_cast<long>(charts.size()))
        throw precondition_error("replay: chart ids not in creation order");
      charts.push_back(std::move(child));
    }
  }
  return charts;
}

Chart restrict_to_hypersurface(const Chart& c, std::size_t var) {
  if (var >= c.ring->size())
    throw precondition_error("restriction variable out of range");
  std::vector<std::string> names;
  std::vector<std::size_t> var_map(c.ring->size(), Ring::npos);
  for (std::size_t i = 0, j = 0; i < c.ring->size(); ++i) {
    if (i == var) continue;
    names.push_back(c.ring->name(i));
    var_map[i] = j++;
  }
  RingPtr sub = make_ring(std::move(names));

  std::vector<Polynomial> gens;
  for (const auto& f : c.ideal.generators()) {
    Polynomial g = f.set_var_to_zero(var);
    if (!g.is_zero()) gens.push_back(g.map_ring(sub, var_map));
  }
  if (gens.empty())
    throw precondition_error("restriction of the chart ideal to " +
                             c.ring->name(var) + " = 0 is zero");

  Chart child(sub, Ideal(sub, std::move(gens)));
  child.parent = c.id;
  child.depth = c.depth;
  child.marking = c.marking;
  child.lineage = c.ring->name(var) + " = 0";
  for (const auto& d : c.divisors) {
    if (d.locus == std::optional<std::size_t>(var)) continue;
    DivisorRecord rec = d;
    if (rec.locus.has_value()) rec.locus = var_map[*rec.locus];
    if (rec.principal.has_value()) {
      Polynomial g = rec.principal->set_var_to_zero(var);
      if (g.is_zero() || g.is_constant())
        rec.principal.reset();
      else
        rec.principal = g.map_ring(sub, var_map);
    }
    child.divisors.push_back(std::move(rec));
  }
  return child;
}

} // namespace prin
