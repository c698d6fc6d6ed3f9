#include "prin/json_io.hpp"

#include <sstream>

#include "prin/monomial.hpp"

#include <json.hpp>

using nlohmann::json;
using nlohmann::ordered_json;

namespace prin {

std::string log_to_jsonl(const BlowupLog& log) {
  std::ostringstream os;
  for (const auto& s : log.steps) {
    ordered_json j;
    j["step"] = s.step;
    j["chart_id"] = s.chart_id;
    j["center_vars"] = s.center_vars;
    if (s.center_principal.has_value())
      j["center_principal"] = *s.center_principal;
    j["exponent_m"] = s.exponent_m;
    j["children"] = s.children;
    j["new_divisor_label"] = s.new_divisor_label;
    if (s.subst_var.has_value()) {
      j["subst_var"] = *s.subst_var;
      j["subst_poly"] = *s.subst_poly;
    }
    os << j.dump() << "\n";
  }
  return os.str();
}

BlowupLog log_from_jsonl(const std::string& text) {
  BlowupLog log;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    LogStep s;
    s.step = j.at("step").get<long>();
    s.chart_id = j.at("chart_id").get<long>();
    s.center_vars = j.at("center_vars").get<std::vector<std::string>>();
    if (j.contains("center_principal"))
      s.center_principal = j.at("center_principal").get<std::string>();
    s.exponent_m = j.at("exponent_m").get<long>();
    s.children = j.at("children").get<std::vector<long>>();
    s.new_divisor_label = j.at("new_divisor_label").get<std::string>();
    if (j.contains("subst_var")) {
      s.subst_var = j.at("subst_var").get<std::string>();
      s.subst_poly = j.at("subst_poly").get<std::string>();
    }
    log.steps.push_back(std::move(s));
  }
  return log;
}

ProblemSpec problem_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  ProblemSpec spec;
  spec.vars = j.at("vars").get<std::vector<std::string>>();
  spec.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("marking") && !j.at("marking").is_null())
    spec.marking = j.at("marking").get<long>();
  if (j.contains("divisors") && !j.at("divisors").is_null())
    for (const auto& d : j.at("divisors"))
      spec.divisors.emplace_back(d.at("var").get<std::string>(),
                                 d.at("label").get<std::string>());
  if (j.contains("tuning_order") && !j.at("tuning_order").is_null())
    spec.tuning_order = j.at("tuning_order").get<long>();
  if (spec.generators.empty())
    throw precondition_error("problem spec needs at least one generator");
  return spec;
}

std::string problem_spec_to_json(const ProblemSpec& spec) {
  ordered_json j;
  j["vars"] = spec.vars;
  j["generators"] = spec.generators;
  if (spec.marking.has_value()) j["marking"] = *spec.marking;
  if (!spec.divisors.empty()) {
    json arr = json::array();
    for (const auto& [var, label] : spec.divisors)
      arr.push_back({{"var", var}, {"label", label}});
    j["divisors"] = arr;
  }
  if (spec.tuning_order.has_value()) j["tuning_order"] = *spec.tuning_order;
  return j.dump();
}

Chart chart_from_spec(const ProblemSpec& spec) {
  RingPtr ring = make_ring(spec.vars);
  std::vector<Polynomial> gens;
  for (const auto& g : spec.generators)
    gens.push_back(parse_polynomial(g, ring));
  Chart chart(ring, Ideal(ring, std::move(gens)));
  if (chart.ideal.is_zero())
    throw precondition_error("the chart ideal is zero");
  chart.marking = spec.marking;
  long idx = 0;
  for (const auto& [var, label] : spec.divisors) {
    std::size_t v = ring->index_of(var);
    if (v == Ring::npos)
      throw precondition_error("divisor variable '" + var + "' not in ring");
    for (const auto& d : chart.divisors)
      if (d.locus == std::optional<std::size_t>(v))
        throw precondition_error("duplicate divisor variable '" + var + "'");
    DivisorRecord rec;
    rec.label = label;
    rec.order_index = idx++;
    rec.locus = v;
    chart.divisors.push_back(std::move(rec));
  }
  chart.lineage = "root";
  return chart;
}

std::string certificates_to_json(const std::vector<LeafCertificate>& certs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : certs) {
    ordered_json j;
    j["chart_id"] = c.chart_id;
    j["status"] = c.status;
    j["final_generators"] = c.final_generators;
    ordered_json divs = ordered_json::array();
    for (const auto& [label, exp] : c.divisor_exponents)
      divs.push_back({{"label", label}, {"exponent", exp}});
    j["divisor_exponents"] = divs;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string arrangement_to_json(const Arrangement& a, long m) {
  ordered_json j;
  j["m"] = m;
  ordered_json divs = ordered_json::array();
  for (const auto& d : a.divisors)
    divs.push_back({{"label", d.label}, {"a", d.a}});
  j["divisors"] = divs;
  // List the maximal intersecting sets only.
  ordered_json cx = ordered_json::array();
  for (const auto& s : a.complex) {
    bool maximal = true;
    for (const auto& t : a.complex) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) cx.push_back(s);
  }
  j["complex"] = cx;
  return j.dump();
}

std::pair<Arrangement, long> arrangement_from_json(const std::string& text) {
  json j = json::parse(text);
  long m = j.at("m").get<long>();
  std::vector<Arrangement::Divisor> divisors;
  for (const auto& d : j.at("divisors"))
    divisors.push_back(
        {d.at("label").get<std::string>(), d.at("a").get<long>()});
  std::vector<std::vector<std::size_t>> maximal;
  if (j.contains("complex"))
    maximal = j.at("complex").get<std::vector<std::vector<std::size_t>>>();
  long n = j.contains("n") ? j.at("n").get<long>()
                           : static_cast<long>(divisors.size());
  std::size_t largest = 0;
  for (const auto& s : maximal) largest = std::max(largest, s.size());
  n = std::max<long>(n, static_cast<long>(largest));
  return {make_arrangement(n, std::move(divisors), maximal), m};
}

} // namespace prin
