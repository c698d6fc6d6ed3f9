#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prin/derive.hpp"
#include "prin/json_io.hpp"
#include "prin/monomial.hpp"
#include "prin/orchestrate.hpp"

using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw prin::precondition_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string ord_string(const prin::Ord& o) {
  return o.has_value() ? std::to_string(*o) : "infinity";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> resolve_vars(const prin::RingPtr& ring,
                                      const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    std::size_t i = ring->index_of(n);
    if (i == prin::Ring::npos)
      throw prin::precondition_error("unknown variable '" + n + "'");
    out.push_back(i);
  }
  return out;
}

void print_ideal(const prin::Ideal& ideal, bool as_json, const char* key) {
  if (as_json) {
    ordered_json j;
    std::vector<std::string> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    j[key] = gens;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& g : ideal.generators()) std::cout << g.to_string() << "\n";
  }
}

void print_tree(const prin::ChartTree& tree, bool as_json) {
  if (as_json) {
    std::cout << prin::log_to_jsonl(tree.log());
    return;
  }
  for (const auto& s : tree.log().steps) {
    std::cout << "step " << s.step << ": chart " << s.chart_id;
    if (s.subst_var.has_value()) {
      std::cout << ", substitute " << *s.subst_var << " := " << *s.subst_poly;
    } else if (s.center_principal.has_value()) {
      std::cout << ", center (" << *s.center_principal << " = 0)"
                << ", exponent " << s.exponent_m;
    } else {
      std::cout << ", center (";
      for (std::size_t i = 0; i < s.center_vars.size(); ++i)
        std::cout << (i ? " = " : "") << s.center_vars[i];
      std::cout << " = 0), exponent " << s.exponent_m << ", divisor "
                << s.new_divisor_label;
    }
    std::cout << " -> charts";
    for (auto c : s.children) std::cout << " " << c;
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    long id = static_cast<long>(i);
    if (!tree.children_of(id).empty()) continue;
    const prin::Chart& c = tree.chart(id);
    std::cout << "chart " << id << " ["
              << (tree.status(id) == prin::ChartStatus::Reduced ? "reduced"
                                                                : "active/error")
              << "] vars (";
    for (std::size_t v = 0; v < c.ring->size(); ++v)
      std::cout << (v ? "," : "") << c.ring->name(v);
    std::cout << "): ";
    bool first = true;
    for (const auto& g : c.ideal.generators()) {
      std::cout << (first ? "" : ", ") << g.to_string();
      first = false;
    }
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact principalization toolkit for polynomial ideals"};
  app.require_subcommand(1);

  std::string spec_path;
  bool as_json = false;
  long opt_r = 1;
  long opt_s = 0;
  long opt_m = 0;
  std::string opt_center;
  std::string opt_chart;
  std::string opt_along;
  long max_steps = 0, max_degree = 0, max_generators = 0;

  auto add_common = [&](CLI::App* cmd, bool takes_spec = true) {
    if (takes_spec)
      cmd->add_option("spec", spec_path, "JSON problem file")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
    cmd->add_option("--max-steps", max_steps, "blow-up step cap");
    cmd->add_option("--max-degree", max_degree, "total degree cap");
    cmd->add_option("--max-generators", max_generators, "generator cap");
  };

  auto* c_ord = app.add_subcommand("ord", "order at the origin / along a subspace");
  add_common(c_ord);
  c_ord->add_option("--along", opt_along, "comma-separated variables");

  auto* c_derive = app.add_subcommand("derive", "iterated derivative ideal");
  add_common(c_derive);
  c_derive->add_option("--r", opt_r, "number of derivatives");

  auto* c_mc = app.add_subcommand("mc", "maximal contact ideal");
  add_common(c_mc);

  auto* c_tune = app.add_subcommand("tune", "maximal coefficient ideal W_s");
  add_common(c_tune);
  c_tune->add_option("--s", opt_s, "tuning order (default m!)");

  auto* c_dbal = app.add_subcommand("dbalanced", "test the D-balanced condition");
  add_common(c_dbal);

  auto* c_mci = app.add_subcommand("mcinvariant", "test MC-invariance");
  add_common(c_mci);

  auto* c_blow = app.add_subcommand("blowup", "one chart of one blow-up");
  add_common(c_blow);
  c_blow->add_option("--center", opt_center, "comma-separated center variables")
      ->required();
  c_blow->add_option("--chart", opt_chart, "chart variable")->required();

  auto* c_mon = app.add_subcommand("reduce-monomial",
                                   "combinatorial order reduction (arrangement JSON)");
  add_common(c_mon);

  auto* c_bo = app.add_subcommand("bo", "order reduction for the ideal");
  add_common(c_bo);

  auto* c_bmo = app.add_subcommand("bmo", "order reduction for the marked ideal");
  add_common(c_bmo);
  c_bmo->add_option("--m", opt_m, "marking (defaults to the spec's)");

  auto* c_pri = app.add_subcommand("principalize", "full principalization");
  add_common(c_pri);

  CLI11_PARSE(app, argc, argv);

  if (max_steps > 0) prin::global_limits().max_steps = static_cast<std::size_t>(max_steps);
  if (max_degree > 0) prin::global_limits().max_total_degree = max_degree;
  if (max_generators > 0)
    prin::global_limits().max_generators = static_cast<std::size_t>(max_generators);

  auto load_chart = [&]() {
    return prin::chart_from_spec(prin::problem_spec_from_json(slurp(spec_path)));
  };

  if (c_ord->parsed()) {
    prin::Chart chart = load_chart();
    ordered_json j;
    j["ord_at_origin"] = ord_string(chart.ideal.ord_at_origin());
    j["max_order"] = prin::max_order(chart.ideal);
    if (!opt_along.empty()) {
      auto vars = resolve_vars(chart.ring, split_csv(opt_along));
      j["ord_along"] = ord_string(chart.ideal.ord_along_subspace(vars));
    }
    if (as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << j["ord_at_origin"].get<std::string>() << "\n";
      if (j.contains("ord_along"))
        std::cout << "along: " << j["ord_along"].get<std::string>() << "\n";
    }
    return 0;
  }
  if (c_derive->parsed()) {
    prin::Chart chart = load_chart();
    print_ideal(prin::derivative_ideal_r(chart.ideal, opt_r), as_json, "derive");
    return 0;
  }
  if (c_mc->parsed()) {
    prin::Chart chart = load_chart();
    print_ideal(prin::mc_ideal(chart.ideal), as_json, "mc");
    return 0;
  }
  if (c_tune->parsed()) {
    prin::Chart chart = load_chart();
    long s = opt_s > 0 ? opt_s
                       : prin::default_tuning_order(prin::max_order(chart.ideal));
    print_ideal(prin::tune(chart.ideal, s), as_json, "tune");
    return 0;
  }
  if (c_dbal->parsed()) {
    prin::Chart chart = load_chart();
    std::cout << (prin::is_D_balanced(chart.ideal) ? "true" : "false") << "\n";
    return 0;
  }
  if (c_mci->parsed()) {
    prin::Chart chart = load_chart();
    std::cout << (prin::is_MC_invariant(chart.ideal) ? "true" : "false") << "\n";
    return 0;
  }
  if (c_blow->parsed()) {
    prin::Chart chart = load_chart();
    prin::Center center;
    center.vars = resolve_vars(chart.ring, split_csv(opt_center));
    std::size_t k = resolve_vars(chart.ring, {opt_chart})[0];
    prin::Chart child = prin::blowup_chart(chart, center, k, "E1");
    if (as_json) {
      ordered_json j;
      std::vector<std::string> gens;
      for (const auto& g : child.ideal.generators()) gens.push_back(g.to_string());
      j["vars"] = child.ring->names();
      j["generators"] = gens;
      ordered_json divs = ordered_json::array();
      for (const auto& d : child.divisors) {
        ordered_json dj;
        dj["label"] = d.label;
        dj["order_index"] = d.order_index;
        if (d.locus.has_value()) dj["var"] = child.ring->name(*d.locus);
        divs.push_back(dj);
      }
      j["divisors"] = divs;
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& g : child.ideal.generators())
        std::cout << g.to_string() << "\n";
    }
    return 0;
  }
  if (c_mon->parsed()) {
    auto [arrangement, m] = prin::arrangement_from_json(slurp(spec_path));
    auto [final_arr, trace] = prin::reduce_monomial(arrangement, m);
    if (as_json) {
      std::cout << prin::arrangement_to_json(final_arr, m) << "\n";
    } else {
      for (const auto& mv : trace.moves) {
        std::cout << "codim " << mv.codim << " blow-up of (";
        for (std::size_t i = 0; i < mv.tuple.size(); ++i)
          std::cout << (i ? "," : "") << final_arr.divisors[mv.tuple[i]].label;
        std::cout << ")";
        if (mv.codim > 1) std::cout << " -> coefficient " << mv.new_coefficient;
        std::cout << "\n";
      }
      std::cout << "final coefficients:";
      for (const auto& d : final_arr.divisors) std::cout << " " << d.a;
      std::cout << "\n";
    }
    return 0;
  }
  if (c_bo->parsed()) {
    prin::ChartTree tree = prin::bo_drive(load_chart());
    print_tree(tree, as_json);
    return 0;
  }
  if (c_bmo->parsed()) {
    prin::Chart chart = load_chart();
    long m = opt_m > 0 ? opt_m : chart.marking_or(0);
    if (m < 1)
      throw prin::precondition_error("bmo needs a marking (spec or --m)");
    prin::ChartTree tree = prin::bmo_drive(chart, m);
    print_tree(tree, as_json);
    return 0;
  }
  if (c_pri->parsed()) {
    prin::PrincipalizeReport report = prin::principalize(load_chart());
    if (as_json) {
      std::cout << prin::log_to_jsonl(report.tree.log());
      std::cout << prin::certificates_to_json(report.certificates) << "\n";
    } else {
      print_tree(report.tree, false);
      for (const auto& cert : report.certificates) {
        std::cout << "chart " << cert.chart_id << ": " << cert.status
                  << ", monomial";
        for (const auto& [label, e] : cert.divisor_exponents)
          if (e) std::cout << " " << label << "^" << e;
        std::cout << "\n";
      }
    }
    return 0;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const prin::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const prin::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const prin::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const prin::ring_mismatch_error& e) {
    std::cerr << "ring mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
