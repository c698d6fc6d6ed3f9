#ifndef PRIN_JSON_IO_HPP
#define PRIN_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "prin/blowup.hpp"
#include "prin/orchestrate.hpp"

namespace prin {

// {"vars":[...], "generators":[...], "marking":m?, "divisors":[{"var","label"}]?,
//  "tuning_order":s?}
struct ProblemSpec {
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::optional<long> marking;
  std::vector<std::pair<std::string, std::string>> divisors; // (var, label)
  std::optional<long> tuning_order;
};

ProblemSpec problem_spec_from_json(const std::string& text);
std::string problem_spec_to_json(const ProblemSpec& spec);

// Builds the root chart: parses generators and installs divisor records in
// the given order.
Chart chart_from_spec(const ProblemSpec& spec);

std::string certificates_to_json(const std::vector<LeafCertificate>& certs);

} // namespace prin

#endif
