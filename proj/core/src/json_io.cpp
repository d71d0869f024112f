#include "kohlab/json_io.hpp"

#include <stdexcept>

namespace kohlab {

Json to_json(const QPoly& p) {
  Json array = Json::array();
  for (const BigInt& c : p.coeffs()) array.push_back(c.get_str());
  return array;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("polynomial JSON must be an array of decimal strings");
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const Json& entry : j) {
    if (entry.is_string()) {
      coeffs.emplace_back(entry.get<std::string>());
    } else if (entry.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(entry.get<long long>()));
    } else {
      throw std::invalid_argument("polynomial JSON entries must be decimal strings");
    }
  }
  return QPoly{std::move(coeffs)};
}

Json to_json(const CheckReport& report) {
  Json j{{"symmetric", report.symmetric},
         {"nonnegative", report.nonnegative},
         {"unimodal", report.unimodal},
         {"difference_degree", report.difference_degree}};
  if (const auto first = report.first_violation_degree()) {
    j["first_violation_degree"] = *first;
  }
  if (report.first_symmetry_break) j["first_symmetry_break"] = *report.first_symmetry_break;
  if (report.first_negative_degree) j["first_negative_degree"] = *report.first_negative_degree;
  if (report.first_unimodality_break) {
    j["first_unimodality_break"] = *report.first_unimodality_break;
  }
  return j;
}

Json to_json(const DominanceReport& report) {
  Json j{{"holds", report.holds}};
  if (report.first_failing_degree) j["first_failing_degree"] = *report.first_failing_degree;
  return j;
}

Json to_json(const Quadruple& quad) {
  return Json{{"a", quad.a}, {"b", quad.b}, {"c", quad.c}, {"d", quad.d}};
}

Json to_json(const QuadrupleCheck& failure) {
  return Json{{"quadruple", to_json(failure.quad)}, {"report", to_json(failure.report)}};
}

Json to_json(const Partition& partition) {
  Json array = Json::array();
  for (int part : partition.parts()) array.push_back(part);
  return array;
}

Json to_json(const KohTerm& term) {
  Json factors = Json::array();
  for (const KohFactor& f : term.factors) {
    factors.push_back(Json{{"top", f.top}, {"k", f.k}});
  }
  return Json{{"partition", to_json(term.partition)},
              {"exponent", term.exponent},
              {"factors", factors},
              {"value", to_json(term.value)}};
}

Json to_json(const StepVerdict& verdict) {
  Json params = Json::object();
  for (const auto& [name, value] : verdict.params) params[name] = value;
  Json j{{"step", std::string(step_name(verdict.id))},
         {"params", params},
         {"pass", verdict.pass}};
  if (verdict.detail) j["detail"] = *verdict.detail;
  if (!verdict.branch.empty()) j["branch"] = verdict.branch;
  return j;
}

}  // namespace kohlab
