#include "lcm/io.hpp"

#include <cstdio>
#include <sstream>

namespace lcm {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void to_json(nlohmann::json& j, const Interval& iv) {
  j = nlohmann::json{{"lo", iv.lo},
                     {"hi", iv.hi},
                     {"lo_margin", iv.lo_margin},
                     {"hi_margin", iv.hi_margin}};
}

void from_json(const nlohmann::json& j, Interval& iv) {
  j.at("lo").get_to(iv.lo);
  j.at("hi").get_to(iv.hi);
  j.at("lo_margin").get_to(iv.lo_margin);
  j.at("hi_margin").get_to(iv.hi_margin);
}

void to_json(nlohmann::json& j, const OrderRecord& r) {
  j = nlohmann::json{
      {"order", r.order}, {"min_signed", r.min_signed}, {"argmin", r.argmin}};
}

void from_json(const nlohmann::json& j, OrderRecord& r) {
  j.at("order").get_to(r.order);
  j.at("min_signed").get_to(r.min_signed);
  j.at("argmin").get_to(r.argmin);
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  j = nlohmann::json{{"description", r.description},
                     {"interval", r.interval},
                     {"max_order", r.max_order},
                     {"grid_size", r.grid_size},
                     {"tolerance", r.tolerance},
                     {"records", r.records},
                     {"verdict", r.pass ? "PASS" : "FAIL"}};
  if (r.first_fail_order)
    j["first_fail_order"] = *r.first_fail_order;
}

void from_json(const nlohmann::json& j, CheckReport& r) {
  j.at("description").get_to(r.description);
  j.at("interval").get_to(r.interval);
  j.at("max_order").get_to(r.max_order);
  j.at("grid_size").get_to(r.grid_size);
  j.at("tolerance").get_to(r.tolerance);
  j.at("records").get_to(r.records);
  r.pass = j.at("verdict").get<std::string>() == "PASS";
  r.first_fail_order.reset();
  if (j.contains("first_fail_order"))
    r.first_fail_order = j.at("first_fail_order").get<int>();
}

void to_json(nlohmann::json& j, const TauResult& r) {
  j = nlohmann::json{{"s", r.s},
                     {"t_star", r.t_star},
                     {"tau_max", r.tau_max},
                     {"bracket_lo", r.bracket_lo},
                     {"bracket_hi", r.bracket_hi},
                     {"evaluations", r.evaluations}};
}

void from_json(const nlohmann::json& j, TauResult& r) {
  j.at("s").get_to(r.s);
  j.at("t_star").get_to(r.t_star);
  j.at("tau_max").get_to(r.tau_max);
  j.at("bracket_lo").get_to(r.bracket_lo);
  j.at("bracket_hi").get_to(r.bracket_hi);
  j.at("evaluations").get_to(r.evaluations);
}

std::string report_to_csv(const CheckReport& r) {
  std::ostringstream os;
  os << "order,min_signed,argmin,verdict\n";
  for (const auto& rec : r.records)
    os << rec.order << ',' << format_double(rec.min_signed) << ','
       << format_double(rec.argmin) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string tau_results_to_csv(const std::vector<TauResult>& rows) {
  std::ostringstream os;
  os << "s,t_star,tau_max,bracket_lo,bracket_hi\n";
  for (const auto& r : rows)
    os << format_double(r.s) << ',' << format_double(r.t_star) << ','
       << format_double(r.tau_max) << ',' << format_double(r.bracket_lo) << ','
       << format_double(r.bracket_hi) << '\n';
  return os.str();
}

}  // namespace lcm
