#include "projlab/report/bound_report.hpp"

namespace projlab {

const char* tier_name(Tier t) { return t == Tier::blocking ? "blocking" : "tracked"; }

std::optional<Rational> BoundReport::ratio() const {
  if (rhs > 0) {
    Rational r = lhs / rhs;
    return r;
  }
  return std::nullopt;
}

nlohmann::json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["bound_id"] = bound_id;
  j["anchor"] = anchor;
  j["lhs"] = rational_json(lhs);
  j["rhs_num"] = integer_json(rhs.get_num());
  j["rhs_den"] = integer_json(rhs.get_den());
  j["holds"] = holds;
  j["params"] = params;
  j["constant"] = to_string(constant);
  if (auto r = ratio()) {
    j["ratio"] = to_string(*r);
  } else {
    j["ratio"] = nullptr;
  }
  j["tier"] = tier_name(tier);
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string BoundReport::to_json_line() const { return to_json().dump(); }

BoundReport make_report(std::string bound_id, std::string anchor, const Rational& lhs, const Rational& rhs,
                        const Rational& constant, Tier tier) {
  BoundReport r;
  r.bound_id = std::move(bound_id);
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.tier = tier;
  r.holds = lhs <= rhs;
  return r;
}

BoundReport make_report(std::string bound_id, std::string anchor, const Surd& lhs, const Surd& rhs,
                        const Rational& constant, Tier tier) {
  const Comparison c = compare_le(lhs, rhs);
  BoundReport r = make_report(std::move(bound_id), std::move(anchor), c.lhs_value, c.rhs_value, constant, tier);
  r.holds = c.holds;
  r.params["lhs_expr"] = lhs.to_string();
  r.params["rhs_expr"] = rhs.to_string();
  if (c.at_precision_limit) r.note = "sides agree to 4096 bits; treated as equal";
  return r;
}

}  // namespace projlab
