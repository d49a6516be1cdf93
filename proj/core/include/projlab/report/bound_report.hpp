#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projlab/report/rational.hpp"
#include "projlab/report/surd.hpp"

namespace projlab {

// blocking: a theorem with an explicit constant; a failure is a bug or a
// counterexample. tracked: an implicit-constant statement recorded for tables.
enum class Tier { blocking, tracked };

const char* tier_name(Tier t);

// One checked inequality lhs <= rhs. Lower bounds put the bound on the left.
struct BoundReport {
  std::string bound_id;
  std::string anchor;
  Rational lhs;
  Rational rhs;
  Rational constant;
  bool holds = false;
  Tier tier = Tier::blocking;
  std::string note;
  nlohmann::json params = nlohmann::json::object();

  std::optional<Rational> ratio() const;
  bool blocking_failure() const { return tier == Tier::blocking && !holds; }

  nlohmann::json to_json() const;
  std::string to_json_line() const;
};

// Exact rational sides.
BoundReport make_report(std::string bound_id, std::string anchor, const Rational& lhs,
                        const Rational& rhs, const Rational& constant, Tier tier);
// Sides with radicals; lhs/rhs are set to the certifying enclosure endpoints.
BoundReport make_report(std::string bound_id, std::string anchor, const Surd& lhs, const Surd& rhs,
                        const Rational& constant, Tier tier);

nlohmann::json rational_json(const Rational& r);

}  // namespace projlab
