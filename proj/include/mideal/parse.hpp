#pragma once

#include "mideal/classgroup.hpp"
#include "mideal/content.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mideal {

using json = nlohmann::json;

// "Z" | "Q" | "Z[1/p]" | "lex(A, B, ...)"
OrderedGroup parse_group(std::string_view s);

// Field-element / polynomial expressions over a quadratic order, e.g.
// "2+(1+sqrt(-3))X", "1/2", "3*X^2 - sqrt(-1)".
QPoly parse_qpoly(const QuadraticOrder& O, std::string_view s);
QElem parse_qelem(const QuadraticOrder& O, std::string_view s);

struct Bounds {
  Int norm = 25;
  int grid_k = 10;
  int box = 8;
  int samples = 500;
  Int class_order_bound = 10000;
};

struct JobConfig {
  std::string command;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string suite;
  Bounds bounds;
  bool is_order = false;
  std::optional<QuadraticOrder> order;
  std::optional<ValuationDomain> valuation;
  json raw;  // echoed into reports
};

JobConfig parse_config(const json& j);

ValIdeal parse_val_ideal(const ValuationDomain& V, const json& j);
LatticeIdeal parse_ord_ideal(const QuadraticOrder& O, const json& j);
// {"op":"d"|"v"|"t"} | {"op":"w","family":[...]} | {"op":"meet","overrings":[...]}
StarOp parse_star(const ValuationDomain& V, const json& j);
StarOp parse_star(const QuadraticOrder& O, const json& j);
// structured coefficient list: [[{"q":"1","exp":["1/2"]}, ...], ...]
VPoly parse_vpoly(const ValuationDomain& V, const json& j);

}  // namespace mideal
