#pragma once

// Outcome of a verification run. A mismatch is a normal result, not an
// exception: it carries the lowest-order differing coefficient.

#include <optional>
#include <string>

#include <json.hpp>

#include "ilwhodge/diffpoly.hpp"
#include "ilwhodge/rational.hpp"

namespace ilwhodge {

struct Mismatch {
  int hbar_order = 0;
  std::string term;  // locus, e.g. "h*u_1*u_2" or "C_3"
  Rational expected;
  Rational actual;
  std::string note;
};

struct VerificationReport {
  std::string name;
  int order_checked = 0;
  std::optional<Mismatch> first_mismatch;
  nlohmann::json details = nlohmann::json::array();

  bool ok() const { return !first_mismatch.has_value(); }
  nlohmann::json to_json() const;
};

/// First coefficient where `actual` differs from `expected` up to hbar^g_max,
/// scanning hbar order, then canonical monomial order, then eps order.
std::optional<Mismatch> first_difference(const DiffPoly& expected, const DiffPoly& actual, int g_max);

}  // namespace ilwhodge
