#include "ilwhodge/report.hpp"

#include <set>

namespace ilwhodge {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j = {{"name", name},
                      {"status", ok() ? "ok" : "mismatch"},
                      {"order_checked", order_checked},
                      {"details", details}};
  if (first_mismatch) {
    j["first_mismatch"] = {{"hbar_order", first_mismatch->hbar_order},
                           {"term", first_mismatch->term},
                           {"expected", first_mismatch->expected.str()},
                           {"actual", first_mismatch->actual.str()}};
    if (!first_mismatch->note.empty()) j["first_mismatch"]["note"] = first_mismatch->note;
  }
  return j;
}

std::optional<Mismatch> first_difference(const DiffPoly& expected, const DiffPoly& actual, int g_max) {
  const DiffPoly diff = (actual - expected).truncate_hbar(g_max);
  for (int g = 0; g <= g_max; ++g) {
    for (const auto& [m, c] : diff.terms()) {
      for (const auto& [e, v] : c.terms()) {
        if (e[0] != g) continue;
        Mismatch mm;
        mm.hbar_order = g;
        mm.term = pretty(DiffPoly::term(Rational(1), e[0], e[1], m));
        mm.expected = expected.coefficient(m, e[0], e[1]);
        mm.actual = actual.coefficient(m, e[0], e[1]);
        return mm;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ilwhodge
