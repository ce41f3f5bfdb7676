#pragma once

#include <string>

#include <json.hpp>

#include "wittartin/checks.hpp"
#include "wittartin/splitting.hpp"

namespace wittartin {

struct ReportOptions {
  bool timing = false;  // adds wall-clock milliseconds; output is then no longer byte-stable
};

struct Report {
  nlohmann::ordered_json doc;
  bool passed = false;
};

/// Instance echo, chain dimensions and bases, both decompositions with their
/// Gram matrices, the compatible slice N1_tilde, and the exact checks.
Report decomposition_report(const ProblemInstance& inst, const ReportOptions& options = {});

std::string render_json(const Report& report);
std::string render_text(const Report& report);

nlohmann::ordered_json checks_to_json(const CheckReport& checks);

}  // namespace wittartin
