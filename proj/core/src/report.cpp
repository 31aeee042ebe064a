#include "nlgs/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace nlgs {

double CheckRow::abs_gap() const { return std::abs(lhs - rhs); }

double CheckRow::rel_gap() const {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return abs_gap() / scale;
}

bool CheckRow::pass() const {
    const double gap = relative ? rel_gap() : abs_gap();
    return std::isfinite(lhs) && std::isfinite(rhs) && gap <= tolerance;
}

void VerificationReport::add(CheckRow row) { checks.push_back(std::move(row)); }

bool VerificationReport::overall_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRow& c) { return c.pass(); });
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool"] = "nlgs";
    j["version"] = kVersion;
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now();
        j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                             now.time_since_epoch()).count();
    }
    j["config"] = config;

    std::vector<const CheckRow*> ordered;
    ordered.reserve(checks.size());
    for (const CheckRow& c : checks) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(),
              [](const CheckRow* a, const CheckRow* b) { return a->name < b->name; });

    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRow* c : ordered) {
        nlohmann::ordered_json row;
        row["name"] = c->name;
        row["paper_anchor"] = c->paper_anchor;
        row["lhs"] = c->lhs;
        row["rhs"] = c->rhs;
        row["abs_gap"] = c->abs_gap();
        row["rel_gap"] = c->rel_gap();
        row["tolerance"] = c->tolerance;
        row["tolerance_is_relative"] = c->relative;
        row["pass"] = c->pass();
        j["checks"].push_back(std::move(row));
    }
    j["overall_pass"] = overall_pass();
    return j;
}

}  // namespace nlgs
