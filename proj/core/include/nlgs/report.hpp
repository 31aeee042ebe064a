#ifndef NLGS_REPORT_HPP
#define NLGS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace nlgs {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// One verified identity: both sides, gaps, a tolerance, and the anchor string
// naming the mathematical fact being checked.
struct CheckRow {
    std::string name;
    std::string paper_anchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool relative = false;  // tolerance applies to rel_gap instead of abs_gap

    double abs_gap() const;
    double rel_gap() const;
    bool pass() const;
};

struct VerificationReport {
    nlohmann::ordered_json config;
    std::vector<CheckRow> checks;

    void add(CheckRow row);
    bool overall_pass() const;
    // checks sorted by name; timestamp omitted when with_timestamp is false
    nlohmann::ordered_json to_json(bool with_timestamp) const;
};

}  // namespace nlgs

#endif
