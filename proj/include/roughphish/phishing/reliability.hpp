#ifndef ROUGHPHISH_PHISHING_RELIABILITY_HPP
#define ROUGHPHISH_PHISHING_RELIABILITY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "roughphish/core.hpp"
#include "roughphish/phishing/strata.hpp"

namespace phish {

inline constexpr std::array<std::string_view, 4> kStratumAttributes = {"Stratum A", "Stratum B",
                                                                       "Stratum C", "Stratum D"};
inline constexpr std::string_view kDecisionAttribute = "R Factor";
inline constexpr std::string_view kReliable = "Reliable";
inline constexpr std::string_view kUnreliable = "Unreliable";

inline std::string stratum_attribute(Stratum s) {
    return std::string(kStratumAttributes[static_cast<std::size_t>(s)]);
}

inline rough::AttributeSet all_stratum_attributes() {
    return {kStratumAttributes.begin(), kStratumAttributes.end()};
}

/// The profile as a rough-set object over the four stratum attributes.
inline rough::ObjectValues profile_object(const StrataProfile& p) {
    rough::ObjectValues out;
    for (std::size_t i = 0; i < 4; ++i)
        out.emplace(std::string(kStratumAttributes[i]), std::string(to_string(p.status[i])));
    return out;
}

/**
 * The 26-row reliability table over strata A-D with decision "R Factor".
 *
 * Rows 2/25 and 14/26 repeat a condition tuple with opposite decisions; both
 * copies are kept, which makes the table inconsistent.
 */
inline rough::DecisionTable canonical_reliability_table() {
    static const char* const rows[26][5] = {
        {"Valid", "Valid", "Valid", "Valid", "Reliable"},
        {"Valid", "Valid", "Valid", "Suspicious", "Reliable"},
        {"Valid", "Valid", "Suspicious", "Fake", "Unreliable"},
        {"Valid", "Valid", "Suspicious", "Valid", "Reliable"},
        {"Valid", "Suspicious", "Fake", "Suspicious", "Reliable"},
        {"Valid", "Suspicious", "Fake", "Fake", "Unreliable"},
        {"Valid", "Suspicious", "Valid", "Valid", "Reliable"},
        {"Valid", "Suspicious", "Valid", "Suspicious", "Unreliable"},
        {"Valid", "Fake", "Suspicious", "Fake", "Unreliable"},
        {"Suspicious", "Fake", "Suspicious", "Valid", "Unreliable"},
        {"Suspicious", "Fake", "Fake", "Suspicious", "Unreliable"},
        {"Suspicious", "Fake", "Fake", "Fake", "Unreliable"},
        {"Suspicious", "Valid", "Valid", "Valid", "Reliable"},
        {"Suspicious", "Valid", "Valid", "Suspicious", "Reliable"},
        {"Suspicious", "Valid", "Suspicious", "Fake", "Unreliable"},
        {"Suspicious", "Valid", "Suspicious", "Valid", "Reliable"},
        {"Suspicious", "Suspicious", "Fake", "Suspicious", "Unreliable"},
        {"Suspicious", "Suspicious", "Fake", "Fake", "Unreliable"},
        {"Fake", "Suspicious", "Valid", "Valid", "Unreliable"},
        {"Fake", "Suspicious", "Valid", "Suspicious", "Unreliable"},
        {"Fake", "Fake", "Suspicious", "Fake", "Unreliable"},
        {"Fake", "Fake", "Suspicious", "Valid", "Unreliable"},
        {"Fake", "Fake", "Fake", "Suspicious", "Unreliable"},
        {"Fake", "Fake", "Fake", "Fake", "Unreliable"},
        {"Valid", "Valid", "Valid", "Suspicious", "Unreliable"},
        {"Suspicious", "Valid", "Valid", "Suspicious", "Unreliable"},
    };
    std::vector<std::vector<std::string>> table_rows;
    table_rows.reserve(26);
    for (const auto& r : rows)
        table_rows.emplace_back(std::begin(r), std::end(r));
    return rough::DecisionTable(all_stratum_attributes(), std::string(kDecisionAttribute),
                                std::move(table_rows));
}

/// Keeps only the last row of each distinct condition tuple, preserving relative row order.
inline rough::DecisionTable deduplicate_last_wins(const rough::DecisionTable& table) {
    const auto n = table.condition_count();
    std::map<std::vector<std::string>, std::size_t> last;
    for (std::size_t id = 0; id < table.size(); ++id) {
        auto row = table.row(id);
        last[std::vector<std::string>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n))] = id;
    }
    std::vector<std::vector<std::string>> kept;
    for (std::size_t id = 0; id < table.size(); ++id) {
        auto row = table.row(id);
        std::vector<std::string> key(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
        if (last[key] == id)
            kept.emplace_back(row.begin(), row.end());
    }
    return rough::DecisionTable(table.condition_attributes(), table.decision_attribute(),
                                std::move(kept));
}

/// The twelve published decision rules, in printed order (rule id = position + 1).
inline std::vector<rough::DecisionRule> paper_rule_set() {
    using rough::Condition;
    auto rule = [](std::vector<Condition> conds, std::string_view conclusion) {
        return rough::DecisionRule(std::move(conds), std::string(conclusion), rough::Provenance::paper);
    };
    const std::string A = "Stratum A", B = "Stratum B", C = "Stratum C", D = "Stratum D";
    return {
        rule({{D, "Fake"}}, kUnreliable),
        rule({{B, "Fake"}}, kUnreliable),
        rule({{A, "Fake"}}, kUnreliable),
        rule({{B, "Valid"}, {D, "Valid"}}, kReliable),
        rule({{B, "Valid"}, {D, "Suspicious"}}, kUnreliable),
        rule({{A, "Suspicious"}, {C, "Fake"}}, kUnreliable),
        rule({{A, "Valid"}, {D, "Valid"}}, kReliable),
        rule({{B, "Suspicious"}, {C, "Valid"}, {D, "Suspicious"}}, kUnreliable),
        rule({{A, "Suspicious"}, {C, "Valid"}, {D, "Suspicious"}}, kUnreliable),
        rule({{A, "Suspicious"}, {B, "Suspicious"}}, kUnreliable),
        rule({{A, "Valid"}, {C, "Fake"}, {D, "Suspicious"}}, kReliable),
        rule({{A, "Suspicious"}, {C, "Valid"}, {D, "Valid"}}, kReliable),
    };
}

/// True when the profile's condition tuple occurs in the canonical table.
inline bool profile_in_canonical_table(const StrataProfile& p) {
    static const auto table = canonical_reliability_table();
    for (std::size_t id = 0; id < table.size(); ++id) {
        bool same = true;
        for (std::size_t i = 0; i < 4 && same; ++i)
            same = table.value(id, i) == to_string(p.status[i]);
        if (same)
            return true;
    }
    return false;
}

} // namespace phish

#endif
