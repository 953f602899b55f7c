// Brute-force reference implementations used only by the tests. Everything here
// works on a plain integer table and follows the set-theoretic definitions
// object by object; nothing is shared with the library's block-based code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "roughphish/core.hpp"

namespace oracle {

struct SmallTable {
    int attributes = 0;
    int values = 1;
    std::vector<std::vector<int>> conditions; // [object][attribute]
    std::vector<int> decisions;

    int size() const { return static_cast<int>(decisions.size()); }
};

inline std::string attr_name(int a) { return "a" + std::to_string(a); }
inline std::string value_name(int v) { return "v" + std::to_string(v); }
inline std::string decision_name(int d) { return "d" + std::to_string(d); }

inline rough::DecisionTable to_table(const SmallTable& t) {
    std::vector<std::string> attrs;
    for (int a = 0; a < t.attributes; ++a)
        attrs.push_back(attr_name(a));
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < t.size(); ++i) {
        std::vector<std::string> row;
        for (int a = 0; a < t.attributes; ++a)
            row.push_back(value_name(t.conditions[i][a]));
        row.push_back(decision_name(t.decisions[i]));
        rows.push_back(std::move(row));
    }
    return rough::DecisionTable(attrs, "dec", rows);
}

inline rough::AttributeSet mask_names(std::uint32_t mask) {
    rough::AttributeSet out;
    for (int a = 0; a < 32; ++a)
        if (mask & (1u << a))
            out.push_back(attr_name(a));
    return out;
}

/// Random table; with `consistent`, equal condition tuples always share a decision.
inline SmallTable random_table(std::mt19937& rng, int max_objects, int max_attributes, int max_values,
                               bool consistent) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    SmallTable t;
    t.attributes = pick(1, max_attributes);
    t.values = pick(1, max_values);
    const int decision_values = pick(1, max_values);
    const int n = pick(1, max_objects);
    for (int i = 0; i < n; ++i) {
        std::vector<int> row(t.attributes);
        for (auto& v : row)
            v = pick(0, t.values - 1);
        int d = pick(0, decision_values - 1);
        if (consistent)
            for (int j = 0; j < i; ++j)
                if (t.conditions[j] == row)
                    d = t.decisions[j];
        t.conditions.push_back(std::move(row));
        t.decisions.push_back(d);
    }
    return t;
}

inline bool agree(const SmallTable& t, int x, int y, std::uint32_t mask) {
    for (int a = 0; a < t.attributes; ++a)
        if ((mask & (1u << a)) && t.conditions[x][a] != t.conditions[y][a])
            return false;
    return true;
}

inline rough::ObjectSet lower(const SmallTable& t, std::uint32_t mask, const std::vector<bool>& target) {
    rough::ObjectSet out;
    for (int x = 0; x < t.size(); ++x) {
        bool all_in = true;
        for (int y = 0; y < t.size(); ++y)
            if (agree(t, x, y, mask) && !target[y])
                all_in = false;
        if (all_in)
            out.push_back(x);
    }
    return out;
}

inline rough::ObjectSet upper(const SmallTable& t, std::uint32_t mask, const std::vector<bool>& target) {
    rough::ObjectSet out;
    for (int x = 0; x < t.size(); ++x) {
        bool any_in = false;
        for (int y = 0; y < t.size(); ++y)
            if (agree(t, x, y, mask) && target[y])
                any_in = true;
        if (any_in)
            out.push_back(x);
    }
    return out;
}

/// Objects all of whose look-alikes under `mask` share their decision.
inline rough::ObjectSet positive_region(const SmallTable& t, std::uint32_t mask) {
    rough::ObjectSet out;
    for (int x = 0; x < t.size(); ++x) {
        bool pure = true;
        for (int y = 0; y < t.size(); ++y)
            if (agree(t, x, y, mask) && t.decisions[y] != t.decisions[x])
                pure = false;
        if (pure)
            out.push_back(x);
    }
    return out;
}

inline int popcount(std::uint32_t m) {
    int c = 0;
    for (; m; m &= m - 1)
        ++c;
    return c;
}

/// Masks whose positive region equals the full one and whose every proper sub-mask is strictly worse.
inline std::vector<rough::AttributeSet> reducts(const SmallTable& t) {
    const std::uint32_t full = (1u << t.attributes) - 1;
    const auto target = positive_region(t, full).size();
    std::vector<std::uint32_t> found;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (positive_region(t, m).size() != target)
            continue;
        bool minimal = true;
        for (std::uint32_t sub = (m - 1) & m; sub != m; sub = (sub - 1) & m) {
            if (positive_region(t, sub).size() == target)
                minimal = false;
            if (sub == 0)
                break;
        }
        if (minimal)
            found.push_back(m);
    }
    std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
        if (popcount(a) != popcount(b))
            return popcount(a) < popcount(b);
        return mask_names(a) < mask_names(b);
    });
    std::vector<rough::AttributeSet> out;
    for (auto m : found)
        out.push_back(mask_names(m));
    return out;
}

struct OracleRule {
    std::vector<std::pair<std::string, std::string>> conditions; // sorted by attribute name
    std::string conclusion;

    friend bool operator==(const OracleRule&, const OracleRule&) = default;
    friend auto operator<=>(const OracleRule& a, const OracleRule& b) {
        return std::tuple(a.conditions.size(), a.conditions, a.conclusion) <=>
               std::tuple(b.conditions.size(), b.conditions, b.conclusion);
    }
};

/// Enumerates every condition assignment over the full value domain and keeps the minimal certain ones.
inline std::vector<OracleRule> minimal_certain_rules(const SmallTable& t) {
    std::vector<OracleRule> out;
    const std::uint32_t full = (1u << t.attributes) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> attrs;
        for (int a = 0; a < t.attributes; ++a)
            if (mask & (1u << a))
                attrs.push_back(a);
        std::vector<int> assignment(attrs.size(), 0);
        while (true) {
            auto matches = [&](int obj, int skip) {
                for (std::size_t k = 0; k < attrs.size(); ++k)
                    if (static_cast<int>(k) != skip && t.conditions[obj][attrs[k]] != assignment[k])
                        return false;
                return true;
            };
            std::vector<int> matched;
            for (int x = 0; x < t.size(); ++x)
                if (matches(x, -1))
                    matched.push_back(x);
            bool certain = !matched.empty() &&
                           std::all_of(matched.begin(), matched.end(),
                                       [&](int x) { return t.decisions[x] == t.decisions[matched.front()]; });
            if (certain) {
                const int conclusion = t.decisions[matched.front()];
                // Rules are non-empty, so a single condition is never dropped.
                bool minimal = true;
                for (std::size_t skip = 0; attrs.size() > 1 && skip < attrs.size() && minimal; ++skip) {
                    bool counterexample = false;
                    for (int x = 0; x < t.size(); ++x)
                        if (matches(x, static_cast<int>(skip)) && t.decisions[x] != conclusion)
                            counterexample = true;
                    minimal = counterexample;
                }
                if (minimal) {
                    OracleRule r;
                    for (std::size_t k = 0; k < attrs.size(); ++k)
                        r.conditions.emplace_back(attr_name(attrs[k]), value_name(assignment[k]));
                    std::sort(r.conditions.begin(), r.conditions.end());
                    r.conclusion = decision_name(conclusion);
                    out.push_back(std::move(r));
                }
            }
            std::size_t k = 0;
            while (k < assignment.size() && ++assignment[k] == t.values)
                assignment[k++] = 0;
            if (k == assignment.size())
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<OracleRule> as_oracle_rules(const std::vector<rough::DecisionRule>& rules) {
    std::vector<OracleRule> out;
    for (const auto& rule : rules) {
        OracleRule r;
        for (const auto& c : rule.conditions())
            r.conditions.emplace_back(c.attribute, c.value);
        std::sort(r.conditions.begin(), r.conditions.end());
        r.conclusion = rule.conclusion();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace oracle
