#ifndef ROUGHPHISH_CORE_RULES_HPP
#define ROUGHPHISH_CORE_RULES_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughphish/core/reducts.hpp"

namespace rough {

struct Condition {
    std::string attribute;
    std::string value;

    friend auto operator<=>(const Condition&, const Condition&) = default;
};

enum class Provenance { paper, induced };

inline std::string_view to_string(Provenance p) {
    return p == Provenance::paper ? "paper" : "induced";
}

/// Conjunction of attribute=value conditions implying a decision value.
class DecisionRule {
public:
    DecisionRule(std::vector<Condition> conditions, std::string conclusion,
                 Provenance provenance = Provenance::induced)
        : conditions_(std::move(conditions)),
          conclusion_(std::move(conclusion)),
          provenance_(provenance) {
        if (conditions_.empty())
            throw Error("a decision rule needs at least one condition");
        for (std::size_t i = 0; i < conditions_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (conditions_[i].attribute == conditions_[j].attribute)
                    throw Error("attribute '" + conditions_[i].attribute +
                                "' appears twice in one rule");
    }

    const std::vector<Condition>& conditions() const noexcept { return conditions_; }
    const std::string& conclusion() const noexcept { return conclusion_; }
    Provenance provenance() const noexcept { return provenance_; }

    /// Throws UnknownAttributeError if the object lacks a referenced attribute.
    bool matches(const ObjectValues& object) const {
        for (const auto& c : conditions_) {
            auto it = object.find(c.attribute);
            if (it == object.end())
                throw UnknownAttributeError(c.attribute, "object has no value for attribute '" +
                                                             c.attribute + "'");
            if (it->second != c.value)
                return false;
        }
        return true;
    }

    /// Conditions ordered by attribute name; the canonical form used for ordering and equality.
    std::vector<Condition> sorted_conditions() const {
        auto out = conditions_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// e.g. `(Stratum B = Valid) & (Stratum D = Suspicious) => Unreliable`
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < conditions_.size(); ++i) {
            if (i != 0)
                out += " & ";
            out += "(" + conditions_[i].attribute + " = " + conditions_[i].value + ")";
        }
        return out + " => " + conclusion_;
    }

    friend bool operator==(const DecisionRule& a, const DecisionRule& b) {
        return a.conclusion_ == b.conclusion_ && a.sorted_conditions() == b.sorted_conditions();
    }

private:
    std::vector<Condition> conditions_;
    std::string conclusion_;
    Provenance provenance_;
};

/// Objects agreeing with every condition; an empty conjunction matches the whole universe.
inline ObjectSet matching_objects(const DecisionTable& table, std::span<const Condition> conditions) {
    std::vector<std::size_t> columns;
    columns.reserve(conditions.size());
    for (const auto& c : conditions)
        columns.push_back(table.require_condition(c.attribute));
    ObjectSet out;
    for (ObjectId id = 0; id < table.size(); ++id) {
        bool ok = true;
        for (std::size_t k = 0; k < columns.size() && ok; ++k)
            ok = table.value(id, columns[k]) == conditions[k].value;
        if (ok)
            out.push_back(id);
    }
    return out;
}

enum class RuleStatus { certain, contradicted };

inline std::string_view to_string(RuleStatus s) {
    return s == RuleStatus::certain ? "certain" : "contradicted";
}

struct RuleCheck {
    RuleStatus status = RuleStatus::certain;
    ObjectSet matched;
    /// Matched objects whose decision differs from the conclusion.
    ObjectSet counterexamples;

    /// Certain only because nothing matched.
    bool vacuous() const noexcept { return matched.empty(); }
};

/// Audits a rule against a table. Unknown attributes throw; unknown values match nothing.
inline RuleCheck check_rule(const DecisionRule& rule, const DecisionTable& table) {
    RuleCheck out;
    out.matched = matching_objects(table, rule.conditions());
    for (auto id : out.matched)
        if (table.decision(id) != rule.conclusion())
            out.counterexamples.push_back(id);
    out.status = out.counterexamples.empty() ? RuleStatus::certain : RuleStatus::contradicted;
    return out;
}

/// True when dropping any single condition leaves a conjunction with a counterexample.
/// Rules are non-empty, so a single-condition rule is minimal.
inline bool is_minimal(const DecisionRule& rule, const DecisionTable& table) {
    const auto& conds = rule.conditions();
    if (conds.size() == 1)
        return true;
    for (std::size_t drop = 0; drop < conds.size(); ++drop) {
        std::vector<Condition> rest;
        for (std::size_t i = 0; i < conds.size(); ++i)
            if (i != drop)
                rest.push_back(conds[i]);
        bool counterexample = false;
        for (auto id : matching_objects(table, rest))
            if (table.decision(id) != rule.conclusion()) {
                counterexample = true;
                break;
            }
        if (!counterexample)
            return false;
    }
    return true;
}

enum class ConflictMode { conservative, strict };

inline std::string_view to_string(ConflictMode m) {
    return m == ConflictMode::conservative ? "conservative" : "strict";
}

/**
 * How fired rules with different conclusions are resolved.
 *
 * conservative: a fired rule concluding `cautious_value` always wins; otherwise
 *               the remaining conclusions must agree.
 * strict:       any disagreement yields no decision.
 * With no fired rules both modes yield no decision.
 */
struct ConflictPolicy {
    ConflictMode mode = ConflictMode::conservative;
    std::string cautious_value;
};

struct RuleVerdict {
    /// Empty when indeterminate.
    std::optional<std::string> decision;
    /// 0-based indices into the rule list, ascending.
    std::vector<std::size_t> fired;
    bool conflict = false;
};

inline RuleVerdict apply_rules(std::span<const DecisionRule> rules, const ObjectValues& object,
                               const ConflictPolicy& policy) {
    for (const auto& rule : rules)
        for (const auto& c : rule.conditions())
            if (object.find(c.attribute) == object.end())
                throw UnknownAttributeError(c.attribute, "object has no value for attribute '" +
                                                             c.attribute + "'");

    RuleVerdict out;
    std::vector<std::string> conclusions;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!rules[i].matches(object))
            continue;
        out.fired.push_back(i);
        if (std::find(conclusions.begin(), conclusions.end(), rules[i].conclusion()) ==
            conclusions.end())
            conclusions.push_back(rules[i].conclusion());
    }
    out.conflict = conclusions.size() > 1;

    if (conclusions.empty())
        return out;
    if (conclusions.size() == 1) {
        out.decision = conclusions.front();
        return out;
    }
    // Two or more distinct conclusions from here on.
    if (policy.mode == ConflictMode::conservative &&
        std::find(conclusions.begin(), conclusions.end(), policy.cautious_value) != conclusions.end())
        out.decision = policy.cautious_value;
    return out;
}

/**
 * All minimal certain rules of the table.
 *
 * Condition sets grow breadth-first over sizes 1..n. For each attribute
 * combination every occurring value tuple whose matching objects share a
 * decision becomes a rule, unless it extends a condition set already found
 * certain. Output order: fewer conditions first, then conditions (sorted by
 * attribute name) compared lexicographically by name and value.
 */
inline std::vector<DecisionRule> induce_certain_rules(const DecisionTable& table) {
    detail::require_exhaustive_capacity(table);
    if (table.empty())
        throw UndefinedDivisionError();

    struct Found {
        std::uint32_t mask;
        std::vector<std::string> values; // indexed by column, only columns in mask used
    };
    std::vector<Found> found;
    std::vector<DecisionRule> out;
    const auto n = table.condition_count();

    for (std::size_t k = 1; k <= n; ++k) {
        detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& columns) {
            const auto mask = detail::columns_mask(columns);
            for (const auto& block : partition_by_columns(table, columns).blocks) {
                const auto first = block.front();
                const auto& decision = table.decision(first);
                if (!std::all_of(block.begin(), block.end(),
                                 [&](ObjectId id) { return table.decision(id) == decision; }))
                    continue;
                bool extends_found = false;
                for (const auto& f : found) {
                    if ((mask & f.mask) != f.mask)
                        continue;
                    bool same = true;
                    for (std::size_t c = 0; c < n && same; ++c)
                        if (f.mask & (std::uint32_t{1} << c))
                            same = f.values[c] == table.value(first, c);
                    if (same) {
                        extends_found = true;
                        break;
                    }
                }
                if (extends_found)
                    continue;

                Found f{mask, std::vector<std::string>(n)};
                std::vector<Condition> conds;
                for (auto c : columns) {
                    f.values[c] = table.value(first, c);
                    conds.push_back({table.condition_attributes()[c], f.values[c]});
                }
                std::sort(conds.begin(), conds.end());
                found.push_back(std::move(f));
                out.emplace_back(std::move(conds), decision, Provenance::induced);
            }
        });
    }

    std::stable_sort(out.begin(), out.end(), [](const DecisionRule& a, const DecisionRule& b) {
        if (a.conditions().size() != b.conditions().size())
            return a.conditions().size() < b.conditions().size();
        return a.conditions() < b.conditions();
    });
    return out;
}

} // namespace rough

#endif
