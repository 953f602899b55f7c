#ifndef ROUGHPHISH_PHISHING_CLASSIFY_HPP
#define ROUGHPHISH_PHISHING_CLASSIFY_HPP

#include <span>
#include <string>
#include <vector>

#include "roughphish/phishing/reliability.hpp"

namespace phish {

enum class Verdict { reliable, unreliable, indeterminate };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::reliable: return "Reliable";
    case Verdict::unreliable: return "Unreliable";
    case Verdict::indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

struct ClassifyOptions {
    rough::ConflictMode conflict = rough::ConflictMode::conservative;
    CompletionPolicy completion = CompletionPolicy::none;
    /// Report Indeterminate as Unreliable; the raw outcome stays in raw_verdict.
    bool downgrade_indeterminate = false;
};

struct FiredRule {
    /// 1-based position in the rule list that was applied.
    std::size_t id = 0;
    rough::DecisionRule rule;
};

struct ClassificationReport {
    FeatureVector input;
    /// The vector after the completion policy was applied.
    FeatureVector evaluated;
    StrataProfile profile;
    Verdict verdict = Verdict::indeterminate;
    Verdict raw_verdict = Verdict::indeterminate;
    std::vector<FiredRule> fired;
    ClassifyOptions options;
    std::vector<std::string> notes;
};

inline rough::ConflictPolicy reliability_policy(rough::ConflictMode mode) {
    return {mode, std::string(kUnreliable)};
}

/// Verdict for a strata profile alone; used by classify and by exhaustive profile sweeps.
inline rough::RuleVerdict apply_to_profile(std::span<const rough::DecisionRule> rules,
                                           const StrataProfile& profile, rough::ConflictMode mode) {
    return rough::apply_rules(rules, profile_object(profile), reliability_policy(mode));
}

inline ClassificationReport classify(const FeatureVector& v, std::span<const rough::DecisionRule> rules,
                                     const ClassifyOptions& options = {}) {
    ClassificationReport report{.input = v,
                                .evaluated = complete_with(v, options.completion),
                                .profile = {},
                                .verdict = Verdict::indeterminate,
                                .raw_verdict = Verdict::indeterminate,
                                .fired = {},
                                .options = options,
                                .notes = {}};
    report.profile = evaluate_strata(report.evaluated);

    auto unknowns = v.unknown_fields();
    if (!unknowns.empty())
        report.notes.push_back(std::to_string(unknowns.size()) + " unknown feature(s) completed as " +
                               (options.completion == CompletionPolicy::pessimistic ? "yes" : "no") +
                               " (" + std::string(to_string(options.completion)) + " policy)");

    auto result = apply_to_profile(rules, report.profile, options.conflict);
    for (auto index : result.fired)
        report.fired.push_back({index + 1, rules[index]});

    if (!result.decision)
        report.raw_verdict = Verdict::indeterminate;
    else if (*result.decision == kReliable)
        report.raw_verdict = Verdict::reliable;
    else if (*result.decision == kUnreliable)
        report.raw_verdict = Verdict::unreliable;
    else
        throw Error("rule concluded unexpected value '" + *result.decision + "'");

    report.verdict = report.raw_verdict;
    if (result.fired.empty())
        report.notes.push_back("no rule fired for this profile");
    else if (result.conflict)
        report.notes.push_back(std::string("fired rules disagree; resolved by ") +
                               std::string(rough::to_string(options.conflict)) + " policy");
    if (report.raw_verdict == Verdict::indeterminate && options.downgrade_indeterminate) {
        report.verdict = Verdict::unreliable;
        report.notes.push_back("Indeterminate downgraded to Unreliable");
    }
    if (!profile_in_canonical_table(report.profile))
        report.notes.push_back("profile absent from the reliability table");
    return report;
}

inline ClassificationReport classify(const FeatureVector& v, const ClassifyOptions& options = {}) {
    static const auto rules = paper_rule_set();
    return classify(v, rules, options);
}

} // namespace phish

#endif
