#ifndef ROUGHPHISH_PHISHING_VERIFY_HPP
#define ROUGHPHISH_PHISHING_VERIFY_HPP

#include <string>
#include <vector>

#include "roughphish/phishing/reliability.hpp"

namespace phish {

/// A published subset/dependency pair recomputed from the reliability table.
struct GammaCheck {
    rough::AttributeSet subset;
    rough::Fraction expected;
    /// Decimal digits as published.
    std::string published;
    rough::Fraction computed;
    std::string rendered;
    bool passed = false;
};

struct RuleAudit {
    std::size_t id = 0;
    rough::DecisionRule rule;
    rough::RuleCheck raw;
    rough::RuleCheck deduplicated;
    rough::RuleStatus expected_raw = rough::RuleStatus::certain;
    bool minimal_on_deduplicated = false;
    bool passed = false;
};

struct InfluenceFinding {
    rough::AttributeSet subset;
    rough::Fraction gamma;
    bool agrees_with_published = false;
};

struct PaperVerification {
    std::vector<GammaCheck> gamma_checks;
    std::vector<RuleAudit> rule_audits;
    /// Smallest dependency among the published singletons.
    InfluenceFinding least_influential;
    /// Smallest dependency over every single stratum, published or not.
    InfluenceFinding least_influential_any;
    /// Largest dependency among the published subsets.
    InfluenceFinding most_influential_listed;
    /// Largest dependency over every subset of the same size as most_influential_listed.
    InfluenceFinding most_influential_any;
    rough::Fraction full_gamma_raw;
    rough::ObjectSet boundary_raw;
    rough::Fraction full_gamma_deduplicated;
    std::vector<rough::AttributeSet> reducts_raw;
    rough::AttributeSet core_raw;
    /// Every deduplicated object is matched by a published rule and no fired rule misclassifies it.
    bool rules_cover_deduplicated = false;
    std::vector<std::string> notes;

    bool gammas_passed() const {
        for (const auto& g : gamma_checks)
            if (!g.passed)
                return false;
        return !gamma_checks.empty();
    }
    bool rules_passed() const {
        for (const auto& r : rule_audits)
            if (!r.passed)
                return false;
        return !rule_audits.empty();
    }
    bool passed() const { return gammas_passed() && rules_passed(); }
};

struct PublishedGamma {
    std::vector<std::string_view> subset;
    std::uint64_t numerator;
    std::string_view digits;
};

/// The published dependency survey, in printed order; every value is an exact k/26.
inline const std::vector<PublishedGamma>& published_gamma_survey() {
    static const std::vector<PublishedGamma> survey = {
        {{"Stratum A", "Stratum D"}, 15, "0.5769230769230769"},
        {{"Stratum A", "Stratum C", "Stratum D"}, 19, "0.7307692307692307"},
        {{"Stratum A", "Stratum C"}, 10, "0.38461538461538464"},
        {{"Stratum A", "Stratum B"}, 12, "0.46153846153846156"},
        {{"Stratum A"}, 6, "0.23076923076923078"},
        {{"Stratum B", "Stratum D"}, 16, "0.6153846153846154"},
        {{"Stratum B", "Stratum C", "Stratum D"}, 18, "0.6923076923076923"},
        {{"Stratum B"}, 8, "0.3076923076923077"},
        {{"Stratum D"}, 8, "0.3076923076923077"},
    };
    return survey;
}

inline PaperVerification verify_paper_artifacts() {
    PaperVerification out;
    const auto raw = canonical_reliability_table();
    const auto dedup = deduplicate_last_wins(raw);

    std::vector<rough::AttributeSet> subsets;
    for (const auto& p : published_gamma_survey())
        subsets.emplace_back(p.subset.begin(), p.subset.end());
    auto survey = rough::subset_gamma_survey(raw, subsets);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto& p = published_gamma_survey()[i];
        GammaCheck check{subsets[i], rough::Fraction(p.numerator, 26), std::string(p.digits),
                         survey.entries[i].gamma, survey.entries[i].gamma.decimal(), false};
        check.passed = check.computed == check.expected &&
                       check.computed.denominator() == raw.size() && check.rendered == check.published;
        out.gamma_checks.push_back(std::move(check));
    }

    // Published rules 5 and 9 disagree with raw rows 2 and 14 (the earlier copies of duplicated tuples).
    const auto rules = paper_rule_set();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        RuleAudit audit{i + 1,
                        rules[i],
                        rough::check_rule(rules[i], raw),
                        rough::check_rule(rules[i], dedup),
                        (i + 1 == 5 || i + 1 == 9) ? rough::RuleStatus::contradicted
                                                   : rough::RuleStatus::certain,
                        rough::is_minimal(rules[i], dedup),
                        false};
        audit.passed = audit.raw.status == audit.expected_raw &&
                       audit.deduplicated.status == rough::RuleStatus::certain &&
                       !audit.deduplicated.vacuous();
        out.rule_audits.push_back(std::move(audit));
    }

    // Minimality is reported, not required: the published rules are not claimed to be minimal.
    for (const auto& a : out.rule_audits) {
        if (a.minimal_on_deduplicated)
            continue;
        const auto& conds = a.rule.conditions();
        for (std::size_t drop = 0; drop < conds.size(); ++drop) {
            std::vector<rough::Condition> rest;
            for (std::size_t i = 0; i < conds.size(); ++i)
                if (i != drop)
                    rest.push_back(conds[i]);
            rough::DecisionRule shorter(rest, a.rule.conclusion());
            if (rough::check_rule(shorter, dedup).status == rough::RuleStatus::certain) {
                out.notes.push_back("rule " + std::to_string(a.id) + " is not minimal on the deduplicated table: " +
                                    shorter.str() + " is already certain");
                break;
            }
        }
    }

    out.rules_cover_deduplicated = true;
    for (std::size_t id = 0; id < dedup.size(); ++id) {
        auto result = rough::apply_rules(rules, dedup.object(id),
                                         {rough::ConflictMode::strict, std::string(kUnreliable)});
        if (result.fired.empty() || result.conflict || result.decision != dedup.decision(id))
            out.rules_cover_deduplicated = false;
    }

    // Influence findings.
    bool have_single = false;
    for (const auto& g : out.gamma_checks) {
        if (g.subset.size() == 1 && (!have_single || g.computed < out.least_influential.gamma)) {
            out.least_influential = {g.subset, g.computed, false};
            have_single = true;
        }
        if (out.most_influential_listed.subset.empty() || g.computed > out.most_influential_listed.gamma)
            out.most_influential_listed = {g.subset, g.computed, false};
    }
    out.least_influential.agrees_with_published =
        out.least_influential.subset == rough::AttributeSet{"Stratum A"};
    out.most_influential_listed.agrees_with_published =
        out.most_influential_listed.subset == rough::AttributeSet{"Stratum A", "Stratum C", "Stratum D"};

    for (const auto& name : raw.condition_attributes()) {
        auto g = rough::gamma(raw, {name});
        if (out.least_influential_any.subset.empty() || g < out.least_influential_any.gamma)
            out.least_influential_any = {{name}, g, false};
    }
    out.least_influential_any.agrees_with_published =
        out.least_influential_any.subset == out.least_influential.subset;
    if (!out.least_influential_any.agrees_with_published)
        out.notes.push_back("the least influential listed stratum is not the least influential overall");

    const auto k = out.most_influential_listed.subset.size();
    rough::detail::for_each_combination(raw.condition_count(), k, [&](const std::vector<std::size_t>& cols) {
        rough::AttributeSet names;
        for (auto c : cols)
            names.push_back(raw.condition_attributes()[c]);
        auto g = rough::gamma(raw, names);
        if (out.most_influential_any.subset.empty() || g > out.most_influential_any.gamma)
            out.most_influential_any = {names, g, false};
    });
    out.most_influential_any.agrees_with_published =
        out.most_influential_any.subset == out.most_influential_listed.subset;
    if (!out.most_influential_any.agrees_with_published)
        out.notes.push_back("the most influential listed subset is not the best " + std::to_string(k) +
                            "-attribute subset overall");

    const auto all = all_stratum_attributes();
    out.full_gamma_raw = rough::gamma(raw, all);
    out.boundary_raw = rough::set_difference(raw.universe(), rough::positive_region(raw, all));
    out.full_gamma_deduplicated = rough::gamma(dedup, all);
    out.reducts_raw = rough::find_reducts(raw);
    out.core_raw = rough::core(raw);

    if (detail::kStratumATable[0b0111] == StratumStatus::valid)
        out.notes.push_back("stratum A row (No, Yes, Yes, Yes) -> Valid is kept as published although "
                            "its neighbours with fewer indicators are Suspicious");
    out.notes.push_back("rows 2/25 and 14/26 repeat a condition tuple with opposite decisions; "
                        "the deduplicated table keeps the later copy");
    return out;
}

} // namespace phish

#endif
