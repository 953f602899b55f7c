#ifndef ROUGHPHISH_JSON_HPP
#define ROUGHPHISH_JSON_HPP

// JSON schemas for the command-line surface. Objects are emitted with a fixed
// key order (ordered_json), so identical inputs serialize to identical bytes.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "roughphish/core.hpp"
#include "roughphish/phishing/classify.hpp"
#include "roughphish/phishing/probe.hpp"
#include "roughphish/phishing/verify.hpp"

namespace roughphish {

using Json = nlohmann::ordered_json;

/// Malformed JSON input; `field` names the offending key when there is one.
class JsonInputError : public phish::Error {
public:
    JsonInputError(const std::string& message, std::string field = {})
        : phish::Error(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

inline Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonInputError("malformed JSON in " + what + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw JsonInputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), "'" + path + "'");
}

namespace detail {

inline phish::TriState tristate_field(const Json& value, const std::string& key) {
    if (!value.is_string())
        throw JsonInputError("field '" + key + "' must be \"yes\", \"no\" or \"unknown\"", key);
    auto t = phish::parse_tristate(value.get<std::string>());
    if (!t)
        throw JsonInputError("field '" + key + "' has invalid value '" + value.get<std::string>() +
                                 "' (expected yes, no or unknown)",
                             key);
    return *t;
}

inline Json attribute_list(const rough::AttributeSet& attrs) {
    Json out = Json::array();
    for (const auto& a : attrs)
        out.push_back(a);
    return out;
}

inline Json id_list(const rough::ObjectSet& ids) {
    Json out = Json::array();
    for (auto id : ids)
        out.push_back(id);
    return out;
}

} // namespace detail

// ---- feature vectors -------------------------------------------------------

/// Exactly the thirteen canonical names; unknown keys rejected, missing keys are unknown.
inline phish::FeatureVector feature_vector_from_json(const Json& j) {
    if (!j.is_object())
        throw JsonInputError("feature vector must be a JSON object");
    phish::FeatureVector v;
    for (const auto& [key, value] : j.items()) {
        auto f = phish::parse_feature(key);
        if (!f)
            throw JsonInputError("unknown feature name '" + key + "'", key);
        v.set(*f, detail::tristate_field(value, key));
    }
    return v;
}

inline Json to_json(const phish::FeatureVector& v) {
    Json out = Json::object();
    for (auto f : phish::kAllFeatures)
        out[std::string(phish::feature_name(f))] = std::string(phish::to_string(v.get(f)));
    return out;
}

/// Answers file: any subset of the eight non-lexical features.
inline std::map<phish::Feature, phish::TriState> answers_from_json(const Json& j) {
    if (!j.is_object())
        throw JsonInputError("answers file must be a JSON object");
    std::map<phish::Feature, phish::TriState> out;
    for (const auto& [key, value] : j.items()) {
        auto f = phish::parse_feature(key);
        if (!f)
            throw JsonInputError("unknown feature name '" + key + "'", key);
        if (phish::is_lexical(*f))
            throw phish::FeatureConflictError(*f);
        out[*f] = detail::tristate_field(value, key);
    }
    return out;
}

inline phish::LexicalThresholds thresholds_from_json(const Json& j) {
    if (!j.is_object())
        throw JsonInputError("threshold config must be a JSON object");
    phish::LexicalThresholds t;
    for (const auto& [key, value] : j.items()) {
        if (key != "long_url_threshold" && key != "host_dot_threshold")
            throw JsonInputError("unknown threshold '" + key + "'", key);
        if (!value.is_number_integer() || value.get<long long>() < 0)
            throw JsonInputError("threshold '" + key + "' must be a non-negative integer", key);
        auto n = value.get<std::size_t>();
        (key == "long_url_threshold" ? t.long_url_threshold : t.host_dot_threshold) = n;
    }
    return t;
}

inline Json to_json(const phish::ExtractedFeatures& e) {
    Json provenance = Json::object();
    for (auto f : phish::kAllFeatures) {
        const auto& s = e.sources[phish::index_of(f)];
        provenance[std::string(phish::feature_name(f))] = s.empty() ? Json(nullptr) : Json(s);
    }
    Json warnings = Json::array();
    for (const auto& w : e.warnings)
        warnings.push_back(w);
    return Json{{"features", to_json(e.values)},
                {"provenance", std::move(provenance)},
                {"complete", e.values.complete()},
                {"warnings", std::move(warnings)}};
}

inline Json to_json(const phish::UrlParts& p) {
    return Json{{"scheme", p.scheme},
                {"host", p.host},
                {"host_is_ip", p.host_is_ip},
                {"port", p.port},
                {"explicit_port_given", p.explicit_port_given},
                {"path_and_query", p.path_and_query},
                {"raw_length", p.raw_length}};
}

// ---- rules and reports -----------------------------------------------------

inline Json to_json(const rough::DecisionRule& rule) {
    Json conditions = Json::array();
    for (const auto& c : rule.conditions())
        conditions.push_back(Json{{"attribute", c.attribute}, {"value", c.value}});
    return Json{{"conditions", std::move(conditions)},
                {"conclusion", rule.conclusion()},
                {"provenance", std::string(rough::to_string(rule.provenance()))}};
}

inline Json rule_with_id(std::size_t id, const rough::DecisionRule& rule) {
    Json out{{"id", id}};
    out.update(to_json(rule));
    return out;
}

inline Json to_json(const phish::StrataProfile& p) {
    Json out = Json::object();
    for (auto s : phish::kAllStrata)
        out[phish::stratum_attribute(s)] = std::string(phish::to_string(p[s]));
    return out;
}

/// Keys: verdict, raw_verdict, strata, fired_rules, policy, completion, notes, features.
inline Json to_json(const phish::ClassificationReport& r) {
    Json fired = Json::array();
    for (const auto& f : r.fired)
        fired.push_back(rule_with_id(f.id, f.rule));
    Json notes = Json::array();
    for (const auto& n : r.notes)
        notes.push_back(n);
    return Json{{"verdict", std::string(phish::to_string(r.verdict))},
                {"raw_verdict", std::string(phish::to_string(r.raw_verdict))},
                {"strata", to_json(r.profile)},
                {"fired_rules", std::move(fired)},
                {"policy", std::string(rough::to_string(r.options.conflict))},
                {"completion", std::string(phish::to_string(r.options.completion))},
                {"downgrade_indeterminate", r.options.downgrade_indeterminate},
                {"notes", std::move(notes)},
                {"features", to_json(r.input)}};
}

inline Json to_json(const rough::Fraction& f) {
    return Json{{"numerator", f.numerator()}, {"denominator", f.denominator()}, {"decimal", f.decimal()}};
}

inline Json to_json(const rough::RuleCheck& c) {
    return Json{{"status", std::string(rough::to_string(c.status))},
                {"vacuous", c.vacuous()},
                {"matched", detail::id_list(c.matched)},
                {"counterexamples", detail::id_list(c.counterexamples)}};
}

inline Json to_json(const phish::InfluenceFinding& f) {
    return Json{{"subset", detail::attribute_list(f.subset)},
                {"gamma", to_json(f.gamma)},
                {"agrees_with_published", f.agrees_with_published}};
}

inline Json to_json(const phish::PaperVerification& v) {
    Json gammas = Json::array();
    for (const auto& g : v.gamma_checks)
        gammas.push_back(Json{{"subset", detail::attribute_list(g.subset)},
                              {"expected", to_json(g.expected)},
                              {"published", g.published},
                              {"computed", to_json(g.computed)},
                              {"passed", g.passed}});
    Json audits = Json::array();
    for (const auto& a : v.rule_audits) {
        auto rule = rule_with_id(a.id, a.rule);
        audits.push_back(Json{{"rule", std::move(rule)},
                              {"expected_raw", std::string(rough::to_string(a.expected_raw))},
                              {"raw", to_json(a.raw)},
                              {"deduplicated", to_json(a.deduplicated)},
                              {"minimal_on_deduplicated", a.minimal_on_deduplicated},
                              {"passed", a.passed}});
    }
    Json reducts = Json::array();
    for (const auto& r : v.reducts_raw)
        reducts.push_back(detail::attribute_list(r));
    Json notes = Json::array();
    for (const auto& n : v.notes)
        notes.push_back(n);
    return Json{{"passed", v.passed()},
                {"gamma_checks", std::move(gammas)},
                {"rule_audit", std::move(audits)},
                {"rules_cover_deduplicated", v.rules_cover_deduplicated},
                {"full_gamma_raw", to_json(v.full_gamma_raw)},
                {"boundary_raw", detail::id_list(v.boundary_raw)},
                {"full_gamma_deduplicated", to_json(v.full_gamma_deduplicated)},
                {"reducts", std::move(reducts)},
                {"core", detail::attribute_list(v.core_raw)},
                {"least_influential_listed", to_json(v.least_influential)},
                {"least_influential_any", to_json(v.least_influential_any)},
                {"most_influential_listed", to_json(v.most_influential_listed)},
                {"most_influential_any", to_json(v.most_influential_any)},
                {"notes", std::move(notes)}};
}

inline Json to_json(const rough::GammaEntry& e) {
    return Json{{"subset", detail::attribute_list(e.attributes)},
                {"positive_region", detail::id_list(e.positive_region)},
                {"gamma", to_json(e.gamma)}};
}

inline Json to_json(const std::vector<rough::AttributeSet>& sets) {
    Json out = Json::array();
    for (const auto& s : sets)
        out.push_back(detail::attribute_list(s));
    return out;
}

} // namespace roughphish

#endif
