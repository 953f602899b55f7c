// roughphish: rough-set decision analysis and phishing reliability classification.
//
//   classify      FEATURES.json  -> reliability verdict (exit 0 Reliable, 2 Unreliable, 3 Indeterminate)
//   extract       URL            -> feature vector with per-field provenance
//   analyze       TABLE.csv      -> gammas, reducts, core and minimal certain rules
//   verify-paper                 -> recomputes the published survey and audits the published rules
//
// Data goes to stdout, diagnostics to stderr. Usage and input errors exit 1.

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "roughphish/json.hpp"

namespace {

using roughphish::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnreliable = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitMismatch = 2;

enum class Format { text, json };

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const rough::AttributeSet& attrs, std::string_view sep = ", ", bool quote = false) {
    std::string out;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i != 0)
            out += sep;
        out += quote ? "\"" + attrs[i] + "\"" : attrs[i];
    }
    return attrs.empty() ? "{}" : out;
}

std::string join_ids(const rough::ObjectSet& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != 0)
            out += ", ";
        out += std::to_string(ids[i]);
    }
    return out + "}";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw roughphish::JsonInputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
    std::string features_path;
    std::string policy = "conservative";
    std::string completion = "none";
    std::string rules = "paper";
    bool downgrade = false;
    Format format = Format::text;
};

void print_classification_text(const phish::ClassificationReport& r) {
    for (auto s : phish::kAllStrata) {
        std::cout << std::left << std::setw(11) << phish::stratum_attribute(s) << std::setw(12)
                  << phish::to_string(r.profile[s]);
        for (auto f : phish::features_of(s))
            std::cout << " " << phish::feature_name(f) << "=" << phish::to_string(r.input.get(f));
        std::cout << "\n";
    }
    std::cout << "\nFired rules:\n";
    if (r.fired.empty())
        std::cout << "  (none)\n";
    for (const auto& f : r.fired)
        std::cout << "  [" << f.id << "] " << f.rule.str() << "  (" << rough::to_string(f.rule.provenance())
                  << ")\n";
    std::cout << "\nPolicy: " << rough::to_string(r.options.conflict)
              << ", completion: " << phish::to_string(r.options.completion) << "\n";
    for (const auto& n : r.notes)
        std::cout << "Note: " << n << "\n";
    std::cout << "Reliability Factor: " << phish::to_string(r.verdict);
    if (r.verdict != r.raw_verdict)
        std::cout << " (raw: " << phish::to_string(r.raw_verdict) << ")";
    std::cout << "\n";
}

int run_classify(const ClassifyArgs& args) {
    auto input = roughphish::parse_json_text(read_input(args.features_path), "'" + args.features_path + "'");
    auto vector = roughphish::feature_vector_from_json(input);

    phish::ClassifyOptions options;
    options.conflict = args.policy == "strict" ? rough::ConflictMode::strict : rough::ConflictMode::conservative;
    options.completion = *phish::parse_completion_policy(args.completion);
    options.downgrade_indeterminate = args.downgrade;

    std::vector<rough::DecisionRule> rules =
        args.rules == "induced"
            ? rough::induce_certain_rules(phish::deduplicate_last_wins(phish::canonical_reliability_table()))
            : phish::paper_rule_set();

    auto report = phish::classify(vector, rules, options);
    if (args.format == Format::json)
        print_json(roughphish::to_json(report));
    else
        print_classification_text(report);

    switch (report.verdict) {
    case phish::Verdict::reliable: return kExitOk;
    case phish::Verdict::unreliable: return kExitUnreliable;
    case phish::Verdict::indeterminate: return kExitIndeterminate;
    }
    return kExitIndeterminate;
}

// ---- extract ---------------------------------------------------------------

struct ExtractArgs {
    std::string url;
    std::string answers_path;
    std::string thresholds_path;
    bool require_complete = false;
    bool vector_only = false;
    Format format = Format::json;
};

int run_extract(const ExtractArgs& args) {
    auto parts = phish::parse_url(args.url);
    phish::LexicalThresholds thresholds;
    if (!args.thresholds_path.empty())
        thresholds = roughphish::thresholds_from_json(roughphish::read_json_file(args.thresholds_path));

    phish::ProviderRegistry registry;
    std::string provider = "stub";
    if (!args.answers_path.empty()) {
        registry.add(std::make_shared<phish::ManualFileProvider>(
            roughphish::answers_from_json(roughphish::read_json_file(args.answers_path))));
        provider = "manual-file";
    }
    auto extracted = phish::extract_features(parts, registry, provider, thresholds);
    for (const auto& w : extracted.warnings)
        std::cerr << "warning: " << w << "\n";

    if (args.require_complete && !extracted.values.complete()) {
        std::string names;
        for (auto f : extracted.values.unknown_fields())
            names += (names.empty() ? "" : ", ") + std::string(phish::feature_name(f));
        std::cerr << "error: incomplete feature vector; unknown: " << names << "\n";
        return kExitUsage;
    }

    if (args.format == Format::json) {
        if (args.vector_only) {
            print_json(roughphish::to_json(extracted.values));
        } else {
            auto out = roughphish::to_json(extracted);
            out["url"] = roughphish::to_json(parts);
            print_json(out);
        }
        return kExitOk;
    }
    for (auto s : phish::kAllStrata) {
        std::cout << phish::stratum_attribute(s) << "\n";
        for (auto f : phish::features_of(s)) {
            const auto& src = extracted.sources[phish::index_of(f)];
            std::cout << "  " << std::left << std::setw(22) << phish::feature_name(f) << std::setw(8)
                      << phish::to_string(extracted.values.get(f)) << (src.empty() ? "-" : src) << "\n";
        }
    }
    return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string table_path;
    std::vector<std::string> subsets;
    bool all_subsets = false;
    bool reducts = false;
    bool core = false;
    bool rules = false;
    Format format = Format::text;
};

rough::AttributeSet parse_subset(const std::string& spec) {
    rough::AttributeSet out;
    if (spec.empty() || spec == "{}")
        return out;
    std::string::size_type start = 0;
    while (true) {
        auto comma = spec.find(',', start);
        auto item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        if (item.empty())
            throw CLI::ValidationError("--subset", "empty attribute name in '" + spec + "'");
        out.push_back(item);
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

int run_analyze(const AnalyzeArgs& args) {
    auto table = rough::read_decision_table_csv(std::filesystem::path(args.table_path));
    if (table.empty())
        throw rough::TableFormatError("table has no objects");

    std::vector<rough::AttributeSet> subsets;
    for (const auto& s : args.subsets)
        subsets.push_back(parse_subset(s));
    if (args.all_subsets) {
        if (table.condition_count() > rough::kMaxExhaustiveAttributes)
            throw rough::CapacityError(table.condition_count(), rough::kMaxExhaustiveAttributes);
        for (std::size_t k = 0; k <= table.condition_count(); ++k)
            rough::detail::for_each_combination(table.condition_count(), k,
                                                [&](const std::vector<std::size_t>& cols) {
                                                    rough::AttributeSet names;
                                                    for (auto c : cols)
                                                        names.push_back(table.condition_attributes()[c]);
                                                    subsets.push_back(std::move(names));
                                                });
    }
    const bool nothing_requested = subsets.empty() && !args.reducts && !args.core && !args.rules;
    const bool want_reducts = args.reducts || nothing_requested;
    const bool want_core = args.core || nothing_requested;
    const bool want_rules = args.rules || nothing_requested;

    auto survey = rough::subset_gamma_survey(table, subsets);
    auto full = rough::gamma(table, table.condition_attributes());
    std::vector<rough::AttributeSet> reducts;
    rough::AttributeSet core_attrs;
    std::vector<rough::DecisionRule> rules;
    if (want_reducts)
        reducts = rough::find_reducts(table);
    if (want_core)
        core_attrs = rough::core(table);
    if (want_rules)
        rules = rough::induce_certain_rules(table);

    if (args.format == Format::json) {
        Json out{{"table",
                  Json{{"objects", table.size()},
                       {"condition_attributes", roughphish::detail::attribute_list(table.condition_attributes())},
                       {"decision_attribute", table.decision_attribute()},
                       {"consistent", full == rough::Fraction(1, 1)}}},
                 {"full_gamma", roughphish::to_json(full)}};
        if (!subsets.empty()) {
            Json entries = Json::array();
            for (const auto& e : survey.entries)
                entries.push_back(roughphish::to_json(e));
            out["subsets"] = std::move(entries);
        }
        if (want_reducts)
            out["reducts"] = roughphish::to_json(reducts);
        if (want_core)
            out["core"] = roughphish::detail::attribute_list(core_attrs);
        if (want_rules) {
            Json list = Json::array();
            for (std::size_t i = 0; i < rules.size(); ++i)
                list.push_back(roughphish::rule_with_id(i + 1, rules[i]));
            out["rules"] = std::move(list);
        }
        print_json(out);
        return kExitOk;
    }

    std::cout << table.size() << " objects, " << table.condition_count() << " condition attributes, decision '"
              << table.decision_attribute() << "'\n";
    std::cout << "gamma(all conditions) = " << full << " = " << full.decimal() << "\n";
    if (!subsets.empty()) {
        std::cout << "\nSubset\tGamma\tFraction\n";
        for (const auto& e : survey.entries)
            std::cout << join(e.attributes, ", ", true) << "\t" << e.gamma.decimal() << "\t" << e.gamma << "\n";
    }
    if (want_reducts) {
        std::cout << "\nReducts:\n";
        for (const auto& r : reducts)
            std::cout << "  " << join(r) << "\n";
    }
    if (want_core)
        std::cout << "\nCore: " << join(core_attrs) << "\n";
    if (want_rules) {
        std::cout << "\nMinimal certain rules:\n";
        for (std::size_t i = 0; i < rules.size(); ++i)
            std::cout << "  [" << i + 1 << "] " << rules[i].str() << "\n";
    }
    return kExitOk;
}

// ---- verify-paper ----------------------------------------------------------

int run_verify(Format format) {
    auto v = phish::verify_paper_artifacts();
    if (format == Format::json) {
        print_json(roughphish::to_json(v));
    } else {
        std::cout << "Dependency survey (positive region / |U|)\n";
        for (const auto& g : v.gamma_checks) {
            std::cout << "  " << std::left << std::setw(40) << join(g.subset, ", ", true) << std::setw(22)
                      << g.rendered << std::setw(7) << g.computed.str() << (g.passed ? "ok" : "MISMATCH");
            if (!g.passed)
                std::cout << " (published " << g.published << " = " << g.expected << ")";
            std::cout << "\n";
        }
        std::cout << "\nRule audit (raw table / deduplicated table)\n";
        std::size_t rule_width = 0;
        for (const auto& a : v.rule_audits)
            rule_width = std::max(rule_width, a.rule.str().size() + 2);
        for (const auto& a : v.rule_audits) {
            std::cout << "  [" << std::setw(2) << std::right << a.id << "] " << std::left
                      << std::setw(static_cast<int>(rule_width)) << a.rule.str() << std::setw(13) << rough::to_string(a.raw.status) << std::setw(13)
                      << rough::to_string(a.deduplicated.status);
            if (!a.raw.counterexamples.empty())
                std::cout << "counterexamples " << join_ids(a.raw.counterexamples);
            if (!a.passed)
                std::cout << " MISMATCH (expected raw " << rough::to_string(a.expected_raw) << ")";
            if (!a.minimal_on_deduplicated)
                std::cout << " not minimal";
            std::cout << "\n";
        }
        std::cout << "\nRules cover the deduplicated table: " << (v.rules_cover_deduplicated ? "yes" : "no") << "\n";
        std::cout << "gamma(all strata): raw " << v.full_gamma_raw << ", deduplicated " << v.full_gamma_deduplicated
                  << "; boundary " << join_ids(v.boundary_raw) << "\n";
        std::cout << "Reducts:";
        for (const auto& r : v.reducts_raw)
            std::cout << " {" << join(r) << "}";
        std::cout << "\nCore: {" << join(v.core_raw) << "}\n";
        std::cout << "Least influential listed stratum: " << join(v.least_influential.subset) << " ("
                  << v.least_influential.gamma << ")\n";
        std::cout << "Least influential stratum overall: " << join(v.least_influential_any.subset) << " ("
                  << v.least_influential_any.gamma << ")\n";
        std::cout << "Most influential listed subset: " << join(v.most_influential_listed.subset) << " ("
                  << v.most_influential_listed.gamma << ")\n";
        std::cout << "Most influential subset of that size overall: " << join(v.most_influential_any.subset)
                  << " (" << v.most_influential_any.gamma << ")\n";
        for (const auto& n : v.notes)
            std::cout << "Note: " << n << "\n";
        std::cout << (v.passed() ? "PASS" : "FAIL") << "\n";
    }
    if (!v.passed()) {
        for (const auto& g : v.gamma_checks)
            if (!g.passed)
                std::cerr << "mismatch: gamma(" << join(g.subset) << ") computed " << g.computed << " ("
                          << g.rendered << "), published " << g.published << "\n";
        for (const auto& a : v.rule_audits)
            if (!a.passed)
                std::cerr << "mismatch: rule " << a.id << " raw status " << rough::to_string(a.raw.status)
                          << ", expected " << rough::to_string(a.expected_raw) << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rough-set decision analysis and phishing reliability classification"};
    app.require_subcommand(1, 1);

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Classify a 13-feature vector (JSON file, '-' for stdin)");
    classify->add_option("features", classify_args.features_path, "Feature-vector JSON file")->required();
    classify->add_option("--policy", classify_args.policy, "Conflict policy")
        ->check(CLI::IsMember({"conservative", "strict"}));
    classify->add_option("--complete", classify_args.completion, "Treatment of unknown features")
        ->check(CLI::IsMember({"none", "pessimistic", "optimistic"}));
    classify->add_option("--rules", classify_args.rules, "Rule set: published rules or rules induced from the "
                                                         "deduplicated reliability table")
        ->check(CLI::IsMember({"paper", "induced"}));
    classify->add_flag("--downgrade-indeterminate", classify_args.downgrade, "Report Indeterminate as Unreliable");
    classify->add_option("--format", classify_args.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    ExtractArgs extract_args;
    auto* extract = app.add_subcommand("extract", "Derive features from a URL plus optional manual answers");
    extract->add_option("url", extract_args.url, "http(s) URL")->required();
    extract->add_option("--answers", extract_args.answers_path, "Answers JSON for the non-lexical features");
    extract->add_option("--thresholds", extract_args.thresholds_path, "Threshold config JSON");
    extract->add_flag("--require-complete", extract_args.require_complete, "Fail when any feature stays unknown");
    extract->add_flag("--vector-only", extract_args.vector_only, "Emit only the 13-field vector (input for classify)");
    extract->add_option("--format", extract_args.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Rough-set analysis of a decision-table CSV");
    analyze->add_option("table", analyze_args.table_path, "CSV file; last column is the decision")->required();
    analyze->add_option("--subset", analyze_args.subsets,
                        "Comma-separated attribute subset to survey (repeatable; '{}' is the empty set)")
        ->allow_extra_args(false);
    analyze->add_flag("--all-subsets", analyze_args.all_subsets, "Survey every condition-attribute subset");
    analyze->add_flag("--reducts", analyze_args.reducts, "Compute all reducts");
    analyze->add_flag("--core", analyze_args.core, "Compute the core");
    analyze->add_flag("--rules", analyze_args.rules, "Induce all minimal certain rules");
    analyze->add_option("--format", analyze_args.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    Format verify_format = Format::text;
    auto* verify = app.add_subcommand("verify-paper", "Recompute the published survey and audit the published rules");
    verify->add_option("--format", verify_format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify)
            return run_classify(classify_args);
        if (*extract)
            return run_extract(extract_args);
        if (*analyze)
            return run_analyze(analyze_args);
        if (*verify)
            return run_verify(verify_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
