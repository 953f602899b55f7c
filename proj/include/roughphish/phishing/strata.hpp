#ifndef ROUGHPHISH_PHISHING_STRATA_HPP
#define ROUGHPHISH_PHISHING_STRATA_HPP

#include <array>
#include <optional>
#include <string_view>

#include "roughphish/phishing/features.hpp"

namespace phish {

/// Phishy status of one stratum. Ordered Valid < Suspicious < Fake.
enum class StratumStatus { valid, suspicious, fake };

inline std::string_view to_string(StratumStatus s) {
    switch (s) {
    case StratumStatus::valid: return "Valid";
    case StratumStatus::suspicious: return "Suspicious";
    case StratumStatus::fake: return "Fake";
    }
    return "Valid";
}

inline std::optional<StratumStatus> parse_stratum_status(std::string_view s) {
    if (s == "Valid")
        return StratumStatus::valid;
    if (s == "Suspicious")
        return StratumStatus::suspicious;
    if (s == "Fake")
        return StratumStatus::fake;
    return std::nullopt;
}

namespace detail {

inline constexpr auto V = StratumStatus::valid;
inline constexpr auto S = StratumStatus::suspicious;
inline constexpr auto F = StratumStatus::fake;

// Indexed by (long_url, ip_host, many_dots, mod_port) read as a 4-bit number, long_url as MSB.
// Entry 7 (No, Yes, Yes, Yes) -> Valid is kept exactly as the source table prints it.
inline constexpr std::array<StratumStatus, 16> kStratumATable = {
    V, V, V, S, V, S, S, V, //
    V, S, S, F, S, S, F, F,
};

// Shared by strata B, C and D, indexed by the three answers with the first as MSB.
inline constexpr std::array<StratumStatus, 8> kStratumBcdTable = {V, S, S, F, F, F, F, F};

} // namespace detail

inline StratumStatus stratum_a_status(TriState long_url, TriState ip_host, TriState many_dots,
                                      TriState mod_port) {
    std::vector<Feature> missing;
    const std::array<std::pair<TriState, Feature>, 4> inputs = {{
        {long_url, Feature::long_url_link},
        {ip_host, Feature::ip_instead_of_dns},
        {many_dots, Feature::many_dots},
        {mod_port, Feature::modified_port},
    }};
    std::size_t index = 0;
    for (auto [t, f] : inputs) {
        if (t == TriState::unknown)
            missing.push_back(f);
        index = index * 2 + (t == TriState::yes ? 1 : 0);
    }
    if (!missing.empty())
        throw IncompleteFeatureError(std::move(missing));
    return detail::kStratumATable[index];
}

/// Stratum B, C or D; all three share one truth table.
inline StratumStatus stratum_bcd_status(Stratum stratum, TriState first, TriState second,
                                        TriState third) {
    if (stratum == Stratum::a)
        throw Error("stratum A has four inputs; use stratum_a_status");
    auto fields = features_of(stratum);
    std::vector<Feature> missing;
    const std::array<TriState, 3> inputs = {first, second, third};
    std::size_t index = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (inputs[i] == TriState::unknown)
            missing.push_back(fields[i]);
        index = index * 2 + (inputs[i] == TriState::yes ? 1 : 0);
    }
    if (!missing.empty())
        throw IncompleteFeatureError(std::move(missing));
    return detail::kStratumBcdTable[index];
}

/// How unknown answers are treated before stratum evaluation.
enum class CompletionPolicy {
    none,        ///< unknown is an error
    pessimistic, ///< unknown -> yes
    optimistic,  ///< unknown -> no
};

inline std::string_view to_string(CompletionPolicy p) {
    switch (p) {
    case CompletionPolicy::none: return "none";
    case CompletionPolicy::pessimistic: return "pessimistic";
    case CompletionPolicy::optimistic: return "optimistic";
    }
    return "none";
}

inline std::optional<CompletionPolicy> parse_completion_policy(std::string_view s) {
    if (s == "none")
        return CompletionPolicy::none;
    if (s == "pessimistic")
        return CompletionPolicy::pessimistic;
    if (s == "optimistic")
        return CompletionPolicy::optimistic;
    return std::nullopt;
}

inline FeatureVector complete_with(FeatureVector v, CompletionPolicy policy) {
    if (policy == CompletionPolicy::none) {
        auto missing = v.unknown_fields();
        if (!missing.empty())
            throw IncompleteFeatureError(std::move(missing));
        return v;
    }
    auto fill = policy == CompletionPolicy::pessimistic ? TriState::yes : TriState::no;
    for (auto f : v.unknown_fields())
        v.set(f, fill);
    return v;
}

struct StrataProfile {
    std::array<StratumStatus, 4> status{};

    StratumStatus operator[](Stratum s) const { return status[static_cast<std::size_t>(s)]; }

    friend bool operator==(const StrataProfile&, const StrataProfile&) = default;
};

/// Each stratum is looked up independently from its own features.
inline StrataProfile evaluate_strata(const FeatureVector& input,
                                     CompletionPolicy policy = CompletionPolicy::none) {
    auto v = complete_with(input, policy);
    using enum Feature;
    StrataProfile p;
    p.status[0] = stratum_a_status(v[long_url_link], v[ip_instead_of_dns], v[many_dots],
                                   v[modified_port]);
    p.status[1] = stratum_bcd_status(Stratum::b, v[suspicious_ssl], v[domain_age_under_6mo],
                                     v[unsecured_page]);
    p.status[2] = stratum_bcd_status(Stratum::c, v[slow_account_access], v[js_hiding],
                                     v[popup_windows]);
    p.status[3] = stratum_bcd_status(Stratum::d, v[visual_similarity], v[google_blacklisted],
                                     v[redirected_pages]);
    return p;
}

} // namespace phish

#endif
