#ifndef ROUGHPHISH_PHISHING_FEATURES_HPP
#define ROUGHPHISH_PHISHING_FEATURES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phish {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Answer to a yes/no indicator that may not have been observed.
enum class TriState { no, yes, unknown };

inline std::string_view to_string(TriState t) {
    switch (t) {
    case TriState::no: return "no";
    case TriState::yes: return "yes";
    case TriState::unknown: return "unknown";
    }
    return "unknown";
}

inline std::optional<TriState> parse_tristate(std::string_view s) {
    if (s == "no")
        return TriState::no;
    if (s == "yes")
        return TriState::yes;
    if (s == "unknown")
        return TriState::unknown;
    return std::nullopt;
}

inline TriState from_bool(bool b) { return b ? TriState::yes : TriState::no; }

/// The thirteen phishing indicators, grouped by stratum in declaration order.
enum class Feature : std::size_t {
    // Stratum A: URL shape
    long_url_link,
    ip_instead_of_dns,
    many_dots,
    modified_port,
    // Stratum B: certificate / domain
    suspicious_ssl,
    domain_age_under_6mo,
    unsecured_page,
    // Stratum C: page behaviour
    slow_account_access,
    js_hiding,
    popup_windows,
    // Stratum D: reputation
    visual_similarity,
    google_blacklisted,
    redirected_pages,
};

inline constexpr std::size_t kFeatureCount = 13;

inline constexpr std::array<Feature, kFeatureCount> kAllFeatures = {
    Feature::long_url_link,      Feature::ip_instead_of_dns, Feature::many_dots,
    Feature::modified_port,      Feature::suspicious_ssl,    Feature::domain_age_under_6mo,
    Feature::unsecured_page,     Feature::slow_account_access, Feature::js_hiding,
    Feature::popup_windows,      Feature::visual_similarity, Feature::google_blacklisted,
    Feature::redirected_pages,
};

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "long_url_link",      "ip_instead_of_dns", "many_dots",         "modified_port",
    "suspicious_ssl",     "domain_age_under_6mo", "unsecured_page", "slow_account_access",
    "js_hiding",          "popup_windows",     "visual_similarity", "google_blacklisted",
    "redirected_pages",
};

constexpr std::size_t index_of(Feature f) { return static_cast<std::size_t>(f); }

inline std::string_view feature_name(Feature f) { return kFeatureNames[index_of(f)]; }

inline std::optional<Feature> parse_feature(std::string_view name) {
    for (std::size_t i = 0; i < kFeatureCount; ++i)
        if (kFeatureNames[i] == name)
            return kAllFeatures[i];
    return std::nullopt;
}

/// Derivable from the URL text alone.
constexpr bool is_lexical(Feature f) {
    switch (f) {
    case Feature::long_url_link:
    case Feature::ip_instead_of_dns:
    case Feature::many_dots:
    case Feature::modified_port:
    case Feature::unsecured_page:
        return true;
    default:
        return false;
    }
}

enum class Stratum : std::size_t { a, b, c, d };

inline constexpr std::array<Stratum, 4> kAllStrata = {Stratum::a, Stratum::b, Stratum::c, Stratum::d};

inline std::span<const Feature> features_of(Stratum s) {
    static constexpr std::array<Feature, 4> a = {Feature::long_url_link, Feature::ip_instead_of_dns,
                                                 Feature::many_dots, Feature::modified_port};
    static constexpr std::array<Feature, 3> b = {Feature::suspicious_ssl,
                                                 Feature::domain_age_under_6mo,
                                                 Feature::unsecured_page};
    static constexpr std::array<Feature, 3> c = {Feature::slow_account_access, Feature::js_hiding,
                                                 Feature::popup_windows};
    static constexpr std::array<Feature, 3> d = {Feature::visual_similarity,
                                                 Feature::google_blacklisted,
                                                 Feature::redirected_pages};
    switch (s) {
    case Stratum::a: return a;
    case Stratum::b: return b;
    case Stratum::c: return c;
    case Stratum::d: return d;
    }
    return {};
}

/// Thirteen tri-state answers; a default-constructed vector is all unknown.
class FeatureVector {
public:
    FeatureVector() { values_.fill(TriState::unknown); }

    static FeatureVector filled(TriState t) {
        FeatureVector v;
        v.values_.fill(t);
        return v;
    }

    TriState get(Feature f) const { return values_[index_of(f)]; }
    FeatureVector& set(Feature f, TriState t) {
        values_[index_of(f)] = t;
        return *this;
    }
    TriState operator[](Feature f) const { return get(f); }

    bool complete() const {
        for (auto t : values_)
            if (t == TriState::unknown)
                return false;
        return true;
    }

    std::vector<Feature> unknown_fields() const {
        std::vector<Feature> out;
        for (auto f : kAllFeatures)
            if (get(f) == TriState::unknown)
                out.push_back(f);
        return out;
    }

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

private:
    std::array<TriState, kFeatureCount> values_{};
};

/// A vector with unknown answers reached an evaluation that needs definite ones.
class IncompleteFeatureError : public Error {
public:
    explicit IncompleteFeatureError(std::vector<Feature> fields)
        : Error(message(fields)), fields_(std::move(fields)) {}

    const std::vector<Feature>& fields() const noexcept { return fields_; }

private:
    static std::string message(const std::vector<Feature>& fields) {
        std::string out = "unknown value for feature";
        out += fields.size() == 1 ? " " : "s ";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0)
                out += ", ";
            out += feature_name(fields[i]);
        }
        return out;
    }

    std::vector<Feature> fields_;
};

} // namespace phish

#endif
