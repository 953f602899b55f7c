#ifndef ROUGHPHISH_PHISHING_PROBE_HPP
#define ROUGHPHISH_PHISHING_PROBE_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughphish/phishing/url.hpp"

namespace phish {

/// An answer was supplied for a feature that is derived from the URL text.
class FeatureConflictError : public Error {
public:
    explicit FeatureConflictError(Feature f)
        : Error("feature '" + std::string(feature_name(f)) +
                "' is derived from the URL and cannot be supplied externally"),
          feature_(f) {}

    Feature feature() const noexcept { return feature_; }

private:
    Feature feature_;
};

class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Raised by providers on I/O failure; the registry turns it into an unknown answer.
class ProbeError : public Error {
public:
    using Error::Error;
};

struct ProbeAnswer {
    TriState value = TriState::unknown;
    /// "manual-file", "stub", or a provider name.
    std::string source;
};

using ProbeAnswerSet = std::map<Feature, ProbeAnswer>;

inline constexpr std::string_view kLexicalSource = "lexical";

/// A feature vector together with where each answer came from ("" when nobody answered).
struct ExtractedFeatures {
    FeatureVector values;
    std::array<std::string, kFeatureCount> sources;
    std::vector<std::string> warnings;
};

/// Lexical answers are authoritative; an external answer for a lexical feature is a conflict.
inline ExtractedFeatures merge_answers(const FeatureVector& lexical, const ProbeAnswerSet& answers) {
    ExtractedFeatures out;
    for (auto f : kAllFeatures) {
        if (!is_lexical(f))
            continue;
        out.values.set(f, lexical.get(f));
        if (lexical.get(f) != TriState::unknown)
            out.sources[index_of(f)] = kLexicalSource;
    }
    for (const auto& [f, answer] : answers) {
        if (is_lexical(f))
            throw FeatureConflictError(f);
        out.values.set(f, answer.value);
        out.sources[index_of(f)] = answer.source;
    }
    return out;
}

/**
 * Source of answers for the eight non-lexical features.
 *
 * Implementations must be deterministic for a given (feature, url, provider
 * state), and safe to call concurrently for distinct URLs. I/O failures are
 * reported by throwing ProbeError.
 */
class ProbeProvider {
public:
    virtual ~ProbeProvider() = default;
    virtual std::string name() const = 0;
    virtual TriState probe(Feature feature, const UrlParts& url) const = 0;
};

/// Answers unknown for everything.
class StubProvider final : public ProbeProvider {
public:
    std::string name() const override { return "stub"; }
    TriState probe(Feature, const UrlParts&) const override { return TriState::unknown; }
};

/// Replays answers read from an answers file; missing keys are unknown.
class ManualFileProvider final : public ProbeProvider {
public:
    explicit ManualFileProvider(std::map<Feature, TriState> answers) : answers_(std::move(answers)) {
        for (const auto& [f, _] : answers_)
            if (is_lexical(f))
                throw FeatureConflictError(f);
    }

    std::string name() const override { return "manual-file"; }
    TriState probe(Feature feature, const UrlParts&) const override {
        auto it = answers_.find(feature);
        return it == answers_.end() ? TriState::unknown : it->second;
    }

private:
    std::map<Feature, TriState> answers_;
};

struct ProbeResult {
    ProbeAnswer answer;
    std::optional<std::string> warning;
};

class ProviderRegistry {
public:
    ProviderRegistry() { add(std::make_shared<StubProvider>()); }

    void add(std::shared_ptr<const ProbeProvider> provider) {
        auto key = provider->name();
        providers_[key] = std::move(provider);
    }

    bool contains(const std::string& id) const { return providers_.count(id) != 0; }

    /// Provider failures degrade to unknown with a warning; they never propagate.
    ProbeResult probe(Feature feature, const UrlParts& url, const std::string& provider_id) const {
        if (is_lexical(feature))
            throw FeatureConflictError(feature);
        auto it = providers_.find(provider_id);
        if (it == providers_.end())
            throw ConfigurationError("probe provider '" + provider_id + "' is not registered");
        try {
            return {{it->second->probe(feature, url), provider_id}, std::nullopt};
        } catch (const ProbeError& e) {
            return {{TriState::unknown, provider_id},
                    "probe of '" + std::string(feature_name(feature)) + "' via '" + provider_id +
                        "' failed: " + e.what()};
        }
    }

    /// Probes all eight non-lexical features through one provider.
    std::pair<ProbeAnswerSet, std::vector<std::string>> probe_all(const UrlParts& url,
                                                                  const std::string& provider_id) const {
        ProbeAnswerSet answers;
        std::vector<std::string> warnings;
        for (auto f : kAllFeatures) {
            if (is_lexical(f))
                continue;
            auto result = probe(f, url, provider_id);
            answers.emplace(f, std::move(result.answer));
            if (result.warning)
                warnings.push_back(std::move(*result.warning));
        }
        return {std::move(answers), std::move(warnings)};
    }

private:
    std::map<std::string, std::shared_ptr<const ProbeProvider>> providers_;
};

/// parse -> lexical features -> provider answers -> merged vector.
inline ExtractedFeatures extract_features(const UrlParts& url, const ProviderRegistry& registry,
                                          const std::string& provider_id,
                                          const LexicalThresholds& thresholds = {}) {
    auto [answers, warnings] = registry.probe_all(url, provider_id);
    auto out = merge_answers(lexical_features(url, thresholds), answers);
    out.warnings = std::move(warnings);
    return out;
}

} // namespace phish

#endif
