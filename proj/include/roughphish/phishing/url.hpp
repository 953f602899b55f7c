#ifndef ROUGHPHISH_PHISHING_URL_HPP
#define ROUGHPHISH_PHISHING_URL_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "roughphish/phishing/features.hpp"

namespace phish {

class UrlParseError : public Error {
public:
    UrlParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    /// 0-based byte offset into the raw URL.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct UrlParts {
    std::string scheme;
    std::string host;
    bool host_is_ip = false;
    /// Effective port: explicit, or the scheme default.
    int port = 0;
    bool explicit_port_given = false;
    /// Everything from the first '/', '?' or '#' after the authority.
    std::string path_and_query;
    /// Character (code point) count of the full URL.
    std::size_t raw_length = 0;

    friend bool operator==(const UrlParts&, const UrlParts&) = default;
};

inline int default_port(std::string_view scheme) { return scheme == "https" ? 443 : 80; }

/// Four decimal octets 0-255 separated by dots, each 1-3 digits.
inline bool is_ipv4_literal(std::string_view host) {
    int octets = 0;
    std::size_t i = 0;
    while (true) {
        std::size_t start = i;
        while (i < host.size() && std::isdigit(static_cast<unsigned char>(host[i])))
            ++i;
        auto len = i - start;
        if (len == 0 || len > 3)
            return false;
        int value = 0;
        std::from_chars(host.data() + start, host.data() + i, value);
        if (value > 255)
            return false;
        ++octets;
        if (i == host.size())
            return octets == 4;
        if (host[i] != '.' || octets == 4)
            return false;
        ++i;
    }
}

inline std::size_t utf8_length(std::string_view s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

/// Splits an http(s) URL. IPv6 literals and other schemes are rejected.
inline UrlParts parse_url(std::string_view raw) {
    if (raw.empty())
        throw UrlParseError("empty URL", 0);
    UrlParts parts;
    parts.raw_length = utf8_length(raw);

    auto colon = raw.find("://");
    if (colon == std::string_view::npos || colon == 0)
        throw UrlParseError("missing scheme separator '://'", 0);
    parts.scheme.reserve(colon);
    for (char c : raw.substr(0, colon))
        parts.scheme.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (parts.scheme != "http" && parts.scheme != "https")
        throw UrlParseError("unsupported scheme '" + parts.scheme + "'", 0);

    const std::size_t authority_start = colon + 3;
    auto authority_end = raw.find_first_of("/?#", authority_start);
    if (authority_end == std::string_view::npos)
        authority_end = raw.size();
    parts.path_and_query = std::string(raw.substr(authority_end));

    std::size_t host_start = authority_start;
    auto at = raw.substr(authority_start, authority_end - authority_start).rfind('@');
    if (at != std::string_view::npos)
        host_start = authority_start + at + 1;

    if (host_start < authority_end && raw[host_start] == '[')
        throw UrlParseError("IPv6 host literals are not supported", host_start);

    auto port_colon = raw.substr(host_start, authority_end - host_start).find(':');
    std::size_t host_end = port_colon == std::string_view::npos ? authority_end : host_start + port_colon;
    if (host_end == host_start)
        throw UrlParseError("empty host", host_start);
    for (std::size_t i = host_start; i < host_end; ++i)
        parts.host.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
    parts.host_is_ip = is_ipv4_literal(parts.host);

    if (port_colon == std::string_view::npos) {
        parts.port = default_port(parts.scheme);
    } else {
        const std::size_t port_start = host_end + 1;
        auto digits = raw.substr(port_start, authority_end - port_start);
        if (digits.empty())
            throw UrlParseError("empty port", port_start);
        int port = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || port < 1 || port > 65535 ||
            !std::isdigit(static_cast<unsigned char>(digits.front())))
            throw UrlParseError("malformed port '" + std::string(digits) + "'", port_start);
        parts.port = port;
        parts.explicit_port_given = true;
    }
    return parts;
}

struct LexicalThresholds {
    /// URLs of at least this many characters count as long.
    std::size_t long_url_threshold = 54;
    /// Hosts with more than this many dots count as having many dots.
    std::size_t host_dot_threshold = 3;
};

/// Sets the five URL-derivable features; the other eight stay unknown.
inline FeatureVector lexical_features(const UrlParts& parts, const LexicalThresholds& thresholds = {}) {
    FeatureVector v;
    auto dots = static_cast<std::size_t>(std::count(parts.host.begin(), parts.host.end(), '.'));
    v.set(Feature::long_url_link, from_bool(parts.raw_length >= thresholds.long_url_threshold));
    v.set(Feature::ip_instead_of_dns, from_bool(parts.host_is_ip));
    v.set(Feature::many_dots, from_bool(dots > thresholds.host_dot_threshold));
    v.set(Feature::modified_port,
          from_bool(parts.explicit_port_given && parts.port != default_port(parts.scheme)));
    v.set(Feature::unsecured_page, from_bool(parts.scheme != "https"));
    return v;
}

} // namespace phish

#endif
