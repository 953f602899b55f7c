#ifndef ROUGHPHISH_CORE_FRACTION_HPP
#define ROUGHPHISH_CORE_FRACTION_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "roughphish/core/errors.hpp"

namespace rough {

/**
 * Non-negative exact fraction. The numerator and denominator are stored as given
 * (15/26 stays 15/26); comparisons are by value, so 15/26 == 30/52.
 */
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::uint64_t numerator, std::uint64_t denominator)
        : num_(numerator), den_(denominator) {
        if (den_ == 0)
            throw UndefinedDivisionError();
    }

    constexpr std::uint64_t numerator() const noexcept { return num_; }
    constexpr std::uint64_t denominator() const noexcept { return den_; }

    Fraction reduced() const {
        auto g = std::gcd(num_, den_);
        return g == 0 ? *this : Fraction(num_ / g, den_ / g);
    }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Shortest decimal string that round-trips through a double, e.g. "0.23076923076923078".
    std::string decimal() const {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, to_double());
        std::string out(buf, end);
        if (out.find_first_of(".e") == std::string::npos)
            out += ".0";
        return out;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
        return static_cast<unsigned __int128>(a.num_) * b.den_ ==
               static_cast<unsigned __int128>(b.num_) * a.den_;
    }

    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
        auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace rough

#endif
