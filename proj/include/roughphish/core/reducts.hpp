#ifndef ROUGHPHISH_CORE_REDUCTS_HPP
#define ROUGHPHISH_CORE_REDUCTS_HPP

#include <cstdint>
#include <vector>

#include "roughphish/core/dependency.hpp"

namespace rough {

/// Hard limit for every exhaustive search over condition-attribute subsets.
inline constexpr std::size_t kMaxExhaustiveAttributes = 20;

namespace detail {

inline void require_exhaustive_capacity(const DecisionTable& table) {
    if (table.condition_count() > kMaxExhaustiveAttributes)
        throw CapacityError(table.condition_count(), kMaxExhaustiveAttributes);
}

inline std::vector<std::size_t> mask_columns(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; mask != 0; ++c, mask >>= 1)
        if (mask & 1u)
            out.push_back(c);
    return out;
}

/// Calls fn(columns) for every k-subset of {0..n-1}, in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n)
        return;
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i)
        combo[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(combo));
        std::size_t i = k;
        while (i > 0 && combo[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++combo[i - 1];
        for (std::size_t j = i; j < k; ++j)
            combo[j] = combo[j - 1] + 1;
    }
}

inline std::uint32_t columns_mask(const std::vector<std::size_t>& columns) {
    std::uint32_t m = 0;
    for (auto c : columns)
        m |= std::uint32_t{1} << c;
    return m;
}

} // namespace detail

/**
 * All minimal condition-attribute subsets that keep the dependency degree of the
 * full condition set. Subsets are visited by increasing size and supersets of a
 * found reduct are skipped, so every hit is minimal. Ordered by size, then by
 * column position. May contain the empty set (e.g. constant decision).
 */
inline std::vector<AttributeSet> find_reducts(const DecisionTable& table) {
    detail::require_exhaustive_capacity(table);
    if (table.empty())
        throw UndefinedDivisionError();

    const auto n = table.condition_count();
    const std::uint32_t full_mask = (std::uint32_t{1} << n) - 1;
    const auto target = positive_region_of_columns(table, detail::mask_columns(full_mask)).size();

    std::vector<std::uint32_t> found;
    for (std::size_t k = 0; k <= n; ++k) {
        detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& columns) {
            auto mask = detail::columns_mask(columns);
            for (auto r : found)
                if ((mask & r) == r)
                    return;
            if (positive_region_of_columns(table, columns).size() == target)
                found.push_back(mask);
        });
    }

    std::vector<AttributeSet> out;
    for (auto mask : found) {
        AttributeSet names;
        for (auto c : detail::mask_columns(mask))
            names.push_back(table.condition_attributes()[c]);
        out.push_back(std::move(names));
    }
    return out;
}

/// Intersection of all reducts, in column order.
inline AttributeSet core(const DecisionTable& table) {
    auto reducts = find_reducts(table);
    AttributeSet out;
    for (const auto& name : table.condition_attributes()) {
        bool everywhere = !reducts.empty();
        for (const auto& r : reducts)
            if (std::find(r.begin(), r.end(), name) == r.end()) {
                everywhere = false;
                break;
            }
        if (everywhere)
            out.push_back(name);
    }
    return out;
}

} // namespace rough

#endif
