#ifndef ROUGHPHISH_CORE_DEPENDENCY_HPP
#define ROUGHPHISH_CORE_DEPENDENCY_HPP

#include <vector>

#include "roughphish/core/approximation.hpp"
#include "roughphish/core/fraction.hpp"

namespace rough {

/// Objects whose block under `columns` is decision-pure.
inline ObjectSet positive_region_of_columns(const DecisionTable& table,
                                            const std::vector<std::size_t>& columns) {
    ObjectSet out;
    for (const auto& block : partition_by_columns(table, columns).blocks) {
        const auto& decision = table.decision(block.front());
        bool pure = true;
        for (auto id : block)
            if (table.decision(id) != decision) {
                pure = false;
                break;
            }
        if (pure)
            out = set_union(out, block);
    }
    return out;
}

/**
 * POS_attrs(decision): the union over decision classes X of the lower approximation
 * of X under the partition by `attrs`. Only condition attributes are accepted.
 */
inline ObjectSet positive_region(const DecisionTable& table, const AttributeSet& attrs) {
    auto columns = table.columns_of(attrs, /*allow_decision=*/false);
    auto partition = partition_by_columns(table, columns);
    ObjectSet out;
    for (const auto& value : table.decision_values())
        out = set_union(out, approximate(partition, table.objects_with_decision(value)).lower);
    return out;
}

/// Dependency degree |POS_attrs(decision)| / |U| as an exact fraction.
inline Fraction gamma(const DecisionTable& table, const AttributeSet& attrs) {
    if (table.empty()) {
        table.columns_of(attrs, false);
        throw UndefinedDivisionError();
    }
    return Fraction(positive_region(table, attrs).size(), table.size());
}

struct GammaEntry {
    AttributeSet attributes;
    ObjectSet positive_region;
    Fraction gamma;
};

struct GammaReport {
    std::vector<GammaEntry> entries;
};

/// One entry per requested subset, in request order.
inline GammaReport subset_gamma_survey(const DecisionTable& table,
                                       const std::vector<AttributeSet>& subsets) {
    if (table.empty())
        throw UndefinedDivisionError();
    GammaReport report;
    report.entries.reserve(subsets.size());
    for (const auto& subset : subsets) {
        auto pos = positive_region(table, subset);
        Fraction g(pos.size(), table.size());
        report.entries.push_back({subset, std::move(pos), g});
    }
    return report;
}

} // namespace rough

#endif
