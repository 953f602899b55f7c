#ifndef ROUGHPHISH_CORE_APPROXIMATION_HPP
#define ROUGHPHISH_CORE_APPROXIMATION_HPP

#include <map>
#include <string>
#include <vector>

#include "roughphish/core/decision_table.hpp"

namespace rough {

/// Equivalence classes of the indiscernibility relation induced by an attribute subset.
struct Partition {
    /// Disjoint, covering blocks ordered by their smallest object id.
    std::vector<ObjectSet> blocks;
    /// Attribute names that induced the partition, in table column order.
    AttributeSet attributes;
    std::size_t universe_size = 0;
};

/// Partition by pre-resolved column indices.
inline Partition partition_by_columns(const DecisionTable& table, const std::vector<std::size_t>& columns) {
    Partition out;
    out.universe_size = table.size();
    for (auto c : columns)
        out.attributes.push_back(table.attribute_name(c));

    std::map<std::vector<std::string>, std::size_t> block_index;
    std::vector<std::string> key(columns.size());
    for (ObjectId id = 0; id < table.size(); ++id) {
        for (std::size_t k = 0; k < columns.size(); ++k)
            key[k] = table.value(id, columns[k]);
        auto [it, inserted] = block_index.try_emplace(key, out.blocks.size());
        if (inserted)
            out.blocks.emplace_back();
        out.blocks[it->second].push_back(id);
    }
    return out;
}

/// Objects that agree on every attribute in `attrs` share a block. `attrs` may name the decision attribute.
inline Partition partition_by(const DecisionTable& table, const AttributeSet& attrs) {
    return partition_by_columns(table, table.columns_of(attrs));
}

struct Approximation {
    ObjectSet target;
    ObjectSet lower;
    ObjectSet upper;
    /// upper \ lower
    ObjectSet boundary;
    /// True when the boundary is empty (the target is crisp).
    bool definable = true;
};

/// Lower and upper approximation of `target` with respect to the blocks of `partition`.
inline Approximation approximate(const Partition& partition, ObjectSet target) {
    Approximation out;
    out.target = normalized(std::move(target));
    if (!out.target.empty() && out.target.back() >= partition.universe_size)
        throw BoundsError(out.target.back(), partition.universe_size);

    for (const auto& block : partition.blocks) {
        if (is_subset(block, out.target))
            out.lower = set_union(out.lower, block);
        if (intersects(block, out.target))
            out.upper = set_union(out.upper, block);
    }
    out.boundary = set_difference(out.upper, out.lower);
    out.definable = out.boundary.empty();
    return out;
}

} // namespace rough

#endif
