#ifndef ROUGHPHISH_CORE_DECISION_TABLE_HPP
#define ROUGHPHISH_CORE_DECISION_TABLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughphish/core/errors.hpp"
#include "roughphish/core/object_set.hpp"

namespace rough {

/// Attribute subset given by name. Order is irrelevant to every operation; duplicates collapse.
using AttributeSet = std::vector<std::string>;

/// Attribute name -> categorical value for a single object.
using ObjectValues = std::map<std::string, std::string, std::less<>>;

/**
 * Finite universe of objects described by categorical condition attributes and
 * one decision attribute.
 *
 * Values are opaque, case-sensitive tokens. Object ids are the 0-based row
 * positions given at construction and never change. Rows whose condition
 * tuples coincide but whose decisions differ are kept as they are; such a
 * table is inconsistent ("rough") with respect to its decision.
 */
class DecisionTable {
public:
    /// Each row lists the condition values in attribute order followed by the decision value.
    DecisionTable(std::vector<std::string> condition_attributes, std::string decision_attribute,
                  std::vector<std::vector<std::string>> rows)
        : conditions_(std::move(condition_attributes)),
          decision_(std::move(decision_attribute)),
          rows_(std::move(rows)) {
        for (std::size_t i = 0; i < conditions_.size(); ++i) {
            if (conditions_[i] == decision_)
                throw TableFormatError("decision attribute '" + decision_ +
                                       "' also listed as a condition attribute");
            for (std::size_t j = 0; j < i; ++j)
                if (conditions_[i] == conditions_[j])
                    throw TableFormatError("duplicate attribute name '" + conditions_[i] + "'", 0,
                                           i + 1);
        }
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].size() != conditions_.size() + 1)
                throw TableFormatError("expected " + std::to_string(conditions_.size() + 1) +
                                           " cells, found " + std::to_string(rows_[r].size()),
                                       r + 1);
    }

    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    const std::vector<std::string>& condition_attributes() const noexcept { return conditions_; }
    const std::string& decision_attribute() const noexcept { return decision_; }
    std::size_t condition_count() const noexcept { return conditions_.size(); }

    /// Column index of an attribute; the decision attribute is column condition_count().
    std::optional<std::size_t> column_of(std::string_view name) const {
        for (std::size_t i = 0; i < conditions_.size(); ++i)
            if (conditions_[i] == name)
                return i;
        if (decision_ == name)
            return conditions_.size();
        return std::nullopt;
    }

    std::size_t require_column(std::string_view name) const {
        if (auto column = column_of(name))
            return *column;
        throw UnknownAttributeError(std::string(name));
    }

    /// Like require_column but rejects the decision attribute.
    std::size_t require_condition(std::string_view name) const {
        auto column = require_column(name);
        if (column == conditions_.size())
            throw UnknownAttributeError(std::string(name),
                                        "'" + std::string(name) +
                                            "' is the decision attribute, not a condition attribute");
        return column;
    }

    /// Sorted, de-duplicated column indices for an attribute subset.
    std::vector<std::size_t> columns_of(const AttributeSet& attrs, bool allow_decision = true) const {
        std::vector<std::size_t> out;
        out.reserve(attrs.size());
        for (const auto& name : attrs)
            out.push_back(allow_decision ? require_column(name) : require_condition(name));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const std::string& attribute_name(std::size_t column) const {
        return column == conditions_.size() ? decision_ : conditions_.at(column);
    }

    const std::string& value(ObjectId id, std::size_t column) const { return rows_.at(id).at(column); }
    const std::string& decision(ObjectId id) const { return rows_.at(id).back(); }

    /// Condition values followed by the decision value.
    std::span<const std::string> row(ObjectId id) const { return rows_.at(id); }

    ObjectValues object(ObjectId id) const {
        ObjectValues out;
        const auto& r = rows_.at(id);
        for (std::size_t i = 0; i < conditions_.size(); ++i)
            out.emplace(conditions_[i], r[i]);
        out.emplace(decision_, r.back());
        return out;
    }

    ObjectSet universe() const { return iota_set(rows_.size()); }

    /// Distinct decision values in order of first occurrence.
    std::vector<std::string> decision_values() const {
        std::vector<std::string> out;
        for (const auto& r : rows_)
            if (std::find(out.begin(), out.end(), r.back()) == out.end())
                out.push_back(r.back());
        return out;
    }

    ObjectSet objects_with_decision(std::string_view value) const {
        ObjectSet out;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].back() == value)
                out.push_back(i);
        return out;
    }

    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    friend bool operator==(const DecisionTable&, const DecisionTable&) = default;

private:
    std::vector<std::string> conditions_;
    std::string decision_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace rough

#endif
