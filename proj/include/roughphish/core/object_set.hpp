#ifndef ROUGHPHISH_CORE_OBJECT_SET_HPP
#define ROUGHPHISH_CORE_OBJECT_SET_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

namespace rough {

using ObjectId = std::size_t;

/// Set of object ids, kept as a sorted vector without duplicates.
using ObjectSet = std::vector<ObjectId>;

inline ObjectSet normalized(ObjectSet ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

inline bool contains(const ObjectSet& set, ObjectId id) {
    return std::binary_search(set.begin(), set.end(), id);
}

inline bool is_subset(const ObjectSet& sub, const ObjectSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline bool intersects(const ObjectSet& a, const ObjectSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

inline ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ObjectSet iota_set(std::size_t n) {
    ObjectSet out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

} // namespace rough

#endif
