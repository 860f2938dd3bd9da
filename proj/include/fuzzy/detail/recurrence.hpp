#pragma once

#include <cstddef>
#include <map>
#include <optional>

namespace fuzzy::detail {

// Remembers the first index at which each state was seen.
template <class Key>
class RecurrenceTracker {
public:
    // Returns the earlier index if `k` was already recorded, else records it at `index`.
    std::optional<std::size_t> visit(const Key& k, std::size_t index) {
        auto [it, inserted] = seen_.emplace(k, index);
        if (inserted) return std::nullopt;
        return it->second;
    }

private:
    std::map<Key, std::size_t> seen_;
};

}  // namespace fuzzy::detail
