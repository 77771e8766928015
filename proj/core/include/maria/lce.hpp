#pragma once

#include <cstddef>

#include "maria/alignment.hpp"

namespace maria {

enum class Order { less, equal, greater };

// Length of the longest common prefix of two row suffixes plus their
// relative position in the suffix sort order.
struct LceResult {
    std::size_t length = 0;
    Order order = Order::equal;

    friend bool operator==(const LceResult&, const LceResult&) = default;
};

// Compares the suffixes beginning at `a` and `b`, treating rows as cyclic
// strings (ungapped row + terminator) repeated forever. The comparison stops
// after period(a) + period(b) characters: two rotations that agree that far
// agree forever, so `order` is `equal` only for omega-equal rotations and
// `length` is then the cap.
LceResult lce(const MultipleAlignment& ma, SuffixStart a, SuffixStart b);

// Turns an LceResult into a strict order: omega-equal rotations are broken
// by (row, start offset) ascending, the order the builder uses, so `equal`
// survives only when a and b are the same start.
Order resolve_order(const MultipleAlignment& ma, const LceResult& r, SuffixStart a, SuffixStart b);

// resolve_order(lce(a, b)) with an equality short-circuit.
Order compare_starts(const MultipleAlignment& ma, SuffixStart a, SuffixStart b);

}  // namespace maria
