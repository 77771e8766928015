#include "maria/lce.hpp"

#include <utility>

namespace maria {

LceResult lce(const MultipleAlignment& ma, SuffixStart a, SuffixStart b) {
    const std::string& wa = ma.ungapped(a.row);
    const std::string& wb = ma.ungapped(b.row);
    const std::size_t pa = wa.size() + 1;
    const std::size_t pb = wb.size() + 1;
    const std::size_t cap = pa + pb;
    if (a == b) return {cap, Order::equal};

    const char term = ma.terminator_char();
    std::size_t ia = ma.start_offset(a);
    std::size_t ib = ma.start_offset(b);
    for (std::size_t t = 0; t < cap; ++t) {
        const char ca = ia == wa.size() ? term : wa[ia];
        const char cb = ib == wb.size() ? term : wb[ib];
        if (ca != cb) {
            return {t, ma.char_rank(ca) < ma.char_rank(cb) ? Order::less : Order::greater};
        }
        if (++ia == pa) ia = 0;
        if (++ib == pb) ib = 0;
    }
    return {cap, Order::equal};
}

Order resolve_order(const MultipleAlignment& ma, const LceResult& r, SuffixStart a,
                    SuffixStart b) {
    if (r.order != Order::equal) return r.order;
    const auto ka = std::pair(a.row, ma.start_offset(a));
    const auto kb = std::pair(b.row, ma.start_offset(b));
    if (ka == kb) return Order::equal;
    return ka < kb ? Order::less : Order::greater;
}

Order compare_starts(const MultipleAlignment& ma, SuffixStart a, SuffixStart b) {
    if (a == b) return Order::equal;
    return resolve_order(ma, lce(ma, a, b), a, b);
}

}  // namespace maria
