#include "maria/distinct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace maria {

DistinctListing::DistinctListing(std::vector<ColIndex> heads) : heads_(std::move(heads)) {
    const std::size_t n = heads_.size();
    prev_.resize(n);
    std::unordered_map<ColIndex, std::int64_t> last;
    last.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto it = last.find(heads_[k]);
        prev_[k] = it == last.end() ? -1 : it->second;
        last[heads_[k]] = static_cast<std::int64_t>(k);
    }
    if (n == 0) return;

    const std::size_t levels = std::bit_width(n);
    argmin_.resize(levels);
    argmin_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) argmin_[0][i] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j < levels; ++j) {
        const std::size_t half = std::size_t{1} << (j - 1);
        const std::size_t count = n - (std::size_t{1} << j) + 1;
        argmin_[j].resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint32_t left = argmin_[j - 1][i];
            std::uint32_t right = argmin_[j - 1][i + half];
            argmin_[j][i] = prev_[right] < prev_[left] ? right : left;
        }
    }
}

std::size_t DistinctListing::rmq(std::size_t s, std::size_t e) const {
    const std::size_t j = std::bit_width(e - s + 1) - 1;
    std::uint32_t left = argmin_[j][s];
    std::uint32_t right = argmin_[j][e - (std::size_t{1} << j) + 1];
    if (prev_[right] < prev_[left]) return right;
    return left;
}

void DistinctListing::walk(std::int64_t s, std::int64_t e, std::vector<DistinctHit>& out,
                           ListingStats& stats) const {
    ++stats.calls;
    if (s > e) return;
    const std::size_t p = rmq(static_cast<std::size_t>(s), static_cast<std::size_t>(e));
    if (prev_[p] >= s) return;
    out.push_back({heads_[p], p});
    walk(s, static_cast<std::int64_t>(p) - 1, out, stats);
    walk(static_cast<std::int64_t>(p) + 1, e, out, stats);
}

std::vector<DistinctHit> DistinctListing::list(std::size_t s, std::size_t e, ListingStats* stats,
                                               bool sorted_by_head) const {
    if (s > e || e >= heads_.size()) {
        throw std::out_of_range("distinct listing: interval [" + std::to_string(s) + ", " +
                                std::to_string(e) + "] out of range");
    }
    ListingStats local;
    std::vector<DistinctHit> out;
    walk(static_cast<std::int64_t>(s), static_cast<std::int64_t>(e), out, local);
    if (stats) *stats = local;
    if (sorted_by_head) {
        std::sort(out.begin(), out.end(),
                  [](const DistinctHit& a, const DistinctHit& b) { return a.head < b.head; });
    }
    return out;
}

}  // namespace maria
