#pragma once

#include <cstdint>
#include <vector>

#include "maria/alignment.hpp"

namespace maria {

struct DistinctHit {
    ColIndex head = 0;    // the distinct value
    std::size_t run = 0;  // leftmost run index carrying it within the query
};

struct ListingStats {
    std::size_t calls = 0;  // recursion entries, at most 2 * reported + 1
};

// Lists the distinct values in any interval of the run-head string in
// constant time per reported value: prev[k] is the previous position with
// the same head (-1 if none), and a sparse-table RMQ over prev drives the
// recursion — report the argmin position p when prev[p] falls before the
// query, then split at p; a branch whose minimum prev lies inside the query
// holds nothing new.
class DistinctListing {
  public:
    DistinctListing() = default;
    explicit DistinctListing(std::vector<ColIndex> heads);

    // Distinct heads of runs[s..e] (inclusive), each with the leftmost run
    // index carrying it. Recursion order by default; `sorted_by_head` orders
    // by head value (terminator last).
    [[nodiscard]] std::vector<DistinctHit> list(std::size_t s, std::size_t e,
                                                ListingStats* stats = nullptr,
                                                bool sorted_by_head = false) const;

    [[nodiscard]] std::size_t size() const { return heads_.size(); }
    [[nodiscard]] const std::vector<std::int64_t>& prev() const { return prev_; }

  private:
    void walk(std::int64_t s, std::int64_t e, std::vector<DistinctHit>& out,
              ListingStats& stats) const;
    [[nodiscard]] std::size_t rmq(std::size_t s, std::size_t e) const;

    std::vector<ColIndex> heads_;
    std::vector<std::int64_t> prev_;
    // argmin_[j][i] = position of the leftmost minimum of prev_[i .. i+2^j-1]
    std::vector<std::vector<std::uint32_t>> argmin_;
};

}  // namespace maria
