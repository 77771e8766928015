#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "maria/alignment.hpp"
#include "maria/distinct.hpp"
#include "maria/ebwt.hpp"

namespace maria {

// One maximal run of equal column annotations: the run head plus the row
// annotations of the run's first and last eBWT positions. (head, t_row) and
// (head, b_row) are always valid suffix starts.
struct Run {
    ColIndex head = 0;
    RowIndex t_row = 0;
    RowIndex b_row = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

// Maximal runs of equal column annotation, in eBWT order. Run lengths are
// not part of the result; only the r' boundary annotations survive.
std::vector<Run> compress_runs(const AnnotatedEbwt& ebwt);

// The MARIA index: the run table plus the text context needed to answer LCE
// queries (ungapped rows and their coordinate maps) and the distinct-listing
// structure over run heads. The eBWT itself is discarded after the build.
//
// Immutable; concurrent queries are safe.
class MariaIndex {
  public:
    static MariaIndex build(const MultipleAlignment& ma);

    [[nodiscard]] const MultipleAlignment& alignment() const { return msa_; }
    [[nodiscard]] const std::vector<Run>& runs() const { return runs_; }
    [[nodiscard]] std::size_t run_count() const { return runs_.size(); }
    [[nodiscard]] const DistinctListing& distinct() const { return distinct_; }

    // Annotation of run k's first / last eBWT position.
    [[nodiscard]] SuffixStart run_top(std::size_t k) const {
        return {runs_[k].t_row, runs_[k].head};
    }
    [[nodiscard]] SuffixStart run_bottom(std::size_t k) const {
        return {runs_[k].b_row, runs_[k].head};
    }

    [[nodiscard]] std::size_t total_suffixes() const { return msa_.total_suffixes(); }

    // Versioned text format: "MARIA 1", the alignment dimensions, one line
    // per row (ungapped characters plus its column map), then the run table
    // with '?' for terminator heads. Coordinate maps and the listing
    // structure are rebuilt on load.
    void save(std::ostream& out) const;
    [[nodiscard]] std::string serialize() const;
    static MariaIndex load(std::istream& in);
    static MariaIndex deserialize(std::string_view bytes);
    void save_file(const std::string& path) const;
    static MariaIndex load_file(const std::string& path);

  private:
    MariaIndex(MultipleAlignment msa, std::vector<Run> runs);

    MultipleAlignment msa_;
    std::vector<Run> runs_;
    DistinctListing distinct_;
};

// Full pipeline: annotated eBWT, run compression, listing structure.
MariaIndex build_index(const MultipleAlignment& ma);

}  // namespace maria
