#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace maria {

using RowIndex = std::uint32_t;
using ColIndex = std::uint32_t;

// Sentinel column for suffixes that begin at a row's appended terminator.
inline constexpr ColIndex kTerminatorCol = std::numeric_limits<ColIndex>::max();

// Identifies where a row suffix begins: either a non-gap cell of the
// alignment, or the terminator that follows the row's last character.
struct SuffixStart {
    RowIndex row = 0;
    ColIndex col = kTerminatorCol;

    [[nodiscard]] bool is_terminator() const { return col == kTerminatorCol; }

    friend bool operator==(const SuffixStart&, const SuffixStart&) = default;
};

enum class MsaFormat { plain, fasta };

struct MsaOptions {
    // Ordered character set. Empty means: infer from the input, ordered by
    // byte value. The gap and terminator characters are never part of it.
    std::string alphabet;
    char gap = '-';
    char terminator = '$';
};

// A gapped multiple alignment plus the per-row machinery everything else is
// built from: ungapped rows, gap-aware coordinate maps, and cyclic character
// access. Rows are conceptually cyclic strings (ungapped row + terminator).
//
// Immutable after construction; safe for concurrent reads.
class MultipleAlignment {
  public:
    MultipleAlignment(std::vector<std::string> rows, MsaOptions options = {},
                      std::vector<std::string> names = {});

    // Rebuilds the gapped matrix from ungapped rows and their upos -> column
    // maps (the form the index file stores).
    static MultipleAlignment from_ungapped(std::vector<std::string> ungapped,
                                           std::vector<std::vector<ColIndex>> column_maps,
                                           ColIndex width, MsaOptions options = {});

    [[nodiscard]] RowIndex row_count() const { return static_cast<RowIndex>(rows_.size()); }
    [[nodiscard]] ColIndex width() const { return width_; }

    [[nodiscard]] const std::string& row(RowIndex r) const { return rows_[r]; }
    [[nodiscard]] const std::string& name(RowIndex r) const { return names_[r]; }

    // The row's characters with gaps removed, in order.
    [[nodiscard]] const std::string& ungapped(RowIndex r) const { return ungapped_[r]; }

    // column_map(r)[u] is the alignment column of the u-th non-gap character.
    [[nodiscard]] const std::vector<ColIndex>& column_map(RowIndex r) const {
        return column_maps_[r];
    }

    [[nodiscard]] bool is_gap(RowIndex r, ColIndex c) const;

    // Alignment column holding the upos-th non-gap character of the row.
    [[nodiscard]] ColIndex upos_to_col(RowIndex r, std::size_t upos) const;

    // Inverse of upos_to_col; rejects gap cells.
    [[nodiscard]] std::size_t col_to_upos(RowIndex r, ColIndex c) const;

    // Length of one full rotation of the row: |ungapped(r)| + 1.
    [[nodiscard]] std::size_t period(RowIndex r) const { return ungapped_[r].size() + 1; }

    // Position of `start` inside the row's rotation string (ungapped row
    // followed by the terminator); the terminator sits at |ungapped(r)|.
    [[nodiscard]] std::size_t start_offset(SuffixStart start) const;

    // t-th character of the infinite periodic string obtained by cyclically
    // repeating (ungapped row + terminator) from `start`.
    [[nodiscard]] char rotation_char(SuffixStart start, std::size_t t) const;

    // Every suffix start of every row: one per non-gap cell plus one
    // terminator start per row. Row-major, terminator last within a row.
    [[nodiscard]] std::vector<SuffixStart> all_starts() const;

    // Total number of suffix starts, N.
    [[nodiscard]] std::size_t total_suffixes() const { return total_suffixes_; }

    // Rank in the character order: terminator is 0, alphabet characters
    // follow in alphabet order; -1 for anything else (including the gap).
    [[nodiscard]] int char_rank(char c) const {
        return ranks_[static_cast<unsigned char>(c)];
    }

    [[nodiscard]] const std::string& alphabet() const { return alphabet_; }
    [[nodiscard]] char gap_char() const { return gap_; }
    [[nodiscard]] char terminator_char() const { return terminator_; }

    friend bool operator==(const MultipleAlignment& a, const MultipleAlignment& b) {
        return a.rows_ == b.rows_ && a.alphabet_ == b.alphabet_ && a.gap_ == b.gap_ &&
               a.terminator_ == b.terminator_;
    }

  private:
    void validate_and_derive();

    std::vector<std::string> rows_;
    std::vector<std::string> names_;
    std::string alphabet_;
    char gap_ = '-';
    char terminator_ = '$';
    ColIndex width_ = 0;

    std::vector<std::string> ungapped_;
    std::vector<std::vector<ColIndex>> column_maps_;
    std::vector<std::vector<std::uint32_t>> upos_of_col_;  // kNoUpos at gaps
    std::size_t total_suffixes_ = 0;
    int ranks_[256];

    static constexpr std::uint32_t kNoUpos = std::numeric_limits<std::uint32_t>::max();
};

// Parses aligned FASTA ('>'-headed records, '-' gaps) or plain text (one
// gapped row per line). Row order is preserved; FASTA headers are kept as
// display names only.
MultipleAlignment parse_msa(std::string_view text, MsaFormat format, MsaOptions options = {});

}  // namespace maria
