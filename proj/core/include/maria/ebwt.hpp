#pragma once

#include <string>
#include <vector>

#include "maria/alignment.hpp"

namespace maria {

struct EbwtEntry {
    char bwt = '\0';     // character cyclically preceding the suffix
    SuffixStart start;   // where the suffix begins in the alignment
};

// The annotated extended BWT: every suffix start of every row, sorted by
// omega-order (comparison of infinite cyclic repetitions), each with the
// character that precedes it. Omega-equal rotations are ordered by
// (row, start offset) ascending; the reference data has no such ties, so
// the tie-break is a reproducibility choice, not something it pins down.
struct AnnotatedEbwt {
    std::vector<EbwtEntry> entries;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

// Enumerates all N suffix starts and sorts them with compare_starts.
// Build-time intermediate: the index keeps only what compress_runs extracts.
AnnotatedEbwt build_annotated_ebwt(const MultipleAlignment& ma);

// The column annotation of each entry in sorted order (kTerminatorCol for
// suffixes starting at a terminator) — the string the index run-compresses.
std::vector<ColIndex> col_annotations(const AnnotatedEbwt& ebwt);

// Debug dump, one line per entry: row, column ('?' for terminator starts),
// BWT character, and the first period-1 characters of the suffix.
std::string dump_tsv(const AnnotatedEbwt& ebwt, const MultipleAlignment& ma);

}  // namespace maria
