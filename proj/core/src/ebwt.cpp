#include "maria/ebwt.hpp"

#include <algorithm>

#include "maria/lce.hpp"

namespace maria {

AnnotatedEbwt build_annotated_ebwt(const MultipleAlignment& ma) {
    std::vector<SuffixStart> starts = ma.all_starts();
    std::sort(starts.begin(), starts.end(), [&ma](SuffixStart a, SuffixStart b) {
        return compare_starts(ma, a, b) == Order::less;
    });

    AnnotatedEbwt ebwt;
    ebwt.entries.reserve(starts.size());
    for (SuffixStart s : starts) {
        ebwt.entries.push_back({ma.rotation_char(s, ma.period(s.row) - 1), s});
    }
    return ebwt;
}

std::vector<ColIndex> col_annotations(const AnnotatedEbwt& ebwt) {
    std::vector<ColIndex> cols;
    cols.reserve(ebwt.size());
    for (const EbwtEntry& e : ebwt.entries) cols.push_back(e.start.col);
    return cols;
}

std::string dump_tsv(const AnnotatedEbwt& ebwt, const MultipleAlignment& ma) {
    std::string out;
    for (const EbwtEntry& e : ebwt.entries) {
        out += std::to_string(e.start.row);
        out += '\t';
        if (e.start.is_terminator()) {
            out += '?';
        } else {
            out += std::to_string(e.start.col);
        }
        out += '\t';
        out += e.bwt;
        out += '\t';
        const std::size_t p = ma.period(e.start.row);
        for (std::size_t t = 0; t + 1 < p; ++t) out += ma.rotation_char(e.start, t);
        out += '\n';
    }
    return out;
}

}  // namespace maria
