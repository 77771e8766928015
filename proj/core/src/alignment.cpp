#include "maria/alignment.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "maria/errors.hpp"

namespace maria {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
    }
    return lines;
}

}  // namespace

MultipleAlignment::MultipleAlignment(std::vector<std::string> rows, MsaOptions options,
                                     std::vector<std::string> names)
    : rows_(std::move(rows)),
      names_(std::move(names)),
      alphabet_(std::move(options.alphabet)),
      gap_(options.gap),
      terminator_(options.terminator) {
    if (names_.empty()) names_.resize(rows_.size());
    if (names_.size() != rows_.size()) {
        throw ParseError("name list does not match row count");
    }
    validate_and_derive();
}

MultipleAlignment MultipleAlignment::from_ungapped(std::vector<std::string> ungapped,
                                                   std::vector<std::vector<ColIndex>> column_maps,
                                                   ColIndex width, MsaOptions options) {
    if (ungapped.size() != column_maps.size()) {
        throw FormatError("row count does not match column-map count");
    }
    std::vector<std::string> rows;
    rows.reserve(ungapped.size());
    for (std::size_t r = 0; r < ungapped.size(); ++r) {
        const std::string& chars = ungapped[r];
        const std::vector<ColIndex>& map = column_maps[r];
        if (chars.empty()) throw FormatError("row " + std::to_string(r) + ": empty row");
        if (chars.size() != map.size()) {
            throw FormatError("row " + std::to_string(r) +
                              ": column map length does not match row length");
        }
        std::string row(width, options.gap);
        ColIndex prev = 0;
        for (std::size_t u = 0; u < map.size(); ++u) {
            ColIndex c = map[u];
            if (c >= width || (u > 0 && c <= prev)) {
                throw FormatError("row " + std::to_string(r) + ": bad column map");
            }
            row[c] = chars[u];
            prev = c;
        }
        rows.push_back(std::move(row));
    }
    return MultipleAlignment(std::move(rows), std::move(options));
}

void MultipleAlignment::validate_and_derive() {
    if (rows_.empty()) throw ParseError("empty input: no rows");
    width_ = static_cast<ColIndex>(rows_[0].size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != width_) {
            throw ParseError("row " + std::to_string(r) + " has length " +
                             std::to_string(rows_[r].size()) + ", expected " +
                             std::to_string(width_) + " (length of row 0)");
        }
    }
    if (width_ == 0) throw ParseError("row 0: empty row");
    if (gap_ == terminator_) throw ParseError("gap and terminator characters must differ");

    if (alphabet_.empty()) {
        std::set<char> seen;
        for (const auto& row : rows_) {
            for (char c : row) {
                if (c == gap_) continue;
                if (c == terminator_) {
                    throw ParseError(std::string("reserved terminator character '") + terminator_ +
                                     "' appears in a row");
                }
                seen.insert(c);
            }
        }
        alphabet_.assign(seen.begin(), seen.end());
    }
    if (alphabet_.find(gap_) != std::string::npos ||
        alphabet_.find(terminator_) != std::string::npos) {
        throw ParseError("alphabet must exclude the gap and terminator characters");
    }

    std::fill(std::begin(ranks_), std::end(ranks_), -1);
    ranks_[static_cast<unsigned char>(terminator_)] = 0;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(alphabet_[i]);
        if (ranks_[c] != -1) throw ParseError("alphabet contains duplicate characters");
        ranks_[c] = static_cast<int>(i) + 1;
    }

    ungapped_.resize(rows_.size());
    column_maps_.resize(rows_.size());
    upos_of_col_.resize(rows_.size());
    total_suffixes_ = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::string& row = rows_[r];
        auto& chars = ungapped_[r];
        auto& map = column_maps_[r];
        auto& inverse = upos_of_col_[r];
        inverse.assign(width_, kNoUpos);
        for (ColIndex c = 0; c < width_; ++c) {
            char ch = row[c];
            if (ch == gap_) continue;
            if (char_rank(ch) <= 0) {
                throw ParseError("row " + std::to_string(r) + " column " + std::to_string(c) +
                                 ": character '" + std::string(1, ch) + "' outside alphabet");
            }
            inverse[c] = static_cast<std::uint32_t>(chars.size());
            map.push_back(c);
            chars.push_back(ch);
        }
        if (chars.empty()) {
            throw ParseError("row " + std::to_string(r) + " is empty or all gaps");
        }
        total_suffixes_ += chars.size() + 1;
    }
}

bool MultipleAlignment::is_gap(RowIndex r, ColIndex c) const {
    return upos_of_col_[r][c] == kNoUpos;
}

ColIndex MultipleAlignment::upos_to_col(RowIndex r, std::size_t upos) const {
    const auto& map = column_maps_[r];
    if (upos >= map.size()) {
        throw QueryError("upos " + std::to_string(upos) + " out of range for row " +
                         std::to_string(r));
    }
    return map[upos];
}

std::size_t MultipleAlignment::col_to_upos(RowIndex r, ColIndex c) const {
    if (c >= width_) {
        throw QueryError("column " + std::to_string(c) + " out of range");
    }
    std::uint32_t u = upos_of_col_[r][c];
    if (u == kNoUpos) {
        throw QueryError("gap cell at (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
    return u;
}

std::size_t MultipleAlignment::start_offset(SuffixStart start) const {
    if (start.is_terminator()) return ungapped_[start.row].size();
    return col_to_upos(start.row, start.col);
}

char MultipleAlignment::rotation_char(SuffixStart start, std::size_t t) const {
    const std::string& chars = ungapped_[start.row];
    const std::size_t p = chars.size() + 1;
    std::size_t pos = (start_offset(start) + t) % p;
    return pos == chars.size() ? terminator_ : chars[pos];
}

std::vector<SuffixStart> MultipleAlignment::all_starts() const {
    std::vector<SuffixStart> starts;
    starts.reserve(total_suffixes_);
    for (RowIndex r = 0; r < row_count(); ++r) {
        for (ColIndex c : column_maps_[r]) starts.push_back({r, c});
        starts.push_back({r, kTerminatorCol});
    }
    return starts;
}

MultipleAlignment parse_msa(std::string_view text, MsaFormat format, MsaOptions options) {
    if (text.empty()) throw ParseError("empty input");
    std::vector<std::string> lines = split_lines(text);

    if (format == MsaFormat::plain) {
        return MultipleAlignment(std::move(lines), std::move(options));
    }

    std::vector<std::string> rows;
    std::vector<std::string> names;
    bool in_record = false;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line[0] == '>') {
            if (in_record && rows.back().empty()) {
                throw ParseError("malformed FASTA: record '" + names.back() +
                                 "' has no sequence");
            }
            names.push_back(line.substr(1));
            rows.emplace_back();
            in_record = true;
            continue;
        }
        if (!in_record) {
            throw ParseError("malformed FASTA: expected '>' header before sequence data");
        }
        rows.back() += line;
    }
    if (rows.empty()) throw ParseError("malformed FASTA: no records");
    if (rows.back().empty()) {
        throw ParseError("malformed FASTA: record '" + names.back() + "' has no sequence");
    }
    return MultipleAlignment(std::move(rows), std::move(options), std::move(names));
}

}  // namespace maria
