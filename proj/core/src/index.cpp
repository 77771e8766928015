#include "maria/index.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "maria/errors.hpp"

namespace maria {

namespace {

constexpr std::string_view kMagic = "MARIA";
constexpr std::string_view kVersion = "1";

std::string head_to_string(ColIndex head) {
    return head == kTerminatorCol ? "?" : std::to_string(head);
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::uint64_t parse_uint(std::string_view token, std::string_view what) {
    if (token.empty()) throw FormatError("missing " + std::string(what));
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw FormatError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
            throw FormatError(std::string(what) + " out of range");
        }
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

}  // namespace

std::vector<Run> compress_runs(const AnnotatedEbwt& ebwt) {
    std::vector<Run> runs;
    std::size_t covered = 0;
    std::size_t i = 0;
    const auto& entries = ebwt.entries;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j + 1 < entries.size() && entries[j + 1].start.col == entries[i].start.col) ++j;
        runs.push_back({entries[i].start.col, entries[i].start.row, entries[j].start.row});
        covered += j - i + 1;
        i = j + 1;
    }
    if (covered != entries.size()) {
        throw std::logic_error("run compression did not cover the eBWT");
    }
    return runs;
}

MariaIndex::MariaIndex(MultipleAlignment msa, std::vector<Run> runs)
    : msa_(std::move(msa)), runs_(std::move(runs)) {
    if (runs_.empty()) throw FormatError("run table is empty");
    for (std::size_t k = 0; k < runs_.size(); ++k) {
        const Run& run = runs_[k];
        if (run.t_row >= msa_.row_count() || run.b_row >= msa_.row_count()) {
            throw FormatError("run " + std::to_string(k) + ": row annotation out of range");
        }
        if (run.head != kTerminatorCol) {
            if (run.head >= msa_.width()) {
                throw FormatError("run " + std::to_string(k) + ": head column out of range");
            }
            if (msa_.is_gap(run.t_row, run.head) || msa_.is_gap(run.b_row, run.head)) {
                throw FormatError("run " + std::to_string(k) +
                                  ": head column is a gap cell in an annotated row");
            }
        }
        if (k > 0 && runs_[k - 1].head == run.head) {
            throw FormatError("runs " + std::to_string(k - 1) + " and " + std::to_string(k) +
                              " share a head");
        }
    }
    std::vector<ColIndex> heads;
    heads.reserve(runs_.size());
    for (const Run& run : runs_) heads.push_back(run.head);
    distinct_ = DistinctListing(std::move(heads));
}

MariaIndex MariaIndex::build(const MultipleAlignment& ma) {
    return MariaIndex(ma, compress_runs(build_annotated_ebwt(ma)));
}

MariaIndex build_index(const MultipleAlignment& ma) { return MariaIndex::build(ma); }

void MariaIndex::save(std::ostream& out) const {
    out << kMagic << ' ' << kVersion << '\n';
    out << msa_.row_count() << ' ' << msa_.width() << '\n';
    for (RowIndex r = 0; r < msa_.row_count(); ++r) {
        out << msa_.ungapped(r) << ' ';
        const auto& map = msa_.column_map(r);
        for (std::size_t u = 0; u < map.size(); ++u) {
            if (u > 0) out << ',';
            out << map[u];
        }
        out << '\n';
    }
    out << "RUNS " << runs_.size() << '\n';
    for (const Run& run : runs_) {
        out << head_to_string(run.head) << ' ' << run.t_row << ' ' << run.b_row << '\n';
    }
}

std::string MariaIndex::serialize() const {
    std::ostringstream out;
    save(out);
    return out.str();
}

MariaIndex MariaIndex::load(std::istream& in) {
    std::string line;
    if (!read_line(in, line)) throw FormatError("bad magic: empty index");
    {
        auto parts = split(line, ' ');
        if (parts.empty() || parts[0] != kMagic) {
            throw FormatError("bad magic: not a MARIA index");
        }
        if (parts.size() != 2 || parts[1].empty()) {
            throw FormatError("bad magic: missing version");
        }
        if (parts[1] != kVersion) {
            throw FormatError("unsupported index version '" + std::string(parts[1]) + "'");
        }
    }

    if (!read_line(in, line)) throw FormatError("truncated index: missing dimensions");
    auto dims = split(line, ' ');
    if (dims.size() != 2) throw FormatError("invalid dimension line");
    const auto nrows = parse_uint(dims[0], "row count");
    const auto width = static_cast<ColIndex>(parse_uint(dims[1], "alignment width"));
    if (nrows == 0) throw FormatError("index has no rows");

    std::vector<std::string> ungapped(nrows);
    std::vector<std::vector<ColIndex>> maps(nrows);
    for (std::uint64_t r = 0; r < nrows; ++r) {
        if (!read_line(in, line)) {
            throw FormatError("truncated index: missing row " + std::to_string(r));
        }
        auto parts = split(line, ' ');
        if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
            throw FormatError("row " + std::to_string(r) + ": invalid row line");
        }
        ungapped[r] = std::string(parts[0]);
        for (std::string_view token : split(parts[1], ',')) {
            maps[r].push_back(static_cast<ColIndex>(parse_uint(token, "column index")));
        }
    }

    if (!read_line(in, line)) throw FormatError("truncated index: missing run table");
    auto runs_header = split(line, ' ');
    if (runs_header.size() != 2 || runs_header[0] != "RUNS") {
        throw FormatError("invalid run table header");
    }
    const auto run_count = parse_uint(runs_header[1], "run count");

    std::vector<Run> runs;
    runs.reserve(run_count);
    for (std::uint64_t k = 0; k < run_count; ++k) {
        if (!read_line(in, line)) {
            throw FormatError("truncated index: missing run " + std::to_string(k));
        }
        auto parts = split(line, ' ');
        if (parts.size() != 3) {
            throw FormatError("run " + std::to_string(k) + ": invalid run line");
        }
        Run run;
        run.head = parts[0] == "?" ? kTerminatorCol
                                   : static_cast<ColIndex>(parse_uint(parts[0], "run head"));
        run.t_row = static_cast<RowIndex>(parse_uint(parts[1], "top row"));
        run.b_row = static_cast<RowIndex>(parse_uint(parts[2], "bottom row"));
        runs.push_back(run);
    }
    if (read_line(in, line) && !line.empty()) {
        throw FormatError("trailing data after run table");
    }

    MultipleAlignment msa = MultipleAlignment::from_ungapped(std::move(ungapped), std::move(maps),
                                                             width);
    return MariaIndex(std::move(msa), std::move(runs));
}

MariaIndex MariaIndex::deserialize(std::string_view bytes) {
    std::istringstream in{std::string(bytes)};
    return load(in);
}

void MariaIndex::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    save(out);
    if (!out) throw FormatError("failed to write '" + path + "'");
}

MariaIndex MariaIndex::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return load(in);
}

}  // namespace maria
