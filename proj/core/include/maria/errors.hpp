#pragma once

#include <stdexcept>
#include <string>

namespace maria {

// Malformed alignment text or an invalid pattern.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable or inconsistent index file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad query coordinates: gap cells, out-of-range positions, lengths that
// cross the row terminator, or a start the run table does not cover.
struct QueryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace maria
