#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace authornet::csv {

/// One parsed CSV record plus the physical line it started on (1-based).
struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

/// Incremental RFC 4180 reader: quoted fields, doubled quotes, embedded
/// newlines inside quotes, CRLF or LF line endings.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Reads the next record. Returns false at end of input.
    bool next(Record& out);

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

/// Quotes a field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

/// Joins fields into one CSV line (no trailing newline).
std::string join(const std::vector<std::string>& fields);

}  // namespace authornet::csv
