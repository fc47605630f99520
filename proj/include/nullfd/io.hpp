#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nullfd/fd.hpp"
#include "nullfd/relation.hpp"

namespace nullfd {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line)
        : std::runtime_error(std::move(msg) + " (line " + std::to_string(line) + ")"),
          line(line) {}
    int line;
};

struct CsvOptions {
    std::string null_token;  // cell equal to this parses as a null marker
};

/// First row is the header; quoted fields with "" escapes supported.
Relation read_csv(std::istream& in, const CsvOptions& opt = {});
Relation read_csv_file(const std::string& path, const CsvOptions& opt = {});

/// One record in the same cell syntax, no header.
std::vector<std::optional<Value>> parse_csv_record(const std::string& line,
                                                   const CsvOptions& opt);

void write_csv(std::ostream& out, const Relation& r, const CsvOptions& opt = {});

struct FdSpec {
    FDSet fds;
    std::optional<AttrSet> nullable;  // absent: all attributes nullable
};

/// Format: one `A,B -> C,D` per line, `#` comments, optional
/// `nullable: A,B` directive.
FdSpec parse_fd_spec(std::istream& in);
FdSpec parse_fd_spec_file(const std::string& path);

}  // namespace nullfd
