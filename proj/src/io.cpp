#include "nullfd/io.hpp"

#include <fstream>
#include <sstream>

namespace nullfd {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
            } else {
                cur += c;
                ++i;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
        } else {
            cur += c;
            ++i;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", lineno);
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_attr_list(const std::string& s, int lineno) {
    std::vector<std::string> out;
    std::stringstream ss{s};
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError("empty attribute name", lineno);
        out.push_back(item);
    }
    return out;
}

}  // namespace

std::vector<std::optional<Value>> parse_csv_record(const std::string& line,
                                                   const CsvOptions& opt) {
    std::vector<std::optional<Value>> out;
    for (auto& f : split_csv_line(line, 0)) {
        if (f == opt.null_token)
            out.push_back(std::nullopt);
        else
            out.push_back(std::move(f));
    }
    return out;
}

Relation read_csv(std::istream& in, const CsvOptions& opt) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("missing CSV header", 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_line(line, lineno);
    Relation r{Schema(header)};
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line, lineno);
        if (fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()),
                             lineno);
        std::vector<std::optional<Value>> row;
        for (auto& f : fields) {
            if (f == opt.null_token)
                row.push_back(std::nullopt);
            else
                row.push_back(std::move(f));
        }
        r.add_row(row);
    }
    return r;
}

Relation read_csv_file(const std::string& path, const CsvOptions& opt) {
    std::ifstream in{path};
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_csv(in, opt);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const Relation& r, const CsvOptions& opt) {
    const auto& attrs = r.schema().attributes();
    for (std::size_t i = 0; i < attrs.size(); ++i)
        out << (i ? "," : "") << csv_escape(attrs[i]);
    out << "\n";
    for (const auto& t : r.tuples()) {
        for (std::size_t i = 0; i < t.cells.size(); ++i) {
            if (i) out << ",";
            out << (t.cells[i].null ? opt.null_token : csv_escape(t.cells[i].value));
        }
        out << "\n";
    }
}

FdSpec parse_fd_spec(std::istream& in) {
    FdSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("nullable:", 0) == 0) {
            AttrSet nn;
            for (auto& a : split_attr_list(line.substr(9), lineno)) nn.insert(a);
            spec.nullable = nn;
            continue;
        }

        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("expected '->' in FD", lineno);
        std::string lhs_str = trim(line.substr(0, arrow));
        std::string rhs_str = trim(line.substr(arrow + 2));
        if (rhs_str.empty()) throw ParseError("empty right-hand side", lineno);
        AttrSet lhs, rhs;
        if (!lhs_str.empty())
            for (auto& a : split_attr_list(lhs_str, lineno)) lhs.insert(a);
        for (auto& a : split_attr_list(rhs_str, lineno)) rhs.insert(a);
        spec.fds.add(FD{std::move(lhs), std::move(rhs)});
    }
    return spec;
}

FdSpec parse_fd_spec_file(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_fd_spec(in);
}

}  // namespace nullfd
