#include "necoc/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "necoc/errors.hpp"

namespace necoc {

std::string to_text(const CodingMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() * 3 + 1) + 16);
    out += std::to_string(m.base());
    out += ' ';
    out += std::to_string(m.rows());
    out += ' ';
    out += std::to_string(m.cols());
    out += '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(int(m.at(i, j)));
        }
        out += '\n';
    }
    return out;
}

namespace {

// Splits a line into base-10 integers; returns false on any non-numeric token.
bool parse_ints(std::string_view line, std::vector<int>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc()) return false;
        const std::size_t end = static_cast<std::size_t>(ptr - line.data());
        if (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
            return false;
        out.push_back(value);
        i = end;
    }
    return true;
}

}  // namespace

CodingMatrix parse_matrix_text(std::string_view text, const std::string& source) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    std::vector<int> fields;
    std::size_t lineno = 0;
    while (lineno < lines.size()) {
        if (!parse_ints(lines[lineno], fields))
            throw parse_error(source, static_cast<long>(lineno + 1), "non-numeric token");
        if (!fields.empty()) break;
        ++lineno;  // tolerate leading blank lines
    }
    if (lineno >= lines.size()) throw parse_error(source, 1, "empty matrix file");
    if (fields.size() != 3)
        throw parse_error(source, static_cast<long>(lineno + 1),
                          "header must be 'N c n'");
    const int base = fields[0], rows = fields[1], cols = fields[2];
    if (base < 2 || base > 256)
        throw parse_error(source, static_cast<long>(lineno + 1), "base out of range");
    if (rows < 1 || cols < 1)
        throw parse_error(source, static_cast<long>(lineno + 1), "dimensions out of range");

    std::vector<Symbol> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    int seen_rows = 0;
    for (std::size_t l = lineno + 1; l < lines.size(); ++l) {
        if (!parse_ints(lines[l], fields))
            throw parse_error(source, static_cast<long>(l + 1), "non-numeric token");
        if (fields.empty()) continue;
        if (static_cast<int>(fields.size()) != cols)
            throw parse_error(source, static_cast<long>(l + 1),
                              "expected " + std::to_string(cols) + " symbols, got " +
                                  std::to_string(fields.size()));
        for (int v : fields) {
            if (v < 0 || v >= base)
                throw parse_error(source, static_cast<long>(l + 1),
                                  "symbol " + std::to_string(v) + " out of range for base " +
                                      std::to_string(base));
            entries.push_back(static_cast<Symbol>(v));
        }
        ++seen_rows;
    }
    if (seen_rows != rows)
        throw parse_error(source, static_cast<long>(lines.size()),
                          "expected " + std::to_string(rows) + " rows, got " +
                              std::to_string(seen_rows));
    return CodingMatrix(base, rows, cols, std::move(entries));
}

CodingMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open matrix file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str(), path.string());
}

void write_matrix_file(const CodingMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path.string());
    out << to_text(m);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace necoc
