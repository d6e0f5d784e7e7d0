#include "cssx/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "cssx/errors.hpp"

namespace cssx {

namespace {

// Whitespace-delimited token reader that tracks 1-based line/column for
// error reporting. Lines starting with '%' are Matrix Market comments.
class Tokenizer {
public:
    Tokenizer(const std::string& text, bool skip_comments)
        : text_(text), skip_comments_(skip_comments) {}

    bool next(std::string& token, std::size_t& line, std::size_t& column) {
        for (;;) {
            if (pos_ >= text_.size()) return false;
            char ch = text_[pos_];
            if (ch == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++column_;
                ++pos_;
                continue;
            }
            if (skip_comments_ && ch == '%' && column_ == 1) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        line = line_;
        column = column_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++column_;
        }
        token = text_.substr(start, pos_ - start);
        return true;
    }

    std::size_t line() const { return line_; }

private:
    const std::string& text_;
    bool skip_comments_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

double parse_real(const std::string& token, std::size_t line, std::size_t column) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + token.size()) {
        throw ParseError("expected a real number, got '" + token + "'", line, column);
    }
    if (!std::isfinite(value)) {
        throw NonFiniteError("non-finite entry '" + token + "' at line " + std::to_string(line));
    }
    return value;
}

std::size_t parse_count(const std::string& token, std::size_t line, std::size_t column) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("expected a nonnegative integer, got '" + token + "'", line, column);
    }
    return value;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

DenseMatrix parse_matrix_market(const std::string& text) {
    // Banner: %%MatrixMarket matrix <array|coordinate> real general
    std::size_t eol = text.find('\n');
    std::string banner = text.substr(0, eol == std::string::npos ? text.size() : eol);
    std::istringstream bs(banner);
    std::string head, object, layout, field, symmetry;
    bs >> head >> object >> layout >> field >> symmetry;
    if (lowercase(head) != "%%matrixmarket" || lowercase(object) != "matrix") {
        throw ParseError("missing '%%MatrixMarket matrix' banner", 1, 1);
    }
    layout = lowercase(layout);
    if (lowercase(field) != "real" || lowercase(symmetry) != "general") {
        throw ParseError("only 'real general' Matrix Market files are supported", 1, 1);
    }
    if (layout != "array" && layout != "coordinate") {
        throw ParseError("unsupported Matrix Market layout '" + layout + "'", 1, 1);
    }

    std::string body = eol == std::string::npos ? std::string() : text.substr(eol + 1);
    Tokenizer tok(body, /*skip_comments=*/true);
    std::string token;
    std::size_t line = 0, column = 0;
    auto need = [&](const char* what) {
        if (!tok.next(token, line, column)) {
            throw ParseError(std::string("unexpected end of file, expected ") + what,
                             tok.line() + 1, 1);
        }
        line += 1;  // body starts after the banner line
    };

    need("row count");
    std::size_t rows = parse_count(token, line, column);
    need("column count");
    std::size_t cols = parse_count(token, line, column);
    if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", line, column);

    DenseMatrix out(rows, cols);
    if (layout == "array") {
        // column-major value list
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = 0; i < rows; ++i) {
                need("matrix entry");
                out(i, j) = parse_real(token, line, column);
            }
        }
    } else {
        need("nonzero count");
        std::size_t nnz = parse_count(token, line, column);
        for (std::size_t t = 0; t < nnz; ++t) {
            need("row index");
            std::size_t i = parse_count(token, line, column);
            need("column index");
            std::size_t j = parse_count(token, line, column);
            need("value");
            double v = parse_real(token, line, column);
            if (i == 0 || i > rows || j == 0 || j > cols) {
                throw ParseError("coordinate (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") out of range",
                                 line, column);
            }
            out(i - 1, j - 1) += v;  // duplicates are summed
        }
        for (double v : out.entries()) {
            if (!std::isfinite(v)) throw NonFiniteError("summed coordinate entries overflowed");
        }
    }
    if (tok.next(token, line, column)) {
        throw ParseError("trailing content '" + token + "'", line + 1, column);
    }
    return out;
}

DenseMatrix parse_csv(const std::string& text) {
    std::vector<double> entries;
    std::size_t cols = 0, rows = 0;
    std::istringstream stream(text);
    std::string linebuf;
    std::size_t lineno = 0;
    while (std::getline(stream, linebuf)) {
        ++lineno;
        if (!linebuf.empty() && linebuf.back() == '\r') linebuf.pop_back();
        bool blank = linebuf.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        std::size_t field_count = 0;
        std::size_t start = 0;
        while (start <= linebuf.size()) {
            std::size_t comma = linebuf.find(',', start);
            std::string field = linebuf.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            // trim surrounding blanks
            std::size_t b = field.find_first_not_of(" \t");
            std::size_t e = field.find_last_not_of(" \t");
            if (b == std::string::npos) {
                throw ParseError("empty CSV field", lineno, start + 1);
            }
            entries.push_back(parse_real(field.substr(b, e - b + 1), lineno, start + 1));
            ++field_count;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (rows == 0) {
            cols = field_count;
        } else if (field_count != cols) {
            throw ParseError("row has " + std::to_string(field_count) + " fields, expected " +
                                 std::to_string(cols),
                             lineno, 1);
        }
        ++rows;
    }
    if (rows == 0) throw ParseError("empty CSV input", 1, 1);
    return DenseMatrix(rows, cols, std::move(entries));
}

}  // namespace

DenseMatrix parse_matrix(const std::string& text, MatrixFormat format) {
    return format == MatrixFormat::matrix_market ? parse_matrix_market(text) : parse_csv(text);
}

DenseMatrix read_matrix(const std::string& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str(), format);
}

void write_csv(const std::string& path, const DenseMatrix& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    char buf[40];
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            out << buf << (j + 1 == a.cols() ? "" : ",");
        }
        out << '\n';
    }
}

}  // namespace cssx
