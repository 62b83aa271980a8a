#include "cwpair/matrix.hpp"

#include <cctype>
#include <sstream>

namespace cwpair {

namespace {

struct MatrixScanner {
    std::string_view text;
    size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) {
            throw ParseError("invalid matrix '" + std::string(text) + "': expected '" +
                             std::string(1, c) + "' at offset " + std::to_string(pos));
        }
        ++pos;
    }
    Int read_int() {
        skip_ws();
        const size_t start = pos;
        if (!at_end() && (peek() == '+' || peek() == '-')) ++pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
            throw ParseError("invalid matrix '" + std::string(text) + "': expected integer at offset " +
                             std::to_string(pos));
        }
        return Int(std::string(text.substr(start, pos - start)), 10);
    }
};

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) {
    MatrixScanner s{text};
    s.expect('[');
    std::vector<std::vector<Int>> rows;
    s.skip_ws();
    if (!s.at_end() && s.peek() == ']') {
        ++s.pos;
    } else {
        while (true) {
            s.expect('[');
            std::vector<Int> row;
            s.skip_ws();
            if (!s.at_end() && s.peek() == ']') {
                ++s.pos;
            } else {
                while (true) {
                    row.push_back(s.read_int());
                    s.skip_ws();
                    if (!s.at_end() && s.peek() == ',') { ++s.pos; continue; }
                    break;
                }
                s.expect(']');
            }
            rows.push_back(std::move(row));
            s.skip_ws();
            if (!s.at_end() && s.peek() == ',') { ++s.pos; continue; }
            break;
        }
        s.expect(']');
    }
    s.skip_ws();
    if (!s.at_end()) {
        throw ParseError("invalid matrix '" + std::string(text) + "': trailing characters");
    }

    const size_t nrows = rows.size();
    const size_t ncols = nrows == 0 ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != ncols) {
            throw ParseError("invalid matrix '" + std::string(text) + "': ragged rows");
        }
    }
    IntMatrix m(nrows, ncols);
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string int_matrix_str(const IntMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out << ",";
        out << "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ",";
            out << m(i, j).get_str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace cwpair
