#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/matrix.hpp"
#include "ratginv/rational_function.hpp"

namespace ratginv {

namespace detail {

// Recursive-descent parser for the cell grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom (('^' uint) | ('/' atom ('^' uint)?))*
//   atom   := integer | 'x' | '(' expr ')'
// Whitespace is insignificant; '/' binds to the immediately following atom
// (with its exponent, so 1/x^2 means 1/(x^2)).
class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    RatFun parse_all() {
        RatFun v = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    RatFun parse_expr() {
        bool negate = false;
        const char lead = peek();
        if (lead == '+' || lead == '-') {
            ++pos_;
            negate = lead == '-';
        }
        RatFun acc = parse_term();
        if (negate) acc = -acc;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            const RatFun t = parse_term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    RatFun parse_term() {
        RatFun acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    RatFun parse_factor() {
        RatFun acc = parse_atom();
        for (char c = peek(); c == '^' || c == '/'; c = peek()) {
            if (c == '^') {
                ++pos_;
                acc = pow_uint(acc, parse_uint());
            } else {
                const std::size_t slash_pos = pos_;
                ++pos_;
                RatFun divisor = parse_atom();
                if (peek() == '^') {
                    ++pos_;
                    divisor = pow_uint(divisor, parse_uint());
                }
                if (divisor.is_zero())
                    throw PoleError("division by a zero polynomial", slash_pos);
                acc = acc / divisor;
            }
        }
        return acc;
    }

    RatFun parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFun v = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return RatFun::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Rat(Int(parse_digits())));
        throw ParseError(pos_ < src_.size() ? std::string("unexpected character '") + c + "'"
                                            : "unexpected end of input",
                         pos_);
    }

    std::string parse_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return std::string(src_.substr(start, pos_ - start));
    }

    unsigned long parse_uint() {
        const std::size_t at = pos_;
        try {
            return std::stoul(parse_digits());
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", at);
        }
    }

    static RatFun pow_uint(const RatFun& base, unsigned long e) {
        RatFun acc(1);
        for (unsigned long k = 0; k < e; ++k) acc = acc * base;
        return acc;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFun parse_ratfun_expr(std::string_view src) {
    return detail::ExprParser(src).parse_all();
}

// Matrix file: first non-comment line "m n", then m rows of n cells separated
// by ';'. Lines starting with '#' are comments; blank lines are skipped.
inline RatMatrix parse_matrix_file(std::string_view src) {
    std::vector<std::string> lines;
    {
        std::string cur;
        std::istringstream is{std::string(src)};
        while (std::getline(is, cur)) {
            std::size_t first = cur.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (cur[first] == '#') continue;
            lines.push_back(cur);
        }
    }
    if (lines.empty()) throw ParseError("empty matrix file", 0);

    std::size_t rows = 0, cols = 0;
    {
        std::istringstream hdr(lines[0]);
        if (!(hdr >> rows >> cols) || rows == 0 || cols == 0)
            throw ParseError("matrix header must be 'rows cols'", 0);
        std::string junk;
        if (hdr >> junk) throw ParseError("matrix header must be 'rows cols'", 0);
    }
    if (lines.size() != rows + 1)
        throw ShapeError("expected " + std::to_string(rows) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));

    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string& line = lines[i + 1];
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t semi = line.find(';', start);
            cells.push_back(line.substr(start, semi == std::string::npos ? std::string::npos
                                                                         : semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (cells.size() != cols)
            throw ShapeError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(i, j) = parse_ratfun_expr(cells[j]);
            } catch (const ParseError& e) {
                throw ParseError("row " + std::to_string(i + 1) + " cell " + std::to_string(j + 1) +
                                     ": " + e.what(),
                                 e.position);
            }
        }
    }
    return m;
}

inline RatMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_file(ss.str());
}

}  // namespace ratginv
