#pragma once

// Plain-text formats. Every element is written as its canonical integer.
//
//   matrix:  q=<p>^<m> mod=<code>      code:  <matrix>
//            <rows> <cols>                   n=<n> k=<k>
//            <row 0>
//            ...
//
//   alphas:  field header, then l lines of r+1 integers.
//   characterized pcm:  "H1", matrix, "H2", matrix, "coverage", l index lines.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/characterize.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace lrc::io {

namespace detail {

inline bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
}

inline std::string expect_line(std::istream& in, const char* what) {
    std::string line;
    if (!next_line(in, line)) throw Error(std::string("unexpected end of input: expected ") + what);
    return line;
}

inline std::uint64_t parse_uint(const std::string& tok, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(std::string("malformed ") + what + " '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw Error(std::string("malformed ") + what + " '" + tok + "'");
    }
}

inline std::vector<std::uint64_t> parse_uints(const std::string& line, const char* what) {
    std::istringstream is(line);
    std::vector<std::uint64_t> out;
    std::string tok;
    while (is >> tok) out.push_back(parse_uint(tok, what));
    return out;
}

}  // namespace detail

inline std::string field_header(const Field& f) { return f.header(); }

/// Parses `q=<p>^<m> mod=<code>`.
inline FieldRef parse_field_header(const std::string& line) {
    std::istringstream is(line);
    std::string qtok, modtok, extra;
    if (!(is >> qtok >> modtok) || (is >> extra) || qtok.rfind("q=", 0) != 0 || modtok.rfind("mod=", 0) != 0)
        throw Error("malformed field header '" + line + "'");
    const auto caret = qtok.find('^');
    if (caret == std::string::npos) throw Error("malformed field header '" + line + "'");
    const auto p = detail::parse_uint(qtok.substr(2, caret - 2), "characteristic");
    const auto m = detail::parse_uint(qtok.substr(caret + 1), "extension degree");
    const auto mod = detail::parse_uint(modtok.substr(4), "modulus");
    if (p > 0xffffffffu || m > 64) throw Error("field header out of range '" + line + "'");
    return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(m),
                       poly::decode(mod, static_cast<std::uint32_t>(p)));
}

inline void write_matrix_body(std::ostream& out, const GfMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

inline void write_matrix(std::ostream& out, const GfMatrix& m) {
    out << field_header(m.field()) << '\n';
    write_matrix_body(out, m);
}

inline GfMatrix read_matrix_body(std::istream& in, const FieldRef& field) {
    const auto dims = detail::parse_uints(detail::expect_line(in, "matrix shape"), "matrix shape");
    if (dims.size() != 2) throw Error("matrix shape line must hold two integers");
    const std::size_t rows = dims[0], cols = dims[1];
    std::vector<elem_t> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto vals = detail::parse_uints(detail::expect_line(in, "matrix row"), "matrix entry");
        if (vals.size() != cols)
            throw Error("matrix row " + std::to_string(r) + " has " + std::to_string(vals.size()) + " entries, expected " +
                        std::to_string(cols));
        for (auto v : vals) {
            if (v >= field->size()) throw Error("matrix entry " + std::to_string(v) + " out of range");
            entries.push_back(static_cast<elem_t>(v));
        }
    }
    return GfMatrix(field, rows, cols, std::move(entries));
}

inline GfMatrix read_matrix(std::istream& in) {
    const FieldRef f = parse_field_header(detail::expect_line(in, "field header"));
    return read_matrix_body(in, f);
}

inline void write_code(std::ostream& out, const LinearCode& code) {
    write_matrix(out, code.pcm());
    out << "n=" << code.n() << " k=" << code.k() << '\n';
}

/// The trailing `n= k=` line is optional on input but must agree when present.
inline LinearCode read_code(std::istream& in) {
    GfMatrix h = read_matrix(in);
    LinearCode code(std::move(h));
    std::string line;
    if (detail::next_line(in, line)) {
        std::istringstream is(line);
        std::string a, b;
        is >> a >> b;
        if (a.rfind("n=", 0) != 0 || b.rfind("k=", 0) != 0) throw Error("malformed code trailer '" + line + "'");
        const auto n = detail::parse_uint(a.substr(2), "n");
        const auto k = detail::parse_uint(b.substr(2), "k");
        if (n != code.n() || k != code.k())
            throw Error("code trailer n=" + std::to_string(n) + " k=" + std::to_string(k) + " disagrees with matrix (n=" +
                        std::to_string(code.n()) + " k=" + std::to_string(code.k()) + ")");
    }
    return code;
}

inline void write_alphas(std::ostream& out, const AlphaAssignment& a) {
    out << field_header(*a.field) << '\n';
    for (std::size_t i = 0; i < a.l; ++i) {
        for (std::size_t j = 0; j <= a.r; ++j) out << (j ? " " : "") << a.at(i, j);
        out << '\n';
    }
}

/// l and r are inferred: one line per group, r+1 values per line.
inline AlphaAssignment read_alphas(std::istream& in) {
    const FieldRef f = parse_field_header(detail::expect_line(in, "field header"));
    AlphaAssignment a{f, 0, 0, {}};
    std::string line;
    std::size_t width = 0;
    while (detail::next_line(in, line)) {
        const auto vals = detail::parse_uints(line, "alpha");
        if (a.l == 0) width = vals.size();
        if (vals.size() != width || width < 2) throw Error("alpha rows must all hold the same number (>= 2) of values");
        for (auto v : vals) {
            if (v >= f->size()) throw Error("alpha " + std::to_string(v) + " out of range");
            a.grid.push_back(static_cast<elem_t>(v));
        }
        ++a.l;
    }
    if (a.l == 0) throw Error("alpha file has no groups");
    a.r = width - 1;
    return a;
}

inline void write_characterized(std::ostream& out, const CharacterizedPcm& cp) {
    out << field_header(cp.h1.field()) << '\n';
    out << "H1\n";
    write_matrix_body(out, cp.h1);
    out << "H2\n";
    write_matrix_body(out, cp.h2);
    out << "coverage\n";
    for (const auto& cov : cp.coverage) {
        for (std::size_t i = 0; i < cov.size(); ++i) out << (i ? " " : "") << cov[i];
        out << '\n';
    }
}

inline CharacterizedPcm read_characterized(std::istream& in) {
    const FieldRef f = parse_field_header(detail::expect_line(in, "field header"));
    if (detail::expect_line(in, "H1") != "H1") throw Error("expected H1 block");
    GfMatrix h1 = read_matrix_body(in, f);
    if (detail::expect_line(in, "H2") != "H2") throw Error("expected H2 block");
    GfMatrix h2 = read_matrix_body(in, f);
    if (h2.rows() > 0 && h2.cols() != h1.cols()) throw Error("H1 and H2 widths differ");
    if (detail::expect_line(in, "coverage") != "coverage") throw Error("expected coverage block");
    CharacterizedPcm cp{std::move(h1), std::move(h2), {}};
    for (std::size_t i = 0; i < cp.h1.rows(); ++i) {
        const auto vals = detail::parse_uints(detail::expect_line(in, "coverage line"), "coverage index");
        cp.coverage.emplace_back(vals.begin(), vals.end());
    }
    return cp;
}

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw Error("file not found: " + path);
    return reader(in);
}

template <class Writer>
void write_file(const std::string& path, Writer writer) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    writer(out);
    if (!out) throw Error("write failed: " + path);
}

}  // namespace lrc::io
