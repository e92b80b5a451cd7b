#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hyperalpha {

// .uhg text format:
//   line 1:        k n m
//   next m lines:  k space-separated 1-based vertex ids
// Lines beginning with '#' and blank lines are ignored. The writer emits the
// canonical form (sorted edges), so write(read(f)) is byte-identical for
// canonical files.

namespace detail {

inline std::vector<long long> parse_int_line(const std::string& line, int line_no) {
    std::vector<long long> vals;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
        if (ec != std::errc() || ptr != line.data() + j)
            throw ParseError(line_no, "expected integer, got '" + line.substr(i, j - i) + "'");
        vals.push_back(v);
        i = j;
    }
    return vals;
}

inline bool content_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace detail

inline Hypergraph read_uhg(std::istream& in) {
    std::string line;
    int line_no = 0;
    int k = 0, n = 0;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::content_line(line)) continue;
        std::vector<long long> vals = detail::parse_int_line(line, line_no);
        if (m < 0) {
            if (vals.size() != 3)
                throw ParseError(line_no, "header must be 'k n m'");
            k = static_cast<int>(vals[0]);
            n = static_cast<int>(vals[1]);
            m = vals[2];
            if (k < 2) throw ParseError(line_no, "edge cardinality k must be >= 2");
            if (n < 1) throw ParseError(line_no, "vertex count n must be >= 1");
            if (m < 0) throw ParseError(line_no, "edge count m must be >= 0");
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than declared (m=" + std::to_string(m) + ")");
        if (static_cast<int>(vals.size()) != k)
            throw ParseError(line_no, "edge has " + std::to_string(vals.size()) +
                                          " vertices, expected " + std::to_string(k));
        Edge e;
        e.reserve(k);
        for (long long v : vals) {
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex id " + std::to_string(v) + " outside 1.." +
                                              std::to_string(n));
            e.push_back(static_cast<int>(v));
        }
        Edge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw ParseError(line_no, "repeated vertex " + std::to_string(sorted[i]) +
                                              " inside edge");
        if (!seen.insert(sorted).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(std::move(sorted));
    }
    if (m < 0) throw ParseError(line_no + 1, "missing 'k n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no + 1, "declared m=" + std::to_string(m) + " but found " +
                                          std::to_string(edges.size()) + " edges");
    return Hypergraph::build(n, k, std::move(edges));
}

inline Hypergraph read_uhg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_uhg(in);
}

inline void write_uhg(std::ostream& out, const Hypergraph& g) {
    out << g.k() << ' ' << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

inline std::string to_uhg(const Hypergraph& g) {
    std::ostringstream os;
    write_uhg(os, g);
    return os.str();
}

inline void write_uhg_file(const std::string& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_uhg(out, g);
}

}  // namespace hyperalpha
