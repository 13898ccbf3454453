// Copyright 2026 The hochster Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOCHSTER_GRAPH_HPP
#define HOCHSTER_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/subsets.hpp"

namespace hochster {

// A labeled bipartite graph on X = {x_1..x_n} and Y = {y_1..y_m}, stored as
// one neighborhood mask per X vertex.  Indices are 0-based internally and
// 1-based in all text formats.
class bipartite_graph {
public:
    bipartite_graph(int n, int m, std::vector<mask_t> nbrs) : n_(n), m_(m), nbrs_(std::move(nbrs)) {
        if (n < 0 || m < 0 || m > max_mask_bits || n > max_mask_bits)
            throw std::invalid_argument("bipartite_graph: side size out of range");
        if (static_cast<int>(nbrs_.size()) != n)
            throw std::invalid_argument("bipartite_graph: expected one neighborhood per X vertex");
        for (mask_t s : nbrs_)
            if (!is_subset(s, full_mask(m)))
                throw std::invalid_argument("bipartite_graph: neighbor index out of range");
    }

    int x_count() const { return n_; }
    int y_count() const { return m_; }

    mask_t neighbors(int i) const { return nbrs_.at(i); }
    int degree(int i) const { return popcount(nbrs_.at(i)); }

    int edge_count() const {
        int e = 0;
        for (mask_t s : nbrs_) e += popcount(s);
        return e;
    }

    // N(y_j) as a mask over X.
    mask_t x_neighbors(int j) const {
        mask_t s = 0;
        for (int i = 0; i < n_; ++i)
            if (has_bit(nbrs_[i], j)) s |= bit(i);
        return s;
    }

    bool has_isolated_x() const {
        for (mask_t s : nbrs_)
            if (s == 0) return true;
        return false;
    }

    // Edges as 0-based (i, j) pairs, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for_each_bit(nbrs_[i], [&](int j) { out.emplace_back(i, j); });
        return out;
    }

    bool operator==(const bipartite_graph& o) const {
        return n_ == o.n_ && m_ == o.m_ && nbrs_ == o.nbrs_;
    }

private:
    int n_, m_;
    std::vector<mask_t> nbrs_;
};

// W = X' | Y', kept as separate masks over the two sides.  Doubles as a
// squarefree multidegree.
struct vertex_subset {
    mask_t xs = 0;
    mask_t ys = 0;

    bool operator==(const vertex_subset&) const = default;
};

// Flat vertex numbering used by edge ideals: x_i -> i, y_j -> n + j.
inline mask_t flatten(const vertex_subset& w, int n) { return w.xs | (w.ys << n); }

inline vertex_subset split_flat(mask_t flat, int n) {
    return {flat & full_mask(n), flat >> n};
}

// Induced subgraph together with the relabeling back to the original graph.
struct induced_graph {
    bipartite_graph graph;
    std::vector<int> x_orig;  // new X index -> original X index
    std::vector<int> y_orig;
};

inline induced_graph induced_subgraph(const bipartite_graph& g, const vertex_subset& w) {
    if (!is_subset(w.xs, full_mask(g.x_count())) || !is_subset(w.ys, full_mask(g.y_count())))
        throw std::invalid_argument("induced_subgraph: subset out of range");
    std::vector<int> xm, ym;
    for_each_bit(w.xs, [&](int i) { xm.push_back(i); });
    for_each_bit(w.ys, [&](int j) { ym.push_back(j); });
    std::vector<mask_t> rows(xm.size(), 0);
    for (std::size_t a = 0; a < xm.size(); ++a) {
        mask_t old = g.neighbors(xm[a]);
        for (std::size_t b = 0; b < ym.size(); ++b)
            if (has_bit(old, ym[b])) rows[a] |= bit(static_cast<int>(b));
    }
    return {bipartite_graph(static_cast<int>(xm.size()), static_cast<int>(ym.size()), std::move(rows)),
            std::move(xm), std::move(ym)};
}

// Minimum degree over a nonempty set of X vertices.
inline int mindeg(const bipartite_graph& g, mask_t xs) {
    if (xs == 0) throw std::invalid_argument("mindeg: empty X subset");
    if (!is_subset(xs, full_mask(g.x_count())))
        throw std::invalid_argument("mindeg: subset out of range");
    int best = max_mask_bits + 1;
    for_each_bit(xs, [&](int i) { best = std::min(best, g.degree(i)); });
    return best;
}

// The shifted graph: x_i keeps its degree but its neighbors become
// y_1..y_{deg x_i}.
inline bipartite_graph ferrers_of(const bipartite_graph& g) {
    std::vector<mask_t> rows(g.x_count());
    for (int i = 0; i < g.x_count(); ++i) rows[i] = full_mask(g.degree(i));
    return bipartite_graph(g.x_count(), g.y_count(), std::move(rows));
}

// Nearly row-nested: neighborhoods of strictly smaller degree are contained
// in larger ones, and each degree class c has common intersection of size
// at least c - 1.
inline bool is_nearly_row_nested(const bipartite_graph& g) {
    int n = g.x_count();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (g.degree(i) < g.degree(k) && !is_subset(g.neighbors(i), g.neighbors(k)))
                return false;
    for (int i = 0; i < n; ++i) {
        int c = g.degree(i);
        mask_t common = g.neighbors(i);
        for (int k = 0; k < n; ++k)
            if (g.degree(k) == c) common &= g.neighbors(k);
        if (popcount(common) < c - 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Graph text format: header "n m", then one "i j" line per edge, 1-based,
// sorted by (i, j).  Blank lines and '#' comments are ignored on input.

inline std::string write_graph(const bipartite_graph& g) {
    std::ostringstream os;
    os << g.x_count() << ' ' << g.y_count() << '\n';
    for (auto [i, j] : g.edges()) os << (i + 1) << ' ' << (j + 1) << '\n';
    return os.str();
}

inline bipartite_graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<mask_t> rows;
    auto significant = [](const std::string& s) {
        for (char c : s) {
            if (c == '#') return false;
            if (!isspace(static_cast<unsigned char>(c))) return true;
        }
        return false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        long a, b;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest)) throw parse_error(lineno, "expected two integers");
        if (n < 0) {
            if (a < 0 || b < 0 || a > max_mask_bits || b > max_mask_bits)
                throw parse_error(lineno, "side sizes out of range");
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            rows.assign(n, 0);
            continue;
        }
        if (a < 1 || a > n) throw parse_error(lineno, "x index out of range");
        if (b < 1 || b > m) throw parse_error(lineno, "y index out of range");
        mask_t e = bit(static_cast<int>(b - 1));
        if (rows[a - 1] & e) throw parse_error(lineno, "duplicate edge");
        rows[a - 1] |= e;
    }
    if (n < 0) throw parse_error(lineno, "missing header");
    return bipartite_graph(n, m, std::move(rows));
}

inline bipartite_graph read_graph_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of bipartite graphs on fixed sides.

struct enumerate_options {
    bool no_isolated_x = false;
    bool dedupe = false;            // one representative per (S_n x S_m) orbit
    int max_cells = 16;             // guard on n*m
};

// Lexicographically minimal row-mask vector over all row and column
// permutations.  Brute force; enumeration is capped at small sides.
inline std::vector<mask_t> canonical_rows(int n, int m, const std::vector<mask_t>& rows) {
    std::vector<int> xp(n), yp(m);
    std::iota(xp.begin(), xp.end(), 0);
    std::vector<mask_t> best;
    do {
        std::iota(yp.begin(), yp.end(), 0);
        do {
            std::vector<mask_t> cand(n);
            for (int i = 0; i < n; ++i) {
                mask_t r = rows[xp[i]], out = 0;
                for (int j = 0; j < m; ++j)
                    if (has_bit(r, yp[j])) out |= bit(j);
                cand[i] = out;
            }
            if (best.empty() || cand < best) best = std::move(cand);
        } while (std::next_permutation(yp.begin(), yp.end()));
    } while (std::next_permutation(xp.begin(), xp.end()));
    return best;
}

// Streams all 2^(n*m) neighborhood assignments in lexicographic order of the
// row-mask vector (row 0 most significant).  Deterministic; callers may
// shard by the running index.
class graph_enumerator {
public:
    graph_enumerator(int n, int m, enumerate_options opt = {}) : n_(n), m_(m), opt_(opt) {
        if (n < 0 || m < 0) throw std::invalid_argument("graph_enumerator: negative side");
        if (n * m > opt.max_cells)
            throw resource_limit_error("graph_enumerator: n*m exceeds cap of " +
                                       std::to_string(opt.max_cells));
        if (n * m > max_mask_bits)
            throw resource_limit_error("graph_enumerator: n*m exceeds the index width");
        if (opt.dedupe && (n > 6 || m > 6))
            throw resource_limit_error("graph_enumerator: dedupe canonical form is factorial, sides capped at 6");
        end_ = mask_t{1} << (n * m);
    }

    std::optional<bipartite_graph> next() {
        while (idx_ < end_) {
            std::vector<mask_t> rows = rows_at(idx_++);
            if (opt_.no_isolated_x &&
                std::any_of(rows.begin(), rows.end(), [](mask_t r) { return r == 0; }))
                continue;
            if (opt_.dedupe && canonical_rows(n_, m_, rows) != rows) continue;
            return bipartite_graph(n_, m_, std::move(rows));
        }
        return std::nullopt;
    }

private:
    std::vector<mask_t> rows_at(mask_t idx) const {
        std::vector<mask_t> rows(n_);
        for (int i = 0; i < n_; ++i)
            rows[i] = (idx >> ((n_ - 1 - i) * m_)) & full_mask(m_);
        return rows;
    }

    int n_, m_;
    enumerate_options opt_;
    mask_t idx_ = 0, end_;
};

inline std::vector<bipartite_graph> enumerate_bipartite(int n, int m, enumerate_options opt = {}) {
    graph_enumerator en(n, m, opt);
    std::vector<bipartite_graph> out;
    while (auto g = en.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace hochster

#endif  // HOCHSTER_GRAPH_HPP
