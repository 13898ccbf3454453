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

#ifndef HOCHSTER_THEOREMS_HPP
#define HOCHSTER_THEOREMS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hochster/betti.hpp"
#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "hochster/homology.hpp"
#include "hochster/ideal.hpp"
#include "hochster/subsets.hpp"

namespace hochster {

enum class check_status { holds, violated, skipped };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::holds: return "HOLDS";
        case check_status::violated: return "VIOLATED";
        default: return "SKIPPED";
    }
}

// One failed comparison.  For the per-degree checks xs is the X-part; for
// total-Betti checks it stays empty and i is the homological index compared.
struct violation_record {
    int i = 0;
    mask_t xs = 0;
    std::int64_t lhs = 0, rhs = 0;

    bool operator==(const violation_record&) const = default;
};

struct verification_report {
    explicit verification_report(bipartite_graph g) : graph(std::move(g)) {}

    bipartite_graph graph;
    check_status status = check_status::holds;
    std::vector<violation_record> witnesses;
    std::int64_t p = 2;
    double elapsed_ms = 0;  // diagnostics only, never part of data output
    std::string skip_reason;
};

struct check_options {
    betti_caps caps{};
    // Test hook: shifts the closed form to fabricate violations, so the
    // VIOLATED paths and exit codes can be exercised on demand.
    int ferrers_bias = 0;
};

namespace detail {
class stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};
}  // namespace detail

// Lower bound of the shifted graph: beta_{i,X',.}(I) >= beta_{i,X',.}(J) for
// every nonempty X' and every homological index.
inline verification_report check_lower_bound(const bipartite_graph& g, prime_field f,
                                             check_options opt = {}) {
    detail::stopwatch timer;
    verification_report rep(g);
    rep.p = f.p();
    try {
        betti_engine eng(g, f, opt.caps);
        int imax = g.x_count() + g.y_count() - 2;
        for (int i = 0; i <= imax; ++i) {
            for_each_subset_by_size(full_mask(g.x_count()), [&](mask_t xs) {
                if (xs == 0) return;
                std::int64_t lhs = eng.zn(i, xs);
                std::int64_t rhs = ferrers_betti_zn(g, i, xs) + opt.ferrers_bias;
                if (lhs < rhs) rep.witnesses.push_back({i, xs, lhs, rhs});
            });
        }
        rep.status = rep.witnesses.empty() ? check_status::holds : check_status::violated;
    } catch (const resource_limit_error& e) {
        rep.status = check_status::skipped;
        rep.skip_reason = e.what();
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

struct equality_options {
    betti_caps caps{};
    bool allow_isolated_x = false;
};

struct equality_outcome {
    bool tables_equal = false;      // zn table of I matches the closed form everywhere
    bool nearly_row_nested = false;
    bool consistent = false;        // the two sides of the characterization agree
};

// Equality characterization on one instance: equality of the two tables at
// every (i, X') must coincide with the graph being nearly row-nested.
inline equality_outcome equality_characterization(const bipartite_graph& g, prime_field f,
                                                  equality_options opt = {}) {
    if (!opt.allow_isolated_x && g.has_isolated_x())
        throw std::invalid_argument("equality_characterization: graph has an isolated X vertex");
    betti_engine eng(g, f, opt.caps);
    bool equal = true;
    int imax = g.x_count() + g.y_count() - 2;
    for (int i = 0; i <= imax && equal; ++i) {
        for_each_subset_by_size(full_mask(g.x_count()), [&](mask_t xs) {
            if (xs == 0 || !equal) return;
            if (eng.zn(i, xs) != ferrers_betti_zn(g, i, xs)) equal = false;
        });
    }
    equality_outcome out;
    out.tables_equal = equal;
    out.nearly_row_nested = is_nearly_row_nested(g);
    out.consistent = out.tables_equal == out.nearly_row_nested;
    return out;
}

inline bool check_equality_characterization(const bipartite_graph& g, prime_field f,
                                            equality_options opt = {}) {
    return equality_characterization(g, f, opt).consistent;
}

// Colex lower bound: total Betti numbers of the edge ideal dominate those of
// the colexsegment ideal with the same number of quadratic generators.
inline verification_report check_colex_bound(const bipartite_graph& g, prime_field f,
                                             check_options opt = {}) {
    detail::stopwatch timer;
    verification_report rep(g);
    rep.p = f.p();
    try {
        betti_engine lhs_eng(g, f, opt.caps);
        betti_engine rhs_eng(colex_ideal(2, g.edge_count()), f, opt.caps);
        int jmax = std::max(projective_dimension(lhs_eng), projective_dimension(rhs_eng));
        for (int j = 0; j <= jmax; ++j) {
            std::int64_t lhs = lhs_eng.total(j);
            std::int64_t rhs = rhs_eng.total(j);
            if (lhs < rhs) rep.witnesses.push_back({j, 0, lhs, rhs});
        }
        rep.status = rep.witnesses.empty() ? check_status::holds : check_status::violated;
    } catch (const resource_limit_error& e) {
        rep.status = check_status::skipped;
        rep.skip_reason = e.what();
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Constructive homology witnesses behind the lower bound.

struct witness_level {
    mask_t x_active = 0, y_active = 0;
    mask_t x1_class = 0;              // X_1 = vertices sharing x1's neighborhood
    std::vector<int> hitting;         // minimum hitting set, 0-based, ascending
    int case_taken = 0;               // 0 base, 1, 2
    int j = 0;                        // dimension certified at this level
    mask_t checked_xs = 0, checked_ys = 0;
    std::int64_t rank = 0;
};

struct witness_result {
    int x1 = 0;       // 0-based
    mask_t y1 = 0;    // prescribed Y_1' inside N(x1)
    mask_t yprime = 0;
    int j = 0;
    std::vector<witness_level> trace;
    bool verified = false;
};

struct witness_options {
    betti_caps caps{};
    int max_hitting_pool = 20;
};

inline std::string format_witness_trace(const std::vector<witness_level>& trace) {
    std::ostringstream os;
    for (std::size_t lvl = 0; lvl < trace.size(); ++lvl) {
        const auto& t = trace[lvl];
        os << "level " << lvl << ": X=" << format_subset(t.x_active, "x")
           << " Y=" << format_subset(t.y_active, "y")
           << " X1=" << format_subset(t.x1_class, "x") << " hitting={";
        for (std::size_t k = 0; k < t.hitting.size(); ++k)
            os << (k ? "," : "") << 'y' << (t.hitting[k] + 1);
        os << "} case=" << t.case_taken << " checked=["
           << format_subset(t.checked_xs, "x") << ' ' << format_subset(t.checked_ys, "y")
           << "] dim=" << t.j << " rank=" << t.rank << '\n';
    }
    return os.str();
}

namespace detail {

// Smallest subset of `pool` (masked y vertices) meeting N(x) for every
// x in `targets`; exhaustive by size with lexicographic tie break.
inline std::optional<std::vector<int>> minimum_hitting_set(const bipartite_graph& g, mask_t pool,
                                                           mask_t targets, mask_t y_active) {
    std::vector<int> elems;
    for_each_bit(pool, [&](int v) { elems.push_back(v); });
    int p = static_cast<int>(elems.size());
    for (int k = 1; k <= p; ++k) {
        std::vector<int> pick(k);
        // lexicographically ordered k-combinations of positions 0..p-1
        for (int t = 0; t < k; ++t) pick[t] = t;
        while (true) {
            mask_t h = 0;
            for (int t : pick) h |= bit(elems[t]);
            bool covers = true;
            for_each_bit(targets, [&](int x) {
                if (covers && (g.neighbors(x) & y_active & h) == 0) covers = false;
            });
            if (covers) {
                std::vector<int> out;
                for (int t : pick) out.push_back(elems[t]);
                return out;
            }
            int t = k - 1;
            while (t >= 0 && pick[t] == p - k + t) --t;
            if (t < 0) break;
            ++pick[t];
            for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Recursive witness construction.  Either the active X collapses to the
// class of x1 (base case, disjoint simplices), or a minimum hitting set
// {v_1..v_r} of Y vertices outside N(x1) covers the rest; the subproblem on
// the graph without N(v_r) returns an extra vertex set S which either
// already certifies nonzero homology alongside the full X (case 1) or gains
// v_r while the dimension climbs by one (case 2, forced by Mayer-Vietoris).
// Every level checks its homology claim directly; a failed check aborts
// loudly with the full trace.
inline witness_result find_homology_witness(const bipartite_graph& g, int x1, mask_t y1,
                                            prime_field f, witness_options opt = {}) {
    int n = g.x_count(), m = g.y_count();
    if (x1 < 0 || x1 >= n) throw std::invalid_argument("find_homology_witness: x1 out of range");
    if (y1 == 0) throw std::invalid_argument("find_homology_witness: Y_1' must be nonempty");
    if (!is_subset(y1, g.neighbors(x1)))
        throw std::invalid_argument("find_homology_witness: Y_1' must lie inside N(x1)");
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == 0)
            throw std::invalid_argument("find_homology_witness: graph has an isolated X vertex");
        if (g.neighbors(i) != g.neighbors(x1) && is_subset(g.neighbors(i), g.neighbors(x1)))
            throw std::invalid_argument("find_homology_witness: N(x1) properly contains another neighborhood");
    }

    betti_engine eng(g, f, opt.caps);
    witness_result res;
    res.x1 = x1;
    res.y1 = y1;

    auto homology_rank = [&](mask_t xs, mask_t ys, int dim) {
        return eng.slice_betti(xs | (ys << n)).at(dim);
    };

    // returns the extra vertex set S; |S| is the certified dimension
    auto recurse = [&](auto&& self, mask_t x_act, mask_t y_act) -> mask_t {
        witness_level lvl;
        lvl.x_active = x_act;
        lvl.y_active = y_act;
        mask_t n1 = g.neighbors(x1) & y_act;
        mask_t x1_class = 0;
        for_each_bit(x_act, [&](int x) {
            if ((g.neighbors(x) & y_act) == n1) x1_class |= bit(x);
        });
        lvl.x1_class = x1_class;

        if (x1_class == x_act) {  // base: disjoint simplices on X_1 and Y_1'
            lvl.case_taken = 0;
            lvl.j = 0;
            lvl.checked_xs = x_act;
            lvl.checked_ys = y1;
            lvl.rank = homology_rank(x_act, y1, 0);
            res.trace.push_back(lvl);
            if (lvl.rank < 1)
                throw witness_certification_error("witness certification failed (base case)",
                                                  format_witness_trace(res.trace));
            return 0;
        }

        mask_t pool = y_act & ~n1;
        if (popcount(pool) > opt.max_hitting_pool)
            throw resource_limit_error("find_homology_witness: hitting-set pool exceeds cap");
        auto hit = detail::minimum_hitting_set(g, pool, x_act & ~x1_class, y_act);
        if (!hit)
            throw witness_certification_error("witness recursion invariant breached: no hitting set",
                                              format_witness_trace(res.trace));
        lvl.hitting = *hit;
        int vr = hit->back();
        mask_t prefix = 0;
        for (std::size_t t = 0; t + 1 < hit->size(); ++t) prefix |= bit((*hit)[t]);

        mask_t x_sub = x_act & ~(g.x_neighbors(vr) & x_act);
        mask_t extra = self(self, x_sub, y1 | prefix);

        mask_t a = y1 | extra;
        int j1 = popcount(extra);
        std::int64_t case1 = homology_rank(x_act, a, j1);
        if (case1 >= 1) {
            lvl.case_taken = 1;
            lvl.j = j1;
            lvl.checked_xs = x_act;
            lvl.checked_ys = a;
            lvl.rank = case1;
            res.trace.push_back(lvl);
            return extra;
        }
        mask_t a2 = a | bit(vr);
        std::int64_t case2 = homology_rank(x_act, a2, j1 + 1);
        lvl.case_taken = 2;
        lvl.j = j1 + 1;
        lvl.checked_xs = x_act;
        lvl.checked_ys = a2;
        lvl.rank = case2;
        res.trace.push_back(lvl);
        if (case2 < 1)
            throw witness_certification_error("witness certification failed (case 2)",
                                              format_witness_trace(res.trace));
        return extra | bit(vr);
    };

    mask_t extra = recurse(recurse, full_mask(n), full_mask(m));
    res.yprime = y1 | extra;
    res.j = popcount(extra);
    res.verified = true;
    return res;
}

// Runs the witness construction over every Y_1' of the given size and
// returns how many certified; each prescribed set must come back verified,
// so together they bound beta_{t+|X|-2, X, .}(I) from below by C(deg x1, t).
inline std::int64_t witness_coverage(const bipartite_graph& g, int x1, int t, prime_field f,
                                     witness_options opt = {}) {
    if (x1 < 0 || x1 >= g.x_count()) throw std::invalid_argument("witness_coverage: x1 out of range");
    if (t < 1 || t > g.degree(x1)) throw std::invalid_argument("witness_coverage: size out of range");
    std::int64_t count = 0;
    for_each_subset_by_size(g.neighbors(x1), [&](mask_t y1) {
        if (popcount(y1) != t) return;
        witness_result w = find_homology_witness(g, x1, y1, f, opt);
        if (w.verified) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Exhaustive suites over enumerated graphs.

enum class suite_check { bound, equality, colex };

inline const char* to_string(suite_check c) {
    switch (c) {
        case suite_check::bound: return "bound";
        case suite_check::equality: return "equality";
        default: return "colex";
    }
}

struct suite_options {
    enumerate_options enumerate{};
    check_options check{};
    int max_side = 4;  // guard on n and m
};

struct suite_counterexample {
    long index = 0;             // position in the enumeration stream
    std::string graph_text;     // certificate in the graph text format
    std::vector<violation_record> rows;
};

struct suite_result {
    suite_check check = suite_check::bound;
    int n = 0, m = 0;
    std::int64_t p = 2;
    long graphs = 0, holds = 0, violated = 0, skipped = 0;
    std::vector<suite_counterexample> counterexamples;
    double elapsed_ms = 0;
};

// Streams every graph on the given sides through one check.  Aggregation is
// by enumeration order, so reports are deterministic.
inline suite_result run_suite(int n, int m, suite_check which, prime_field f,
                              suite_options opt = {}) {
    if (n > opt.max_side || m > opt.max_side)
        throw resource_limit_error("run_suite: side exceeds cap of " + std::to_string(opt.max_side));
    detail::stopwatch timer;
    suite_result res;
    res.check = which;
    res.n = n;
    res.m = m;
    res.p = f.p();
    graph_enumerator en(n, m, opt.enumerate);
    long index = -1;
    while (auto g = en.next()) {
        ++index;
        ++res.graphs;
        if (which == suite_check::bound) {
            verification_report rep = check_lower_bound(*g, f, opt.check);
            if (rep.status == check_status::holds) ++res.holds;
            else if (rep.status == check_status::skipped) ++res.skipped;
            else {
                ++res.violated;
                res.counterexamples.push_back({index, write_graph(*g), rep.witnesses});
            }
        } else if (which == suite_check::equality) {
            if (g->has_isolated_x()) {  // report-only category for this check
                ++res.skipped;
                continue;
            }
            equality_options eo;
            eo.caps = opt.check.caps;
            try {
                if (check_equality_characterization(*g, f, eo)) ++res.holds;
                else {
                    ++res.violated;
                    res.counterexamples.push_back({index, write_graph(*g), {}});
                }
            } catch (const resource_limit_error&) {
                ++res.skipped;
            }
        } else {
            verification_report rep = check_colex_bound(*g, f, opt.check);
            if (rep.status == check_status::holds) ++res.holds;
            else if (rep.status == check_status::skipped) ++res.skipped;
            else {
                ++res.violated;
                res.counterexamples.push_back({index, write_graph(*g), rep.witnesses});
            }
        }
    }
    res.elapsed_ms = timer.ms();
    return res;
}

}  // namespace hochster

#endif  // HOCHSTER_THEOREMS_HPP
