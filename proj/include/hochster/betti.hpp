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

#ifndef HOCHSTER_BETTI_HPP
#define HOCHSTER_BETTI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "hochster/homology.hpp"
#include "hochster/ideal.hpp"
#include "hochster/subsets.hpp"

namespace hochster {

struct betti_caps {
    std::size_t max_faces = default_face_cap;
    int max_sum_vars = 20;        // 2^k aggregation loops refuse beyond this
    std::size_t max_oracle_gens = 12;
};

// Multigraded Betti numbers of a squarefree monomial ideal through the
// induced-subcomplex homology route:
//
//     beta_{i,W}(I) = reduced betti_{|W|-i-2} of the slice on W.
//
// Slice homology vectors are cached per W, so aggregations that revisit
// subsets across homological indices pay for each slice once.
class betti_engine {
public:
    betti_engine(squarefree_ideal ideal, prime_field field, betti_caps caps = {})
        : ideal_(std::move(ideal)), field_(field), caps_(caps), xvars_(ideal_.nvars()), yvars_(0) {}

    betti_engine(const bipartite_graph& g, prime_field field, betti_caps caps = {})
        : ideal_(edge_ideal_of(g)), field_(field), caps_(caps), xvars_(g.x_count()), yvars_(g.y_count()) {}

    const squarefree_ideal& ideal() const { return ideal_; }
    const prime_field& field() const { return field_; }
    const betti_caps& caps() const { return caps_; }
    int xvars() const { return xvars_; }
    int yvars() const { return yvars_; }

    const reduced_betti_vector& slice_betti(mask_t w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        complex_slice s = slice_of_ideal(ideal_, w, caps_.max_faces);
        return cache_.emplace(w, reduced_betti(s, field_)).first->second;
    }

    std::int64_t multigraded(int i, mask_t w) {
        if (i < 0) return 0;
        int j = popcount(w) - i - 2;
        if (j < -1) return 0;
        return slice_betti(w).at(j);
    }

    std::int64_t multigraded(int i, const vertex_subset& w) {
        return multigraded(i, flatten(w, xvars_));
    }

    // Sum over all Y-parts with the X-part fixed; subsets iterate by
    // increasing size, then mask value, so partial progress is deterministic.
    std::int64_t zn(int i, mask_t xs) {
        if (!is_subset(xs, full_mask(xvars_)))
            throw std::invalid_argument("betti_zn: X subset out of range");
        if (yvars_ > caps_.max_sum_vars)
            throw resource_limit_error("betti_zn: Y side exceeds aggregation cap");
        std::int64_t sum = 0;
        for_each_subset_by_size(full_mask(yvars_) << xvars_,
                                [&](mask_t ys) { sum += multigraded(i, xs | ys); });
        return sum;
    }

    std::int64_t total(int j) {
        if (ideal_.nvars() > caps_.max_sum_vars)
            throw resource_limit_error("betti_total: variable count exceeds aggregation cap");
        std::int64_t sum = 0;
        for_each_subset_by_size(full_mask(ideal_.nvars()),
                                [&](mask_t w) { sum += multigraded(j, w); });
        return sum;
    }

private:
    squarefree_ideal ideal_;
    prime_field field_;
    betti_caps caps_;
    int xvars_, yvars_;
    std::unordered_map<mask_t, reduced_betti_vector> cache_;
};

// Closed form for Ferrers graphs: binomial(mindeg(X'), i - |X'| + 2).  The
// formula is only applied on i >= |X'| - 1; below that every generator would
// need more X vertices than it has, so the value is 0.
inline std::int64_t ferrers_betti_zn(const bipartite_graph& g, int i, mask_t xs) {
    if (xs == 0) throw std::invalid_argument("ferrers_betti_zn: empty X subset");
    int sz = popcount(xs);
    if (i < sz - 1) return 0;
    return binomial(mindeg(g, xs), i - sz + 2);
}

// Independent route to the same multigraded Betti number, through the lcm
// lattice instead of the Stanley-Reisner slice: the complex of generator
// subsets whose supports do not union to W, in homological dimension i - 1.
inline std::int64_t betti_via_lcm_lattice(const squarefree_ideal& ideal, int i, mask_t w,
                                          const prime_field& f, betti_caps caps = {}) {
    if (i < 0) return 0;
    std::vector<mask_t> relevant;
    for (mask_t g : ideal.gens())
        if (is_subset(g, w)) relevant.push_back(g);
    if (relevant.empty()) return 0;
    if (relevant.size() > caps.max_oracle_gens)
        throw resource_limit_error("betti_via_lcm_lattice: too many relevant generators");
    complex_slice nerve = build_complex(
        full_mask(static_cast<int>(relevant.size())),
        [&](mask_t sigma) {
            mask_t u = 0;
            for_each_bit(sigma, [&](int t) { u |= relevant[t]; });
            return u != w;
        },
        caps.max_faces);
    return reduced_betti(nerve, f).at(i - 1);
}

// Largest j with a nonzero total Betti number; -1 for the zero ideal.
inline int projective_dimension(betti_engine& eng) {
    int hi = eng.ideal().nvars() - 2;  // vanishing band: nothing above |W| - 2
    for (int j = std::max(hi, 0); j >= 0; --j)
        if (eng.total(j) > 0) return j;
    return eng.total(0) > 0 ? 0 : -1;
}

// ---------------------------------------------------------------------------
// The full table of nonzero multigraded Betti numbers, with the Z^n-graded
// and total views derived from it.

struct betti_entry {
    int i = 0;
    mask_t xs = 0, ys = 0;
    std::int64_t rank = 0;

    bool operator==(const betti_entry&) const = default;
};

class betti_table {
public:
    static betti_table compute(betti_engine& eng) {
        betti_table t(eng.ideal());
        t.p_ = eng.field().p();
        t.xvars_ = eng.xvars();
        t.yvars_ = eng.yvars();
        if (eng.ideal().nvars() > eng.caps().max_sum_vars)
            throw resource_limit_error("betti_table: variable count exceeds aggregation cap");
        for_each_subset_by_size(full_mask(eng.ideal().nvars()), [&](mask_t w) {
            int sz = popcount(w);
            for (int i = 0; i <= sz - 2; ++i) {
                std::int64_t r = eng.multigraded(i, w);
                if (r != 0)
                    t.entries_.push_back({i, w & full_mask(t.xvars_), w >> t.xvars_, r});
            }
        });
        std::sort(t.entries_.begin(), t.entries_.end(), entry_less);
        return t;
    }

    std::int64_t p() const { return p_; }
    int xvars() const { return xvars_; }
    int yvars() const { return yvars_; }
    const squarefree_ideal& ideal() const { return ideal_; }
    const std::vector<betti_entry>& entries() const { return entries_; }

    // (i, X', rank) with the Y-part summed out; nonzero rows only.
    std::vector<betti_entry> zn_rows() const {
        std::map<std::pair<int, mask_t>, std::int64_t, decltype(&pair_less)> acc(&pair_less);
        for (const auto& e : entries_) acc[{e.i, e.xs}] += e.rank;
        std::vector<betti_entry> out;
        for (const auto& [key, r] : acc) out.push_back({key.first, key.second, 0, r});
        return out;
    }

    std::vector<std::pair<int, std::int64_t>> total_rows() const {
        std::map<int, std::int64_t> acc;
        for (const auto& e : entries_) acc[e.i] += e.rank;
        return {acc.begin(), acc.end()};
    }

    std::int64_t total(int j) const {
        std::int64_t s = 0;
        for (const auto& e : entries_)
            if (e.i == j) s += e.rank;
        return s;
    }

    std::string to_csv_multigraded() const {
        std::ostringstream os;
        os << "i,xpart,ypart,rank\n";
        for (const auto& e : entries_)
            os << e.i << ',' << format_subset(e.xs) << ',' << format_subset(e.ys) << ',' << e.rank << '\n';
        return os.str();
    }

    std::string to_csv_zn() const {
        std::ostringstream os;
        os << "i,xpart,rank\n";
        for (const auto& e : zn_rows())
            os << e.i << ',' << format_subset(e.xs) << ',' << e.rank << '\n';
        return os.str();
    }

    std::string to_csv_total() const {
        std::ostringstream os;
        os << "i,rank\n";
        for (const auto& [j, r] : total_rows()) os << j << ',' << r << '\n';
        return os.str();
    }

    bool operator==(const betti_table&) const = default;

private:
    static bool entry_less(const betti_entry& a, const betti_entry& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.xs != b.xs) return subset_less(a.xs, b.xs);
        return subset_less(a.ys, b.ys);
    }

    static bool pair_less(const std::pair<int, mask_t>& a, const std::pair<int, mask_t>& b) {
        if (a.first != b.first) return a.first < b.first;
        return subset_less(a.second, b.second);
    }

    explicit betti_table(squarefree_ideal id) : ideal_(std::move(id)) {}

    squarefree_ideal ideal_;
    std::int64_t p_ = 2;
    int xvars_ = 0, yvars_ = 0;
    std::vector<betti_entry> entries_;
};

// Rank agreement across coefficient fields (the table entries, not the
// primes themselves).
inline bool same_ranks(const betti_table& a, const betti_table& b) {
    return a.entries() == b.entries();
}

}  // namespace hochster

#endif  // HOCHSTER_BETTI_HPP
