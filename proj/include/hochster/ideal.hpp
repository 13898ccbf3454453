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

#ifndef HOCHSTER_IDEAL_HPP
#define HOCHSTER_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "hochster/subsets.hpp"

namespace hochster {

// A squarefree monomial ideal, kept as the supports of its minimal
// generators.  The constructor enforces the antichain condition, so the
// generating set is always minimal.
class squarefree_ideal {
public:
    squarefree_ideal(int nvars, std::vector<mask_t> gens) : nvars_(nvars), gens_(std::move(gens)) {
        if (nvars < 0 || nvars > max_mask_bits)
            throw std::invalid_argument("squarefree_ideal: variable count out of range");
        for (mask_t g : gens_) {
            if (g == 0) throw std::invalid_argument("squarefree_ideal: empty generator support");
            if (!is_subset(g, full_mask(nvars)))
                throw std::invalid_argument("squarefree_ideal: generator out of range");
        }
        std::sort(gens_.begin(), gens_.end(), subset_less);
        for (std::size_t a = 0; a < gens_.size(); ++a)
            for (std::size_t b = 0; b < gens_.size(); ++b)
                if (a != b && is_subset(gens_[a], gens_[b]))
                    throw std::invalid_argument("squarefree_ideal: generators are not an antichain");
    }

    int nvars() const { return nvars_; }
    const std::vector<mask_t>& gens() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }

    bool is_gen(mask_t s) const { return std::binary_search(gens_.begin(), gens_.end(), s, subset_less); }

    bool contains_gen(mask_t face) const {
        for (mask_t g : gens_)
            if (is_subset(g, face)) return true;
        return false;
    }

    bool operator==(const squarefree_ideal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }

private:
    int nvars_;
    std::vector<mask_t> gens_;
};

// Edge ideal of a bipartite graph on the flat vertex set x_1..x_n, y_1..y_m
// numbered 1..n, n+1..n+m.
inline squarefree_ideal edge_ideal_of(const bipartite_graph& g) {
    int n = g.x_count();
    std::vector<mask_t> gens;
    for (auto [i, j] : g.edges()) gens.push_back(bit(i) | bit(n + j));
    return squarefree_ideal(n + g.y_count(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Colexicographic order on d-subsets of the positive integers.

// -1 / 0 / +1.  Both arguments must be strictly increasing and equal size;
// the comparison walks from the largest entry down.
inline int colex_compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("colex_compare: size mismatch");
    for (std::size_t t = 0; t + 1 < a.size(); ++t)
        if (a[t] >= a[t + 1] || b[t] >= b[t + 1])
            throw std::invalid_argument("colex_compare: entries must be strictly increasing");
    for (std::size_t t = a.size(); t-- > 0;) {
        if (a[t] != b[t]) return a[t] < b[t] ? -1 : 1;
    }
    return 0;
}

// Colex successor: bump the smallest entry that can grow without colliding
// with its right neighbor, and reset everything below it to 1..t.
inline std::vector<int> colex_next(std::vector<int> s) {
    std::size_t d = s.size();
    for (std::size_t t = 0; t < d; ++t) {
        bool can_grow = (t + 1 == d) || (s[t] + 1 < s[t + 1]);
        if (can_grow) {
            ++s[t];
            for (std::size_t u = 0; u < t; ++u) s[u] = static_cast<int>(u) + 1;
            return s;
        }
    }
    return s;  // unreachable for d >= 1
}

// An initial segment of the colex order: the first k d-subsets.
struct colex_segment {
    int d = 0;
    std::vector<std::vector<int>> supports;

    static colex_segment initial(int d, long k) {
        if (d < 1) throw std::invalid_argument("colex_segment: degree must be positive");
        if (k < 0) throw std::invalid_argument("colex_segment: negative count");
        colex_segment seg;
        seg.d = d;
        if (k == 0) return seg;
        std::vector<int> cur(d);
        for (int t = 0; t < d; ++t) cur[t] = t + 1;
        seg.supports.push_back(cur);
        for (long c = 1; c < k; ++c) {
            cur = colex_next(std::move(cur));
            seg.supports.push_back(cur);
        }
        return seg;
    }

    int max_index() const {
        int mx = 0;
        for (const auto& s : supports) mx = std::max(mx, s.back());
        return mx;
    }
};

// The colexsegment-generated ideal with k generators of degree d; the
// ambient variable count is the largest index the segment touches.
inline squarefree_ideal colex_ideal(int d, long k) {
    colex_segment seg = colex_segment::initial(d, k);
    int nv = seg.max_index();
    if (nv > max_mask_bits)
        throw resource_limit_error("colex_ideal: segment needs more than 63 variables");
    std::vector<mask_t> gens;
    gens.reserve(seg.supports.size());
    for (const auto& s : seg.supports) gens.push_back(indices_to_mask(s));
    return squarefree_ideal(nv, std::move(gens));
}

}  // namespace hochster

#endif  // HOCHSTER_IDEAL_HPP
