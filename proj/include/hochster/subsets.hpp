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

#ifndef HOCHSTER_SUBSETS_HPP
#define HOCHSTER_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochster {

// Vertex subsets are bit masks: bit k stands for the 1-based index k+1.
using mask_t = std::uint64_t;

constexpr int max_mask_bits = 63;

constexpr mask_t bit(int i) { return mask_t{1} << i; }

// {0, 1, ..., k-1} as a mask.
constexpr mask_t full_mask(int k) { return k == 0 ? 0 : (mask_t{2} << (k - 1)) - 1; }

constexpr bool has_bit(mask_t s, int i) { return (s >> i) & 1; }

inline int popcount(mask_t s) { return std::popcount(s); }

inline bool is_subset(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline int lowest_bit(mask_t s) { return std::countr_zero(s); }

inline int highest_bit(mask_t s) { return 63 - std::countl_zero(s); }

// Canonical subset order used everywhere output must be deterministic:
// smaller sets first, ties broken by mask value (colex on equal sizes).
inline bool subset_less(mask_t a, mask_t b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

template <typename F>
void for_each_bit(mask_t s, F&& f) {
    while (s) {
        int i = std::countr_zero(s);
        f(i);
        s &= s - 1;
    }
}

inline std::vector<int> mask_to_indices(mask_t s) {
    std::vector<int> out;
    for_each_bit(s, [&](int i) { out.push_back(i + 1); });
    return out;
}

inline mask_t indices_to_mask(const std::vector<int>& idx) {
    mask_t s = 0;
    for (int v : idx) {
        if (v < 1 || v > max_mask_bits) throw std::invalid_argument("index out of mask range");
        s |= bit(v - 1);
    }
    return s;
}

// Next mask with the same popcount (Gosper). Caller stops before overflow.
inline mask_t next_same_popcount(mask_t s) {
    mask_t c = s & -s;
    mask_t r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

// All subsets of `ground`, smallest first, mask value ascending within a size.
template <typename F>
void for_each_subset_by_size(mask_t ground, F&& f) {
    int g = popcount(ground);
    // Work on compact k-subsets of {0..g-1}, then spread onto the ground bits.
    std::vector<int> spread;
    for_each_bit(ground, [&](int i) { spread.push_back(i); });
    for (int k = 0; k <= g; ++k) {
        if (k == 0) {
            f(mask_t{0});
            continue;
        }
        mask_t c = full_mask(k);
        while (c <= full_mask(g)) {
            mask_t s = 0;
            for_each_bit(c, [&](int i) { s |= bit(spread[i]); });
            f(s);
            if (c == (full_mask(k) << (g - k))) break;
            c = next_same_popcount(c);
        }
    }
}

// Exact binomial coefficient from a Pascal table; every value with a <= 63
// fits in a signed 64-bit integer, anything larger is refused.
inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (a > max_mask_bits) throw std::overflow_error("binomial: argument exceeds 63");
    static const auto table = [] {
        std::vector<std::vector<std::int64_t>> t(max_mask_bits + 1);
        for (int i = 0; i <= max_mask_bits; ++i) {
            t[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    return table[a][b];
}

// "1+3+4" rendering of subsets, '-' for the empty set.  An optional prefix
// gives the human-readable form "x1+x3+x4".
inline std::string format_subset(mask_t s, const char* prefix = "") {
    if (s == 0) return "-";
    std::ostringstream os;
    bool first = true;
    for_each_bit(s, [&](int i) {
        if (!first) os << '+';
        os << prefix << (i + 1);
        first = false;
    });
    return os.str();
}

}  // namespace hochster

#endif  // HOCHSTER_SUBSETS_HPP
