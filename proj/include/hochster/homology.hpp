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

#ifndef HOCHSTER_HOMOLOGY_HPP
#define HOCHSTER_HOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/ideal.hpp"
#include "hochster/subsets.hpp"

namespace hochster {

// GF(p) for a prime p < 2^31.
class prime_field {
public:
    explicit prime_field(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
            throw std::invalid_argument("prime_field: modulus must be a prime below 2^31");
    }

    std::int64_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % static_cast<std::uint64_t>(p_));
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        std::int64_t r = std::int64_t{a} - b;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t inv(std::uint32_t a) const {  // a != 0, by Fermat
        std::uint32_t r = 1, base = a;
        std::int64_t e = p_ - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool operator==(const prime_field& o) const { return p_ == o.p_; }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::int64_t p_;
};

// Dense matrix over GF(p), row major, entries already reduced.
struct field_matrix {
    std::size_t rows = 0, cols = 0;
    std::int64_t p = 2;
    std::vector<std::uint32_t> e;

    field_matrix() = default;
    field_matrix(std::size_t r, std::size_t c, std::int64_t prime)
        : rows(r), cols(c), p(prime), e(r * c, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

// Rank by plain Gaussian elimination; deterministic pivot choice (first
// nonzero entry in column order).
inline std::size_t rank_mod_p(field_matrix m) {
    prime_field f(m.p);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t c = col; c < m.cols; ++c) std::swap(m.e[piv * m.cols + c], m.e[rank * m.cols + c]);
        std::uint32_t iv = f.inv(m.at(rank, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), iv);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            std::uint32_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Simplicial complexes as explicit face lists graded by dimension.

// Faces of an induced subcomplex, one sorted vector of vertex masks per
// dimension.  The empty face is implicit; the void complex cannot occur
// because ideals here never contain a degree-0 generator.
struct complex_slice {
    mask_t vertices = 0;
    std::vector<std::vector<mask_t>> faces_by_dim;  // [d] holds the (d+1)-subsets

    int top_dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }

    std::size_t face_count(int d) const {
        if (d < 0 || d > top_dim()) return 0;
        return faces_by_dim[d].size();
    }

    std::size_t total_faces() const {  // empty face excluded
        std::size_t t = 0;
        for (const auto& fs : faces_by_dim) t += fs.size();
        return t;
    }

    bool operator==(const complex_slice&) const = default;
};

inline constexpr std::size_t default_face_cap = std::size_t{1} << 24;

// Builds the complex of all subsets of `verts` satisfying a downward-closed
// predicate, breadth first by dimension.  The predicate is only consulted on
// candidates all of whose maximal proper subsets were already accepted.
template <typename Pred>
complex_slice build_complex(mask_t verts, Pred&& face_test, std::size_t face_cap = default_face_cap) {
    complex_slice slice;
    slice.vertices = verts;
    std::size_t total = 0;
    std::unordered_set<mask_t> prev_set;
    std::vector<mask_t> prev;
    // dimension 0
    std::vector<mask_t> cur;
    for_each_bit(verts, [&](int v) {
        mask_t s = bit(v);
        if (face_test(s)) cur.push_back(s);
    });
    while (!cur.empty()) {
        total += cur.size();
        if (total > face_cap) throw resource_limit_error("complex build: face cap exceeded");
        std::sort(cur.begin(), cur.end());
        slice.faces_by_dim.push_back(cur);
        prev_set.clear();
        prev_set.insert(cur.begin(), cur.end());
        prev = std::move(cur);
        cur.clear();
        for (mask_t f : prev) {
            int mx = highest_bit(f);
            for_each_bit(verts & ~full_mask(mx + 1), [&](int v) {
                mask_t t = f | bit(v);
                bool ok = true;
                for_each_bit(f, [&](int u) {
                    if (ok && !prev_set.count(t & ~bit(u))) ok = false;
                });
                if (ok && face_test(t)) cur.push_back(t);
            });
        }
    }
    return slice;
}

// Induced subcomplex of the Stanley-Reisner complex of an ideal: faces are
// the subsets of W containing no generator support.  Given the breadth-first
// construction, only the candidate itself needs testing against the
// generator set.
inline complex_slice slice_of_ideal(const squarefree_ideal& ideal, mask_t w,
                                    std::size_t face_cap = default_face_cap) {
    if (!is_subset(w, full_mask(ideal.nvars())))
        throw std::invalid_argument("slice_of_ideal: subset out of ambient range");
    return build_complex(w, [&](mask_t f) { return !ideal.is_gen(f); }, face_cap);
}

// Boundary operator from d-faces to (d-1)-faces; d = 0 maps to the rank-1
// augmentation space.  Vertices of a face are taken ascending and the sign
// alternates with the omitted position.
inline field_matrix boundary_matrix(const complex_slice& slice, int d, const prime_field& f) {
    if (d < 0) throw std::invalid_argument("boundary_matrix: negative dimension");
    std::size_t ncols = slice.face_count(d);
    if (d == 0) {
        field_matrix m(1, ncols, f.p());
        for (std::size_t c = 0; c < ncols; ++c) m.at(0, c) = f.reduce(1);
        return m;
    }
    field_matrix m(slice.face_count(d - 1), ncols, f.p());
    if (ncols == 0) return m;
    // ncols > 0 forces d <= top_dim, so the level below exists and is nonempty
    const std::vector<mask_t>& below = slice.faces_by_dim[d - 1];
    const std::vector<mask_t>& faces = slice.faces_by_dim[d];
    std::uint32_t plus = f.reduce(1), minus = f.reduce(-1);
    for (std::size_t c = 0; c < ncols; ++c) {
        int pos = 0;
        for_each_bit(faces[c], [&](int v) {
            mask_t sub = faces[c] & ~bit(v);
            auto it = std::lower_bound(below.begin(), below.end(), sub);
            std::size_t r = static_cast<std::size_t>(it - below.begin());
            m.at(r, c) = (pos % 2 == 0) ? plus : minus;
            ++pos;
        });
    }
    return m;
}

// Reduced Betti numbers indexed from dimension -1 upward.
struct reduced_betti_vector {
    std::vector<std::int64_t> v;  // v[k] = rank in dimension k - 1

    std::int64_t at(int d) const {
        int k = d + 1;
        if (k < 0 || k >= static_cast<int>(v.size())) return 0;
        return v[k];
    }

    bool operator==(const reduced_betti_vector&) const = default;
};

// Ranks of the augmented chain complex: betti_d = f_d - rank d_d - rank d_{d+1}.
inline reduced_betti_vector reduced_betti(const complex_slice& slice, const prime_field& f) {
    int top = slice.top_dim();
    std::vector<std::size_t> ranks(top + 2, 0);  // ranks[d] = rank of the boundary out of d-faces
    for (int d = 0; d <= top; ++d) ranks[d] = rank_mod_p(boundary_matrix(slice, d, f));
    reduced_betti_vector out;
    out.v.resize(top + 2, 0);
    // dimension -1: one empty face; the augmentation has rank 1 iff vertices exist
    out.v[0] = 1 - static_cast<std::int64_t>(top >= 0 ? ranks[0] : 0);
    for (int d = 0; d <= top; ++d) {
        std::int64_t fd = static_cast<std::int64_t>(slice.face_count(d));
        out.v[d + 1] = fd - static_cast<std::int64_t>(ranks[d]) - static_cast<std::int64_t>(ranks[d + 1]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Debug dumps, bit exact for golden tests.  Vertices print 1-based.

inline std::string dump_slice(const complex_slice& slice) {
    std::ostringstream os;
    for (int d = 0; d <= slice.top_dim(); ++d)
        for (mask_t face : slice.faces_by_dim[d]) {
            os << "dim " << d << ':';
            for_each_bit(face, [&](int v) { os << ' ' << (v + 1); });
            os << '\n';
        }
    return os.str();
}

inline std::string dump_matrix(const field_matrix& m) {
    std::ostringstream os;
    os << m.rows << ' ' << m.cols << '\n';
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hochster

#endif  // HOCHSTER_HOMOLOGY_HPP
