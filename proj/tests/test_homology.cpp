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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "hochster/graph.hpp"
#include "hochster/homology.hpp"
#include "hochster/ideal.hpp"

using namespace hochster;

namespace {

// Brute-force slice: filter every subset of W directly.
complex_slice slice_oracle(const squarefree_ideal& ideal, mask_t w) {
    complex_slice s;
    s.vertices = w;
    for_each_subset_by_size(w, [&](mask_t f) {
        if (f == 0 || ideal.contains_gen(f)) return;
        int d = popcount(f) - 1;
        if (d >= static_cast<int>(s.faces_by_dim.size())) s.faces_by_dim.resize(d + 1);
        s.faces_by_dim[d].push_back(f);
    });
    for (auto& fs : s.faces_by_dim) std::sort(fs.begin(), fs.end());
    return s;
}

field_matrix matmul(const field_matrix& a, const field_matrix& b) {
    REQUIRE(a.cols == b.rows);
    prime_field f(a.p);
    field_matrix c(a.rows, b.cols, a.p);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = f.reduce(std::int64_t{c.at(i, j)} + std::int64_t{f.mul(a.at(i, k), b.at(k, j))});
        }
    return c;
}

bool is_zero(const field_matrix& m) {
    for (auto v : m.e)
        if (v != 0) return false;
    return true;
}

// The apex test: some vertex lies in every maximal face.
bool is_cone(const complex_slice& s) {
    if (s.top_dim() < 0) return false;
    std::set<mask_t> all;
    for (const auto& fs : s.faces_by_dim) all.insert(fs.begin(), fs.end());
    mask_t common = s.vertices;
    for (mask_t f : all) {
        bool maximal = true;
        for_each_bit(s.vertices & ~f, [&](int v) {
            if (maximal && all.count(f | bit(v))) maximal = false;
        });
        if (maximal) common &= f;
    }
    return common != 0;
}

std::vector<squarefree_ideal> test_ideals() {
    std::vector<squarefree_ideal> out;
    for (const auto& g : enumerate_bipartite(2, 2)) out.push_back(edge_ideal_of(g));
    out.push_back(colex_ideal(2, 4));
    out.push_back(colex_ideal(3, 3));
    out.push_back(squarefree_ideal(3, {full_mask(3)}));               // hollow triangle
    out.push_back(squarefree_ideal(5, {indices_to_mask({1, 2, 3}), indices_to_mask({3, 4, 5}),
                                       indices_to_mask({1, 4})}));   // mixed degrees
    return out;
}

}  // namespace

TEST_CASE("prime_field validation and arithmetic") {
    CHECK_THROWS_AS(prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(0), std::invalid_argument);
    CHECK_NOTHROW(prime_field(2));
    CHECK_NOTHROW(prime_field(32749));
    prime_field f(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.sub(2, 5) == 4);
}

TEST_CASE("rank_mod_p") {
    field_matrix a(2, 2, 2);
    a.e = {1, 1, 1, 1};
    CHECK(rank_mod_p(a) == 1);
    field_matrix id(3, 3, 5);
    id.at(0, 0) = id.at(1, 1) = id.at(2, 2) = 1;
    CHECK(rank_mod_p(id) == 3);
    field_matrix z(4, 3, 3);
    CHECK(rank_mod_p(z) == 0);
    // rank depends on the characteristic when it should
    field_matrix two(1, 1, 3);
    two.at(0, 0) = 2;
    CHECK(rank_mod_p(two) == 1);
}

TEST_CASE("slice_of_ideal examples") {
    bipartite_graph k22(2, 2, {3, 3});
    squarefree_ideal ik = edge_ideal_of(k22);
    complex_slice s = slice_of_ideal(ik, full_mask(4));
    REQUIRE(s.top_dim() == 1);
    CHECK(s.faces_by_dim[0] == std::vector<mask_t>{bit(0), bit(1), bit(2), bit(3)});
    CHECK(s.faces_by_dim[1] == std::vector<mask_t>{bit(0) | bit(1), bit(2) | bit(3)});

    squarefree_ideal edge(2, {full_mask(2)});
    complex_slice se = slice_of_ideal(edge, full_mask(2));
    CHECK(se.top_dim() == 0);
    CHECK(se.faces_by_dim[0] == std::vector<mask_t>{bit(0), bit(1)});

    complex_slice empty = slice_of_ideal(ik, 0);
    CHECK(empty.top_dim() == -1);
    CHECK(empty.total_faces() == 0);
}

TEST_CASE("slice_of_ideal matches the brute-force oracle") {
    for (const auto& ideal : test_ideals())
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            CHECK(slice_of_ideal(ideal, w) == slice_oracle(ideal, w));
        });
}

TEST_CASE("slice face cap") {
    bipartite_graph k22(2, 2, {3, 3});
    CHECK_THROWS_AS(slice_of_ideal(edge_ideal_of(k22), full_mask(4), 3), resource_limit_error);
}

TEST_CASE("boundary_matrix") {
    squarefree_ideal hollow(3, {full_mask(3)});
    complex_slice tri = slice_of_ideal(hollow, full_mask(3));
    prime_field f(5);
    field_matrix d1 = boundary_matrix(tri, 1, f);
    REQUIRE(d1.rows == 3);
    REQUIRE(d1.cols == 3);
    for (std::size_t c = 0; c < 3; ++c) {
        int plus = 0, minus = 0, zero = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            if (d1.at(r, c) == 1) ++plus;
            else if (d1.at(r, c) == 4) ++minus;
            else ++zero;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
        CHECK(zero == 1);
    }
    field_matrix d0 = boundary_matrix(tri, 0, f);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 3);
    CHECK(is_zero(matmul(d0, d1)));
    field_matrix high = boundary_matrix(tri, 7, f);
    CHECK(high.cols == 0);
}

TEST_CASE("reduced_betti examples") {
    prime_field f(2);
    squarefree_ideal hollow(3, {full_mask(3)});
    reduced_betti_vector tri = reduced_betti(slice_of_ideal(hollow, full_mask(3)), f);
    CHECK(tri.at(-1) == 0);
    CHECK(tri.at(0) == 0);
    CHECK(tri.at(1) == 1);

    bipartite_graph k22(2, 2, {3, 3});
    reduced_betti_vector two_simplices = reduced_betti(slice_of_ideal(edge_ideal_of(k22), full_mask(4)), f);
    CHECK(two_simplices.at(0) == 1);
    CHECK(two_simplices.at(1) == 0);

    bipartite_graph disjoint(2, 2, {bit(0), bit(1)});
    reduced_betti_vector cycle = reduced_betti(slice_of_ideal(edge_ideal_of(disjoint), full_mask(4)), f);
    CHECK(cycle.at(0) == 0);
    CHECK(cycle.at(1) == 1);

    reduced_betti_vector nothing = reduced_betti(slice_of_ideal(edge_ideal_of(k22), 0), f);
    CHECK(nothing.at(-1) == 1);
    CHECK(nothing.at(0) == 0);
}

TEST_CASE("boundary squared vanishes, Euler characteristic, nonnegativity") {
    std::vector<std::int64_t> primes = {2, 3, 32749};
    for (const auto& ideal : test_ideals())
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            complex_slice s = slice_of_ideal(ideal, w);
            for (std::int64_t p : primes) {
                prime_field f(p);
                for (int d = 1; d <= s.top_dim(); ++d)
                    CHECK(is_zero(matmul(boundary_matrix(s, d - 1, f), boundary_matrix(s, d, f))));
                reduced_betti_vector b = reduced_betti(s, f);
                std::int64_t chi_f = -1, chi_b = -b.at(-1);
                for (int d = 0; d <= s.top_dim(); ++d) {
                    std::int64_t sign = (d % 2 == 0) ? 1 : -1;
                    chi_f += sign * static_cast<std::int64_t>(s.face_count(d));
                    chi_b += sign * b.at(d);
                }
                CHECK(chi_f == chi_b);
                for (int d = -1; d <= s.top_dim(); ++d) CHECK(b.at(d) >= 0);
                for (int d = 0; d <= s.top_dim(); ++d)
                    CHECK(rank_mod_p(boundary_matrix(s, d, f)) +
                              rank_mod_p(boundary_matrix(s, d + 1, f)) <=
                          s.face_count(d));
            }
        });
}

TEST_CASE("cones have vanishing reduced homology") {
    prime_field f(2);
    int cones_seen = 0;
    for (const auto& ideal : test_ideals())
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            complex_slice s = slice_of_ideal(ideal, w);
            if (!is_cone(s)) return;
            ++cones_seen;
            reduced_betti_vector b = reduced_betti(s, f);
            for (int d = -1; d <= s.top_dim() + 1; ++d) CHECK(b.at(d) == 0);
        });
    CHECK(cones_seen > 0);
}

TEST_CASE("reduced betti agrees across coefficient fields at this scale") {
    prime_field f2(2), f3(3), fbig(32749);
    for (const auto& ideal : test_ideals())
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            complex_slice s = slice_of_ideal(ideal, w);
            reduced_betti_vector a = reduced_betti(s, f2);
            CHECK(a == reduced_betti(s, f3));
            CHECK(a == reduced_betti(s, fbig));
        });
}

TEST_CASE("debug dumps are bit exact") {
    squarefree_ideal edge(2, {full_mask(2)});
    complex_slice se = slice_of_ideal(edge, full_mask(2));
    CHECK(dump_slice(se) == "dim 0: 1\ndim 0: 2\n");
    prime_field f(2);
    CHECK(dump_matrix(boundary_matrix(se, 0, f)) == "1 2\n1 1\n");
    squarefree_ideal hollow(3, {full_mask(3)});
    complex_slice tri = slice_of_ideal(hollow, full_mask(3));
    CHECK(dump_slice(tri) ==
          "dim 0: 1\ndim 0: 2\ndim 0: 3\ndim 1: 1 2\ndim 1: 1 3\ndim 1: 2 3\n");
    CHECK(dump_matrix(boundary_matrix(tri, 1, f)) == "3 3\n1 1 0\n1 0 1\n0 1 1\n");
}
