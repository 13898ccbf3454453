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

#include <vector>

#include "hochster/betti.hpp"
#include "hochster/graph.hpp"
#include "hochster/ideal.hpp"

using namespace hochster;

namespace {

const prime_field f2(2);

bipartite_graph k22() { return bipartite_graph(2, 2, {3, 3}); }
bipartite_graph p4() { return bipartite_graph(2, 2, {bit(0), bit(0) | bit(1)}); }
bipartite_graph two_stars() { return bipartite_graph(2, 4, {bit(0) | bit(1), bit(2) | bit(3)}); }

std::vector<std::int64_t> totals(betti_engine& eng, int upto) {
    std::vector<std::int64_t> out;
    for (int j = 0; j <= upto; ++j) out.push_back(eng.total(j));
    return out;
}

}  // namespace

TEST_CASE("betti_multigraded examples") {
    betti_engine eng(k22(), f2);
    CHECK(eng.multigraded(0, vertex_subset{bit(0), bit(0)}) == 1);           // a generator
    CHECK(eng.multigraded(1, vertex_subset{bit(0) | bit(1), bit(0)}) == 1);  // edge plus point
    CHECK(eng.multigraded(2, full_mask(4)) == 1);                            // two simplices
    CHECK(eng.multigraded(0, full_mask(4)) == 0);
    CHECK(eng.multigraded(5, full_mask(4)) == 0);
    CHECK(eng.multigraded(0, mask_t{0}) == 0);
}

TEST_CASE("betti_zn examples") {
    betti_engine eng(k22(), f2);
    CHECK(eng.zn(1, bit(0) | bit(1)) == 2);
    CHECK(eng.zn(2, bit(0) | bit(1)) == 1);
    CHECK(eng.zn(0, bit(0)) == 2);
    betti_engine stars(two_stars(), f2);
    CHECK(stars.zn(1, bit(0) | bit(1)) == 4);
}

TEST_CASE("betti_total examples") {
    betti_engine ep(p4(), f2);
    CHECK(totals(ep, 2) == std::vector<std::int64_t>{3, 2, 0});
    betti_engine et(colex_ideal(2, 3), f2);
    CHECK(totals(et, 1) == std::vector<std::int64_t>{3, 2});
    betti_engine es(two_stars(), f2);
    CHECK(totals(es, 3) == std::vector<std::int64_t>{4, 6, 4, 1});
    betti_engine ek(k22(), f2);
    CHECK(totals(ek, 2) == std::vector<std::int64_t>{4, 4, 1});
    betti_engine ed(bipartite_graph(2, 2, {bit(0), bit(1)}), f2);
    CHECK(totals(ed, 1) == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("ferrers_betti_zn closed form") {
    bipartite_graph g = k22();
    CHECK(ferrers_betti_zn(g, 0, bit(0)) == 2);
    CHECK(ferrers_betti_zn(g, 1, bit(0) | bit(1)) == 2);
    CHECK(ferrers_betti_zn(g, 0, bit(0) | bit(1)) == 0);  // below the valid band
    CHECK(ferrers_betti_zn(g, 2, bit(0) | bit(1)) == 1);
    CHECK(ferrers_betti_zn(g, 9, bit(0)) == 0);
    CHECK_THROWS_AS(ferrers_betti_zn(g, 0, 0), std::invalid_argument);
    // isolated X rows are identically zero
    bipartite_graph iso(2, 2, {3, 0});
    for (int i = 0; i <= 4; ++i) {
        CHECK(ferrers_betti_zn(iso, i, bit(1)) == 0);
        CHECK(ferrers_betti_zn(iso, i, bit(0) | bit(1)) == 0);
    }
}

TEST_CASE("betti_via_lcm_lattice examples") {
    squarefree_ideal edge(2, {full_mask(2)});
    CHECK(betti_via_lcm_lattice(edge, 0, full_mask(2), f2) == 1);
    squarefree_ideal ik = edge_ideal_of(k22());
    CHECK(betti_via_lcm_lattice(ik, 2, full_mask(4), f2) == 1);
    CHECK(betti_via_lcm_lattice(colex_ideal(2, 3), 1, full_mask(3), f2) == 2);
    CHECK(betti_via_lcm_lattice(ik, 0, bit(0), f2) == 0);  // no relevant generators
}

TEST_CASE("lcm-lattice oracle agrees with the slice route everywhere") {
    std::vector<squarefree_ideal> ideals;
    for (const auto& g : enumerate_bipartite(2, 2)) ideals.push_back(edge_ideal_of(g));
    for (const auto& g : enumerate_bipartite(2, 3)) ideals.push_back(edge_ideal_of(g));
    for (int k = 0; k <= 6; ++k) ideals.push_back(colex_ideal(2, k));
    for (int k = 1; k <= 5; ++k) ideals.push_back(colex_ideal(3, k));
    ideals.push_back(colex_ideal(4, 3));
    ideals.push_back(squarefree_ideal(5, {indices_to_mask({1, 2, 3}), indices_to_mask({3, 4, 5}),
                                          indices_to_mask({1, 4})}));
    for (auto& ideal : ideals) {
        REQUIRE(ideal.gen_count() <= 6);
        betti_engine eng(ideal, f2);
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            for (int i = 0; i <= ideal.nvars(); ++i)
                CHECK(betti_via_lcm_lattice(ideal, i, w, f2) == eng.multigraded(i, w));
        });
    }
}

TEST_CASE("lcm-lattice oracle agrees on seeded random antichains") {
    std::uint64_t state = 0x243f6a8885a308d3ULL;  // fixed seed, deterministic corpus
    auto next = [&state](int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % bound);
    };
    int built = 0;
    while (built < 50) {
        int nvars = 4 + next(5);  // 4..8
        std::vector<mask_t> gens;
        for (int tries = 0; tries < 12 && gens.size() < 6; ++tries) {
            int sz = 2 + next(3);
            mask_t s = 0;
            while (popcount(s) < sz) s |= bit(next(nvars));
            bool comparable = false;
            for (mask_t g : gens)
                if (is_subset(g, s) || is_subset(s, g)) comparable = true;
            if (!comparable) gens.push_back(s);
        }
        if (gens.empty()) continue;
        squarefree_ideal ideal(nvars, gens);
        ++built;
        betti_engine eng(ideal, f2);
        for_each_subset_by_size(full_mask(nvars), [&](mask_t w) {
            for (int i = 0; i <= nvars; ++i)
                CHECK(betti_via_lcm_lattice(ideal, i, w, f2) == eng.multigraded(i, w));
        });
    }
}

TEST_CASE("projective_dimension") {
    betti_engine edge(bipartite_graph(1, 1, {1}), f2);
    CHECK(projective_dimension(edge) == 0);
    betti_engine ek(k22(), f2);
    CHECK(projective_dimension(ek) == 2);
    betti_engine es(two_stars(), f2);
    CHECK(projective_dimension(es) == 3);
    betti_engine zero(squarefree_ideal(0, {}), f2);
    CHECK(projective_dimension(zero) == -1);
    betti_engine empty_graph(bipartite_graph(2, 2, {0, 0}), f2);
    CHECK(projective_dimension(empty_graph) == -1);
}

TEST_CASE("partition identity: zn summed over X-parts equals the total") {
    for (const auto& g : enumerate_bipartite(2, 3)) {
        betti_engine eng(g, f2);
        for (int i = 0; i <= g.x_count() + g.y_count() - 2; ++i) {
            std::int64_t sum = 0;
            for_each_subset_by_size(full_mask(g.x_count()), [&](mask_t xs) { sum += eng.zn(i, xs); });
            CHECK(sum == eng.total(i));
        }
    }
}

TEST_CASE("generator axiom: beta_0 picks out exactly the generators") {
    std::vector<squarefree_ideal> ideals = {edge_ideal_of(k22()), edge_ideal_of(p4()),
                                            colex_ideal(2, 5), colex_ideal(3, 4)};
    for (auto& ideal : ideals) {
        betti_engine eng(ideal, f2);
        for_each_subset_by_size(full_mask(ideal.nvars()), [&](mask_t w) {
            CHECK(eng.multigraded(0, w) == (ideal.is_gen(w) ? 1 : 0));
        });
    }
}

TEST_CASE("vanishing band: nothing above |W| - 2") {
    betti_engine eng(edge_ideal_of(two_stars()), f2);
    for_each_subset_by_size(full_mask(6), [&](mask_t w) {
        for (int i = popcount(w) - 1; i <= popcount(w) + 2; ++i)
            CHECK(eng.multigraded(i, w) == 0);
    });
}

TEST_CASE("low-index vanishing at test scale") {
    // beta_{i,X',.} = 0 for i < |X'| - 1, for every bipartite graph with
    // n, m <= 3; this is what makes the closed form's validity cut safe.
    for (int n = 2; n <= 3; ++n)
        for (int m = 2; m <= 3; ++m)
            for (const auto& g : enumerate_bipartite(n, m)) {
                betti_engine eng(g, f2);
                for_each_subset_by_size(full_mask(n), [&](mask_t xs) {
                    if (popcount(xs) < 2) return;
                    for (int i = 0; i < popcount(xs) - 1; ++i) CHECK(eng.zn(i, xs) == 0);
                });
            }
}

TEST_CASE("closed form matches homology on Ferrers graphs up to 3x4") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> profile(n, 1);
        while (true) {
            int m = *std::max_element(profile.begin(), profile.end());
            std::vector<mask_t> rows;
            for (int d : profile) rows.push_back(full_mask(d));
            bipartite_graph h(n, m, rows);
            betti_engine eng(h, f2);
            for (int i = 0; i <= n + m - 2; ++i)
                for_each_subset_by_size(full_mask(n), [&](mask_t xs) {
                    if (xs == 0) return;
                    CHECK(eng.zn(i, xs) == ferrers_betti_zn(h, i, xs));
                });
            int t = n - 1;
            while (t >= 0 && profile[t] == 4) --t;
            if (t < 0) break;
            ++profile[t];
            for (int u = t + 1; u < n; ++u) profile[u] = 1;
        }
    }
}

TEST_CASE("isolated Y vertices change nothing") {
    for (const auto& g : enumerate_bipartite(2, 2)) {
        bipartite_graph bigger(2, 3, {g.neighbors(0), g.neighbors(1)});
        betti_engine a(g, f2), b(bigger, f2);
        for (int i = 0; i <= 4; ++i)
            for_each_subset_by_size(full_mask(2), [&](mask_t xs) {
                if (xs == 0) return;
                CHECK(a.zn(i, xs) == b.zn(i, xs));
            });
    }
}

TEST_CASE("aggregation caps") {
    betti_caps tight;
    tight.max_sum_vars = 1;
    betti_engine eng(k22(), f2, tight);
    CHECK_THROWS_AS(eng.zn(0, bit(0)), resource_limit_error);
    CHECK_THROWS_AS(eng.total(0), resource_limit_error);
    CHECK_THROWS_AS(betti_via_lcm_lattice(edge_ideal_of(k22()), 1, full_mask(4), f2,
                                          betti_caps{.max_faces = default_face_cap,
                                                     .max_sum_vars = 20,
                                                     .max_oracle_gens = 2}),
                    resource_limit_error);
}

TEST_CASE("betti_table views and exports") {
    betti_engine eng(k22(), f2);
    betti_table t = betti_table::compute(eng);
    CHECK(t.p() == 2);
    CHECK(t.entries().size() == 9);
    CHECK(t.to_csv_multigraded() ==
          "i,xpart,ypart,rank\n"
          "0,1,1,1\n"
          "0,1,2,1\n"
          "0,2,1,1\n"
          "0,2,2,1\n"
          "1,1,1+2,1\n"
          "1,2,1+2,1\n"
          "1,1+2,1,1\n"
          "1,1+2,2,1\n"
          "2,1+2,1+2,1\n");
    CHECK(t.to_csv_zn() ==
          "i,xpart,rank\n"
          "0,1,2\n"
          "0,2,2\n"
          "1,1,1\n"
          "1,2,1\n"
          "1,1+2,2\n"
          "2,1+2,1\n");
    CHECK(t.to_csv_total() == "i,rank\n0,4\n1,4\n2,1\n");
    CHECK(t.total(1) == 4);
    CHECK(t.total(7) == 0);
}

TEST_CASE("tables agree across primes at this scale") {
    std::vector<std::int64_t> primes = {2, 3, 32749};
    std::vector<bipartite_graph> graphs = {k22(), p4(), two_stars()};
    for (const auto& g : graphs) {
        betti_engine base(g, prime_field(primes[0]));
        betti_table ref = betti_table::compute(base);
        for (std::size_t t = 1; t < primes.size(); ++t) {
            betti_engine eng(g, prime_field(primes[t]));
            CHECK(same_ranks(ref, betti_table::compute(eng)));
        }
    }
}
