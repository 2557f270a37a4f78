#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "kstsp/model.hpp"
#include "test_support.hpp"

using namespace kstsp;
using namespace kstsp::testing;

TEST_CASE("tour_cost sums depot-to-depot along the visiting order") {
    const DistanceMatrix ring = cyclic_unit(3);
    CHECK_EQ(tour_cost({{1, 2, 3}}, ring), 4);   // every arc on the cheap ring
    CHECK_EQ(tour_cost({{3, 2, 1}}, ring), 20);  // every arc off it
    CHECK_EQ(tour_cost({{2, 1, 3}}, ring), 16);

    const DistanceMatrix two = {{0, 7}, {3, 0}};
    CHECK_EQ(tour_cost({{1}}, two), 10);  // d(0,1) + d(1,0)
}

TEST_CASE("tour_cost rejects shape mismatches") {
    const DistanceMatrix ring = cyclic_unit(3);
    CHECK_THROWS_AS(tour_cost({{1, 2}}, ring), std::invalid_argument);
    CHECK_THROWS_AS(tour_cost({{}}, ring), std::invalid_argument);
}

TEST_CASE("order check accepts stack-compatible triples") {
    // Single stack loaded in pickup order, delivered in exact reverse.
    CHECK(check_triple_feasible({{1, 2, 3}}, {{3, 2, 1}}, {{{1, 2, 3}}}));
    // Interleaved delivery that always pops a top.
    CHECK(check_triple_feasible({{1, 2, 3}}, {{2, 3, 1}}, {{{1, 3}, {2}}}));
    // First-in first-out through one stack is impossible.
    CHECK_FALSE(check_triple_feasible({{1, 2, 3}}, {{1, 2, 3}}, {{{1, 2, 3}}}));
    // Item 3 is loaded below 2 although picked up later.
    CHECK_FALSE(check_triple_feasible({{1, 2, 3}}, {{3, 2, 1}}, {{{1, 3, 2}}}));
}

TEST_CASE("replay oracle walks pushes and pops") {
    CHECK(simulate_triple({{1, 2, 3}}, {{3, 2, 1}}, {{{1, 2, 3}}}));
    // 2 must be delivered first but 3 sits on top of it.
    CHECK_FALSE(simulate_triple({{1, 2, 3}}, {{2, 3, 1}}, {{{1}, {2, 3}}}));
    // Swapped pickup of 2 and 1 matches the stack listing exactly.
    CHECK(simulate_triple({{2, 1, 3}}, {{3, 1, 2}}, {{{2, 1, 3}}}));
    CHECK(check_triple_feasible({{2, 1, 3}}, {{3, 1, 2}}, {{{2, 1, 3}}}));
}

TEST_CASE("both feasibility oracles agree everywhere (n <= 4, k <= 2)") {
    for (int n = 1; n <= 4; ++n) {
        const auto tours = all_tours(n);
        for (int k = 1; k <= 2; ++k) {
            const auto placements = all_placements(n, k);
            for (const auto& t1 : tours)
                for (const auto& t2 : tours)
                    for (const auto& p : placements)
                        CHECK_EQ(check_triple_feasible(t1, t2, p),
                                 simulate_triple(t1, t2, p));
        }
    }
}

TEST_CASE("one stack forces exact reversal") {
    // With a single stack the only feasible triple is: stack listed in
    // pickup order and the delivery tour equal to its reverse.
    const int n = 4;
    const auto tours = all_tours(n);
    for (const auto& t1 : tours) {
        for (const auto& t2 : tours) {
            for (const auto& sigma : all_tours(n)) {
                const StackingOrder p{{sigma.seq}};
                const bool feasible = check_triple_feasible(t1, t2, p);
                const bool expected =
                    sigma.seq == t1.seq && t2.seq == reversed_tour(t1).seq;
                CHECK_EQ(feasible, expected);
            }
        }
    }
}

TEST_CASE("feasibility is invariant under item relabeling") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int n = 5;
        const Tour t1 = shuffled_tour(n, rng);
        const Tour t2 = shuffled_tour(n, rng);
        const StackingOrder p = random_placement(n, 2, rng);
        const Tour relabel = shuffled_tour(n, rng);  // relabel[i-1] is the new name of i

        Tour r1 = t1, r2 = t2;
        StackingOrder rp = p;
        for (auto& v : r1.seq) v = relabel.seq[v - 1];
        for (auto& v : r2.seq) v = relabel.seq[v - 1];
        for (auto& s : rp.stacks)
            for (auto& v : s) v = relabel.seq[v - 1];

        CHECK_EQ(check_triple_feasible(t1, t2, p), check_triple_feasible(r1, r2, rp));
    }
}

TEST_CASE("tour cost scales additively with the matrix") {
    std::mt19937_64 rng(11);
    DistanceMatrix d = cyclic_unit(5);
    DistanceMatrix scaled = d;
    for (auto& row : scaled)
        for (auto& c : row) c *= 17;
    for (int round = 0; round < 20; ++round) {
        const Tour t = shuffled_tour(5, rng);
        CHECK_EQ(tour_cost(t, scaled), 17 * tour_cost(t, d));
    }
}

TEST_CASE("triples with mismatched item sets are rejected") {
    CHECK_THROWS_AS(check_triple_feasible({{1, 2}}, {{1, 2}}, {{{1, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_triple_feasible({{1, 2}}, {{2, 1, 3}}, {{{1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_triple_feasible({{1, 2}}, {{2, 1}}, {{{1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_triple({{1, 1}}, {{1, 2}}, {{{1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_triple({{1, 2}}, {{2, 1}}, {{{1, 2}, {2}}}),
                    std::invalid_argument);
}

TEST_CASE("permutation-tour predicate") {
    CHECK(is_permutation_tour({{2, 1, 3}}, 3));
    CHECK_FALSE(is_permutation_tour({{2, 1}}, 3));
    CHECK_FALSE(is_permutation_tour({{1, 1, 3}}, 3));
    CHECK_FALSE(is_permutation_tour({{0, 1, 2}}, 3));
    CHECK_FALSE(is_permutation_tour({{1, 2, 4}}, 3));
}

TEST_CASE("instance validation") {
    CHECK_NOTHROW(validate_instance(instance_a()));

    Instance bad = instance_a();
    bad.n = 0;
    CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

    bad = instance_a();
    bad.k = 0;
    CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

    bad = instance_a();
    bad.d1.pop_back();
    CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

    bad = instance_a();
    bad.d2[1][2] = -1;
    CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
}

TEST_CASE("canonical and reversed tours") {
    CHECK_EQ(canonical_tour(4).seq, std::vector<int>{1, 2, 3, 4});
    CHECK_EQ(reversed_tour({{1, 2, 3, 4}}).seq, std::vector<int>{4, 3, 2, 1});
    CHECK_EQ(canonical_tour(1).seq, std::vector<int>{1});
}
