#include <stdexcept>

#include "doctest.h"
#include "tiles.hpp"

using namespace nythard;
using namespace nythard::tiles;

namespace {

Instance named(std::vector<std::vector<int>> tiles, int feature_count) {
    Instance inst;
    for (int f = 0; f < feature_count; ++f) inst.features.push_back(cat("f", f));
    inst.tiles = std::move(tiles);
    return inst;
}

}  // namespace

TEST_CASE("instance validation flags malformed inputs") {
    CHECK(validate_instance(named({{0, 1}, {0}, {1}}, 2)).empty());
    CHECK(!validate_instance(named({{0, 0}}, 1)).empty());   // repeated feature on a tile
    CHECK(!validate_instance(named({{2}}, 1)).empty());      // id out of range
    CHECK(!validate_instance(named({{0}}, 2)).empty());      // feature on no tile

    Instance dup = named({{0}, {1}}, 2);
    dup.features[1] = dup.features[0];
    CHECK(!validate_instance(dup).empty());
}

TEST_CASE("solvability is feature parity") {
    CHECK(is_solvable(named({{0, 1}, {0}, {1}}, 2)));
    CHECK(!is_solvable(named({{0, 1}, {0}}, 2)));
    CHECK(is_solvable(named({}, 0)));
}

TEST_CASE("greedy play clears the two-feature triangle") {
    const Instance inst = named({{0, 1}, {0}, {1}}, 2);
    auto out = solve_greedy(inst);
    REQUIRE(out.solvable);
    CHECK(out.moves == std::vector<int>{0, 1, 0, 2});

    auto rep = verify_moves(inst, out.moves);
    CHECK(rep.errors.empty());
    CHECK(rep.all_deleted);
    CHECK(rep.standard_moves == 2);
    CHECK(rep.forced_teleports == 1);
    CHECK(rep.unforced_teleports == 0);
    CHECK(rep.max_combo == 2);
}

TEST_CASE("greedy refuses odd parities") {
    CHECK(!solve_greedy(named({{0}}, 1)).solvable);
}

TEST_CASE("move verification catches malformed sequences") {
    const Instance inst = named({{0, 1}, {0}, {1}}, 2);
    CHECK(!verify_moves(inst, {0, 0}).errors.empty());
    CHECK(!verify_moves(inst, {0, 9}).errors.empty());

    auto rep = verify_moves(inst, {0, 1});
    CHECK(rep.errors.empty());
    CHECK(!rep.all_deleted);

    // Leaving a live tile without a shared feature is an unforced teleport.
    rep = verify_moves(inst, {1, 2});
    CHECK(rep.errors.empty());
    CHECK(rep.unforced_teleports == 1);
}

TEST_CASE("sharing number is the largest pairwise overlap") {
    CHECK(sharing_number(named({{0, 1}, {0, 1}}, 2)) == 2);
    CHECK(sharing_number(named({{0}, {0, 1}, {1}}, 2)) == 1);
    CHECK(sharing_number(named({{0}, {1}}, 2)) == 0);
    CHECK_THROWS_AS(sharing_number(named({{0}}, 1)), std::invalid_argument);
}

TEST_CASE("structure graph lists tile-feature incidences") {
    auto g = build_structure_graph(named({{0}, {0, 1}}, 2));
    CHECK(g.tile_count == 2);
    CHECK(g.feature_count == 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("eulerian line clears without teleports") {
    const Instance inst = named({{0}, {0, 1}, {1}}, 2);
    auto out = no_teleport_solvable(inst);
    REQUIRE(out.solvable);
    CHECK(out.moves == std::vector<int>{0, 1, 2});
    auto rep = verify_moves(inst, out.moves);
    CHECK(rep.all_deleted);
    CHECK(rep.forced_teleports + rep.unforced_teleports == 0);
}

TEST_CASE("disconnected components need a teleport") {
    const Instance inst = named({{0}, {0}, {1}, {1}}, 2);
    CHECK(is_solvable(inst));
    CHECK(!no_teleport_solvable(inst).solvable);
    CHECK(!brute_force_no_teleport(inst).solvable);
    CHECK(brute_force_solvable(inst).solvable);
}

TEST_CASE("odd tile degrees beyond two block teleport-free play") {
    // Star: three leaves each share one feature with the hub.
    const Instance star = named({{0, 1, 2}, {0}, {1}, {2}}, 3);
    CHECK(!no_teleport_solvable(star).solvable);
    CHECK(!brute_force_no_teleport(star).solvable);
    CHECK(brute_force_solvable(star).solvable);
}

TEST_CASE("sharing above one rejects the characterization") {
    CHECK_THROWS_AS(no_teleport_solvable(named({{0, 1}, {0, 1}}, 2)),
                    std::invalid_argument);
}

TEST_CASE("brute force agrees with parity on small instances") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = make_random_instance(seed, 4, 3);
        REQUIRE(validate_instance(inst).empty());
        auto brute = brute_force_solvable(inst);
        REQUIRE(brute.status != SearchStatus::budget);
        CHECK(brute.solvable == is_solvable(inst));
        auto greedy = solve_greedy(inst);
        CHECK(greedy.solvable == is_solvable(inst));
        if (greedy.solvable) {
            auto rep = verify_moves(inst, greedy.moves);
            CHECK(rep.errors.empty());
            CHECK(rep.all_deleted);
            CHECK(rep.unforced_teleports == 0);
        }
    }
}

TEST_CASE("random instances are deterministic") {
    auto a = make_random_instance(9, 6, 5);
    auto b = make_random_instance(9, 6, 5);
    CHECK(a.features == b.features);
    CHECK(a.tiles == b.tiles);
}

TEST_CASE("budget exhaustion surfaces in the brute searches") {
    const Instance inst = named({{0, 1}, {0, 2}, {1, 2}, {0}, {1}, {2}}, 3);
    Budget tiny(0);
    CHECK(brute_force_solvable(inst, &tiny).status == SearchStatus::budget);
    Budget tiny2(0);
    CHECK(brute_force_no_teleport(inst, &tiny2).status == SearchStatus::budget);
}
