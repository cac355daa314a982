#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "letterboxed_reductions.hpp"

using namespace nythard;
using namespace nythard::letterboxed;
namespace src = nythard::sources;

namespace {

bool has_spelling(const Puzzle& p, const std::string& s) {
    return std::find(p.alphabet.begin(), p.alphabet.end(), s) != p.alphabet.end();
}

// Two-sided puzzle with uniform cardinality 2, solvable by one word.
Puzzle lift_toy() {
    Puzzle p;
    p.alphabet = {"a", "b", "c", "d"};
    p.dictionary = {{0, 2, 1, 3}};  // acbd alternates between the sides
    p.side_counts = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    return p;
}

}  // namespace

TEST_CASE("single not-all-equal clause becomes a one-word puzzle") {
    src::Nae3Sat f;
    f.variables = {"x", "y", "z"};
    f.clauses = {{0, 1, 2}};
    auto red = reduce_nae3sat(f);

    CHECK(red.k == 1);
    REQUIRE(red.puzzle.dictionary.size() == 1);
    CHECK(red.puzzle.dictionary[0].size() == 27);
    REQUIRE(red.puzzle.side_count() == 4);
    for (int s = 0; s < 4; ++s) CHECK(red.puzzle.side_cardinality(s) == 5);
    CHECK(has_spelling(red.puzzle, "__hash"));
    CHECK(has_spelling(red.puzzle, "__tau"));

    auto hit = solve_search(red.puzzle, 1);
    REQUIRE(hit.status == SearchStatus::found);
    auto a = pullback_nae(red, hit.witness);
    CHECK(src::nae_satisfies(f, a));
}

TEST_CASE("two overlapping clauses reduce and pull back") {
    src::Nae3Sat f;
    f.variables = {"w", "x", "y", "z"};
    f.clauses = {{0, 1, 2}, {1, 2, 3}};
    auto red = reduce_nae3sat(f);

    // Shared side size: 2C + sum_v (2 eta_v - 1) = 4 + (1 + 3 + 3 + 1).
    for (int s = 0; s < 4; ++s) CHECK(red.puzzle.side_cardinality(s) == 12);

    REQUIRE(src::oracle_nae(f).status == src::OracleStatus::yes);
    auto hit = solve_search(red.puzzle, 1);
    REQUIRE(hit.status == SearchStatus::found);
    CHECK(src::nae_satisfies(f, pullback_nae(red, hit.witness)));
}

TEST_CASE("fresh symbols step aside when the input uses their spelling") {
    src::Nae3Sat f;
    f.variables = {"__hash", "c0", "y"};
    f.clauses = {{0, 1, 2}};
    auto red = reduce_nae3sat(f);
    CHECK(validate_puzzle(red.puzzle).empty());
    // The separator had to pick a de-collided spelling.
    CHECK(has_spelling(red.puzzle, "__hash_"));
    CHECK(solve_search(red.puzzle, 1).status == SearchStatus::found);
}

TEST_CASE("degenerate formulas are rejected") {
    src::Nae3Sat empty;
    empty.variables = {"x", "y", "z"};
    CHECK_THROWS_AS(reduce_nae3sat(empty), std::invalid_argument);

    src::Nae3Sat unused;
    unused.variables = {"x", "y", "z", "w"};
    unused.clauses = {{0, 1, 2}};  // w occurs in no clause
    CHECK_THROWS_AS(reduce_nae3sat(unused), std::invalid_argument);
}

TEST_CASE("single triple matches itself through the reduction") {
    src::ThreeDimMatching inst;
    inst.n = 1;
    inst.triples = {{0, 0, 0}};
    auto red = reduce_3dm(inst);
    CHECK(red.k == 1);
    for (const auto& w : red.puzzle.dictionary) CHECK(w.size() == 5);

    auto hit = solve_search(red.puzzle, red.k);
    REQUIRE(hit.status == SearchStatus::found);
    CHECK(pullback_3dm(inst, red, hit.witness) == std::vector<int>{0});
}

TEST_CASE("blocked triple system yields an unsolvable puzzle") {
    src::ThreeDimMatching inst;
    inst.n = 2;
    inst.triples = {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}};
    REQUIRE(src::oracle_3dm(inst).status == src::OracleStatus::no);
    auto red = reduce_3dm(inst);
    CHECK(red.k == 2);
    CHECK(solve_search(red.puzzle, red.k).status == SearchStatus::exhausted);
}

TEST_CASE("disjoint triples give a perfect matching") {
    src::ThreeDimMatching inst;
    inst.n = 2;
    inst.triples = {{0, 0, 0}, {1, 1, 1}};
    auto red = reduce_3dm(inst);
    auto hit = solve_search(red.puzzle, red.k);
    REQUIRE(hit.status == SearchStatus::found);
    auto chosen = pullback_3dm(inst, red, hit.witness);
    CHECK(std::set<int>(chosen.begin(), chosen.end()) == std::set<int>{0, 1});
}

TEST_CASE("empty triple set reduces to an unsolvable puzzle") {
    src::ThreeDimMatching inst;
    inst.n = 1;
    auto red = reduce_3dm(inst);
    CHECK(solve_search(red.puzzle, red.k).status == SearchStatus::exhausted);
}

TEST_CASE("side lifting adds one side and the marker words") {
    const Puzzle p = lift_toy();
    REQUIRE(solve_search(p, 1).status == SearchStatus::found);

    auto lifted = lift_sides(p, 1);
    CHECK(lifted.k == 4);  // 1 + S + n - 1 with S = 2, n = 2
    CHECK(lifted.puzzle.side_count() == 3);
    CHECK(lifted.puzzle.dictionary.size() == 4 * p.dictionary.size() + 2);
    CHECK(lifted.puzzle.alphabet.size() == p.alphabet.size() + 3);
    for (int s = 0; s < 3; ++s) CHECK(lifted.puzzle.side_cardinality(s) == 3);
    // Original words keep their ids; marked copies follow in dictionary order.
    CHECK(lifted.puzzle.dictionary[0] == p.dictionary[0]);
    CHECK(lifted.puzzle.dictionary[1].size() == p.dictionary[0].size() + 1);
    CHECK(lifted.puzzle.dictionary[2].size() == p.dictionary[0].size() + 1);
    CHECK(lifted.puzzle.dictionary[3].size() == p.dictionary[0].size() + 2);

    auto hit = solve_search(lifted.puzzle, lifted.k);
    REQUIRE(hit.status == SearchStatus::found);
    auto back = pullback_lift(p, lifted, hit.witness);
    CHECK(verify_solution(p, back, 1).empty());
}

TEST_CASE("lifting an unsolvable budget stays unsolvable") {
    Puzzle p = lift_toy();
    p.dictionary.push_back({0, 2});  // ac; still nothing covers b, d in one word
    // At k = 0 nothing is solvable, and the lifted budget mirrors that.
    auto lifted = lift_sides(p, 0);
    CHECK(solve_search(lifted.puzzle, lifted.k).status == SearchStatus::exhausted);
}

TEST_CASE("lifting requires cardinality at least two") {
    Puzzle p;
    p.alphabet = {"a", "b"};
    p.dictionary = {{0, 1}};
    p.side_counts = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(lift_sides(p, 1), std::invalid_argument);
}
