#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "strands.hpp"

using namespace nythard;
using namespace nythard::strands;

namespace {

// A B
// B A   with the single word AB.
Instance cross_instance() {
    Instance inst;
    inst.alphabet = {"A", "B"};
    inst.grid = {{0, 1}, {1, 0}};
    inst.dictionary = {{0, 1}};
    return inst;
}

Partition sorted_copy(Partition p) {
    std::sort(p.begin(), p.end(), [](const Placement& a, const Placement& b) {
        return a.word != b.word ? a.word < b.word : a.cells < b.cells;
    });
    return p;
}

}  // namespace

TEST_CASE("instance validation flags malformed grids") {
    Instance inst = cross_instance();
    CHECK(validate_instance(inst).empty());

    inst.grid[1].pop_back();
    CHECK(!validate_instance(inst).empty());  // ragged rows

    inst = cross_instance();
    inst.grid[0][0] = 7;
    CHECK(!validate_instance(inst).empty());  // symbol out of range

    inst = cross_instance();
    inst.dictionary.push_back({});
    CHECK(!validate_instance(inst).empty());  // empty word

    inst = cross_instance();
    inst.alphabet[1] = "A";
    CHECK(!validate_instance(inst).empty());  // duplicate spelling
}

TEST_CASE("placement enumeration covers starts, reversals and modes") {
    const Instance inst = cross_instance();
    CHECK(enumerate_placements(inst, true).size() == 4);
    CHECK(enumerate_placements(inst, false).size() == 4);

    // A single-letter word places once per matching cell.
    Instance single;
    single.alphabet = {"A"};
    single.grid = {{0}};
    single.dictionary = {{0}};
    CHECK(enumerate_placements(single, true).size() == 1);

    // Diagonal-only adjacency appears in king mode alone.
    Instance diag;
    diag.alphabet = {"A", "B", "C"};
    diag.grid = {{0, 2}, {2, 1}};
    diag.dictionary = {{0, 1}};  // AB only via the diagonal
    CHECK(enumerate_placements(diag, true).size() == 1);
    CHECK(enumerate_placements(diag, false).empty());
}

TEST_CASE("partition verification enforces exact cover and spelling") {
    const Instance inst = cross_instance();
    Partition good = {{0, {{0, 0}, {0, 1}}}, {0, {{1, 1}, {1, 0}}}};
    CHECK(verify_partition(inst, good, true).empty());
    CHECK(verify_partition(inst, good, false).empty());

    Partition wrong_word = {{0, {{0, 1}, {0, 0}}}, {0, {{1, 1}, {1, 0}}}};
    CHECK(!verify_partition(inst, wrong_word, true).empty());  // spells BA

    Partition overlap = {{0, {{0, 0}, {0, 1}}}, {0, {{0, 0}, {0, 1}}}};
    CHECK(!verify_partition(inst, overlap, true).empty());

    Partition partial = {{0, {{0, 0}, {0, 1}}}};
    CHECK(!verify_partition(inst, partial, true).empty());
}

TEST_CASE("diagonal steps only count in king mode") {
    Instance inst;
    inst.alphabet = {"A", "B", "C"};
    inst.grid = {{0, 2}, {2, 1}};
    inst.dictionary = {{0, 1}, {2}};  // AB crosses the diagonal, C fills in
    Partition part = {{0, {{0, 0}, {1, 1}}}, {1, {{0, 1}}}, {1, {{1, 0}}}};
    CHECK(verify_partition(inst, part, true).empty());
    CHECK(!verify_partition(inst, part, false).empty());
}

TEST_CASE("solver partitions the cross both ways") {
    const Instance inst = cross_instance();
    for (bool diag : {true, false}) {
        SolveOptions opts;
        opts.allow_diagonal = diag;
        auto res = solve(inst, opts);
        REQUIRE(res.status == SearchStatus::found);
        CHECK(verify_partition(inst, res.partition, diag).empty());
    }
    auto all = enumerate_partitions(inst, 10);
    CHECK(all.partitions.size() == 2);
    CHECK(!all.truncated);
}

TEST_CASE("uncoverable cells exhaust the search") {
    Instance inst;
    inst.alphabet = {"A", "B"};
    inst.grid = {{0, 1}};
    inst.dictionary = {{0}};  // nothing spells B
    CHECK(solve(inst).status == SearchStatus::exhausted);
}

TEST_CASE("most-constrained branching finds the same answers") {
    const Instance inst = cross_instance();
    SolveOptions opts;
    opts.most_constrained = true;
    auto res = solve(inst, opts);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(verify_partition(inst, res.partition, true).empty());
}

TEST_CASE("search budgets are honoured") {
    Instance inst;
    inst.alphabet = {"A"};
    inst.grid.assign(4, std::vector<int>(4, 0));
    inst.dictionary = {{0, 0}};
    Budget tiny(1);
    SolveOptions opts;
    opts.budget = &tiny;
    CHECK(solve(inst, opts).status == SearchStatus::budget);
}

TEST_CASE("certificates round-trip through export and import") {
    const Instance inst = cross_instance();
    auto res = solve(inst, {});
    REQUIRE(res.status == SearchStatus::found);
    auto cert = export_certificate(inst, res.partition);
    REQUIRE(cert.roles.size() == 2);
    CHECK(cert.roles[0].size() == 2);
    auto back = import_certificate(inst, cert);
    CHECK(verify_partition(inst, back, true).empty());
    CHECK(sorted_copy(back) == sorted_copy(res.partition));
}

TEST_CASE("import rejects inconsistent certificates") {
    const Instance inst = cross_instance();
    Certificate cert;
    cert.roles = {"SE"};
    cert.steps = {{"r", "u"}};
    CHECK_THROWS_AS(import_certificate(inst, cert), std::invalid_argument);  // wrong rows

    cert.roles = {"SE", "ES"};
    cert.steps = {{"r", "u"}, {"u", "u"}};
    // S at (1,1) stepping up lands on (0,1), already claimed by the first chain.
    CHECK_THROWS_AS(import_certificate(inst, cert), std::invalid_argument);
}
