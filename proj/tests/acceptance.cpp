// Acceptance harness: thirteen end-to-end criteria over the solvers,
// reductions, and file formats, one pass/fail line each. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "letterboxed.hpp"
#include "letterboxed_reductions.hpp"
#include "pips.hpp"
#include "pips_reductions.hpp"
#include "source_problems.hpp"
#include "strands.hpp"
#include "strands_reductions.hpp"
#include "tiles.hpp"
#include "util.hpp"

using nythard::Budget;
using nythard::Rng;
using nythard::SearchStatus;
using nythard::cat;
namespace lb = nythard::letterboxed;
namespace pips = nythard::pips;
namespace strands = nythard::strands;
namespace tiles = nythard::tiles;
namespace sources = nythard::sources;
namespace io = nythard::io;

namespace {

struct Criterion {
    bool ok = true;
    long long failures = 0;
    std::string first;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (++failures == 1) first = what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << s << "s";
    return os.str();
}

// ------------------------------------------------------ format sample registry
//
// Criteria 1-11 feed every document they produce through a save/load/save
// cycle; criterion 13 reports the tally. Checking at registration time keeps
// memory flat across the tens of thousands of samples.

struct SerializationLedger {
    std::map<std::string, long long> per_format;
    long long failures = 0;
    std::string first_failure;
} g_ser;

io::json reserialize(const std::string& format, const io::json& doc, const io::json& companion) {
    if (format == "lb-puzzle") return io::save_lb_puzzle(io::load_lb_puzzle(doc));
    if (format == "lb-solution") return io::save_lb_solution(io::load_lb_solution(doc));
    if (format == "nae-sidecar")
        return io::save_nae_reduction(io::load_nae_reduction(doc, io::load_lb_puzzle(companion)));
    if (format == "3dm-sidecar")
        return io::save_3dm_reduction(io::load_3dm_reduction(doc, io::load_lb_puzzle(companion)));
    if (format == "lift-sidecar") return io::parse_text(io::canonical(doc));
    if (format == "pips-puzzle") return io::save_pips_puzzle(io::load_pips_puzzle(doc));
    if (format == "pips-tiling") return io::save_pips_tiling(io::load_pips_tiling(doc));
    if (format == "pips-1in3-sidecar")
        return io::save_pips_1in3(io::load_pips_1in3(doc, io::load_pips_puzzle(companion)));
    if (format == "strands-instance")
        return io::save_strands_instance(io::load_strands_instance(doc));
    if (format == "strands-partition") {
        auto inst = io::load_strands_instance(companion);
        auto part = io::load_strands_partition(inst, doc);
        return io::save_strands_partition(inst, part, doc.is_object());
    }
    if (format == "strands-1in3-sidecar")
        return io::save_strands_1in3(
            io::load_strands_1in3(doc, io::load_strands_instance(companion)));
    if (format == "flowfree") return io::save_flowfree(io::load_flowfree(doc));
    if (format == "tiles-instance") return io::save_tiles_instance(io::load_tiles_instance(doc));
    if (format == "tiles-moves") return io::save_tiles_moves(io::load_tiles_moves(doc));
    if (format == "nae3sat") return io::save_nae(io::load_nae(doc));
    if (format == "1in3") return io::save_1in3(io::load_1in3(doc));
    if (format == "3dm") return io::save_3dm(io::load_3dm(doc));
    if (format == "subsetsum") return io::save_subset_sum(io::load_subset_sum(doc));
    throw std::logic_error(cat("unregistered format: ", format));
}

void remember(const std::string& format, const io::json& doc, const io::json& companion = {}) {
    ++g_ser.per_format[format];
    try {
        const io::json again = reserialize(format, doc, companion);
        if (io::canonical(again) != io::canonical(doc)) {
            if (++g_ser.failures == 1)
                g_ser.first_failure = cat(format, ": reserialization differs");
        }
    } catch (const std::exception& e) {
        if (++g_ser.failures == 1) g_ser.first_failure = cat(format, ": ", e.what());
    }
}

// Solvable Letter Boxed puzzles from criteria 1-4 contribute a witness length
// and their own certificate bound; criterion 12 compares the columns.
std::vector<std::pair<long long, long long>> g_bound_records;

void record_bound(long long witness_words, const lb::Puzzle& p) {
    g_bound_records.emplace_back(witness_words, lb::certificate_bound(p));
}

// ----------------------------------------------------------------- criterion 1

Criterion c1_letterboxed_oracle() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    int solvable = 0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = lb::make_random_puzzle(seed);
        remember("lb-puzzle", io::save_lb_puzzle(p));
        Budget dp_bud(200'000'000ULL), br_bud(200'000'000ULL);
        const auto dp = lb::min_words_dp(p, &dp_bud);
        const auto br = lb::brute_force_min_words(p, lb::certificate_bound(p), &br_bud);
        c.expect(dp.status != SearchStatus::budget && br.status != SearchStatus::budget,
                 cat("seed ", seed, ": solver budget exhausted"));
        c.expect(dp.status == br.status, cat("seed ", seed, ": dp/brute status mismatch"));
        if (dp.status == SearchStatus::found && br.status == SearchStatus::found) {
            c.expect(dp.value == br.value,
                     cat("seed ", seed, ": dp ", dp.value, " vs brute ", br.value));
            c.expect(lb::verify_solution(p, br.witness, br.value).empty(),
                     cat("seed ", seed, ": brute witness fails verification"));
            remember("lb-solution", io::save_lb_solution(br.witness));
            record_bound(br.value, p);
            ++solvable;
        }
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 60.0, cat("took ", fmt_secs(secs)));
    c.detail = cat("200 puzzles, ", solvable, " solvable, ", fmt_secs(secs));
    return c;
}

// ----------------------------------------------------------------- criterion 2

void check_nae_formula(Criterion& c, const sources::Nae3Sat& f, const std::string& label) {
    c.expect(sources::validate_nae(f).empty(), cat(label, ": formula invalid"));
    lb::NaeReduction red;
    try {
        red = lb::reduce_nae3sat(f);
    } catch (const std::exception& e) {
        c.expect(false, cat(label, ": reduce threw: ", e.what()));
        return;
    }
    c.expect(red.puzzle.dictionary.size() == 1, cat(label, ": |D| != 1"));
    const int card = red.puzzle.side_cardinality(0);
    for (int s = 1; s < red.puzzle.side_count(); ++s)
        c.expect(red.puzzle.side_cardinality(s) == card, cat(label, ": unequal side sizes"));

    const auto oracle = sources::oracle_nae(f);
    c.expect(oracle.status != sources::OracleStatus::too_large, cat(label, ": oracle too large"));
    Budget bud(500'000'000ULL);
    const auto r = lb::solve_search(red.puzzle, red.k, &bud);
    c.expect(r.status != SearchStatus::budget, cat(label, ": search budget exhausted"));
    const bool puzzle_yes = r.status == SearchStatus::found;
    const bool oracle_yes = oracle.status == sources::OracleStatus::yes;
    c.expect(puzzle_yes == oracle_yes, cat(label, ": solvability mismatch"));
    if (puzzle_yes) {
        try {
            const auto a = lb::pullback_nae(red, r.witness);
            c.expect(sources::nae_satisfies(f, a), cat(label, ": pullback not NAE-satisfying"));
        } catch (const std::exception& e) {
            c.expect(false, cat(label, ": pullback threw: ", e.what()));
        }
        remember("lb-solution", io::save_lb_solution(r.witness));
        record_bound(static_cast<long long>(r.witness.words.size()), red.puzzle);
    }
    remember("nae3sat", io::save_nae(f));
    remember("lb-puzzle", io::save_lb_puzzle(red.puzzle));
    remember("nae-sidecar", io::save_nae_reduction(red), io::save_lb_puzzle(red.puzzle));
}

Criterion c2_nae_roundtrip() {
    Criterion c;
    int cases = 0;
    // Exhaustive over 3 variables: the single triple, once and twice.
    sources::Nae3Sat once{{"x", "y", "z"}, {{0, 1, 2}}};
    sources::Nae3Sat twice{{"x", "y", "z"}, {{0, 1, 2}, {0, 1, 2}}};
    check_nae_formula(c, once, "3var/1clause");
    check_nae_formula(c, twice, "3var/2clause");
    cases += 2;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        check_nae_formula(c, sources::make_random_nae(4, 3, seed), cat("seed ", seed));
        ++cases;
    }
    c.detail = cat(cases, " formulas");
    return c;
}

// ----------------------------------------------------------------- criterion 3

Criterion c3_3dm_roundtrip() {
    Criterion c;
    std::vector<std::array<int, 3>> all_triples;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) all_triples.push_back({x, y, z});
    int yes_count = 0;
    for (int mask = 0; mask < 256; ++mask) {
        sources::ThreeDimMatching inst;
        inst.n = 2;
        for (int b = 0; b < 8; ++b)
            if (mask & (1 << b)) inst.triples.push_back(all_triples[static_cast<size_t>(b)]);
        const auto red = lb::reduce_3dm(inst);
        c.expect(red.k == 2, cat("mask ", mask, ": k != n"));
        for (const auto& w : red.puzzle.dictionary)
            c.expect(w.size() == 5, cat("mask ", mask, ": word length != 5"));

        const auto oracle = sources::oracle_3dm(inst);
        Budget bud(200'000'000ULL);
        const auto r = lb::solve_search(red.puzzle, red.k, &bud);
        c.expect(r.status != SearchStatus::budget, cat("mask ", mask, ": budget exhausted"));
        const bool puzzle_yes = r.status == SearchStatus::found;
        c.expect(puzzle_yes == (oracle.status == sources::OracleStatus::yes),
                 cat("mask ", mask, ": solvability mismatch"));
        if (puzzle_yes) {
            try {
                const auto matching = lb::pullback_3dm(inst, red, r.witness);
                c.expect(matching.size() == 2, cat("mask ", mask, ": matching size"));
            } catch (const std::exception& e) {
                c.expect(false, cat("mask ", mask, ": pullback threw: ", e.what()));
            }
            remember("lb-solution", io::save_lb_solution(r.witness));
            record_bound(static_cast<long long>(r.witness.words.size()), red.puzzle);
            ++yes_count;
        }
        remember("3dm", io::save_3dm(inst));
        remember("lb-puzzle", io::save_lb_puzzle(red.puzzle));
        remember("3dm-sidecar", io::save_3dm_reduction(red), io::save_lb_puzzle(red.puzzle));
    }
    c.detail = cat("256 triple sets, ", yes_count, " matchable");
    return c;
}

// ----------------------------------------------------------------- criterion 4

Criterion c4_side_lifting() {
    Criterion c;
    int accepted = 0, solvable = 0;
    for (uint64_t seed = 0; accepted < 50 && seed < 5000; ++seed) {
        lb::RandomPuzzleParams params;
        params.sides = 2 + static_cast<int>(seed % 2);
        const auto p = lb::make_random_puzzle(seed, params);
        if (p.side_cardinality(0) != 2) continue;  // the lift is stated for n = 2
        ++accepted;
        const int S = p.side_count();
        const auto lifted = lb::lift_sides(p, 1);  // layout is independent of k
        const std::string label = cat("seed ", seed);

        // Structural deltas: +1 side, +3 symbols, 4m+2 words, +2 length, n+1.
        c.expect(lifted.puzzle.side_count() == S + 1, cat(label, ": side count"));
        c.expect(lifted.puzzle.symbol_count() == p.symbol_count() + 3, cat(label, ": alphabet"));
        c.expect(lifted.puzzle.dictionary.size() == 4 * p.dictionary.size() + 2,
                 cat(label, ": dictionary size"));
        size_t len = 0, len2 = 0;
        for (const auto& w : p.dictionary) len = std::max(len, w.size());
        for (const auto& w : lifted.puzzle.dictionary) len2 = std::max(len2, w.size());
        c.expect(len2 == len + 2, cat(label, ": max word length"));
        for (int s = 0; s < lifted.puzzle.side_count(); ++s)
            c.expect(lifted.puzzle.side_cardinality(s) == 3, cat(label, ": side cardinality"));

        const auto dp = lb::min_words_dp(p);
        const auto dp2 = lb::min_words_dp(lifted.puzzle);
        c.expect(dp.status != SearchStatus::budget && dp2.status != SearchStatus::budget,
                 cat(label, ": dp budget exhausted"));
        if (dp.status == SearchStatus::found) {
            ++solvable;
            // Equivalence at k = v and k = v - 1 pins the lifted minimum.
            c.expect(dp2.status == SearchStatus::found && dp2.value == dp.value + S + 1,
                     cat(label, ": lifted minimum off"));
            record_bound(dp.value, p);
            if (dp2.status == SearchStatus::found) {
                record_bound(dp2.value, lifted.puzzle);
                remember("lb-solution", io::save_lb_solution(dp2.witness));
                try {
                    const auto back = lb::pullback_lift(p, lifted, dp2.witness);
                    c.expect(
                        lb::verify_solution(p, back, lifted.k - S - 1).empty(),
                        cat(label, ": pulled-back solution fails"));
                } catch (const std::exception& e) {
                    c.expect(false, cat(label, ": pullback threw: ", e.what()));
                }
            }
        } else {
            c.expect(dp2.status == SearchStatus::exhausted,
                     cat(label, ": unsolvable original but solvable lift"));
        }
        remember("lb-puzzle", io::save_lb_puzzle(p));
        remember("lb-puzzle", io::save_lb_puzzle(lifted.puzzle));
        remember("lift-sidecar", io::save_lift(lifted));
    }
    c.expect(accepted == 50, "could not collect 50 cardinality-2 puzzles");
    c.detail = cat(accepted, " puzzles, ", solvable, " solvable");
    return c;
}

// ----------------------------------------------------------------- criterion 5

std::vector<std::array<int, 3>> triples_over(int v) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int cc = b + 1; cc < v; ++cc) out.push_back({a, b, cc});
    return out;
}

// All 1-clause and 2-clause formulas (clause multisets) over exactly v
// variables, for v = 3..5.
std::vector<std::pair<int, std::vector<std::array<int, 3>>>> small_formulas() {
    std::vector<std::pair<int, std::vector<std::array<int, 3>>>> out;
    for (int v = 3; v <= 5; ++v) {
        const auto ts = triples_over(v);
        for (const auto& t : ts) out.push_back({v, {t}});
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i; j < ts.size(); ++j) out.push_back({v, {ts[i], ts[j]}});
    }
    return out;
}

std::vector<std::string> var_names(int v) {
    std::vector<std::string> names;
    for (int i = 0; i < v; ++i) names.push_back(cat("v", i));
    return names;
}

Criterion c5_pips_roundtrip() {
    Criterion c;
    const auto formulas = small_formulas();
    c.expect(formulas.size() == 81, cat("expected 81 formulas, got ", formulas.size()));
    int solvable = 0;
    for (size_t idx = 0; idx < formulas.size(); ++idx) {
        const auto& [v, clauses] = formulas[idx];
        const std::string label = cat("formula ", idx);
        sources::OneInThreeSat f;
        try {
            f = sources::embed_on_line(var_names(v), clauses);
        } catch (const std::exception& e) {
            c.expect(false, cat(label, ": embedding failed: ", e.what()));
            continue;
        }
        const auto oracle = sources::oracle_1in3(f);
        const bool oracle_yes = oracle.status == sources::OracleStatus::yes;

        for (const bool connected : {false, true}) {
            pips::OneInThreeReduction red;
            try {
                red = pips::reduce_1in3(f, connected);  // asserts gadget uniqueness
            } catch (const std::exception& e) {
                c.expect(false, cat(label, ": reduce threw: ", e.what()));
                continue;
            }
            if (!connected) {
                for (const auto& d : red.puzzle.dominoes)
                    c.expect(d.a == d.b && (d.a == 0 || d.a == 1), cat(label, ": domino values"));
                for (const auto& cons : red.puzzle.constraints) {
                    c.expect(cons.kind == pips::ConstraintKind::eq ||
                                 cons.kind == pips::ConstraintKind::sum_eq,
                             cat(label, ": constraint kind"));
                    if (cons.kind == pips::ConstraintKind::sum_eq)
                        c.expect(cons.n == 1, cat(label, ": clause sum != 1"));
                }
            }
            Budget bud(500'000'000ULL);
            pips::SolveOptions opts;
            opts.budget = &bud;
            const auto r = pips::solve(red.puzzle, opts);
            c.expect(r.status != SearchStatus::budget, cat(label, ": solve budget exhausted"));
            const bool puzzle_yes = r.status == SearchStatus::found;
            c.expect(puzzle_yes == oracle_yes,
                     cat(label, connected ? " (connected)" : "", ": solvability mismatch"));
            if (puzzle_yes) {
                try {
                    const auto a = pips::pullback_1in3(red, r.tiling);
                    c.expect(sources::one_in_three_satisfies(f, a),
                             cat(label, ": pullback not 1-in-3 satisfying"));
                } catch (const std::exception& e) {
                    c.expect(false, cat(label, ": pullback threw: ", e.what()));
                }
                remember("pips-tiling", io::save_pips_tiling(r.tiling));
            }
            remember("pips-puzzle", io::save_pips_puzzle(red.puzzle));
            remember("pips-1in3-sidecar", io::save_pips_1in3(red),
                     io::save_pips_puzzle(red.puzzle));
        }
        if (oracle_yes) ++solvable;
        remember("1in3", io::save_1in3(f));
    }
    c.detail = cat(formulas.size(), " formulas x 2 modes, ", solvable, " satisfiable");
    return c;
}

// ----------------------------------------------------------------- criterion 6

Criterion c6_subset_sum() {
    Criterion c;
    Rng rng(20260823ULL);
    const int cases = 10000;
    int yes_count = 0;
    for (int i = 0; i < cases; ++i) {
        sources::SubsetSum s;
        const int count = static_cast<int>(rng.range(1, 5));
        for (int e = 0; e < count; ++e) s.elements.push_back(rng.range(1, 10));
        s.target = static_cast<long long>(rng.below(51));
        const std::string label = cat("case ", i);

        const auto red = pips::reduce_subset_sum(s);
        c.expect(red.puzzle.constraints.size() == 1, cat(label, ": constraint count"));
        const auto oracle = sources::oracle_subset_sum(s);
        Budget bud(10'000'000ULL);
        pips::SolveOptions opts;
        opts.budget = &bud;
        const auto r = pips::solve(red.puzzle, opts);
        c.expect(r.status != SearchStatus::budget, cat(label, ": solve budget exhausted"));
        const bool puzzle_yes = r.status == SearchStatus::found;
        c.expect(puzzle_yes == (oracle.status == sources::OracleStatus::yes),
                 cat(label, ": solvability mismatch"));
        if (puzzle_yes) {
            try {
                const auto chosen = pips::pullback_subset_sum(red, r.tiling);
                long long sum = 0;
                for (int e : chosen) sum += s.elements[static_cast<size_t>(e)];
                c.expect(sum == s.target, cat(label, ": pullback sum"));
            } catch (const std::exception& e) {
                c.expect(false, cat(label, ": pullback threw: ", e.what()));
            }
            ++yes_count;
            if (yes_count % 50 == 1) remember("pips-tiling", io::save_pips_tiling(r.tiling));
        }
        remember("subsetsum", io::save_subset_sum(s));
        remember("pips-puzzle", io::save_pips_puzzle(red.puzzle));
    }
    c.detail = cat(cases, " sampled cases, ", yes_count, " solvable");
    return c;
}

// ----------------------------------------------------------------- criterion 7

void check_strands_formula(Criterion& c, const sources::OneInThreeSat& f,
                           const std::string& label) {
    strands::OneInThreeReduction red;
    try {
        red = strands::reduce_1in3(f);  // asserts gadget isolation
    } catch (const std::exception& e) {
        c.expect(false, cat(label, ": reduce threw: ", e.what()));
        return;
    }
    c.expect(red.instance.alphabet.size() == 8, cat(label, ": |alphabet| != 8"));
    c.expect(red.instance.dictionary.size() == 7, cat(label, ": |dictionary| != 7"));
    for (size_t v = 0; v < red.layout.variables.size(); ++v) {
        const auto& vg = red.layout.variables[v];
        if (!vg.present) continue;
        const int k = vg.incidences;
        c.expect(k >= 1 && static_cast<int>(vg.e_cells.size()) == k,
                 cat(label, ": variable ", v, " leg count"));
        // The 3 x (3k+3) band is anchored by its two A cells.
        const auto& grid = red.instance.grid;
        const size_t row = static_cast<size_t>(vg.top_row + 1);
        c.expect(row < grid.size() && grid[row][static_cast<size_t>(vg.left_col)] == 1 &&
                     grid[row][static_cast<size_t>(vg.left_col + 3 * k + 2)] == 1,
                 cat(label, ": variable ", v, " gadget frame"));
    }
    const auto oracle = sources::oracle_1in3(f);
    const bool oracle_yes = oracle.status == sources::OracleStatus::yes;
    for (const bool diagonal : {true, false}) {
        Budget bud(500'000'000ULL);
        strands::SolveOptions opts;
        opts.allow_diagonal = diagonal;
        opts.budget = &bud;
        const auto r = strands::solve(red.instance, opts);
        c.expect(r.status != SearchStatus::budget, cat(label, ": solve budget exhausted"));
        const bool found = r.status == SearchStatus::found;
        c.expect(found == oracle_yes,
                 cat(label, diagonal ? " (king)" : " (orthogonal)", ": solvability mismatch"));
        if (found) {
            try {
                const auto a = strands::pullback_1in3(red, r.partition, diagonal);
                c.expect(sources::one_in_three_satisfies(f, a),
                         cat(label, ": pullback not 1-in-3 satisfying"));
            } catch (const std::exception& e) {
                c.expect(false, cat(label, ": pullback threw: ", e.what()));
            }
            remember("strands-partition",
                     io::save_strands_partition(red.instance, r.partition, true),
                     io::save_strands_instance(red.instance));
        }
    }
    remember("1in3", io::save_1in3(f));
    remember("strands-instance", io::save_strands_instance(red.instance));
    remember("strands-1in3-sidecar", io::save_strands_1in3(red),
             io::save_strands_instance(red.instance));
}

Criterion c7_strands_roundtrip() {
    Criterion c;
    int cases = 0;
    for (int v = 3; v <= 5; ++v)
        for (const auto& t : triples_over(v)) {
            sources::OneInThreeSat f;
            try {
                f = sources::embed_on_line(var_names(v), {t});
            } catch (const std::exception& e) {
                c.expect(false, cat("1-clause embed failed: ", e.what()));
                continue;
            }
            check_strands_formula(c, f, cat("1clause v", v, " case ", cases));
            ++cases;
        }
    for (uint64_t seed = 0; seed < 10; ++seed) {
        check_strands_formula(c, sources::make_random_1in3(5, 2, seed), cat("2clause seed ", seed));
        ++cases;
    }
    c.detail = cat(cases, " formulas x 2 modes");
    return c;
}

// ----------------------------------------------------------------- criterion 8

strands::Instance carve_instance(Rng& rng) {
    strands::Instance inst;
    const int rows = static_cast<int>(rng.range(2, 3));
    const int cols = static_cast<int>(rng.range(2, 3));
    const int symbols = static_cast<int>(rng.range(2, 3));
    for (int i = 0; i < symbols; ++i) inst.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    inst.grid.assign(static_cast<size_t>(rows), std::vector<int>(static_cast<size_t>(cols)));
    for (auto& row : inst.grid)
        for (auto& cell : row) cell = static_cast<int>(rng.below(static_cast<uint64_t>(symbols)));

    // Carve the grid into orthogonal paths of length <= 3; the pieces become
    // the dictionary, so the instance is solvable without diagonals.
    std::vector<std::vector<bool>> used(static_cast<size_t>(rows),
                                        std::vector<bool>(static_cast<size_t>(cols), false));
    std::set<std::vector<int>> seen;
    for (int r = 0; r < rows; ++r)
        for (int col = 0; col < cols; ++col) {
            if (used[static_cast<size_t>(r)][static_cast<size_t>(col)]) continue;
            std::vector<std::pair<int, int>> path{{r, col}};
            used[static_cast<size_t>(r)][static_cast<size_t>(col)] = true;
            const int want = static_cast<int>(rng.range(1, 3));
            while (static_cast<int>(path.size()) < want) {
                const auto [cr, ccol] = path.back();
                std::vector<std::pair<int, int>> next;
                const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
                for (int d = 0; d < 4; ++d) {
                    const int nr = cr + dr[d], nc = ccol + dc[d];
                    if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                    if (!used[static_cast<size_t>(nr)][static_cast<size_t>(nc)])
                        next.push_back({nr, nc});
                }
                if (next.empty()) break;
                const auto pick = next[rng.below(next.size())];
                used[static_cast<size_t>(pick.first)][static_cast<size_t>(pick.second)] = true;
                path.push_back(pick);
            }
            std::vector<int> word;
            for (const auto& [pr, pc] : path)
                word.push_back(inst.grid[static_cast<size_t>(pr)][static_cast<size_t>(pc)]);
            if (seen.insert(word).second) inst.dictionary.push_back(std::move(word));
        }
    return inst;
}

strands::Instance random_instance(Rng& rng) {
    strands::Instance inst;
    const int rows = static_cast<int>(rng.range(2, 3));
    const int cols = static_cast<int>(rng.range(2, 3));
    const int symbols = static_cast<int>(rng.range(2, 3));
    for (int i = 0; i < symbols; ++i) inst.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    inst.grid.assign(static_cast<size_t>(rows), std::vector<int>(static_cast<size_t>(cols)));
    for (auto& row : inst.grid)
        for (auto& cell : row) cell = static_cast<int>(rng.below(static_cast<uint64_t>(symbols)));
    std::set<std::vector<int>> seen;
    const int words = static_cast<int>(rng.range(2, 4));
    for (int w = 0; w < words; ++w) {
        std::vector<int> word;
        const int len = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < len; ++i)
            word.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(symbols))));
        if (seen.insert(word).second) inst.dictionary.push_back(std::move(word));
    }
    return inst;
}

void check_expansion(Criterion& c, const strands::Instance& src, bool src_solvable,
                     const std::string& label) {
    strands::Instance big;
    try {
        big = strands::expand_blocks(src);
    } catch (const std::exception& e) {
        c.expect(false, cat(label, ": expansion threw: ", e.what()));
        return;
    }
    std::set<size_t> src_lengths;
    size_t max_len = 0;
    for (const auto& w : src.dictionary) {
        src_lengths.insert(w.size());
        max_len = std::max(max_len, w.size());
    }
    for (const auto& w : big.dictionary)
        c.expect(w.size() % 9 == 0 && src_lengths.count(w.size() / 9) == 1,
                 cat(label, ": expanded word length"));
    double cap = static_cast<double>(src.dictionary.size());
    for (size_t i = 0; i < max_len; ++i) cap *= 4.0;
    c.expect(static_cast<double>(big.dictionary.size()) <= cap, cat(label, ": |D2| over bound"));

    Budget bud(500'000'000ULL);
    strands::SolveOptions opts;
    opts.budget = &bud;  // king moves (default)
    const auto r = strands::solve(big, opts);
    c.expect(r.status != SearchStatus::budget, cat(label, ": expanded solve budget"));
    c.expect((r.status == SearchStatus::found) == src_solvable,
             cat(label, ": expansion changed solvability"));
    if (r.status == SearchStatus::found) {
        try {
            strands::pullback_expansion(src, big, r.partition, true);
        } catch (const std::exception& e) {
            c.expect(false, cat(label, ": projection threw: ", e.what()));
        }
        remember("strands-partition", io::save_strands_partition(big, r.partition, false),
                 io::save_strands_instance(big));
    }
    remember("strands-instance", io::save_strands_instance(src));
    remember("strands-instance", io::save_strands_instance(big));
}

Criterion c8_block_expansion() {
    Criterion c;
    Rng rng(0xb10cULL);
    int solvable_cases = 0, unsolvable_cases = 0, attempts = 0;
    while (solvable_cases < 30 && ++attempts < 2000) {
        const auto inst = carve_instance(rng);
        strands::SolveOptions ortho;
        ortho.allow_diagonal = false;
        if (strands::solve(inst, ortho).status != SearchStatus::found) continue;
        check_expansion(c, inst, true, cat("solvable ", solvable_cases));
        ++solvable_cases;
    }
    while (unsolvable_cases < 30 && ++attempts < 4000) {
        const auto inst = random_instance(rng);
        if (!strands::validate_instance(inst).empty()) continue;
        if (strands::solve(inst, {}).status != SearchStatus::exhausted) continue;  // king moves
        check_expansion(c, inst, false, cat("unsolvable ", unsolvable_cases));
        ++unsolvable_cases;
    }
    c.expect(solvable_cases == 30 && unsolvable_cases == 30,
             cat("collected ", solvable_cases, "+", unsolvable_cases, " of 30+30"));
    c.detail = cat(solvable_cases, " solvable + ", unsolvable_cases, " unsolvable grids");
    return c;
}

// ----------------------------------------------------------------- criterion 9

// Path-cover decision written directly against the board rules; shares no
// code with the library's flow oracle or the Strands encoding.
bool flow_paths_exist(const strands::FlowFree& ff) {
    const int rows = ff.height, cols = ff.width;
    std::vector<std::vector<int>> owner(static_cast<size_t>(rows),
                                        std::vector<int>(static_cast<size_t>(cols), -1));
    for (size_t i = 0; i < ff.pairs.size(); ++i) {
        owner[static_cast<size_t>(ff.pairs[i].a.first)][static_cast<size_t>(ff.pairs[i].a.second)] =
            static_cast<int>(i);
        owner[static_cast<size_t>(ff.pairs[i].b.first)][static_cast<size_t>(ff.pairs[i].b.second)] =
            static_cast<int>(i);
    }
    std::function<bool(size_t, strands::CellRC)> go = [&](size_t color,
                                                          strands::CellRC cur) -> bool {
        if (cur == ff.pairs[color].b) {
            if (color + 1 < ff.pairs.size()) return go(color + 1, ff.pairs[color + 1].a);
            for (const auto& row : owner)
                for (int cell : row)
                    if (cell < 0) return false;
            return true;
        }
        const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
            const strands::CellRC nb{cur.first + dr[d], cur.second + dc[d]};
            if (nb.first < 0 || nb.first >= rows || nb.second < 0 || nb.second >= cols) continue;
            if (nb == ff.pairs[color].b) {
                if (go(color, nb)) return true;
                continue;
            }
            auto& slot = owner[static_cast<size_t>(nb.first)][static_cast<size_t>(nb.second)];
            if (slot != -1) continue;
            slot = static_cast<int>(color);
            if (go(color, nb)) return true;
            slot = -1;
        }
        return false;
    };
    if (ff.pairs.empty()) return rows * cols == 0;
    return go(0, ff.pairs[0].a);
}

Criterion c9_flowfree() {
    Criterion c;
    struct Case {
        strands::FlowFree board;
        bool expected;
    };
    auto board = [](int w, int h,
                    std::vector<strands::FlowFree::ColorPair> pairs) -> strands::FlowFree {
        strands::FlowFree ff;
        ff.width = w;
        ff.height = h;
        ff.pairs = std::move(pairs);
        return ff;
    };
    const std::vector<Case> cases = {
        {board(2, 2, {{"r", {0, 0}, {1, 1}}}), false},  // corner parity
        {board(2, 2, {{"r", {0, 0}, {1, 0}}}), true},
        {board(3, 3, {{"r", {0, 0}, {0, 2}}, {"g", {1, 0}, {1, 2}}, {"b", {2, 0}, {2, 2}}}), true},
        {board(3, 3, {{"r", {0, 0}, {2, 2}}}), true},
        {board(3, 3, {{"r", {0, 0}, {2, 2}}, {"g", {0, 2}, {2, 0}}}), false},  // paths must cross
        {board(4, 4, {{"r", {0, 0}, {0, 3}}, {"g", {1, 0}, {1, 3}}}), true},
        {board(4, 4,
               {{"r", {0, 0}, {0, 3}}, {"g", {1, 0}, {1, 3}}, {"b", {2, 0}, {2, 3}}}),
         true},
        {board(3, 2, {{"r", {0, 0}, {1, 2}}}), true},
        {board(3, 3, {{"r", {0, 0}, {0, 1}}}), false},  // 5 black vs 4 white cells
        {board(4, 4, {{"r", {0, 0}, {3, 3}}, {"g", {0, 3}, {3, 0}}}), false},
    };
    int idx = 0;
    for (const auto& [ff, expected] : cases) {
        const std::string label = cat("board ", idx++);
        c.expect(strands::validate_flowfree(ff).empty(), cat(label, ": board invalid"));
        c.expect(flow_paths_exist(ff) == expected, cat(label, ": reference solver disagrees"));
        const auto probe = strands::oracle_flowfree(ff);
        c.expect(probe.status != SearchStatus::budget && probe.solvable == expected,
                 cat(label, ": library oracle disagrees"));

        const auto inst = strands::reduce_flowfree(ff);
        Budget bud(500'000'000ULL);
        strands::SolveOptions opts;
        opts.allow_diagonal = false;
        opts.budget = &bud;
        const auto r = strands::solve(inst, opts);
        c.expect(r.status != SearchStatus::budget, cat(label, ": solve budget exhausted"));
        c.expect((r.status == SearchStatus::found) == expected,
                 cat(label, ": strands solvability mismatch"));
        if (r.status == SearchStatus::found) {
            try {
                const auto paths = strands::pullback_flowfree(ff, inst, r.partition);
                c.expect(strands::verify_flowfree_paths(ff, paths).empty(),
                         cat(label, ": pulled-back paths fail"));
            } catch (const std::exception& e) {
                c.expect(false, cat(label, ": pullback threw: ", e.what()));
            }
            remember("strands-partition", io::save_strands_partition(inst, r.partition, true),
                     io::save_strands_instance(inst));
        }
        remember("flowfree", io::save_flowfree(ff));
        remember("strands-instance", io::save_strands_instance(inst));
    }
    c.detail = cat(cases.size(), " boards, 6 solvable / 4 not");
    return c;
}

// ---------------------------------------------------------------- criterion 10

tiles::Instance instance_from_masks(const std::vector<int>& masks, int feature_bits) {
    int used = 0;
    for (int m : masks) used |= m;
    tiles::Instance inst;
    std::vector<int> id(static_cast<size_t>(feature_bits), -1);
    for (int b = 0; b < feature_bits; ++b)
        if (used & (1 << b)) {
            id[static_cast<size_t>(b)] = static_cast<int>(inst.features.size());
            inst.features.push_back(cat("f", b));
        }
    for (int m : masks) {
        std::vector<int> tile;
        for (int b = 0; b < feature_bits; ++b)
            if (m & (1 << b)) tile.push_back(id[static_cast<size_t>(b)]);
        inst.tiles.push_back(std::move(tile));
    }
    return inst;
}

void check_parity_instance(Criterion& c, const tiles::Instance& inst, const std::string& label) {
    c.expect(tiles::validate_instance(inst).empty(), cat(label, ": instance invalid"));
    const bool parity = tiles::is_solvable(inst);
    Budget bud(200'000'000ULL);
    const auto brute = tiles::brute_force_solvable(inst, &bud);
    c.expect(brute.status != SearchStatus::budget, cat(label, ": brute budget exhausted"));
    c.expect(brute.solvable == parity, cat(label, ": parity vs brute"));
    const auto greedy = tiles::solve_greedy(inst);
    c.expect(greedy.solvable == parity, cat(label, ": parity vs greedy"));
    if (greedy.solvable) {
        const auto report = tiles::verify_moves(inst, greedy.moves);
        c.expect(report.errors.empty() && report.all_deleted,
                 cat(label, ": greedy moves fail verification"));
        c.expect(report.unforced_teleports == 0, cat(label, ": greedy broke its combo"));
    }
}

Criterion c10_tiles_parity() {
    Criterion c;
    long long cases = 0;
    std::vector<int> masks;
    std::function<void(int)> enumerate = [&](int remaining) {
        {
            auto inst = instance_from_masks(masks, 3);
            check_parity_instance(c, inst, cat("exhaustive case ", cases));
            if (cases % 40 == 0) {
                remember("tiles-instance", io::save_tiles_instance(inst));
                const auto greedy = tiles::solve_greedy(inst);
                if (greedy.solvable && !greedy.moves.empty())
                    remember("tiles-moves", io::save_tiles_moves(greedy.moves));
            }
            ++cases;
        }
        if (remaining == 0) return;
        for (int m = 0; m < 8; ++m) {
            masks.push_back(m);
            enumerate(remaining - 1);
            masks.pop_back();
        }
    };
    enumerate(4);
    c.expect(cases == 4681, cat("expected 4681 exhaustive cases, got ", cases));
    for (uint64_t seed = 0; seed < 500; ++seed) {
        const auto inst = tiles::make_random_instance(seed, 6, 5);
        check_parity_instance(c, inst, cat("seed ", seed));
        if (seed % 20 == 0) remember("tiles-instance", io::save_tiles_instance(inst));
    }
    c.detail = cat(cases, " exhaustive + 500 seeded instances");
    return c;
}

// ---------------------------------------------------------------- criterion 11

Criterion c11_tiles_eulerian() {
    Criterion c;
    long long sharing_one = 0;
    for (int t = 2; t <= 4; ++t) {
        std::vector<int> masks(static_cast<size_t>(t), 0);
        while (true) {
            int sharing = 0;
            for (size_t i = 0; i < masks.size() && sharing <= 1; ++i)
                for (size_t j = i + 1; j < masks.size(); ++j)
                    sharing = std::max(sharing, __builtin_popcount(
                                                    static_cast<unsigned>(masks[i] & masks[j])));
            if (sharing == 1) {
                const auto inst = instance_from_masks(masks, 4);
                const std::string label = cat("sharing-1 case ", sharing_one);
                c.expect(tiles::validate_instance(inst).empty(), cat(label, ": invalid"));
                tiles::NoTeleportOutcome nt;
                try {
                    nt = tiles::no_teleport_solvable(inst);
                } catch (const std::exception& e) {
                    c.expect(false, cat(label, ": characterization threw: ", e.what()));
                    goto advance;
                }
                {
                    Budget bud(100'000'000ULL);
                    const auto brute = tiles::brute_force_no_teleport(inst, &bud);
                    c.expect(brute.status != SearchStatus::budget, cat(label, ": brute budget"));
                    c.expect(nt.solvable == brute.solvable,
                             cat(label, ": characterization vs brute"));
                    if (nt.solvable) {
                        const auto report = tiles::verify_moves(inst, nt.moves);
                        c.expect(report.errors.empty() && report.all_deleted,
                                 cat(label, ": trail fails verification"));
                        c.expect(report.forced_teleports + report.unforced_teleports == 0,
                                 cat(label, ": trail teleports"));
                        if (sharing_one % 50 == 0)
                            remember("tiles-moves", io::save_tiles_moves(nt.moves));
                    }
                    if (sharing_one % 50 == 0)
                        remember("tiles-instance", io::save_tiles_instance(inst));
                }
                ++sharing_one;
            }
        advance:
            size_t pos = 0;
            while (pos < masks.size() && masks[pos] == 15) masks[pos++] = 0;
            if (pos == masks.size()) break;
            ++masks[pos];
        }
    }
    c.detail = cat(sharing_one, " sharing-number-1 instances (2-4 tiles, <= 4 features)");
    return c;
}

// ---------------------------------------------------------------- criterion 12

Criterion c12_certificate_bound() {
    Criterion c;
    long long worst_words = 0;
    for (const auto& [words, bound] : g_bound_records) {
        c.expect(words <= bound, cat("witness of ", words, " words exceeds bound ", bound));
        worst_words = std::max(worst_words, words);
    }
    c.detail = cat(g_bound_records.size(), " solvable puzzles, longest witness ", worst_words,
                   " words");
    return c;
}

// ---------------------------------------------------------------- criterion 13

Criterion c13_serialization() {
    Criterion c;
    const char* formats[] = {"lb-puzzle",        "lb-solution",
                             "nae-sidecar",      "3dm-sidecar",
                             "lift-sidecar",     "pips-puzzle",
                             "pips-tiling",      "pips-1in3-sidecar",
                             "strands-instance", "strands-partition",
                             "strands-1in3-sidecar", "flowfree",
                             "tiles-instance",   "tiles-moves",
                             "nae3sat",          "1in3",
                             "3dm",              "subsetsum"};
    long long total = 0;
    for (const char* f : formats) {
        const auto it = g_ser.per_format.find(f);
        c.expect(it != g_ser.per_format.end() && it->second > 0,
                 cat("format ", f, " never exercised"));
        if (it != g_ser.per_format.end()) total += it->second;
    }
    c.expect(g_ser.failures == 0, g_ser.first_failure);
    c.detail = cat(total, " documents across ", std::size(formats), " formats");
    return c;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Criterion()>> table[] = {
        {"letterboxed dp vs brute oracle", c1_letterboxed_oracle},
        {"nae-3sat round trip", c2_nae_roundtrip},
        {"3dm round trip", c3_3dm_roundtrip},
        {"side lifting", c4_side_lifting},
        {"pips 1-in-3 round trip", c5_pips_roundtrip},
        {"subset sum round trip", c6_subset_sum},
        {"strands 1-in-3 round trip", c7_strands_roundtrip},
        {"block expansion", c8_block_expansion},
        {"flow-free reduction", c9_flowfree},
        {"tiles parity", c10_tiles_parity},
        {"tiles eulerian", c11_tiles_eulerian},
        {"certificate bound", c12_certificate_bound},
        {"serialization identity", c13_serialization},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : table) {
        ++index;
        Criterion result;
        try {
            result = fn();
        } catch (const std::exception& e) {
            result.ok = false;
            result.first = cat("uncaught exception: ", e.what());
        }
        std::cout << "criterion " << index << " (" << name << "): "
                  << (result.ok ? "PASS" : "FAIL");
        if (result.ok && !result.detail.empty()) std::cout << " - " << result.detail;
        if (!result.ok)
            std::cout << " - " << result.failures << " failure(s); first: " << result.first;
        std::cout << "\n" << std::flush;
        if (!result.ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : cat(failed, " criteria failed")) << "\n";
    return failed;
}
