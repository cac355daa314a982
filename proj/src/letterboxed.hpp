#pragma once

#include <optional>
#include <string>
#include <vector>

#include "util.hpp"

// Letter Boxed generalized to S sides of common cardinality n over an
// arbitrary symbol alphabet. A solution is a chained word sequence whose
// trace walks the sides (never the same side twice in a row, except that a
// word's final character and the next word's first character share a side)
// and covers every side's multiset of symbols.

namespace nythard::letterboxed {

struct Puzzle {
    std::vector<std::string> alphabet;          // symbol spellings
    std::vector<std::vector<int>> dictionary;   // words as symbol-id strings
    std::vector<std::vector<int>> side_counts;  // [side][symbol] -> multiplicity

    int symbol_count() const { return static_cast<int>(alphabet.size()); }
    int side_count() const { return static_cast<int>(side_counts.size()); }
    int side_cardinality(int side) const {
        int n = 0;
        for (int c : side_counts[static_cast<size_t>(side)]) n += c;
        return n;
    }
};

struct Solution {
    std::vector<int> words;       // dictionary indices, in play order
    std::vector<int> side_trace;  // zero-based side per character of the full
                                  // concatenation (pivots appear twice)
};

std::vector<std::string> validate_puzzle(const Puzzle& p);

// Empty result means the solution is valid for the word budget k.
std::vector<std::string> verify_solution(const Puzzle& p, const Solution& s, long long k);

// Upper bound from the state-trimming argument: a solvable puzzle has a
// solution with at most S^2 * |Sigma| * n words.
long long certificate_bound(const Puzzle& p);

struct DpOutcome {
    SearchStatus status;  // found / exhausted (unsolvable) / budget
    long long value = -1;
    Solution witness;
};

// Shortest-path (0-1 BFS) over the lazily expanded state graph
// (side, residual coverage, word, position). Optimal word count.
DpOutcome min_words_dp(const Puzzle& p, Budget* budget = nullptr);

// Same graph with continuation edges at weight 1: optimal count of character
// placements, where a chaining pivot is placed (and counted) only once.
DpOutcome min_letters_dp(const Puzzle& p, Budget* budget = nullptr);

struct SearchOutcome {
    SearchStatus status;  // found / exhausted (no solution within k_max) / budget
    Solution witness;
};

// Depth-first search over word-boundary states with failure memoization;
// complete for the bound: status `exhausted` proves no solution with at most
// k_max words exists.
SearchOutcome solve_search(const Puzzle& p, long long k_max, Budget* budget = nullptr);

struct BruteOutcome {
    SearchStatus status;
    long long value = -1;
    Solution witness;
};

// Independent oracle: enumerates word sequences and side traces directly,
// pruning only sequence prefixes that revisit a boundary state on the
// current path (such prefixes never start a minimum solution) and branches
// that cannot beat the best solution found so far.
BruteOutcome brute_force_min_words(const Puzzle& p, long long k_cap, Budget* budget = nullptr);

struct RandomPuzzleParams {
    int sides = 4;
    int side_cardinality_max = 2;
    int symbols_max = 3;
    int words_max = 5;
    int word_length_max = 4;
};

// Small seeded instances for cross-checking the optimizing solvers against
// the brute-force oracle; (params, seed) fully determine the puzzle.
Puzzle make_random_puzzle(uint64_t seed, const RandomPuzzleParams& params = {});

}  // namespace nythard::letterboxed
