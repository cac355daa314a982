#pragma once

#include <map>
#include <string>
#include <vector>

#include "letterboxed.hpp"
#include "source_problems.hpp"

// Encodings of not-all-equal 3-SAT and 3-dimensional matching into Letter
// Boxed puzzles, plus the side-count lifting that adds one side, and the maps
// pulling solutions back to the source problems.

namespace nythard::letterboxed {

struct NaeReduction {
    Puzzle puzzle;            // S = 4, |dictionary| = 1
    int k = 1;                // always 1
    std::vector<int> variable_order;
    std::map<int, int> occurrence_count;   // variable -> number of clauses
    std::vector<size_t> first_occurrence;  // variable -> index into the word
};

NaeReduction reduce_nae3sat(const sources::Nae3Sat& f);

// Reads the side of each variable's first occurrence: side 2 -> true,
// side 3 -> false. Throws unless `sol` verifies at k = 1.
sources::Assignment pullback_nae(const NaeReduction& red, const Solution& sol);

struct ThreeDmReduction {
    Puzzle puzzle;                   // words all of length 5
    int k = 0;                       // = n
    std::vector<int> triple_of_word;  // dictionary index -> source triple index
};

ThreeDmReduction reduce_3dm(const sources::ThreeDimMatching& inst);

// Returns source triple indices named by the solution's words.
std::vector<int> pullback_3dm(const sources::ThreeDimMatching& inst,
                              const ThreeDmReduction& red, const Solution& sol);

struct LiftedPuzzle {
    Puzzle puzzle;  // S + 1 sides
    int k = 0;      // k + S + n - 1
};

// Adds one side holding fresh symbols {s, e} plus n-1 copies of a fresh #;
// solvability at k carries over to the lifted puzzle at the adjusted budget.
LiftedPuzzle lift_sides(const Puzzle& p, int k);

// Recovers an original-puzzle solution from a lifted one: marker words are
// dropped, prefixed/suffixed words map back to their base word, and the side
// trace restricts to the surviving letters. Throws unless `sol` verifies
// against the lifted puzzle.
Solution pullback_lift(const Puzzle& original, const LiftedPuzzle& lifted, const Solution& sol);

}  // namespace nythard::letterboxed
