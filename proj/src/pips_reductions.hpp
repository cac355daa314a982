#pragma once

#include <vector>

#include "pips.hpp"
#include "source_problems.hpp"

// Encodings of rectilinear 1-in-3-SAT and subset sum into Pips boards. The
// 1-in-3 construction uses only (0,0) and (1,1) dominoes: variable gadgets
// are equality regions whose branch tips poke into per-clause sum-1 strips.

namespace nythard::pips {

struct OneInThreeLayout {
    struct VariableGadget {
        bool present = false;         // variables in no clause have no cells
        std::vector<Cell> cells;      // horizontal base plus vertical branches
        std::vector<Cell> eq_region;  // cells minus the branch tips
        std::vector<Cell> tips;       // one per clause incidence
    };
    struct ClauseGadget {
        int row = 0;                // signed strip row (positive above)
        std::vector<Cell> tips;     // three tip cells, left to right
        std::vector<Cell> body;     // strip cells between tips plus two bumps
    };
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
    std::vector<Cell> connectors;  // row-0 filler pairs (connected mode)
    std::vector<Cell> cleanup;     // unconstrained strip absorbing leftovers
    long long zeros = 0, ones = 0;
};

struct OneInThreeReduction {
    Puzzle puzzle;
    OneInThreeLayout layout;
    bool connected = false;
};

// Board is solvable iff the formula has an assignment making exactly one
// variable per clause true. With `connected` the row-0 gaps between variable
// bases are filled by forced-zero pairs so the board is a single polyomino.
OneInThreeReduction reduce_1in3(const sources::OneInThreeSat& f, bool connected = false);

// Reads each variable's equality region off a verified tiling; variables
// without cells default to false. Throws unless the tiling verifies.
sources::Assignment pullback_1in3(const OneInThreeReduction& red, const Tiling& t);

struct SubsetSumReduction {
    Puzzle puzzle;  // 2 x n board, dominoes (x_i, 0), one sum constraint
};

// Solvable iff some subset of the elements sums to the target: the
// constrained row receives one half of every domino, and any mix of
// horizontal and vertical placements realizes exactly the subset sums.
SubsetSumReduction reduce_subset_sum(const sources::SubsetSum& s);

// Elements whose value landed in the constrained row; their sum equals the
// target. Throws unless the tiling verifies.
std::vector<int> pullback_subset_sum(const SubsetSumReduction& red, const Tiling& t);

}  // namespace nythard::pips
