#pragma once

#include <vector>

#include "source_problems.hpp"
#include "strands.hpp"

// Encodings into Strands instances: rectilinear 1-in-3-SAT via a line of
// two-mode variable gadgets wired to per-clause letter pairs, the 3x3 block
// expansion that forces orthogonal-style movement in king-move mode, and
// Flow-Free boards via checkerboard path words.

namespace nythard::strands {

struct OneInThreeLayout {
    struct VariableGadget {
        bool present = false;         // variables in no clause have no cells
        int top_row = 0, left_col = 0;  // origin of the 3 x (3k+3) band
        int incidences = 0;             // k
        std::vector<CellRC> e_cells;    // one per leg, in slot order
    };
    struct ClauseGadget {
        CellRC c_near, c_far;  // letter-C pair below/above the middle leg
    };
    struct Edge {
        int clause = -1, variable = -1;
        std::vector<CellRC> cells;  // gadget E first, then the external chain
    };
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
    std::vector<Edge> edges;
    int word_true = -1, word_false = -1;  // dictionary ids of "A" and "A*"
};

struct OneInThreeReduction {
    Instance instance;
    OneInThreeLayout layout;
};

// Instance is partitionable (in either adjacency mode) iff the formula has
// an assignment making exactly one variable per clause true.
OneInThreeReduction reduce_1in3(const sources::OneInThreeSat& f);

// Reads the word covering each gadget's first column off a verified
// partition: "A" means true, "A*" means false; variables without a gadget
// default to false. Throws unless the partition verifies.
sources::Assignment pullback_1in3(const OneInThreeReduction& red, const Partition& part,
                                  bool allow_diagonal);

// Blows every cell up to a 3x3 block whose perimeter carries one of four
// fresh colours (chosen by position parity); words gain matching colour
// frames. Preserves king-move solvability both ways and multiplies word
// lengths by nine.
Instance expand_blocks(const Instance& in);

// Projects a verified partition of the expanded instance back onto the
// source: every nine-cell colour frame must sit inside one 3x3 block, whose
// coordinates become one step of the source path. Throws when the partition
// does not verify or a frame straddles blocks.
Partition pullback_expansion(const Instance& source, const Instance& expanded,
                             const Partition& part, bool allow_diagonal);

struct FlowFree {
    struct ColorPair {
        std::string color;
        CellRC a, b;
    };
    int width = 0, height = 0;
    std::vector<ColorPair> pairs;
};

std::vector<std::string> validate_flowfree(const FlowFree& ff);

// Orthogonal-mode equivalence: terminals keep their colour letter, all other
// cells become a black/white checkerboard, and each colour's dictionary
// holds exactly the letter sequences of terminal-to-terminal paths.
Instance reduce_flowfree(const FlowFree& ff);

// Checks candidate paths (one per colour pair, in pair order) for the
// full-coverage rules: each runs terminal to terminal orthogonally in either
// direction and together they cover every board cell exactly once.
std::vector<std::string> verify_flowfree_paths(const FlowFree& ff,
                                               const std::vector<std::vector<CellRC>>& paths);

// Extracts the colour paths from a verified orthogonal partition of the
// reduced instance, oriented from each pair's first terminal.
std::vector<std::vector<CellRC>> pullback_flowfree(const FlowFree& ff, const Instance& reduced,
                                                   const Partition& part);

struct FlowOracleOutcome {
    SearchStatus status = SearchStatus::exhausted;
    bool solvable = false;
    std::vector<std::vector<CellRC>> paths;
};

// Direct backtracking over the Flow-Free board, independent of the Strands
// encoding; used to cross-check round trips.
FlowOracleOutcome oracle_flowfree(const FlowFree& ff, Budget* budget = nullptr);

}  // namespace nythard::strands
