#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "util.hpp"

// Pips: place every domino exactly once onto the board cells so that all
// region constraints hold. Boards are arbitrary (possibly disconnected) cell
// sets; pip values are unbounded non-negative integers.

namespace nythard::pips {

struct Cell {
    int x = 0, y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    // Row-major comparison: y first, then x.
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

struct Domino {
    long long a = 0, b = 0;
    friend bool operator==(const Domino&, const Domino&) = default;
};

enum class ConstraintKind { eq, neq, sum_eq, sum_lt, sum_gt };

struct Constraint {
    std::vector<Cell> region;
    ConstraintKind kind = ConstraintKind::eq;
    long long n = 0;  // used by the sum kinds only
};

struct Puzzle {
    std::vector<Cell> cells;
    std::vector<Domino> dominoes;
    std::vector<Constraint> constraints;
};

struct Placement {
    int domino = -1;
    Cell cell_a, cell_b;
    long long value_a = 0, value_b = 0;
};

using Tiling = std::vector<Placement>;

std::vector<std::string> validate_puzzle(const Puzzle& p);
std::vector<std::string> verify_tiling(const Puzzle& p, const Tiling& t);

struct SolveOptions {
    bool use_sum_pruning = true;  // admissible bound pruning for sum regions
    Budget* budget = nullptr;
};

struct SolveOutcome {
    SearchStatus status;  // found / exhausted (unsolvable) / budget
    Tiling tiling;
};

// Backtracking over the lowest uncovered cell in row-major order; dominoes
// are tried in input order with (a,b) then (b,a) value flips.
SolveOutcome solve(const Puzzle& p, const SolveOptions& opts = {});

struct EnumerateOutcome {
    SearchStatus status;
    std::vector<Tiling> tilings;
    bool truncated = false;  // hit the requested limit
};

EnumerateOutcome enumerate_tilings(const Puzzle& p, size_t limit, const SolveOptions& opts = {});

// Distinct tiling shapes (ignoring values and domino identities) of the
// board; used by the reduction gadget uniqueness assertions.
size_t count_tiling_shapes(const std::vector<Cell>& cells, size_t limit = 16);

}  // namespace nythard::pips
