#pragma once

#include <string>
#include <utility>
#include <vector>

#include "util.hpp"

// Strands-style grid partitions: tile the whole grid with non-crossing paths
// that each spell a dictionary word. Words may be reused any number of
// times; adjacency is king-move by default with a 4-neighbour mode.

namespace nythard::strands {

struct Instance {
    std::vector<std::string> alphabet;          // symbol spellings
    std::vector<std::vector<int>> grid;         // [row][col] -> symbol id
    std::vector<std::vector<int>> dictionary;   // words as symbol-id strings

    int rows() const { return static_cast<int>(grid.size()); }
    int cols() const { return grid.empty() ? 0 : static_cast<int>(grid.front().size()); }
};

std::vector<std::string> validate_instance(const Instance& inst);

using CellRC = std::pair<int, int>;  // (row, col)

struct Placement {
    int word = -1;                // dictionary index
    std::vector<CellRC> cells;    // path, one cell per word character

    auto operator<=>(const Placement&) const = default;
};

using Partition = std::vector<Placement>;

// Empty result means the placements tile the grid exactly and every path
// spells its word along adjacent, pairwise distinct cells.
std::vector<std::string> verify_partition(const Instance& inst, const Partition& part,
                                          bool allow_diagonal);

// Every path of every word, ordered by word index, then start cell in
// row-major order, then depth-first neighbour order (u, r, d, l, ur, dr,
// dl, ul). A reversed path is a distinct placement.
std::vector<Placement> enumerate_placements(const Instance& inst, bool allow_diagonal);

struct SolveOptions {
    bool allow_diagonal = true;
    bool most_constrained = false;  // default branches on the first uncovered cell
    Budget* budget = nullptr;
};

struct SolveOutcome {
    SearchStatus status;  // found / exhausted (no partition) / budget
    Partition partition;
};

SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {});

struct EnumerateOutcome {
    SearchStatus status;
    std::vector<Partition> partitions;
    bool truncated = false;  // hit the requested limit
};

EnumerateOutcome enumerate_partitions(const Instance& inst, size_t limit,
                                      const SolveOptions& opts = {});

// Compact partition witness: per-cell roles (S = chain start, C = interior,
// E = chain end or single-cell word) and per-cell step directions toward the
// next path cell (end cells carry the ignored placeholder "u").
struct Certificate {
    std::vector<std::string> roles;                // rows of S/C/E characters
    std::vector<std::vector<std::string>> steps;   // direction name per cell
};

Certificate export_certificate(const Instance& inst, const Partition& part);

// Rebuilds placements by walking S-chains in row-major order, then taking
// the remaining E cells as single-cell words. Throws on inconsistencies.
Partition import_certificate(const Instance& inst, const Certificate& cert);

}  // namespace nythard::strands
