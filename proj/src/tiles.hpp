#pragma once

#include <string>
#include <vector>

#include "util.hpp"

// Tiles: each tile carries a set of features. Moving from tile u to tile v
// deletes every feature the two still share; if they share none the move is a
// teleport (forced when u is already empty). Goal: delete every feature.

namespace nythard::tiles {

struct Instance {
    std::vector<std::string> features;      // feature names, interned by index
    std::vector<std::vector<int>> tiles;    // feature ids per tile (sets)
};

std::vector<std::string> validate_instance(const Instance& inst);

// True iff every feature appears in an even number of tiles.
bool is_solvable(const Instance& inst);

struct GreedyOutcome {
    bool solvable = false;
    std::vector<int> moves;  // tile indices; first entry is the starting tile
};

// Start at the lowest-index non-empty tile; repeatedly move to the
// lowest-index tile sharing an undeleted feature, teleporting (always forced)
// to the lowest-index non-empty tile when the current one is exhausted.
GreedyOutcome solve_greedy(const Instance& inst);

struct MoveReport {
    std::vector<std::string> errors;  // malformed sequence; rest unset if non-empty
    bool all_deleted = false;
    int standard_moves = 0;
    int forced_teleports = 0;
    int unforced_teleports = 0;
    int max_combo = 0;
};

MoveReport verify_moves(const Instance& inst, const std::vector<int>& moves);

struct StructureGraph {
    int tile_count = 0;
    int feature_count = 0;
    std::vector<std::pair<int, int>> edges;  // (tile, feature)
};

StructureGraph build_structure_graph(const Instance& inst);

// Maximum pairwise intersection size; throws when the instance has < 2 tiles.
int sharing_number(const Instance& inst);

struct NoTeleportOutcome {
    bool solvable = false;
    std::vector<int> moves;
};

// Requires sharing number exactly 1 (throws otherwise). Decides via the
// structure graph: solvable without teleports iff the non-isolated part is
// connected, every feature vertex has even degree and at most two tile
// vertices have odd degree; the witness comes from an Eulerian trail.
NoTeleportOutcome no_teleport_solvable(const Instance& inst);

struct BruteOutcome {
    SearchStatus status = SearchStatus::exhausted;
    bool solvable = false;
};

// Exhaustive game-tree search, independent of the parity characterization.
BruteOutcome brute_force_solvable(const Instance& inst, Budget* budget = nullptr);

// Exhaustive search over standard moves only (no teleports at all).
BruteOutcome brute_force_no_teleport(const Instance& inst, Budget* budget = nullptr);

// Random instance over at most `max_tiles` tiles and `max_features` features.
Instance make_random_instance(uint64_t seed, int max_tiles, int max_features);

}  // namespace nythard::tiles
