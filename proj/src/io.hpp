#pragma once

#include <string>

#include "json.hpp"
#include "letterboxed.hpp"
#include "letterboxed_reductions.hpp"
#include "pips.hpp"
#include "pips_reductions.hpp"
#include "source_problems.hpp"
#include "strands.hpp"
#include "strands_reductions.hpp"
#include "tiles.hpp"

// JSON bindings for every on-disk format. Loading throws
// std::invalid_argument with a message; canonical output sorts keys (the
// default object ordering) and ends with a newline.

namespace nythard::io {

using nlohmann::json;

std::string canonical(const json& j);
json parse_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// ------------------------------------------------------------- letter boxed
// Puzzle: alphabet, dictionary (words as symbol-spelling lists), sides
// (symbol lists; repeats encode multiplicity).
json save_lb_puzzle(const letterboxed::Puzzle& p);
letterboxed::Puzzle load_lb_puzzle(const json& j);

// Solution: words (indices), sideTrace (1-based sides).
json save_lb_solution(const letterboxed::Solution& s);
letterboxed::Solution load_lb_solution(const json& j);

json save_nae_reduction(const letterboxed::NaeReduction& red);
letterboxed::NaeReduction load_nae_reduction(const json& j, letterboxed::Puzzle puzzle);

json save_3dm_reduction(const letterboxed::ThreeDmReduction& red);
letterboxed::ThreeDmReduction load_3dm_reduction(const json& j, letterboxed::Puzzle puzzle);

json save_lift(const letterboxed::LiftedPuzzle& lifted);

// --------------------------------------------------------------------- pips
json save_pips_puzzle(const pips::Puzzle& p);
pips::Puzzle load_pips_puzzle(const json& j);

json save_pips_tiling(const pips::Tiling& t);
pips::Tiling load_pips_tiling(const json& j);

json save_pips_1in3(const pips::OneInThreeReduction& red);
pips::OneInThreeReduction load_pips_1in3(const json& j, pips::Puzzle puzzle);

// ------------------------------------------------------------------ strands
// Grid and words serialize as plain strings when every symbol spells as a
// single character, and as spelling lists otherwise; both forms load.
json save_strands_instance(const strands::Instance& inst);
strands::Instance load_strands_instance(const json& j);

// Placement list plus the optional v1/v2 certificate matrices; a bare list
// of placements also loads.
json save_strands_partition(const strands::Instance& inst, const strands::Partition& part,
                            bool with_certificate);
strands::Partition load_strands_partition(const strands::Instance& inst, const json& j);

json save_strands_1in3(const strands::OneInThreeReduction& red);
strands::OneInThreeReduction load_strands_1in3(const json& j, strands::Instance instance);

json save_flowfree(const strands::FlowFree& ff);
strands::FlowFree load_flowfree(const json& j);

// -------------------------------------------------------------------- tiles
json save_tiles_instance(const tiles::Instance& inst);
tiles::Instance load_tiles_instance(const json& j);

json save_tiles_moves(const std::vector<int>& moves);
std::vector<int> load_tiles_moves(const json& j);

// ---------------------------------------------------------- source problems
// One schema per kind, tagged: {"kind": "nae3sat" | "1in3" | "3dm" |
// "subsetsum", ...}; 1-in-3 instances carry their embedding inline.
json save_nae(const sources::Nae3Sat& f);
sources::Nae3Sat load_nae(const json& j);

json save_1in3(const sources::OneInThreeSat& f);
sources::OneInThreeSat load_1in3(const json& j);

json save_3dm(const sources::ThreeDimMatching& t);
sources::ThreeDimMatching load_3dm(const json& j);

json save_subset_sum(const sources::SubsetSum& s);
sources::SubsetSum load_subset_sum(const json& j);

}  // namespace nythard::io
