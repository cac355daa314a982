#pragma once

#include <string>
#include <vector>

#include "letterboxed.hpp"
#include "pips.hpp"
#include "strands.hpp"
#include "tiles.hpp"

// Human-oriented views of puzzles and witnesses. ASCII output exists for
// every game; SVG is available for the two grid games (pips, strands).
// Presentation only — nothing downstream parses these.

namespace nythard::render {

std::string letterboxed_ascii(const letterboxed::Puzzle& p,
                              const letterboxed::Solution* sol = nullptr);
std::string pips_ascii(const pips::Puzzle& p, const pips::Tiling* tiling = nullptr);
std::string strands_ascii(const strands::Instance& inst,
                          const strands::Partition* part = nullptr);
std::string tiles_ascii(const tiles::Instance& inst, const std::vector<int>* moves = nullptr);

std::string pips_svg(const pips::Puzzle& p, const pips::Tiling* tiling = nullptr);
std::string strands_svg(const strands::Instance& inst,
                        const strands::Partition* part = nullptr);

}  // namespace nythard::render
