#include "render.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "util.hpp"

namespace nythard::render {

namespace {

bool all_single_char(const std::vector<std::string>& alphabet) {
    for (const auto& s : alphabet)
        if (s.size() != 1) return false;
    return true;
}

std::string spell(const std::vector<std::string>& alphabet, const std::vector<int>& word) {
    const std::string sep = all_single_char(alphabet) ? "" : " ";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += sep;
        out += alphabet[static_cast<size_t>(word[i])];
    }
    return out;
}

// a, b, ..., z, aa, ab, ... — compact region labels.
std::string letter_label(int index) {
    std::string out;
    int n = index;
    do {
        out.insert(out.begin(), static_cast<char>('a' + n % 26));
        n = n / 26 - 1;
    } while (n >= 0);
    return out;
}

std::string constraint_text(const pips::Constraint& c) {
    switch (c.kind) {
        case pips::ConstraintKind::eq: return "eq";
        case pips::ConstraintKind::neq: return "neq";
        case pips::ConstraintKind::sum_eq: return cat("sum=", c.n);
        case pips::ConstraintKind::sum_lt: return cat("sum<", c.n);
        case pips::ConstraintKind::sum_gt: return cat("sum>", c.n);
    }
    return "?";
}

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
constexpr int kPaletteSize = 10;

}  // namespace

std::string letterboxed_ascii(const letterboxed::Puzzle& p, const letterboxed::Solution* sol) {
    std::ostringstream out;
    out << "sides:\n";
    for (int s = 0; s < p.side_count(); ++s) {
        out << "  " << (s + 1) << ":";
        const auto& counts = p.side_counts[static_cast<size_t>(s)];
        for (size_t sym = 0; sym < counts.size(); ++sym)
            for (int rep = 0; rep < counts[sym]; ++rep) out << " " << p.alphabet[sym];
        out << "\n";
    }
    out << "dictionary:\n";
    for (size_t w = 0; w < p.dictionary.size(); ++w)
        out << "  " << w << ": " << spell(p.alphabet, p.dictionary[w]) << "\n";
    if (sol) {
        out << "solution:";
        for (int w : sol->words) out << " " << spell(p.alphabet, p.dictionary[static_cast<size_t>(w)]);
        out << "\n";
        out << "side trace:";
        for (int s : sol->side_trace) out << " " << (s + 1);
        out << "\n";
    }
    return out.str();
}

std::string pips_ascii(const pips::Puzzle& p, const pips::Tiling* tiling) {
    std::ostringstream out;
    if (p.cells.empty()) return "(empty board)\n";

    int min_x = p.cells[0].x, max_x = p.cells[0].x;
    int min_y = p.cells[0].y, max_y = p.cells[0].y;
    for (const auto& c : p.cells) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }

    std::map<pips::Cell, std::string> text;
    for (const auto& c : p.cells) text[c] = ".";
    for (size_t i = 0; i < p.constraints.size(); ++i)
        for (const auto& c : p.constraints[i].region) text[c] = letter_label(static_cast<int>(i));
    if (tiling) {
        for (const auto& pl : *tiling) {
            text[pl.cell_a] = cat(pl.value_a);
            text[pl.cell_b] = cat(pl.value_b);
        }
    }

    size_t width = 1;
    for (const auto& [cell, t] : text) width = std::max(width, t.size());

    for (int y = min_y; y <= max_y; ++y) {
        for (int x = min_x; x <= max_x; ++x) {
            auto it = text.find({x, y});
            std::string t = it == text.end() ? "" : it->second;
            out << std::string(width - t.size(), ' ') << t << (x < max_x ? " " : "");
        }
        out << "\n";
    }

    std::map<std::pair<long long, long long>, int> histogram;
    for (const auto& d : p.dominoes)
        histogram[{std::min(d.a, d.b), std::max(d.a, d.b)}]++;
    out << "dominoes:";
    for (const auto& [pair, count] : histogram)
        out << " " << count << "x[" << pair.first << "|" << pair.second << "]";
    out << "\n";
    for (size_t i = 0; i < p.constraints.size(); ++i)
        out << "  " << letter_label(static_cast<int>(i)) << ": " << constraint_text(p.constraints[i])
            << " (" << p.constraints[i].region.size() << " cells)\n";
    return out.str();
}

std::string strands_ascii(const strands::Instance& inst, const strands::Partition* part) {
    std::ostringstream out;
    for (const auto& row : inst.grid) out << spell(inst.alphabet, row) << "\n";
    if (part) {
        for (const auto& pl : *part) {
            out << "word " << pl.word << " ("
                << spell(inst.alphabet, inst.dictionary[static_cast<size_t>(pl.word)]) << "):";
            for (const auto& [r, c] : pl.cells) out << " (" << r << "," << c << ")";
            out << "\n";
        }
    }
    return out.str();
}

std::string tiles_ascii(const tiles::Instance& inst, const std::vector<int>* moves) {
    std::ostringstream out;
    for (size_t t = 0; t < inst.tiles.size(); ++t) {
        out << "tile " << t << ":";
        if (inst.tiles[t].empty()) out << " (empty)";
        for (int f : inst.tiles[t]) out << " " << inst.features[static_cast<size_t>(f)];
        out << "\n";
    }
    if (moves) {
        out << "moves:";
        for (int m : *moves) out << " " << m;
        out << "\n";
    }
    return out.str();
}

std::string pips_svg(const pips::Puzzle& p, const pips::Tiling* tiling) {
    constexpr int kScale = 32, kMargin = 16;
    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    if (!p.cells.empty()) {
        min_x = max_x = p.cells[0].x;
        min_y = max_y = p.cells[0].y;
        for (const auto& c : p.cells) {
            min_x = std::min(min_x, c.x);
            max_x = std::max(max_x, c.x);
            min_y = std::min(min_y, c.y);
            max_y = std::max(max_y, c.y);
        }
    }
    const int w = (max_x - min_x + 1) * kScale + 2 * kMargin;
    const int h = (max_y - min_y + 1) * kScale + 2 * kMargin;
    auto px = [&](int x) { return kMargin + (x - min_x) * kScale; };
    auto py = [&](int y) { return kMargin + (y - min_y) * kScale; };

    std::map<pips::Cell, int> region_of;
    for (size_t i = 0; i < p.constraints.size(); ++i)
        for (const auto& c : p.constraints[i].region) region_of[c] = static_cast<int>(i);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (const auto& c : p.cells) {
        auto it = region_of.find(c);
        const char* fill = it == region_of.end() ? "#ffffff" : kPalette[it->second % kPaletteSize];
        out << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y) << "\" width=\"" << kScale
            << "\" height=\"" << kScale << "\" fill=\"" << fill
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    // Heavy outline where a region edge meets a different region or nothing.
    for (size_t i = 0; i < p.constraints.size(); ++i) {
        for (const auto& c : p.constraints[i].region) {
            const int x0 = px(c.x), y0 = py(c.y);
            auto foreign = [&](int dx, int dy) {
                auto it = region_of.find({c.x + dx, c.y + dy});
                return it == region_of.end() || it->second != static_cast<int>(i);
            };
            auto line = [&](int x1, int y1, int x2, int y2) {
                out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
                    << y2 << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
            };
            if (foreign(0, -1)) line(x0, y0, x0 + kScale, y0);
            if (foreign(0, 1)) line(x0, y0 + kScale, x0 + kScale, y0 + kScale);
            if (foreign(-1, 0)) line(x0, y0, x0, y0 + kScale);
            if (foreign(1, 0)) line(x0 + kScale, y0, x0 + kScale, y0 + kScale);
        }
    }
    for (size_t i = 0; i < p.constraints.size(); ++i) {
        if (p.constraints[i].region.empty()) continue;
        const auto& c = p.constraints[i].region.front();
        out << "  <text x=\"" << px(c.x) + 2 << "\" y=\"" << py(c.y) + 10
            << "\" font-size=\"8\" fill=\"#333333\">" << constraint_text(p.constraints[i])
            << "</text>\n";
    }
    if (tiling) {
        for (const auto& pl : *tiling) {
            const int x0 = std::min(px(pl.cell_a.x), px(pl.cell_b.x));
            const int y0 = std::min(py(pl.cell_a.y), py(pl.cell_b.y));
            const int rw = std::abs(px(pl.cell_a.x) - px(pl.cell_b.x)) + kScale;
            const int rh = std::abs(py(pl.cell_a.y) - py(pl.cell_b.y)) + kScale;
            out << "  <rect x=\"" << x0 + 3 << "\" y=\"" << y0 + 3 << "\" width=\"" << rw - 6
                << "\" height=\"" << rh - 6
                << "\" rx=\"6\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
            auto value_text = [&](const pips::Cell& c, long long v) {
                out << "  <text x=\"" << px(c.x) + kScale / 2 << "\" y=\"" << py(c.y) + kScale / 2 + 5
                    << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#000000\">" << v
                    << "</text>\n";
            };
            value_text(pl.cell_a, pl.value_a);
            value_text(pl.cell_b, pl.value_b);
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string strands_svg(const strands::Instance& inst, const strands::Partition* part) {
    constexpr int kScale = 28, kMargin = 14;
    const int w = inst.cols() * kScale + 2 * kMargin;
    const int h = inst.rows() * kScale + 2 * kMargin;
    auto cx = [&](int c) { return kMargin + c * kScale + kScale / 2; };
    auto cy = [&](int r) { return kMargin + r * kScale + kScale / 2; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    if (part) {
        for (size_t i = 0; i < part->size(); ++i) {
            const auto& pl = (*part)[i];
            const char* color = kPalette[i % kPaletteSize];
            if (pl.cells.size() > 1) {
                out << "  <polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"10\" stroke-linecap=\"round\" stroke-linejoin=\"round\" "
                       "opacity=\"0.8\" points=\"";
                for (size_t j = 0; j < pl.cells.size(); ++j) {
                    if (j) out << " ";
                    out << cx(pl.cells[j].second) << "," << cy(pl.cells[j].first);
                }
                out << "\"/>\n";
            }
            out << "  <circle cx=\"" << cx(pl.cells.front().second) << "\" cy=\""
                << cy(pl.cells.front().first) << "\" r=\"9\" fill=\"" << color
                << "\" opacity=\"0.8\"/>\n";
        }
    }
    for (int r = 0; r < inst.rows(); ++r) {
        for (int c = 0; c < inst.cols(); ++c) {
            out << "  <text x=\"" << cx(c) << "\" y=\"" << cy(r) + 5
                << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"monospace\">"
                << inst.alphabet[static_cast<size_t>(inst.grid[static_cast<size_t>(r)]
                                                         [static_cast<size_t>(c)])]
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace nythard::render
