#include "strands_reductions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace nythard::strands {

namespace {

void require_valid(const std::vector<std::string>& errors, const char* what) {
    if (!errors.empty()) throw std::invalid_argument(cat(what, ": ", join(errors, "; ")));
}

// Symbol ids inside reduced 1-in-3 instances.
enum Sym { kBlank = 0, kA = 1, kStar = 2, kHash = 3, kB = 4, kE = 5, kF = 6, kC = 7 };

Instance base_instance() {
    Instance inst;
    inst.alphabet = {".", "A", "*", "#", "B", "E", "F", "C"};
    inst.dictionary = {
        {kBlank},                  // 0
        {kA},                      // 1: claims the gadget mode "true"
        {kA, kStar},               // 2: claims the gadget mode "false"
        {kStar, kHash, kB, kE},    // 3: true-mode module chain
        {kHash, kB, kStar},        // 4: false-mode module chain
        {kE, kF},                  // 5: edge chain pair
        {kF, kC, kC},              // 6: clause collector
    };
    return inst;
}

struct LetterMap {
    std::map<CellRC, int> letters;

    void claim(CellRC cell, int sym) {
        if (!letters.emplace(cell, sym).second)
            throw std::logic_error(
                cat("cell (", cell.first, ",", cell.second, ") lettered twice"));
    }
};

// Builds the isolated 3 x (3k+3) gadget with E cells on the given rows
// (0 = top, 2 = bottom), optionally with the E cells blanked out.
Instance isolated_gadget(const std::vector<int>& e_rows, bool blank_e) {
    const int k = static_cast<int>(e_rows.size());
    Instance inst = base_instance();
    inst.grid.assign(3, std::vector<int>(static_cast<size_t>(3 * k + 3), kBlank));
    inst.grid[1][0] = kA;
    for (int m = 0; m <= k; ++m) inst.grid[1][static_cast<size_t>(3 * m + 1)] = kStar;
    for (int m = 1; m <= k; ++m) {
        inst.grid[1][static_cast<size_t>(3 * m - 1)] = kHash;
        inst.grid[1][static_cast<size_t>(3 * m)] = kB;
        if (!blank_e)
            inst.grid[static_cast<size_t>(e_rows[static_cast<size_t>(m - 1)])]
                     [static_cast<size_t>(3 * m)] = kE;
    }
    inst.grid[1][static_cast<size_t>(3 * k + 2)] = kA;
    return inst;
}

void audit_gadget_modes(const std::vector<int>& e_rows) {
    for (const bool blank_e : {false, true}) {
        Instance inst = isolated_gadget(e_rows, blank_e);
        for (const bool diag : {true, false}) {
            SolveOptions opts;
            opts.allow_diagonal = diag;
            auto res = enumerate_partitions(inst, 2, opts);
            if (res.partitions.size() != 1)
                throw std::logic_error(
                    cat("gadget admits ", res.partitions.size(),
                        blank_e ? " coverings without its E cells" : " full coverings"));
        }
    }
}

}  // namespace

OneInThreeReduction reduce_1in3(const sources::OneInThreeSat& f) {
    require_valid(sources::validate_embedding(f), "1-in-3 instance");
    if (f.clauses.empty()) throw std::invalid_argument("1-in-3 instance: no clauses");

    const size_t vars = f.variables.size();
    OneInThreeReduction red;
    red.instance = base_instance();
    red.layout.word_true = 1;
    red.layout.word_false = 2;
    red.layout.variables.resize(vars);

    // Per-variable legs sorted by slot; gadgets line up left to right in
    // slot-range order with a two-column moat between them.
    struct Leg {
        int slot = 0, clause = -1;
        int sign = 1;  // +1 below the line (rows grow downward), -1 above
        int g = 0;     // external chain length of the middle leg
    };
    std::vector<std::vector<Leg>> legs(vars);
    for (size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& pl = f.placements[c];
        for (int i = 0; i < 3; ++i) {
            Leg leg;
            leg.slot = pl.slots[static_cast<size_t>(i)];
            leg.clause = static_cast<int>(c);
            leg.sign = pl.side == sources::Side::above ? -1 : 1;
            leg.g = 4 * pl.level - 3;
            legs[static_cast<size_t>(f.clauses[c][static_cast<size_t>(i)])].push_back(leg);
        }
    }
    for (auto& ls : legs)
        std::stable_sort(ls.begin(), ls.end(),
                         [](const Leg& a, const Leg& b) { return a.slot < b.slot; });

    std::vector<size_t> order;  // present variables in slot-range order
    for (size_t v = 0; v < vars; ++v)
        if (!legs[v].empty()) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return legs[a].front().slot < legs[b].front().slot; });

    LetterMap map;
    // Rows are relative to the gadget band: -1 top, 0 middle, 1 bottom.
    std::map<std::pair<int, int>, CellRC> e_cell_of;  // (clause, slot) -> E cell
    int cursor = 0;
    for (size_t v : order) {
        auto& g = red.layout.variables[v];
        g.present = true;
        g.top_row = -1;
        g.left_col = cursor;
        g.incidences = static_cast<int>(legs[v].size());
        const int k = g.incidences;
        map.claim({0, cursor}, kA);
        for (int m = 0; m <= k; ++m) map.claim({0, cursor + 3 * m + 1}, kStar);
        for (int m = 1; m <= k; ++m) {
            map.claim({0, cursor + 3 * m - 1}, kHash);
            map.claim({0, cursor + 3 * m}, kB);
            const Leg& leg = legs[v][static_cast<size_t>(m - 1)];
            CellRC e{leg.sign, cursor + 3 * m};
            map.claim(e, kE);
            g.e_cells.push_back(e);
            e_cell_of[{leg.clause, leg.slot}] = e;
        }
        map.claim({0, cursor + 3 * k + 2}, kA);

        std::vector<int> e_rows;
        for (const Leg& leg : legs[v]) e_rows.push_back(leg.sign == -1 ? 0 : 2);
        audit_gadget_modes(e_rows);
        cursor += 3 * k + 3 + 2;
    }
    const int total_cols = cursor - 2;

    // Clause letter pairs and edge chains. Externals alternate F, E, F, ...
    // so an odd chain ends with an F next to the clause's C pair.
    red.layout.clauses.resize(f.clauses.size());
    for (size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& pl = f.placements[c];
        const int sign = pl.side == sources::Side::above ? -1 : 1;
        const int g = 4 * pl.level - 3;
        const int e_row = sign;  // gadget row the edges leave from

        std::array<CellRC, 3> es;
        for (int i = 0; i < 3; ++i) es[static_cast<size_t>(i)] = e_cell_of.at({static_cast<int>(c), pl.slots[static_cast<size_t>(i)]});
        std::sort(es.begin(), es.end(),
                  [](CellRC a, CellRC b) { return a.second < b.second; });
        const int c1 = es[0].second, c2 = es[1].second, c3 = es[2].second;

        auto& gad = red.layout.clauses[c];
        gad.c_near = {e_row + sign * (g + 1), c2};
        gad.c_far = {e_row + sign * (g + 2), c2};
        map.claim(gad.c_near, kC);
        map.claim(gad.c_far, kC);

        auto add_edge = [&](CellRC e_cell, const std::vector<CellRC>& externals) {
            OneInThreeLayout::Edge edge;
            edge.clause = static_cast<int>(c);
            for (size_t v = 0; v < vars; ++v) {
                const auto& vc = red.layout.variables[v].e_cells;
                if (std::find(vc.begin(), vc.end(), e_cell) != vc.end())
                    edge.variable = static_cast<int>(v);
            }
            edge.cells.push_back(e_cell);
            for (size_t i = 0; i < externals.size(); ++i) {
                map.claim(externals[i], i % 2 == 0 ? kF : kE);
                edge.cells.push_back(externals[i]);
            }
            if (externals.size() % 2 == 0)
                throw std::logic_error("edge chain should have odd length");
            red.layout.edges.push_back(std::move(edge));
        };

        // Middle leg: straight run to the C pair.
        {
            std::vector<CellRC> ext;
            for (int i = 1; i <= g; ++i) ext.push_back({e_row + sign * i, c2});
            add_edge(es[1], ext);
        }
        // Side legs: run to the C-pair row of matching parity, then turn.
        for (int side_leg : {0, 2}) {
            const int col = side_leg == 0 ? c1 : c3;
            const int delta = std::abs(c2 - col);
            const int turn_row =
                (g + delta) % 2 == 1 ? gad.c_near.first : gad.c_far.first;
            std::vector<CellRC> ext;
            for (int r = e_row + sign; r != turn_row + sign; r += sign) ext.push_back({r, col});
            if (side_leg == 0)
                for (int x = col + 1; x <= c2 - 1; ++x) ext.push_back({turn_row, x});
            else
                for (int x = col - 1; x >= c2 + 1; --x) ext.push_back({turn_row, x});
            add_edge(es[static_cast<size_t>(side_leg)], ext);
        }
    }

    // Adjacency audit: an E next to an F must be a consecutive pair of one
    // edge chain, or the single word "EF" could jump between chains.
    {
        std::map<CellRC, std::pair<size_t, size_t>> chain_pos;  // cell -> (edge, index)
        for (size_t e = 0; e < red.layout.edges.size(); ++e)
            for (size_t i = 0; i < red.layout.edges[e].cells.size(); ++i)
                chain_pos[red.layout.edges[e].cells[i]] = {e, i};
        for (const auto& [cell, sym] : map.letters) {
            if (sym != kE && sym != kF) continue;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    CellRC other{cell.first + dr, cell.second + dc};
                    auto it = map.letters.find(other);
                    if (it == map.letters.end()) continue;
                    const int osym = it->second;
                    if (osym != kE && osym != kF) continue;
                    if (sym == osym) continue;
                    const auto a = chain_pos.at(cell), b = chain_pos.at(other);
                    if (a.first != b.first ||
                        (a.second > b.second ? a.second - b.second : b.second - a.second) != 1)
                        throw std::logic_error("stray E-F adjacency between chains");
                }
        }
    }

    // Normalize rows to start at zero and materialize the grid.
    int min_row = -1, max_row = 1;
    for (const auto& [cell, sym] : map.letters) {
        min_row = std::min(min_row, cell.first);
        max_row = std::max(max_row, cell.first);
    }
    const int off = -min_row;
    const int rows = max_row - min_row + 1;
    red.instance.grid.assign(static_cast<size_t>(rows),
                             std::vector<int>(static_cast<size_t>(total_cols), kBlank));
    for (const auto& [cell, sym] : map.letters)
        red.instance.grid[static_cast<size_t>(cell.first + off)][static_cast<size_t>(cell.second)] =
            sym;

    for (auto& g : red.layout.variables) {
        if (!g.present) continue;
        g.top_row += off;
        for (auto& e : g.e_cells) e.first += off;
    }
    for (auto& g : red.layout.clauses) {
        g.c_near.first += off;
        g.c_far.first += off;
    }
    for (auto& e : red.layout.edges)
        for (auto& cell : e.cells) cell.first += off;

    require_valid(validate_instance(red.instance), "reduced instance");
    return red;
}

sources::Assignment pullback_1in3(const OneInThreeReduction& red, const Partition& part,
                                  bool allow_diagonal) {
    auto errors = verify_partition(red.instance, part, allow_diagonal);
    if (!errors.empty())
        throw std::invalid_argument(cat("partition does not verify: ", join(errors, "; ")));

    std::map<CellRC, int> word_at;
    for (const auto& pl : part)
        for (const auto& cell : pl.cells) word_at[cell] = pl.word;

    sources::Assignment a(red.layout.variables.size(), false);
    for (size_t v = 0; v < red.layout.variables.size(); ++v) {
        const auto& g = red.layout.variables[v];
        if (!g.present) continue;
        const int w = word_at.at({g.top_row + 1, g.left_col});
        if (w == red.layout.word_true)
            a[v] = true;
        else if (w == red.layout.word_false)
            a[v] = false;
        else
            throw std::logic_error("gadget mode cell covered by an unexpected word");
    }
    return a;
}

Instance expand_blocks(const Instance& in) {
    require_valid(validate_instance(in), "input instance");

    Instance out;
    out.alphabet = in.alphabet;
    std::unordered_set<std::string> used(in.alphabet.begin(), in.alphabet.end());
    const int base = static_cast<int>(in.alphabet.size());
    for (int colour = 1; colour <= 4; ++colour) {
        std::string name = cat(colour);
        while (used.count(name)) name += "_";
        used.insert(name);
        out.alphabet.push_back(name);
    }
    auto colour_id = [&](int i, int j) {
        const bool i_even = (i + 1) % 2 == 0;  // parity of the one-based index
        const bool j_even = (j + 1) % 2 == 0;
        int colour;
        if (i_even && j_even)
            colour = 1;
        else if (i_even)
            colour = 2;
        else if (j_even)
            colour = 3;
        else
            colour = 4;
        return base + colour - 1;
    };

    const int rows = in.rows(), cols = in.cols();
    out.grid.assign(static_cast<size_t>(3 * rows),
                    std::vector<int>(static_cast<size_t>(3 * cols), 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int di = 0; di < 3; ++di)
                for (int dj = 0; dj < 3; ++dj)
                    out.grid[static_cast<size_t>(3 * i + di)][static_cast<size_t>(3 * j + dj)] =
                        di == 1 && dj == 1 ? in.grid[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                           : colour_id(i, j);

    // Colour strings: any start colour, successors keep the checkerboard
    // reachable (1 and 4 border 2 and 3, and vice versa).
    static const int successors[5][2] = {{0, 0}, {2, 3}, {1, 4}, {1, 4}, {2, 3}};
    for (const auto& word : in.dictionary) {
        std::vector<int> colours(word.size());
        auto emit = [&]() {
            std::vector<int> expanded;
            for (size_t t = 0; t < word.size(); ++t) {
                const int cid = base + colours[t] - 1;
                for (int rep = 0; rep < 6; ++rep) expanded.push_back(cid);
                expanded.push_back(word[t]);
                expanded.push_back(cid);
                expanded.push_back(cid);
            }
            out.dictionary.push_back(std::move(expanded));
        };
        auto rec = [&](auto&& self, size_t t) -> void {
            if (t == word.size()) {
                emit();
                return;
            }
            if (t == 0) {
                for (int colour = 1; colour <= 4; ++colour) {
                    colours[0] = colour;
                    self(self, 1);
                }
            } else {
                for (int colour : successors[colours[t - 1]]) {
                    colours[t] = colour;
                    self(self, t + 1);
                }
            }
        };
        rec(rec, 0);
    }

    require_valid(validate_instance(out), "expanded instance");
    return out;
}

Partition pullback_expansion(const Instance& source, const Instance& expanded,
                             const Partition& part, bool allow_diagonal) {
    auto errors = verify_partition(expanded, part, allow_diagonal);
    if (!errors.empty())
        throw std::invalid_argument(cat("partition does not verify: ", join(errors, "; ")));

    std::map<std::vector<int>, int> word_id;
    for (size_t w = 0; w < source.dictionary.size(); ++w)
        word_id[source.dictionary[w]] = static_cast<int>(w);

    Partition out;
    for (const auto& pl : part) {
        const auto& word = expanded.dictionary[static_cast<size_t>(pl.word)];
        if (word.size() % 9 != 0) throw std::logic_error("expanded word length not a multiple of 9");
        const size_t groups = word.size() / 9;
        std::vector<int> letters;
        Placement projected;
        for (size_t t = 0; t < groups; ++t) {
            letters.push_back(word[9 * t + 6]);
            const CellRC block{pl.cells[9 * t].first / 3, pl.cells[9 * t].second / 3};
            for (size_t i = 1; i < 9; ++i) {
                const CellRC& c = pl.cells[9 * t + i];
                if (c.first / 3 != block.first || c.second / 3 != block.second)
                    throw std::logic_error("colour frame straddles blocks");
            }
            projected.cells.push_back(block);
        }
        auto it = word_id.find(letters);
        if (it == word_id.end()) throw std::logic_error("projected letters spell no source word");
        projected.word = it->second;
        out.push_back(std::move(projected));
    }

    errors = verify_partition(source, out, allow_diagonal);
    if (!errors.empty())
        throw std::logic_error(cat("projected partition does not verify: ", join(errors, "; ")));
    return out;
}

std::vector<std::string> validate_flowfree(const FlowFree& ff) {
    std::vector<std::string> out;
    if (ff.width < 1 || ff.height < 1) out.push_back("board must be at least 1 x 1");
    std::set<std::string> colours;
    std::set<CellRC> cells;
    for (size_t i = 0; i < ff.pairs.size(); ++i) {
        const auto& p = ff.pairs[i];
        if (p.color.empty()) out.push_back(cat("pair ", i, ": empty colour name"));
        if (!colours.insert(p.color).second) out.push_back(cat("pair ", i, ": colour reused"));
        for (const CellRC& cell : {p.a, p.b}) {
            if (cell.first < 0 || cell.first >= ff.height || cell.second < 0 ||
                cell.second >= ff.width)
                out.push_back(cat("pair ", i, ": terminal off the board"));
            else if (!cells.insert(cell).second)
                out.push_back(cat("pair ", i, ": terminal cell reused"));
        }
        if (p.a == p.b) out.push_back(cat("pair ", i, ": terminals coincide"));
    }
    return out;
}

Instance reduce_flowfree(const FlowFree& ff) {
    require_valid(validate_flowfree(ff), "flow-free board");

    Instance inst;
    std::unordered_set<std::string> used;
    for (const auto& p : ff.pairs) {
        inst.alphabet.push_back(p.color);
        used.insert(p.color);
    }
    auto fresh = [&](std::string name) {
        while (used.count(name)) name += "_";
        used.insert(name);
        inst.alphabet.push_back(name);
        return static_cast<int>(inst.alphabet.size()) - 1;
    };
    const int black = fresh("B");
    const int white = fresh("W");

    inst.grid.assign(static_cast<size_t>(ff.height),
                     std::vector<int>(static_cast<size_t>(ff.width), black));
    for (int r = 0; r < ff.height; ++r)
        for (int c = 0; c < ff.width; ++c)
            inst.grid[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                (r + c) % 2 == 0 ? black : white;
    for (size_t i = 0; i < ff.pairs.size(); ++i) {
        const auto& p = ff.pairs[i];
        inst.grid[static_cast<size_t>(p.a.first)][static_cast<size_t>(p.a.second)] =
            static_cast<int>(i);
        inst.grid[static_cast<size_t>(p.b.first)][static_cast<size_t>(p.b.second)] =
            static_cast<int>(i);
    }

    // Path words between the two terminals, by the parity of their cells:
    // interiors alternate, starting and ending opposite each terminal.
    const int limit = ff.width * ff.height;
    for (size_t i = 0; i < ff.pairs.size(); ++i) {
        const auto& p = ff.pairs[i];
        const int colour = static_cast<int>(i);
        const bool a_black = (p.a.first + p.a.second) % 2 == 0;
        const bool b_black = (p.b.first + p.b.second) % 2 == 0;
        for (int l = 0; l <= limit; ++l) {
            std::vector<int> word{colour};
            if (a_black == b_black) {
                const int first = a_black ? white : black;
                const int second = a_black ? black : white;
                for (int rep = 0; rep < l; ++rep) {
                    word.push_back(first);
                    word.push_back(second);
                }
                word.push_back(first);
            } else {
                for (int rep = 0; rep < l; ++rep) {
                    word.push_back(black);
                    word.push_back(white);
                }
            }
            word.push_back(colour);
            inst.dictionary.push_back(std::move(word));
        }
    }

    require_valid(validate_instance(inst), "reduced instance");
    return inst;
}

std::vector<std::string> verify_flowfree_paths(const FlowFree& ff,
                                               const std::vector<std::vector<CellRC>>& paths) {
    std::vector<std::string> out = validate_flowfree(ff);
    if (!out.empty()) return out;
    if (paths.size() != ff.pairs.size()) {
        out.push_back(cat("expected ", ff.pairs.size(), " paths, got ", paths.size()));
        return out;
    }
    std::set<CellRC> covered;
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& path = paths[i];
        const auto& p = ff.pairs[i];
        if (path.size() < 2) {
            out.push_back(cat("path ", i, ": needs at least two cells"));
            continue;
        }
        const bool forward = path.front() == p.a && path.back() == p.b;
        const bool backward = path.front() == p.b && path.back() == p.a;
        if (!forward && !backward)
            out.push_back(cat("path ", i, ": endpoints are not the colour's terminals"));
        for (size_t j = 0; j < path.size(); ++j) {
            const auto& [r, c] = path[j];
            if (r < 0 || r >= ff.height || c < 0 || c >= ff.width) {
                out.push_back(cat("path ", i, ": cell off the board"));
                continue;
            }
            if (!covered.insert(path[j]).second)
                out.push_back(cat("path ", i, ": cell (", r, ",", c, ") covered twice"));
            if (j > 0 && std::abs(r - path[j - 1].first) + std::abs(c - path[j - 1].second) != 1)
                out.push_back(cat("path ", i, ": step ", j, " is not an orthogonal move"));
        }
    }
    if (static_cast<int>(covered.size()) != ff.width * ff.height && out.empty())
        out.push_back(cat("paths cover ", covered.size(), " of ", ff.width * ff.height, " cells"));
    return out;
}

std::vector<std::vector<CellRC>> pullback_flowfree(const FlowFree& ff, const Instance& reduced,
                                                   const Partition& part) {
    auto errors = verify_partition(reduced, part, /*allow_diagonal=*/false);
    if (!errors.empty())
        throw std::invalid_argument(cat("partition does not verify: ", join(errors, "; ")));

    std::vector<std::vector<CellRC>> paths(ff.pairs.size());
    std::vector<bool> seen(ff.pairs.size(), false);
    for (const auto& pl : part) {
        const int colour = reduced.dictionary[static_cast<size_t>(pl.word)].front();
        if (colour < 0 || colour >= static_cast<int>(ff.pairs.size()))
            throw std::logic_error("placement word led by a non-colour symbol");
        if (seen[static_cast<size_t>(colour)]) throw std::logic_error("colour covered twice");
        seen[static_cast<size_t>(colour)] = true;
        std::vector<CellRC> path = pl.cells;
        if (path.front() != ff.pairs[static_cast<size_t>(colour)].a)
            std::reverse(path.begin(), path.end());
        paths[static_cast<size_t>(colour)] = std::move(path);
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("a colour's terminals were never covered");

    errors = verify_flowfree_paths(ff, paths);
    if (!errors.empty())
        throw std::logic_error(cat("extracted paths do not verify: ", join(errors, "; ")));
    return paths;
}

FlowOracleOutcome oracle_flowfree(const FlowFree& ff, Budget* budget) {
    require_valid(validate_flowfree(ff), "flow-free board");
    Budget local;
    Budget& bud = budget ? *budget : local;

    const int pair_count = static_cast<int>(ff.pairs.size());
    std::vector<std::vector<int>> owner(static_cast<size_t>(ff.height),
                                        std::vector<int>(static_cast<size_t>(ff.width), -1));
    for (int i = 0; i < pair_count; ++i) {
        owner[static_cast<size_t>(ff.pairs[static_cast<size_t>(i)].a.first)]
             [static_cast<size_t>(ff.pairs[static_cast<size_t>(i)].a.second)] = i;
        owner[static_cast<size_t>(ff.pairs[static_cast<size_t>(i)].b.first)]
             [static_cast<size_t>(ff.pairs[static_cast<size_t>(i)].b.second)] = i;
    }

    FlowOracleOutcome out;
    std::vector<std::vector<CellRC>> paths(static_cast<size_t>(pair_count));
    int used = 2 * pair_count;  // cells claimed so far (terminals are pre-claimed)
    bool over = false;

    auto rec = [&](auto&& self, int colour, CellRC at) -> bool {
        if (!bud.tick()) {
            over = true;
            return false;
        }
        if (at == ff.pairs[static_cast<size_t>(colour)].b) {
            if (colour + 1 == pair_count)
                return used == ff.width * ff.height;
            const CellRC start = ff.pairs[static_cast<size_t>(colour + 1)].a;
            paths[static_cast<size_t>(colour + 1)].push_back(start);
            if (self(self, colour + 1, start)) return true;
            paths[static_cast<size_t>(colour + 1)].pop_back();
            return false;
        }
        static const int dr[] = {-1, 0, 1, 0}, dc[] = {0, 1, 0, -1};
        for (int d = 0; d < 4; ++d) {
            const CellRC next{at.first + dr[d], at.second + dc[d]};
            if (next.first < 0 || next.first >= ff.height || next.second < 0 ||
                next.second >= ff.width)
                continue;
            auto& cell = owner[static_cast<size_t>(next.first)][static_cast<size_t>(next.second)];
            const bool is_goal = next == ff.pairs[static_cast<size_t>(colour)].b;
            if (is_goal) {
                paths[static_cast<size_t>(colour)].push_back(next);
                if (self(self, colour, next)) return true;
                paths[static_cast<size_t>(colour)].pop_back();
            } else if (cell == -1) {
                cell = colour;
                ++used;
                paths[static_cast<size_t>(colour)].push_back(next);
                if (self(self, colour, next)) return true;
                paths[static_cast<size_t>(colour)].pop_back();
                --used;
                cell = -1;
            }
            if (over) return false;
        }
        return false;
    };

    if (pair_count == 0) {
        out.solvable = ff.width * ff.height == 0;
        out.status = SearchStatus::exhausted;
        return out;
    }
    paths[0].push_back(ff.pairs[0].a);
    const bool found = rec(rec, 0, ff.pairs[0].a);
    if (found) {
        out.solvable = true;
        out.status = SearchStatus::found;
        out.paths = paths;
    } else {
        out.status = over ? SearchStatus::budget : SearchStatus::exhausted;
    }
    return out;
}

}  // namespace nythard::strands
