#include "pips_reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nythard::pips {

namespace {

void require_valid(const std::vector<std::string>& errors, const char* what) {
    if (!errors.empty()) throw std::invalid_argument(cat(what, ": ", join(errors, "; ")));
}

// Registry of every board cell; double claims are construction bugs.
struct CellBook {
    std::map<Cell, int> owner;

    void claim(Cell c, int who) {
        if (!owner.emplace(c, who).second)
            throw std::logic_error(cat("cell (", c.x, ",", c.y, ") claimed twice"));
    }

    std::vector<Cell> all() const {
        std::vector<Cell> out;
        for (const auto& [c, w] : owner) out.push_back(c);
        return out;
    }
};

struct Leg {
    int slot = 0;
    int sign = 1;  // +1 above the base line, -1 below
    int height = 0;
};

constexpr int kColStride = 4;  // branch columns sit at 4 * slot

int leg_height(int level) { return 4 * level - 2; }

}  // namespace

OneInThreeReduction reduce_1in3(const sources::OneInThreeSat& f, bool connected) {
    require_valid(sources::validate_embedding(f), "1-in-3 instance");
    if (f.clauses.empty()) throw std::invalid_argument("1-in-3 instance: no clauses");

    const size_t vars = f.variables.size();
    OneInThreeReduction red;
    red.connected = connected;
    OneInThreeLayout& lay = red.layout;
    lay.variables.resize(vars);

    std::vector<std::vector<Leg>> legs(vars);
    std::vector<std::pair<int, int>> slot_range(vars, {0, 0});
    for (size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& pl = f.placements[c];
        const int sign = pl.side == sources::Side::above ? 1 : -1;
        const int h = leg_height(pl.level);
        for (int i = 0; i < 3; ++i) {
            const auto v = static_cast<size_t>(f.clauses[c][static_cast<size_t>(i)]);
            if (legs[v].empty())
                slot_range[v] = {pl.slots[static_cast<size_t>(i)], pl.slots[static_cast<size_t>(i)]};
            slot_range[v].first = std::min(slot_range[v].first, pl.slots[static_cast<size_t>(i)]);
            slot_range[v].second = std::max(slot_range[v].second, pl.slots[static_cast<size_t>(i)]);
            legs[v].push_back({pl.slots[static_cast<size_t>(i)], sign, h});
        }
    }

    CellBook book;
    Puzzle& p = red.puzzle;

    // Variable gadgets: base row plus one branch per incidence; the branch
    // tip is excluded from the equality region so its domino can carry the
    // variable's value into the clause strip.
    for (size_t v = 0; v < vars; ++v) {
        auto& g = lay.variables[v];
        if (legs[v].empty()) continue;
        g.present = true;
        const int x_lo = kColStride * slot_range[v].first;
        const int x_hi = kColStride * slot_range[v].second + 1;
        for (int x = x_lo; x <= x_hi; ++x) {
            Cell c{x, 0};
            book.claim(c, static_cast<int>(v));
            g.cells.push_back(c);
            g.eq_region.push_back(c);
        }
        for (const Leg& leg : legs[v]) {
            for (int r = 1; r <= leg.height; ++r) {
                Cell c{kColStride * leg.slot, leg.sign * r};
                book.claim(c, static_cast<int>(v));
                g.cells.push_back(c);
                if (r < leg.height)
                    g.eq_region.push_back(c);
                else
                    g.tips.push_back(c);
            }
        }
        if (count_tiling_shapes(g.cells) != 1)
            throw std::logic_error("variable gadget does not tile uniquely");
    }

    // Clause gadgets: a strip through the three tips at the leg height, with
    // one bump over each inter-tip gap to even out the gap parity.
    for (size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& pl = f.placements[c];
        const int sign = pl.side == sources::Side::above ? 1 : -1;
        const int h = leg_height(pl.level);
        std::array<int, 3> cols{kColStride * pl.slots[0], kColStride * pl.slots[1],
                                kColStride * pl.slots[2]};
        std::sort(cols.begin(), cols.end());

        OneInThreeLayout::ClauseGadget g;
        g.row = sign * h;
        for (int t : cols) g.tips.push_back({t, g.row});
        const int who = static_cast<int>(vars + c);
        for (int x = cols[0] + 1; x < cols[2]; ++x) {
            if (x == cols[1]) continue;
            Cell cell{x, g.row};
            book.claim(cell, who);
            g.body.push_back(cell);
        }
        for (int t : {cols[0], cols[1]}) {
            Cell bump{t + 1, sign * (h + 1)};
            book.claim(bump, who);
            g.body.push_back(bump);
        }
        if (count_tiling_shapes(g.body) != 1)
            throw std::logic_error("clause body does not tile uniquely");
        lay.clauses.push_back(std::move(g));
    }

    long long variable_area = 0, body_area = 0;
    for (const auto& g : lay.variables) variable_area += static_cast<long long>(g.cells.size());
    for (const auto& g : lay.clauses) body_area += static_cast<long long>(g.body.size());

    // Rightmost base column over all variables; bases are ordered by slot.
    int base_end = 0;
    bool seen = false;
    for (size_t v = 0; v < vars; ++v) {
        if (!lay.variables[v].present) continue;
        const int hi = kColStride * slot_range[v].second + 1;
        base_end = seen ? std::max(base_end, hi) : hi;
        seen = true;
    }

    if (connected) {
        // Fill every row-0 gap between consecutive bases, plus one pair that
        // links the last base to the cleanup strip.
        std::vector<size_t> present;
        for (size_t v = 0; v < vars; ++v)
            if (lay.variables[v].present) present.push_back(v);
        std::sort(present.begin(), present.end(), [&](size_t a, size_t b) {
            return slot_range[a].first < slot_range[b].first;
        });
        for (size_t i = 0; i + 1 < present.size(); ++i) {
            const int from = kColStride * slot_range[present[i]].second + 2;
            const int to = kColStride * slot_range[present[i + 1]].first - 1;
            for (int x = from; x <= to; ++x) {
                Cell cell{x, 0};
                book.claim(cell, -1);
                lay.connectors.push_back(cell);
            }
        }
        for (int x = base_end + 1; x <= base_end + 2; ++x) {
            Cell cell{x, 0};
            book.claim(cell, -1);
            lay.connectors.push_back(cell);
        }
        if (lay.connectors.size() % 2 != 0)
            throw std::logic_error("connector area is odd");
    }

    const int cleanup_start = base_end + 3;
    for (long long i = 0; i < variable_area; ++i) {
        Cell cell{cleanup_start + static_cast<int>(i), 0};
        book.claim(cell, -2);
        lay.cleanup.push_back(cell);
    }

    lay.ones = variable_area / 2;
    lay.zeros = (body_area + static_cast<long long>(lay.connectors.size()) + variable_area) / 2;

    p.cells = book.all();
    if (static_cast<long long>(p.cells.size()) != 2 * (lay.zeros + lay.ones))
        throw std::logic_error("domino count does not match board area");
    for (long long i = 0; i < lay.zeros; ++i) p.dominoes.push_back({0, 0});
    for (long long i = 0; i < lay.ones; ++i) p.dominoes.push_back({1, 1});

    for (const auto& g : lay.variables) {
        if (!g.present) continue;
        p.constraints.push_back({g.eq_region, ConstraintKind::eq, 0});
    }
    for (const auto& g : lay.clauses) {
        Constraint c;
        c.region = g.tips;
        c.region.insert(c.region.end(), g.body.begin(), g.body.end());
        c.kind = ConstraintKind::sum_eq;
        c.n = 1;
        p.constraints.push_back(std::move(c));
    }
    for (size_t i = 0; i + 1 < lay.connectors.size(); i += 2)
        p.constraints.push_back(
            {{lay.connectors[i], lay.connectors[i + 1]}, ConstraintKind::sum_eq, 0});

    require_valid(validate_puzzle(p), "reduced board");
    return red;
}

sources::Assignment pullback_1in3(const OneInThreeReduction& red, const Tiling& t) {
    auto errors = verify_tiling(red.puzzle, t);
    if (!errors.empty())
        throw std::invalid_argument(cat("tiling does not verify: ", join(errors, "; ")));

    std::map<Cell, long long> value;
    for (const auto& pl : t) {
        value[pl.cell_a] = pl.value_a;
        value[pl.cell_b] = pl.value_b;
    }
    sources::Assignment a(red.layout.variables.size(), false);
    for (size_t v = 0; v < red.layout.variables.size(); ++v) {
        const auto& g = red.layout.variables[v];
        if (!g.present) continue;
        const long long val = value.at(g.eq_region.front());
        if (val != 0 && val != 1) throw std::logic_error("equality region holds a non-bit value");
        a[v] = val == 1;
    }
    return a;
}

SubsetSumReduction reduce_subset_sum(const sources::SubsetSum& s) {
    if (s.elements.empty()) throw std::invalid_argument("subset sum instance: no elements");
    for (long long e : s.elements)
        if (e < 0) throw std::invalid_argument("subset sum instance: negative element");
    if (s.target < 0) throw std::invalid_argument("subset sum instance: negative target");

    SubsetSumReduction red;
    Puzzle& p = red.puzzle;
    const int n = static_cast<int>(s.elements.size());
    Constraint sum_row;
    for (int x = 0; x < n; ++x) {
        p.cells.push_back({x, 0});
        sum_row.region.push_back({x, 0});
        p.cells.push_back({x, 1});
    }
    for (long long e : s.elements) p.dominoes.push_back({e, 0});
    sum_row.kind = ConstraintKind::sum_eq;
    sum_row.n = s.target;
    p.constraints.push_back(std::move(sum_row));

    require_valid(validate_puzzle(p), "reduced board");
    return red;
}

std::vector<int> pullback_subset_sum(const SubsetSumReduction& red, const Tiling& t) {
    auto errors = verify_tiling(red.puzzle, t);
    if (!errors.empty())
        throw std::invalid_argument(cat("tiling does not verify: ", join(errors, "; ")));

    // Element i is chosen when domino i shows its value in the sum row; the
    // other orientations contribute zero there.
    std::vector<long long> row_value(red.puzzle.dominoes.size(), 0);
    for (const auto& pl : t) {
        long long v = 0;
        if (pl.cell_a.y == 0) v += pl.value_a;
        if (pl.cell_b.y == 0) v += pl.value_b;
        row_value[static_cast<size_t>(pl.domino)] = v;
    }
    std::vector<int> chosen;
    long long sum = 0;
    for (size_t i = 0; i < row_value.size(); ++i) {
        if (row_value[i] > 0) {
            chosen.push_back(static_cast<int>(i));
            sum += row_value[i];
        }
    }
    if (sum != red.puzzle.constraints.front().n)
        throw std::logic_error("chosen elements do not sum to the target");
    return chosen;
}

}  // namespace nythard::pips
