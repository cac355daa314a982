#include "pips.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>

namespace nythard::pips {

namespace {

const char* kind_word(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::eq: return "eq";
        case ConstraintKind::neq: return "neq";
        case ConstraintKind::sum_eq: return "sum";
        case ConstraintKind::sum_lt: return "lt";
        case ConstraintKind::sum_gt: return "gt";
    }
    return "?";
}

bool adjacent(const Cell& a, const Cell& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

}  // namespace

std::vector<std::string> validate_puzzle(const Puzzle& p) {
    std::vector<std::string> out;
    std::set<Cell> cells(p.cells.begin(), p.cells.end());
    if (cells.size() != p.cells.size()) out.push_back("duplicate board cells");
    for (const auto& d : p.dominoes)
        if (d.a < 0 || d.b < 0) out.push_back("negative pip value");
    std::set<Cell> in_regions;
    for (size_t c = 0; c < p.constraints.size(); ++c) {
        const auto& region = p.constraints[c].region;
        if (region.empty()) {
            out.push_back(cat("constraint ", c, ": empty region"));
            continue;
        }
        std::set<Cell> rset(region.begin(), region.end());
        if (rset.size() != region.size()) out.push_back(cat("constraint ", c, ": repeated cell"));
        for (const auto& cell : region) {
            if (!cells.count(cell))
                out.push_back(cat("constraint ", c, ": cell (", cell.x, ",", cell.y, ") off board"));
            if (!in_regions.insert(cell).second)
                out.push_back(cat("constraint ", c, ": cell (", cell.x, ",", cell.y,
                                  ") already in another region"));
        }
        // Region connectivity under edge adjacency.
        std::vector<Cell> stack{region.front()};
        std::set<Cell> seen{region.front()};
        while (!stack.empty()) {
            Cell cur = stack.back();
            stack.pop_back();
            for (const auto& next : region)
                if (!seen.count(next) && adjacent(cur, next)) {
                    seen.insert(next);
                    stack.push_back(next);
                }
        }
        if (seen.size() != rset.size()) out.push_back(cat("constraint ", c, ": region not connected"));
    }
    return out;
}

std::vector<std::string> verify_tiling(const Puzzle& p, const Tiling& t) {
    std::vector<std::string> out;
    std::set<Cell> board(p.cells.begin(), p.cells.end());
    std::map<Cell, long long> value_at;
    std::vector<int> used(p.dominoes.size(), 0);
    for (size_t i = 0; i < t.size(); ++i) {
        const auto& pl = t[i];
        if (pl.domino < 0 || pl.domino >= static_cast<int>(p.dominoes.size())) {
            out.push_back(cat("placement ", i, ": domino index out of range"));
            continue;
        }
        used[static_cast<size_t>(pl.domino)]++;
        if (!board.count(pl.cell_a) || !board.count(pl.cell_b))
            out.push_back(cat("placement ", i, ": cell off board"));
        if (!adjacent(pl.cell_a, pl.cell_b)) out.push_back(cat("placement ", i, ": cells not adjacent"));
        const auto& d = p.dominoes[static_cast<size_t>(pl.domino)];
        const bool match = (pl.value_a == d.a && pl.value_b == d.b) ||
                           (pl.value_a == d.b && pl.value_b == d.a);
        if (!match) out.push_back(cat("placement ", i, ": values do not match the domino"));
        for (auto [cell, v] : {std::pair{pl.cell_a, pl.value_a}, std::pair{pl.cell_b, pl.value_b}}) {
            if (value_at.count(cell))
                out.push_back(cat("placement ", i, ": cell (", cell.x, ",", cell.y, ") covered twice"));
            value_at[cell] = v;
        }
    }
    for (size_t d = 0; d < used.size(); ++d)
        if (used[d] != 1) out.push_back(cat("domino ", d, " used ", used[d], " times"));
    for (const auto& cell : p.cells)
        if (!value_at.count(cell)) out.push_back(cat("cell (", cell.x, ",", cell.y, ") uncovered"));
    if (!out.empty()) return out;

    for (size_t c = 0; c < p.constraints.size(); ++c) {
        const auto& cons = p.constraints[c];
        std::vector<long long> vals;
        for (const auto& cell : cons.region) vals.push_back(value_at.at(cell));
        switch (cons.kind) {
            case ConstraintKind::eq:
                for (long long v : vals)
                    if (v != vals[0]) {
                        out.push_back(cat("constraint ", c, " (eq): values differ"));
                        break;
                    }
                break;
            case ConstraintKind::neq: {
                std::set<long long> distinct(vals.begin(), vals.end());
                if (distinct.size() != vals.size())
                    out.push_back(cat("constraint ", c, " (neq): values repeat"));
                break;
            }
            case ConstraintKind::sum_eq:
            case ConstraintKind::sum_lt:
            case ConstraintKind::sum_gt: {
                long long sum = 0;
                for (long long v : vals) sum += v;
                const bool ok = cons.kind == ConstraintKind::sum_eq   ? sum == cons.n
                                : cons.kind == ConstraintKind::sum_lt ? sum < cons.n
                                                                      : sum > cons.n;
                if (!ok)
                    out.push_back(cat("constraint ", c, " (", kind_word(cons.kind), " ", cons.n,
                                      "): region sums to ", sum));
                break;
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------ solver

namespace {

struct Solver {
    const Puzzle& p;
    const SolveOptions& opts;
    Budget& bud;

    std::vector<Cell> order;                 // board cells, row-major
    std::map<Cell, int> index_of;            // cell -> order index
    std::vector<int> region_of;              // order index -> constraint or -1
    std::vector<long long> value;            // assigned value per order index
    std::vector<bool> assigned;
    std::vector<bool> domino_used;
    std::vector<std::vector<size_t>> value_class;  // dominoes grouped by value pair
    std::vector<Placement> current;
    bool over = false;

    // Per-constraint running state.
    std::vector<long long> region_sum;
    std::vector<int> region_assigned;

    // Failure memo for decision mode. Disconnected boards otherwise multiply
    // the tilings of every component into the search.
    bool memo = false;
    std::unordered_set<std::string> failed;
    static constexpr size_t kMemoCap = 1u << 21;

    Solver(const Puzzle& p_, const SolveOptions& o, Budget& b) : p(p_), opts(o), bud(b) {
        order = p.cells;
        std::sort(order.begin(), order.end());
        for (size_t i = 0; i < order.size(); ++i) index_of[order[i]] = static_cast<int>(i);
        region_of.assign(order.size(), -1);
        for (size_t c = 0; c < p.constraints.size(); ++c)
            for (const auto& cell : p.constraints[c].region) {
                auto it = index_of.find(cell);
                if (it != index_of.end()) region_of[static_cast<size_t>(it->second)] = static_cast<int>(c);
            }
        value.assign(order.size(), 0);
        assigned.assign(order.size(), false);
        domino_used.assign(p.dominoes.size(), false);
        std::map<std::pair<long long, long long>, size_t> class_of;
        for (size_t d = 0; d < p.dominoes.size(); ++d) {
            auto key = std::minmax(p.dominoes[d].a, p.dominoes[d].b);
            auto [it, fresh] = class_of.emplace(key, value_class.size());
            if (fresh) value_class.emplace_back();
            value_class[it->second].push_back(d);
        }
        region_sum.assign(p.constraints.size(), 0);
        region_assigned.assign(p.constraints.size(), 0);
    }

    // Sum of the m smallest / largest halves still in the tray.
    std::pair<long long, long long> remaining_bounds(int m) const {
        std::vector<long long> halves;
        for (size_t d = 0; d < p.dominoes.size(); ++d)
            if (!domino_used[d]) {
                halves.push_back(p.dominoes[d].a);
                halves.push_back(p.dominoes[d].b);
            }
        std::sort(halves.begin(), halves.end());
        long long lo = 0, hi = 0;
        for (int i = 0; i < m && i < static_cast<int>(halves.size()); ++i) lo += halves[static_cast<size_t>(i)];
        for (int i = 0; i < m && i < static_cast<int>(halves.size()); ++i)
            hi += halves[halves.size() - 1 - static_cast<size_t>(i)];
        return {lo, hi};
    }

    bool region_ok_after(int cons_ix) {
        const auto& cons = p.constraints[static_cast<size_t>(cons_ix)];
        const int total = static_cast<int>(cons.region.size());
        const int have = region_assigned[static_cast<size_t>(cons_ix)];
        switch (cons.kind) {
            case ConstraintKind::eq: {
                std::optional<long long> v;
                for (const auto& cell : cons.region) {
                    const int ix = index_of.at(cell);
                    if (!assigned[static_cast<size_t>(ix)]) continue;
                    if (!v)
                        v = value[static_cast<size_t>(ix)];
                    else if (*v != value[static_cast<size_t>(ix)])
                        return false;
                }
                return true;
            }
            case ConstraintKind::neq: {
                std::set<long long> seen;
                for (const auto& cell : cons.region) {
                    const int ix = index_of.at(cell);
                    if (!assigned[static_cast<size_t>(ix)]) continue;
                    if (!seen.insert(value[static_cast<size_t>(ix)]).second) return false;
                }
                return true;
            }
            case ConstraintKind::sum_eq:
            case ConstraintKind::sum_lt:
            case ConstraintKind::sum_gt: {
                const long long sum = region_sum[static_cast<size_t>(cons_ix)];
                const int left = total - have;
                if (left == 0) {
                    return cons.kind == ConstraintKind::sum_eq   ? sum == cons.n
                           : cons.kind == ConstraintKind::sum_lt ? sum < cons.n
                                                                 : sum > cons.n;
                }
                if (!opts.use_sum_pruning) return true;
                auto [lo, hi] = remaining_bounds(left);
                switch (cons.kind) {
                    case ConstraintKind::sum_eq: return sum + lo <= cons.n && cons.n <= sum + hi;
                    case ConstraintKind::sum_lt: return sum + lo < cons.n;
                    case ConstraintKind::sum_gt: return sum + hi > cons.n;
                    default: return true;
                }
            }
        }
        return true;
    }

    void set_cell(int ix, long long v) {
        assigned[static_cast<size_t>(ix)] = true;
        value[static_cast<size_t>(ix)] = v;
        const int r = region_of[static_cast<size_t>(ix)];
        if (r >= 0) {
            region_sum[static_cast<size_t>(r)] += v;
            region_assigned[static_cast<size_t>(r)]++;
        }
    }

    void unset_cell(int ix) {
        assigned[static_cast<size_t>(ix)] = false;
        const int r = region_of[static_cast<size_t>(ix)];
        if (r >= 0) {
            region_sum[static_cast<size_t>(r)] -= value[static_cast<size_t>(ix)];
            region_assigned[static_cast<size_t>(r)]--;
        }
    }

    // The residual subproblem is determined by the frontier cell, the cells a
    // placed domino already reached past it, the per-value-pair tray counts,
    // and the partial state of half-filled regions. False when some number
    // does not fit the byte/short encoding.
    bool key_of(size_t cursor, std::string& out) const {
        out.clear();
        out.push_back(static_cast<char>(cursor & 0xff));
        out.push_back(static_cast<char>((cursor >> 8) & 0xff));
        for (const auto& cls : value_class) {
            int used_count = 0;
            for (size_t m : cls) used_count += domino_used[m] ? 1 : 0;
            if (used_count > 255) return false;
            out.push_back(static_cast<char>(used_count));
        }
        out.push_back('\xfe');
        for (size_t i = cursor + 1; i < order.size(); ++i)
            if (assigned[i]) {
                const size_t delta = i - cursor;
                if (delta > 253) return false;
                out.push_back(static_cast<char>(delta));
            }
        for (size_t r = 0; r < p.constraints.size(); ++r) {
            const auto& cons = p.constraints[r];
            const int have = region_assigned[r];
            if (have == 0 || have == static_cast<int>(cons.region.size())) continue;
            out.push_back('\xff');
            if (r > 253) return false;
            out.push_back(static_cast<char>(r));
            switch (cons.kind) {
                case ConstraintKind::eq:
                    // All assigned cells agree already; record the pinned value.
                    for (const auto& cell : cons.region) {
                        const int ix = index_of.at(cell);
                        if (!assigned[static_cast<size_t>(ix)]) continue;
                        const long long v = value[static_cast<size_t>(ix)];
                        if (v < 0 || v > 253) return false;
                        out.push_back(static_cast<char>(v));
                        break;
                    }
                    break;
                case ConstraintKind::neq: {
                    std::vector<long long> vals;
                    for (const auto& cell : cons.region) {
                        const int ix = index_of.at(cell);
                        if (assigned[static_cast<size_t>(ix)]) vals.push_back(value[static_cast<size_t>(ix)]);
                    }
                    std::sort(vals.begin(), vals.end());
                    for (long long v : vals) {
                        if (v < 0 || v > 253) return false;
                        out.push_back(static_cast<char>(v));
                    }
                    break;
                }
                case ConstraintKind::sum_eq:
                case ConstraintKind::sum_lt:
                case ConstraintKind::sum_gt: {
                    const long long s = region_sum[r];
                    if (s < 0 || s > 65535) return false;
                    out.push_back(static_cast<char>(s & 0xff));
                    out.push_back(static_cast<char>((s >> 8) & 0xff));
                    break;
                }
            }
        }
        return true;
    }

    // Visits every completed tiling; returns false to stop the search early.
    template <typename Sink>
    bool rec(size_t cursor, const Sink& sink) {
        if (over) return false;
        while (cursor < order.size() && assigned[cursor]) ++cursor;
        if (cursor == order.size()) return sink(current);
        if (!bud.tick()) {
            over = true;
            return false;
        }
        std::string key;
        bool keyed = memo && key_of(cursor, key);
        if (keyed && failed.count(key)) return true;
        const Cell cell = order[cursor];
        for (Cell partner : {Cell{cell.x + 1, cell.y}, Cell{cell.x, cell.y + 1}}) {
            auto it = index_of.find(partner);
            if (it == index_of.end() || assigned[static_cast<size_t>(it->second)]) continue;
            const int pix = it->second;
            for (const auto& cls : value_class) {
                // Among identical dominoes, only the lowest unused index is offered.
                size_t d = std::numeric_limits<size_t>::max();
                for (size_t m : cls)
                    if (!domino_used[m]) {
                        d = m;
                        break;
                    }
                if (d == std::numeric_limits<size_t>::max()) continue;
                const auto& dom = p.dominoes[d];
                const int flips = dom.a == dom.b ? 1 : 2;
                for (int f = 0; f < flips; ++f) {
                    const long long va = f == 0 ? dom.a : dom.b;
                    const long long vb = f == 0 ? dom.b : dom.a;
                    domino_used[d] = true;
                    set_cell(static_cast<int>(cursor), va);
                    set_cell(pix, vb);
                    bool ok = true;
                    const int r1 = region_of[cursor];
                    const int r2 = region_of[static_cast<size_t>(pix)];
                    if (r1 >= 0) ok = region_ok_after(r1);
                    if (ok && r2 >= 0 && r2 != r1) ok = region_ok_after(r2);
                    bool keep_going = true;
                    if (ok) {
                        current.push_back({static_cast<int>(d), cell, partner, va, vb});
                        keep_going = rec(cursor + 1, sink);
                        current.pop_back();
                    }
                    unset_cell(static_cast<int>(cursor));
                    unset_cell(pix);
                    domino_used[d] = false;
                    if (!keep_going || over) return false;
                }
            }
        }
        if (keyed && failed.size() < kMemoCap) failed.insert(std::move(key));
        return true;
    }
};

}  // namespace

SolveOutcome solve(const Puzzle& p, const SolveOptions& opts) {
    Budget local;
    Budget& bud = opts.budget ? *opts.budget : local;
    if (p.cells.size() != 2 * p.dominoes.size()) return {SearchStatus::exhausted, {}};
    Solver s(p, opts, bud);
    s.memo = true;  // decision mode: dead residual states are skipped
    Tiling found;
    bool got = false;
    s.rec(0, [&](const Tiling& t) {
        found = t;
        got = true;
        return false;  // stop at the first tiling
    });
    if (got) return {SearchStatus::found, found};
    if (s.over) return {SearchStatus::budget, {}};
    return {SearchStatus::exhausted, {}};
}

EnumerateOutcome enumerate_tilings(const Puzzle& p, size_t limit, const SolveOptions& opts) {
    Budget local;
    Budget& bud = opts.budget ? *opts.budget : local;
    EnumerateOutcome out;
    if (p.cells.size() != 2 * p.dominoes.size()) {
        out.status = SearchStatus::exhausted;
        return out;
    }
    Solver s(p, opts, bud);
    bool hit_limit = false;
    s.rec(0, [&](const Tiling& t) {
        if (out.tilings.size() == limit) {
            hit_limit = true;
            return false;
        }
        out.tilings.push_back(t);
        return true;
    });
    out.truncated = hit_limit;
    out.status = s.over ? SearchStatus::budget : SearchStatus::found;
    return out;
}

size_t count_tiling_shapes(const std::vector<Cell>& cells, size_t limit) {
    Puzzle p;
    p.cells = cells;
    p.dominoes.assign(cells.size() / 2, Domino{0, 0});
    if (cells.size() % 2 != 0) return 0;
    auto res = enumerate_tilings(p, limit);
    return res.tilings.size();
}

}  // namespace nythard::pips
