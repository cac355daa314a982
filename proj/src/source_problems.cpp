#include "source_problems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nythard::sources {

namespace {

void check_clauses(const std::vector<std::string>& variables,
                   const std::vector<std::array<int, 3>>& clauses,
                   std::vector<std::string>& out) {
    std::set<std::string> names;
    for (const auto& v : variables) {
        if (v.empty()) out.push_back("empty variable name");
        if (!names.insert(v).second) out.push_back(cat("duplicate variable name: ", v));
    }
    const int n = static_cast<int>(variables.size());
    for (size_t c = 0; c < clauses.size(); ++c) {
        const auto& cl = clauses[c];
        for (int v : cl) {
            if (v < 0 || v >= n) out.push_back(cat("clause ", c, ": variable index ", v, " out of range"));
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            out.push_back(cat("clause ", c, ": variables not distinct"));
    }
}

// Lexicographic assignment enumeration, variable 0 most significant,
// false < true.
template <typename Pred>
OracleStatus enumerate_assignments(int var_count, uint64_t step_limit, Pred accept,
                                   Assignment& found) {
    if (var_count >= 60) return OracleStatus::too_large;
    const uint64_t total = 1ULL << var_count;
    uint64_t steps = 0;
    Assignment a(static_cast<size_t>(var_count));
    for (uint64_t bits = 0; bits < total; ++bits) {
        if (++steps > step_limit) return OracleStatus::too_large;
        for (int v = 0; v < var_count; ++v)
            a[static_cast<size_t>(v)] = ((bits >> (var_count - 1 - v)) & 1) != 0;
        if (accept(a)) {
            found = a;
            return OracleStatus::yes;
        }
    }
    return OracleStatus::no;
}

}  // namespace

// ---------------------------------------------------------------- NAE-3-SAT

std::vector<std::string> validate_nae(const Nae3Sat& f) {
    std::vector<std::string> out;
    check_clauses(f.variables, f.clauses, out);
    return out;
}

bool nae_satisfies(const Nae3Sat& f, const Assignment& a) {
    for (const auto& cl : f.clauses) {
        const bool x = a[static_cast<size_t>(cl[0])];
        const bool y = a[static_cast<size_t>(cl[1])];
        const bool z = a[static_cast<size_t>(cl[2])];
        if (x == y && y == z) return false;
    }
    return true;
}

NaeOracleResult oracle_nae(const Nae3Sat& f, uint64_t step_limit) {
    NaeOracleResult r{OracleStatus::no, {}};
    r.status = enumerate_assignments(
        static_cast<int>(f.variables.size()), step_limit,
        [&](const Assignment& a) { return nae_satisfies(f, a); }, r.assignment);
    return r;
}

// ------------------------------------------------------- planar 1-in-3-SAT

std::vector<std::string> validate_embedding(const OneInThreeSat& f) {
    std::vector<std::string> out;
    check_clauses(f.variables, f.clauses, out);
    if (f.placements.size() != f.clauses.size()) {
        out.push_back("placement count does not match clause count");
        return out;
    }
    if (!out.empty()) return out;

    struct Interval {
        int lo, hi, level;
        Side side;
    };
    std::vector<Interval> iv;
    std::map<int, std::pair<int, int>> var_slot_range;  // var -> [min, max] slot
    std::set<std::pair<int, int>> side_slots;           // (side, slot) uniqueness

    for (size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& cl = f.clauses[c];
        const auto& pl = f.placements[c];
        if (pl.level < 1) out.push_back(cat("clause ", c, ": level must be >= 1"));
        // Slots must follow the left-to-right variable order.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (cl[i] < cl[j] && pl.slots[i] >= pl.slots[j])
                    out.push_back(cat("clause ", c, ": slots do not respect variable order"));
        for (int i = 0; i < 3; ++i) {
            auto key = std::make_pair(pl.side == Side::above ? 0 : 1, pl.slots[i]);
            if (!side_slots.insert(key).second)
                out.push_back(cat("clause ", c, ": slot ", pl.slots[i], " reused on the same side"));
            auto it = var_slot_range.find(cl[i]);
            if (it == var_slot_range.end())
                var_slot_range[cl[i]] = {pl.slots[i], pl.slots[i]};
            else {
                it->second.first = std::min(it->second.first, pl.slots[i]);
                it->second.second = std::max(it->second.second, pl.slots[i]);
            }
        }
        int lo = std::min({pl.slots[0], pl.slots[1], pl.slots[2]});
        int hi = std::max({pl.slots[0], pl.slots[1], pl.slots[2]});
        iv.push_back({lo, hi, pl.level, pl.side});
    }

    // Distinct variables occupy disjoint slot ranges, ordered like the line.
    for (auto it = var_slot_range.begin(); it != var_slot_range.end(); ++it) {
        auto next = std::next(it);
        if (next != var_slot_range.end() && it->second.second >= next->second.first)
            out.push_back(cat("slot ranges of variables ", f.variables[static_cast<size_t>(it->first)],
                              " and ", f.variables[static_cast<size_t>(next->first)], " interleave"));
    }

    // Same-side intervals: nested or disjoint, outer strictly higher level,
    // and no leg may pass through the body of a lower-level clause.
    for (size_t a = 0; a < iv.size(); ++a) {
        for (size_t b = 0; b < iv.size(); ++b) {
            if (a == b || iv[a].side != iv[b].side) continue;
            const auto& A = iv[a];
            const auto& B = iv[b];
            if (A.hi < B.lo || B.hi < A.lo) continue;  // disjoint
            const bool a_in_b = B.lo <= A.lo && A.hi <= B.hi;
            const bool b_in_a = A.lo <= B.lo && B.hi <= A.hi;
            if (!a_in_b && !b_in_a) {
                if (a < b)
                    out.push_back(cat("clauses ", a, " and ", b, ": intervals partially overlap"));
                continue;
            }
            if (a_in_b && !b_in_a && A.level >= B.level)
                out.push_back(cat("clause ", b, " contains clause ", a,
                                  " but does not have a strictly greater level"));
            // Legs of a crossing the body of a strictly lower clause b.
            if (B.level < A.level) {
                for (int s : f.placements[a].slots)
                    if (B.lo <= s && s <= B.hi)
                        out.push_back(cat("clause ", a, ": leg at slot ", s,
                                          " passes through the body of clause ", b));
            }
        }
    }
    return out;
}

bool one_in_three_satisfies(const OneInThreeSat& f, const Assignment& a) {
    for (const auto& cl : f.clauses) {
        int trues = 0;
        for (int v : cl) trues += a[static_cast<size_t>(v)] ? 1 : 0;
        if (trues != 1) return false;
    }
    return true;
}

OneInThreeOracleResult oracle_1in3(const OneInThreeSat& f, uint64_t step_limit) {
    OneInThreeOracleResult r{OracleStatus::no, {}};
    r.status = enumerate_assignments(
        static_cast<int>(f.variables.size()), step_limit,
        [&](const Assignment& a) { return one_in_three_satisfies(f, a); }, r.assignment);
    return r;
}

// ------------------------------------------------------------------- 3-DM

std::vector<std::string> validate_3dm(const ThreeDimMatching& t) {
    std::vector<std::string> out;
    if (t.n < 0) out.push_back("n must be non-negative");
    std::set<std::array<int, 3>> seen;
    for (size_t i = 0; i < t.triples.size(); ++i) {
        for (int v : t.triples[i])
            if (v < 0 || v >= t.n) out.push_back(cat("triple ", i, ": coordinate ", v, " out of range"));
        if (!seen.insert(t.triples[i]).second) out.push_back(cat("triple ", i, " duplicated"));
    }
    return out;
}

namespace {

// Lexicographic enumeration of index combinations with disjointness pruning.
bool dfs_3dm(const ThreeDimMatching& t, int from, std::vector<int>& chosen,
             uint64_t& used_x, uint64_t& used_y, uint64_t& used_z,
             uint64_t step_limit, uint64_t& steps, bool& over) {
    if (static_cast<int>(chosen.size()) == t.n) return true;
    const int need = t.n - static_cast<int>(chosen.size());
    for (int i = from; i + need <= static_cast<int>(t.triples.size()); ++i) {
        if (++steps > step_limit) {
            over = true;
            return false;
        }
        const auto& tr = t.triples[static_cast<size_t>(i)];
        const uint64_t bx = 1ULL << tr[0], by = 1ULL << tr[1], bz = 1ULL << tr[2];
        if ((used_x & bx) || (used_y & by) || (used_z & bz)) continue;
        used_x |= bx;
        used_y |= by;
        used_z |= bz;
        chosen.push_back(i);
        if (dfs_3dm(t, i + 1, chosen, used_x, used_y, used_z, step_limit, steps, over)) return true;
        if (over) return false;
        chosen.pop_back();
        used_x &= ~bx;
        used_y &= ~by;
        used_z &= ~bz;
    }
    return false;
}

}  // namespace

MatchingOracleResult oracle_3dm(const ThreeDimMatching& t, uint64_t step_limit) {
    MatchingOracleResult r{OracleStatus::no, {}};
    if (t.n == 0) {
        r.status = OracleStatus::yes;  // empty matching
        return r;
    }
    if (t.n > 60) {
        r.status = OracleStatus::too_large;
        return r;
    }
    std::vector<int> chosen;
    uint64_t ux = 0, uy = 0, uz = 0, steps = 0;
    bool over = false;
    if (dfs_3dm(t, 0, chosen, ux, uy, uz, step_limit, steps, over)) {
        r.status = OracleStatus::yes;
        r.matching = chosen;
    } else if (over) {
        r.status = OracleStatus::too_large;
    }
    return r;
}

// -------------------------------------------------------------- subset sum

SubsetOracleResult oracle_subset_sum(const SubsetSum& s, uint64_t step_limit) {
    SubsetOracleResult r{OracleStatus::no, {}};
    const int n = static_cast<int>(s.elements.size());
    if (n >= 60) {
        r.status = OracleStatus::too_large;
        return r;
    }
    const uint64_t total = 1ULL << n;
    uint64_t steps = 0;
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (++steps > step_limit) {
            r.status = OracleStatus::too_large;
            return r;
        }
        long long sum = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) sum += s.elements[static_cast<size_t>(i)];
        if (sum == s.target) {
            r.status = OracleStatus::yes;
            for (int i = 0; i < n; ++i)
                if (mask & (1ULL << i)) r.subset.push_back(i);
            return r;
        }
    }
    return r;
}

// -------------------------------------------------------------- generators

namespace {

std::vector<std::string> numbered_vars(int count) {
    std::vector<std::string> vars;
    for (int i = 1; i <= count; ++i) vars.push_back(cat("x", i));
    return vars;
}

std::array<int, 3> random_triple(Rng& rng, int var_count) {
    std::array<int, 3> t{};
    t[0] = rng.range(0, var_count - 1);
    do t[1] = rng.range(0, var_count - 1);
    while (t[1] == t[0]);
    do t[2] = rng.range(0, var_count - 1);
    while (t[2] == t[0] || t[2] == t[1]);
    return t;
}

}  // namespace

Nae3Sat make_random_nae(int var_count, int clause_count, uint64_t seed) {
    if (var_count < 3) throw std::invalid_argument("need at least 3 variables");
    Rng rng(seed ^ 0x6ae1u);
    Nae3Sat f;
    f.variables = numbered_vars(var_count);
    for (int c = 0; c < clause_count; ++c) f.clauses.push_back(random_triple(rng, var_count));
    return f;
}

OneInThreeSat make_random_1in3(int var_count, int clause_count, uint64_t seed) {
    if (var_count < 3) throw std::invalid_argument("need at least 3 variables");
    Rng rng(seed ^ 0x113u);
    for (int attempt = 0; attempt < 400; ++attempt) {
        OneInThreeSat f;
        f.variables = numbered_vars(var_count);
        for (int c = 0; c < clause_count; ++c) {
            auto tr = random_triple(rng, var_count);
            std::sort(tr.begin(), tr.end());
            f.clauses.push_back(tr);
        }
        // Alternate sides, then allocate slots inner-first inside per-variable
        // bands of width 100. Left interval ends grow outward (descending),
        // right ends grow outward (ascending).
        std::vector<ClausePlacement> pls(f.clauses.size());
        struct SideState {
            std::map<int, int> next_left;   // var -> next descending offset
            std::map<int, int> next_right;  // var -> next ascending offset
        };
        SideState st[2];
        std::vector<size_t> order(f.clauses.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        // Inner-first: narrower variable spans first.
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return f.clauses[a][2] - f.clauses[a][0] < f.clauses[b][2] - f.clauses[b][0];
        });
        struct Placed {
            int lo_var, hi_var, level;
        };
        std::vector<Placed> placed[2];
        bool ok = true;
        for (size_t idx : order) {
            const auto& cl = f.clauses[idx];
            const int side_ix = static_cast<int>(idx) % 2;
            auto& ss = st[side_ix];
            auto slot_left = [&](int var) {
                auto [it, fresh] = ss.next_left.try_emplace(var, 49);
                (void)fresh;
                return var * 100 + it->second--;
            };
            auto slot_right = [&](int var) {
                auto [it, fresh] = ss.next_right.try_emplace(var, 50);
                (void)fresh;
                return var * 100 + it->second++;
            };
            ClausePlacement pl;
            pl.side = side_ix == 0 ? Side::above : Side::below;
            int level = 1;
            for (const auto& p : placed[side_ix]) {
                const bool contains = cl[0] <= p.lo_var && p.hi_var <= cl[2];
                const bool disjoint = p.hi_var < cl[0] || cl[2] < p.lo_var;
                if (contains)
                    level = std::max(level, p.level + 1);
                else if (!disjoint) {
                    ok = false;  // partial overlap on this side
                    break;
                }
                // Middle leg strictly inside an inner span cannot escape.
                if (contains && p.lo_var < cl[1] && cl[1] < p.hi_var) ok = false;
            }
            if (!ok) break;
            pl.level = level;
            pl.slots[0] = slot_left(cl[0]);
            pl.slots[2] = slot_right(cl[2]);
            bool mid_is_right_end = false;
            for (const auto& p : placed[side_ix])
                if (p.hi_var == cl[1]) mid_is_right_end = true;
            pl.slots[1] = mid_is_right_end ? slot_right(cl[1]) : slot_left(cl[1]);
            placed[side_ix].push_back({cl[0], cl[2], level});
            pls[idx] = pl;
        }
        if (!ok) continue;
        f.placements = pls;
        if (validate_embedding(f).empty()) return f;
    }
    throw std::runtime_error("could not sample an embeddable 1-in-3 formula");
}

OneInThreeSat embed_on_line(const std::vector<std::string>& variables,
                            const std::vector<std::array<int, 3>>& clauses) {
    OneInThreeSat f;
    f.variables = variables;
    f.clauses = clauses;

    // Per-variable slot bands sized by occurrence count, packed left to right.
    std::vector<int> band_start(variables.size() + 1, 0);
    std::vector<int> used(variables.size(), 0);
    for (const auto& cl : clauses)
        for (int v : cl) band_start[static_cast<size_t>(v) + 1]++;
    for (size_t v = 0; v < variables.size(); ++v) band_start[v + 1] += band_start[v];

    for (size_t c = 0; c < clauses.size(); ++c) {
        ClausePlacement pl;
        pl.side = c % 2 == 0 ? Side::above : Side::below;
        pl.level = 1 + static_cast<int>(c / 2);
        for (int i = 0; i < 3; ++i) {
            const auto v = static_cast<size_t>(clauses[c][static_cast<size_t>(i)]);
            pl.slots[static_cast<size_t>(i)] = band_start[v] + used[v]++;
        }
        f.placements.push_back(pl);
    }
    auto errors = validate_embedding(f);
    if (!errors.empty())
        throw std::invalid_argument(cat("formula does not embed on a line: ", join(errors, "; ")));
    return f;
}

ThreeDimMatching make_random_3dm(int n, int triple_count, uint64_t seed) {
    Rng rng(seed ^ 0x3d17u);
    ThreeDimMatching t;
    t.n = n;
    std::set<std::array<int, 3>> seen;
    const int universe = n * n * n;
    triple_count = std::min(triple_count, universe);
    while (static_cast<int>(t.triples.size()) < triple_count) {
        std::array<int, 3> tr{rng.range(0, n - 1), rng.range(0, n - 1), rng.range(0, n - 1)};
        if (seen.insert(tr).second) t.triples.push_back(tr);
    }
    return t;
}

SubsetSum make_random_subset_sum(int count, long long max_value, uint64_t seed) {
    Rng rng(seed ^ 0x55b5u);
    SubsetSum s;
    long long total = 0;
    for (int i = 0; i < count; ++i) {
        long long v = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(max_value)));
        s.elements.push_back(v);
        total += v;
    }
    if (rng.coin()) {
        for (long long v : s.elements)
            if (rng.coin()) s.target += v;
    } else {
        s.target = total > 0 ? static_cast<long long>(rng.below(static_cast<uint64_t>(total + 1))) : 0;
    }
    return s;
}

}  // namespace nythard::sources
