#include "tiles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace nythard::tiles {

namespace {

using Mask = uint32_t;

std::vector<Mask> tile_masks(const Instance& inst) {
    std::vector<Mask> masks(inst.tiles.size(), 0);
    for (size_t t = 0; t < inst.tiles.size(); ++t)
        for (int f : inst.tiles[t]) masks[t] |= Mask{1} << f;
    return masks;
}

std::string pack_masks(const std::vector<Mask>& masks, int cur) {
    std::string key(masks.size() * 4 + 1, '\0');
    for (size_t t = 0; t < masks.size(); ++t)
        for (int b = 0; b < 4; ++b)
            key[t * 4 + static_cast<size_t>(b)] = static_cast<char>((masks[t] >> (8 * b)) & 0xff);
    key.back() = static_cast<char>(cur + 1);
    return key;
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    std::set<std::string> names;
    for (const auto& f : inst.features) {
        if (f.empty()) out.push_back("empty feature name");
        if (!names.insert(f).second) out.push_back(cat("repeated feature name '", f, "'"));
    }
    std::vector<int> count(inst.features.size(), 0);
    for (size_t t = 0; t < inst.tiles.size(); ++t) {
        std::set<int> seen;
        for (int f : inst.tiles[t]) {
            if (f < 0 || f >= static_cast<int>(inst.features.size())) {
                out.push_back(cat("tile ", t, ": feature id ", f, " out of range"));
                continue;
            }
            if (!seen.insert(f).second)
                out.push_back(cat("tile ", t, ": feature '", inst.features[static_cast<size_t>(f)],
                                  "' repeated"));
            else
                count[static_cast<size_t>(f)]++;
        }
    }
    for (size_t f = 0; f < count.size(); ++f)
        if (count[f] == 0)
            out.push_back(cat("feature '", inst.features[f], "' appears on no tile"));
    if (inst.features.size() > 31) out.push_back("more than 31 features unsupported");
    return out;
}

bool is_solvable(const Instance& inst) {
    std::vector<int> count(inst.features.size(), 0);
    for (const auto& tile : inst.tiles)
        for (int f : tile) count[static_cast<size_t>(f)]++;
    return std::all_of(count.begin(), count.end(), [](int c) { return c % 2 == 0; });
}

GreedyOutcome solve_greedy(const Instance& inst) {
    if (!is_solvable(inst)) return {false, {}};
    auto masks = tile_masks(inst);
    const int n = static_cast<int>(masks.size());
    GreedyOutcome out;
    out.solvable = true;
    int cur = -1;
    for (int t = 0; t < n; ++t)
        if (masks[static_cast<size_t>(t)]) {
            cur = t;
            break;
        }
    if (cur < 0) return out;  // nothing to delete
    out.moves.push_back(cur);
    for (;;) {
        int next = -1;
        bool standard = false;
        for (int t = 0; t < n && next < 0; ++t)
            if (t != cur && (masks[static_cast<size_t>(t)] & masks[static_cast<size_t>(cur)])) {
                next = t;
                standard = true;
            }
        if (next < 0) {
            // Parity guarantees the current tile is empty here: teleport is forced.
            assert(masks[static_cast<size_t>(cur)] == 0);
            for (int t = 0; t < n && next < 0; ++t)
                if (t != cur && masks[static_cast<size_t>(t)]) next = t;
            if (next < 0) break;  // board fully cleared
        }
        if (standard) {
            const Mask shared = masks[static_cast<size_t>(cur)] & masks[static_cast<size_t>(next)];
            masks[static_cast<size_t>(cur)] &= ~shared;
            masks[static_cast<size_t>(next)] &= ~shared;
        }
        out.moves.push_back(next);
        cur = next;
    }
    return out;
}

MoveReport verify_moves(const Instance& inst, const std::vector<int>& moves) {
    MoveReport rep;
    const int n = static_cast<int>(inst.tiles.size());
    for (size_t i = 0; i < moves.size(); ++i) {
        if (moves[i] < 0 || moves[i] >= n)
            rep.errors.push_back(cat("move ", i, ": tile index ", moves[i], " out of range"));
        if (i > 0 && moves[i] == moves[i - 1])
            rep.errors.push_back(cat("move ", i, ": consecutive equal tile indices"));
    }
    if (!rep.errors.empty()) return rep;
    auto masks = tile_masks(inst);
    std::vector<int> parity(inst.features.size(), 0);
    for (Mask m : masks)
        for (size_t f = 0; f < parity.size(); ++f)
            if (m & (Mask{1} << f)) parity[f] ^= 1;
    int combo = 0;
    for (size_t i = 1; i < moves.size(); ++i) {
        const size_t from = static_cast<size_t>(moves[i - 1]);
        const size_t to = static_cast<size_t>(moves[i]);
        const Mask shared = masks[from] & masks[to];
        if (shared) {
            masks[from] &= ~shared;
            masks[to] &= ~shared;
            rep.standard_moves++;
            combo++;
        } else if (masks[from] == 0) {
            rep.forced_teleports++;
        } else {
            rep.unforced_teleports++;
            combo = 0;
        }
        rep.max_combo = std::max(rep.max_combo, combo);
        // Feature parities never change under the game dynamics.
        for (size_t f = 0; f < parity.size(); ++f) {
            int c = 0;
            for (Mask m : masks)
                if (m & (Mask{1} << f)) c ^= 1;
            assert(c == parity[f]);
            (void)c;
        }
    }
    rep.all_deleted =
        std::all_of(masks.begin(), masks.end(), [](Mask m) { return m == 0; });
    return rep;
}

StructureGraph build_structure_graph(const Instance& inst) {
    StructureGraph g;
    g.tile_count = static_cast<int>(inst.tiles.size());
    g.feature_count = static_cast<int>(inst.features.size());
    for (size_t t = 0; t < inst.tiles.size(); ++t)
        for (int f : inst.tiles[t]) g.edges.emplace_back(static_cast<int>(t), f);
    return g;
}

int sharing_number(const Instance& inst) {
    if (inst.tiles.size() < 2) throw std::invalid_argument("sharing number needs at least 2 tiles");
    auto masks = tile_masks(inst);
    int best = 0;
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            best = std::max(best, std::popcount(masks[i] & masks[j]));
    return best;
}

NoTeleportOutcome no_teleport_solvable(const Instance& inst) {
    if (sharing_number(inst) != 1)
        throw std::invalid_argument("no-teleport characterization requires sharing number 1");
    const int n = static_cast<int>(inst.tiles.size());
    const int m = static_cast<int>(inst.features.size());
    // Vertices: tiles 0..n-1, features n..n+m-1.
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n + m));  // (to, edge id)
    int edge_count = 0;
    for (int t = 0; t < n; ++t)
        for (int f : inst.tiles[static_cast<size_t>(t)]) {
            adj[static_cast<size_t>(t)].emplace_back(n + f, edge_count);
            adj[static_cast<size_t>(n + f)].emplace_back(t, edge_count);
            edge_count++;
        }
    NoTeleportOutcome out;
    if (edge_count == 0) {
        out.solvable = true;  // nothing to delete
        return out;
    }
    // Even degree for every feature vertex; at most two odd tile vertices.
    std::vector<int> odd_tiles;
    for (int v = 0; v < n + m; ++v) {
        if (adj[static_cast<size_t>(v)].size() % 2 == 0) continue;
        if (v >= n) return out;
        odd_tiles.push_back(v);
    }
    if (odd_tiles.size() > 2) return out;
    // Connectivity over non-isolated vertices.
    int start = odd_tiles.empty() ? -1 : odd_tiles[0];
    if (start < 0)
        for (int t = 0; t < n && start < 0; ++t)
            if (!adj[static_cast<size_t>(t)].empty()) start = t;
    std::vector<bool> seen(static_cast<size_t>(n + m), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (auto [to, e] : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(to)]) {
                seen[static_cast<size_t>(to)] = true;
                stack.push_back(to);
            }
    }
    for (int v = 0; v < n + m; ++v)
        if (!adj[static_cast<size_t>(v)].empty() && !seen[static_cast<size_t>(v)]) return out;

    // Hierholzer trail from `start`; with all feature degrees even the trail
    // necessarily ends on a tile vertex.
    std::vector<bool> edge_used(static_cast<size_t>(edge_count), false);
    std::vector<size_t> next_edge(static_cast<size_t>(n + m), 0);
    std::vector<int> walk_stack{start};
    std::vector<int> trail;
    while (!walk_stack.empty()) {
        const int v = walk_stack.back();
        auto& cursor = next_edge[static_cast<size_t>(v)];
        while (cursor < adj[static_cast<size_t>(v)].size() &&
               edge_used[static_cast<size_t>(adj[static_cast<size_t>(v)][cursor].second)])
            ++cursor;
        if (cursor == adj[static_cast<size_t>(v)].size()) {
            trail.push_back(v);
            walk_stack.pop_back();
        } else {
            auto [to, e] = adj[static_cast<size_t>(v)][cursor];
            edge_used[static_cast<size_t>(e)] = true;
            walk_stack.push_back(to);
        }
    }
    std::reverse(trail.begin(), trail.end());
    out.solvable = true;
    for (int v : trail)
        if (v < n) out.moves.push_back(v);  // keep tile vertices only
    return out;
}

BruteOutcome brute_force_solvable(const Instance& inst, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    auto start_masks = tile_masks(inst);
    // Teleports are unrestricted, so the current tile never limits what can be
    // deleted next; the search runs over feature states alone.
    std::unordered_map<std::string, bool> memo;
    bool over = false;
    auto rec = [&](auto&& self, std::vector<Mask>& masks) -> bool {
        if (std::all_of(masks.begin(), masks.end(), [](Mask m) { return m == 0; })) return true;
        const std::string key = pack_masks(masks, 0);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (!bud.tick()) {
            over = true;
            return false;
        }
        bool win = false;
        for (size_t i = 0; i < masks.size() && !win; ++i)
            for (size_t j = i + 1; j < masks.size() && !win; ++j) {
                const Mask shared = masks[i] & masks[j];
                if (!shared) continue;
                masks[i] &= ~shared;
                masks[j] &= ~shared;
                win = self(self, masks);
                masks[i] |= shared;
                masks[j] |= shared;
                if (over) return false;
            }
        if (!over) memo[key] = win;
        return win;
    };
    const bool win = rec(rec, start_masks);
    if (over) return {SearchStatus::budget, false};
    return {win ? SearchStatus::found : SearchStatus::exhausted, win};
}

BruteOutcome brute_force_no_teleport(const Instance& inst, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    auto start_masks = tile_masks(inst);
    const size_t n = start_masks.size();
    std::unordered_map<std::string, bool> memo;
    bool over = false;
    auto rec = [&](auto&& self, std::vector<Mask>& masks, int cur) -> bool {
        if (std::all_of(masks.begin(), masks.end(), [](Mask m) { return m == 0; })) return true;
        const std::string key = pack_masks(masks, cur);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (!bud.tick()) {
            over = true;
            return false;
        }
        bool win = false;
        for (size_t t = 0; t < n && !win; ++t) {
            if (static_cast<int>(t) == cur) continue;
            const Mask shared = masks[static_cast<size_t>(cur)] & masks[t];
            if (!shared) continue;
            masks[static_cast<size_t>(cur)] &= ~shared;
            masks[t] &= ~shared;
            win = self(self, masks, static_cast<int>(t));
            masks[static_cast<size_t>(cur)] |= shared;
            masks[t] |= shared;
            if (over) return false;
        }
        if (!over) memo[key] = win;
        return win;
    };
    bool win = std::all_of(start_masks.begin(), start_masks.end(), [](Mask m) { return m == 0; });
    for (size_t t = 0; t < n && !win && !over; ++t)
        if (start_masks[t]) win = rec(rec, start_masks, static_cast<int>(t));
    if (over) return {SearchStatus::budget, false};
    return {win ? SearchStatus::found : SearchStatus::exhausted, win};
}

Instance make_random_instance(uint64_t seed, int max_tiles, int max_features) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.range(1, static_cast<uint64_t>(max_tiles)));
    const int m = static_cast<int>(rng.range(1, static_cast<uint64_t>(max_features)));
    Instance inst;
    for (int f = 0; f < m; ++f) inst.features.push_back(cat("f", f));
    inst.tiles.assign(static_cast<size_t>(n), {});
    for (int f = 0; f < m; ++f) {
        // Each feature lands on a random non-empty set of tiles (even-sized
        // half the time so both solvable and unsolvable instances appear).
        std::vector<int> on;
        for (int t = 0; t < n; ++t)
            if (rng.coin()) on.push_back(t);
        if (on.empty()) on.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(n))));
        if (rng.coin() && on.size() % 2 == 1) {
            if (static_cast<int>(on.size()) < n) {
                for (int t = 0; t < n; ++t)
                    if (std::find(on.begin(), on.end(), t) == on.end()) {
                        on.push_back(t);
                        break;
                    }
            } else if (on.size() > 1) {
                on.pop_back();
            }
        }
        for (int t : on) inst.tiles[static_cast<size_t>(t)].push_back(f);
    }
    return inst;
}

}  // namespace nythard::tiles
