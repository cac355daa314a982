#include "letterboxed.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace nythard::letterboxed {

namespace {

using Residual = std::string;  // one byte per (side, symbol) slot

Residual initial_residual(const Puzzle& p) {
    Residual r(static_cast<size_t>(p.side_count() * p.symbol_count()), '\0');
    for (int s = 0; s < p.side_count(); ++s)
        for (int g = 0; g < p.symbol_count(); ++g)
            r[static_cast<size_t>(s * p.symbol_count() + g)] =
                static_cast<char>(p.side_counts[static_cast<size_t>(s)][static_cast<size_t>(g)]);
    return r;
}

// Saturating decrement: once a slot is exhausted further visits are free.
void decrement(Residual& r, int side, int sym, int sigma) {
    auto& c = r[static_cast<size_t>(side * sigma + sym)];
    if (c > 0) c = static_cast<char>(c - 1);
}

bool all_zero(const Residual& r) {
    for (char c : r)
        if (c != 0) return false;
    return true;
}

int side_count_of(const Puzzle& p, int side, int sym) {
    return p.side_counts[static_cast<size_t>(side)][static_cast<size_t>(sym)];
}

std::vector<std::vector<int>> words_by_first_symbol(const Puzzle& p) {
    std::vector<std::vector<int>> by(static_cast<size_t>(p.symbol_count()));
    for (size_t w = 0; w < p.dictionary.size(); ++w)
        if (!p.dictionary[w].empty())
            by[static_cast<size_t>(p.dictionary[w][0])].push_back(static_cast<int>(w));
    return by;
}

std::string pack_boundary(int side, int last_sym, const Residual& r) {
    std::string key;
    key.reserve(r.size() + 3);
    key.push_back(static_cast<char>(side));
    key.push_back(static_cast<char>(last_sym & 0xff));
    key.push_back(static_cast<char>((last_sym >> 8) & 0xff));
    key += r;
    return key;
}

}  // namespace

std::vector<std::string> validate_puzzle(const Puzzle& p) {
    std::vector<std::string> out;
    const int sigma = p.symbol_count();
    std::set<std::string> names;
    for (const auto& a : p.alphabet) {
        if (a.empty()) out.push_back("empty symbol spelling");
        if (!names.insert(a).second) out.push_back(cat("duplicate symbol: ", a));
    }
    if (p.side_count() < 2) out.push_back("need at least 2 sides");
    int first_card = -1;
    for (int s = 0; s < p.side_count(); ++s) {
        if (static_cast<int>(p.side_counts[static_cast<size_t>(s)].size()) != sigma) {
            out.push_back(cat("side ", s, ": count row has wrong width"));
            continue;
        }
        for (int c : p.side_counts[static_cast<size_t>(s)])
            if (c < 0 || c > 255) out.push_back(cat("side ", s, ": multiplicity out of range"));
        const int card = p.side_cardinality(s);
        if (first_card < 0) first_card = card;
        if (card != first_card)
            out.push_back(cat("side ", s, ": cardinality ", card, " differs from side 0 (", first_card, ")"));
    }
    if (first_card == 0) out.push_back("sides must be non-empty");
    std::set<std::vector<int>> words;
    for (size_t w = 0; w < p.dictionary.size(); ++w) {
        const auto& word = p.dictionary[w];
        if (word.empty()) out.push_back(cat("word ", w, " is empty"));
        for (int sym : word)
            if (sym < 0 || sym >= sigma) out.push_back(cat("word ", w, ": symbol id out of range"));
        if (!words.insert(word).second) out.push_back(cat("word ", w, " duplicates an earlier entry"));
    }
    return out;
}

std::vector<std::string> verify_solution(const Puzzle& p, const Solution& s, long long k) {
    std::vector<std::string> out;
    if (s.words.empty()) out.push_back("solution must play at least one word");
    if (static_cast<long long>(s.words.size()) > k)
        out.push_back(cat("uses ", s.words.size(), " words, budget is ", k));
    size_t total = 0;
    for (size_t i = 0; i < s.words.size(); ++i) {
        const int w = s.words[i];
        if (w < 0 || w >= static_cast<int>(p.dictionary.size())) {
            out.push_back(cat("word index ", w, " out of range"));
            return out;
        }
        total += p.dictionary[static_cast<size_t>(w)].size();
        if (i > 0) {
            const auto& prev = p.dictionary[static_cast<size_t>(s.words[i - 1])];
            const auto& cur = p.dictionary[static_cast<size_t>(w)];
            if (prev.empty() || cur.empty() || prev.back() != cur.front())
                out.push_back(cat("word ", i, " does not chain from the previous word"));
        }
    }
    if (s.side_trace.size() != total) {
        out.push_back(cat("trace length ", s.side_trace.size(), " != concatenation length ", total));
        return out;
    }
    if (!out.empty()) return out;

    // Flatten the concatenation and mark word-end positions.
    std::vector<int> sigma_chars;
    std::vector<bool> word_end;
    for (int w : s.words) {
        const auto& word = p.dictionary[static_cast<size_t>(w)];
        for (size_t i = 0; i < word.size(); ++i) {
            sigma_chars.push_back(word[i]);
            word_end.push_back(i + 1 == word.size());
        }
    }
    const int S = p.side_count();
    for (size_t i = 0; i < sigma_chars.size(); ++i) {
        const int side = s.side_trace[i];
        if (side < 0 || side >= S) {
            out.push_back(cat("trace position ", i, ": side out of range"));
            return out;
        }
        if (side_count_of(p, side, sigma_chars[i]) == 0)
            out.push_back(cat("trace position ", i, ": symbol not on side ", side + 1));
        if (i + 1 < sigma_chars.size()) {
            if (word_end[i] && s.side_trace[i + 1] != side)
                out.push_back(cat("trace position ", i, ": chaining pivot must stay on the same side"));
            if (!word_end[i] && s.side_trace[i + 1] == side)
                out.push_back(cat("trace position ", i, ": consecutive characters on the same side"));
        }
    }
    // Coverage: pivots count once (the word-end copy is skipped, the word-start
    // copy counts), the final position always counts.
    std::vector<int> covered(static_cast<size_t>(S * p.symbol_count()), 0);
    for (size_t i = 0; i < sigma_chars.size(); ++i) {
        if (i + 1 == sigma_chars.size() || !word_end[i])
            covered[static_cast<size_t>(s.side_trace[i] * p.symbol_count() + sigma_chars[i])]++;
    }
    for (int side = 0; side < S; ++side)
        for (int g = 0; g < p.symbol_count(); ++g) {
            const int need = side_count_of(p, side, g);
            const int got = covered[static_cast<size_t>(side * p.symbol_count() + g)];
            if (got < need)
                out.push_back(cat("side ", side + 1, " symbol ", p.alphabet[static_cast<size_t>(g)],
                                  ": covered ", got, " of ", need));
        }
    return out;
}

long long certificate_bound(const Puzzle& p) {
    const long long S = p.side_count();
    long long n = 0;
    for (int s = 0; s < p.side_count(); ++s) n = std::max<long long>(n, p.side_cardinality(s));
    return S * S * p.symbol_count() * n;
}

// ----------------------------------------------------------- shortest paths

namespace {

struct DpNode {
    long long dist = std::numeric_limits<long long>::max();
    int kind = -1;  // 0 start edge, 1 continuation, 2 new word
    int word = -1;
    int side = -1;
    int parent_side = -1;
    std::string parent;
};

std::string pack_state(int word, int pos, int side, const Residual& r) {
    std::string key;
    key.reserve(r.size() + 5);
    key.push_back(static_cast<char>(word & 0xff));
    key.push_back(static_cast<char>((word >> 8) & 0xff));
    key.push_back(static_cast<char>(pos & 0xff));
    key.push_back(static_cast<char>((pos >> 8) & 0xff));
    key.push_back(static_cast<char>(side));
    key += r;
    return key;
}

struct Unpacked {
    int word, pos, side;
    Residual res;
};

Unpacked unpack_state(const std::string& key) {
    Unpacked u;
    u.word = static_cast<unsigned char>(key[0]) | (static_cast<unsigned char>(key[1]) << 8);
    u.pos = static_cast<unsigned char>(key[2]) | (static_cast<unsigned char>(key[3]) << 8);
    u.side = static_cast<unsigned char>(key[4]);
    u.res = key.substr(5);
    return u;
}

DpOutcome run_dp(const Puzzle& p, bool letters_metric, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    const int sigma = p.symbol_count();
    const int S = p.side_count();
    const auto by_first = words_by_first_symbol(p);
    const Residual r0 = initial_residual(p);

    std::unordered_map<std::string, DpNode> nodes;
    std::deque<std::pair<std::string, long long>> dq;

    auto relax = [&](const std::string& key, long long d, int kind, int word, int side,
                     int parent_side, const std::string& parent, int weight) {
        auto& node = nodes[key];
        if (d < node.dist) {
            node.dist = d;
            node.kind = kind;
            node.word = word;
            node.side = side;
            node.parent_side = parent_side;
            node.parent = parent;
            if (weight == 0)
                dq.emplace_front(key, d);
            else
                dq.emplace_back(key, d);
        }
    };

    for (size_t w = 0; w < p.dictionary.size(); ++w) {
        const auto& word = p.dictionary[w];
        if (word.empty()) continue;
        for (int i = 0; i < S; ++i) {
            if (side_count_of(p, i, word[0]) == 0) continue;
            Residual r = r0;
            decrement(r, i, word[0], sigma);
            relax(pack_state(static_cast<int>(w), 1, i, r), 0, 0, static_cast<int>(w), i, -1, "", 0);
        }
    }

    long long best = std::numeric_limits<long long>::max();
    std::string best_key;
    while (!dq.empty()) {
        auto [key, d] = dq.front();
        dq.pop_front();
        auto it = nodes.find(key);
        if (it == nodes.end() || it->second.dist != d) continue;  // stale entry
        if (best != std::numeric_limits<long long>::max() && d + 1 >= best) break;
        if (!bud.tick()) return {SearchStatus::budget, -1, {}};
        const Unpacked u = unpack_state(key);
        const auto& word = p.dictionary[static_cast<size_t>(u.word)];
        if (u.pos == static_cast<int>(word.size())) {
            if (all_zero(u.res) && d + 1 < best) {
                best = d + 1;
                best_key = key;
            }
            const int last = word.back();
            for (int w2 : by_first[static_cast<size_t>(last)]) {
                const auto& next = p.dictionary[static_cast<size_t>(w2)];
                if (next.size() == 1) {
                    const int weight = letters_metric ? 0 : 1;
                    relax(pack_state(w2, 1, u.side, u.res), d + weight, 2, w2, u.side, u.side, key,
                          weight);
                    continue;
                }
                for (int j = 0; j < S; ++j) {
                    if (j == u.side || side_count_of(p, j, next[1]) == 0) continue;
                    Residual r = u.res;
                    decrement(r, j, next[1], sigma);
                    relax(pack_state(w2, 2, j, r), d + 1, 2, w2, j, u.side, key, 1);
                }
            }
        } else {
            const int sym = word[static_cast<size_t>(u.pos)];
            const int weight = letters_metric ? 1 : 0;
            for (int j = 0; j < S; ++j) {
                if (j == u.side || side_count_of(p, j, sym) == 0) continue;
                Residual r = u.res;
                decrement(r, j, sym, sigma);
                relax(pack_state(u.word, u.pos + 1, j, r), d + weight, 1, u.word, j, u.side, key,
                      weight);
            }
        }
    }
    if (best == std::numeric_limits<long long>::max()) return {SearchStatus::exhausted, -1, {}};

    // Rebuild the witness along parent pointers.
    std::vector<const DpNode*> chain;
    std::string cur = best_key;
    while (true) {
        const DpNode& node = nodes.at(cur);
        chain.push_back(&node);
        if (node.kind == 0) break;
        cur = node.parent;
    }
    std::reverse(chain.begin(), chain.end());
    Solution sol;
    for (const DpNode* node : chain) {
        switch (node->kind) {
            case 0:
                sol.words.push_back(node->word);
                sol.side_trace.push_back(node->side);
                break;
            case 1:
                sol.side_trace.push_back(node->side);
                break;
            case 2: {
                sol.words.push_back(node->word);
                const auto& w = p.dictionary[static_cast<size_t>(node->word)];
                sol.side_trace.push_back(node->parent_side);  // pivot copy
                if (w.size() >= 2) sol.side_trace.push_back(node->side);
                break;
            }
        }
    }
    return {SearchStatus::found, best, sol};
}

}  // namespace

DpOutcome min_words_dp(const Puzzle& p, Budget* budget) { return run_dp(p, false, budget); }

DpOutcome min_letters_dp(const Puzzle& p, Budget* budget) { return run_dp(p, true, budget); }

// ------------------------------------------------------------------ search

namespace {

struct WordOutcome {
    int side;
    Residual res;
    std::vector<int> trace;  // side per character, including the first one
};

// Distinct (end side, end residual) outcomes of threading `word` starting on
// `side`. For a chained word the first character is the pivot: it stays on
// `side` and does not decrement again. With `must_finish` the word is the
// last one the budget allows, so branches whose leftover coverage cannot fit
// in the remaining suffix are dropped, and only all-covered ends survive.
std::vector<WordOutcome> thread_word(const Puzzle& p, const std::vector<int>& word, int side,
                                     const Residual& res_in, bool first_decrement, bool must_finish,
                                     Budget& bud, bool& over) {
    const int sigma = p.symbol_count();
    const int S = p.side_count();
    struct Item {
        int pos, side;
        Residual res;
        int parent;  // index into items
    };

    // suffix[pos * sigma + g]: occurrences of g in word[pos..].
    std::vector<int> suffix;
    if (must_finish) {
        suffix.assign((word.size() + 1) * static_cast<size_t>(sigma), 0);
        for (size_t i = word.size(); i-- > 0;) {
            for (int g = 0; g < sigma; ++g)
                suffix[i * static_cast<size_t>(sigma) + static_cast<size_t>(g)] =
                    suffix[(i + 1) * static_cast<size_t>(sigma) + static_cast<size_t>(g)];
            suffix[i * static_cast<size_t>(sigma) + static_cast<size_t>(word[i])]++;
        }
    }
    auto feasible = [&](int pos, const Residual& r) {
        if (!must_finish) return true;
        int total = 0;
        for (int g = 0; g < sigma; ++g) {
            int need = 0;
            for (int s = 0; s < S; ++s) need += r[static_cast<size_t>(s * sigma + g)];
            if (need > suffix[static_cast<size_t>(pos * sigma + g)]) return false;
            total += need;
        }
        return total <= static_cast<int>(word.size()) - pos;
    };

    std::vector<Item> items;
    Residual start = res_in;
    if (first_decrement) decrement(start, side, word[0], sigma);
    std::unordered_set<std::string> seen;
    std::vector<WordOutcome> outcomes;
    if (!feasible(1, start)) return outcomes;
    items.push_back({1, side, start, -1});
    seen.insert(pack_state(0, 1, side, start));
    for (size_t head = 0; head < items.size(); ++head) {
        const Item it = items[head];
        if (!bud.tick()) {
            over = true;
            return outcomes;
        }
        if (it.pos == static_cast<int>(word.size())) {
            if (must_finish && !all_zero(it.res)) continue;
            WordOutcome o;
            o.side = it.side;
            o.res = it.res;
            int cur = static_cast<int>(head);
            while (cur >= 0) {
                o.trace.push_back(items[static_cast<size_t>(cur)].side);
                cur = items[static_cast<size_t>(cur)].parent;
            }
            std::reverse(o.trace.begin(), o.trace.end());
            outcomes.push_back(std::move(o));
            continue;
        }
        const int sym = word[static_cast<size_t>(it.pos)];
        for (int j = 0; j < S; ++j) {
            if (j == it.side || side_count_of(p, j, sym) == 0) continue;
            Residual r = it.res;
            decrement(r, j, sym, sigma);
            if (!feasible(it.pos + 1, r)) continue;
            std::string key = pack_state(0, it.pos + 1, j, r);
            if (seen.insert(std::move(key)).second) items.push_back({it.pos + 1, j, r, static_cast<int>(head)});
        }
    }
    return outcomes;
}

struct SearchCtx {
    const Puzzle& p;
    long long k_max;
    Budget& bud;
    std::vector<std::vector<int>> by_first;
    std::unordered_map<std::string, long long> failed_at;
    bool over = false;
    std::vector<int> words;
    std::vector<int> trace;
};

bool search_rec(SearchCtx& ctx, int side, int last_sym, const Residual& res, long long used) {
    if (all_zero(res)) return true;
    if (ctx.over || used >= ctx.k_max) return false;
    const std::string key = pack_boundary(side, last_sym, res);
    auto it = ctx.failed_at.find(key);
    if (it != ctx.failed_at.end() && used >= it->second) return false;
    if (!ctx.bud.tick()) {
        ctx.over = true;
        return false;
    }
    for (int w : ctx.by_first[static_cast<size_t>(last_sym)]) {
        const auto& word = ctx.p.dictionary[static_cast<size_t>(w)];
        auto outcomes =
            thread_word(ctx.p, word, side, res, false, used + 1 >= ctx.k_max, ctx.bud, ctx.over);
        for (const auto& o : outcomes) {
            ctx.words.push_back(w);
            ctx.trace.insert(ctx.trace.end(), o.trace.begin(), o.trace.end());
            if (search_rec(ctx, o.side, word.back(), o.res, used + 1)) return true;
            ctx.trace.resize(ctx.trace.size() - o.trace.size());
            ctx.words.pop_back();
        }
        if (ctx.over) return false;
    }
    // Only a fully explored subtree proves failure for this word budget.
    auto [slot, fresh] = ctx.failed_at.try_emplace(key, used);
    if (!fresh) slot->second = std::min(slot->second, used);
    return false;
}

}  // namespace

SearchOutcome solve_search(const Puzzle& p, long long k_max, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    SearchCtx ctx{p, k_max, bud, words_by_first_symbol(p), {}, false, {}, {}};
    const Residual r0 = initial_residual(p);
    if (k_max >= 1) {
        for (size_t w = 0; w < p.dictionary.size(); ++w) {
            const auto& word = p.dictionary[w];
            if (word.empty()) continue;
            for (int i = 0; i < p.side_count(); ++i) {
                if (side_count_of(p, i, word[0]) == 0) continue;
                auto outcomes = thread_word(p, word, i, r0, true, k_max == 1, bud, ctx.over);
                for (const auto& o : outcomes) {
                    ctx.words.push_back(static_cast<int>(w));
                    ctx.trace.insert(ctx.trace.end(), o.trace.begin(), o.trace.end());
                    if (search_rec(ctx, o.side, word.back(), o.res, 1))
                        return {SearchStatus::found, Solution{ctx.words, ctx.trace}};
                    ctx.trace.resize(ctx.trace.size() - o.trace.size());
                    ctx.words.pop_back();
                }
                if (ctx.over) return {SearchStatus::budget, {}};
            }
        }
    }
    if (ctx.over) return {SearchStatus::budget, {}};
    return {SearchStatus::exhausted, {}};
}

// ------------------------------------------------------------ brute oracle

namespace {

struct BruteCtx {
    const Puzzle& p;
    long long k_cap;
    Budget& bud;
    std::vector<std::vector<int>> by_first;
    bool over = false;
    long long best = std::numeric_limits<long long>::max();
    Solution best_sol;
    // Boundary state -> largest word allowance that still found nothing.
    std::unordered_map<std::string, long long> failed;
    std::vector<int> words;
    std::vector<int> trace;
};

// Plain recursive enumeration of every side trace of `word`; outcomes are
// reported once per distinct (end side, end residual).
void enumerate_traces(BruteCtx& ctx, const std::vector<int>& word, size_t pos, int side,
                      Residual res, std::vector<int>& partial,
                      std::unordered_set<std::string>& reported,
                      const std::function<void(int, const Residual&, const std::vector<int>&)>& fn) {
    if (ctx.over) return;
    if (!ctx.bud.tick()) {
        ctx.over = true;
        return;
    }
    if (pos == word.size()) {
        std::string key = pack_boundary(side, word.back(), res);
        if (reported.insert(std::move(key)).second) fn(side, res, partial);
        return;
    }
    const int sym = word[pos];
    for (int j = 0; j < ctx.p.side_count(); ++j) {
        if (j == side || side_count_of(ctx.p, j, sym) == 0) continue;
        Residual r = res;
        decrement(r, j, sym, ctx.p.symbol_count());
        partial.push_back(j);
        enumerate_traces(ctx, word, pos + 1, j, std::move(r), partial, reported, fn);
        partial.pop_back();
        if (ctx.over) return;
    }
}

void brute_rec(BruteCtx& ctx, int side, int last_sym, const Residual& res, long long used) {
    if (ctx.over) return;
    if (all_zero(res)) {
        if (used < ctx.best) {
            ctx.best = used;
            ctx.best_sol = Solution{ctx.words, ctx.trace};
        }
        return;
    }
    if (used + 1 >= ctx.best || used >= ctx.k_cap) return;
    const long long allowance = std::min(ctx.k_cap, ctx.best - 1) - used;
    const std::string key = pack_boundary(side, last_sym, res);
    auto it = ctx.failed.find(key);
    if (it != ctx.failed.end() && it->second >= allowance) return;
    const long long best_before = ctx.best;
    for (int w : ctx.by_first[static_cast<size_t>(last_sym)]) {
        const auto& word = ctx.p.dictionary[static_cast<size_t>(w)];
        std::vector<int> partial{side};  // pivot stays on the same side
        std::unordered_set<std::string> reported;
        enumerate_traces(ctx, word, 1, side, res, partial, reported,
                         [&](int s2, const Residual& r2, const std::vector<int>& tr) {
                             ctx.words.push_back(w);
                             ctx.trace.insert(ctx.trace.end(), tr.begin(), tr.end());
                             brute_rec(ctx, s2, word.back(), r2, used + 1);
                             ctx.trace.resize(ctx.trace.size() - tr.size());
                             ctx.words.pop_back();
                         });
        if (ctx.over) break;
    }
    // A fruitless subtree refutes every continuation within the allowance.
    if (!ctx.over && ctx.best == best_before) {
        auto& slot = ctx.failed[key];
        slot = std::max(slot, allowance);
    }
}

}  // namespace

BruteOutcome brute_force_min_words(const Puzzle& p, long long k_cap, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    BruteCtx ctx{p, k_cap, bud, words_by_first_symbol(p), false,
                 std::numeric_limits<long long>::max(), {}, {}, {}, {}};
    const Residual r0 = initial_residual(p);
    if (k_cap >= 1) {
        for (size_t w = 0; w < p.dictionary.size() && !ctx.over; ++w) {
            const auto& word = p.dictionary[w];
            if (word.empty()) continue;
            for (int i = 0; i < p.side_count() && !ctx.over; ++i) {
                if (side_count_of(p, i, word[0]) == 0) continue;
                Residual r = r0;
                decrement(r, i, word[0], p.symbol_count());
                std::vector<int> partial{i};
                std::unordered_set<std::string> reported;
                enumerate_traces(ctx, word, 1, i, r, partial, reported,
                                 [&](int s2, const Residual& r2, const std::vector<int>& tr) {
                                     ctx.words.push_back(static_cast<int>(w));
                                     ctx.trace.insert(ctx.trace.end(), tr.begin(), tr.end());
                                     brute_rec(ctx, s2, word.back(), r2, 1);
                                     ctx.trace.resize(ctx.trace.size() - tr.size());
                                     ctx.words.pop_back();
                                 });
            }
        }
    }
    if (ctx.over) return {SearchStatus::budget, -1, {}};
    if (ctx.best == std::numeric_limits<long long>::max()) return {SearchStatus::exhausted, -1, {}};
    return {SearchStatus::found, ctx.best, ctx.best_sol};
}

Puzzle make_random_puzzle(uint64_t seed, const RandomPuzzleParams& params) {
    Rng rng(seed ^ 0x1b0cULL);
    Puzzle p;
    const int symbols = rng.range(1, params.symbols_max);
    for (int i = 0; i < symbols; ++i) p.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    const int n = rng.range(1, params.side_cardinality_max);
    p.side_counts.assign(static_cast<size_t>(params.sides),
                         std::vector<int>(static_cast<size_t>(symbols), 0));
    for (auto& side : p.side_counts)
        for (int i = 0; i < n; ++i) side[rng.below(static_cast<uint64_t>(symbols))]++;
    const int words = rng.range(1, params.words_max);
    std::set<std::vector<int>> seen;
    for (int w = 0; w < words; ++w) {
        std::vector<int> word;
        const int len = rng.range(1, params.word_length_max);
        for (int i = 0; i < len; ++i)
            word.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(symbols))));
        if (seen.insert(word).second) p.dictionary.push_back(word);
    }
    return p;
}

}  // namespace nythard::letterboxed
