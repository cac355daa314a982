#include "letterboxed_reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace nythard::letterboxed {

namespace {

void throw_if(bool bad, const std::string& msg) {
    if (bad) throw std::invalid_argument(msg);
}

void require_valid(const std::vector<std::string>& errors, const char* what) {
    if (!errors.empty()) throw std::invalid_argument(cat(what, ": ", join(errors, "; ")));
}

// Deterministically de-collides a spelling against symbols already taken.
std::string fresh_name(std::unordered_set<std::string>& used, std::string base) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
}

}  // namespace

NaeReduction reduce_nae3sat(const sources::Nae3Sat& f) {
    require_valid(sources::validate_nae(f), "nae3sat instance");
    const int vars = static_cast<int>(f.variables.size());
    const int clauses = static_cast<int>(f.clauses.size());
    throw_if(clauses == 0, "nae3sat instance: no clauses");

    NaeReduction red;
    for (int v = 0; v < vars; ++v) red.occurrence_count[v] = 0;
    for (const auto& cl : f.clauses)
        for (int v : cl) red.occurrence_count[v]++;
    for (int v = 0; v < vars; ++v)
        throw_if(red.occurrence_count[v] == 0,
                 cat("nae3sat instance: variable ", f.variables[static_cast<size_t>(v)],
                     " occurs in no clause"));

    // Symbol ids: variables, then clause markers, then per-variable stars,
    // then the separator and the padding symbol.
    Puzzle& p = red.puzzle;
    std::unordered_set<std::string> used(f.variables.begin(), f.variables.end());
    p.alphabet = f.variables;
    const int clause_base = vars;
    for (int j = 0; j < clauses; ++j)
        p.alphabet.push_back(fresh_name(used, cat("c", j)));
    const int star_base = vars + clauses;
    for (int v = 0; v < vars; ++v)
        p.alphabet.push_back(fresh_name(used, cat("*", f.variables[static_cast<size_t>(v)])));
    const int hash = star_base + vars;
    p.alphabet.push_back(fresh_name(used, "__hash"));
    const int tau = hash + 1;
    p.alphabet.push_back(fresh_name(used, "__tau"));
    const int symbols = tau + 1;

    // Shared cardinality of the two assignment sides.
    int g = 2 * clauses;
    for (int v = 0; v < vars; ++v) g += 2 * red.occurrence_count[v] - 1;

    p.side_counts.assign(4, std::vector<int>(static_cast<size_t>(symbols), 0));
    p.side_counts[0][static_cast<size_t>(hash)] = 1;
    p.side_counts[0][static_cast<size_t>(tau)] = g - 1;
    for (int side : {1, 2}) {
        auto& counts = p.side_counts[static_cast<size_t>(side)];
        for (int v = 0; v < vars; ++v) {
            counts[static_cast<size_t>(v)] = red.occurrence_count[v];
            counts[static_cast<size_t>(star_base + v)] = red.occurrence_count[v] - 1;
        }
        for (int j = 0; j < clauses; ++j) counts[static_cast<size_t>(clause_base + j)] = 2;
    }
    p.side_counts[3][static_cast<size_t>(tau)] = g;

    // Single word: variable runs, star cleanup, clause blocks, padding.
    std::vector<int> word;
    word.push_back(hash);
    red.first_occurrence.assign(static_cast<size_t>(vars), 0);
    for (int v = 0; v < vars; ++v) {
        red.variable_order.push_back(v);
        red.first_occurrence[static_cast<size_t>(v)] = word.size();
        word.push_back(v);
        for (int r = 1; r < red.occurrence_count[v]; ++r) {
            word.push_back(star_base + v);
            word.push_back(v);
        }
        word.push_back(hash);
    }
    for (int v = 0; v < vars; ++v) {
        for (int r = 1; r < red.occurrence_count[v]; ++r) {
            word.push_back(star_base + v);
            word.push_back(hash);
        }
    }
    for (int j = 0; j < clauses; ++j) {
        for (int lit = 0; lit < 3; ++lit) {
            word.push_back(f.clauses[static_cast<size_t>(j)][static_cast<size_t>(lit)]);
            word.push_back(clause_base + j);
            word.push_back(hash);
        }
        word.push_back(clause_base + j);
        word.push_back(hash);
    }
    for (int r = 0; r < 2 * g - 1; ++r) word.push_back(tau);
    p.dictionary.push_back(std::move(word));

    require_valid(validate_puzzle(p), "reduced puzzle");
    return red;
}

sources::Assignment pullback_nae(const NaeReduction& red, const Solution& sol) {
    auto errors = verify_solution(red.puzzle, sol, red.k);
    if (!errors.empty())
        throw std::invalid_argument(cat("solution does not verify: ", join(errors, "; ")));

    sources::Assignment a(red.first_occurrence.size(), false);
    for (size_t v = 0; v < red.first_occurrence.size(); ++v) {
        int side = sol.side_trace[red.first_occurrence[v]];
        if (side == 1)
            a[v] = true;
        else if (side == 2)
            a[v] = false;
        else
            throw std::logic_error("variable symbol traced outside the assignment sides");
    }
    return a;
}

ThreeDmReduction reduce_3dm(const sources::ThreeDimMatching& inst) {
    require_valid(sources::validate_3dm(inst), "matching instance");
    throw_if(inst.n < 1, "matching instance: n must be at least 1");
    const int n = inst.n;

    ThreeDmReduction red;
    Puzzle& p = red.puzzle;
    for (int i = 0; i < n; ++i) p.alphabet.push_back(cat("x", i));
    for (int i = 0; i < n; ++i) p.alphabet.push_back(cat("y", i));
    for (int i = 0; i < n; ++i) p.alphabet.push_back(cat("z", i));
    const int hash = 3 * n;
    p.alphabet.push_back("__hash");

    p.side_counts.assign(4, std::vector<int>(static_cast<size_t>(3 * n + 1), 0));
    p.side_counts[0][static_cast<size_t>(hash)] = n;
    for (int i = 0; i < n; ++i) {
        p.side_counts[1][static_cast<size_t>(i)] = 1;
        p.side_counts[2][static_cast<size_t>(n + i)] = 1;
        p.side_counts[3][static_cast<size_t>(2 * n + i)] = 1;
    }

    for (size_t t = 0; t < inst.triples.size(); ++t) {
        const auto& tr = inst.triples[t];
        p.dictionary.push_back({hash, tr[0], n + tr[1], 2 * n + tr[2], hash});
        red.triple_of_word.push_back(static_cast<int>(t));
    }
    red.k = n;

    require_valid(validate_puzzle(p), "reduced puzzle");
    return red;
}

std::vector<int> pullback_3dm(const sources::ThreeDimMatching& inst,
                              const ThreeDmReduction& red, const Solution& sol) {
    auto errors = verify_solution(red.puzzle, sol, red.k);
    if (!errors.empty())
        throw std::invalid_argument(cat("solution does not verify: ", join(errors, "; ")));

    std::vector<int> chosen;
    for (int w : sol.words) chosen.push_back(red.triple_of_word[static_cast<size_t>(w)]);

    std::set<int> xs, ys, zs;
    for (int t : chosen) {
        const auto& tr = inst.triples[static_cast<size_t>(t)];
        xs.insert(tr[0]);
        ys.insert(tr[1]);
        zs.insert(tr[2]);
    }
    if (static_cast<int>(chosen.size()) != inst.n || static_cast<int>(xs.size()) != inst.n ||
        static_cast<int>(ys.size()) != inst.n || static_cast<int>(zs.size()) != inst.n)
        throw std::logic_error("solution words do not name a perfect matching");
    return chosen;
}

LiftedPuzzle lift_sides(const Puzzle& p, int k) {
    require_valid(validate_puzzle(p), "input puzzle");
    const int sides = p.side_count();
    const int n = p.side_cardinality(0);
    throw_if(n < 2, "side lifting requires side cardinality at least 2");

    LiftedPuzzle out;
    Puzzle& q = out.puzzle;
    q.alphabet = p.alphabet;
    std::unordered_set<std::string> used(p.alphabet.begin(), p.alphabet.end());
    const int start_sym = p.symbol_count();
    q.alphabet.push_back(fresh_name(used, "__s"));
    const int end_sym = start_sym + 1;
    q.alphabet.push_back(fresh_name(used, "__e"));
    const int hash = start_sym + 2;
    q.alphabet.push_back(fresh_name(used, "__hash"));

    q.dictionary = p.dictionary;
    for (const auto& w : p.dictionary) {
        std::vector<int> pre{start_sym};
        pre.insert(pre.end(), w.begin(), w.end());
        q.dictionary.push_back(std::move(pre));
    }
    for (const auto& w : p.dictionary) {
        std::vector<int> post = w;
        post.push_back(end_sym);
        q.dictionary.push_back(std::move(post));
    }
    // Both markers at once, so a one-word solution can enter and leave the new
    // side without chaining through a second copy of itself.
    for (const auto& w : p.dictionary) {
        std::vector<int> both{start_sym};
        both.insert(both.end(), w.begin(), w.end());
        both.push_back(end_sym);
        q.dictionary.push_back(std::move(both));
    }
    q.dictionary.push_back({hash, hash});
    q.dictionary.push_back({end_sym, hash});

    for (const auto& counts : p.side_counts) {
        std::vector<int> row = counts;
        row.resize(static_cast<size_t>(hash + 1), 0);
        row[static_cast<size_t>(hash)] = 1;
        q.side_counts.push_back(std::move(row));
    }
    std::vector<int> extra(static_cast<size_t>(hash + 1), 0);
    extra[static_cast<size_t>(start_sym)] = 1;
    extra[static_cast<size_t>(end_sym)] = 1;
    extra[static_cast<size_t>(hash)] = n - 1;
    q.side_counts.push_back(std::move(extra));

    // Marker cost: e# reaches the first hash, then S + n - 2 hash-hash hops
    // visit every remaining copy (trips back to the new side interleave with
    // the old sides, so each hop covers one fresh copy).
    out.k = k + sides + n - 1;
    require_valid(validate_puzzle(q), "lifted puzzle");
    return out;
}

Solution pullback_lift(const Puzzle& original, const LiftedPuzzle& lifted, const Solution& sol) {
    auto errors = verify_solution(lifted.puzzle, sol, lifted.k);
    if (!errors.empty())
        throw std::invalid_argument(cat("solution does not verify: ", join(errors, "; ")));

    const int m = static_cast<int>(original.dictionary.size());
    Solution out;
    size_t cursor = 0;  // position in the lifted concatenation
    for (int w : sol.words) {
        const size_t len = lifted.puzzle.dictionary[static_cast<size_t>(w)].size();
        if (w >= 4 * m) {  // ## or e# marker word
            cursor += len;
            continue;
        }
        size_t keep_from = cursor, keep_to = cursor + len;
        int base = w;
        if (w >= 3 * m) {  // s . w . e: drop both markers
            base = w - 3 * m;
            keep_from += 1;
            keep_to -= 1;
        } else if (w >= 2 * m) {  // w . e: drop the trailing end marker
            base = w - 2 * m;
            keep_to -= 1;
        } else if (w >= m) {  // s . w: drop the leading start marker
            base = w - m;
            keep_from += 1;
        }
        out.words.push_back(base);
        for (size_t i = keep_from; i < keep_to; ++i) out.side_trace.push_back(sol.side_trace[i]);
        cursor += len;
    }

    const int sides = original.side_count();
    const int n = original.side_cardinality(0);
    const long long k_orig = static_cast<long long>(lifted.k) - sides - n + 1;
    errors = verify_solution(original, out, k_orig);
    if (!errors.empty())
        throw std::logic_error(cat("pulled-back solution does not verify: ", join(errors, "; ")));
    return out;
}

}  // namespace nythard::letterboxed
