#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace nythard {

// Deterministic splitmix64 generator. All randomized generators in the
// project derive from this so that (parameters, seed) fully determine the
// output on every platform.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n). n must be positive.
    uint64_t below(uint64_t n) { return next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }
};

// Shared node-count budget for the search routines. Exhaustion is reported
// as an explicit outcome, never silently folded into "unsolvable".
struct Budget {
    uint64_t limit;
    uint64_t used = 0;

    explicit Budget(uint64_t limit_ = 50'000'000ULL) : limit(limit_) {}

    // Returns false once the budget is exhausted.
    bool tick(uint64_t cost = 1) {
        used += cost;
        return used <= limit;
    }

    bool exhausted() const { return used > limit; }
};

enum class SearchStatus { found, exhausted, budget };

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace nythard
