#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "util.hpp"

// Source decision problems that the puzzle reductions start from, together
// with small exhaustive oracles used to cross-check every construction.

namespace nythard::sources {

using Assignment = std::vector<bool>;  // indexed by variable position

enum class OracleStatus { yes, no, too_large };

constexpr uint64_t kDefaultOracleSteps = 1ULL << 20;

// ---------------------------------------------------------------- NAE-3-SAT

// Positive not-all-equal 3-SAT: clauses are unordered triples of distinct
// variables; a clause is satisfied when its variables are not all equal.
struct Nae3Sat {
    std::vector<std::string> variables;
    std::vector<std::array<int, 3>> clauses;  // indices into `variables`
};

std::vector<std::string> validate_nae(const Nae3Sat& f);
bool nae_satisfies(const Nae3Sat& f, const Assignment& a);

struct NaeOracleResult {
    OracleStatus status;
    Assignment assignment;  // first satisfying assignment, lexicographic
};
NaeOracleResult oracle_nae(const Nae3Sat& f, uint64_t step_limit = kDefaultOracleSteps);

// ------------------------------------------------------- planar 1-in-3-SAT

// Positive 1-in-3-SAT with a rectilinear embedding: variables sit on a
// horizontal line in list order, clauses attach from above or below through
// three straight vertical legs. Each leg occupies an integer column slot;
// slot values only matter through their relative order.
enum class Side { above, below };

struct ClausePlacement {
    Side side = Side::above;
    int level = 1;                 // nesting depth; outer intervals get larger levels
    std::array<int, 3> slots{};    // column slot per clause literal position
};

struct OneInThreeSat {
    std::vector<std::string> variables;
    std::vector<std::array<int, 3>> clauses;
    std::vector<ClausePlacement> placements;  // parallel to `clauses`
};

// Checks clause well-formedness plus the geometric conditions: slots follow
// the variable order, same-side intervals are nested or disjoint with outer
// intervals at strictly greater level, and no leg column falls inside the
// interval of a lower-level clause on the same side.
std::vector<std::string> validate_embedding(const OneInThreeSat& f);

bool one_in_three_satisfies(const OneInThreeSat& f, const Assignment& a);

struct OneInThreeOracleResult {
    OracleStatus status;
    Assignment assignment;
};
OneInThreeOracleResult oracle_1in3(const OneInThreeSat& f,
                                   uint64_t step_limit = kDefaultOracleSteps);

// ------------------------------------------------------------------- 3-DM

// Three-dimensional matching over X = Y = Z = {0..n-1}: does some subset of
// the triples hit every coordinate value exactly once?
struct ThreeDimMatching {
    int n = 0;
    std::vector<std::array<int, 3>> triples;  // (x, y, z), zero-based
};

std::vector<std::string> validate_3dm(const ThreeDimMatching& t);

struct MatchingOracleResult {
    OracleStatus status;
    std::vector<int> matching;  // indices of chosen triples
};
MatchingOracleResult oracle_3dm(const ThreeDimMatching& t,
                                uint64_t step_limit = kDefaultOracleSteps);

// -------------------------------------------------------------- subset sum

struct SubsetSum {
    std::vector<long long> elements;
    long long target = 0;
};

struct SubsetOracleResult {
    OracleStatus status;
    std::vector<int> subset;  // element indices, first hit in mask order
};
SubsetOracleResult oracle_subset_sum(const SubsetSum& s,
                                     uint64_t step_limit = kDefaultOracleSteps);

// -------------------------------------------------------------- generators

Nae3Sat make_random_nae(int var_count, int clause_count, uint64_t seed);

// Produces an instance together with a valid rectilinear embedding
// (validated before returning; throws if rejection sampling fails).
OneInThreeSat make_random_1in3(int var_count, int clause_count, uint64_t seed);

// Builds a compact embedding: consecutive slot bands in variable order,
// clause 0 above and clause 1 below. Any formula with at most two clauses
// embeds this way; the result is validated and larger inputs throw if the
// side assignment happens to clash.
OneInThreeSat embed_on_line(const std::vector<std::string>& variables,
                            const std::vector<std::array<int, 3>>& clauses);

ThreeDimMatching make_random_3dm(int n, int triple_count, uint64_t seed);

SubsetSum make_random_subset_sum(int count, long long max_value, uint64_t seed);

}  // namespace nythard::sources
