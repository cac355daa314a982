#include "nythard.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "io.hpp"
#include "render.hpp"
#include "util.hpp"

struct nythard_ctx {
    std::string error;
};

namespace {

using nythard::Budget;
using nythard::SearchStatus;
using nythard::cat;
using nythard::io::json;

struct Options {
    std::optional<long long> k;
    bool no_diagonal = false;
    bool connected = false;
    uint64_t budget = Budget{}.limit;
    uint64_t seed = 0;
};

Options parse_options(const char* options_json) {
    Options o;
    if (!options_json || !*options_json) return o;
    json j = nythard::io::parse_text(options_json);
    if (j.is_null()) return o;
    if (!j.is_object()) throw std::invalid_argument("options must be an object");
    for (const auto& [key, val] : j.items()) {
        if (val.is_null()) continue;
        if (key == "k")
            o.k = val.get<long long>();
        else if (key == "noDiagonal")
            o.no_diagonal = val.get<bool>();
        else if (key == "connected")
            o.connected = val.get<bool>();
        else if (key == "budget")
            o.budget = val.get<uint64_t>();
        else if (key == "seed")
            o.seed = val.get<uint64_t>();
        else
            throw std::invalid_argument(cat("unknown option: ", key));
    }
    return o;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** slot, const json& j) {
    if (slot) *slot = dup_string(nythard::io::canonical(j));
}

template <typename Fn>
int guarded(nythard_ctx* ctx, Fn&& fn) {
    if (!ctx) return NYTHARD_ERROR;
    ctx->error.clear();
    try {
        return fn();
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return NYTHARD_ERROR;
    } catch (...) {
        ctx->error = "unknown failure";
        return NYTHARD_ERROR;
    }
}

const char* require(const char* arg, const char* what) {
    if (!arg) throw std::invalid_argument(cat("null argument: ", what));
    return arg;
}

json parse_arg(const char* arg, const char* what) {
    return nythard::io::parse_text(require(arg, what));
}

void require_valid(const std::vector<std::string>& errors, const char* what) {
    if (!errors.empty())
        throw std::invalid_argument(cat(what, ": ", nythard::join(errors, "; ")));
}

// --------------------------------------------------------------- solve

int solve_dispatch(const std::string& game, const json& instance, const Options& o,
                   char** witness) {
    Budget budget{o.budget};
    if (game == "letterboxed") {
        auto p = nythard::io::load_lb_puzzle(instance);
        require_valid(nythard::letterboxed::validate_puzzle(p), "instance");
        const long long k = o.k.value_or(nythard::letterboxed::certificate_bound(p));
        auto r = nythard::letterboxed::solve_search(p, k, &budget);
        if (r.status == SearchStatus::budget) return NYTHARD_BUDGET;
        if (r.status == SearchStatus::exhausted) return NYTHARD_NO;
        emit(witness, nythard::io::save_lb_solution(r.witness));
        return NYTHARD_OK;
    }
    if (game == "pips") {
        auto p = nythard::io::load_pips_puzzle(instance);
        require_valid(nythard::pips::validate_puzzle(p), "instance");
        nythard::pips::SolveOptions opts;
        opts.budget = &budget;
        auto r = nythard::pips::solve(p, opts);
        if (r.status == SearchStatus::budget) return NYTHARD_BUDGET;
        if (r.status == SearchStatus::exhausted) return NYTHARD_NO;
        emit(witness, nythard::io::save_pips_tiling(r.tiling));
        return NYTHARD_OK;
    }
    if (game == "strands") {
        auto inst = nythard::io::load_strands_instance(instance);
        require_valid(nythard::strands::validate_instance(inst), "instance");
        nythard::strands::SolveOptions opts;
        opts.allow_diagonal = !o.no_diagonal;
        opts.budget = &budget;
        auto r = nythard::strands::solve(inst, opts);
        if (r.status == SearchStatus::budget) return NYTHARD_BUDGET;
        if (r.status == SearchStatus::exhausted) return NYTHARD_NO;
        emit(witness, nythard::io::save_strands_partition(inst, r.partition, true));
        return NYTHARD_OK;
    }
    if (game == "tiles") {
        auto inst = nythard::io::load_tiles_instance(instance);
        require_valid(nythard::tiles::validate_instance(inst), "instance");
        auto r = nythard::tiles::solve_greedy(inst);
        if (!r.solvable) return NYTHARD_NO;
        emit(witness, nythard::io::save_tiles_moves(r.moves));
        return NYTHARD_OK;
    }
    throw std::invalid_argument(cat("unknown game: ", game));
}

// -------------------------------------------------------------- verify

int report_errors(std::vector<std::string> errors, char** report) {
    json j;
    j["valid"] = errors.empty();
    j["errors"] = errors;
    emit(report, j);
    return errors.empty() ? NYTHARD_OK : NYTHARD_NO;
}

int verify_dispatch(const std::string& game, const json& instance, const json& witness,
                    const Options& o, char** report) {
    if (game == "letterboxed") {
        auto p = nythard::io::load_lb_puzzle(instance);
        require_valid(nythard::letterboxed::validate_puzzle(p), "instance");
        auto s = nythard::io::load_lb_solution(witness);
        const long long k = o.k.value_or(static_cast<long long>(s.words.size()));
        return report_errors(nythard::letterboxed::verify_solution(p, s, k), report);
    }
    if (game == "pips") {
        auto p = nythard::io::load_pips_puzzle(instance);
        require_valid(nythard::pips::validate_puzzle(p), "instance");
        auto t = nythard::io::load_pips_tiling(witness);
        return report_errors(nythard::pips::verify_tiling(p, t), report);
    }
    if (game == "strands") {
        auto inst = nythard::io::load_strands_instance(instance);
        require_valid(nythard::strands::validate_instance(inst), "instance");
        auto part = nythard::io::load_strands_partition(inst, witness);
        return report_errors(nythard::strands::verify_partition(inst, part, !o.no_diagonal),
                             report);
    }
    if (game == "tiles") {
        auto inst = nythard::io::load_tiles_instance(instance);
        require_valid(nythard::tiles::validate_instance(inst), "instance");
        auto moves = nythard::io::load_tiles_moves(witness);
        auto r = nythard::tiles::verify_moves(inst, moves);
        auto errors = r.errors;
        if (errors.empty() && !r.all_deleted) errors.push_back("moves leave features undeleted");
        json j;
        j["valid"] = errors.empty();
        j["errors"] = errors;
        if (r.errors.empty()) {
            j["allDeleted"] = r.all_deleted;
            j["standardMoves"] = r.standard_moves;
            j["forcedTeleports"] = r.forced_teleports;
            j["unforcedTeleports"] = r.unforced_teleports;
            j["maxCombo"] = r.max_combo;
        }
        emit(report, j);
        return errors.empty() ? NYTHARD_OK : NYTHARD_NO;
    }
    throw std::invalid_argument(cat("unknown game: ", game));
}

// -------------------------------------------------------------- reduce

json bundle_of(json puzzle, json sidecar) {
    json j;
    j["puzzle"] = std::move(puzzle);
    j["sidecar"] = std::move(sidecar);
    return j;
}

int reduce_dispatch(const std::string& subject, const json& source, const Options& o,
                    char** bundle) {
    namespace io = nythard::io;
    if (subject == "nae3sat-to-letterboxed") {
        auto red = nythard::letterboxed::reduce_nae3sat(io::load_nae(source));
        emit(bundle, bundle_of(io::save_lb_puzzle(red.puzzle), io::save_nae_reduction(red)));
        return NYTHARD_OK;
    }
    if (subject == "3dm-to-letterboxed") {
        auto red = nythard::letterboxed::reduce_3dm(io::load_3dm(source));
        emit(bundle, bundle_of(io::save_lb_puzzle(red.puzzle), io::save_3dm_reduction(red)));
        return NYTHARD_OK;
    }
    if (subject == "lift-letterboxed") {
        if (!o.k) throw std::invalid_argument("lift-letterboxed requires option k");
        auto lifted =
            nythard::letterboxed::lift_sides(io::load_lb_puzzle(source), static_cast<int>(*o.k));
        emit(bundle, bundle_of(io::save_lb_puzzle(lifted.puzzle), io::save_lift(lifted)));
        return NYTHARD_OK;
    }
    if (subject == "1in3-to-pips") {
        auto red = nythard::pips::reduce_1in3(io::load_1in3(source), o.connected);
        emit(bundle, bundle_of(io::save_pips_puzzle(red.puzzle), io::save_pips_1in3(red)));
        return NYTHARD_OK;
    }
    if (subject == "subsetsum-to-pips") {
        auto red = nythard::pips::reduce_subset_sum(io::load_subset_sum(source));
        emit(bundle, bundle_of(io::save_pips_puzzle(red.puzzle), json()));
        return NYTHARD_OK;
    }
    if (subject == "1in3-to-strands") {
        auto red = nythard::strands::reduce_1in3(io::load_1in3(source));
        emit(bundle, bundle_of(io::save_strands_instance(red.instance),
                               io::save_strands_1in3(red)));
        return NYTHARD_OK;
    }
    if (subject == "flowfree-to-strands") {
        auto inst = nythard::strands::reduce_flowfree(io::load_flowfree(source));
        emit(bundle, bundle_of(io::save_strands_instance(inst), json()));
        return NYTHARD_OK;
    }
    if (subject == "expand-strands") {
        auto expanded = nythard::strands::expand_blocks(io::load_strands_instance(source));
        emit(bundle, bundle_of(io::save_strands_instance(expanded), json()));
        return NYTHARD_OK;
    }
    throw std::invalid_argument(cat("unknown subject: ", subject));
}

// ------------------------------------------------------------ pullback

json assignment_json(const std::vector<std::string>& variables,
                     const nythard::sources::Assignment& a) {
    json j;
    j["variables"] = variables;
    j["assignment"] = a;
    return j;
}

const json& bundle_puzzle(const json& bundle) {
    if (!bundle.is_object() || !bundle.contains("puzzle"))
        throw std::invalid_argument("bundle lacks a puzzle");
    return bundle.at("puzzle");
}

const json& bundle_sidecar(const json& bundle) {
    if (!bundle.is_object() || !bundle.contains("sidecar") || bundle.at("sidecar").is_null())
        throw std::invalid_argument("bundle lacks the sidecar this subject needs");
    return bundle.at("sidecar");
}

int pullback_dispatch(const std::string& subject, const json& source, const json& bundle,
                      const json& witness, const Options& o, char** out) {
    namespace io = nythard::io;
    if (subject == "nae3sat-to-letterboxed") {
        auto f = io::load_nae(source);
        auto red = io::load_nae_reduction(bundle_sidecar(bundle),
                                          io::load_lb_puzzle(bundle_puzzle(bundle)));
        auto a = nythard::letterboxed::pullback_nae(red, io::load_lb_solution(witness));
        emit(out, assignment_json(f.variables, a));
        return NYTHARD_OK;
    }
    if (subject == "3dm-to-letterboxed") {
        auto inst = io::load_3dm(source);
        auto red = io::load_3dm_reduction(bundle_sidecar(bundle),
                                          io::load_lb_puzzle(bundle_puzzle(bundle)));
        auto matching =
            nythard::letterboxed::pullback_3dm(inst, red, io::load_lb_solution(witness));
        json j;
        j["matching"] = matching;
        emit(out, j);
        return NYTHARD_OK;
    }
    if (subject == "lift-letterboxed") {
        auto original = io::load_lb_puzzle(source);
        const json& sidecar = bundle_sidecar(bundle);
        if (sidecar.value("kind", "") != "lift-letterboxed")
            throw std::invalid_argument("wrong sidecar kind");
        nythard::letterboxed::LiftedPuzzle lifted;
        lifted.puzzle = io::load_lb_puzzle(bundle_puzzle(bundle));
        lifted.k = sidecar.at("k").get<int>();
        auto sol = nythard::letterboxed::pullback_lift(original, lifted,
                                                       io::load_lb_solution(witness));
        emit(out, io::save_lb_solution(sol));
        return NYTHARD_OK;
    }
    if (subject == "1in3-to-pips") {
        auto f = io::load_1in3(source);
        auto red = io::load_pips_1in3(bundle_sidecar(bundle),
                                      io::load_pips_puzzle(bundle_puzzle(bundle)));
        auto a = nythard::pips::pullback_1in3(red, io::load_pips_tiling(witness));
        emit(out, assignment_json(f.variables, a));
        return NYTHARD_OK;
    }
    if (subject == "subsetsum-to-pips") {
        nythard::pips::SubsetSumReduction red;
        red.puzzle = io::load_pips_puzzle(bundle_puzzle(bundle));
        auto chosen = nythard::pips::pullback_subset_sum(red, io::load_pips_tiling(witness));
        json j;
        j["subset"] = chosen;
        emit(out, j);
        return NYTHARD_OK;
    }
    if (subject == "1in3-to-strands") {
        auto f = io::load_1in3(source);
        auto red = io::load_strands_1in3(bundle_sidecar(bundle),
                                         io::load_strands_instance(bundle_puzzle(bundle)));
        auto part = io::load_strands_partition(red.instance, witness);
        auto a = nythard::strands::pullback_1in3(red, part, !o.no_diagonal);
        emit(out, assignment_json(f.variables, a));
        return NYTHARD_OK;
    }
    if (subject == "flowfree-to-strands") {
        auto ff = io::load_flowfree(source);
        auto reduced = io::load_strands_instance(bundle_puzzle(bundle));
        auto part = io::load_strands_partition(reduced, witness);
        auto paths = nythard::strands::pullback_flowfree(ff, reduced, part);
        json list = json::array();
        for (size_t i = 0; i < paths.size(); ++i) {
            json pj;
            pj["color"] = ff.pairs[i].color;
            json cells = json::array();
            for (const auto& [r, c] : paths[i]) cells.push_back(json::array({r, c}));
            pj["cells"] = cells;
            list.push_back(pj);
        }
        json j;
        j["paths"] = list;
        emit(out, j);
        return NYTHARD_OK;
    }
    if (subject == "expand-strands") {
        auto src = io::load_strands_instance(source);
        auto expanded = io::load_strands_instance(bundle_puzzle(bundle));
        auto part = io::load_strands_partition(expanded, witness);
        auto projected = nythard::strands::pullback_expansion(src, expanded, part, true);
        emit(out, io::save_strands_partition(src, projected, true));
        return NYTHARD_OK;
    }
    throw std::invalid_argument(cat("unknown subject: ", subject));
}

// ----------------------------------------------------------- roundtrip

struct Tristate {
    bool known = false;
    bool value = false;
};

json tristate_json(const Tristate& t) {
    if (!t.known) return json();
    return json(t.value);
}

// Shared report assembly: equivalence of source and reduced solvability,
// plus pullback success whenever the reduced side produced a witness.
int finish_roundtrip(const std::string& subject, Tristate source_solvable,
                     Tristate reduced_solvable, Tristate pullback_ok,
                     std::vector<std::string> notes, char** report) {
    const bool budget_hit = !source_solvable.known || !reduced_solvable.known;
    bool pass = false;
    if (!budget_hit) {
        pass = source_solvable.value == reduced_solvable.value &&
               (!reduced_solvable.value || (pullback_ok.known && pullback_ok.value));
        if (source_solvable.value != reduced_solvable.value)
            notes.push_back("solvability mismatch between source and reduced instance");
    } else {
        notes.push_back("budget exhausted before both sides were decided");
    }
    json j;
    j["subject"] = subject;
    j["sourceSolvable"] = tristate_json(source_solvable);
    j["reducedSolvable"] = tristate_json(reduced_solvable);
    j["pullbackOk"] = tristate_json(pullback_ok);
    j["pass"] = pass;
    j["notes"] = notes;
    emit(report, j);
    if (budget_hit) return NYTHARD_BUDGET;
    return pass ? NYTHARD_OK : NYTHARD_NO;
}

Tristate from_oracle(nythard::sources::OracleStatus status) {
    Tristate t;
    t.known = status != nythard::sources::OracleStatus::too_large;
    t.value = status == nythard::sources::OracleStatus::yes;
    return t;
}

Tristate from_search(SearchStatus status) {
    Tristate t;
    t.known = status != SearchStatus::budget;
    t.value = status == SearchStatus::found;
    return t;
}

int roundtrip_dispatch(const std::string& subject, const json& source, const Options& o,
                       char** report) {
    namespace io = nythard::io;
    namespace lb = nythard::letterboxed;
    Budget budget{o.budget};
    std::vector<std::string> notes;

    if (subject == "nae3sat-to-letterboxed") {
        auto f = io::load_nae(source);
        Tristate src = from_oracle(nythard::sources::oracle_nae(f).status);
        auto red = lb::reduce_nae3sat(f);
        auto r = lb::solve_search(red.puzzle, red.k, &budget);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                pulled.value = nythard::sources::nae_satisfies(f, lb::pullback_nae(red, r.witness));
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "3dm-to-letterboxed") {
        auto inst = io::load_3dm(source);
        Tristate src = from_oracle(nythard::sources::oracle_3dm(inst).status);
        auto red = lb::reduce_3dm(inst);
        auto r = lb::solve_search(red.puzzle, red.k, &budget);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                lb::pullback_3dm(inst, red, r.witness);  // validates the matching
                pulled.value = true;
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "lift-letterboxed") {
        if (!o.k) throw std::invalid_argument("lift-letterboxed requires option k");
        auto p = io::load_lb_puzzle(source);
        require_valid(lb::validate_puzzle(p), "source puzzle");
        auto lifted = lb::lift_sides(p, static_cast<int>(*o.k));
        Tristate src = from_search(lb::solve_search(p, *o.k, &budget).status);
        auto r = lb::solve_search(lifted.puzzle, lifted.k, &budget);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                lb::pullback_lift(p, lifted, r.witness);  // verifies at the original budget
                pulled.value = true;
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "1in3-to-pips") {
        auto f = io::load_1in3(source);
        Tristate src = from_oracle(nythard::sources::oracle_1in3(f).status);
        auto red = nythard::pips::reduce_1in3(f, o.connected);
        nythard::pips::SolveOptions opts;
        opts.budget = &budget;
        auto r = nythard::pips::solve(red.puzzle, opts);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                pulled.value = nythard::sources::one_in_three_satisfies(
                    f, nythard::pips::pullback_1in3(red, r.tiling));
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "subsetsum-to-pips") {
        auto s = io::load_subset_sum(source);
        Tristate src = from_oracle(nythard::sources::oracle_subset_sum(s).status);
        auto red = nythard::pips::reduce_subset_sum(s);
        nythard::pips::SolveOptions opts;
        opts.budget = &budget;
        auto r = nythard::pips::solve(red.puzzle, opts);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                auto chosen = nythard::pips::pullback_subset_sum(red, r.tiling);
                long long sum = 0;
                for (int i : chosen) sum += s.elements[static_cast<size_t>(i)];
                pulled.value = sum == s.target;
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "1in3-to-strands") {
        auto f = io::load_1in3(source);
        Tristate src = from_oracle(nythard::sources::oracle_1in3(f).status);
        auto red = nythard::strands::reduce_1in3(f);
        nythard::strands::SolveOptions opts;
        opts.allow_diagonal = !o.no_diagonal;
        opts.budget = &budget;
        auto r = nythard::strands::solve(red.instance, opts);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                pulled.value = nythard::sources::one_in_three_satisfies(
                    f, nythard::strands::pullback_1in3(red, r.partition, opts.allow_diagonal));
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "flowfree-to-strands") {
        auto ff = io::load_flowfree(source);
        Budget oracle_budget{o.budget};
        auto probe = nythard::strands::oracle_flowfree(ff, &oracle_budget);
        Tristate src = from_search(probe.status);
        src.value = probe.solvable;
        auto inst = nythard::strands::reduce_flowfree(ff);
        nythard::strands::SolveOptions opts;
        opts.allow_diagonal = false;  // the encoding is defined for orthogonal play
        opts.budget = &budget;
        auto r = nythard::strands::solve(inst, opts);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                nythard::strands::pullback_flowfree(ff, inst, r.partition);  // verifies paths
                pulled.value = true;
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    if (subject == "expand-strands") {
        auto src_inst = io::load_strands_instance(source);
        require_valid(nythard::strands::validate_instance(src_inst), "source instance");
        nythard::strands::SolveOptions opts;
        opts.allow_diagonal = true;  // the expansion is a king-move equivalence
        opts.budget = &budget;
        Tristate src = from_search(nythard::strands::solve(src_inst, opts).status);
        auto expanded = nythard::strands::expand_blocks(src_inst);
        auto r = nythard::strands::solve(expanded, opts);
        Tristate dst = from_search(r.status), pulled;
        if (dst.known && dst.value) {
            pulled.known = true;
            try {
                nythard::strands::pullback_expansion(src_inst, expanded, r.partition, true);
                pulled.value = true;
            } catch (const std::exception& e) {
                pulled.value = false;
                notes.push_back(e.what());
            }
        }
        return finish_roundtrip(subject, src, dst, pulled, std::move(notes), report);
    }
    throw std::invalid_argument(cat("unknown subject: ", subject));
}

// ------------------------------------------------------------ generate

int generate_dispatch(const std::string& kind, const Options& o, char** out) {
    namespace io = nythard::io;
    const uint64_t seed = o.seed;
    if (kind == "nae3sat") {
        emit(out, io::save_nae(nythard::sources::make_random_nae(4, 3, seed)));
        return NYTHARD_OK;
    }
    if (kind == "1in3") {
        emit(out, io::save_1in3(nythard::sources::make_random_1in3(4, 2, seed)));
        return NYTHARD_OK;
    }
    if (kind == "3dm") {
        emit(out, io::save_3dm(nythard::sources::make_random_3dm(3, 7, seed)));
        return NYTHARD_OK;
    }
    if (kind == "subsetsum") {
        emit(out, io::save_subset_sum(nythard::sources::make_random_subset_sum(5, 10, seed)));
        return NYTHARD_OK;
    }
    if (kind == "letterboxed") {
        emit(out, io::save_lb_puzzle(nythard::letterboxed::make_random_puzzle(seed)));
        return NYTHARD_OK;
    }
    if (kind == "tiles") {
        emit(out, io::save_tiles_instance(nythard::tiles::make_random_instance(seed, 6, 5)));
        return NYTHARD_OK;
    }
    if (kind == "pips") {
        nythard::Rng rng{seed ^ 0x9a9cULL};
        nythard::pips::Puzzle p;
        const int w = 4;
        nythard::pips::Constraint sum_row;
        for (int x = 0; x < w; ++x) {
            p.cells.push_back({x, 0});
            sum_row.region.push_back({x, 0});
            p.cells.push_back({x, 1});
        }
        long long total = 0;
        for (int i = 0; i < w; ++i) {
            const long long a = static_cast<long long>(rng.below(7));
            const long long b = static_cast<long long>(rng.below(7));
            p.dominoes.push_back({a, b});
            total += a + b;
        }
        sum_row.kind = nythard::pips::ConstraintKind::sum_eq;
        sum_row.n = static_cast<long long>(rng.below(static_cast<uint64_t>(total + 1)));
        p.constraints.push_back(std::move(sum_row));
        emit(out, io::save_pips_puzzle(p));
        return NYTHARD_OK;
    }
    if (kind == "strands") {
        nythard::Rng rng{seed ^ 0x57a5ULL};
        nythard::strands::Instance inst;
        inst.alphabet = {"a", "b", "c"};
        const int rows = 4, cols = 4;
        for (int r = 0; r < rows; ++r) {
            std::vector<int> row;
            for (int c = 0; c < cols; ++c) row.push_back(static_cast<int>(rng.below(3)));
            inst.grid.push_back(std::move(row));
        }
        std::set<std::vector<int>> seen;
        for (int r = 0; r < rows; ++r) {
            // Carve each row into dictionary words so the grid is coverable.
            const bool split = rng.coin();
            std::vector<std::pair<int, int>> runs =
                split ? std::vector<std::pair<int, int>>{{0, 2}, {2, 2}}
                      : std::vector<std::pair<int, int>>{{0, 4}};
            for (const auto& [start, len] : runs) {
                std::vector<int> word;
                for (int c = start; c < start + len; ++c)
                    word.push_back(inst.grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);
                if (seen.insert(word).second) inst.dictionary.push_back(std::move(word));
            }
        }
        emit(out, io::save_strands_instance(inst));
        return NYTHARD_OK;
    }
    if (kind == "flowfree") {
        nythard::Rng rng{seed ^ 0xf10fULL};
        nythard::strands::FlowFree ff;
        ff.width = 3;
        ff.height = 3;
        std::set<nythard::strands::CellRC> taken;
        const char* names[] = {"r", "g"};
        for (int i = 0; i < 2; ++i) {
            nythard::strands::FlowFree::ColorPair pair;
            pair.color = names[i];
            auto draw = [&]() {
                while (true) {
                    nythard::strands::CellRC cell{static_cast<int>(rng.below(3)),
                                                  static_cast<int>(rng.below(3))};
                    if (taken.insert(cell).second) return cell;
                }
            };
            pair.a = draw();
            pair.b = draw();
            ff.pairs.push_back(std::move(pair));
        }
        emit(out, io::save_flowfree(ff));
        return NYTHARD_OK;
    }
    throw std::invalid_argument(cat("unknown kind: ", kind));
}

// -------------------------------------------------------------- render

int render_dispatch(const std::string& game, const json& instance, const json* witness,
                    char** ascii_out, char** svg_out) {
    namespace io = nythard::io;
    if (svg_out) *svg_out = nullptr;
    if (game == "letterboxed") {
        auto p = io::load_lb_puzzle(instance);
        std::optional<nythard::letterboxed::Solution> sol;
        if (witness) sol = io::load_lb_solution(*witness);
        if (ascii_out)
            *ascii_out =
                dup_string(nythard::render::letterboxed_ascii(p, sol ? &*sol : nullptr));
        return NYTHARD_OK;
    }
    if (game == "pips") {
        auto p = io::load_pips_puzzle(instance);
        std::optional<nythard::pips::Tiling> t;
        if (witness) t = io::load_pips_tiling(*witness);
        if (ascii_out)
            *ascii_out = dup_string(nythard::render::pips_ascii(p, t ? &*t : nullptr));
        if (svg_out) *svg_out = dup_string(nythard::render::pips_svg(p, t ? &*t : nullptr));
        return NYTHARD_OK;
    }
    if (game == "strands") {
        auto inst = io::load_strands_instance(instance);
        std::optional<nythard::strands::Partition> part;
        if (witness) part = io::load_strands_partition(inst, *witness);
        if (ascii_out)
            *ascii_out = dup_string(nythard::render::strands_ascii(inst, part ? &*part : nullptr));
        if (svg_out)
            *svg_out = dup_string(nythard::render::strands_svg(inst, part ? &*part : nullptr));
        return NYTHARD_OK;
    }
    if (game == "tiles") {
        auto inst = io::load_tiles_instance(instance);
        std::optional<std::vector<int>> moves;
        if (witness) moves = io::load_tiles_moves(*witness);
        if (ascii_out)
            *ascii_out = dup_string(nythard::render::tiles_ascii(inst, moves ? &*moves : nullptr));
        return NYTHARD_OK;
    }
    throw std::invalid_argument(cat("unknown game: ", game));
}

}  // namespace

extern "C" {

nythard_ctx* nythard_ctx_new(void) { return new (std::nothrow) nythard_ctx(); }

void nythard_ctx_free(nythard_ctx* ctx) { delete ctx; }

const char* nythard_last_error(const nythard_ctx* ctx) {
    return ctx ? ctx->error.c_str() : "null context";
}

void nythard_string_free(char* s) { std::free(s); }

const char* nythard_version(void) { return "0.1.0"; }

int nythard_solve(nythard_ctx* ctx, const char* game, const char* instance_json,
                  const char* options_json, char** witness_json) {
    return guarded(ctx, [&] {
        if (witness_json) *witness_json = nullptr;
        return solve_dispatch(require(game, "game"), parse_arg(instance_json, "instance"),
                              parse_options(options_json), witness_json);
    });
}

int nythard_verify(nythard_ctx* ctx, const char* game, const char* instance_json,
                   const char* witness_json, const char* options_json, char** report_json) {
    return guarded(ctx, [&] {
        if (report_json) *report_json = nullptr;
        return verify_dispatch(require(game, "game"), parse_arg(instance_json, "instance"),
                               parse_arg(witness_json, "witness"), parse_options(options_json),
                               report_json);
    });
}

int nythard_reduce(nythard_ctx* ctx, const char* subject, const char* source_json,
                   const char* options_json, char** bundle_json) {
    return guarded(ctx, [&] {
        if (bundle_json) *bundle_json = nullptr;
        return reduce_dispatch(require(subject, "subject"), parse_arg(source_json, "source"),
                               parse_options(options_json), bundle_json);
    });
}

int nythard_pullback(nythard_ctx* ctx, const char* subject, const char* source_json,
                     const char* bundle_json, const char* witness_json, const char* options_json,
                     char** source_witness_json) {
    return guarded(ctx, [&] {
        if (source_witness_json) *source_witness_json = nullptr;
        return pullback_dispatch(require(subject, "subject"), parse_arg(source_json, "source"),
                                 parse_arg(bundle_json, "bundle"),
                                 parse_arg(witness_json, "witness"), parse_options(options_json),
                                 source_witness_json);
    });
}

int nythard_roundtrip(nythard_ctx* ctx, const char* subject, const char* source_json,
                      const char* options_json, char** report_json) {
    return guarded(ctx, [&] {
        if (report_json) *report_json = nullptr;
        return roundtrip_dispatch(require(subject, "subject"), parse_arg(source_json, "source"),
                                  parse_options(options_json), report_json);
    });
}

int nythard_generate(nythard_ctx* ctx, const char* kind, const char* options_json,
                     char** instance_json) {
    return guarded(ctx, [&] {
        if (instance_json) *instance_json = nullptr;
        return generate_dispatch(require(kind, "kind"), parse_options(options_json),
                                 instance_json);
    });
}

int nythard_render(nythard_ctx* ctx, const char* game, const char* instance_json,
                   const char* witness_json, const char* options_json, char** ascii_out,
                   char** svg_out) {
    return guarded(ctx, [&] {
        if (ascii_out) *ascii_out = nullptr;
        if (svg_out) *svg_out = nullptr;
        parse_options(options_json);  // validated for consistency, not yet used
        std::optional<json> witness;
        if (witness_json) witness = nythard::io::parse_text(witness_json);
        return render_dispatch(require(game, "game"), parse_arg(instance_json, "instance"),
                               witness ? &*witness : nullptr, ascii_out, svg_out);
    });
}

int nythard_canonicalize(nythard_ctx* ctx, const char* text, char** canonical_json) {
    return guarded(ctx, [&] {
        if (!canonical_json) throw std::invalid_argument("null argument: output");
        *canonical_json = nullptr;
        *canonical_json = dup_string(
            nythard::io::canonical(nythard::io::parse_text(require(text, "document"))));
        return NYTHARD_OK;
    });
}

}  // extern "C"
