// Command-line front end; talks to the toolkit exclusively through the C API.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nythard.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;

struct Flags {
    std::optional<long long> k;
    bool no_diagonal = false;
    bool connected = false;
    std::optional<unsigned long long> budget;
    unsigned long long seed = 0;
    std::string svg_path;
    std::string format = "ascii";
};

// --budget beats NYTHARD_BUDGET beats the library default.
std::string options_json(const Flags& f) {
    json o = json::object();
    if (f.k) o["k"] = *f.k;
    if (f.no_diagonal) o["noDiagonal"] = true;
    if (f.connected) o["connected"] = true;
    if (f.budget) {
        o["budget"] = *f.budget;
    } else if (const char* env = std::getenv("NYTHARD_BUDGET")) {
        try {
            o["budget"] = std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("NYTHARD_BUDGET", "not a number");
        }
    }
    o["seed"] = f.seed;
    return o.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

struct Api {
    nythard_ctx* ctx;
    Api() : ctx(nythard_ctx_new()) {}
    ~Api() { nythard_ctx_free(ctx); }
    Api(const Api&) = delete;
    Api& operator=(const Api&) = delete;
};

struct Owned {
    char* s = nullptr;
    ~Owned() { nythard_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

// Library errors (rc 2) surface the context message on stderr.
int finish(const Api& api, int rc) {
    if (rc == NYTHARD_ERROR) std::cerr << "error: " << nythard_last_error(api.ctx) << "\n";
    if (rc == NYTHARD_BUDGET) std::cerr << "budget exhausted\n";
    return rc;
}

void deliver(const std::string& content, const std::string& path) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

void print_errors(const std::string& report_text) {
    json report = json::parse(report_text, nullptr, false);
    if (report.is_discarded() || !report.contains("errors")) return;
    for (const auto& e : report["errors"]) std::cerr << e.get<std::string>() << "\n";
}

bool subject_has_sidecar(const std::string& subject) {
    return subject == "nae3sat-to-letterboxed" || subject == "3dm-to-letterboxed" ||
           subject == "lift-letterboxed" || subject == "1in3-to-pips" ||
           subject == "1in3-to-strands";
}

bool game_has_svg(const std::string& game) { return game == "pips" || game == "strands"; }

int run_solve(const Flags& flags, const std::string& game, const std::string& instance_path,
              const std::string& out_path) {
    Api api;
    Owned witness;
    const int rc = nythard_solve(api.ctx, game.c_str(), read_file(instance_path).c_str(),
                                 options_json(flags).c_str(), &witness.s);
    if (rc == NYTHARD_OK) {
        deliver(witness.str(), out_path);
        if (!out_path.empty()) std::cout << "solvable\n";
    } else if (rc == NYTHARD_NO) {
        std::cerr << "unsolvable\n";
    }
    return finish(api, rc);
}

int run_verify(const Flags& flags, const std::string& game, const std::string& instance_path,
               const std::string& witness_path) {
    Api api;
    Owned report;
    const int rc = nythard_verify(api.ctx, game.c_str(), read_file(instance_path).c_str(),
                                  read_file(witness_path).c_str(), options_json(flags).c_str(),
                                  &report.s);
    if (rc == NYTHARD_OK) std::cout << "valid\n";
    if (rc == NYTHARD_NO) {
        std::cerr << "invalid\n";
        print_errors(report.str());
    }
    return finish(api, rc);
}

int run_reduce(const Flags& flags, const std::string& subject, const std::string& source_path,
               const std::string& puzzle_path, const std::string& sidecar_path) {
    Api api;
    Owned bundle;
    const int rc = nythard_reduce(api.ctx, subject.c_str(), read_file(source_path).c_str(),
                                  options_json(flags).c_str(), &bundle.s);
    if (rc != NYTHARD_OK) return finish(api, rc);
    json b = json::parse(bundle.str());
    deliver(b["puzzle"].dump(2) + "\n", puzzle_path);
    if (!sidecar_path.empty()) write_file(sidecar_path, b["sidecar"].dump(2) + "\n");
    return NYTHARD_OK;
}

int run_pullback(const Flags& flags, const std::string& subject, std::vector<std::string> paths) {
    // Positional paths: source, puzzle, [sidecar,] witness, [out].
    const size_t base = subject_has_sidecar(subject) ? 3 : 2;
    if (paths.size() < base + 1 || paths.size() > base + 2) {
        std::cerr << "pullback " << subject << " expects source, puzzle, "
                  << (base == 3 ? "sidecar, " : "") << "witness [out]\n";
        return kExitUsage;
    }
    json bundle;
    bundle["puzzle"] = json::parse(read_file(paths[1]));
    bundle["sidecar"] = base == 3 ? json::parse(read_file(paths[2])) : json();
    const std::string witness = read_file(paths[base]);
    const std::string out_path = paths.size() == base + 2 ? paths[base + 1] : "";

    Api api;
    Owned out;
    const int rc = nythard_pullback(api.ctx, subject.c_str(), read_file(paths[0]).c_str(),
                                    bundle.dump().c_str(), witness.c_str(),
                                    options_json(flags).c_str(), &out.s);
    if (rc == NYTHARD_OK) deliver(out.str(), out_path);
    return finish(api, rc);
}

int run_roundtrip(const Flags& flags, const std::string& subject,
                  const std::string& source_path) {
    Api api;
    Owned report;
    const int rc = nythard_roundtrip(api.ctx, subject.c_str(), read_file(source_path).c_str(),
                                     options_json(flags).c_str(), &report.s);
    if (report.s) std::cout << report.str();
    if (rc == NYTHARD_OK) std::cout << "PASS\n";
    if (rc == NYTHARD_NO) std::cout << "FAIL\n";
    return finish(api, rc);
}

int run_render(const Flags& flags, const std::string& game, const std::string& instance_path,
               const std::string& witness_path) {
    if (flags.format == "csv") {
        std::cerr << "render emits ascii or svg, not csv\n";
        return kExitUsage;
    }
    const bool want_svg = flags.format == "svg" || !flags.svg_path.empty();
    if (want_svg && !game_has_svg(game)) {
        std::cerr << "svg rendering is available for pips and strands only\n";
        return kExitUsage;
    }
    Api api;
    Owned ascii, svg;
    std::string witness;
    if (!witness_path.empty()) witness = read_file(witness_path);
    const int rc = nythard_render(api.ctx, game.c_str(), read_file(instance_path).c_str(),
                                  witness_path.empty() ? nullptr : witness.c_str(),
                                  options_json(flags).c_str(), &ascii.s, &svg.s);
    if (rc != NYTHARD_OK) return finish(api, rc);
    std::cout << (flags.format == "svg" ? svg.str() : ascii.str());
    if (!flags.svg_path.empty()) write_file(flags.svg_path, svg.str());
    return NYTHARD_OK;
}

int run_gen(const Flags& flags, const std::string& kind, const std::string& out_path) {
    Api api;
    Owned instance;
    const int rc = nythard_generate(api.ctx, kind.c_str(), options_json(flags).c_str(),
                                    &instance.s);
    if (rc == NYTHARD_OK) deliver(instance.str(), out_path);
    return finish(api, rc);
}

int run_bench(const Flags& flags, const std::string& kind, const std::string& out_path) {
    if (flags.format != "ascii" && flags.format != "csv") {
        std::cerr << "bench emits csv\n";
        return kExitUsage;
    }
    const std::string games[] = {"letterboxed", "pips", "strands", "tiles"};
    std::string game;
    for (const auto& g : games)
        if (kind == g) game = g;
    if (game.empty()) {
        std::cerr << "bench subjects: letterboxed, pips, strands, tiles\n";
        return kExitUsage;
    }

    Api api;
    std::ostringstream csv;
    csv << "kind,seed,result,micros\n";
    constexpr int kCases = 10;
    for (int i = 0; i < kCases; ++i) {
        Flags case_flags = flags;
        case_flags.seed = flags.seed + static_cast<unsigned long long>(i);
        Owned instance;
        int rc = nythard_generate(api.ctx, kind.c_str(), options_json(case_flags).c_str(),
                                  &instance.s);
        if (rc != NYTHARD_OK) return finish(api, rc);
        Owned witness;
        const auto start = std::chrono::steady_clock::now();
        rc = nythard_solve(api.ctx, game.c_str(), instance.str().c_str(),
                           options_json(case_flags).c_str(), &witness.s);
        const auto stop = std::chrono::steady_clock::now();
        if (rc == NYTHARD_ERROR) return finish(api, rc);
        const char* result = rc == NYTHARD_OK ? "solvable"
                             : rc == NYTHARD_NO ? "unsolvable"
                                                : "budget";
        csv << kind << "," << case_flags.seed << "," << result << ","
            << std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()
            << "\n";
    }
    deliver(csv.str(), out_path);
    return NYTHARD_OK;
}

void add_common_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--k", flags.k, "word budget / lift budget");
    cmd->add_flag("--no-diagonal", flags.no_diagonal, "strands: orthogonal adjacency only");
    cmd->add_flag("--connected", flags.connected, "pips 1-in-3: emit a connected board");
    cmd->add_option("--seed", flags.seed, "generator seed");
    cmd->add_option("--budget", flags.budget, "search node budget");
    cmd->add_option("--svg", flags.svg_path, "write an SVG rendering to this path");
    cmd->add_option("--format", flags.format, "output format: ascii | svg | csv")
        ->check(CLI::IsMember({"ascii", "svg", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nythard: puzzle solvers, verifiers, and hardness constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(nythard_version()); });

    Flags flags;
    std::string subject;
    std::vector<std::string> paths;

    struct Spec {
        const char* name;
        const char* help;
        size_t min_paths, max_paths;
    };
    const Spec specs[] = {
        {"solve", "solve a puzzle instance: <game> <instance> [witness-out]", 1, 2},
        {"verify", "check a witness: <game> <instance> <witness>", 2, 2},
        {"reduce", "build a reduced puzzle: <subject> <source> <puzzle-out> [sidecar-out]", 2, 3},
        {"pullback", "map a witness back: <subject> <source> <puzzle> [sidecar] <witness> [out]",
         3, 5},
        {"roundtrip", "reduce, solve, pull back, and check: <subject> <source>", 1, 1},
        {"render", "draw an instance: <game> <instance> [witness]", 1, 2},
        {"gen", "emit a small seeded instance: <kind> [out]", 0, 1},
        {"bench", "time the solver on seeded instances: <game> [csv-out]", 0, 1},
    };
    for (const auto& spec : specs) {
        auto* cmd = app.add_subcommand(spec.name, spec.help);
        cmd->add_option("subject", subject, "game, reduction, or kind name")->required();
        cmd->add_option("paths", paths, "input/output paths")
            ->expected(static_cast<int>(spec.min_paths), static_cast<int>(spec.max_paths));
        add_common_flags(cmd, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    auto path_at = [&](size_t i) { return i < paths.size() ? paths[i] : std::string(); };
    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "solve") return run_solve(flags, subject, paths[0], path_at(1));
        if (cmd == "verify") return run_verify(flags, subject, paths[0], paths[1]);
        if (cmd == "reduce") return run_reduce(flags, subject, paths[0], paths[1], path_at(2));
        if (cmd == "pullback") return run_pullback(flags, subject, paths);
        if (cmd == "roundtrip") return run_roundtrip(flags, subject, paths[0]);
        if (cmd == "render") return run_render(flags, subject, paths[0], path_at(1));
        if (cmd == "gen") return run_gen(flags, subject, path_at(0));
        if (cmd == "bench") return run_bench(flags, subject, path_at(0));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
