#include "strands.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace nythard::strands {

namespace {

// Depth-first neighbour order; the first four are the orthogonal moves.
constexpr int kDirCount = 8;
constexpr int kDr[kDirCount] = {-1, 0, 1, 0, -1, 1, 1, -1};
constexpr int kDc[kDirCount] = {0, 1, 0, -1, 1, 1, -1, -1};
constexpr const char* kDirName[kDirCount] = {"u", "r", "d", "l", "ur", "dr", "dl", "ul"};

bool adjacent(CellRC a, CellRC b, bool allow_diagonal) {
    const int dr = std::abs(a.first - b.first);
    const int dc = std::abs(a.second - b.second);
    if (dr > 1 || dc > 1 || (dr == 0 && dc == 0)) return false;
    return allow_diagonal || dr + dc == 1;
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    std::set<std::string> names;
    for (const auto& s : inst.alphabet) {
        if (s.empty()) out.push_back("empty symbol spelling");
        if (!names.insert(s).second) out.push_back(cat("duplicate symbol: ", s));
    }
    const int symbols = static_cast<int>(inst.alphabet.size());
    if (inst.grid.empty()) out.push_back("empty grid");
    for (size_t r = 0; r < inst.grid.size(); ++r) {
        if (inst.grid[r].empty()) out.push_back(cat("row ", r, " is empty"));
        if (inst.grid[r].size() != inst.grid.front().size())
            out.push_back(cat("row ", r, " has a different length"));
        for (int id : inst.grid[r])
            if (id < 0 || id >= symbols) out.push_back(cat("row ", r, ": symbol id ", id, " out of range"));
    }
    std::set<std::vector<int>> words;
    for (size_t w = 0; w < inst.dictionary.size(); ++w) {
        if (inst.dictionary[w].empty()) out.push_back(cat("word ", w, " is empty"));
        for (int id : inst.dictionary[w])
            if (id < 0 || id >= symbols) out.push_back(cat("word ", w, ": symbol id ", id, " out of range"));
        if (!words.insert(inst.dictionary[w]).second) out.push_back(cat("word ", w, " duplicated"));
    }
    return out;
}

std::vector<std::string> verify_partition(const Instance& inst, const Partition& part,
                                          bool allow_diagonal) {
    std::vector<std::string> out;
    const int rows = inst.rows(), cols = inst.cols();
    std::vector<int> covered(static_cast<size_t>(rows * cols), 0);

    for (size_t i = 0; i < part.size(); ++i) {
        const auto& pl = part[i];
        if (pl.word < 0 || pl.word >= static_cast<int>(inst.dictionary.size())) {
            out.push_back(cat("placement ", i, ": word index out of range"));
            continue;
        }
        const auto& word = inst.dictionary[static_cast<size_t>(pl.word)];
        if (pl.cells.size() != word.size()) {
            out.push_back(cat("placement ", i, ": path length differs from word length"));
            continue;
        }
        std::set<CellRC> seen;
        for (size_t j = 0; j < pl.cells.size(); ++j) {
            const auto [r, c] = pl.cells[j];
            if (r < 0 || r >= rows || c < 0 || c >= cols) {
                out.push_back(cat("placement ", i, ": cell off the grid"));
                break;
            }
            if (!seen.insert(pl.cells[j]).second)
                out.push_back(cat("placement ", i, ": cell visited twice"));
            if (inst.grid[static_cast<size_t>(r)][static_cast<size_t>(c)] != word[j])
                out.push_back(cat("placement ", i, ": symbol mismatch at step ", j));
            if (j > 0 && !adjacent(pl.cells[j - 1], pl.cells[j], allow_diagonal))
                out.push_back(cat("placement ", i, ": step ", j, " is not adjacent"));
            if (r >= 0 && r < rows && c >= 0 && c < cols) covered[static_cast<size_t>(r * cols + c)]++;
        }
    }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int n = covered[static_cast<size_t>(r * cols + c)];
            if (n == 0) out.push_back(cat("cell (", r, ",", c, ") is uncovered"));
            if (n > 1) out.push_back(cat("cell (", r, ",", c, ") is covered ", n, " times"));
        }
    return out;
}

namespace {

void extend_path(const Instance& inst, const std::vector<int>& word, bool allow_diagonal,
                 std::vector<CellRC>& path, std::vector<char>& used,
                 std::vector<Placement>& out, int word_index) {
    if (path.size() == word.size()) {
        out.push_back({word_index, path});
        return;
    }
    const int rows = inst.rows(), cols = inst.cols();
    const int dirs = allow_diagonal ? 8 : 4;
    const auto [r, c] = path.back();
    for (int d = 0; d < dirs; ++d) {
        const int nr = r + kDr[d], nc = c + kDc[d];
        if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
        if (used[static_cast<size_t>(nr * cols + nc)]) continue;
        if (inst.grid[static_cast<size_t>(nr)][static_cast<size_t>(nc)] != word[path.size()]) continue;
        used[static_cast<size_t>(nr * cols + nc)] = 1;
        path.push_back({nr, nc});
        extend_path(inst, word, allow_diagonal, path, used, out, word_index);
        path.pop_back();
        used[static_cast<size_t>(nr * cols + nc)] = 0;
    }
}

}  // namespace

std::vector<Placement> enumerate_placements(const Instance& inst, bool allow_diagonal) {
    std::vector<Placement> out;
    const int rows = inst.rows(), cols = inst.cols();
    std::vector<char> used(static_cast<size_t>(rows * cols), 0);
    for (size_t w = 0; w < inst.dictionary.size(); ++w) {
        const auto& word = inst.dictionary[w];
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (inst.grid[static_cast<size_t>(r)][static_cast<size_t>(c)] != word[0]) continue;
                std::vector<CellRC> path{{r, c}};
                used[static_cast<size_t>(r * cols + c)] = 1;
                extend_path(inst, word, allow_diagonal, path, used, out, static_cast<int>(w));
                used[static_cast<size_t>(r * cols + c)] = 0;
            }
    }
    return out;
}

namespace {

struct CoverSearch {
    const Instance& inst;
    std::vector<Placement> placements;
    std::vector<std::vector<int>> at_cell;  // cell id -> placement indices
    std::vector<char> covered;
    int uncovered = 0;
    bool most_constrained = false;
    Budget* budget = nullptr;
    bool over = false;
    std::vector<int> stack;

    CoverSearch(const Instance& i, const SolveOptions& opts)
        : inst(i), placements(enumerate_placements(i, opts.allow_diagonal)) {
        most_constrained = opts.most_constrained;
        budget = opts.budget;
        const int cells = inst.rows() * inst.cols();
        covered.assign(static_cast<size_t>(cells), 0);
        uncovered = cells;
        at_cell.resize(static_cast<size_t>(cells));
        for (size_t p = 0; p < placements.size(); ++p)
            for (const auto& [r, c] : placements[p].cells)
                at_cell[static_cast<size_t>(r * inst.cols() + c)].push_back(static_cast<int>(p));
    }

    bool free_placement(int p) const {
        for (const auto& [r, c] : placements[static_cast<size_t>(p)].cells)
            if (covered[static_cast<size_t>(r * inst.cols() + c)]) return false;
        return true;
    }

    int pick_cell() const {
        const int cells = inst.rows() * inst.cols();
        if (!most_constrained) {
            for (int i = 0; i < cells; ++i)
                if (!covered[static_cast<size_t>(i)]) return i;
            return -1;
        }
        int best = -1, best_count = -1;
        for (int i = 0; i < cells; ++i) {
            if (covered[static_cast<size_t>(i)]) continue;
            int n = 0;
            for (int p : at_cell[static_cast<size_t>(i)])
                if (free_placement(p)) ++n;
            if (best == -1 || n < best_count) {
                best = i;
                best_count = n;
            }
        }
        return best;
    }

    void mark(int p, int delta) {
        for (const auto& [r, c] : placements[static_cast<size_t>(p)].cells) {
            covered[static_cast<size_t>(r * inst.cols() + c)] += static_cast<char>(delta);
            uncovered -= delta;
        }
    }

    // Sink returns false to stop the whole search.
    template <typename Sink>
    bool run(const Sink& sink) {
        if (budget && !budget->tick()) {
            over = true;
            return false;
        }
        if (uncovered == 0) return sink(stack);
        const int cell = pick_cell();
        for (int p : at_cell[static_cast<size_t>(cell)]) {
            if (!free_placement(p)) continue;
            mark(p, 1);
            stack.push_back(p);
            const bool keep_going = run(sink);
            stack.pop_back();
            mark(p, -1);
            if (!keep_going || over) return false;
        }
        return true;
    }

    Partition current() const {
        Partition part;
        for (int p : stack) part.push_back(placements[static_cast<size_t>(p)]);
        return part;
    }
};

}  // namespace

SolveOutcome solve(const Instance& inst, const SolveOptions& opts) {
    auto errors = validate_instance(inst);
    if (!errors.empty()) throw std::invalid_argument(cat("invalid instance: ", join(errors, "; ")));
    CoverSearch search(inst, opts);
    SolveOutcome out{SearchStatus::exhausted, {}};
    search.run([&](const std::vector<int>&) {
        out.status = SearchStatus::found;
        out.partition = search.current();
        return false;
    });
    if (out.status != SearchStatus::found && search.over) out.status = SearchStatus::budget;
    return out;
}

EnumerateOutcome enumerate_partitions(const Instance& inst, size_t limit,
                                      const SolveOptions& opts) {
    auto errors = validate_instance(inst);
    if (!errors.empty()) throw std::invalid_argument(cat("invalid instance: ", join(errors, "; ")));
    CoverSearch search(inst, opts);
    EnumerateOutcome out{SearchStatus::exhausted, {}, false};
    search.run([&](const std::vector<int>&) {
        if (out.partitions.size() == limit) {
            out.truncated = true;
            return false;
        }
        out.partitions.push_back(search.current());
        return true;
    });
    if (search.over)
        out.status = SearchStatus::budget;
    else if (!out.partitions.empty())
        out.status = SearchStatus::found;
    return out;
}

Certificate export_certificate(const Instance& inst, const Partition& part) {
    const int rows = inst.rows(), cols = inst.cols();
    Certificate cert;
    cert.roles.assign(static_cast<size_t>(rows), std::string(static_cast<size_t>(cols), 'E'));
    cert.steps.assign(static_cast<size_t>(rows),
                      std::vector<std::string>(static_cast<size_t>(cols), "u"));

    for (const auto& pl : part) {
        for (size_t j = 0; j < pl.cells.size(); ++j) {
            const auto [r, c] = pl.cells[j];
            char role = 'C';
            if (pl.cells.size() == 1 || j + 1 == pl.cells.size())
                role = 'E';
            else if (j == 0)
                role = 'S';
            cert.roles[static_cast<size_t>(r)][static_cast<size_t>(c)] = role;
            if (j + 1 < pl.cells.size()) {
                const int dr = pl.cells[j + 1].first - r;
                const int dc = pl.cells[j + 1].second - c;
                for (int d = 0; d < kDirCount; ++d)
                    if (kDr[d] == dr && kDc[d] == dc)
                        cert.steps[static_cast<size_t>(r)][static_cast<size_t>(c)] = kDirName[d];
            }
        }
    }
    return cert;
}

Partition import_certificate(const Instance& inst, const Certificate& cert) {
    const int rows = inst.rows(), cols = inst.cols();
    if (static_cast<int>(cert.roles.size()) != rows ||
        static_cast<int>(cert.steps.size()) != rows)
        throw std::invalid_argument("certificate row count does not match the grid");
    for (int r = 0; r < rows; ++r)
        if (static_cast<int>(cert.roles[static_cast<size_t>(r)].size()) != cols ||
            static_cast<int>(cert.steps[static_cast<size_t>(r)].size()) != cols)
            throw std::invalid_argument("certificate column count does not match the grid");

    std::map<std::string, int> dir_index;
    for (int d = 0; d < kDirCount; ++d) dir_index[kDirName[d]] = d;
    std::map<std::vector<int>, int> word_index;
    for (size_t w = 0; w < inst.dictionary.size(); ++w)
        word_index[inst.dictionary[w]] = static_cast<int>(w);

    std::vector<char> visited(static_cast<size_t>(rows * cols), 0);
    Partition part;

    auto lookup = [&](const std::vector<CellRC>& cells) {
        std::vector<int> spelled;
        for (const auto& [r, c] : cells)
            spelled.push_back(inst.grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        auto it = word_index.find(spelled);
        if (it == word_index.end()) throw std::invalid_argument("certificate path spells no word");
        part.push_back({it->second, cells});
    };

    // Pass 1: walk every chain from its S cell.
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (cert.roles[static_cast<size_t>(r)][static_cast<size_t>(c)] != 'S') continue;
            std::vector<CellRC> cells;
            int cr = r, cc = c;
            while (true) {
                if (cr < 0 || cr >= rows || cc < 0 || cc >= cols)
                    throw std::invalid_argument("certificate chain walks off the grid");
                if (visited[static_cast<size_t>(cr * cols + cc)])
                    throw std::invalid_argument("certificate chain revisits a cell");
                visited[static_cast<size_t>(cr * cols + cc)] = 1;
                cells.push_back({cr, cc});
                const char role = cert.roles[static_cast<size_t>(cr)][static_cast<size_t>(cc)];
                if (cells.size() > 1 && role == 'S')
                    throw std::invalid_argument("certificate chain runs into another start");
                if (role == 'E') break;
                auto it = dir_index.find(cert.steps[static_cast<size_t>(cr)][static_cast<size_t>(cc)]);
                if (it == dir_index.end())
                    throw std::invalid_argument("certificate step direction is unknown");
                cr += kDr[it->second];
                cc += kDc[it->second];
            }
            lookup(cells);
        }

    // Pass 2: remaining E cells are single-cell words.
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (visited[static_cast<size_t>(r * cols + c)]) continue;
            const char role = cert.roles[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (role != 'E')
                throw std::invalid_argument("certificate leaves a non-end cell unvisited");
            visited[static_cast<size_t>(r * cols + c)] = 1;
            lookup({{r, c}});
        }
    return part;
}

}  // namespace nythard::strands
