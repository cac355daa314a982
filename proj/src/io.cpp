#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nythard::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(cat("missing key: ", key));
    return j.at(key);
}

int to_int(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(cat(what, " must be an integer"));
    return j.get<int>();
}

long long to_ll(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(cat(what, " must be an integer"));
    return j.get<long long>();
}

std::string to_str(const json& j, const char* what) {
    if (!j.is_string()) fail(cat(what, " must be a string"));
    return j.get<std::string>();
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) fail(cat(what, " must be a list"));
    return j;
}

std::vector<int> int_list(const json& j, const char* what) {
    std::vector<int> out;
    for (const auto& e : as_array(j, what)) out.push_back(to_int(e, what));
    return out;
}

json cell_json(const pips::Cell& c) { return json::array({c.x, c.y}); }

pips::Cell load_cell(const json& j) {
    const auto& a = as_array(j, "cell");
    if (a.size() != 2) fail("cell must be [x, y]");
    return {to_int(a[0], "cell x"), to_int(a[1], "cell y")};
}

json cells_json(const std::vector<pips::Cell>& cells) {
    json out = json::array();
    for (const auto& c : cells) out.push_back(cell_json(c));
    return out;
}

std::vector<pips::Cell> load_cells(const json& j, const char* what) {
    std::vector<pips::Cell> out;
    for (const auto& e : as_array(j, what)) out.push_back(load_cell(e));
    return out;
}

json rc_json(const strands::CellRC& c) { return json::array({c.first, c.second}); }

strands::CellRC load_rc(const json& j) {
    const auto& a = as_array(j, "cell");
    if (a.size() != 2) fail("cell must be [row, col]");
    return {to_int(a[0], "row"), to_int(a[1], "col")};
}

json rcs_json(const std::vector<strands::CellRC>& cells) {
    json out = json::array();
    for (const auto& c : cells) out.push_back(rc_json(c));
    return out;
}

std::vector<strands::CellRC> load_rcs(const json& j, const char* what) {
    std::vector<strands::CellRC> out;
    for (const auto& e : as_array(j, what)) out.push_back(load_rc(e));
    return out;
}

// Symbol spellings <-> ids.
struct SymbolTable {
    std::map<std::string, int> index;

    explicit SymbolTable(const std::vector<std::string>& alphabet) {
        for (size_t i = 0; i < alphabet.size(); ++i) index[alphabet[i]] = static_cast<int>(i);
    }

    int id(const std::string& spelling) const {
        auto it = index.find(spelling);
        if (it == index.end()) fail(cat("unknown symbol: ", spelling));
        return it->second;
    }
};

std::vector<std::string> load_names(const json& j, const char* what) {
    std::vector<std::string> out;
    for (const auto& e : as_array(j, what)) out.push_back(to_str(e, what));
    return out;
}

bool single_char_alphabet(const std::vector<std::string>& alphabet) {
    for (const auto& s : alphabet)
        if (s.size() != 1) return false;
    return !alphabet.empty();
}

json spell_word(const std::vector<std::string>& alphabet, const std::vector<int>& word,
                bool as_string) {
    if (as_string) {
        std::string s;
        for (int id : word) s += alphabet[static_cast<size_t>(id)];
        return s;
    }
    json out = json::array();
    for (int id : word) out.push_back(alphabet[static_cast<size_t>(id)]);
    return out;
}

std::vector<int> load_word(const SymbolTable& table, const json& j) {
    std::vector<int> out;
    if (j.is_string()) {
        for (char ch : j.get<std::string>()) out.push_back(table.id(std::string(1, ch)));
        return out;
    }
    for (const auto& e : as_array(j, "word")) out.push_back(table.id(to_str(e, "symbol")));
    return out;
}

}  // namespace

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("malformed document");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(cat("cannot read ", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(cat("cannot write ", path));
    out << content;
    if (!out) fail(cat("failed writing ", path));
}

// ------------------------------------------------------------- letter boxed

json save_lb_puzzle(const letterboxed::Puzzle& p) {
    json j;
    j["alphabet"] = p.alphabet;
    json dict = json::array();
    for (const auto& w : p.dictionary) dict.push_back(spell_word(p.alphabet, w, false));
    j["dictionary"] = dict;
    json sides = json::array();
    for (const auto& counts : p.side_counts) {
        json side = json::array();
        for (size_t sym = 0; sym < counts.size(); ++sym)
            for (int rep = 0; rep < counts[sym]; ++rep) side.push_back(p.alphabet[sym]);
        sides.push_back(side);
    }
    j["sides"] = sides;
    return j;
}

letterboxed::Puzzle load_lb_puzzle(const json& j) {
    letterboxed::Puzzle p;
    p.alphabet = load_names(field(j, "alphabet"), "alphabet");
    SymbolTable table(p.alphabet);
    for (const auto& w : as_array(field(j, "dictionary"), "dictionary"))
        p.dictionary.push_back(load_word(table, w));
    for (const auto& side : as_array(field(j, "sides"), "sides")) {
        std::vector<int> counts(p.alphabet.size(), 0);
        for (const auto& sym : as_array(side, "side"))
            counts[static_cast<size_t>(table.id(to_str(sym, "side symbol")))]++;
        p.side_counts.push_back(std::move(counts));
    }
    return p;
}

json save_lb_solution(const letterboxed::Solution& s) {
    json j;
    j["words"] = s.words;
    json trace = json::array();
    for (int side : s.side_trace) trace.push_back(side + 1);
    j["sideTrace"] = trace;
    return j;
}

letterboxed::Solution load_lb_solution(const json& j) {
    letterboxed::Solution s;
    s.words = int_list(field(j, "words"), "words");
    for (int side : int_list(field(j, "sideTrace"), "sideTrace")) s.side_trace.push_back(side - 1);
    return s;
}

json save_nae_reduction(const letterboxed::NaeReduction& red) {
    json j;
    j["kind"] = "nae3sat-to-letterboxed";
    j["k"] = red.k;
    j["variableOrder"] = red.variable_order;
    std::vector<int> counts;
    for (size_t v = 0; v < red.first_occurrence.size(); ++v)
        counts.push_back(red.occurrence_count.at(static_cast<int>(v)));
    j["occurrenceCount"] = counts;
    j["firstOccurrence"] = red.first_occurrence;
    return j;
}

letterboxed::NaeReduction load_nae_reduction(const json& j, letterboxed::Puzzle puzzle) {
    if (to_str(field(j, "kind"), "kind") != "nae3sat-to-letterboxed") fail("wrong sidecar kind");
    letterboxed::NaeReduction red;
    red.puzzle = std::move(puzzle);
    red.k = to_int(field(j, "k"), "k");
    red.variable_order = int_list(field(j, "variableOrder"), "variableOrder");
    const auto counts = int_list(field(j, "occurrenceCount"), "occurrenceCount");
    for (size_t v = 0; v < counts.size(); ++v) red.occurrence_count[static_cast<int>(v)] = counts[v];
    for (const auto& e : as_array(field(j, "firstOccurrence"), "firstOccurrence"))
        red.first_occurrence.push_back(static_cast<size_t>(to_ll(e, "firstOccurrence")));
    return red;
}

json save_3dm_reduction(const letterboxed::ThreeDmReduction& red) {
    json j;
    j["kind"] = "3dm-to-letterboxed";
    j["k"] = red.k;
    j["tripleOfWord"] = red.triple_of_word;
    return j;
}

letterboxed::ThreeDmReduction load_3dm_reduction(const json& j, letterboxed::Puzzle puzzle) {
    if (to_str(field(j, "kind"), "kind") != "3dm-to-letterboxed") fail("wrong sidecar kind");
    letterboxed::ThreeDmReduction red;
    red.puzzle = std::move(puzzle);
    red.k = to_int(field(j, "k"), "k");
    red.triple_of_word = int_list(field(j, "tripleOfWord"), "tripleOfWord");
    return red;
}

json save_lift(const letterboxed::LiftedPuzzle& lifted) {
    json j;
    j["kind"] = "lift-letterboxed";
    j["k"] = lifted.k;
    return j;
}

// --------------------------------------------------------------------- pips

namespace {

const char* kind_name(pips::ConstraintKind k) {
    switch (k) {
        case pips::ConstraintKind::eq: return "eq";
        case pips::ConstraintKind::neq: return "neq";
        case pips::ConstraintKind::sum_eq: return "sum";
        case pips::ConstraintKind::sum_lt: return "lt";
        case pips::ConstraintKind::sum_gt: return "gt";
    }
    return "eq";
}

pips::ConstraintKind kind_from(const std::string& name) {
    if (name == "eq") return pips::ConstraintKind::eq;
    if (name == "neq") return pips::ConstraintKind::neq;
    if (name == "sum") return pips::ConstraintKind::sum_eq;
    if (name == "lt") return pips::ConstraintKind::sum_lt;
    if (name == "gt") return pips::ConstraintKind::sum_gt;
    fail(cat("unknown constraint kind: ", name));
}

bool is_sum_kind(pips::ConstraintKind k) {
    return k == pips::ConstraintKind::sum_eq || k == pips::ConstraintKind::sum_lt ||
           k == pips::ConstraintKind::sum_gt;
}

}  // namespace

json save_pips_puzzle(const pips::Puzzle& p) {
    json j;
    j["cells"] = cells_json(p.cells);
    json dominoes = json::array();
    for (const auto& d : p.dominoes) dominoes.push_back(json::array({d.a, d.b}));
    j["dominoes"] = dominoes;
    json constraints = json::array();
    for (const auto& c : p.constraints) {
        json cj;
        cj["region"] = cells_json(c.region);
        cj["kind"] = kind_name(c.kind);
        if (is_sum_kind(c.kind)) cj["n"] = c.n;
        constraints.push_back(cj);
    }
    j["constraints"] = constraints;
    return j;
}

pips::Puzzle load_pips_puzzle(const json& j) {
    pips::Puzzle p;
    p.cells = load_cells(field(j, "cells"), "cells");
    for (const auto& d : as_array(field(j, "dominoes"), "dominoes")) {
        const auto& a = as_array(d, "domino");
        if (a.size() != 2) fail("domino must be [a, b]");
        p.dominoes.push_back({to_ll(a[0], "domino value"), to_ll(a[1], "domino value")});
    }
    for (const auto& cj : as_array(field(j, "constraints"), "constraints")) {
        pips::Constraint c;
        c.region = load_cells(field(cj, "region"), "region");
        c.kind = kind_from(to_str(field(cj, "kind"), "kind"));
        if (is_sum_kind(c.kind)) c.n = to_ll(field(cj, "n"), "n");
        p.constraints.push_back(std::move(c));
    }
    return p;
}

json save_pips_tiling(const pips::Tiling& t) {
    json j = json::array();
    for (const auto& pl : t) {
        json pj;
        pj["dominoIndex"] = pl.domino;
        pj["cellA"] = cell_json(pl.cell_a);
        pj["cellB"] = cell_json(pl.cell_b);
        pj["valueAtA"] = pl.value_a;
        pj["valueAtB"] = pl.value_b;
        j.push_back(pj);
    }
    return j;
}

pips::Tiling load_pips_tiling(const json& j) {
    pips::Tiling t;
    for (const auto& pj : as_array(j, "placement list")) {
        pips::Placement pl;
        pl.domino = to_int(field(pj, "dominoIndex"), "dominoIndex");
        pl.cell_a = load_cell(field(pj, "cellA"));
        pl.cell_b = load_cell(field(pj, "cellB"));
        pl.value_a = to_ll(field(pj, "valueAtA"), "valueAtA");
        pl.value_b = to_ll(field(pj, "valueAtB"), "valueAtB");
        t.push_back(pl);
    }
    return t;
}

json save_pips_1in3(const pips::OneInThreeReduction& red) {
    json j;
    j["kind"] = "1in3-to-pips";
    j["connected"] = red.connected;
    j["zeros"] = red.layout.zeros;
    j["ones"] = red.layout.ones;
    json vars = json::array();
    for (const auto& g : red.layout.variables) {
        json vj;
        vj["present"] = g.present;
        vj["cells"] = cells_json(g.cells);
        vj["eqRegion"] = cells_json(g.eq_region);
        vj["tips"] = cells_json(g.tips);
        vars.push_back(vj);
    }
    j["variables"] = vars;
    json clauses = json::array();
    for (const auto& g : red.layout.clauses) {
        json cj;
        cj["row"] = g.row;
        cj["tips"] = cells_json(g.tips);
        cj["body"] = cells_json(g.body);
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    j["connectors"] = cells_json(red.layout.connectors);
    j["cleanup"] = cells_json(red.layout.cleanup);
    return j;
}

pips::OneInThreeReduction load_pips_1in3(const json& j, pips::Puzzle puzzle) {
    if (to_str(field(j, "kind"), "kind") != "1in3-to-pips") fail("wrong sidecar kind");
    pips::OneInThreeReduction red;
    red.puzzle = std::move(puzzle);
    red.connected = field(j, "connected").get<bool>();
    red.layout.zeros = to_ll(field(j, "zeros"), "zeros");
    red.layout.ones = to_ll(field(j, "ones"), "ones");
    for (const auto& vj : as_array(field(j, "variables"), "variables")) {
        pips::OneInThreeLayout::VariableGadget g;
        g.present = field(vj, "present").get<bool>();
        g.cells = load_cells(field(vj, "cells"), "cells");
        g.eq_region = load_cells(field(vj, "eqRegion"), "eqRegion");
        g.tips = load_cells(field(vj, "tips"), "tips");
        red.layout.variables.push_back(std::move(g));
    }
    for (const auto& cj : as_array(field(j, "clauses"), "clauses")) {
        pips::OneInThreeLayout::ClauseGadget g;
        g.row = to_int(field(cj, "row"), "row");
        g.tips = load_cells(field(cj, "tips"), "tips");
        g.body = load_cells(field(cj, "body"), "body");
        red.layout.clauses.push_back(std::move(g));
    }
    red.layout.connectors = load_cells(field(j, "connectors"), "connectors");
    red.layout.cleanup = load_cells(field(j, "cleanup"), "cleanup");
    return red;
}

// ------------------------------------------------------------------ strands

json save_strands_instance(const strands::Instance& inst) {
    json j;
    j["alphabet"] = inst.alphabet;
    const bool compact = single_char_alphabet(inst.alphabet);
    json dict = json::array();
    for (const auto& w : inst.dictionary) dict.push_back(spell_word(inst.alphabet, w, compact));
    j["dictionary"] = dict;
    json grid = json::array();
    for (const auto& row : inst.grid) grid.push_back(spell_word(inst.alphabet, row, compact));
    j["grid"] = grid;
    return j;
}

strands::Instance load_strands_instance(const json& j) {
    strands::Instance inst;
    inst.alphabet = load_names(field(j, "alphabet"), "alphabet");
    SymbolTable table(inst.alphabet);
    for (const auto& w : as_array(field(j, "dictionary"), "dictionary"))
        inst.dictionary.push_back(load_word(table, w));
    for (const auto& row : as_array(field(j, "grid"), "grid"))
        inst.grid.push_back(load_word(table, row));
    return inst;
}

json save_strands_partition(const strands::Instance& inst, const strands::Partition& part,
                            bool with_certificate) {
    json placements = json::array();
    for (const auto& pl : part) {
        json pj;
        pj["word"] = pl.word;
        pj["cells"] = rcs_json(pl.cells);
        placements.push_back(pj);
    }
    if (!with_certificate) return placements;
    json j;
    j["placements"] = placements;
    const auto cert = export_certificate(inst, part);
    j["v1"] = cert.roles;
    j["v2"] = cert.steps;
    return j;
}

strands::Partition load_strands_partition(const strands::Instance& inst, const json& j) {
    const json* placements = nullptr;
    if (j.is_array()) {
        placements = &j;
    } else if (j.is_object() && j.contains("placements")) {
        placements = &j.at("placements");
    } else if (j.is_object() && j.contains("v1") && j.contains("v2")) {
        strands::Certificate cert;
        for (const auto& row : as_array(j.at("v1"), "v1")) cert.roles.push_back(to_str(row, "v1 row"));
        for (const auto& row : as_array(j.at("v2"), "v2"))
            cert.steps.push_back(load_names(row, "v2 row"));
        return import_certificate(inst, cert);
    } else {
        fail("partition document must be a placement list or carry v1/v2");
    }
    strands::Partition part;
    for (const auto& pj : as_array(*placements, "placements")) {
        strands::Placement pl;
        pl.word = to_int(field(pj, "word"), "word");
        pl.cells = load_rcs(field(pj, "cells"), "cells");
        part.push_back(std::move(pl));
    }
    return part;
}

json save_strands_1in3(const strands::OneInThreeReduction& red) {
    json j;
    j["kind"] = "1in3-to-strands";
    j["wordTrue"] = red.layout.word_true;
    j["wordFalse"] = red.layout.word_false;
    json vars = json::array();
    for (const auto& g : red.layout.variables) {
        json vj;
        vj["present"] = g.present;
        vj["topRow"] = g.top_row;
        vj["leftCol"] = g.left_col;
        vj["incidences"] = g.incidences;
        vj["eCells"] = rcs_json(g.e_cells);
        vars.push_back(vj);
    }
    j["variables"] = vars;
    json clauses = json::array();
    for (const auto& g : red.layout.clauses) {
        json cj;
        cj["cNear"] = rc_json(g.c_near);
        cj["cFar"] = rc_json(g.c_far);
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    json edges = json::array();
    for (const auto& e : red.layout.edges) {
        json ej;
        ej["clause"] = e.clause;
        ej["variable"] = e.variable;
        ej["cells"] = rcs_json(e.cells);
        edges.push_back(ej);
    }
    j["edges"] = edges;
    return j;
}

strands::OneInThreeReduction load_strands_1in3(const json& j, strands::Instance instance) {
    if (to_str(field(j, "kind"), "kind") != "1in3-to-strands") fail("wrong sidecar kind");
    strands::OneInThreeReduction red;
    red.instance = std::move(instance);
    red.layout.word_true = to_int(field(j, "wordTrue"), "wordTrue");
    red.layout.word_false = to_int(field(j, "wordFalse"), "wordFalse");
    for (const auto& vj : as_array(field(j, "variables"), "variables")) {
        strands::OneInThreeLayout::VariableGadget g;
        g.present = field(vj, "present").get<bool>();
        g.top_row = to_int(field(vj, "topRow"), "topRow");
        g.left_col = to_int(field(vj, "leftCol"), "leftCol");
        g.incidences = to_int(field(vj, "incidences"), "incidences");
        g.e_cells = load_rcs(field(vj, "eCells"), "eCells");
        red.layout.variables.push_back(std::move(g));
    }
    for (const auto& cj : as_array(field(j, "clauses"), "clauses")) {
        strands::OneInThreeLayout::ClauseGadget g;
        g.c_near = load_rc(field(cj, "cNear"));
        g.c_far = load_rc(field(cj, "cFar"));
        red.layout.clauses.push_back(g);
    }
    for (const auto& ej : as_array(field(j, "edges"), "edges")) {
        strands::OneInThreeLayout::Edge e;
        e.clause = to_int(field(ej, "clause"), "clause");
        e.variable = to_int(field(ej, "variable"), "variable");
        e.cells = load_rcs(field(ej, "cells"), "cells");
        red.layout.edges.push_back(std::move(e));
    }
    return red;
}

json save_flowfree(const strands::FlowFree& ff) {
    json j;
    j["width"] = ff.width;
    j["height"] = ff.height;
    json pairs = json::array();
    for (const auto& p : ff.pairs) {
        json pj;
        pj["color"] = p.color;
        pj["a"] = rc_json(p.a);
        pj["b"] = rc_json(p.b);
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    return j;
}

strands::FlowFree load_flowfree(const json& j) {
    strands::FlowFree ff;
    ff.width = to_int(field(j, "width"), "width");
    ff.height = to_int(field(j, "height"), "height");
    for (const auto& pj : as_array(field(j, "pairs"), "pairs")) {
        strands::FlowFree::ColorPair p;
        p.color = to_str(field(pj, "color"), "color");
        p.a = load_rc(field(pj, "a"));
        p.b = load_rc(field(pj, "b"));
        ff.pairs.push_back(std::move(p));
    }
    return ff;
}

// -------------------------------------------------------------------- tiles

json save_tiles_instance(const tiles::Instance& inst) {
    json j;
    j["features"] = inst.features;
    json tiles_json = json::array();
    for (const auto& tile : inst.tiles) {
        json tj = json::array();
        for (int f : tile) tj.push_back(inst.features[static_cast<size_t>(f)]);
        tiles_json.push_back(tj);
    }
    j["tiles"] = tiles_json;
    return j;
}

tiles::Instance load_tiles_instance(const json& j) {
    tiles::Instance inst;
    inst.features = load_names(field(j, "features"), "features");
    std::map<std::string, int> index;
    for (size_t i = 0; i < inst.features.size(); ++i)
        index[inst.features[i]] = static_cast<int>(i);
    for (const auto& tj : as_array(field(j, "tiles"), "tiles")) {
        std::vector<int> tile;
        for (const auto& name : as_array(tj, "tile")) {
            auto it = index.find(to_str(name, "feature name"));
            if (it == index.end()) fail(cat("unknown feature: ", to_str(name, "feature name")));
            tile.push_back(it->second);
        }
        inst.tiles.push_back(std::move(tile));
    }
    return inst;
}

json save_tiles_moves(const std::vector<int>& moves) { return json(moves); }

std::vector<int> load_tiles_moves(const json& j) { return int_list(j, "moves"); }

// ---------------------------------------------------------- source problems

namespace {

json clauses_json(const std::vector<std::array<int, 3>>& clauses) {
    json out = json::array();
    for (const auto& cl : clauses) out.push_back(json::array({cl[0], cl[1], cl[2]}));
    return out;
}

std::vector<std::array<int, 3>> load_triples(const json& j, const char* what) {
    std::vector<std::array<int, 3>> out;
    for (const auto& e : as_array(j, what)) {
        const auto& a = as_array(e, what);
        if (a.size() != 3) fail(cat(what, " entries must have three elements"));
        out.push_back({to_int(a[0], what), to_int(a[1], what), to_int(a[2], what)});
    }
    return out;
}

void expect_kind(const json& j, const char* kind) {
    if (to_str(field(j, "kind"), "kind") != kind) fail(cat("expected kind ", kind));
}

}  // namespace

json save_nae(const sources::Nae3Sat& f) {
    json j;
    j["kind"] = "nae3sat";
    j["variables"] = f.variables;
    j["clauses"] = clauses_json(f.clauses);
    return j;
}

sources::Nae3Sat load_nae(const json& j) {
    expect_kind(j, "nae3sat");
    sources::Nae3Sat f;
    f.variables = load_names(field(j, "variables"), "variables");
    f.clauses = load_triples(field(j, "clauses"), "clauses");
    return f;
}

json save_1in3(const sources::OneInThreeSat& f) {
    json j;
    j["kind"] = "1in3";
    j["variables"] = f.variables;
    j["clauses"] = clauses_json(f.clauses);
    json embedding = json::array();
    for (const auto& pl : f.placements) {
        json ej;
        ej["side"] = pl.side == sources::Side::above ? "above" : "below";
        ej["level"] = pl.level;
        ej["slots"] = json::array({pl.slots[0], pl.slots[1], pl.slots[2]});
        embedding.push_back(ej);
    }
    j["embedding"] = embedding;
    return j;
}

sources::OneInThreeSat load_1in3(const json& j) {
    expect_kind(j, "1in3");
    sources::OneInThreeSat f;
    f.variables = load_names(field(j, "variables"), "variables");
    f.clauses = load_triples(field(j, "clauses"), "clauses");
    for (const auto& ej : as_array(field(j, "embedding"), "embedding")) {
        sources::ClausePlacement pl;
        const auto side = to_str(field(ej, "side"), "side");
        if (side == "above")
            pl.side = sources::Side::above;
        else if (side == "below")
            pl.side = sources::Side::below;
        else
            fail(cat("unknown side: ", side));
        pl.level = to_int(field(ej, "level"), "level");
        const auto& slots = as_array(field(ej, "slots"), "slots");
        if (slots.size() != 3) fail("slots must have three entries");
        for (int i = 0; i < 3; ++i)
            pl.slots[static_cast<size_t>(i)] = to_int(slots[static_cast<size_t>(i)], "slot");
        f.placements.push_back(pl);
    }
    return f;
}

json save_3dm(const sources::ThreeDimMatching& t) {
    json j;
    j["kind"] = "3dm";
    j["n"] = t.n;
    j["triples"] = clauses_json(t.triples);
    return j;
}

sources::ThreeDimMatching load_3dm(const json& j) {
    expect_kind(j, "3dm");
    sources::ThreeDimMatching t;
    t.n = to_int(field(j, "n"), "n");
    t.triples = load_triples(field(j, "triples"), "triples");
    return t;
}

json save_subset_sum(const sources::SubsetSum& s) {
    json j;
    j["kind"] = "subsetsum";
    j["elements"] = s.elements;
    j["target"] = s.target;
    return j;
}

sources::SubsetSum load_subset_sum(const json& j) {
    expect_kind(j, "subsetsum");
    sources::SubsetSum s;
    for (const auto& e : as_array(field(j, "elements"), "elements"))
        s.elements.push_back(to_ll(e, "element"));
    s.target = to_ll(field(j, "target"), "target");
    return s;
}

}  // namespace nythard::io
