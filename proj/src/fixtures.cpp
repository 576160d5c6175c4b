#include "equibir/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace equibir {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw FixtureError("cannot open " + file.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RawLine {
    std::string keyword;
    std::string rest;
};

std::vector<RawLine> parse_lines(const std::string& text) {
    std::vector<RawLine> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto l = rest.find_first_not_of(" \t");
        out.push_back({kw, l == std::string::npos ? "" : rest.substr(l)});
    }
    return out;
}

} // namespace

std::string file_digest(const std::filesystem::path& file) { return fnv1a64(read_file(file)); }

GroupElement evaluate_word(const std::map<std::string, GroupElement>& gens,
                           const std::string& word) {
    if (gens.empty()) throw FixtureError("no generators for word evaluation");
    GroupElement acc = gens.begin()->second.identity_like();
    if (word == "e" || word == "1") return acc;
    std::istringstream is(word);
    std::string factor;
    while (std::getline(is, factor, '*')) {
        std::string name = factor;
        unsigned long exp = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
            name = factor.substr(0, caret);
            exp = std::stoul(factor.substr(caret + 1));
        }
        auto it = gens.find(name);
        if (it == gens.end()) throw FixtureError("unknown generator in word: " + name);
        for (unsigned long k = 0; k < exp; ++k) acc = acc * it->second;
    }
    return acc;
}

LoadedTable load_char_table(const std::filesystem::path& file) {
    const std::string text = read_file(file);
    LoadedTable out;
    out.digest = fnv1a64(text);

    std::map<std::string, GroupElement> gens;
    struct FixtureClass {
        std::size_t size;
        unsigned order;
        std::string word;
    };
    std::vector<FixtureClass> fclasses;
    std::vector<std::pair<std::string, std::vector<std::string>>> chars;
    std::vector<std::pair<std::string, std::string>> raw_perm_gens;
    std::size_t declared_order = 0;
    int schema = -1;

    for (const auto& [kw, rest] : parse_lines(text)) {
        if (kw == "schema") {
            schema = std::stoi(rest);
        } else if (kw == "kind") {
            if (rest != "character-table")
                throw FixtureError(file.string() + ": unexpected kind " + rest);
        } else if (kw == "name") {
            out.name = rest;
        } else if (kw == "label") {
            out.iso_label = rest;
        } else if (kw == "order") {
            declared_order = std::stoul(rest);
        } else if (kw == "gen") {
            std::istringstream ls(rest);
            std::string name;
            ls >> name;
            std::string spec;
            std::getline(ls, spec);
            raw_perm_gens.emplace_back(name, spec);
        } else if (kw == "genmat") {
            std::istringstream ls(rest);
            std::string name;
            std::size_t dim;
            ls >> name >> dim;
            IntMat m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    std::string v;
                    if (!(ls >> v)) throw FixtureError("short matrix generator " + name);
                    m(i, j) = BigInt(v);
                }
            gens.emplace(name, GroupElement(std::move(m)));
        } else if (kw == "class") {
            auto toks = split_ws(rest);
            if (toks.size() != 3) throw FixtureError("class line needs size, order, word");
            fclasses.push_back({std::stoul(toks[0]), static_cast<unsigned>(std::stoul(toks[1])),
                                toks[2]});
        } else if (kw == "char") {
            std::istringstream ls(rest);
            std::string label;
            ls >> label;
            std::string values;
            std::getline(ls, values);
            std::vector<std::string> cells;
            std::string cell;
            std::istringstream vs(values);
            while (std::getline(vs, cell, ';')) cells.push_back(cell);
            chars.emplace_back(label, std::move(cells));
        } else {
            throw FixtureError(file.string() + ": unknown keyword " + kw);
        }
    }
    if (schema != 1) throw FixtureError(file.string() + ": unsupported schema");

    // permutation generators are padded to a common degree before closure
    std::size_t deg = 0;
    for (const auto& [name, spec] : raw_perm_gens)
        deg = std::max(deg, Perm::parse_cycles(spec).degree());
    for (const auto& [name, spec] : raw_perm_gens)
        gens.emplace(name, GroupElement(Perm::parse_cycles(spec, deg)));
    if (gens.empty()) throw FixtureError(file.string() + ": no generators");

    std::vector<GroupElement> gvec;
    for (const auto& [name, g] : gens) gvec.push_back(g);
    auto group = std::make_shared<FinGroup>(FinGroup::close(gvec));
    if (declared_order && group->order() != declared_order)
        throw FixtureError(out.name + ": closure has order " + std::to_string(group->order()) +
                           ", fixture declares " + std::to_string(declared_order));
    if (fclasses.size() != group->num_classes())
        throw FixtureError(out.name + ": fixture lists " + std::to_string(fclasses.size()) +
                           " classes, group has " + std::to_string(group->num_classes()));

    // match fixture classes to computed classes through representative words
    std::vector<std::size_t> fix_to_grp(fclasses.size(), SIZE_MAX);
    std::vector<bool> taken(group->num_classes(), false);
    for (std::size_t f = 0; f < fclasses.size(); ++f) {
        GroupElement rep = evaluate_word(gens, fclasses[f].word);
        std::size_t c = group->class_of(group->index_of(rep));
        if (taken[c])
            throw FixtureError(out.name + ": two fixture classes map to one computed class");
        if (group->class_size(c) != fclasses[f].size ||
            group->class_order(c) != fclasses[f].order)
            throw FixtureError(out.name + ": class metadata mismatch for word " +
                               fclasses[f].word);
        taken[c] = true;
        fix_to_grp[f] = c;
    }

    out.file_class_of.assign(group->num_classes(), SIZE_MAX);
    for (std::size_t f = 0; f < fclasses.size(); ++f) out.file_class_of[fix_to_grp[f]] = f;

    out.table.group = group;
    for (auto& [label, cells] : chars) {
        if (cells.size() != fclasses.size())
            throw FixtureError(out.name + ": row " + label + " has " +
                               std::to_string(cells.size()) + " values");
        ClassFunction cf{group, std::vector<CycNum>(group->num_classes())};
        for (std::size_t f = 0; f < cells.size(); ++f)
            cf.values[fix_to_grp[f]] = CycNum::parse(cells[f]);
        out.table.rows.push_back(std::move(cf));
        out.table.labels.push_back(label);
    }
    out.group = group;
    return out;
}

ScenarioFile load_scenario(const std::filesystem::path& file) {
    const std::string text = read_file(file);
    ScenarioFile out;
    out.digest = fnv1a64(text);
    int schema = -1;
    for (const auto& [kw, rest] : parse_lines(text)) {
        if (kw == "schema")
            schema = std::stoi(rest);
        else if (kw == "kind") {
            if (rest != "linear-section-scenario")
                throw FixtureError(file.string() + ": unexpected kind " + rest);
        } else if (kw == "name")
            out.name = rest;
        else if (kw == "table")
            out.table = rest;
        else if (kw == "w")
            out.w_label = rest;
        else if (kw == "choose")
            out.chosen = split_ws(rest);
        else if (kw == "expect")
            out.expect = rest;
        else if (kw.rfind("expect_", 0) == 0)
            out.expectations[kw] = std::stol(rest);
        else
            throw FixtureError(file.string() + ": unknown keyword " + kw);
    }
    if (schema != 1) throw FixtureError(file.string() + ": unsupported schema");
    return out;
}

std::filesystem::path fixture_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("EQUIBIR_FIXTURES")) return env;
    return "fixtures";
}

} // namespace equibir
