#include "spg/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <tuple>
#include <sstream>

namespace spg {

namespace {

std::string part_string(Player p)
{
    return std::string(1, to_char(p));
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<Vertex> vertices_from_json(const json& list)
{
    if (!list.is_array()) {
        throw Error("'vertices' must be an array");
    }
    std::vector<Vertex> out;
    for (const auto& v : list) {
        const auto& id = require(v, "id");
        if (!id.is_string()) {
            throw Error("vertex id must be a string");
        }
        if (!v.contains("part")) {
            throw Error("vertex '" + id.get<std::string>() + "' has no Left/Right part assigned");
        }
        out.push_back({id.get<std::string>(), player_from_string(v.at("part").get<std::string>())});
    }
    return out;
}

json vertices_to_json(const std::vector<Vertex>& vs)
{
    json out = json::array();
    for (const auto& v : vs) {
        out.push_back({{"id", v.name}, {"part", part_string(v.part)}});
    }
    return out;
}

std::vector<std::vector<std::string>> name_lists(const json& list, const char* what)
{
    if (!list.is_array()) {
        throw Error(std::string("'") + what + "' must be an array of arrays");
    }
    std::vector<std::vector<std::string>> out;
    for (const auto& f : list) {
        if (!f.is_array()) {
            throw Error(std::string("'") + what + "' must be an array of arrays");
        }
        out.push_back(f.get<std::vector<std::string>>());
    }
    return out;
}

std::size_t line_of(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Line of the first quoted token ('name') of an error message, or line 1.
std::size_t locate(const std::string& text, const std::string& message)
{
    const auto open = message.find('\'');
    if (open != std::string::npos) {
        const auto close = message.find('\'', open + 1);
        if (close != std::string::npos) {
            const std::string token = "\"" + message.substr(open + 1, close - open - 1) + "\"";
            const auto at = text.find(token);
            if (at != std::string::npos) {
                return line_of(text, at);
            }
        }
    }
    return 1;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(path.string() + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename T, typename Convert>
T load(const std::filesystem::path& path, Convert convert)
{
    const std::string text = read_text(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(path.string() + ":" + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                    ": " + e.what());
    }
    try {
        return convert(j);
    } catch (const json::exception& e) {
        throw Error(path.string() + ":1: " + e.what());
    } catch (const Error& e) {
        throw Error(path.string() + ":" + std::to_string(locate(text, e.what())) + ": " + e.what());
    }
}

} // namespace

json complex_to_json(const LabeledComplex& complex)
{
    json facets = json::array();
    for (const auto& f : complex.facets()) {
        facets.push_back(f);
    }
    return {{"vertices", vertices_to_json(complex.vertices())},
            {"facets", std::move(facets)},
            {"void", complex.is_void()}};
}

LabeledComplex complex_from_json(const json& j)
{
    PartMap parts;
    if (j.contains("vertices")) {
        for (const auto& v : vertices_from_json(j.at("vertices"))) {
            parts[v.name] = v.part;
        }
    }
    const auto facets = name_lists(require(j, "facets"), "facets");
    const bool is_void = j.value("void", false);
    if (is_void && !facets.empty()) {
        throw Error("a void complex cannot list facets");
    }
    if (facets.empty()) {
        if (!is_void) {
            return LabeledComplex::empty_face_only();
        }
        return LabeledComplex::void_complex();
    }
    return LabeledComplex::from_facets(facets, parts);
}

json ideal_to_json(const SquareFreeIdeal& ideal)
{
    json gens = json::array();
    for (const auto& g : ideal.generators()) {
        gens.push_back(g);
    }
    return {{"variables", vertices_to_json(ideal.variables())}, {"generators", std::move(gens)}};
}

SquareFreeIdeal ideal_from_json(const json& j)
{
    return SquareFreeIdeal::from_names(vertices_from_json(require(j, "variables")),
                                       name_lists(require(j, "generators"), "generators"));
}

json board_to_json(const Board& board)
{
    json vertices = json::array();
    for (int v = 0; v < board.num_vertices(); ++v) {
        vertices.push_back(v);
    }
    json edges = json::array();
    for (auto [u, v] : board.edges()) {
        edges.push_back({u, v});
    }
    json out = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    if (board.has_coords()) {
        json coords = json::object();
        for (const auto& [v, c] : board.coords()) {
            coords[std::to_string(v)] = {c.row, c.col};
        }
        out["coords"] = std::move(coords);
    }
    if (!board.cycle_labels().empty()) {
        json labels = json::object();
        for (const auto& [v, l] : board.cycle_labels()) {
            json e = {{"role", to_string(l.role)}};
            if (l.cycle >= 0) e["cycle"] = l.cycle;
            if (l.peer >= 0) e["peer"] = l.peer;
            if (l.edge >= 0) e["edge"] = l.edge;
            labels[std::to_string(v)] = std::move(e);
        }
        out["cycle_labels"] = std::move(labels);
    }
    return out;
}

Board board_from_json(const json& j)
{
    const auto& vs = require(j, "vertices");
    if (!vs.is_array()) {
        throw Error("'vertices' must be an array");
    }
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        if (vs[static_cast<std::size_t>(i)].get<int>() != i) {
            throw Error("board vertices must be 0..n-1 in order");
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw Error("each edge must be a pair of vertex ids");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Board board(n, edges);
    if (j.contains("coords")) {
        std::map<int, Coord> coords;
        for (const auto& [k, c] : j.at("coords").items()) {
            coords[std::stoi(k)] = {c.at(0).get<int>(), c.at(1).get<int>()};
        }
        board.set_coords(std::move(coords));
    }
    if (j.contains("cycle_labels")) {
        std::map<int, CycleLabel> labels;
        for (const auto& [k, l] : j.at("cycle_labels").items()) {
            labels[std::stoi(k)] = {l.value("cycle", -1), cycle_role_from_string(l.at("role").get<std::string>()),
                                    l.value("peer", -1), l.value("edge", -1)};
        }
        board.set_cycle_labels(std::move(labels));
    }
    return board;
}

json labeling_to_json(const EdgeLabeling& labeling)
{
    std::vector<std::tuple<int, std::string, std::string>> rows;
    for (const auto& [e, l] : labeling.labels()) {
        rows.emplace_back(l, e.first, e.second);
    }
    std::sort(rows.begin(), rows.end());
    json edges = json::array();
    for (const auto& [l, u, v] : rows) {
        edges.push_back({u, v, l});
    }
    return {{"edges", std::move(edges)}};
}

EdgeLabeling labeling_from_json(const json& j)
{
    std::map<std::pair<std::string, std::string>, int> labels;
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 3) {
            throw Error("each labelled edge must be [u, v, label]");
        }
        auto key = std::make_pair(e[0].get<std::string>(), e[1].get<std::string>());
        if (labels.count(key) || labels.count({key.second, key.first})) {
            throw Error("edge '" + key.first + "' - '" + key.second + "' is labelled twice");
        }
        labels.emplace(std::move(key), e[2].get<int>());
    }
    return EdgeLabeling(std::move(labels));
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json read_json_file(const std::filesystem::path& path)
{
    return load<json>(path, [](const json& j) { return j; });
}

LabeledComplex load_complex(const std::filesystem::path& path)
{
    return load<LabeledComplex>(path, complex_from_json);
}

EdgeLabeling load_labeling(const std::filesystem::path& path)
{
    return load<EdgeLabeling>(path, labeling_from_json);
}

Board load_board(const std::filesystem::path& path)
{
    return load<Board>(path, board_from_json);
}

Ruleset resolve_ruleset(const std::string& spec)
{
    auto rest_after = [&](const std::string& prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) {
            return spec.substr(prefix.size());
        }
        return std::nullopt;
    };
    if (auto f = rest_after("table-legal:")) {
        return table_game_legal(load_complex(*f));
    }
    if (auto f = rest_after("table-illegal:")) {
        return table_game_illegal(load_complex(*f));
    }
    if (auto f = rest_after("gamma:")) {
        std::string complex_file = *f;
        std::optional<std::string> labeling_file;
        if (const auto colon = f->find(':'); colon != std::string::npos) {
            complex_file = f->substr(0, colon);
            labeling_file = f->substr(colon + 1);
        }
        const auto gamma = load_complex(complex_file);
        const auto labeling = labeling_file ? load_labeling(*labeling_file) : EdgeLabeling::default_for(gamma);
        return gamma_game(gamma, labeling);
    }
    return builtin_ruleset(spec);
}

Board resolve_board(const std::string& spec)
{
    if (spec.rfind("file:", 0) == 0) {
        return load_board(spec.substr(5));
    }
    return parse_board_spec(spec);
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(path.string() + ": cannot write file");
    }
    out << text;
}

} // namespace spg
