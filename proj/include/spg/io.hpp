#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "spg/board.hpp"
#include "spg/complex.hpp"
#include "spg/ruleset.hpp"

namespace spg {

using nlohmann::json;

/// {"vertices":[{"id":"a","part":"L"},...],"facets":[["a","b"],...],"void":false}
json complex_to_json(const LabeledComplex& complex);
LabeledComplex complex_from_json(const json& j);

/// {"variables":[{"id":"x1","part":"L"},...],"generators":[["x1","y3"],...]}
json ideal_to_json(const SquareFreeIdeal& ideal);
SquareFreeIdeal ideal_from_json(const json& j);

/// {"vertices":[0,...],"edges":[[0,1],...],"coords":{"0":[r,c],...}?,"cycle_labels":{...}?}
json board_to_json(const Board& board);
Board board_from_json(const json& j);

/// {"edges":[["a","b",1],...]}
json labeling_to_json(const EdgeLabeling& labeling);
EdgeLabeling labeling_from_json(const json& j);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const json& j);

/// Reads and parses a JSON file. Syntax errors and errors raised by `convert`
/// are rethrown as Error prefixed with "path:line:".
json read_json_file(const std::filesystem::path& path);

LabeledComplex load_complex(const std::filesystem::path& path);
EdgeLabeling load_labeling(const std::filesystem::path& path);
Board load_board(const std::filesystem::path& path);

/// Built-in names plus table-legal:<file>, table-illegal:<file> and
/// gamma:<file>[:<labeling file>].
Ruleset resolve_ruleset(const std::string& spec);

/// Board spec strings as accepted by parse_board_spec, or file:<board.json>.
Board resolve_board(const std::string& spec);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace spg
