#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace mixdro {

// Deterministically generated desk-scale benchmark tables with the shape of
// the classic UCI sets (same feature structure and row counts); values are
// produced by pinned rules or generators, so results are comparable in kind
// but not byte-identical to the originals.
struct GeneratedTable {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json schema_doc;
};

// 4 features in {1..5}, exhaustive grid, tie rows removed: 576 rows labeled
// L/R by which side of the scale goes down.
GeneratedTable balance_scale_table();

// All legal finished tic-tac-toe boards (x moves first): 958 rows labeled
// positive iff x has three in a row; 9 categorical cells in {b, o, x}.
GeneratedTable tic_tac_toe_table();

// Automobile-style price regression: 205 rows, correlated continuous specs,
// 3 categoricals, heavy-tailed price; 12 rows carry a missing cell so loaders
// drop to 193.
GeneratedTable imports_table();

void write_table_csv(const GeneratedTable& table, const std::string& csv_path);

}  // namespace mixdro
