#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "equibir/character.hpp"
#include "equibir/group.hpp"

namespace equibir {

/// A character table loaded from a fixture file. Values are reindexed into
/// the computed group's class order via the per-class representative words,
/// so downstream code never sees the file's own ordering.
struct LoadedTable {
    std::string name;
    std::string iso_label;
    std::shared_ptr<const FinGroup> group;
    CharTable table;
    std::string digest;                    // fnv1a-64 of the file bytes
    std::vector<std::size_t> file_class_of; // group class -> fixture file class
};

LoadedTable load_char_table(const std::filesystem::path& file);

struct ScenarioFile {
    std::string name;
    std::string table;                 // fixture name, resolved against the directory
    std::string w_label;
    std::vector<std::string> chosen;
    std::string expect;                // "PASS" | "FAIL" | "" (none embedded)
    std::map<std::string, long> expectations; // expect_dim_x, expect_r, ...
    std::string digest;
};

ScenarioFile load_scenario(const std::filesystem::path& file);

/// 64-bit FNV-1a of a file's bytes, hex encoded; provenance only.
std::string file_digest(const std::filesystem::path& file);

/// Evaluate a word like "a*b^2" (or "e") over named generators.
GroupElement evaluate_word(const std::map<std::string, GroupElement>& gens,
                           const std::string& word);

/// Fixture directory resolution: explicit argument, else EQUIBIR_FIXTURES,
/// else ./fixtures.
std::filesystem::path fixture_dir(const std::string& override_dir = "");

} // namespace equibir
