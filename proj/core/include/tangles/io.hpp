#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangles/data.hpp"
#include "tangles/models.hpp"
#include "tangles/postprocess.hpp"
#include "tangles/search.hpp"

namespace tangles {

inline constexpr int kSchemaVersion = 1;

// Readers skip blank lines and lines starting with '#'. Errors carry kParse
// with the offending line number.

// Headerless CSV of 0/1, one row per object.
BinaryMatrix read_binary_matrix(std::istream& in);
// `u v [w]` per line, 0-indexed, default weight 1. The node count is the
// largest index + 1 unless a `# n N` line sets it.
Graph read_edge_list(std::istream& in);
// Headerless CSV of reals, one row per point.
PointCloud read_points(std::istream& in);
// One integer label per line.
std::vector<int> read_labels(std::istream& in);

BinaryMatrix read_binary_matrix_file(const std::string& path);
Graph read_edge_list_file(const std::string& path);
PointCloud read_points_file(const std::string& path);
std::vector<int> read_labels_file(const std::string& path);

// Writers emit `# <comment>` first when comment is non-empty. Reals use the
// shortest round-trip representation.
void write_binary_matrix(std::ostream& out, const BinaryMatrix& matrix,
                         const std::string& comment = {});
void write_edge_list(std::ostream& out, const Graph& graph, const std::string& comment = {});
void write_points(std::ostream& out, const PointCloud& points, const std::string& comment = {});
void write_labels(std::ostream& out, const std::vector<int>& labels,
                  const std::string& comment = {});
// Header row of node ids, then one row per object.
void write_soft(std::ostream& out, const SoftMatrix& soft, const std::string& comment = {});

std::string format_double(double value);

// {schema_version, agreement, num_objects, cut_ids, cut_costs,
//  nodes: [{id, parent_id, level, cut_id, direction, maximal}]}
nlohmann::json tree_to_json(const TangleSearchTree& tree);
// {schema_version, nodes: [{id, kind, parent_id, children, search_node, level,
//  distinguishing_cuts: [{cut_id, right}], height, probability}]}
nlohmann::json condensed_to_json(const CondensedTree& tree);
// {schema_version, splits: [{node, left, right, height}], leaves,
//  heights, probabilities: {node id: [...]}}
nlohmann::json dendrogram_to_json(const CondensedTree& tree);

// Writes `text` to path, replacing it. Throws kIo.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace tangles
