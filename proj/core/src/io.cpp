#include "tangles/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tangles/error.hpp"

namespace tangles {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

template <typename T>
T parse_number(const std::string& token, std::size_t line) {
  const std::string t = trim(token);
  T value{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    parse_error(line, "cannot read '" + token + "' as a number");
  }
  return value;
}

// Calls fn(line_number, text) for every non-blank line that is not a comment.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(number, t);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

void write_comment(std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  return in;
}

const char* kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kRoot: return "root";
    case NodeKind::kSplitting: return "splitting";
    case NodeKind::kLeaf: return "leaf";
  }
  return "?";
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

BinaryMatrix read_binary_matrix(std::istream& in) {
  std::vector<std::uint8_t> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  for_each_data_line(in, [&](std::size_t line, const std::string& text) {
    const auto fields = split(text, ',');
    if (rows == 0) cols = fields.size();
    if (fields.size() != cols) {
      parse_error(line, "expected " + std::to_string(cols) + " columns, got " +
                            std::to_string(fields.size()));
    }
    for (const std::string& field : fields) {
      const std::string t = trim(field);
      if (t != "0" && t != "1") parse_error(line, "entries must be 0 or 1, got '" + field + "'");
      values.push_back(t == "1" ? 1 : 0);
    }
    ++rows;
  });
  if (rows == 0) throw Error(ErrorCode::kParse, "binary matrix is empty");
  return BinaryMatrix(rows, cols, std::move(values));
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      std::stringstream directive(t.substr(1));
      std::string key;
      std::string value;
      if (directive >> key >> value && key == "n") declared = parse_number<std::size_t>(value, number);
      continue;
    }
    std::stringstream fields(t);
    std::string u;
    std::string v;
    std::string w;
    std::string extra;
    if (!(fields >> u >> v)) parse_error(number, "expected 'u v [w]'");
    fields >> w;
    if (fields >> extra) parse_error(number, "expected 'u v [w]'");
    Edge e{parse_number<std::size_t>(u, number), parse_number<std::size_t>(v, number),
           w.empty() ? 1.0 : parse_number<double>(w, number)};
    max_index = std::max({max_index, e.u, e.v});
    any = true;
    edges.push_back(e);
  }
  const std::size_t n = declared ? *declared : (any ? max_index + 1 : 0);
  if (any && max_index >= n) {
    throw Error(ErrorCode::kParse, "edge endpoint " + std::to_string(max_index) +
                                       " exceeds declared node count " + std::to_string(n));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

PointCloud read_points(std::istream& in) {
  std::vector<double> coords;
  std::size_t rows = 0;
  std::size_t dims = 0;
  for_each_data_line(in, [&](std::size_t line, const std::string& text) {
    const auto fields = split(text, ',');
    if (rows == 0) dims = fields.size();
    if (fields.size() != dims) {
      parse_error(line, "expected " + std::to_string(dims) + " coordinates, got " +
                            std::to_string(fields.size()));
    }
    for (const std::string& field : fields) {
      const double value = parse_number<double>(field, line);
      if (!std::isfinite(value)) parse_error(line, "coordinates must be finite");
      coords.push_back(value);
    }
    ++rows;
  });
  if (rows == 0) throw Error(ErrorCode::kParse, "point file is empty");
  return PointCloud(rows, dims, std::move(coords));
}

std::vector<int> read_labels(std::istream& in) {
  std::vector<int> labels;
  for_each_data_line(in, [&](std::size_t line, const std::string& text) {
    labels.push_back(parse_number<int>(text, line));
  });
  return labels;
}

BinaryMatrix read_binary_matrix_file(const std::string& path) {
  auto in = open_input(path);
  return read_binary_matrix(in);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

PointCloud read_points_file(const std::string& path) {
  auto in = open_input(path);
  return read_points(in);
}

std::vector<int> read_labels_file(const std::string& path) {
  auto in = open_input(path);
  return read_labels(in);
}

void write_binary_matrix(std::ostream& out, const BinaryMatrix& matrix, const std::string& comment) {
  write_comment(out, comment);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c != 0) out << ',';
      out << static_cast<int>(matrix.at(r, c));
    }
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const Graph& graph, const std::string& comment) {
  write_comment(out, comment);
  out << "# n " << graph.num_nodes() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) out << ' ' << format_double(e.weight);
    out << '\n';
  }
}

void write_points(std::ostream& out, const PointCloud& points, const std::string& comment) {
  write_comment(out, comment);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.dims(); ++j) {
      if (j != 0) out << ',';
      out << format_double(points.at(i, j));
    }
    out << '\n';
  }
}

void write_labels(std::ostream& out, const std::vector<int>& labels, const std::string& comment) {
  write_comment(out, comment);
  for (int label : labels) out << label << '\n';
}

void write_soft(std::ostream& out, const SoftMatrix& soft, const std::string& comment) {
  write_comment(out, comment);
  for (std::size_t c = 0; c < soft.cols; ++c) {
    if (c != 0) out << ',';
    out << soft.node_ids[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < soft.rows; ++r) {
    for (std::size_t c = 0; c < soft.cols; ++c) {
      if (c != 0) out << ',';
      out << format_double(soft.at(r, c));
    }
    out << '\n';
  }
}

nlohmann::json tree_to_json(const TangleSearchTree& tree) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["agreement"] = tree.agreement();
  j["num_objects"] = tree.num_objects();
  std::vector<int> ids;
  std::vector<double> costs;
  for (const Bipartition& cut : tree.pool()) {
    ids.push_back(cut.id);
    costs.push_back(cut.cost);
  }
  j["cut_ids"] = ids;
  j["cut_costs"] = costs;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const TangleNode& node = tree.node(i);
    nlohmann::json entry;
    entry["id"] = i;
    entry["parent_id"] = node.parent ? nlohmann::json(*node.parent) : nlohmann::json();
    entry["level"] = node.level;
    if (node.oriented) {
      entry["cut_id"] = tree.pool()[node.oriented->cut].id;
      entry["direction"] = node.oriented->direction == Direction::kA ? "A" : "complement";
    } else {
      entry["cut_id"] = nullptr;
      entry["direction"] = nullptr;
    }
    entry["maximal"] = node.maximal;
    j["nodes"].push_back(std::move(entry));
  }
  return j;
}

nlohmann::json condensed_to_json(const CondensedTree& tree) {
  const TangleSearchTree& search = tree.search_tree();
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["nodes"] = nlohmann::json::array();
  for (const CondensedNode& node : tree.nodes()) {
    nlohmann::json entry;
    entry["id"] = node.id;
    entry["kind"] = kind_name(node.kind);
    entry["parent_id"] = node.parent ? nlohmann::json(*node.parent) : nlohmann::json();
    entry["children"] = node.children;
    entry["search_node"] = node.search_node;
    entry["level"] = search.node(node.search_node).level;
    entry["height"] = tree.height(node.id);
    nlohmann::json cuts = nlohmann::json::array();
    for (const DistinguishingCut& cut : node.distinguishing) {
      cuts.push_back({{"cut_id", search.pool()[cut.cut].id},
                      {"right", cut.right == Direction::kA ? "A" : "complement"}});
    }
    entry["distinguishing_cuts"] = std::move(cuts);
    entry["probability"] = node.probability;
    j["nodes"].push_back(std::move(entry));
  }
  return j;
}

nlohmann::json dendrogram_to_json(const CondensedTree& tree) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["splits"] = nlohmann::json::array();
  j["heights"] = nlohmann::json::array();
  j["probabilities"] = nlohmann::json::object();
  for (const CondensedNode& node : tree.nodes()) {
    j["heights"].push_back(tree.height(node.id));
    j["probabilities"][std::to_string(node.id)] = node.probability;
    if (node.children.size() == 2) {
      j["splits"].push_back({{"node", node.id},
                             {"right", node.children[0]},
                             {"left", node.children[1]},
                             {"height", tree.height(node.id)}});
    }
  }
  j["leaves"] = tree.leaves();
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tangles
