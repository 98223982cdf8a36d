#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathset/attributes.hpp"
#include "pathset/graph.hpp"
#include "pathset/hypergraph.hpp"
#include "pathset/set_function.hpp"

namespace pathset::io {

using json = nlohmann::ordered_json;

struct NamedPathSet {
    std::string name;
    PathSet paths;
};

/// A fully parsed network document: the graph, its named path sets, and an
/// attribute registry holding the builtins plus any document-defined
/// attributes.
struct NetworkDocument {
    DirectedGraph graph;
    std::vector<NamedPathSet> path_sets;
    AttributeRegistry attributes;
};

/// Parses a document. Unknown keys, duplicate names, missing weights, and
/// invalid domain values all raise ParseError with a one-line message.
NetworkDocument load_network(const json& doc);
NetworkDocument load_network_text(const std::string& text);
NetworkDocument load_network_file(const std::filesystem::path& path);

/// Throws NameError for unknown path set names.
const PathSet& find_path_set(const NetworkDocument& doc, const std::string& name);

/// Fixed-point with 10 decimal places, trailing zeros trimmed. Values whose
/// magnitude would collapse to "0" fall back to %.10g.
std::string format_value(double v);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
std::string matrix_to_csv(const Matrix& m);
std::string matrix_to_table(const Matrix& m);

json eval_result_to_json(const EvalResult& r);
json cuts_to_json(const std::string& path_set_name, const Hypergraph& cuts);
json report_to_json(const std::string& attribute, const std::string& path_set_name,
                    const SetFunctionReport& report, const SetFunctionTable& table,
                    bool include_values);

} // namespace pathset::io
