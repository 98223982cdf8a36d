#include "pathset/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pathset::io {

namespace {

void require_object(const json& j, const std::string& where,
                    const std::set<std::string>& allowed,
                    const std::vector<std::string>& required) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
    for (const auto& key : required) {
        if (!j.contains(key)) {
            throw ParseError(where + ": missing key '" + key + "'");
        }
    }
}

std::string get_string(const json& j, const std::string& where, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_string()) {
        throw ParseError(where + ": '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

double get_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return v.get<double>();
}

const json& get_array(const json& j, const std::string& where, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_array()) {
        throw ParseError(where + ": '" + key + "' must be an array");
    }
    return v;
}

struct PropertyMeta {
    std::string unit;
    PropertyDomain domain = PropertyDomain::NonnegativeReal;
};

FoldOp parse_fold_op(const json& j, const std::string& where) {
    require_object(j, where, {"op", "identity"}, {"op"});
    const std::string name = get_string(j, where, "op");
    std::optional<double> identity;
    if (j.contains("identity")) {
        identity = get_number(j.at("identity"), where + ".identity");
    }
    auto op = fold_ops::from_name(name, identity);
    if (!op) {
        throw ParseError(where + ": unknown operation '" + name + "'");
    }
    return *op;
}

} // namespace

NetworkDocument load_network(const json& doc) {
    require_object(doc, "document",
                   {"vertices", "edges", "properties", "path_sets", "attributes"},
                   {"vertices", "edges"});

    std::vector<std::string> vertices;
    for (const auto& v : get_array(doc, "document", "vertices")) {
        if (!v.is_string()) {
            throw ParseError("vertices: entries must be strings");
        }
        vertices.push_back(v.get<std::string>());
    }

    std::vector<Edge> edges;
    std::map<std::string, std::map<std::string, double>> property_values;
    for (const auto& e : get_array(doc, "document", "edges")) {
        require_object(e, "edge", {"id", "from", "to", "weights"}, {"id", "from", "to"});
        Edge edge{get_string(e, "edge", "id"), get_string(e, "edge", "from"),
                  get_string(e, "edge", "to")};
        if (e.contains("weights")) {
            const auto& weights = e.at("weights");
            if (!weights.is_object()) {
                throw ParseError("edge '" + edge.id + "': 'weights' must be an object");
            }
            for (const auto& [name, value] : weights.items()) {
                property_values[name][edge.id] =
                    get_number(value, "edge '" + edge.id + "' weight '" + name + "'");
            }
        }
        edges.push_back(std::move(edge));
    }

    std::map<std::string, PropertyMeta> metas;
    if (doc.contains("properties")) {
        for (const auto& p : get_array(doc, "document", "properties")) {
            require_object(p, "property", {"name", "unit", "domain"}, {"name"});
            const std::string name = get_string(p, "property", "name");
            PropertyMeta meta;
            if (p.contains("unit")) {
                meta.unit = get_string(p, "property '" + name + "'", "unit");
            }
            if (p.contains("domain")) {
                const std::string text = get_string(p, "property '" + name + "'", "domain");
                auto domain = property_domain_from_string(text);
                if (!domain) {
                    throw ParseError("property '" + name + "': unknown domain '" + text + "'");
                }
                meta.domain = *domain;
            }
            if (!metas.emplace(name, meta).second) {
                throw ParseError("duplicate property declaration '" + name + "'");
            }
            property_values.try_emplace(name);
        }
    }

    std::vector<EdgePropertyVector> properties;
    try {
        for (const auto& [name, values] : property_values) {
            PropertyMeta meta;
            if (auto it = metas.find(name); it != metas.end()) {
                meta = it->second;
            }
            properties.emplace_back(name, meta.unit, meta.domain, values);
        }
    } catch (const Error& e) {
        throw ParseError(e.what());
    }

    NetworkDocument result{[&] {
                               try {
                                   return DirectedGraph(std::move(vertices), std::move(edges),
                                                        std::move(properties));
                               } catch (const Error& e) {
                                   throw ParseError(e.what());
                               }
                           }(),
                           {},
                           AttributeRegistry()};

    if (doc.contains("path_sets")) {
        std::set<std::string> names;
        for (const auto& ps : get_array(doc, "document", "path_sets")) {
            require_object(ps, "path set", {"name", "paths"}, {"name", "paths"});
            const std::string name = get_string(ps, "path set", "name");
            if (!names.insert(name).second) {
                throw ParseError("duplicate path set '" + name + "'");
            }
            std::vector<DirectedPath> paths;
            for (const auto& path : get_array(ps, "path set '" + name + "'", "paths")) {
                if (!path.is_array()) {
                    throw ParseError("path set '" + name + "': each path must be an array");
                }
                std::vector<std::string> ids;
                for (const auto& id : path) {
                    if (!id.is_string()) {
                        throw ParseError("path set '" + name + "': edge ids must be strings");
                    }
                    ids.push_back(id.get<std::string>());
                }
                try {
                    paths.push_back(validate_path(result.graph, ids));
                } catch (const Error& e) {
                    throw ParseError("path set '" + name + "': " + e.what());
                }
            }
            try {
                result.path_sets.push_back({name, validate_path_set(std::move(paths))});
            } catch (const Error& e) {
                throw ParseError("path set '" + name + "': " + e.what());
            }
        }
    }

    if (doc.contains("attributes")) {
        for (const auto& a : get_array(doc, "document", "attributes")) {
            require_object(a, "attribute",
                           {"name", "property", "transform", "inner", "outer", "unit"},
                           {"name", "property", "transform", "inner", "outer"});
            AttributeSpec spec;
            spec.name = get_string(a, "attribute", "name");
            const std::string where = "attribute '" + spec.name + "'";
            spec.property = get_string(a, where, "property");
            const std::string transform = get_string(a, where, "transform");
            auto kind = transform_kind_from_string(transform);
            if (!kind) {
                throw ParseError(where + ": unknown transform '" + transform + "'");
            }
            spec.transform = *kind;
            spec.inner = parse_fold_op(a.at("inner"), where + ".inner");
            spec.outer = parse_fold_op(a.at("outer"), where + ".outer");
            spec.r = spec.inner.identity;
            if (a.contains("unit")) {
                spec.unit = get_string(a, where, "unit");
            }
            try {
                result.attributes.register_attribute(std::move(spec));
            } catch (const Error& e) {
                throw ParseError(e.what());
            }
        }
    }
    return result;
}

NetworkDocument load_network_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return load_network(doc);
}

NetworkDocument load_network_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_network_text(buffer.str());
}

const PathSet& find_path_set(const NetworkDocument& doc, const std::string& name) {
    for (const auto& ps : doc.path_sets) {
        if (ps.name == name) {
            return ps.paths;
        }
    }
    throw NameError("unknown path set '" + name + "'");
}

std::string format_value(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    if ((s == "0" || s == "-0") && v != 0.0) {
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        return buf;
    }
    if (s == "-0") {
        return "0";
    }
    return s;
}

json matrix_to_json(const Matrix& m) {
    json j;
    j["rows"] = m.row_labels();
    j["columns"] = m.col_labels();
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            row.push_back(m.at(i, k));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const json& j) {
    require_object(j, "matrix", {"rows", "columns", "entries"}, {"rows", "columns", "entries"});
    std::vector<std::string> rows;
    for (const auto& r : get_array(j, "matrix", "rows")) {
        rows.push_back(r.get<std::string>());
    }
    std::vector<std::string> cols;
    for (const auto& c : get_array(j, "matrix", "columns")) {
        cols.push_back(c.get<std::string>());
    }
    const auto& entries = get_array(j, "matrix", "entries");
    if (entries.size() != rows.size()) {
        throw ParseError("matrix: entry row count does not match row labels");
    }
    std::vector<double> values;
    values.reserve(rows.size() * cols.size());
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols.size()) {
            throw ParseError("matrix: entry rows must match the column label count");
        }
        for (const auto& v : row) {
            values.push_back(get_number(v, "matrix entry"));
        }
    }
    try {
        return Matrix(std::move(rows), std::move(cols), std::move(values));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string matrix_to_csv(const Matrix& m) {
    std::string out = "edge";
    for (const auto& c : m.col_labels()) {
        out += ',';
        out += csv_escape(c);
    }
    out += '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += csv_escape(m.row_labels()[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += ',';
            out += format_value(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_table(const Matrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"edge"};
    header.insert(header.end(), m.col_labels().begin(), m.col_labels().end());
    cells.push_back(std::move(header));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row{m.row_labels()[i]};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(format_value(m.at(i, j)));
        }
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            widths[j] = std::max(widths[j], row[j].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                out += "  ";
            }
            if (j == 0) {
                out += row[j];
                out.append(widths[j] - row[j].size(), ' ');
            } else {
                out.append(widths[j] - row[j].size(), ' ');
                out += row[j];
            }
        }
        out += '\n';
    }
    return out;
}

json eval_result_to_json(const EvalResult& r) {
    json j;
    j["name"] = r.attribute;
    j["value"] = r.value;
    j["unit"] = r.unit;
    j["transform"] = to_string(r.transform);
    j["column_labels"] = r.column_labels;
    j["columns"] = r.column_values;
    return j;
}

json cuts_to_json(const std::string& path_set_name, const Hypergraph& cuts) {
    json j;
    j["path_set"] = path_set_name;
    j["count"] = cuts.hyperedge_count();
    json list = json::array();
    for (const auto& e : cuts.hyperedges()) {
        json cut;
        cut["label"] = e.label;
        json members = json::array();
        for (std::size_t row : e.members) {
            members.push_back(cuts.vertex_order()[row]);
        }
        cut["edges"] = std::move(members);
        list.push_back(std::move(cut));
    }
    j["cuts"] = std::move(list);
    return j;
}

namespace {

json verdict_to_json(const AxiomVerdict& verdict, const SetFunctionTable& table) {
    json j;
    j["holds"] = verdict.holds;
    if (verdict.witness) {
        json w;
        w["X"] = table.subset_labels(verdict.witness->x);
        if (verdict.witness->y) {
            w["Y"] = table.subset_labels(*verdict.witness->y);
        }
        w["lhs"] = verdict.witness->lhs;
        w["rhs"] = verdict.witness->rhs;
        j["witness"] = std::move(w);
    }
    return j;
}

} // namespace

json report_to_json(const std::string& attribute, const std::string& path_set_name,
                    const SetFunctionReport& report, const SetFunctionTable& table,
                    bool include_values) {
    json j;
    j["attribute"] = attribute;
    j["path_set"] = path_set_name;
    j["ground_set"] = table.ground_set();
    j["tolerance"] = kAxiomTolerance;
    json axioms;
    axioms["R1"] = verdict_to_json(report.r1, table);
    axioms["R2"] = verdict_to_json(report.r2, table);
    axioms["R3"] = verdict_to_json(report.r3, table);
    axioms["R4"] = verdict_to_json(report.r4, table);
    axioms["R5"] = verdict_to_json(report.r5, table);
    axioms["submodular"] = verdict_to_json(report.submodular, table);
    axioms["supermodular"] = verdict_to_json(report.supermodular, table);
    j["axioms"] = std::move(axioms);
    j["classification"] =
        report.classification.empty() ? json::array({"none"}) : json(report.classification);
    if (include_values) {
        json values = json::array();
        for (std::uint32_t mask = 0; mask < table.subset_count(); ++mask) {
            json entry;
            entry["subset"] = table.subset_labels(mask);
            entry["value"] = table.value(mask);
            values.push_back(std::move(entry));
        }
        j["values"] = std::move(values);
    }
    return j;
}

} // namespace pathset::io
