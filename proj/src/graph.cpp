#include "pathset/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pathset {

std::string to_string(PropertyDomain domain) {
    switch (domain) {
    case PropertyDomain::NonnegativeReal: return "nonnegative-real";
    case PropertyDomain::Probability: return "probability";
    }
    return "?";
}

std::optional<PropertyDomain> property_domain_from_string(std::string_view text) {
    if (text == "nonnegative-real") return PropertyDomain::NonnegativeReal;
    if (text == "probability") return PropertyDomain::Probability;
    return std::nullopt;
}

EdgePropertyVector::EdgePropertyVector(std::string name, std::string unit,
                                       PropertyDomain domain,
                                       std::map<std::string, double> values)
    : name_(std::move(name)), unit_(std::move(unit)), domain_(domain),
      values_(std::move(values)) {
    if (name_.empty()) {
        throw ValidationError("property name must not be empty");
    }
    for (const auto& [edge, v] : values_) {
        if (!std::isfinite(v)) {
            throw ValidationError("property '" + name_ + "': value for edge '" + edge +
                                  "' is not finite");
        }
        if (v < 0.0) {
            throw ValidationError("property '" + name_ + "': value for edge '" + edge +
                                  "' is negative");
        }
        if (domain_ == PropertyDomain::Probability && v > 1.0) {
            throw ValidationError("property '" + name_ + "': value " + std::to_string(v) +
                                  " for edge '" + edge + "' is outside [0, 1]");
        }
    }
}

bool EdgePropertyVector::has(const std::string& edge_id) const {
    return values_.count(edge_id) != 0;
}

double EdgePropertyVector::value(const std::string& edge_id) const {
    auto it = values_.find(edge_id);
    if (it == values_.end()) {
        throw ValidationError("property '" + name_ + "' has no value for edge '" + edge_id + "'");
    }
    return it->second;
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                             std::vector<EdgePropertyVector> properties)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string> vertex_set;
    for (const auto& v : vertices_) {
        if (!vertex_set.insert(v).second) {
            throw ValidationError("duplicate vertex '" + v + "'");
        }
    }
    edge_order_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!vertex_set.count(e.from)) {
            throw ValidationError("edge '" + e.id + "' references unknown vertex '" + e.from + "'");
        }
        if (!vertex_set.count(e.to)) {
            throw ValidationError("edge '" + e.id + "' references unknown vertex '" + e.to + "'");
        }
        if (e.from == e.to) {
            throw ValidationError("edge '" + e.id + "' is a self-loop on vertex '" + e.from + "'");
        }
        if (!edge_rows_.emplace(e.id, i).second) {
            throw ValidationError("duplicate edge id '" + e.id + "'");
        }
        edge_order_.push_back(e.id);
    }
    for (auto& p : properties) {
        for (const Edge& e : edges_) {
            if (!p.has(e.id)) {
                throw ValidationError("property '" + p.name() + "' has no value for edge '" +
                                      e.id + "'");
            }
        }
        for (const auto& [edge, v] : p.values()) {
            (void)v;
            if (!edge_rows_.count(edge)) {
                throw ValidationError("property '" + p.name() + "' has a value for unknown edge '" +
                                      edge + "'");
            }
        }
        std::string name = p.name();
        if (!properties_.emplace(name, std::move(p)).second) {
            throw ValidationError("duplicate property '" + name + "'");
        }
    }
}

bool DirectedGraph::has_vertex(const std::string& id) const {
    return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool DirectedGraph::has_edge(const std::string& id) const {
    return edge_rows_.count(id) != 0;
}

std::size_t DirectedGraph::edge_row(const std::string& id) const {
    auto it = edge_rows_.find(id);
    if (it == edge_rows_.end()) {
        throw NameError("unknown edge '" + id + "'");
    }
    return it->second;
}

bool DirectedGraph::has_property(const std::string& name) const {
    return properties_.count(name) != 0;
}

const EdgePropertyVector& DirectedGraph::property(const std::string& name) const {
    auto it = properties_.find(name);
    if (it == properties_.end()) {
        throw NameError("unknown property '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> DirectedGraph::property_names() const {
    std::vector<std::string> names;
    names.reserve(properties_.size());
    for (const auto& [name, p] : properties_) {
        (void)p;
        names.push_back(name);
    }
    return names;
}

DirectedPath::DirectedPath(std::vector<std::string> edge_ids, std::vector<std::string> vertices)
    : edge_ids_(std::move(edge_ids)), vertices_(std::move(vertices)),
      source_(vertices_.front()), destination_(vertices_.back()) {}

std::vector<std::string> DirectedPath::edge_set() const {
    std::vector<std::string> ids = edge_ids_;
    std::sort(ids.begin(), ids.end());
    return ids;
}

DirectedPath validate_path(const DirectedGraph& g, const std::vector<std::string>& edge_ids) {
    if (edge_ids.empty()) {
        throw ValidationError("a path needs at least one edge");
    }
    std::vector<std::string> vertices;
    vertices.reserve(edge_ids.size() + 1);
    const Edge* prev = nullptr;
    for (const auto& id : edge_ids) {
        const Edge& e = g.edge(g.edge_row(id));
        if (prev == nullptr) {
            vertices.push_back(e.from);
        } else if (prev->to != e.from) {
            throw ValidationError("broken chain: edge '" + prev->id + "' ends at '" + prev->to +
                                  "' but edge '" + e.id + "' starts at '" + e.from + "'");
        }
        vertices.push_back(e.to);
        prev = &e;
    }
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (!seen.insert(v).second) {
            throw ValidationError("path visits vertex '" + v + "' twice");
        }
    }
    return DirectedPath(edge_ids, std::move(vertices));
}

PathSet validate_path_set(std::vector<DirectedPath> paths) {
    PathSet set;
    if (paths.empty()) {
        return set;
    }
    const std::string& source = paths.front().source();
    const std::string& destination = paths.front().destination();
    for (const auto& p : paths) {
        if (p.source() != source || p.destination() != destination) {
            throw ValidationError("endpoint mismatch: path " + p.source() + " -> " +
                                  p.destination() + " does not connect " + source + " -> " +
                                  destination);
        }
    }
    std::vector<std::vector<std::string>> edge_sets;
    edge_sets.reserve(paths.size());
    for (const auto& p : paths) {
        edge_sets.push_back(p.edge_set());
    }
    for (std::size_t i = 0; i < edge_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < edge_sets.size(); ++j) {
            if (edge_sets[i] == edge_sets[j]) {
                throw ValidationError("duplicate path: paths " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " use the same edge set");
            }
        }
    }
    set.source_ = source;
    set.destination_ = destination;
    set.paths_ = std::move(paths);
    return set;
}

} // namespace pathset
