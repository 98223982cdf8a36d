#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathset/errors.hpp"

namespace pathset {

enum class PropertyDomain { NonnegativeReal, Probability };

std::string to_string(PropertyDomain domain);
std::optional<PropertyDomain> property_domain_from_string(std::string_view text);

/// One named per-edge value vector, e.g. "delay" in microseconds.
/// Values are validated against the declared domain on construction.
class EdgePropertyVector {
public:
    EdgePropertyVector(std::string name, std::string unit, PropertyDomain domain,
                       std::map<std::string, double> values);

    const std::string& name() const { return name_; }
    const std::string& unit() const { return unit_; }
    PropertyDomain domain() const { return domain_; }
    const std::map<std::string, double>& values() const { return values_; }

    bool has(const std::string& edge_id) const;
    /// Throws ValidationError when the edge has no value.
    double value(const std::string& edge_id) const;

private:
    std::string name_;
    std::string unit_;
    PropertyDomain domain_;
    std::map<std::string, double> values_;
};

struct Edge {
    std::string id;
    std::string from;
    std::string to;
};

/// Immutable directed multigraph. Edge order is the construction order and
/// fixes the row order of every matrix derived from the graph.
class DirectedGraph {
public:
    DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                  std::vector<EdgePropertyVector> properties = {});

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(std::size_t row) const { return edges_.at(row); }

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    /// Row index of an edge in the canonical order. Throws NameError.
    std::size_t edge_row(const std::string& id) const;
    /// Edge ids in canonical row order.
    const std::vector<std::string>& edge_order() const { return edge_order_; }

    bool has_property(const std::string& name) const;
    /// Throws NameError for unknown property names.
    const EdgePropertyVector& property(const std::string& name) const;
    std::vector<std::string> property_names() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::string> edge_order_;
    std::map<std::string, std::size_t> edge_rows_;
    std::map<std::string, EdgePropertyVector> properties_;
};

/// Simple directed path, produced by validate_path.
class DirectedPath {
public:
    const std::vector<std::string>& edge_ids() const { return edge_ids_; }
    const std::string& source() const { return source_; }
    const std::string& destination() const { return destination_; }
    /// Visited vertices, length edge_ids().size() + 1.
    const std::vector<std::string>& vertex_sequence() const { return vertices_; }
    /// Edge ids sorted, for set-wise comparisons.
    std::vector<std::string> edge_set() const;

    friend DirectedPath validate_path(const DirectedGraph& g,
                                      const std::vector<std::string>& edge_ids);

private:
    DirectedPath(std::vector<std::string> edge_ids, std::vector<std::string> vertices);

    std::vector<std::string> edge_ids_;
    std::vector<std::string> vertices_;
    std::string source_;
    std::string destination_;
};

/// Checks that the edges chain head-to-tail and visit no vertex twice.
DirectedPath validate_path(const DirectedGraph& g, const std::vector<std::string>& edge_ids);

/// Set of simple paths sharing source and destination. May be empty, in which
/// case the endpoints are absent.
class PathSet {
public:
    PathSet() = default;

    const std::vector<DirectedPath>& paths() const { return paths_; }
    std::size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }
    const std::optional<std::string>& source() const { return source_; }
    const std::optional<std::string>& destination() const { return destination_; }

    friend PathSet validate_path_set(std::vector<DirectedPath> paths);

private:
    std::vector<DirectedPath> paths_;
    std::optional<std::string> source_;
    std::optional<std::string> destination_;
};

/// Checks common endpoints and pairwise distinct edge sets.
PathSet validate_path_set(std::vector<DirectedPath> paths);

} // namespace pathset
