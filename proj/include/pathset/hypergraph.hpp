#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathset/graph.hpp"
#include "pathset/matrix.hpp"

namespace pathset {

/// Hyperedge over the owning graph's edge set. Members are row indices into
/// the graph's canonical edge order, kept sorted.
struct Hyperedge {
    std::string label;
    std::vector<std::size_t> members;
};

/// Hypergraph whose vertices are the edges of a directed graph, in the
/// graph's canonical row order.
class Hypergraph {
public:
    Hypergraph(std::vector<std::string> vertex_order, std::vector<Hyperedge> hyperedges);

    const std::vector<std::string>& vertex_order() const { return vertex_order_; }
    const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
    std::size_t vertex_count() const { return vertex_order_.size(); }
    std::size_t hyperedge_count() const { return hyperedges_.size(); }

    bool is_member(std::size_t vertex_row, std::size_t hyperedge_index) const;

private:
    std::vector<std::string> vertex_order_;
    std::vector<Hyperedge> hyperedges_;
};

/// 0/1 membership matrix: rows follow vertex_order, columns follow hyperedge order.
Matrix incidence_matrix(const Hypergraph& h);

/// Membership positions carry the vertex weight, everything else carries r.
/// r must be finite and w must cover every vertex.
Matrix r_incidence_matrix(double r, const EdgePropertyVector& w, const Hypergraph& h);

/// Hypergraph paired with a weight vector covering all of its vertices.
class VertexWeightedHypergraph {
public:
    VertexWeightedHypergraph(Hypergraph base, EdgePropertyVector weight);

    const Hypergraph& base() const { return base_; }
    const EdgePropertyVector& weight() const { return weight_; }
    Matrix r_incidence(double r) const { return r_incidence_matrix(r, weight_, base_); }

private:
    Hypergraph base_;
    EdgePropertyVector weight_;
};

} // namespace pathset
