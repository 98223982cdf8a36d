#include "pathset/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pathset {

Hypergraph::Hypergraph(std::vector<std::string> vertex_order, std::vector<Hyperedge> hyperedges)
    : vertex_order_(std::move(vertex_order)), hyperedges_(std::move(hyperedges)) {
    std::set<std::string> labels;
    for (auto& e : hyperedges_) {
        if (!labels.insert(e.label).second) {
            throw ValidationError("duplicate hyperedge label '" + e.label + "'");
        }
        std::sort(e.members.begin(), e.members.end());
        e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
        for (std::size_t row : e.members) {
            if (row >= vertex_order_.size()) {
                throw ValidationError("hyperedge '" + e.label +
                                      "' references vertex row out of range");
            }
        }
    }
}

bool Hypergraph::is_member(std::size_t vertex_row, std::size_t hyperedge_index) const {
    const auto& m = hyperedges_.at(hyperedge_index).members;
    return std::binary_search(m.begin(), m.end(), vertex_row);
}

Matrix incidence_matrix(const Hypergraph& h) {
    std::vector<std::string> col_labels;
    col_labels.reserve(h.hyperedge_count());
    for (const auto& e : h.hyperedges()) {
        col_labels.push_back(e.label);
    }
    Matrix m(h.vertex_order(), std::move(col_labels), 0.0);
    for (std::size_t j = 0; j < h.hyperedge_count(); ++j) {
        for (std::size_t row : h.hyperedges()[j].members) {
            m.at(row, j) = 1.0;
        }
    }
    return m;
}

Matrix r_incidence_matrix(double r, const EdgePropertyVector& w, const Hypergraph& h) {
    if (!std::isfinite(r)) {
        throw ValidationError("r must be finite");
    }
    std::vector<double> weights;
    weights.reserve(h.vertex_count());
    for (const auto& id : h.vertex_order()) {
        weights.push_back(w.value(id));
    }
    std::vector<std::string> col_labels;
    col_labels.reserve(h.hyperedge_count());
    for (const auto& e : h.hyperedges()) {
        col_labels.push_back(e.label);
    }
    Matrix m(h.vertex_order(), std::move(col_labels), r);
    for (std::size_t j = 0; j < h.hyperedge_count(); ++j) {
        for (std::size_t row : h.hyperedges()[j].members) {
            m.at(row, j) = weights[row];
        }
    }
    return m;
}

VertexWeightedHypergraph::VertexWeightedHypergraph(Hypergraph base, EdgePropertyVector weight)
    : base_(std::move(base)), weight_(std::move(weight)) {
    for (const auto& id : base_.vertex_order()) {
        if (!weight_.has(id)) {
            throw ValidationError("weight '" + weight_.name() + "' does not cover vertex '" +
                                  id + "'");
        }
    }
}

} // namespace pathset
