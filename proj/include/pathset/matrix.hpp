#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pathset {

/// Dense real matrix with labeled rows (graph edge ids) and columns
/// (hyperedge labels). Row-major storage.
class Matrix {
public:
    Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
           double fill = 0.0);
    Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
           std::vector<double> entries);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }

    double at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
    double& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    const std::vector<double>& entries() const { return entries_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<double> entries_;
};

} // namespace pathset
