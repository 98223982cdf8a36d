#include "pathset/matrix.hpp"

#include <cmath>

#include "pathset/errors.hpp"

namespace pathset {

Matrix::Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               double fill)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size(), fill) {}

Matrix::Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<double> entries)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
    if (entries_.size() != row_labels_.size() * col_labels_.size()) {
        throw ValidationError("matrix entry count does not match its dimensions");
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw ValidationError("matrix entries must be finite");
        }
    }
}

} // namespace pathset
