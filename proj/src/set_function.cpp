#include "pathset/set_function.hpp"

#include <bit>
#include <cmath>

namespace pathset {

SetFunctionTable::SetFunctionTable(std::vector<std::string> ground_set,
                                   std::vector<double> values)
    : ground_set_(std::move(ground_set)), values_(std::move(values)) {
    if (ground_set_.size() > kMaxSubsetLimit) {
        throw ValidationError("ground set larger than " + std::to_string(kMaxSubsetLimit));
    }
    if (values_.size() != (std::size_t{1} << ground_set_.size())) {
        throw ValidationError("set function table needs one value per subset");
    }
}

std::vector<std::string> SetFunctionTable::subset_labels(std::uint32_t mask) const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ground_set_.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) {
            labels.push_back(ground_set_[i]);
        }
    }
    return labels;
}

SetFunctionTable tabulate_with(const std::function<double(const PathSet&)>& f, const PathSet& p,
                               std::size_t subset_limit) {
    if (subset_limit > kMaxSubsetLimit) {
        throw ValidationError("subset limit must not exceed " + std::to_string(kMaxSubsetLimit));
    }
    if (p.size() > subset_limit) {
        throw LimitError("path set has " + std::to_string(p.size()) +
                         " paths, exceeding the subset limit of " + std::to_string(subset_limit));
    }
    const std::size_t n = p.size();
    std::vector<std::string> ground_set;
    ground_set.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ground_set.push_back("P" + std::to_string(i + 1));
    }
    std::vector<double> values(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        std::vector<DirectedPath> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                subset.push_back(p.paths()[i]);
            }
        }
        values[mask] = f(validate_path_set(std::move(subset)));
    }
    return SetFunctionTable(std::move(ground_set), std::move(values));
}

SetFunctionTable tabulate(const AttributeSpec& spec, const DirectedGraph& g, const PathSet& p,
                          std::size_t subset_limit, const EvalOptions& options) {
    return tabulate_with(
        [&](const PathSet& subset) { return evaluate(spec, g, subset, options).value; }, p,
        subset_limit);
}

SetFunctionReport check_axioms(const SetFunctionTable& table, double tolerance) {
    SetFunctionReport report;
    const std::uint32_t count = table.subset_count();

    if (std::abs(table.value(0)) > tolerance) {
        report.r1 = {false, AxiomWitness{0, std::nullopt, table.value(0), 0.0}};
    }

    // R2: every subset pair X of Y, Y ascending, X descending submasks.
    for (std::uint32_t y = 0; y < count && report.r2.holds; ++y) {
        for (std::uint32_t x = y;; x = (x - 1) & y) {
            if (table.value(x) > table.value(y) + tolerance) {
                report.r2 = {false, AxiomWitness{x, y, table.value(x), table.value(y)}};
                break;
            }
            if (x == 0) {
                break;
            }
        }
    }

    // R3 / modularity directions over all unordered pairs.
    for (std::uint32_t x = 0; x < count; ++x) {
        for (std::uint32_t y = x; y < count; ++y) {
            const double lhs = table.value(x) + table.value(y);
            const double rhs = table.value(x & y) + table.value(x | y);
            if (report.submodular.holds && lhs < rhs - tolerance) {
                report.submodular = {false, AxiomWitness{x, y, lhs, rhs}};
            }
            if (report.supermodular.holds && lhs > rhs + tolerance) {
                report.supermodular = {false, AxiomWitness{x, y, lhs, rhs}};
            }
        }
        if (!report.submodular.holds && !report.supermodular.holds) {
            break;
        }
    }
    report.r3 = report.submodular;

    for (std::uint32_t x = 0; x < count && report.r4.holds; ++x) {
        const double v = table.value(x);
        if (std::abs(v - std::round(v)) > tolerance) {
            report.r4 = {false, AxiomWitness{x, std::nullopt, v, std::round(v)}};
        }
    }
    for (std::uint32_t x = 0; x < count && report.r5.holds; ++x) {
        const double size = static_cast<double>(std::popcount(x));
        if (table.value(x) > size + tolerance) {
            report.r5 = {false, AxiomWitness{x, std::nullopt, table.value(x), size}};
        }
    }

    if (report.is_matroid()) {
        report.classification.push_back("matroid");
    }
    if (report.is_polymatroid()) {
        report.classification.push_back("polymatroid");
    }
    if (report.is_modular()) {
        report.classification.push_back("modular");
    } else if (report.submodular.holds && !report.is_polymatroid()) {
        report.classification.push_back("submodular-only");
    } else if (report.supermodular.holds && !report.submodular.holds) {
        report.classification.push_back("supermodular-only");
    }
    return report;
}

SetFunctionTable dualize(const SetFunctionTable& table) {
    const std::uint32_t full = table.full_mask();
    std::vector<double> values(table.subset_count());
    for (std::uint32_t mask = 0; mask < table.subset_count(); ++mask) {
        values[mask] = table.value(full) - table.value(full & ~mask);
    }
    return SetFunctionTable(table.ground_set(), std::move(values));
}

} // namespace pathset
