#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathset/attributes.hpp"
#include "pathset/graph.hpp"

namespace pathset {

inline constexpr std::size_t kDefaultSubsetLimit = 12;
inline constexpr std::size_t kMaxSubsetLimit = 16;
inline constexpr double kAxiomTolerance = 1e-9;

/// Values of a set function over every subset of an ordered ground set of
/// path labels. Subsets are addressed as bitmasks: bit i selects element i.
class SetFunctionTable {
public:
    SetFunctionTable(std::vector<std::string> ground_set, std::vector<double> values);

    std::size_t ground_size() const { return ground_set_.size(); }
    const std::vector<std::string>& ground_set() const { return ground_set_; }
    std::uint32_t subset_count() const { return static_cast<std::uint32_t>(values_.size()); }
    std::uint32_t full_mask() const { return subset_count() - 1; }
    double value(std::uint32_t mask) const { return values_.at(mask); }
    const std::vector<double>& values() const { return values_; }

    std::vector<std::string> subset_labels(std::uint32_t mask) const;

private:
    std::vector<std::string> ground_set_;
    std::vector<double> values_;
};

/// Evaluates the attribute on every sub-path-set. Ground set labels are
/// P1..Pn in path order. Throws LimitError past subset_limit.
SetFunctionTable tabulate(const AttributeSpec& spec, const DirectedGraph& g, const PathSet& p,
                          std::size_t subset_limit = kDefaultSubsetLimit,
                          const EvalOptions& options = {});

/// Same subsetting, arbitrary set function (used for availability and
/// serviceability tables).
SetFunctionTable tabulate_with(const std::function<double(const PathSet&)>& f, const PathSet& p,
                               std::size_t subset_limit = kDefaultSubsetLimit);

struct AxiomWitness {
    std::uint32_t x = 0;
    std::optional<std::uint32_t> y;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomVerdict {
    bool holds = true;
    std::optional<AxiomWitness> witness;
};

/// Axiom verdicts for a tabulated set function. r3 and submodular carry the
/// same content; both names are kept. classification lists every label that
/// applies out of {matroid, polymatroid, modular, submodular-only,
/// supermodular-only}; an empty list means none.
struct SetFunctionReport {
    AxiomVerdict r1;          // rho(empty) = 0
    AxiomVerdict r2;          // X subset of Y  =>  rho(X) <= rho(Y)
    AxiomVerdict r3;          // submodularity
    AxiomVerdict r4;          // integer-valued
    AxiomVerdict r5;          // rho(X) <= |X|
    AxiomVerdict submodular;
    AxiomVerdict supermodular;
    std::vector<std::string> classification;

    bool is_polymatroid() const { return r1.holds && r2.holds && r3.holds; }
    bool is_matroid() const { return is_polymatroid() && r4.holds && r5.holds; }
    bool is_modular() const { return submodular.holds && supermodular.holds; }
};

/// Exhaustive check: R1 once, R2 over all subset pairs, R3 and both
/// modularity directions over all unordered pairs, R4/R5 per subset.
/// Comparisons use the absolute tolerance.
SetFunctionReport check_axioms(const SetFunctionTable& table, double tolerance = kAxiomTolerance);

/// rho'(X) = rho(E) - rho(E \ X).
SetFunctionTable dualize(const SetFunctionTable& table);

} // namespace pathset
