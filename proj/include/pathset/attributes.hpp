#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "pathset/graph.hpp"
#include "pathset/matrix.hpp"
#include "pathset/transforms.hpp"

namespace pathset {

/// Binary fold operation with an identity element. apply must be associative
/// and commutative on the nonnegative value domain and identity two-sided;
/// validate_fold_op rejects operations that fail these laws on random samples.
struct FoldOp {
    std::string name;
    double identity = 0.0;
    std::function<double(double, double)> apply;
};

namespace fold_ops {

FoldOp sum();
FoldOp max();
FoldOp min();
FoldOp product();
/// (x, y) -> 1 - (1 - x)(1 - y); folds to 1 - prod(1 - x_i).
FoldOp complement_product();

/// Named catalog used by document-defined attributes. identity_override
/// replaces the canonical identity and is checked at registration.
std::optional<FoldOp> from_name(std::string_view name,
                                std::optional<double> identity_override = std::nullopt);

} // namespace fold_ops

/// Throws ValidationError when the identity, commutativity, or associativity
/// law fails on sampled operands.
void validate_fold_op(const FoldOp& op);

/// A path-set attribute: which property to read, how to transform the path
/// set, and the two folds applied to the r-incidence matrix. inner runs down
/// each column first, outer combines the column results. r must equal
/// inner.identity.
struct AttributeSpec {
    std::string name;
    std::string property;
    TransformKind transform = TransformKind::Identity;
    FoldOp inner;
    FoldOp outer;
    double r = 0.0;
    std::string unit; // empty = inherit the property's unit
};

/// The five built-in attributes: delay, cost, capacity, unavailability,
/// fault_probability.
const std::vector<AttributeSpec>& builtin_attributes();
bool is_reserved_attribute(std::string_view name);

/// Holds the builtins plus user-registered attributes. Writes are serialized
/// and reads may run concurrently; references returned by get() stay valid
/// across later registrations.
class AttributeRegistry {
public:
    AttributeRegistry();
    AttributeRegistry(const AttributeRegistry& other);
    AttributeRegistry& operator=(const AttributeRegistry& other);

    /// Validates and stores a custom attribute. Throws ValidationError on
    /// reserved or duplicate names, fold-law violations, or r != inner
    /// identity. Returns the stored spec.
    const AttributeSpec& register_attribute(AttributeSpec spec);

    bool has(const std::string& name) const;
    const AttributeSpec& get(const std::string& name) const; // throws NameError
    std::vector<std::string> names() const;

private:
    std::deque<AttributeSpec> snapshot() const;

    mutable std::shared_mutex mutex_;
    std::deque<AttributeSpec> specs_;
};

struct EvalOptions {
    std::size_t cut_union_limit = kDefaultCutUnionLimit;
};

struct EvalResult {
    std::string attribute;
    double value = 0.0;
    std::string unit;
    TransformKind transform = TransformKind::Identity;
    std::vector<std::string> column_labels;
    std::vector<double> column_values;
};

/// Inner fold of every column, seeded with op.identity, rows in order.
std::vector<double> fold_columns(const FoldOp& op, const Matrix& m);
/// Fold of a value list, seeded with op.identity.
double fold_values(const FoldOp& op, const std::vector<double>& values);

/// Ψ(P): build the transform hypergraph, spread the property over it with r,
/// fold columns with inner, fold the column results with outer. A zero-column
/// matrix yields outer.identity.
EvalResult evaluate(const AttributeSpec& spec, const DirectedGraph& g, const PathSet& p,
                    const EvalOptions& options = {});

/// 1 - unavailability(p). Requires the probability property.
double availability(const DirectedGraph& g, const PathSet& p, const EvalOptions& options = {});
/// 1 - fault_probability(p).
double serviceability(const DirectedGraph& g, const PathSet& p, const EvalOptions& options = {});

} // namespace pathset
