#include "pathset/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>

namespace pathset {

namespace fold_ops {

FoldOp sum() {
    return {"sum", 0.0, [](double a, double b) { return a + b; }};
}

FoldOp max() {
    return {"max", 0.0, [](double a, double b) { return std::max(a, b); }};
}

FoldOp min() {
    return {"min", std::numeric_limits<double>::infinity(),
            [](double a, double b) { return std::min(a, b); }};
}

FoldOp product() {
    return {"product", 1.0, [](double a, double b) { return a * b; }};
}

FoldOp complement_product() {
    return {"complement-product", 0.0,
            [](double a, double b) { return 1.0 - (1.0 - a) * (1.0 - b); }};
}

std::optional<FoldOp> from_name(std::string_view name, std::optional<double> identity_override) {
    FoldOp op;
    if (name == "sum") {
        op = sum();
    } else if (name == "max") {
        op = max();
    } else if (name == "min") {
        op = min();
    } else if (name == "product") {
        op = product();
    } else if (name == "complement-product") {
        op = complement_product();
    } else {
        return std::nullopt;
    }
    if (identity_override) {
        op.identity = *identity_override;
    }
    return op;
}

} // namespace fold_ops

namespace {

bool near(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

void validate_fold_op(const FoldOp& op) {
    if (!op.apply) {
        throw ValidationError("operation '" + op.name + "' has no apply function");
    }
    if (std::isnan(op.identity)) {
        throw ValidationError("operation '" + op.name + "' has NaN identity");
    }
    // Nonnegative samples only: max with identity 0 is an identity on the
    // nonnegative domain, which is where every property lives.
    std::mt19937 rng(0x9e3779b9u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> wide(0.0, 1000.0);
    for (int i = 0; i < 64; ++i) {
        const bool small = i % 2 == 0;
        auto draw = [&]() { return small ? unit(rng) : wide(rng); };
        const double x = draw();
        const double y = draw();
        const double z = draw();
        if (!near(op.apply(x, op.identity), x) || !near(op.apply(op.identity, x), x)) {
            throw ValidationError("operation '" + op.name + "': " + std::to_string(op.identity) +
                                  " is not a two-sided identity");
        }
        if (!near(op.apply(x, y), op.apply(y, x))) {
            throw ValidationError("operation '" + op.name + "' is not commutative");
        }
        if (!near(op.apply(op.apply(x, y), z), op.apply(x, op.apply(y, z)))) {
            throw ValidationError("operation '" + op.name + "' is not associative");
        }
    }
}

const std::vector<AttributeSpec>& builtin_attributes() {
    static const std::vector<AttributeSpec> builtins = [] {
        std::vector<AttributeSpec> specs;
        specs.push_back({"delay", "delay", TransformKind::Identity, fold_ops::sum(),
                         fold_ops::max(), 0.0, ""});
        specs.push_back({"cost", "cost", TransformKind::Union, fold_ops::sum(),
                         fold_ops::sum(), 0.0, ""});
        specs.push_back({"capacity", "capacity", TransformKind::Cuts, fold_ops::sum(),
                         fold_ops::min(), 0.0, ""});
        specs.push_back({"unavailability", "probability", TransformKind::Cuts,
                         fold_ops::product(), fold_ops::complement_product(), 1.0, ""});
        specs.push_back({"fault_probability", "probability", TransformKind::Cuts,
                         fold_ops::product(), fold_ops::sum(), 1.0, ""});
        return specs;
    }();
    return builtins;
}

bool is_reserved_attribute(std::string_view name) {
    for (const auto& spec : builtin_attributes()) {
        if (spec.name == name) {
            return true;
        }
    }
    return name == "availability" || name == "serviceability";
}

AttributeRegistry::AttributeRegistry()
    : specs_(builtin_attributes().begin(), builtin_attributes().end()) {}

AttributeRegistry::AttributeRegistry(const AttributeRegistry& other)
    : specs_(other.snapshot()) {}

AttributeRegistry& AttributeRegistry::operator=(const AttributeRegistry& other) {
    auto copy = other.snapshot();
    std::unique_lock lock(mutex_);
    specs_ = std::move(copy);
    return *this;
}

std::deque<AttributeSpec> AttributeRegistry::snapshot() const {
    std::shared_lock lock(mutex_);
    return specs_;
}

const AttributeSpec& AttributeRegistry::register_attribute(AttributeSpec spec) {
    if (spec.name.empty()) {
        throw ValidationError("attribute name must not be empty");
    }
    if (is_reserved_attribute(spec.name)) {
        throw ValidationError("attribute name '" + spec.name + "' is reserved");
    }
    if (spec.property.empty()) {
        throw ValidationError("attribute '" + spec.name + "' names no property");
    }
    validate_fold_op(spec.inner);
    validate_fold_op(spec.outer);
    if (!std::isfinite(spec.inner.identity)) {
        throw ValidationError("attribute '" + spec.name +
                              "': inner identity must be finite (it fills the matrix)");
    }
    if (spec.r != spec.inner.identity) {
        throw ValidationError("attribute '" + spec.name +
                              "': r must equal the inner operation's identity");
    }
    std::unique_lock lock(mutex_);
    for (const auto& s : specs_) {
        if (s.name == spec.name) {
            throw ValidationError("attribute '" + spec.name + "' is already registered");
        }
    }
    specs_.push_back(std::move(spec));
    return specs_.back();
}

bool AttributeRegistry::has(const std::string& name) const {
    std::shared_lock lock(mutex_);
    return std::any_of(specs_.begin(), specs_.end(),
                       [&](const AttributeSpec& s) { return s.name == name; });
}

const AttributeSpec& AttributeRegistry::get(const std::string& name) const {
    std::shared_lock lock(mutex_);
    for (const auto& s : specs_) {
        if (s.name == name) {
            return s;
        }
    }
    throw NameError("unknown attribute '" + name + "'");
}

std::vector<std::string> AttributeRegistry::names() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& s : specs_) {
        out.push_back(s.name);
    }
    return out;
}

std::vector<double> fold_columns(const FoldOp& op, const Matrix& m) {
    std::vector<double> out;
    out.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double acc = op.identity;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            acc = op.apply(acc, m.at(i, j));
        }
        out.push_back(acc);
    }
    return out;
}

double fold_values(const FoldOp& op, const std::vector<double>& values) {
    double acc = op.identity;
    for (double v : values) {
        acc = op.apply(acc, v);
    }
    return acc;
}

namespace {

bool uses_probability_ops(const AttributeSpec& spec) {
    auto probabilistic = [](const FoldOp& op) {
        return op.name == "product" || op.name == "complement-product";
    };
    return probabilistic(spec.inner) || probabilistic(spec.outer);
}

} // namespace

EvalResult evaluate(const AttributeSpec& spec, const DirectedGraph& g, const PathSet& p,
                    const EvalOptions& options) {
    const EdgePropertyVector& w = g.property(spec.property);
    if (uses_probability_ops(spec) && w.domain() != PropertyDomain::Probability) {
        throw ValidationError("attribute '" + spec.name +
                              "' needs a probability property, but '" + spec.property +
                              "' has domain " + to_string(w.domain()));
    }
    if (spec.r != spec.inner.identity) {
        throw ValidationError("attribute '" + spec.name +
                              "': r must equal the inner operation's identity");
    }
    Hypergraph h = apply_transform(spec.transform, g, p, options.cut_union_limit);
    Matrix m = r_incidence_matrix(spec.r, w, h);
    EvalResult result;
    result.attribute = spec.name;
    result.transform = spec.transform;
    result.unit = spec.unit.empty() ? w.unit() : spec.unit;
    result.column_labels = m.col_labels();
    result.column_values = fold_columns(spec.inner, m);
    result.value = fold_values(spec.outer, result.column_values);
    return result;
}

namespace {

const AttributeSpec& builtin(std::string_view name) {
    for (const auto& s : builtin_attributes()) {
        if (s.name == name) {
            return s;
        }
    }
    throw NameError("unknown builtin attribute");
}

} // namespace

double availability(const DirectedGraph& g, const PathSet& p, const EvalOptions& options) {
    return 1.0 - evaluate(builtin("unavailability"), g, p, options).value;
}

double serviceability(const DirectedGraph& g, const PathSet& p, const EvalOptions& options) {
    return 1.0 - evaluate(builtin("fault_probability"), g, p, options).value;
}

} // namespace pathset
