#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "pathset/io.hpp"
#include "pathset/set_function.hpp"

namespace {

using pathset::io::format_value;
using pathset::io::json;

struct GlobalOptions {
    std::string format = "table";
    bool verbose = false;
    std::size_t cut_limit = pathset::kDefaultCutUnionLimit;
    std::size_t subset_limit = pathset::kDefaultSubsetLimit;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

std::string eval_result_to_table(const pathset::EvalResult& r, bool verbose) {
    std::string out = r.attribute + " = " + format_value(r.value);
    if (!r.unit.empty()) {
        out += " " + r.unit;
    }
    out += '\n';
    if (verbose) {
        out += "transform: " + to_string(r.transform) + '\n';
        out += "columns:";
        for (std::size_t i = 0; i < r.column_values.size(); ++i) {
            out += " " + r.column_labels[i] + "=" + format_value(r.column_values[i]);
        }
        out += '\n';
    }
    return out;
}

std::string eval_result_to_csv(const pathset::EvalResult& r, bool verbose) {
    std::string out = "attribute,value,unit\n";
    out += r.attribute + "," + format_value(r.value) + "," + r.unit + "\n";
    if (verbose) {
        out += "column,value\n";
        for (std::size_t i = 0; i < r.column_values.size(); ++i) {
            out += r.column_labels[i] + "," + format_value(r.column_values[i]) + "\n";
        }
    }
    return out;
}

std::string witness_to_table(const pathset::AxiomWitness& w, const pathset::SetFunctionTable& t) {
    std::string out = "X={" + join(t.subset_labels(w.x), ",") + "}";
    if (w.y) {
        out += " Y={" + join(t.subset_labels(*w.y), ",") + "}";
    }
    out += " lhs=" + format_value(w.lhs) + " rhs=" + format_value(w.rhs);
    return out;
}

std::string report_to_table(const std::string& attribute, const std::string& path_set,
                            const pathset::SetFunctionReport& report,
                            const pathset::SetFunctionTable& table, bool verbose) {
    std::string out = "attribute: " + attribute + "\n";
    out += "path set: " + path_set + "\n";
    out += "ground set: " + join(table.ground_set(), " ") + "\n";
    auto line = [&](const char* name, const pathset::AxiomVerdict& v) {
        out += std::string(name) + ": ";
        if (v.holds) {
            out += "holds\n";
        } else {
            out += "violated  " + witness_to_table(*v.witness, table) + "\n";
        }
    };
    line("R1", report.r1);
    line("R2", report.r2);
    line("R3", report.r3);
    line("R4", report.r4);
    line("R5", report.r5);
    line("submodular", report.submodular);
    line("supermodular", report.supermodular);
    out += "classification: ";
    out += report.classification.empty() ? "none" : join(report.classification, ", ");
    out += '\n';
    if (verbose) {
        for (std::uint32_t mask = 0; mask < table.subset_count(); ++mask) {
            out += "rho({" + join(table.subset_labels(mask), ",") +
                   "}) = " + format_value(table.value(mask)) + "\n";
        }
    }
    return out;
}

std::string report_to_csv(const pathset::SetFunctionReport& report,
                          const pathset::SetFunctionTable& table) {
    std::string out = "axiom,verdict,X,Y,lhs,rhs\n";
    auto line = [&](const char* name, const pathset::AxiomVerdict& v) {
        out += std::string(name) + ",";
        if (v.holds) {
            out += "holds,,,,\n";
        } else {
            const auto& w = *v.witness;
            out += "violated," + join(table.subset_labels(w.x), "+") + ",";
            if (w.y) {
                out += join(table.subset_labels(*w.y), "+");
            }
            out += "," + format_value(w.lhs) + "," + format_value(w.rhs) + "\n";
        }
    };
    line("R1", report.r1);
    line("R2", report.r2);
    line("R3", report.r3);
    line("R4", report.r4);
    line("R5", report.r5);
    line("submodular", report.submodular);
    line("supermodular", report.supermodular);
    out += "classification,";
    out += report.classification.empty() ? "none" : join(report.classification, "+");
    out += ",,,,\n";
    return out;
}

std::string run_compute(const GlobalOptions& opts, const std::string& file,
                        const std::string& path_set, const std::string& attribute) {
    auto doc = pathset::io::load_network_file(file);
    const pathset::PathSet& ps = pathset::io::find_path_set(doc, path_set);
    pathset::EvalOptions eval_opts{opts.cut_limit};

    pathset::EvalResult result;
    if (attribute == "availability" || attribute == "serviceability") {
        const auto& base = doc.attributes.get(
            attribute == "availability" ? "unavailability" : "fault_probability");
        result = pathset::evaluate(base, doc.graph, ps, eval_opts);
        result.attribute = attribute;
        result.value = 1.0 - result.value;
    } else {
        result = pathset::evaluate(doc.attributes.get(attribute), doc.graph, ps, eval_opts);
    }

    if (opts.format == "json") {
        return pathset::io::eval_result_to_json(result).dump(2) + "\n";
    }
    if (opts.format == "csv") {
        return eval_result_to_csv(result, opts.verbose);
    }
    return eval_result_to_table(result, opts.verbose);
}

std::string run_matrix(const GlobalOptions& opts, const std::string& file,
                       const std::string& path_set, const std::string& transform, double r,
                       const std::string& property) {
    auto doc = pathset::io::load_network_file(file);
    const pathset::PathSet& ps = pathset::io::find_path_set(doc, path_set);
    auto kind = pathset::transform_kind_from_string(transform);
    if (!kind) {
        throw pathset::ValidationError("unknown transform '" + transform + "'");
    }
    pathset::Hypergraph h = pathset::apply_transform(*kind, doc.graph, ps, opts.cut_limit);
    pathset::Matrix m = (property.empty() || property == "none")
                            ? pathset::incidence_matrix(h)
                            : pathset::r_incidence_matrix(r, doc.graph.property(property), h);
    if (opts.format == "json") {
        return pathset::io::matrix_to_json(m).dump(2) + "\n";
    }
    if (opts.format == "csv") {
        return pathset::io::matrix_to_csv(m);
    }
    return pathset::io::matrix_to_table(m);
}

std::string run_cuts(const GlobalOptions& opts, const std::string& file,
                     const std::string& path_set) {
    auto doc = pathset::io::load_network_file(file);
    const pathset::PathSet& ps = pathset::io::find_path_set(doc, path_set);
    pathset::Hypergraph h = pathset::cuts_transform(doc.graph, ps, opts.cut_limit);
    if (opts.format == "json") {
        return pathset::io::cuts_to_json(path_set, h).dump(2) + "\n";
    }
    std::string out;
    if (opts.format == "csv") {
        out = "label,edges\n";
        for (const auto& e : h.hyperedges()) {
            std::vector<std::string> ids;
            for (std::size_t row : e.members) {
                ids.push_back(h.vertex_order()[row]);
            }
            out += e.label + "," + join(ids, " ") + "\n";
        }
        return out;
    }
    for (const auto& e : h.hyperedges()) {
        std::vector<std::string> ids;
        for (std::size_t row : e.members) {
            ids.push_back(h.vertex_order()[row]);
        }
        out += e.label + ": " + join(ids, " ") + "\n";
    }
    return out;
}

std::string run_polymatroid(const GlobalOptions& opts, const std::string& file,
                            const std::string& path_set, const std::string& attribute) {
    auto doc = pathset::io::load_network_file(file);
    const pathset::PathSet& ps = pathset::io::find_path_set(doc, path_set);
    pathset::EvalOptions eval_opts{opts.cut_limit};

    pathset::SetFunctionTable table = [&] {
        if (attribute == "availability") {
            return pathset::tabulate_with(
                [&](const pathset::PathSet& subset) {
                    return pathset::availability(doc.graph, subset, eval_opts);
                },
                ps, opts.subset_limit);
        }
        if (attribute == "serviceability") {
            return pathset::tabulate_with(
                [&](const pathset::PathSet& subset) {
                    return pathset::serviceability(doc.graph, subset, eval_opts);
                },
                ps, opts.subset_limit);
        }
        return pathset::tabulate(doc.attributes.get(attribute), doc.graph, ps, opts.subset_limit,
                                 eval_opts);
    }();
    pathset::SetFunctionReport report = pathset::check_axioms(table);

    if (opts.format == "json") {
        return pathset::io::report_to_json(attribute, path_set, report, table, opts.verbose)
                   .dump(2) +
               "\n";
    }
    if (opts.format == "csv") {
        return report_to_csv(report, table);
    }
    return report_to_table(attribute, path_set, report, table, opts.verbose);
}

std::string run_validate(const GlobalOptions& opts, const std::string& file) {
    auto doc = pathset::io::load_network_file(file);
    if (opts.format == "json") {
        json j;
        j["vertices"] = doc.graph.vertices().size();
        j["edges"] = doc.graph.edge_count();
        j["properties"] = doc.graph.property_names();
        json sets = json::array();
        for (const auto& ps : doc.path_sets) {
            json entry;
            entry["name"] = ps.name;
            entry["source"] = ps.paths.source() ? json(*ps.paths.source()) : json(nullptr);
            entry["destination"] =
                ps.paths.destination() ? json(*ps.paths.destination()) : json(nullptr);
            entry["paths"] = ps.paths.size();
            sets.push_back(std::move(entry));
        }
        j["path_sets"] = std::move(sets);
        j["attributes"] = doc.attributes.names();
        return j.dump(2) + "\n";
    }
    std::string out;
    if (opts.format == "csv") {
        out += "key,value\n";
        out += "vertices," + std::to_string(doc.graph.vertices().size()) + "\n";
        out += "edges," + std::to_string(doc.graph.edge_count()) + "\n";
        out += "properties," + join(doc.graph.property_names(), " ") + "\n";
        for (const auto& ps : doc.path_sets) {
            out += "path_set," + ps.name + " " + ps.paths.source().value_or("-") + "->" +
                   ps.paths.destination().value_or("-") + " " + std::to_string(ps.paths.size()) +
                   "\n";
        }
        out += "attributes," + join(doc.attributes.names(), " ") + "\n";
        return out;
    }
    out += "ok: " + std::to_string(doc.graph.vertices().size()) + " vertices, " +
           std::to_string(doc.graph.edge_count()) + " edges\n";
    out += "properties: " + join(doc.graph.property_names(), ", ") + "\n";
    for (const auto& ps : doc.path_sets) {
        out += "path set " + ps.name + ": " + ps.paths.source().value_or("-") + " -> " +
               ps.paths.destination().value_or("-") + ", " + std::to_string(ps.paths.size()) +
               " paths\n";
    }
    out += "attributes: " + join(doc.attributes.names(), ", ") + "\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path set attribute calculator for directed networks"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_flag("--verbose", opts.verbose, "Include intermediate values");
    app.add_option("--cut-limit", opts.cut_limit,
                   "Maximum path-set union size for cut enumeration")
        ->check(CLI::Range(std::size_t{1}, pathset::kMaxCutUnionLimit));
    app.add_option("--subset-limit", opts.subset_limit,
                   "Maximum ground set size for set-function tables")
        ->check(CLI::Range(std::size_t{1}, pathset::kMaxSubsetLimit));

    std::string file;
    std::string path_set;
    std::string attribute;
    std::string transform;
    std::string property;
    double r = 0.0;

    auto* compute = app.add_subcommand("compute", "Evaluate an attribute on a path set");
    compute->add_option("graph-file", file)->required();
    compute->add_option("path-set", path_set)->required();
    compute->add_option("attribute", attribute)->required();

    auto* matrix = app.add_subcommand("matrix", "Print a transform's (r-)incidence matrix");
    matrix->add_option("graph-file", file)->required();
    matrix->add_option("path-set", path_set)->required();
    matrix->add_option("transform", transform)
        ->required()
        ->check(CLI::IsMember({"identity", "union", "cuts"}));
    matrix->add_option("--r", r, "Non-membership entry");
    matrix->add_option("--property", property, "Property to spread; omit for 0/1 incidence");

    auto* cuts = app.add_subcommand("cuts", "List the minimal cuts of a path set");
    cuts->add_option("graph-file", file)->required();
    cuts->add_option("path-set", path_set)->required();

    auto* polymatroid =
        app.add_subcommand("polymatroid", "Check polymatroid axioms of an attribute table");
    polymatroid->add_option("graph-file", file)->required();
    polymatroid->add_option("path-set", path_set)->required();
    polymatroid->add_option("attribute", attribute)->required();

    auto* validate = app.add_subcommand("validate", "Parse and validate a network document");
    validate->add_option("graph-file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string out;
        if (app.got_subcommand(compute)) {
            out = run_compute(opts, file, path_set, attribute);
        } else if (app.got_subcommand(matrix)) {
            out = run_matrix(opts, file, path_set, transform, r, property);
        } else if (app.got_subcommand(cuts)) {
            out = run_cuts(opts, file, path_set);
        } else if (app.got_subcommand(polymatroid)) {
            out = run_polymatroid(opts, file, path_set, attribute);
        } else if (app.got_subcommand(validate)) {
            out = run_validate(opts, file);
        }
        std::fwrite(out.data(), 1, out.size(), stdout);
        return 0;
    } catch (const pathset::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const pathset::NameError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const pathset::LimitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const pathset::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
