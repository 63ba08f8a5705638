#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kneser/bounds.hpp"
#include "kneser/cache.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/reduction.hpp"
#include "kneser/solver.hpp"
#include "kneser/tucker.hpp"

namespace {

using namespace kneser;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParams = 3;

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("KNESER_CACHE")) return env;
    return "./kneser-cache.jsonl";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Coloring load_coloring(const std::string& source, const KneserParams& params) {
    if (source.rfind("mod:", 0) == 0) {
        const int modulus = std::stoi(source.substr(4));
        if (modulus < 1) throw ParameterError("modulus must be positive");
        Coloring c;
        c.color_count = modulus;
        for (const auto& v : enumerate_ksubsets(params.n, params.k))
            c.colors.push_back((v.elements().front() - 1) % modulus + 1);
        return c;
    }
    return Coloring::from_json(read_file(source), params);
}

void print_bound_table(const BoundReport& report) {
    std::cout << "params     " << report.params.to_string() << '\n';
    if (report.params.n == report.params.r * report.params.k && report.params.s > 0)
        std::cout << "regime     half-size (n = r*k): bounds read "
                  << 2 * report.params.s + 2 << " vs " << report.params.s + 2 << '\n';
    std::cout << "theorem1   " << report.theorem1 << '\n';
    std::cout << "afl_eq1    " << (report.afl_eq1 ? std::to_string(*report.afl_eq1) : "-") << '\n';
    std::cout << "hom_eq3    " << (report.hom_eq3 ? std::to_string(*report.hom_eq3) : "-") << '\n';
    std::cout << "exact_chi  " << (report.exact_chi ? std::to_string(*report.exact_chi) : "-") << '\n';
    std::cout << "tight      "
              << (report.tight ? (*report.tight ? "true" : "false") : "-") << '\n';
    if (!report.solver_status.empty()) std::cout << "status     " << report.solver_status << '\n';
}

struct Range {
    int lo = 0;
    int hi = -1;
};

Range parse_range(const std::string& text) {
    Range r;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, colon));
        r.hi = std::stoi(text.substr(colon + 1));
    }
    if (r.hi < r.lo) throw ParameterError("empty range: " + text);
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Kneser hypergraphs: exact coloring, bounds, and proof checks"};
    app.require_subcommand(1);

    int n = 0, k = 0, r = 2, s = 0, p = 2, t = 0, r1 = 2, r2 = 2;
    std::uint64_t budget_nodes = SolveBudget{}.max_nodes;
    std::uint64_t max_vertices = SolveBudget{}.max_vertices;
    std::uint64_t max_points = EnumerationBudget{}.max_points;
    std::string format = "table";
    std::string coloring_source;
    std::string cache_flag;
    std::string method = "solver";
    bool diagnostic = false, with_graph = false, solve = false, witness = false, strict = false;
    int pad = 0;
    std::string n_range, k_range, r_range, s_range;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-n", n, "ground set size")->required();
        cmd->add_option("-k", k, "subset size")->required();
        cmd->add_option("-r", r, "edge arity")->required();
        cmd->add_option("-s", s, "intersection cap");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "search node cap");
        cmd->add_option("--max-vertices", max_vertices, "vertex cap");
    };

    auto* bound_cmd = app.add_subcommand("bound", "evaluate the lower-bound formulas");
    add_params(bound_cmd);
    add_budget(bound_cmd);
    bound_cmd->add_flag("--solve", solve, "also compute the exact chromatic number");
    bound_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number");
    add_params(chi_cmd);
    add_budget(chi_cmd);
    chi_cmd->add_option("--cache", cache_flag, "result cache path");
    chi_cmd->add_flag("--witness", witness, "also print a witness coloring");

    auto* color_cmd = app.add_subcommand("color", "produce a proper coloring");
    add_params(color_cmd);
    add_budget(color_cmd);
    color_cmd->add_option("--method", method)->check(CLI::IsMember({"windowed", "solver"}));
    color_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "table"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring for properness");
    add_params(verify_cmd);
    add_budget(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_source, "coloring JSON file")->required();

    auto* tucker_cmd = app.add_subcommand("tucker", "verify the equivariant-map conditions");
    tucker_cmd->add_option("-p", p, "prime")->required();
    tucker_cmd->add_option("-n", n)->required();
    tucker_cmd->add_option("-k", k)->required();
    tucker_cmd->add_option("-s", s);
    tucker_cmd->add_option("--coloring", coloring_source, "JSON file or 'auto'")
        ->default_val("auto");
    tucker_cmd->add_flag("--diagnostic", diagnostic, "allow improper colorings");
    tucker_cmd->add_option("--max-points", max_points, "enumeration cap");
    add_budget(tucker_cmd);

    auto* hom_cmd = app.add_subcommand("hom", "check the padding homomorphism");
    add_params(hom_cmd);
    hom_cmd->add_option("--pad", pad, "target intersection cap s'")->required();
    hom_cmd->add_option("--max-vertices", max_vertices);

    auto* reduce_cmd = app.add_subcommand("reduce", "extract a monochromatic edge at composite arity");
    add_params(reduce_cmd);
    reduce_cmd->add_option("--r1", r1, "first factor")->required();
    reduce_cmd->add_option("--r2", r2, "second factor")->required();
    reduce_cmd->add_option("-t", t, "color count under test")->required();
    reduce_cmd->add_option("--coloring", coloring_source, "JSON file or mod:M")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of bound reports over a parameter grid");
    sweep_cmd->add_option("--n", n_range, "n range a:b")->required();
    sweep_cmd->add_option("--k", k_range, "k range a:b")->required();
    sweep_cmd->add_option("--r", r_range, "r range a:b")->required();
    sweep_cmd->add_option("--s", s_range, "s range a:b")->required();
    add_budget(sweep_cmd);
    sweep_cmd->add_option("--cache", cache_flag, "result cache path");
    sweep_cmd->add_flag("--strict", strict, "exit 2 if any cell exceeded its budget");

    auto* export_cmd = app.add_subcommand("export", "dump vertices (and compatibility edges)");
    add_params(export_cmd);
    export_cmd->add_flag("--graph", with_graph, "include compatibility edge list");
    export_cmd->add_option("--max-vertices", max_vertices);

    CLI11_PARSE(app, argc, argv);

    SolveBudget budget;
    budget.max_nodes = budget_nodes;
    budget.max_vertices = max_vertices;

    if (bound_cmd->parsed()) {
        const KneserParams params{n, k, r, s};
        const BoundReport report =
            compare_bounds(params, solve ? std::optional<SolveBudget>(budget) : std::nullopt);
        if (format == "json") std::cout << report.to_json() << '\n';
        else if (format == "csv") std::cout << BoundReport::csv_header() << '\n' << report.csv_row() << '\n';
        else print_bound_table(report);
        return kExitOk;
    }

    if (chi_cmd->parsed()) {
        const KneserParams params{n, k, r, s};
        params.validate();
        ResultCache cache = ResultCache::load(resolve_cache_path(cache_flag));
        const auto hit = cache.lookup(n, k, r, s);
        if (hit && hit->chi) {
            std::cerr << "cache hit\n";
            std::cout << *hit->chi << '\n';
            return kExitOk;
        }
        const SolveResult result = exact_chromatic(params, budget);
        CacheRecord record;
        record.n = n; record.k = k; record.r = r; record.s = s;
        record.chi = result.chi;
        record.solver_status = to_string(result.status);
        record.nodes = result.nodes_explored;
        record.tool_version = kToolVersion;
        record.timestamp = iso8601_now();
        cache.append(record);
        if (result.status != SolveStatus::chi_found) {
            std::cerr << "budget exceeded after " << result.nodes_explored << " nodes\n";
            return kExitBudget;
        }
        std::cout << *result.chi << '\n';
        if (witness) std::cout << result.witness->to_json() << '\n';
        return kExitOk;
    }

    if (color_cmd->parsed()) {
        const KneserParams params{n, k, r, s};
        Coloring coloring;
        if (method == "windowed") {
            coloring = windowed_coloring(params);
        } else {
            const SolveResult result = exact_chromatic(params, budget);
            if (result.status != SolveStatus::chi_found) return kExitBudget;
            coloring = *result.witness;
        }
        if (format == "text") coloring.write_text(std::cout, params);
        else std::cout << coloring.to_json() << '\n';
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const KneserParams params{n, k, r, s};
        const Coloring coloring = load_coloring(coloring_source, params);
        const ProperCheck check = is_proper(params, coloring, budget);
        if (check.proper) {
            std::cout << "proper\n";
            return kExitOk;
        }
        std::cout << "monochromatic edge: " << check.witness->to_string() << '\n';
        return kExitViolation;
    }

    if (tucker_cmd->parsed()) {
        const KneserParams params{n, k, p, s};
        Coloring coloring;
        if (coloring_source == "auto") {
            const SolveResult result = exact_chromatic(params, budget);
            if (result.status != SolveStatus::chi_found) return kExitBudget;
            coloring = *result.witness;
        } else {
            coloring = load_coloring(coloring_source, params);
        }
        const TuckerInstance instance(p, params, std::move(coloring), diagnostic, budget);
        EnumerationBudget enum_budget;
        enum_budget.max_points = max_points;
        const std::string report = verification_report_json(instance, enum_budget);
        std::cout << report << '\n';
        const bool all_pass = report.find("\"fail\"") == std::string::npos;
        return all_pass ? kExitOk : kExitViolation;
    }

    if (hom_cmd->parsed()) {
        const KneserParams source{n, k, r, s};
        const KneserParams target{n + pad, k + pad, r, pad};
        const HomomorphismCheck check = verify_homomorphism(source, target, max_vertices);
        std::cout << source.to_string() << " -> " << target.to_string() << ": "
                  << (check.ok ? "homomorphism" : "violation") << " (" << check.edges_checked
                  << " edges checked)\n";
        if (!check.ok) {
            std::cout << "violating edge: " << check.violation->to_string() << '\n';
            return kExitViolation;
        }
        return kExitOk;
    }

    if (reduce_cmd->parsed()) {
        const KneserParams params{n, k, r, s};
        const Coloring coloring = load_coloring(coloring_source, params);
        const WitnessReport report = extract_witness(params, r1, r2, coloring, t);
        std::cout << report.to_json() << '\n';
        return kExitOk;
    }

    if (sweep_cmd->parsed()) {
        const Range nr = parse_range(n_range), kr = parse_range(k_range);
        const Range rr = parse_range(r_range), sr = parse_range(s_range);
        ResultCache cache = ResultCache::load(resolve_cache_path(cache_flag));
        std::uint64_t cells = 0, solved = 0, cached = 0, nodes = 0;
        bool any_budget_exceeded = false;
        std::cout << BoundReport::csv_header() << '\n';
        for (int rv = rr.lo; rv <= rr.hi; ++rv)
            for (int kv = kr.lo; kv <= kr.hi; ++kv)
                for (int sv = sr.lo; sv <= sr.hi; ++sv)
                    for (int nv = nr.lo; nv <= nr.hi; ++nv) {
                        const KneserParams params{nv, kv, rv, sv};
                        try {
                            params.validate();
                            if (!params.bound_applicable())
                                throw ParameterError("bound requires n >= r(k-1)+1");
                        } catch (const ParameterError& e) {
                            std::cerr << "skip " << params.to_string() << ": " << e.what() << '\n';
                            continue;
                        }
                        ++cells;
                        BoundReport report;
                        const auto hit = cache.lookup(nv, kv, rv, sv);
                        if (hit) {
                            ++cached;
                            report = compare_bounds(params, std::nullopt);
                            report.solver_status = hit->solver_status;
                            if (hit->chi) {
                                report.exact_chi = hit->chi;
                                report.tight = (*hit->chi == report.theorem1);
                            }
                        } else {
                            report = compare_bounds(params, budget);
                            ++solved;
                            nodes += report.solver_nodes;
                            CacheRecord record;
                            record.n = nv; record.k = kv; record.r = rv; record.s = sv;
                            record.chi = report.exact_chi;
                            record.solver_status = report.solver_status;
                            record.nodes = report.solver_nodes;
                            record.tool_version = kToolVersion;
                            record.timestamp = iso8601_now();
                            cache.append(record);
                        }
                        if (report.solver_status == "budget_exceeded") any_budget_exceeded = true;
                        std::cout << report.csv_row() << '\n';
                    }
        std::cerr << "sweep: " << cells << " cells, " << solved << " solved, " << cached
                  << " cached, " << nodes << " nodes\n";
        if (strict && any_budget_exceeded) return kExitBudget;
        return kExitOk;
    }

    if (export_cmd->parsed()) {
        export_hypergraph(std::cout, KneserParams{n, k, r, s}, with_graph, max_vertices);
        return kExitOk;
    }

    return kExitParams;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParams;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const StructuralError& e) {
        std::cerr << "structural violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParams;
    }
}
