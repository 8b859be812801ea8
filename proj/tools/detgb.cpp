// Command-line front end: single GB computations, the named experiment
// drivers, and rendering of saved JSON reports.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "detgb/experiments.hpp"

namespace {

std::pair<int, int> parse_grid(const std::string& s) {
    int m = 0, n = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%dx%d%c", &m, &n, &tail) != 2 || m < 1 || n < 1)
        throw detgb::DomainError("grid: expected MxN with positive sides, got '" + s + "'");
    return {m, n};
}

int emit(const detgb::Report& rep, const std::string& out_path, bool json) {
    std::string bytes = rep.to_json().dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 64;
        }
        out << bytes;
    }
    if (json)
        std::cout << bytes;
    else
        std::cout << detgb::render_report(rep);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinantal Groebner bases: computations and experiment reports"};
    app.require_subcommand(1);

    std::string grid = "3x3", order = "grevlex:rowmajor", field, out_path;
    std::string experiment_name, report_path;
    int minors = 2;
    std::uint64_t seed = 1;
    long samples = 0;
    double budget = 0;
    bool json = false;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a minor ideal");
    gb->add_option("--grid", grid, "grid size MxN")->capture_default_str();
    gb->add_option("--minors", minors, "minor size t")->capture_default_str();
    gb->add_option("--order", order, "term order KIND[:ARGS]")->capture_default_str();
    gb->add_option("--field", field, "coefficient field: q or p=<prime>");
    gb->add_option("--budget", budget, "time budget in seconds (0 = none)");
    gb->add_option("--out", out_path, "write the JSON report to this file");
    gb->add_flag("--json", json, "print JSON instead of text");

    auto* ex = app.add_subcommand("experiment", "run a named experiment");
    std::string names;
    for (const auto& nm : detgb::experiment_names()) names += "\n  " + nm;
    ex->add_option("name", experiment_name, "one of:" + names)->required();
    ex->add_option("--grid", grid, "override the instance grid");
    ex->add_option("--minors", minors, "override the minor size");
    ex->add_option("--field", field, "coefficient field: q or p=<prime>");
    ex->add_option("--seed", seed, "random seed")->capture_default_str();
    ex->add_option("--samples", samples, "sampled-order count (0 = driver default)");
    ex->add_option("--budget", budget, "time budget in seconds (0 = driver default)");
    ex->add_option("--out", out_path, "write the JSON report to this file");
    ex->add_flag("--json", json, "print JSON instead of text");

    auto* rn = app.add_subcommand("render", "render a saved JSON report as text");
    rn->add_option("report", report_path, "path to a report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (gb->parsed()) {
            auto [m, n] = parse_grid(grid);
            if (field.empty()) field = "p=32003";
            return emit(detgb::gb_report(m, n, minors, order, field, budget), out_path, json);
        }
        if (ex->parsed()) {
            detgb::ExperimentSpec spec;
            spec.name = experiment_name;
            if (ex->count("--grid")) std::tie(spec.m, spec.n) = parse_grid(grid);
            if (ex->count("--minors")) spec.t = minors;
            spec.field = field;
            spec.seed = seed;
            spec.samples = samples;
            spec.budget_seconds = budget;
            return emit(detgb::run_experiment(spec), out_path, json);
        }
        std::ifstream in(report_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << report_path << "\n";
            return 64;
        }
        std::cout << detgb::render_report(nlohmann::json::parse(in));
        return 0;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const detgb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
}
