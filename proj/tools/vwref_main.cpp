#include "vwref/errors.hpp"
#include "vwref/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

vw::Bindings parse_binds(const std::vector<std::string>& kvs) {
    vw::Bindings out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw vw::ParseError("--bind expects name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
    }
    return out;
}

void load_extra(const std::vector<std::string>& files) {
    for (const auto& f : files) {
        std::ifstream is(f);
        if (!is) throw vw::ParseError("cannot open scenario file '" + f + "'");
        std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
        vw::ScenarioRegistry::instance().load_text(text);
    }
}

int emit(const std::vector<vw::RunResult>& results, bool json, bool quiet) {
    bool all_ok = true;
    if (json) {
        std::cout << "[";
        for (size_t i = 0; i < results.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "\n" << results[i].to_json();
        }
        std::cout << "\n]\n";
    } else {
        for (const auto& r : results) std::cout << r.to_text(quiet);
    }
    for (const auto& r : results) all_ok = all_ok && r.ok();
    if (!json && !quiet && results.size() > 1) {
        size_t passed = 0;
        for (const auto& r : results)
            if (r.ok()) ++passed;
        std::cout << passed << "/" << results.size() << " scenarios pass\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact refined invariant calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false, quiet = false;
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--quiet", quiet, "verdict lines only");
    std::vector<std::string> extra_files;
    app.add_option("--scenarios", extra_files, "additional scenario files to load")
        ->type_name("FILE");

    std::string name;
    std::vector<std::string> binds;

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("name", name)->required();
    run->add_option("--bind", binds, "override an integer binding, name=value");

    auto* series = app.add_subcommand("series", "run a series scenario");
    series->add_option("name", name)->required();
    long order = -1;
    series->add_option("--order", order, "truncation order");
    series->add_option("--bind", binds, "override an integer binding, name=value");

    std::string filter;
    auto* check = app.add_subcommand("check", "run every registered scenario");
    check->add_option("--filter", filter, "substring filter on scenario names");

    auto* dump = app.add_subcommand("dump-scenarios", "print the built-in scenario registry");

    CLI11_PARSE(app, argc, argv);

    try {
        load_extra(extra_files);
        if (dump->parsed()) {
            std::cout << vw::builtin_scenario_text();
            return 0;
        }
        if (check->parsed()) return emit(vw::check_all(filter), json, quiet);
        vw::Bindings b = parse_binds(binds);
        if (series->parsed() && order >= 0) b["order"] = order;
        return emit({vw::run_scenario(name, b)}, json, quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
