#include <CLI11.hpp>

#include <iostream>

#include "thompsonv/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Runs the acceptance criteria and prints one line per criterion."};
    std::uint64_t seed = 1;
    std::vector<int> only;
    app.add_option("--seed", seed, "base seed for every random draw");
    app.add_option("--only", only, "criterion ids to run (default: all)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    std::vector<thompsonv::CriterionResult> results;
    if (only.empty()) {
        results = thompsonv::run_acceptance(std::cout, seed);
    } else {
        for (int id : only) {
            results.push_back(thompsonv::run_criterion(id, seed));
            std::cout << thompsonv::format_result(results.back()) << std::endl;
        }
    }
    bool ok = thompsonv::acceptance_ok(results);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << "acceptance: " << results.size() - failed << "/" << results.size() << " pass";
    if (failed) std::cout << ", " << failed << " fail" << (ok ? " (all expected)" : "");
    std::cout << std::endl;
    return ok ? 0 : 1;
}
