#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace thompsonv {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double time_limit = 0;
    std::string detail;  // counts behind the verdict
    std::string known;   // nonempty when this criterion is known to be unattainable
};

// Criteria whose literal statement is false; each maps to the reason. A FAIL here is the
// expected outcome and does not make the run fail.
const std::map<int, std::string>& known_unattainable();

// Runs one criterion (1..10). Every random draw comes from std::mt19937_64 seeded with
// seed * 1000 + id, so a run is reproducible from the seed alone.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);

// All ten in order, one line per criterion printed to `log` as each finishes.
std::vector<CriterionResult> run_acceptance(std::ostream& log, std::uint64_t seed = 1);
std::string format_result(const CriterionResult& r);

// True iff every failure is a known-unattainable one.
bool acceptance_ok(const std::vector<CriterionResult>& results);

}  // namespace thompsonv
