#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace thompsonv {

// Raw contents of a table file before any interpretation of the sides.
struct PairFile {
    int n = 1;
    std::string flavor;  // empty, "relaxed", "monoid", ...
    std::vector<std::pair<std::string, std::string>> pairs;
};

// Reads "n=K" / "flavor=X" headers and "lhs -> rhs" lines; '#' comments.
// Stops at a line starting with '[' (section header) without consuming it when
// `stop_at_section` is set. Throws Error(ParseError).
PairFile read_pair_file(std::istream& in, bool stop_at_section = false);

std::string trim_copy(const std::string& s);

}  // namespace thompsonv
