#include "thompsonv/textio.hpp"

#include "thompsonv/error.hpp"

namespace thompsonv {

std::string trim_copy(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

PairFile read_pair_file(std::istream& in, bool stop_at_section) {
    PairFile out;
    std::string line;
    int lineno = 0;
    while (true) {
        auto pos = in.tellg();
        if (!std::getline(in, line)) break;
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim_copy(line);
        if (line.empty()) continue;
        if (stop_at_section && line[0] == '[') {
            in.clear();
            in.seekg(pos);
            break;
        }
        if (line.rfind("n=", 0) == 0) {
            try {
                out.n = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad header '" + line + "'");
            }
            if (out.n < 1) throw Error(ErrorKind::ParseError, "n must be positive");
            continue;
        }
        if (line.rfind("flavor=", 0) == 0) {
            out.flavor = trim_copy(line.substr(7));
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'u -> v'");
        out.pairs.emplace_back(trim_copy(line.substr(0, arrow)), trim_copy(line.substr(arrow + 2)));
    }
    return out;
}

}  // namespace thompsonv
