#include "cubicloc/admissible.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cubicloc/local_solubility.hpp"

namespace cubicloc {

AdmissibleTable AdmissibleTable::generate() {
    AdmissibleTable t;
    for (int a = 0; a < 27; ++a) {
        if (a % 3 == 0) continue;
        for (int b = 0; b < 27; ++b) {
            if (b % 3 == 0) continue;
            if (is_admissible_mod27(a, b)) {
                t.rows_[a] |= 1u << b;
                ++t.count_;
            }
        }
    }
    return t;
}

std::vector<std::pair<int, int>> AdmissibleTable::pairs() const {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(count_);
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b)
            if (contains(a, b)) ps.emplace_back(a, b);
    return ps;
}

std::map<int, int> AdmissibleTable::row_counts() const {
    std::map<int, int> counts;
    for (int a = 0; a < 27; ++a) {
        if (a % 3 == 0) continue;
        counts[a] = __builtin_popcount(rows_[a]);
    }
    return counts;
}

std::vector<std::pair<int, int>> parse_admissible_fixture(std::istream& in) {
    std::vector<std::pair<int, int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        int a = -1, b = -1;
        char comma = 0;
        std::istringstream ss(line);
        if (!(ss >> a >> comma >> b) || comma != ',' || a < 0 || a >= 27 || b < 0 || b >= 27) {
            throw std::runtime_error("admissible fixture: malformed line " +
                                     std::to_string(lineno) + ": '" + line + "'");
        }
        out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::pair<int, int>> load_admissible_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("admissible fixture: cannot open " + path);
    return parse_admissible_fixture(in);
}

FixtureDiff verify_against_fixture(const AdmissibleTable& table,
                                   const std::vector<std::pair<int, int>>& fixture) {
    FixtureDiff diff;
    const std::set<std::pair<int, int>> want(fixture.begin(), fixture.end());
    const auto gen = table.pairs();
    const std::set<std::pair<int, int>> got(gen.begin(), gen.end());
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(diff.missing));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(diff.extra));
    return diff;
}

}  // namespace cubicloc
