#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

// The mod-27 admissibility table: residue pairs (a, b) with 3 not dividing
// ab such that a x^3 + b y^3 = z^3 mod 27 has a solution with some
// coordinate not divisible by 3. There are 252 such pairs out of the
// 18^2 = 324 candidates, and every row holds either 12 or 18 of them.
// The table sits in the innermost counting loop, so lookups are one bit test.

namespace cubicloc {

class AdmissibleTable {
public:
    // regenerates the table from the mod-27 search
    static AdmissibleTable generate();

    bool contains(int a27, int b27) const {
        return (rows_[a27 % 27] >> (b27 % 27)) & 1u;
    }
    // bitmask over b-residues admissible with row a27
    std::uint32_t row_mask(int a27) const { return rows_[a27 % 27]; }

    std::size_t size() const { return count_; }
    std::vector<std::pair<int, int>> pairs() const;          // ascending (a, b)
    std::map<int, int> row_counts() const;                   // a -> #pairs in row

private:
    std::array<std::uint32_t, 27> rows_{};
    std::size_t count_{0};
};

struct FixtureDiff {
    std::vector<std::pair<int, int>> missing;  // generated but absent from the fixture
    std::vector<std::pair<int, int>> extra;    // in the fixture but not generated

    bool empty() const { return missing.empty() && extra.empty(); }
};

// Fixture format: one "a,b" pair per line, 0 <= a,b < 27; blank lines and
// lines starting with '#' are ignored. Parse failures throw
// std::runtime_error naming the offending line.
std::vector<std::pair<int, int>> parse_admissible_fixture(std::istream& in);
std::vector<std::pair<int, int>> load_admissible_fixture(const std::string& path);

FixtureDiff verify_against_fixture(const AdmissibleTable& table,
                                   const std::vector<std::pair<int, int>>& fixture);

}  // namespace cubicloc
