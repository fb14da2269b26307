#ifndef GRCODES_TESTS_SUPPORT_HPP
#define GRCODES_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "grcodes/classify.hpp"
#include "grcodes/records.hpp"

namespace grc::test {

inline const std::string kDataDir = GRCODES_DATA_DIR;

inline const char* const kU36 = "021242402043131423014123232100132334";
inline const char* const kV36 = "100004000410431304002224330013242110";
inline const char* const kU72 = "312411232330313143111221222301122414030013401133430420133323011301020100";
inline const char* const kV72 = "100000000441004102234010043124424101300211324012401114201004023203011413";
inline const char* const kU18 = "304442010212124112";
inline const char* const kV18 = "100000004013203240";

inline GroupRing ring(int q, const char* group) { return GroupRing(Field::of_order(q), AbelianGroup::parse(group)); }

inline std::vector<Symbol> random_vector(std::mt19937_64& rng, int q, int n) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<Symbol> v(n);
    for (auto& x : v) x = static_cast<Symbol>(d(rng));
    return v;
}

inline GroupRingElement random_element(std::mt19937_64& rng, const GroupRing& r) {
    return r.element(random_vector(rng, r.field().order(), r.size()));
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, int rows, int cols) {
    return Matrix(f, rows, cols, random_vector(rng, f.order(), rows * cols));
}

/// All records of the shipped table files.
inline std::vector<CodeRecord> table_records() {
    std::vector<CodeRecord> out;
    for (const char* name : {"table1_gf2.codes", "table2_gf3.codes", "table3_gf4.codes", "table5_gf5.codes",
                             "new_codes.codes"}) {
        auto rs = parse_record_file(kDataDir + "/" + name);
        out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
}

/// Lines of a matrix data file, comments dropped.
inline std::vector<std::string> read_matrix_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

}  // namespace grc::test

#endif  // GRCODES_TESTS_SUPPORT_HPP
