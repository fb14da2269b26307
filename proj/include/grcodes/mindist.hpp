#ifndef GRCODES_MINDIST_HPP
#define GRCODES_MINDIST_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grcodes/linear_code.hpp"

namespace grc {

enum class DistanceMethod { exhaustive, column_dependence, isd, hybrid };

std::string to_string(DistanceMethod m);
/// "exhaustive", "dependence", "isd", "auto"/"hybrid".
DistanceMethod parse_distance_method(const std::string& s);

struct DistanceOptions {
    /// Largest q^k the exhaustive engine will enumerate.
    std::uint64_t codeword_budget = std::uint64_t{1} << 26;
    /// Column subsets the dependence engine may examine.
    std::uint64_t subset_budget = 500'000'000;
    std::uint64_t isd_iterations = 100'000;
    /// The dispatcher stops the information-set search after this many
    /// iterations without improvement.
    std::uint64_t isd_stall = 300;
    std::uint64_t seed = 20100101;
    /// Worker threads for the dependence engine; 0 picks the hardware count.
    unsigned threads = 0;
};

struct DistanceResult {
    int d = 0;
    /// A codeword of weight d.
    std::vector<Symbol> witness;
    DistanceMethod method = DistanceMethod::exhaustive;
    /// Codewords, column subsets or ISD iterations examined.
    std::uint64_t work = 0;
    /// Seed of the information-set search when it contributed.
    std::optional<std::uint64_t> seed;
};

/// Thrown when an engine runs out of budget. Carries the certified interval
/// lower <= d <= upper; upper is 0 when no codeword was seen.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, int lower, int upper, std::vector<Symbol> witness = {})
        : std::runtime_error(what), lower(lower), upper(upper), witness(std::move(witness)) {}
    int lower;
    int upper;
    std::vector<Symbol> witness;
};

/// Enumerates all q^k codewords with a p-ary Gray code over the GF(p)-span
/// of the generator rows. Throws BudgetExceeded if q^k exceeds the budget and
/// std::invalid_argument for the zero code.
DistanceResult min_distance_exhaustive(const LinearCode& code, const DistanceOptions& opts = {});

struct DependenceVerdict {
    /// True when some set of at most w_max columns of H is dependent.
    bool dependent = false;
    /// Minimum size of a dependent column set (= d) when dependent;
    /// otherwise w_max + 1, a certified lower bound on d.
    int size = 0;
    std::vector<Symbol> witness;
    std::uint64_t subsets = 0;
};

/// d is the smallest number of linearly dependent columns of a parity-check
/// matrix. Searches sizes 1..w_max in increasing order; each size is a full
/// depth-first pass over column subsets with incremental elimination, split
/// across threads by the first two columns. The result does not depend on
/// the thread schedule.
DependenceVerdict min_distance_column_dependence(const LinearCode& code, int w_max, const DistanceOptions& opts = {});

/// Lee-Brickell information-set search: random column permutation,
/// systematic form, then combinations of at most two rows. Returns a
/// codeword of weight <= target_w if one is met; absence proves nothing.
std::optional<std::vector<Symbol>> low_weight_search_isd(const LinearCode& code, int target_w,
                                                         std::uint64_t iterations, std::uint64_t seed);

/// Exhaustive when q^k fits the codeword budget, otherwise an ISD upper
/// bound certified by the dependence engine.
DistanceResult min_distance(const LinearCode& code, const DistanceOptions& opts = {});

}  // namespace grc

#endif  // GRCODES_MINDIST_HPP
