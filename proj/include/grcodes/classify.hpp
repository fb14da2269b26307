#ifndef GRCODES_CLASSIFY_HPP
#define GRCODES_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grcodes/group_ring.hpp"
#include "grcodes/linear_code.hpp"
#include "grcodes/mindist.hpp"

namespace grc {

/// F G is code-checkable iff a Sylow p-subgroup of G is cyclic, p = char F.
bool ring_is_code_checkable(const GroupRing& ring);
/// p does not divide |G|.
bool is_semisimple(const GroupRing& ring);

struct CheckEvidence {
    bool annihilates = false;  // u v = 0
    int rank_u = 0;
    int rank_v = 0;
    bool rank_condition = false;       // rank(V) = n - rank(U)
    bool annihilator_matches = false;  // Ann(v) = F G u

    bool valid() const noexcept { return annihilates && rank_condition && annihilator_matches; }
};

CheckEvidence verify_check_element(const GroupRingElement& u, const GroupRingElement& v);

struct CheckSearchOptions {
    std::uint64_t max_candidates = 100'000;
    std::uint64_t seed = 1;
};

enum class CheckSearchStatus {
    found,
    /// Every element of Ann(u) was tried.
    none_exists,
    /// Gave up at the candidate cap while the ring is code-checkable, so an
    /// element exists and the cap is too small.
    cap_exhausted,
    /// Gave up at the cap in a ring that is not code-checkable.
    not_found,
};

struct CheckSearchResult {
    CheckSearchStatus status = CheckSearchStatus::not_found;
    std::optional<GroupRingElement> element;
    std::uint64_t candidates = 0;
};

/// Looks for v in Ann(u) with rank(V) = n - rank(U): basis vectors of
/// Ann(u) first, then all of Ann(u) when it is small enough, otherwise
/// seeded random combinations. Hits are validated with
/// verify_check_element.
CheckSearchResult find_check_element(const GroupRingElement& u, const CheckSearchOptions& opts = {});

/// Via the membership test u^(-1) in F G u. Throws std::invalid_argument
/// when the code has no generator element.
bool is_reversible(const LinearCode& code);
/// Closed under reversing coordinates; needs no provenance.
bool is_reversible_by_definition(const LinearCode& code);

/// dim(C ∩ C^⊥).
int hull_dimension(const LinearCode& code);
bool is_lcd(const LinearCode& code);

/// Testable forms of the six equivalent reversibility conditions for a
/// checkable F G u with check element v.
struct ReversibilityEvidence {
    bool u_code_reversible = false;         // F G u reversible
    bool u_ideal_symmetric = false;         // F G u = F G u^(-1)
    bool u_inverse_in_u_ideal = false;      // u^(-1) in F G u
    bool v_inverse_in_v_ideal = false;      // v^(-1) in F G v
    bool v_ideal_symmetric = false;         // F G v = F G v^(-1)
    bool v_code_reversible = false;         // F G v reversible

    bool agree() const noexcept;
    bool value() const noexcept { return u_code_reversible; }
};

/// Throws std::invalid_argument unless v is a check element of F G u.
ReversibilityEvidence reversibility_equivalences(const GroupRingElement& u, const GroupRingElement& v);

/// dim(F G u ∩ F G v).
int ideal_intersection_dimension(const GroupRingElement& u, const GroupRingElement& v);
/// F G u ∩ F G v = {0}. Requires a valid check element and a semisimple
/// ring; throws std::invalid_argument otherwise.
bool nilpotent_intersection_check(const GroupRingElement& u, const GroupRingElement& v);

/// d = n - k + 1.
bool mds_check(const LinearCode& code, int d);

struct IdealScan {
    /// All ideals of F G, trivial ones included, ordered by dimension and
    /// then by generator matrix.
    std::vector<LinearCode> ideals;
    /// Per ideal: equals Ann(v) for some v. Trivial ideals are marked true.
    std::vector<bool> checkable;
    std::optional<LinearCode> non_checkable_witness;
    bool all_nontrivial_checkable = true;
    std::uint64_t elements_scanned = 0;
};

/// Finds every ideal of a tiny group ring: all principal ideals closed under
/// sums, then decides checkability by comparing with Ann(v) for every v.
/// Throws BudgetExceeded when q^n > budget.
IdealScan enumerate_ideals_bruteforce(const GroupRing& ring, std::uint64_t budget = std::uint64_t{1} << 20);

struct ClassificationOptions {
    bool compute_distance = true;
    DistanceOptions distance;
    CheckSearchOptions check;
};

struct ClassificationReport {
    std::string ring;
    int n = 0;
    int k = 0;
    std::optional<DistanceResult> distance;
    bool checkable = false;
    std::optional<GroupRingElement> check_element;
    bool reversible = false;
    bool lcd = false;
    std::optional<bool> mds;
    bool semisimple = false;
    bool ring_code_checkable = false;
    std::vector<std::string> diagnostics;

    /// "R", "C", "R,C" or "".
    std::string flags() const;
};

/// Classifies F G u. A supplied check element is verified and used;
/// otherwise one is searched for.
ClassificationReport classify(const GroupRingElement& u, const std::optional<GroupRingElement>& v = std::nullopt,
                              const ClassificationOptions& opts = {});

std::string render_report(const ClassificationReport& report);
/// key = value lines.
std::string render_report_record(const ClassificationReport& report);

}  // namespace grc

#endif  // GRCODES_CLASSIFY_HPP
