#ifndef GRCODES_ABELIAN_GROUP_HPP
#define GRCODES_ABELIAN_GROUP_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grc {

/**
 * C_{n_1} x ... x C_{n_r} with generators x_1..x_r, listed as
 *
 *   g_{1 + j_1 + n_1 j_2 + n_1 n_2 j_3 + ...} = x_1^{j_1} x_2^{j_2} ... x_r^{j_r}.
 *
 * Public indices are 1-based (g_1 is the identity). Factors are kept in the
 * given order since the list depends on it. This list satisfies
 * g_{n+1-i} g_i = g_n for every i.
 */
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<int> factors);
    /// Parses "6x12", "6 x 12" or "C6xC12".
    static AbelianGroup parse(std::string_view text);

    const std::vector<int>& factors() const noexcept { return factors_; }
    int order() const noexcept { return n_; }
    int rank() const noexcept { return static_cast<int>(factors_.size()); }

    int index_of(std::span<const int> exponents) const;
    std::vector<int> exponents_of(int index) const;

    int mul_index(int i, int j) const;
    int inverse_index(int i) const;

    // 0-based variants used by the group ring kernels; no range checks.
    int mul0(int i, int j) const noexcept { return mul_[i * n_ + j]; }
    int inv0(int i) const noexcept { return inv_[i]; }

    /// True iff g_{n+1-i} g_i = g_n for all i.
    bool verify_list_property() const;

    std::string to_string() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<int> factors_;
    int n_ = 1;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

/// The Sylow p-subgroup of a product of cyclic groups is cyclic iff at most
/// one factor order is divisible by p.
bool sylow_p_cyclic(const AbelianGroup& g, int p);

}  // namespace grc

#endif  // GRCODES_ABELIAN_GROUP_HPP
