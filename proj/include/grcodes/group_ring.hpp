#ifndef GRCODES_GROUP_RING_HPP
#define GRCODES_GROUP_RING_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grcodes/abelian_group.hpp"
#include "grcodes/field.hpp"
#include "grcodes/matrix.hpp"

namespace grc {

class GroupRingElement;

/// The group ring F G for a finite field F and finite abelian group G.
/// Cheap to copy; copies share one immutable context.
class GroupRing {
public:
    GroupRing(Field field, AbelianGroup group);

    const Field& field() const noexcept { return ctx_->field; }
    const AbelianGroup& group() const noexcept { return ctx_->group; }
    /// n = |G|, the code length.
    int size() const noexcept { return ctx_->group.order(); }

    GroupRingElement zero() const;
    GroupRingElement one() const;
    /// The sum of all group elements.
    GroupRingElement all_ones() const;
    /// The basis element g_index (1-based).
    GroupRingElement group_element(int index) const;
    GroupRingElement element(std::vector<Symbol> coeffs) const;
    /// Coefficient string in list order g_1..g_n.
    GroupRingElement parse(std::string_view text) const;

    std::string name() const;

    friend bool operator==(const GroupRing& a, const GroupRing& b) noexcept {
        return a.ctx_ == b.ctx_ || (a.field() == b.field() && a.group() == b.group());
    }

private:
    struct Context {
        Field field;
        AbelianGroup group;
    };
    std::shared_ptr<const Context> ctx_;
};

/// sum over g of c_g g, with c stored at position i for g_{i+1}.
class GroupRingElement {
public:
    GroupRingElement(GroupRing ring, std::vector<Symbol> coeffs);

    const GroupRing& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_.field(); }
    int size() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const Symbol> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of g_index, 1-based.
    FieldElement coefficient(int index) const;
    bool is_zero() const noexcept;
    std::string to_string() const { return field().format_vector(coeffs_); }

    friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator*(const FieldElement& c, const GroupRingElement& x);
    friend GroupRingElement operator*(Symbol c, const GroupRingElement& x);
    GroupRingElement operator-() const;

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) noexcept {
        return a.coeffs_ == b.coeffs_ && a.ring_ == b.ring_;
    }

private:
    GroupRing ring_;
    std::vector<Symbol> coeffs_;
};

/// v^(-1): the coefficient at g becomes the coefficient of v at g^{-1}.
GroupRingElement involution(const GroupRingElement& v);

/// r_L(w): coefficient vector reversed. Equals g_n * w^(-1) for the list L.
GroupRingElement reverse(const GroupRingElement& w);

/// U with U(i, j) = u at g_i^{-1} g_j. Rows act on the right:
/// coeffs(w u) = coeffs(w) U.
Matrix regular_matrix(const GroupRingElement& u);

bool is_unit(const GroupRingElement& u);
/// Nonzero and not a unit; in a finite commutative ring these coincide with
/// the zero-divisors.
bool is_zero_divisor(const GroupRingElement& u);

}  // namespace grc

#endif  // GRCODES_GROUP_RING_HPP
