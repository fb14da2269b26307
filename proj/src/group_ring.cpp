#include "grcodes/group_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace grc {

GroupRing::GroupRing(Field field, AbelianGroup group)
    : ctx_(std::make_shared<const Context>(Context{std::move(field), std::move(group)})) {}

GroupRingElement GroupRing::zero() const { return {*this, std::vector<Symbol>(size(), 0)}; }

GroupRingElement GroupRing::one() const { return group_element(1); }

GroupRingElement GroupRing::all_ones() const { return {*this, std::vector<Symbol>(size(), 1)}; }

GroupRingElement GroupRing::group_element(int index) const {
    if (index < 1 || index > size()) throw std::out_of_range("group index out of range");
    std::vector<Symbol> c(size(), 0);
    c[index - 1] = 1;
    return {*this, std::move(c)};
}

GroupRingElement GroupRing::element(std::vector<Symbol> coeffs) const { return {*this, std::move(coeffs)}; }

GroupRingElement GroupRing::parse(std::string_view text) const {
    auto c = field().parse_vector(text);
    if (static_cast<int>(c.size()) != size())
        throw std::invalid_argument("coefficient string has " + std::to_string(c.size()) + " entries, expected " +
                                    std::to_string(size()));
    return {*this, std::move(c)};
}

std::string GroupRing::name() const { return field().name() + "[" + group().to_string() + "]"; }

GroupRingElement::GroupRingElement(GroupRing ring, std::vector<Symbol> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != ring_.size())
        throw std::invalid_argument("coefficient vector length differs from group order");
    for (Symbol s : coeffs_)
        if (s >= ring_.field().order()) throw std::invalid_argument("coefficient out of range for " + ring_.field().name());
}

FieldElement GroupRingElement::coefficient(int index) const {
    if (index < 1 || index > size()) throw std::out_of_range("group index out of range");
    return {field(), coeffs_[index - 1]};
}

bool GroupRingElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Symbol s) { return s == 0; });
}

namespace {
void require_same(const GroupRingElement& x, const GroupRingElement& y) {
    if (!(x.ring() == y.ring())) throw std::invalid_argument("elements of different group rings");
}
}  // namespace

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    require_same(x, y);
    const Field& f = x.field();
    std::vector<Symbol> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = f.add(x.coeffs_[i], y.coeffs_[i]);
    return {x.ring_, std::move(c)};
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
    require_same(x, y);
    const Field& f = x.field();
    std::vector<Symbol> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = f.sub(x.coeffs_[i], y.coeffs_[i]);
    return {x.ring_, std::move(c)};
}

GroupRingElement GroupRingElement::operator-() const {
    std::vector<Symbol> c(size());
    for (int i = 0; i < size(); ++i) c[i] = field().neg(coeffs_[i]);
    return {ring_, std::move(c)};
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    require_same(x, y);
    const Field& f = x.field();
    const AbelianGroup& g = x.ring().group();
    const int n = x.size();
    std::vector<Symbol> c(n, 0);
    for (int i = 0; i < n; ++i) {
        if (x.coeffs_[i] == 0) continue;
        const Symbol* mrow = f.mul_row(x.coeffs_[i]);
        for (int j = 0; j < n; ++j) {
            if (y.coeffs_[j] == 0) continue;
            const int k = g.mul0(i, j);
            c[k] = f.add(c[k], mrow[y.coeffs_[j]]);
        }
    }
    return {x.ring_, std::move(c)};
}

GroupRingElement operator*(Symbol s, const GroupRingElement& x) {
    const Field& f = x.field();
    if (s >= f.order()) throw std::invalid_argument("scalar out of range for " + f.name());
    std::vector<Symbol> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = f.mul(s, x.coeffs_[i]);
    return {x.ring_, std::move(c)};
}

GroupRingElement operator*(const FieldElement& c, const GroupRingElement& x) {
    if (!(c.field() == x.field())) throw std::invalid_argument("scalar from a different field");
    return c.value() * x;
}

GroupRingElement involution(const GroupRingElement& v) {
    const AbelianGroup& g = v.ring().group();
    std::vector<Symbol> c(v.size());
    for (int i = 0; i < v.size(); ++i) c[i] = v.coeffs()[g.inv0(i)];
    return v.ring().element(std::move(c));
}

GroupRingElement reverse(const GroupRingElement& w) {
    std::vector<Symbol> c(w.coeffs().rbegin(), w.coeffs().rend());
    return w.ring().element(std::move(c));
}

Matrix regular_matrix(const GroupRingElement& u) {
    const AbelianGroup& g = u.ring().group();
    const int n = u.size();
    Matrix m(u.field(), n, n);
    for (int i = 0; i < n; ++i) {
        const int gi_inv = g.inv0(i);
        for (int j = 0; j < n; ++j) m(i, j) = u.coeffs()[g.mul0(gi_inv, j)];
    }
    return m;
}

bool is_unit(const GroupRingElement& u) { return rank(regular_matrix(u)) == u.size(); }

bool is_zero_divisor(const GroupRingElement& u) { return !u.is_zero() && !is_unit(u); }

}  // namespace grc
