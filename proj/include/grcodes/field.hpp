#ifndef GRCODES_FIELD_HPP
#define GRCODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grc {

/// Field elements are stored as small integers: the symbol of
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
using Symbol = std::uint8_t;

namespace detail {
struct FieldTables;
}

/// Largest field order supported by the table-driven arithmetic.
inline constexpr int kMaxFieldOrder = 256;

bool is_prime(long long n);

/**
 * GF(p^m) with arithmetic tables.
 *
 * The modulus is the smallest monic irreducible polynomial of degree m when
 * monic polynomials are ordered by the symbol value of their lower
 * coefficients. For GF(4) this gives x^2 + x + 1, so the generator a = x
 * satisfies a^2 = 1 + a.
 *
 * A Field is an immutable handle; copies share the same tables and may be
 * used from any thread.
 */
class Field {
public:
    /// GF(p^m). Throws std::invalid_argument for non-prime p, m < 1 or
    /// p^m > kMaxFieldOrder.
    static Field make(int p, int m = 1);
    /// GF(q) for a prime power q.
    static Field of_order(int q);
    /// Accepts "5", "4" or "2^2".
    static Field parse(std::string_view text);

    int characteristic() const noexcept;
    int degree() const noexcept;
    int order() const noexcept;
    /// Coefficients c_0..c_m of the modulus, c_m = 1.
    std::span<const int> modulus() const noexcept;

    Symbol add(Symbol x, Symbol y) const noexcept { return add_[x * q_ + y]; }
    Symbol sub(Symbol x, Symbol y) const noexcept { return add_[x * q_ + neg_[y]]; }
    Symbol mul(Symbol x, Symbol y) const noexcept { return mul_[x * q_ + y]; }
    Symbol neg(Symbol x) const noexcept { return neg_[x]; }
    /// Throws std::domain_error for x == 0.
    Symbol inv(Symbol x) const;

    /// Row of the multiplication table for a fixed left operand.
    const Symbol* mul_row(Symbol x) const noexcept { return mul_ + x * q_; }
    const Symbol* add_row(Symbol x) const noexcept { return add_ + x * q_; }

    /// Polynomial-basis coordinates of a symbol, length m.
    std::vector<int> coordinates(Symbol x) const;
    Symbol from_coordinates(std::span<const int> coords) const;

    /// True when every element has a token that can be written without
    /// separators (prime fields up to 7 and GF(4)).
    bool compact_tokens() const noexcept;
    std::string token(Symbol x) const;
    /// Parses one token at text[pos...], advancing pos. `a^2` is matched
    /// before `a`. Throws std::invalid_argument on an unknown token.
    Symbol parse_token(std::string_view text, std::size_t& pos) const;
    /// Parses a full token; the whole string must be consumed.
    Symbol parse_symbol(std::string_view text) const;

    /// Coefficient strings: tokens concatenated for compact fields,
    /// comma-separated otherwise. Whitespace and enclosing parentheses are
    /// ignored when parsing.
    std::vector<Symbol> parse_vector(std::string_view text) const;
    std::string format_vector(std::span<const Symbol> xs) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t);

    std::shared_ptr<const detail::FieldTables> tables_;
    // Cached raw pointers into tables_ for the hot paths.
    const Symbol* add_ = nullptr;
    const Symbol* mul_ = nullptr;
    const Symbol* neg_ = nullptr;
    int q_ = 0;
};

/// A field value carrying its field, for scalar-level code and tests.
class FieldElement {
public:
    FieldElement(Field field, Symbol value);

    static FieldElement zero(const Field& f) { return {f, 0}; }
    static FieldElement one(const Field& f) { return {f, 1}; }
    static FieldElement parse(const Field& f, std::string_view token);

    const Field& field() const noexcept { return field_; }
    Symbol value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    std::vector<int> coordinates() const { return field_.coordinates(value_); }
    std::string to_string() const { return field_.token(value_); }

    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Symbol value_;
};

}  // namespace grc

#endif  // GRCODES_FIELD_HPP
