#ifndef GRCODES_LINEAR_CODE_HPP
#define GRCODES_LINEAR_CODE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcodes/group_ring.hpp"
#include "grcodes/matrix.hpp"

namespace grc {

/// Group-ring origin of a code: C = F G u, optionally with a verified check
/// element v such that C = Ann(v).
struct Provenance {
    GroupRingElement generator;
    std::optional<GroupRingElement> check;
};

/**
 * A linear [n, k] code over GF(q).
 *
 * The generator matrix is always the canonical basis of the row space
 * (rref without zero rows), so two codes are equal iff their generator
 * matrices are equal.
 */
class LinearCode {
public:
    /// The row space of `spanning`. Rows need not be independent.
    explicit LinearCode(const Matrix& spanning);
    LinearCode(const Matrix& spanning, std::optional<Provenance> provenance);

    static LinearCode zero(const Field& field, int n);
    static LinearCode full(const Field& field, int n);

    const Field& field() const noexcept { return gen_.field(); }
    int length() const noexcept { return gen_.cols(); }
    int dimension() const noexcept { return gen_.rows(); }
    const Matrix& generator_matrix() const noexcept { return gen_; }
    const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

    /// Returns a copy carrying v as check element. Throws
    /// std::invalid_argument unless the code has a generator element u with
    /// u v = 0 and rank(V) = n - k.
    LinearCode with_check_element(const GroupRingElement& v) const;

    bool contains(std::span<const Symbol> word) const;
    std::vector<Symbol> encode(std::span<const Symbol> message) const;

    std::string label() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept { return a.gen_ == b.gen_; }

private:
    Matrix gen_;
    std::optional<Provenance> provenance_;
};

/// F G u: the row space of the regular matrix of u. Throws for u = 0.
LinearCode code_from_generator_element(const GroupRingElement& u);

struct SubmoduleCode {
    LinearCode code;
    /// rank(U) == |S|, i.e. W u is the whole ideal F G u.
    bool is_ideal;
};

/// W u for W spanned by the group elements with the given 1-based indices.
/// Throws if S is empty or S u is linearly dependent.
SubmoduleCode code_from_submodule(const GroupRingElement& u, std::span<const int> subset);

/// Ann(v) = {y : y v = 0}, the left null space of V.
LinearCode annihilator_code(const GroupRingElement& v);

/// (n - k) x n matrix H of full rank with G H^T = 0. With a check element
/// the rows are independent columns of V.
Matrix parity_check_matrix(const LinearCode& code);

/// Euclidean dual. With a check element v the dual is F G v^(-1) and carries
/// provenance (v^(-1), check u^(-1)).
LinearCode dual_code(const LinearCode& code);

/// Codewords vanishing on the 1-based positions, with those coordinates
/// removed.
LinearCode shorten(const LinearCode& code, std::span<const int> positions);

Matrix standard_generator_matrix(const LinearCode& code);

/// |C| = q^k, kept as an exact power of q.
struct CodeSize {
    int q = 2;
    int exponent = 0;

    friend CodeSize operator*(CodeSize a, CodeSize b);
    friend bool operator==(const CodeSize&, const CodeSize&) = default;
    /// Decimal expansion.
    std::string to_string() const;
};

CodeSize code_cardinality(const LinearCode& code);
/// |F G| for the ring of the code's length.
CodeSize ambient_cardinality(const Field& field, int n);

}  // namespace grc

#endif  // GRCODES_LINEAR_CODE_HPP
