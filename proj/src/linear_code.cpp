#include "grcodes/linear_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grc {

LinearCode::LinearCode(const Matrix& spanning) : gen_(row_basis(spanning)) {}

LinearCode::LinearCode(const Matrix& spanning, std::optional<Provenance> provenance)
    : gen_(row_basis(spanning)), provenance_(std::move(provenance)) {}

LinearCode LinearCode::zero(const Field& field, int n) { return LinearCode(Matrix(field, 0, n)); }

LinearCode LinearCode::full(const Field& field, int n) { return LinearCode(Matrix::identity(field, n)); }

LinearCode LinearCode::with_check_element(const GroupRingElement& v) const {
    if (!provenance_) throw std::invalid_argument("code has no generator element");
    const auto& u = provenance_->generator;
    if (!(u.ring() == v.ring())) throw std::invalid_argument("check element from a different group ring");
    if (!(u * v).is_zero()) throw std::invalid_argument("u v != 0");
    if (rank(regular_matrix(v)) != length() - dimension()) throw std::invalid_argument("rank(V) != n - k");
    LinearCode out = *this;
    out.provenance_->check = v;
    return out;
}

bool LinearCode::contains(std::span<const Symbol> word) const { return row_space_contains(gen_, word); }

std::vector<Symbol> LinearCode::encode(std::span<const Symbol> message) const { return vec_mul(message, gen_); }

std::string LinearCode::label() const {
    return "[" + std::to_string(length()) + "," + std::to_string(dimension()) + "]";
}

LinearCode code_from_generator_element(const GroupRingElement& u) {
    if (u.is_zero()) throw std::invalid_argument("generator element is zero; use LinearCode::zero for the zero code");
    return LinearCode(regular_matrix(u), Provenance{u, std::nullopt});
}

SubmoduleCode code_from_submodule(const GroupRingElement& u, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("empty basis subset");
    const Matrix U = regular_matrix(u);
    std::vector<int> rows;
    for (int g : subset) {
        if (g < 1 || g > u.size()) throw std::out_of_range("group index out of range");
        rows.push_back(g - 1);
    }
    // Row i of U is g_i u.
    const Matrix su = U.select_rows(rows);
    if (rank(su) != static_cast<int>(subset.size())) throw std::invalid_argument("S u is linearly dependent");
    const bool ideal = rank(U) == static_cast<int>(subset.size());
    std::optional<Provenance> prov;
    if (ideal) prov = Provenance{u, std::nullopt};
    return {LinearCode(su, std::move(prov)), ideal};
}

LinearCode annihilator_code(const GroupRingElement& v) {
    const int n = v.size();
    const Matrix null = left_null_space(regular_matrix(v));
    if (null.rows() == 0) return LinearCode::zero(v.field(), n);
    return LinearCode(null);
}

Matrix parity_check_matrix(const LinearCode& code) {
    const Field& f = code.field();
    const int n = code.length();
    const int r = n - code.dimension();
    const auto& prov = code.provenance();
    if (prov && prov->check) {
        const Matrix V = regular_matrix(*prov->check);
        // Columns of V are checks since U V = 0; take the pivot columns.
        const auto pivots = rref(V).pivots;
        Matrix h = V.select_cols(pivots).transpose();
        if (h.rows() == r && rank(h) == r && (code.generator_matrix() * h.transpose()).is_zero()) return h;
        throw std::logic_error("check element columns do not form a parity-check matrix");
    }
    if (code.dimension() == 0) return Matrix::identity(f, n);
    return right_null_space(code.generator_matrix()).transpose();
}

LinearCode dual_code(const LinearCode& code) {
    const Matrix h = parity_check_matrix(code);
    const auto& prov = code.provenance();
    if (prov && prov->check) {
        const GroupRingElement v_inv = involution(*prov->check);
        const GroupRingElement u_inv = involution(prov->generator);
        if (!row_space_equal(h, regular_matrix(v_inv)))
            throw std::logic_error("dual code differs from F G v^(-1)");
        return LinearCode(h, Provenance{v_inv, u_inv});
    }
    if (h.rows() == 0) return LinearCode::zero(code.field(), code.length());
    return LinearCode(h);
}

LinearCode shorten(const LinearCode& code, std::span<const int> positions) {
    const int n = code.length();
    std::set<int> drop;
    for (int p : positions) {
        if (p < 1 || p > n) throw std::out_of_range("shortening position " + std::to_string(p) + " out of range");
        drop.insert(p - 1);
    }
    if (drop.empty()) return LinearCode(code.generator_matrix());
    std::vector<int> dropped(drop.begin(), drop.end());
    std::vector<int> kept;
    for (int c = 0; c < n; ++c)
        if (!drop.count(c)) kept.push_back(c);
    const Matrix& g = code.generator_matrix();
    const int m = n - static_cast<int>(dropped.size());
    if (g.rows() == 0) return LinearCode::zero(code.field(), m);
    // Messages whose codewords vanish on the dropped coordinates.
    const Matrix msgs = left_null_space(g.select_cols(dropped));
    if (msgs.rows() == 0) return LinearCode::zero(code.field(), m);
    return LinearCode((msgs * g).select_cols(kept));
}

Matrix standard_generator_matrix(const LinearCode& code) { return row_basis(code.generator_matrix()); }

CodeSize operator*(CodeSize a, CodeSize b) {
    if (a.q != b.q) throw std::invalid_argument("code sizes over different fields");
    return {a.q, a.exponent + b.exponent};
}

std::string CodeSize::to_string() const {
    std::vector<int> digits{1};  // little-endian decimal
    for (int e = 0; e < exponent; ++e) {
        int carry = 0;
        for (int& d : digits) {
            const int x = d * q + carry;
            d = x % 10;
            carry = x / 10;
        }
        while (carry) {
            digits.push_back(carry % 10);
            carry /= 10;
        }
    }
    std::string out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
    return out;
}

CodeSize code_cardinality(const LinearCode& code) { return {code.field().order(), code.dimension()}; }

CodeSize ambient_cardinality(const Field& field, int n) { return {field.order(), n}; }

}  // namespace grc
