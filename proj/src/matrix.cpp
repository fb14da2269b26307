#include "grcodes/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace grc {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(Field field, int rows, int cols, std::vector<Symbol> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match matrix dimensions");
    for (Symbol s : data_)
        if (s >= field_.order()) throw std::invalid_argument("matrix entry out of range for " + field_.name());
}

Matrix Matrix::identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::parse_rows(const Field& field, std::span<const std::string> rows) {
    std::vector<Symbol> data;
    int cols = -1;
    for (const auto& r : rows) {
        auto v = field.parse_vector(r);
        if (cols >= 0 && static_cast<int>(v.size()) != cols) throw std::invalid_argument("ragged matrix rows");
        cols = static_cast<int>(v.size());
        data.insert(data.end(), v.begin(), v.end());
    }
    return Matrix(field, static_cast<int>(rows.size()), std::max(cols, 0), std::move(data));
}

std::vector<Symbol> Matrix::column(int c) const {
    std::vector<Symbol> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_rows(std::span<const int> idx) const {
    Matrix out(field_, static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]).begin(), cols_, out.row(static_cast<int>(i)).begin());
    return out;
}

Matrix Matrix::select_cols(std::span<const int> idx) const {
    Matrix out(field_, rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, static_cast<int>(j)) = (*this)(r, idx[j]);
    return out;
}

void Matrix::append_row(std::span<const Symbol> r) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length differs from column count");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Symbol s) { return s == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        auto dst = out.row(i);
        for (int l = 0; l < a.cols(); ++l) {
            const Symbol c = a(i, l);
            if (c == 0) continue;
            const Symbol* mrow = f.mul_row(c);
            auto src = b.row(l);
            for (int j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], mrow[src[j]]);
        }
    }
    return out;
}

std::vector<Symbol> vec_mul(std::span<const Symbol> x, const Matrix& m) {
    if (static_cast<int>(x.size()) != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
    const Field& f = m.field();
    std::vector<Symbol> out(m.cols(), 0);
    for (int l = 0; l < m.rows(); ++l) {
        if (x[l] == 0) continue;
        const Symbol* mrow = f.mul_row(x[l]);
        auto src = m.row(l);
        for (int j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], mrow[src[j]]);
    }
    return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (!(top.field() == bottom.field())) throw std::invalid_argument("matrices over different fields");
    if (top.cols() != bottom.cols() && top.rows() > 0 && bottom.rows() > 0)
        throw std::invalid_argument("vstack column mismatch");
    const int cols = top.rows() > 0 ? top.cols() : bottom.cols();
    std::vector<Symbol> data(top.entries());
    data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), cols, std::move(data));
}

namespace detail {

RrefResult rref_generic(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        auto prow = a.row(r);
        if (prow[c] != 1) {
            const Symbol* scale = f.mul_row(f.inv(prow[c]));
            for (int j = c; j < a.cols(); ++j) prow[j] = scale[prow[j]];
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Symbol* mrow = f.mul_row(f.neg(a(i, c)));
            auto dst = a.row(i);
            for (int j = c; j < a.cols(); ++j) dst[j] = f.add(dst[j], mrow[prow[j]]);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

RrefResult rref_gf2(const Matrix& m) {
    if (m.field().order() != 2) throw std::invalid_argument("rref_gf2 requires GF(2)");
    const int words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        const int w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (rows[i][w] & bit) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || !(rows[i][w] & bit)) continue;
            for (int k = w; k < words; ++k) rows[i][k] ^= rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = static_cast<Symbol>((rows[i][j / 64] >> (j % 64)) & 1);
    return {std::move(out), std::move(pivots)};
}

}  // namespace detail

RrefResult rref(const Matrix& m) {
    if (m.field().order() == 2) return detail::rref_gf2(m);
    return detail::rref_generic(m);
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix row_basis(const Matrix& m) {
    auto r = rref(m);
    std::vector<int> keep(r.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
    return r.reduced.select_rows(keep);
}

Matrix right_null_space(const Matrix& m) {
    const Field& f = m.field();
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(f, m.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis(fc, static_cast<int>(k)) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], static_cast<int>(k)) = f.neg(red(static_cast<int>(i), fc));
    }
    return basis;
}

Matrix left_null_space(const Matrix& m) { return right_null_space(m.transpose()).transpose(); }

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.cols() != b.cols()) throw std::invalid_argument("row spaces of different ambient dimension");
    return row_basis(a) == row_basis(b);
}

bool row_space_contains(const Matrix& a, std::span<const Symbol> w) {
    if (static_cast<int>(w.size()) != a.cols()) throw std::invalid_argument("vector length differs from column count");
    const int base = rank(a);
    Matrix aug = a;
    aug.append_row(w);
    return rank(aug) == base;
}

int intersection_dimension(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row spaces of different ambient dimension");
    return rank(a) + rank(b) - rank(vstack(a, b));
}

int hamming_weight(std::span<const Symbol> x) noexcept {
    return static_cast<int>(std::count_if(x.begin(), x.end(), [](Symbol s) { return s != 0; }));
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out.push_back(' ');
            out += m.field().token(m(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace grc
