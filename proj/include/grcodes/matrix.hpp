#ifndef GRCODES_MATRIX_HPP
#define GRCODES_MATRIX_HPP

#include <span>
#include <string>
#include <vector>

#include "grcodes/field.hpp"

namespace grc {

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(Field field, int rows, int cols);
    Matrix(Field field, int rows, int cols, std::vector<Symbol> entries);

    static Matrix identity(const Field& field, int n);
    /// Rows given as coefficient strings in the field's token alphabet.
    static Matrix parse_rows(const Field& field, std::span<const std::string> rows);

    const Field& field() const noexcept { return field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Symbol operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Symbol& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::span<const Symbol> row(int r) const noexcept {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<Symbol> row(int r) noexcept {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::vector<Symbol> column(int c) const;
    const std::vector<Symbol>& entries() const noexcept { return data_; }

    Matrix transpose() const;
    Matrix select_rows(std::span<const int> idx) const;
    Matrix select_cols(std::span<const int> idx) const;
    void append_row(std::span<const Symbol> r);
    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Symbol> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
std::vector<Symbol> vec_mul(std::span<const Symbol> x, const Matrix& m);
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination, taking the first
/// row with a nonzero entry in the leftmost remaining column as pivot.
/// Zero rows are kept at the bottom.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
/// rref with zero rows removed; the canonical basis of the row space.
Matrix row_basis(const Matrix& m);

/// Rows form a basis of {x : x M = 0}.
Matrix left_null_space(const Matrix& m);
/// Columns form a basis of {x : M x = 0}.
Matrix right_null_space(const Matrix& m);

bool row_space_equal(const Matrix& a, const Matrix& b);
bool row_space_contains(const Matrix& a, std::span<const Symbol> w);
/// dim(rowspace(a) ∩ rowspace(b)).
int intersection_dimension(const Matrix& a, const Matrix& b);

int hamming_weight(std::span<const Symbol> x) noexcept;

/// One row per line, tokens separated by single spaces.
std::string format_matrix(const Matrix& m);

namespace detail {
RrefResult rref_generic(const Matrix& m);
/// Bit-packed elimination for GF(2); same output as rref_generic.
RrefResult rref_gf2(const Matrix& m);
}  // namespace detail

}  // namespace grc

#endif  // GRCODES_MATRIX_HPP
