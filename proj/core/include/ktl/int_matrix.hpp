#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ktl/integers.hpp"

namespace ktl {

// Dense matrix over the integers.  Row/column counts may be zero; entries are
// arbitrary precision.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix scalar(std::size_t n, const Int& c);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<const Int> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::vector<Int> row_vec(std::size_t i) const;

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;

    // Stacks `o` below `*this` (column counts must agree).
    IntMatrix vstack(const IntMatrix& o) const;
    // Places `o` to the right of `*this` (row counts must agree).
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i -= c * row j
    void row_axpy(std::size_t i, std::size_t j, const Int& c);
    void col_axpy(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::vector<Int> apply_row(std::span<const Int> x) const;  // x * M, |x| = rows()

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> add_vec(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> sub_vec(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> scale_vec(std::span<const Int> a, const Int& c);
bool is_zero_vec(std::span<const Int> a);

// Smith normal form u*m*v = s with u, v unimodular, s diagonal with
// d_i >= 0 and d_i | d_{i+1}.
struct SmithForm {
    IntMatrix u, s, v;
    std::size_t rank = 0;
    std::vector<Int> diag;  // the nonzero d_i, in order
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form h = u*m (u unimodular).  Rows of h beyond
// `rank` are zero; pivot entries are positive and entries above a pivot are
// reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_col;  // one per pivot row
    std::size_t rank = 0;

    // Canonical residue of v modulo the row lattice.
    std::vector<Int> reduce(std::span<const Int> v) const;
    bool contains(std::span<const Int> v) const;
    // Coefficients c with v = c * h (pivot rows only), if v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(std::span<const Int> v) const;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

// Basis (as rows) of { x : x * m = 0 }.
IntMatrix left_kernel(const IntMatrix& m);

// One solution x of x * m = v, if any.
std::optional<std::vector<Int>> solve_left(const IntMatrix& m, std::span<const Int> v);

// Determinant by fraction-free (Bareiss) elimination; matrix must be square.
Int determinant(const IntMatrix& m);

}  // namespace ktl
