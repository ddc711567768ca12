#include "ktl/int_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace ktl {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        assert(r.size() == cols_);
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::scalar(std::size_t n, const Int& c) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

std::vector<Int> IntMatrix::row_vec(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    assert(cols_ == o.cols_);
    IntMatrix r(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    assert(rows_ == o.rows_);
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    IntMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::row_axpy(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) -= c * at(j, k);
}

void IntMatrix::col_axpy(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) -= c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

std::vector<Int> IntMatrix::apply_row(std::span<const Int> x) const {
    assert(x.size() == rows_);
    std::vector<Int> r(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) r[j] += x[i] * at(i, j);
    }
    return r;
}

std::vector<Int> add_vec(std::span<const Int> a, std::span<const Int> b) {
    assert(a.size() == b.size());
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<Int> sub_vec(std::span<const Int> a, std::span<const Int> b) {
    assert(a.size() == b.size());
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<Int> scale_vec(std::span<const Int> a, const Int& c) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero_vec(std::span<const Int> a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

namespace {

// Position of a nonzero entry of minimal absolute value in m[t.., t..],
// if any.  Minimal-pivot selection keeps intermediate entries small, which
// is the known failure mode of naive SNF.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& m, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x == 0) continue;
            Int a = abs_int(x);
            if (!best || a < best_abs) {
                best = {{i, j}};
                best_abs = a;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f;
    f.s = m;
    f.u = IntMatrix::identity(m.rows());
    f.v = IntMatrix::identity(m.cols());
    IntMatrix& s = f.s;
    IntMatrix& u = f.u;
    IntMatrix& v = f.v;

    std::size_t t = 0;
    const std::size_t lim = std::min(m.rows(), m.cols());
    while (t < lim) {
        auto piv = min_pivot(s, t);
        if (!piv) break;
        s.swap_rows(t, piv->first);
        u.swap_rows(t, piv->first);
        s.swap_cols(t, piv->second);
        v.swap_cols(t, piv->second);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Clear column t below the pivot.
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = round_div(s.at(i, t), s.at(t, t));
                s.row_axpy(i, t, q);
                u.row_axpy(i, t, q);
                if (s.at(i, t) != 0) {
                    // Remainder is smaller than the pivot: promote it.
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = round_div(s.at(t, j), s.at(t, t));
                s.col_axpy(j, t, q);
                v.col_axpy(j, t, q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // Enforce the divisibility chain: if some remaining entry is not a
        // multiple of the pivot, fold its row in and redo the elimination.
        bool redo = false;
        for (std::size_t i = t + 1; i < s.rows() && !redo; ++i)
            for (std::size_t j = t + 1; j < s.cols() && !redo; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    s.row_axpy(t, i, Int(-1));
                    u.row_axpy(t, i, Int(-1));
                    redo = true;
                }
        if (redo) continue;

        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    f.rank = t;
    for (std::size_t i = 0; i < t; ++i) f.diag.push_back(s.at(i, i));
    return f;
}

namespace {

struct HnfBuilder {
    IntMatrix h, u;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
};

// Row HNF by gcd elimination column by column.
HnfBuilder hnf_impl(const IntMatrix& m, bool want_u) {
    HnfBuilder b;
    b.h = m;
    if (want_u) b.u = IntMatrix::identity(m.rows());
    IntMatrix& h = b.h;
    IntMatrix& u = b.u;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        // Collapse all entries in this column at rows >= r onto one row.
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (!best || abs_int(h.at(i, col)) < abs_int(h.at(*best, col))) best = i;
            }
            if (!best) break;
            h.swap_rows(r, *best);
            if (want_u) u.swap_rows(r, *best);
            bool any = false;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = round_div(h.at(i, col), h.at(r, col));
                h.row_axpy(i, r, q);
                if (want_u) u.row_axpy(i, r, q);
                if (h.at(i, col) != 0) any = true;
            }
            if (!any) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) {
            h.negate_row(r);
            if (want_u) u.negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, col), h.at(r, col));
            h.row_axpy(i, r, q);
            if (want_u) u.row_axpy(i, r, q);
        }
        b.pivot_col.push_back(col);
        ++r;
    }
    b.rank = r;
    return b;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HnfBuilder b = hnf_impl(m, true);
    HermiteForm f;
    f.h = std::move(b.h);
    f.u = std::move(b.u);
    f.pivot_col = std::move(b.pivot_col);
    f.rank = b.rank;
    return f;
}

std::vector<Int> HermiteForm::reduce(std::span<const Int> v) const {
    std::vector<Int> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rank; ++k) {
        std::size_t c = pivot_col[k];
        if (r[c] == 0) continue;
        Int q = floor_div(r[c], h.at(k, c));
        if (q == 0) continue;
        for (std::size_t j = c; j < r.size(); ++j) r[j] -= q * h.at(k, j);
    }
    return r;
}

bool HermiteForm::contains(std::span<const Int> v) const {
    return is_zero_vec(reduce(v));
}

std::optional<std::vector<Int>> HermiteForm::coordinates(std::span<const Int> v) const {
    std::vector<Int> r(v.begin(), v.end());
    std::vector<Int> c(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        std::size_t pc = pivot_col[k];
        if (r[pc] == 0) continue;
        if (r[pc] % h.at(k, pc) != 0) return std::nullopt;
        Int q = r[pc] / h.at(k, pc);
        c[k] = q;
        for (std::size_t j = pc; j < r.size(); ++j) r[j] -= q * h.at(k, j);
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return c;
}

IntMatrix left_kernel(const IntMatrix& m) {
    HermiteForm f = hermite_normal_form(m);
    std::size_t k = m.rows() - f.rank;
    IntMatrix ker(k, m.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ker.at(i, j) = f.u.at(f.rank + i, j);
    return ker;
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& m, std::span<const Int> v) {
    HermiteForm f = hermite_normal_form(m);
    auto c = f.coordinates(v);
    if (!c) return std::nullopt;
    std::vector<Int> x(m.rows());
    for (std::size_t k = 0; k < f.rank; ++k) {
        if ((*c)[k] == 0) continue;
        for (std::size_t j = 0; j < m.rows(); ++j) x[j] += (*c)[k] * f.u.at(k, j);
    }
    return x;
}

Int determinant(const IntMatrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a.at(i, k) == 0) ++i;
            if (i == n) return 0;
            a.swap_rows(k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace ktl
