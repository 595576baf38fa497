#include "tcrlab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tcrlab {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("ragged row lengths in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::augmented(const IntegerMatrix& right) const {
    if (rows_ != right.rows_) throw InputError("augmented: row count mismatch");
    IntegerMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

namespace {

/* Working state: w = u * a * v is maintained by mirroring every row
 * operation on u and every column operation on v. */
struct SnfState {
    IntegerMatrix w, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        w.swap_rows(a, b);
        u.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        w.swap_cols(a, b);
        v.swap_cols(a, b);
    }
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        w.add_row_multiple(dst, src, q);
        u.add_row_multiple(dst, src, q);
    }
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        w.add_col_multiple(dst, src, q);
        v.add_col_multiple(dst, src, q);
    }
    void negate_row(std::size_t i) {
        w.negate_row(i);
        u.negate_row(i);
    }
};

/* Index of the nonzero entry of minimal |value| in w[t.., t..], if any.
 * The minimal pivot keeps coefficient growth in check. */
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntegerMatrix& w, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < w.rows(); ++i)
        for (std::size_t j = t; j < w.cols(); ++j) {
            if (w.at(i, j) == 0) continue;
            Integer a = abs(w.at(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntegerMatrix& a) {
    SnfState s{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
    const std::size_t m = a.rows(), n = a.cols();

    std::size_t t = 0;
    while (t < m && t < n) {
        auto pivot = find_pivot(s.w, t);
        if (!pivot) break;  // remaining submatrix is zero
        s.swap_rows(t, pivot->first);
        s.swap_cols(t, pivot->second);

        bool settled = false;
        while (!settled) {
            settled = true;

            // Reduce column t; a nonzero remainder becomes the smaller pivot.
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.w.at(i, t) == 0) continue;
                Integer q = s.w.at(i, t) / s.w.at(t, t);  // truncated: |remainder| < |pivot|
                s.add_row_multiple(i, t, -q);
                if (s.w.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;

            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.w.at(t, j) == 0) continue;
                Integer q = s.w.at(t, j) / s.w.at(t, t);
                s.add_col_multiple(j, t, -q);
                if (s.w.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;

            // Pivot must divide the whole remaining submatrix so that the
            // diagonal forms a divisibility chain. Pulling an offending row
            // into row t strictly shrinks the pivot on the next pass.
            for (std::size_t i = t + 1; i < m && settled; ++i)
                for (std::size_t j = t + 1; j < n && settled; ++j) {
                    if (s.w.at(i, j) % s.w.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        settled = false;
                    }
                }
        }

        if (s.w.at(t, t) < 0) s.negate_row(t);  // sign normalized into u
        ++t;
    }

    SnfDecomposition out{std::move(s.u), std::move(s.w), std::move(s.v), {}};
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        if (out.d.at(i, i) == 0) break;
        out.invariant_factors.push_back(out.d.at(i, i));
    }
    return out;
}

std::size_t rank(const IntegerMatrix& a) { return smith_normal_form(a).invariant_factors.size(); }

AbelianInvariants cokernel_invariants(const IntegerMatrix& relations) {
    SnfDecomposition snf = smith_normal_form(relations);
    AbelianInvariants inv;
    inv.free_rank = relations.rows() - snf.invariant_factors.size();
    for (const Integer& f : snf.invariant_factors)
        if (f > 1) inv.torsion_factors.push_back(f);
    return inv;
}

std::optional<std::vector<Integer>> lattice_solve(const IntegerMatrix& a, const std::vector<Integer>& b) {
    if (b.size() != a.rows()) throw InputError("lattice_solve: vector length != matrix rows");
    SnfDecomposition snf = smith_normal_form(a);

    // a x = b  <=>  d y = u b with x = v y.
    std::vector<Integer> c = mat_vec(snf.u, b);
    std::vector<Integer> y(a.cols());
    const std::size_t diag = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer& di = i < diag ? snf.d.at(i, i) : Integer(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return mat_vec(snf.v, y);
}

bool lattice_contains(const IntegerMatrix& a, const std::vector<Integer>& b) {
    return lattice_solve(a, b).has_value();
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
    SnfDecomposition snf = smith_normal_form(a);
    const std::size_t r = snf.invariant_factors.size();
    // d has zero columns past the first r; the matching columns of v span the kernel.
    IntegerMatrix basis(a.cols(), a.cols() - r);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = r; j < a.cols(); ++j) basis.at(i, j - r) = snf.v.at(i, j);
    return basis;
}

Integer determinant(const IntegerMatrix& a) {
    if (!a.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntegerMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_with = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with == k) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::vector<Integer> mat_vec(const IntegerMatrix& a, const std::vector<Integer>& x) {
    if (x.size() != a.cols()) throw InputError("mat_vec: vector length != matrix cols");
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

}  // namespace tcrlab
