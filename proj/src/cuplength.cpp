#include "tcrlab/cuplength.hpp"

#include <bit>

namespace tcrlab {

MultiVector MultiVector::from_coordinates(const std::vector<Rational>& coords) {
    MultiVector v{coords.size(), {}};
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) v.terms[std::uint32_t(1) << i] = coords[i];
    return v;
}

std::size_t MultiVector::degree() const {
    std::size_t deg = 0;
    for (const auto& [mask, c] : terms) deg = std::max<std::size_t>(deg, std::popcount(mask));
    return deg;
}

bool MultiVector::is_homogeneous() const {
    if (terms.empty()) return true;
    const int d = std::popcount(terms.begin()->first);
    for (const auto& [mask, c] : terms)
        if (std::popcount(mask) != d) return false;
    return true;
}

MultiVector add(const MultiVector& u, const MultiVector& v) {
    if (u.generator_count != v.generator_count) throw InputError("multivector generator counts differ");
    MultiVector out = u;
    for (const auto& [mask, c] : v.terms) {
        Rational& slot = out.terms[mask];
        slot += c;
        if (slot == 0) out.terms.erase(mask);
    }
    return out;
}

MultiVector scale(const Rational& c, const MultiVector& u) {
    MultiVector out{u.generator_count, {}};
    if (c == 0) return out;
    for (const auto& [mask, coeff] : u.terms) out.terms[mask] = c * coeff;
    return out;
}

namespace {

/* Sign of interleaving masks a and b into sorted order: parity of the number
 * of pairs (i in a, j in b) with j < i. */
int interleave_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    while (a != 0) {
        const int i = std::countr_zero(a);
        a &= a - 1;
        swaps += std::popcount(b & ((std::uint32_t(1) << i) - 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

MultiVector wedge_product(const MultiVector& u, const MultiVector& v) {
    if (u.generator_count != v.generator_count) throw InputError("multivector generator counts differ");
    MultiVector out{u.generator_count, {}};
    for (const auto& [ma, ca] : u.terms)
        for (const auto& [mb, cb] : v.terms) {
            if ((ma & mb) != 0) continue;  // repeated generator
            Rational c = ca * cb;
            if (interleave_sign(ma, mb) < 0) c = -c;
            Rational& slot = out.terms[ma | mb];
            slot += c;
            if (slot == 0) out.terms.erase(ma | mb);
        }
    return out;
}

std::size_t rational_rank(RationalMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

RationalSubspace RationalSubspace::validated(std::size_t ambient_dim, std::vector<std::vector<Rational>> basis) {
    for (const auto& v : basis)
        if (v.size() != ambient_dim) throw InputError("basis vector length != ambient dimension");
    if (rational_rank(basis) != basis.size()) throw InputError("subspace basis is linearly dependent");
    return RationalSubspace{ambient_dim, std::move(basis)};
}

RationalMatrix pullback_on_h1(const IntegerMatrix& a) {
    RationalMatrix out(a.cols(), std::vector<Rational>(a.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[j][i] = Rational(a.at(i, j));
    return out;
}

namespace {

/* Column-space basis as row vectors, by Gauss elimination over Q. */
std::vector<std::vector<Rational>> column_space_basis(const RationalMatrix& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    RationalMatrix work(cols, std::vector<Rational>(rows));  // columns as rows
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) work[j][i] = m[i][j];

    std::vector<std::vector<Rational>> basis;
    for (std::size_t r = 0; r < work.size(); ++r) {
        // reduce row r against current basis
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::size_t p = 0;
            while (basis[b][p] == 0) ++p;
            if (work[r][p] != 0) {
                Rational f = work[r][p] / basis[b][p];
                for (std::size_t j = 0; j < rows; ++j) work[r][j] -= f * basis[b][j];
            }
        }
        bool nonzero = false;
        for (const Rational& x : work[r])
            if (x != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) basis.push_back(work[r]);
    }
    return basis;
}

/* Kernel basis of an exact rational matrix (columns of the result). */
std::vector<std::vector<Rational>> rational_kernel(RationalMatrix m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational lead = m[rank][col];
        for (std::size_t j = 0; j < cols; ++j) m[rank][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

RationalSubspace zero_divisor_subspace(const IntegerMatrix& a, unsigned r) {
    if (r < 2) throw InputError("r must be >= 2");
    const std::size_t n = a.cols();
    const std::size_t ambient = n * r;
    if (ambient > kMaxAmbientDimension)
        throw InputError("cuplength oracle refuses ambient dimension > " + std::to_string(kMaxAmbientDimension));

    // Basis of im(a^T) in Q^n.
    std::vector<std::vector<Rational>> image = column_space_basis(pullback_on_h1(a));
    const std::size_t s = image.size();

    // Block-diagonal copies: candidate span of (im a^T)^r inside Q^(n r).
    std::vector<std::vector<Rational>> block;  // r*s vectors of length ambient
    for (unsigned slot = 0; slot < r; ++slot)
        for (std::size_t b = 0; b < s; ++b) {
            std::vector<Rational> v(ambient);
            for (std::size_t j = 0; j < n; ++j) v[slot * n + j] = image[b][j];
            block.push_back(std::move(v));
        }

    // Summation map H^1(X^r) -> H^1(X) applied to the candidates; its kernel
    // in candidate coordinates cuts out W.
    RationalMatrix summed(n, std::vector<Rational>(block.size()));
    for (std::size_t c = 0; c < block.size(); ++c)
        for (std::size_t j = 0; j < n; ++j)
            for (unsigned slot = 0; slot < r; ++slot) summed[j][c] += block[c][slot * n + j];

    std::vector<std::vector<Rational>> coeffs = rational_kernel(std::move(summed), block.size());

    std::vector<std::vector<Rational>> basis;
    for (const auto& coeff : coeffs) {
        std::vector<Rational> v(ambient);
        for (std::size_t c = 0; c < block.size(); ++c) {
            if (coeff[c] == 0) continue;
            for (std::size_t j = 0; j < ambient; ++j) v[j] += coeff[c] * block[c][j];
        }
        basis.push_back(std::move(v));
    }
    return RationalSubspace::validated(ambient, std::move(basis));
}

CuplengthCertificate cuplength_lower_bound(const IntegerMatrix& a, unsigned r) {
    RationalSubspace w = zero_divisor_subspace(a, r);
    MultiVector wedge{w.ambient_dim, {{0, Rational(1)}}};  // empty product = 1
    for (const auto& v : w.basis) wedge = wedge_product(wedge, MultiVector::from_coordinates(v));
    return CuplengthCertificate{w.dimension(), std::move(wedge)};
}

}  // namespace tcrlab
