#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tcrlab/linalg.hpp"

namespace tcrlab {

/* Element of the exterior algebra on `generator_count` degree-1 generators
 * with exact rational coefficients. Terms are keyed by the bitmask of the
 * generators they use; zero coefficients are never stored. */
struct MultiVector {
    std::size_t generator_count = 0;
    std::map<std::uint32_t, Rational> terms;

    static MultiVector zero(std::size_t generators) { return MultiVector{generators, {}}; }
    static MultiVector from_coordinates(const std::vector<Rational>& coords);

    bool is_zero() const { return terms.empty(); }

    /* Degree of the highest-degree term, 0 for the zero element. */
    std::size_t degree() const;
    bool is_homogeneous() const;
};

MultiVector add(const MultiVector& u, const MultiVector& v);
MultiVector scale(const Rational& c, const MultiVector& u);

/* Graded-antisymmetric product; the sign of each term pair is the parity of
 * the transpositions interleaving the two bitmasks. */
MultiVector wedge_product(const MultiVector& u, const MultiVector& v);

/* Subspace of Q^ambient_dim spanned by exact rational basis vectors. The
 * constructor path verifies linear independence by exact rank. */
struct RationalSubspace {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rational>> basis;

    static RationalSubspace validated(std::size_t ambient_dim, std::vector<std::vector<Rational>> basis);
    std::size_t dimension() const { return basis.size(); }
};

using RationalMatrix = std::vector<std::vector<Rational>>;  // row major

std::size_t rational_rank(RationalMatrix m);

/* Pullback on first cohomology of tori induced by a: Z^n -> Z^m, i.e. the
 * transpose of a over Q (an n x m matrix). */
RationalMatrix pullback_on_h1(const IntegerMatrix& a);

/* Basis of W = { (a_1,...,a_r) : each a_i in im(a^T), sum a_i = 0 } inside
 * H^1 of the r-fold product of the source torus, dimension n*r. */
RationalSubspace zero_divisor_subspace(const IntegerMatrix& a, unsigned r);

/* Largest ambient dimension n*r the oracle accepts (term count is 2^(n*r)). */
inline constexpr std::size_t kMaxAmbientDimension = 24;

struct CuplengthCertificate {
    std::size_t lower_bound = 0;  // dim W
    MultiVector wedge;            // product of a basis of W, nonzero of degree dim W
};

/* Zero-divisor cup-length lower bound for TC_r of the map of tori induced by
 * a. For degree-1 classes a product is nonzero exactly when the factors are
 * linearly independent, so dim W realizes the maximal product length. */
CuplengthCertificate cuplength_lower_bound(const IntegerMatrix& a, unsigned r);

}  // namespace tcrlab
