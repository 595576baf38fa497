#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "tcrlab/errors.hpp"

namespace tcrlab {

using Integer = mpz_class;
using Rational = mpq_class;

/* Dense row-major matrix over arbitrary-precision integers. Entries grow
 * without bound during elimination, so fixed-width storage is never used. */
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    /* Columns of `right` appended to the columns of this matrix. */
    IntegerMatrix augmented(const IntegerMatrix& right) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);  // row dst += q * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);
    void negate_row(std::size_t i);

    bool operator==(const IntegerMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/* u * a * v = d with u, v unimodular and d diagonal, the nonzero diagonal
 * entries forming a divisibility chain. invariant_factors keeps factors
 * equal to 1; group-level records drop them. */
struct SnfDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    std::vector<Integer> invariant_factors;
};

/* Normal form of a finitely generated abelian group read off a relation
 * matrix: free rank plus the invariant factors >= 2 in a divisibility chain. */
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion_factors;

    bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
    bool operator==(const AbelianInvariants&) const = default;
};

SnfDecomposition smith_normal_form(const IntegerMatrix& a);

/* Number of nonzero invariant factors. */
std::size_t rank(const IntegerMatrix& a);

/* Invariants of Z^rows / (column lattice of `relations`). */
AbelianInvariants cokernel_invariants(const IntegerMatrix& relations);

/* Solves a * x = b over the integers; nullopt when b is outside the column
 * lattice of a. Throws InputError on a dimension mismatch. */
std::optional<std::vector<Integer>> lattice_solve(const IntegerMatrix& a, const std::vector<Integer>& b);
bool lattice_contains(const IntegerMatrix& a, const std::vector<Integer>& b);

/* Basis of the integer kernel {x : a x = 0}, one column per basis vector. */
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/* Exact determinant (Bareiss fraction-free elimination); det of 0x0 is 1. */
Integer determinant(const IntegerMatrix& a);

std::vector<Integer> mat_vec(const IntegerMatrix& a, const std::vector<Integer>& x);

}  // namespace tcrlab
