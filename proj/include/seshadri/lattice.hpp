#pragma once

// Exact integer linear algebra over lattices.
//
// Hermite normal form convention (row style): H = U*A with U unimodular,
// H upper echelon, every pivot strictly positive, entries above a pivot
// reduced into [0, pivot), zero rows last. The HNF of a lattice basis is
// unique, so every basis this module hands out (kernels, quotients) is
// deterministic.

#include "seshadri/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace seshadri {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector col(std::size_t c) const;
    std::vector<IntVector> row_vectors() const;

    IntMatrix transpose() const;
    IntVector apply(std::span<const Integer> x) const;
    RationalPoint apply(std::span<const Rational> x) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix, as an integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// v / gcd(v). Throws on the zero vector.
IntVector primitive_part(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);

struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;

    std::vector<Integer> invariant_factors() const;
};

/// S = U*A*V diagonal with d_1 | d_2 | ... and nonnegative entries.
SmithForm smith_normal_form(const IntMatrix& a);

/// HNF basis of {x in Z^n : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// Projection Z^n -> Z^r onto the quotient by a saturated sublattice.
struct QuotientMap {
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    IntMatrix matrix;                    ///< r x n, surjective
    std::vector<IntVector> kernel_basis; ///< HNF basis of the saturated kernel

    IntVector apply(std::span<const Integer> x) const { return matrix.apply(x); }
    RationalPoint apply(std::span<const Rational> x) const { return matrix.apply(x); }
};

/// Quotient of Z^n by the saturation of span(generators).
QuotientMap quotient_projection(std::span<const IntVector> generators, std::size_t ambient_rank);

/// Splitting Z^n = ker(w) + Z*section for a primitive functional w.
struct KernelSplitting {
    Functional functional;
    std::vector<IntVector> kernel_basis; ///< n-1 vectors, HNF
    IntVector section;                   ///< w(section) = 1

    /// Writes x = w(x)*section + sum c_i*basis_i and returns the c_i.
    RationalPoint kernel_coordinates(std::span<const Rational> x) const;
    /// Inverse of kernel_coordinates on the level set {w = t}.
    RationalPoint lift(std::span<const Rational> coords, const Rational& t) const;

    // Rational inverse of the n x n matrix with rows (basis..., section).
    std::vector<RationalPoint> inverse_rows;
};

KernelSplitting kernel_splitting(std::span<const Integer> w);

/// Coordinates of x in the lattice spanned by an HNF basis (x must lie in
/// the rational span of the basis).
RationalPoint coordinates_in_basis(std::span<const IntVector> hnf_basis, std::span<const Rational> x);

} // namespace seshadri
