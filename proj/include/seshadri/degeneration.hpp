#pragma once

// Lower bounds for very general hypersurfaces and complete intersections in
// projective space, obtained from binomial (toric) degenerations, and the
// table of values for Fano 3-folds of Picard number one.
//
// A complete intersection X^n_{d_1..d_k} degenerates to a toric variety whose
// polytope is conv(e_1, ..., e_n, -sum a_i e_i), where
//   a_i = sum_j E(i,j) d_{j+1} ... d_k
// for an exponent matrix E with 1 + sum_i E(i,j) = d_j. Its value at the
// general point is min_i b_i / b_{i+1} with b_i = a_i + ... + a_n + 1.

#include "seshadri/arith.hpp"
#include "seshadri/estimator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri {

struct CIDescriptor {
    unsigned n = 0;
    std::vector<Integer> degrees;

    bool operator==(const CIDescriptor&) const = default;
};

void validate(const CIDescriptor& desc);

/// n rows (coordinates), k columns (equations).
using ExponentMatrix = std::vector<std::vector<Integer>>;

struct ToricBound {
    Rational bound;
    std::vector<Integer> a;
    std::vector<Integer> b; // b_1 .. b_n; b_{n+1} = 1
};

ToricBound ci_toric_lower_bound(const CIDescriptor& desc, const ExponentMatrix& e);

/// Exponent matrix for the degrees c^{l_j}, each ratio b_i / b_{i+1} equal
/// to c. `reduced` is the descriptor the matrix belongs to.
struct CanonicalExponents {
    CIDescriptor reduced;
    ExponentMatrix exponents;
};

CanonicalExponents canonical_exponents(const CIDescriptor& desc, const Integer& c, std::span<const unsigned> l);

struct Chain {
    std::vector<Integer> c; // c_1 = d >= c_2 >= ... >= c_n >= 1
    Rational bound;
};

/// Best chain for X^n_d; ties go to the lexicographically smallest chain.
Chain optimize_chain(unsigned n, const Integer& d);

/// min { c_n, c_{n-1}/c_n, ..., c_1/c_2 }.
Rational chain_bound(std::span<const Integer> chain);
ExponentMatrix chain_exponents(std::span<const Integer> chain);

/// Largest integer z >= 0 with z^n <= q.
Integer integer_nth_root_floor(const Rational& q, unsigned n);

/// Best exponent matrix found for a complete intersection. For k = 1 this is
/// the chain optimum; for k >= 2 every matrix is tried when the search space
/// is small, plus the canonical matrices for every admissible (c, l).
struct ExponentSearch {
    CIDescriptor applies_to; // may have smaller degrees than the input
    ExponentMatrix exponents;
    ToricBound toric;
    bool exhaustive = false;
};

ExponentSearch best_exponents(const CIDescriptor& desc);

struct NefCertificate {
    enum class Kind { Split, Toric, Reference };

    Kind kind = Kind::Toric;
    CIDescriptor descriptor;
    std::vector<Integer> weights;

    // Toric leaves: one of chain or exponents, with the bound it gives.
    std::optional<std::vector<Integer>> chain;
    std::optional<ExponentMatrix> exponents;
    Rational bound;

    std::string citation;                // Reference leaves
    std::vector<NefCertificate> parts;   // Split nodes
};

NefCertificate toric_chain_leaf(unsigned n, const Integer& d, const Integer& weight);

/// From nef certificates for (d_1..d_k, a; m_1) and (d_1..d_k, b; m_2), one for
/// (d_1..d_k, a+b; m_1, m_2).
NefCertificate combine_nef_certificates(const NefCertificate& a, const NefCertificate& b);

/// Re-checks every leaf and every split; throws ValueMismatch on failure.
void validate_nef_certificate(const NefCertificate& cert);

struct MultipointBound {
    Integer floor;                   // c
    Rational lower;                  // c, or the chain value when it is larger (one point)
    std::vector<Integer> split;      // d_i with d_i >= (c m_i)^n
    BoundValue upper;                // (d / sum m_i^n)^(1/n)
    std::optional<NefCertificate> certificate;
    std::optional<Chain> refinement; // single point only
    bool exact = false;
};

MultipointBound multipoint_hypersurface_bound(unsigned n, const Integer& d, std::span<const Integer> m);

struct CurveWitness {
    Integer degree;
    Integer multiplicity;
};

struct FanoValue {
    Rational value;
    bool covered_by_lines = false;     // sum d_j < n + k
    std::optional<CurveWitness> curve; // sum d_j = n + k
    std::optional<ExponentMatrix> exponents;
    std::optional<Rational> toric_bound;
};

/// Value at a very general point for 2 <= d_1 <= ... <= d_k with
/// sum d_j <= n + k; throws NotFano otherwise.
FanoValue ci_fano_exact_value(const CIDescriptor& desc);

struct FanoRow {
    enum class Verification { Computed, Reference };

    int no = 0;
    int index = 0;
    std::string degree;     // (-K)^3 as printed, e.g. "8·3"
    Integer degree_value;   // (-K)^3
    std::string description;
    Rational value;
    Verification verification = Verification::Reference;
    std::optional<Rational> computed; // recomputed lower bound
    std::string method;               // how the lower bound is obtained
    std::string citation;             // what the value rests on beyond the lower bound
};

/// The 17 families of smooth Fano 3-folds with Picard number one.
std::vector<FanoRow> fano_table();

} // namespace seshadri
