#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "berez/invariants.hpp"

namespace berez {

/// Rational spectrum of a diagonalizable even operator: p even eigenvalues
/// and q odd ones.
struct EigenData {
    std::vector<Rational> lambdas;
    std::vector<Rational> mus;

    Dims dims() const {
        return Dims{static_cast<int>(lambdas.size()), static_cast<int>(mus.size())};
    }
};

/// Formal power series of prod (1 + l_i z) / prod (1 + m_a z) to order max_k;
/// the coefficient-by-coefficient ground truth for the characteristic series.
std::vector<Rational> eigen_char_series(const EigenData& e, int max_k);

Supermatrix diag_supermatrix(const EigenData& e, int n_generators);

/// T diag(e) T^{-1}; requires T to have an invertible body.
Supermatrix conjugated(const EigenData& e, const Supermatrix& t);

/// Basis monomial of the k-th exterior power: strictly increasing even
/// indices (1..p) wedged with weakly increasing odd indices (1..q).
struct ExteriorBasisVector {
    std::vector<int> even_indices;
    std::vector<int> odd_indices;

    int weight() const {
        return static_cast<int>(even_indices.size() + odd_indices.size());
    }
    int parity() const { return static_cast<int>(odd_indices.size()) % 2; }
};

std::vector<ExteriorBasisVector> exterior_basis(Dims dims, int k);
long exterior_basis_size(Dims dims, int k);

/// Supertrace of the operator induced by A on the k-th exterior power,
/// computed by brute-force expansion of wedge monomials with the graded
/// sign rule. Independent of the trace-recurrence pipeline; must agree
/// with char_series(A).at(k). Refuses bases larger than 10^4 vectors.
GrassmannElement exterior_power_trace(const Supermatrix& a, int k);

/// Seeded factories for test matrices. All draws are deterministic functions
/// of the seed (no library-dependent distributions), bodies are small
/// integers and souls single-monomial perturbations with small rational
/// coefficients.
class MatrixSampler {
public:
    explicit MatrixSampler(std::uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi); // inclusive
    Rational small_rational();     // nonzero, |num| <= 3, den <= 3

    /// Random even supermatrix: integer bodies in [-9, 9] on the diagonal
    /// blocks plus optional soul monomials everywhere parity allows.
    Supermatrix even_supermatrix(Dims dims, int n_generators, bool with_souls = true);

    /// Zero-body matrix (valid input for the exponential).
    Supermatrix soul_supermatrix(Dims dims, int n_generators);

    /// Invertible-body conjugator: identity plus integer strict-upper entries
    /// in the diagonal blocks plus soul perturbations.
    Supermatrix unit_conjugator(Dims dims, int n_generators);

    /// Distinct nonzero eigenvalues with no lambda equal to any mu.
    EigenData eigen_data(Dims dims);

private:
    GrassmannElement soul_monomial(int n_generators, bool odd);

    std::mt19937_64 rng_;
};

} // namespace berez
