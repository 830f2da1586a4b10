#pragma once

#include <optional>
#include <vector>

#include "ladic/tate/series.hpp"

namespace ladic {

// Linear action T_j -> sum_i sigma_ij T_i on E<T_1..T_b>.
struct SigmaAction {
    RingPtr ring;
    std::vector<std::vector<PadicScalar>> matrix;
    bool diagonal = false;
    // alpha_1..alpha_b when diagonal (or after diagonalization)
    std::vector<PadicScalar> eigenvalues;
    // integer characteristic polynomial, low -> high, when known
    std::optional<std::vector<i64>> charpoly;

    int dim() const { return static_cast<int>(matrix.size()); }

    static SigmaAction diag(const RingPtr& ring, const std::vector<PadicScalar>& alphas);
    static SigmaAction diag_integers(const RingPtr& ring, const std::vector<i64>& alphas);
    static SigmaAction from_matrix(const RingPtr& ring, std::vector<std::vector<PadicScalar>> matrix);
    static SigmaAction from_integers(const RingPtr& ring, const std::vector<std::vector<i64>>& matrix);
};

// alpha^n = prod alpha_i^{n_i}; diagonal actions only.
PadicScalar alpha_power(const SigmaAction& sigma, const Exponent& n);

TruncatedSeries sigma_apply(const TruncatedSeries& g, const SigmaAction& sigma);

// Integer characteristic polynomial det(x - M), low -> high.
std::vector<i64> integer_charpoly(const std::vector<std::vector<i64>>& m);

// Eigen-decomposition over O_E: eigenvalues are the Hensel lifts of the
// distinct residue roots of the characteristic polynomial, eigenvectors are
// columns of the spectral projectors. Refused (NotDiagonal) unless the
// polynomial splits into roots with pairwise unit differences and the
// eigenvector matrix is invertible over O_E.
struct Diagonalization {
    SigmaAction diagonal;
    // new variables S_k = sum_j basis[k][j] T_j, and T_j = sum_k inverse[j][k] S_k
    std::vector<std::vector<PadicScalar>> basis;
    std::vector<std::vector<PadicScalar>> inverse;
};

Diagonalization diagonalize(const SigmaAction& sigma);

// Rewrite g in the eigen-coordinates S.
TruncatedSeries to_eigen_coordinates(const TruncatedSeries& g, const Diagonalization& d);

} // namespace ladic
