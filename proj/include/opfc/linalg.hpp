#ifndef OPFC_LINALG_HPP
#define OPFC_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>

namespace opfc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalues plus an orthonormal eigenvector frame: the matrix-scale
// stand-in for a spectral measure. Hermitian inputs get real eigenvalues
// sorted ascending; unitary inputs get unit-modulus eigenvalues sorted by
// ascending argument in (-pi, pi].
struct SpectralDecomposition {
    ComplexVector eigenvalues;
    Matrix frame;
    double hermiticity_defect = 0.0; // ||H - H*|| of the raw input, pre-symmetrization

    RealVector real_eigenvalues() const { return eigenvalues.real(); }
    Matrix reassemble() const {
        return frame * eigenvalues.asDiagonal() * frame.adjoint();
    }
};

// Nonincreasing singular values s_0 >= s_1 >= ... >= s_{dim-1}.
using SingularSpectrum = RealVector;

SpectralDecomposition eig_hermitian(const Matrix& H);
SpectralDecomposition eig_unitary(const Matrix& U);

SingularSpectrum singular_values(const Matrix& M);

// (sum s_n^p)^{1/p}; p = kInf means the operator norm s_0.
double schatten_norm(const Matrix& M, double p);
double schatten_norm_sv(const SingularSpectrum& s, double p);

// sup_n (1+n)^{1/p} s_n.
double weak_schatten_norm(const Matrix& M, double p);
double weak_schatten_norm_sv(const SingularSpectrum& s, double p);

double operator_norm(const Matrix& M);
double frobenius_norm(const Matrix& M);

Matrix random_hermitian(int dim, double scale, std::uint64_t seed);
Matrix random_unitary(int dim, std::uint64_t seed);

// Hermitian perturbation with a prescribed norm (operator norm when
// norm_p == kInf, Schatten-p otherwise) and optional prescribed rank.
struct PerturbationSpec {
    double target_norm = 1.0;
    std::optional<int> rank;
    double norm_p = kInf;
};
Matrix random_perturbation(int dim, const PerturbationSpec& spec, std::uint64_t seed);

} // namespace opfc

#endif
