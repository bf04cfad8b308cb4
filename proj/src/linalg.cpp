#include "opfc/linalg.hpp"

#include "opfc/errors.hpp"
#include "opfc/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

namespace opfc {

namespace {

void require_square_finite(const Matrix& M, const char* who) {
    if (M.rows() != M.cols() || M.rows() < 1)
        throw InputError(std::string(who) + ": matrix must be square and nonempty");
    if (!M.allFinite())
        throw InputError(std::string(who) + ": matrix has non-finite entries");
}

// Argument normalized into (-pi, pi].
double principal_arg(Complex z) {
    double a = std::arg(z);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

} // namespace

SpectralDecomposition eig_hermitian(const Matrix& H) {
    require_square_finite(H, "eig_hermitian");
    const double defect = (H - H.adjoint()).norm();
    const Matrix sym = 0.5 * (H + H.adjoint());

    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NumericError("eig_hermitian: eigendecomposition did not converge", kInf);

    SpectralDecomposition dec;
    dec.eigenvalues = solver.eigenvalues().cast<Complex>(); // ascending
    dec.frame = solver.eigenvectors();
    dec.hermiticity_defect = defect;

    const double scale = std::max(1.0, sym.norm());
    const double residual = (dec.reassemble() - sym).norm();
    if (residual > 1e-10 * scale)
        throw NumericError("eig_hermitian: reassembly residual too large", residual);
    return dec;
}

SpectralDecomposition eig_unitary(const Matrix& U) {
    require_square_finite(U, "eig_unitary");
    const int d = static_cast<int>(U.rows());
    const double deviation = (U.adjoint() * U - Matrix::Identity(d, d)).norm();
    if (deviation > 1e-10 * d) {
        std::ostringstream msg;
        msg << "eig_unitary: input is not unitary, ||U*U - I|| = " << deviation;
        throw InputError(msg.str());
    }

    // Schur form of a normal matrix is (numerically) diagonal, and the Schur
    // frame is exactly unitary, unlike general eigenvector matrices.
    Eigen::ComplexSchur<Matrix> schur(U, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw NumericError("eig_unitary: Schur decomposition did not converge", kInf);

    ComplexVector lambda = schur.matrixT().diagonal();
    Matrix frame = schur.matrixU();

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return principal_arg(lambda(i)) < principal_arg(lambda(j));
    });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(d);
    dec.frame.resize(d, d);
    for (int i = 0; i < d; ++i) {
        dec.eigenvalues(i) = lambda(order[static_cast<std::size_t>(i)]);
        dec.frame.col(i) = frame.col(order[static_cast<std::size_t>(i)]);
    }

    const double residual = (dec.reassemble() - U).norm();
    if (residual > 1e-10 * std::max(1.0, U.norm()))
        throw NumericError("eig_unitary: reassembly residual too large", residual);
    return dec;
}

SingularSpectrum singular_values(const Matrix& M) {
    require_square_finite(M, "singular_values");
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues(); // nonincreasing
}

double schatten_norm_sv(const SingularSpectrum& s, double p) {
    if (!(p >= 1.0))
        throw ParameterError("schatten_norm: p must satisfy p >= 1");
    if (p == kInf) return s.size() > 0 ? s(0) : 0.0;
    if (p == 1.0) return s.sum();
    if (p == 2.0) return s.norm();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
    return std::pow(acc, 1.0 / p);
}

double schatten_norm(const Matrix& M, double p) {
    if (!(p >= 1.0))
        throw ParameterError("schatten_norm: p must satisfy p >= 1");
    return schatten_norm_sv(singular_values(M), p);
}

double weak_schatten_norm_sv(const SingularSpectrum& s, double p) {
    if (!(p >= 1.0))
        throw ParameterError("weak_schatten_norm: p must satisfy p >= 1");
    double best = 0.0;
    for (Eigen::Index n = 0; n < s.size(); ++n)
        best = std::max(best, std::pow(1.0 + static_cast<double>(n), 1.0 / p) * s(n));
    return best;
}

double weak_schatten_norm(const Matrix& M, double p) {
    if (!(p >= 1.0))
        throw ParameterError("weak_schatten_norm: p must satisfy p >= 1");
    return weak_schatten_norm_sv(singular_values(M), p);
}

double operator_norm(const Matrix& M) { return schatten_norm(M, kInf); }

double frobenius_norm(const Matrix& M) { return M.norm(); }

Matrix random_hermitian(int dim, double scale, std::uint64_t seed) {
    if (dim < 1) throw ParameterError("random_hermitian: dim must be >= 1");
    if (!(scale > 0)) throw ParameterError("random_hermitian: scale must be positive");
    Rng rng(seed);
    Matrix G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G(i, j) = scale * rng.complex_gaussian();
    // (G + G*)/2, built entrywise so Hermiticity is exact, not approximate.
    Matrix H(dim, dim);
    for (int i = 0; i < dim; ++i) {
        H(i, i) = Complex(G(i, i).real(), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const Complex h = 0.5 * (G(i, j) + std::conj(G(j, i)));
            H(i, j) = h;
            H(j, i) = std::conj(h);
        }
    }
    return H;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw ParameterError("random_unitary: dim must be >= 1");
    Rng rng(seed);
    Matrix G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix phases so the factorization has positive R diagonal; this makes the
    // distribution Haar rather than QR-convention dependent.
    for (int j = 0; j < dim; ++j) {
        const Complex r = R(j, j);
        const double a = std::abs(r);
        const Complex phase = (a > 0) ? r / a : Complex(1, 0);
        Q.col(j) *= phase;
    }
    return Q;
}

Matrix random_perturbation(int dim, const PerturbationSpec& spec, std::uint64_t seed) {
    if (dim < 1) throw ParameterError("random_perturbation: dim must be >= 1");
    if (!(spec.target_norm > 0))
        throw ParameterError("random_perturbation: target_norm must be positive");
    if (!(spec.norm_p >= 1.0))
        throw ParameterError("random_perturbation: norm kind must have p >= 1");
    int rank = dim;
    if (spec.rank) {
        rank = *spec.rank;
        if (rank < 1 || rank > dim)
            throw ParameterError("random_perturbation: rank must lie in [1, dim]");
    }

    Matrix H = random_hermitian(dim, 1.0, seed);
    if (rank < dim) {
        SpectralDecomposition dec = eig_hermitian(H);
        RealVector lam = dec.real_eigenvalues();
        // Keep the `rank` largest by magnitude, zero the rest.
        std::vector<int> order(static_cast<std::size_t>(dim));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return std::abs(lam(i)) > std::abs(lam(j)); });
        ComplexVector kept = ComplexVector::Zero(dim);
        for (int r = 0; r < rank; ++r) {
            const int i = order[static_cast<std::size_t>(r)];
            kept(i) = lam(i);
        }
        H = dec.frame * kept.asDiagonal() * dec.frame.adjoint();
        H = 0.5 * (H + H.adjoint());
    }

    const double current = schatten_norm(H, spec.norm_p);
    if (!(current > 0))
        throw NumericError("random_perturbation: degenerate draw with zero norm", 0.0);
    return H * (spec.target_norm / current);
}

} // namespace opfc
