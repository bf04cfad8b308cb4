#include "opfc/operator_calculus.hpp"

#include "opfc/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace opfc {

using std::numbers::pi;

namespace {

double principal_arg(Complex z) {
    double a = std::arg(z);
    if (a <= -pi) a += 2.0 * pi;
    return a;
}

void check_spectrum_inside(const FunctionSpec& f, const RealVector& lambda) {
    std::ostringstream offenders;
    bool bad = false;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < f.working_lo || lambda(i) > f.working_hi) {
            if (bad) offenders << ", ";
            offenders << lambda(i);
            bad = true;
        }
    }
    if (bad)
        throw DomainError("apply_hermitian: eigenvalues outside working interval of " +
                          f.name + ": " + offenders.str());
}

Matrix assemble(const SpectralDecomposition& dec, const ComplexVector& values) {
    return dec.frame * values.asDiagonal() * dec.frame.adjoint();
}

} // namespace

Matrix apply_hermitian(const FunctionSpec& f, const SpectralDecomposition& dec) {
    if (f.domain != Domain::line)
        throw ParameterError("apply_hermitian: " + f.name + " is not a line function");
    const RealVector lambda = dec.real_eigenvalues();
    check_spectrum_inside(f, lambda);
    ComplexVector values(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) values(i) = f.evaluate(lambda(i));
    return assemble(dec, values);
}

Matrix apply_hermitian(const FunctionSpec& f, const Matrix& A) {
    return apply_hermitian(f, eig_hermitian(A));
}

Matrix apply_unitary(const FunctionSpec& f, const SpectralDecomposition& dec) {
    if (f.domain != Domain::circle)
        throw ParameterError("apply_unitary: " + f.name + " is not a circle function");
    ComplexVector values(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
        values(i) = f.evaluate(principal_arg(dec.eigenvalues(i)));
    return assemble(dec, values);
}

Matrix apply_unitary(const FunctionSpec& f, const Matrix& U) {
    return apply_unitary(f, eig_unitary(U));
}

Matrix apply_polynomial(std::span<const Complex> coeffs, const Matrix& M) {
    const Eigen::Index d = M.rows();
    if (coeffs.empty()) return Matrix::Zero(d, d);
    Matrix acc = coeffs.back() * Matrix::Identity(d, d);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = (acc * M).eval();
        acc += coeffs[i] * Matrix::Identity(d, d);
    }
    return acc;
}

Matrix exp_i_hermitian(const SpectralDecomposition& dec, double t) {
    ComplexVector values(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
        values(i) = std::polar(1.0, t * dec.eigenvalues(i).real());
    return assemble(dec, values);
}

Matrix exp_i_hermitian(const Matrix& H, double t) {
    return exp_i_hermitian(eig_hermitian(H), t);
}

DividedDifference divided_difference(const FunctionSpec& f, double x, double y) {
    const double tau = 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x - y) <= tau) {
        if (f.has_derivative()) return {f.derivative(x), false};
        return {Complex(0.0, 0.0), true};
    }
    return {(f.evaluate(x) - f.evaluate(y)) / (x - y), false};
}

Matrix doi_first_difference(const FunctionSpec& f, const Matrix& A, const Matrix& B) {
    const SpectralDecomposition da = eig_hermitian(A);
    const SpectralDecomposition db = eig_hermitian(B);
    const RealVector lam = da.real_eigenvalues();
    const RealVector mu = db.real_eigenvalues();
    check_spectrum_inside(f, lam);
    check_spectrum_inside(f, mu);

    const Matrix middle = da.frame.adjoint() * (A - B) * db.frame;
    Matrix schur(lam.size(), mu.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        for (Eigen::Index j = 0; j < mu.size(); ++j)
            schur(i, j) = divided_difference(f, lam(i), mu(j)).value * middle(i, j);
    return da.frame * schur * db.frame.adjoint();
}

Matrix delta_n(const FunctionSpec& f, const Matrix& A, const Matrix& K, int n) {
    if (n < 1) throw ParameterError("delta_n: n must be a positive integer");
    const Eigen::Index d = A.rows();
    Matrix acc = Matrix::Zero(d, d);
    for (int j = 0; j <= n; ++j) {
        const double coeff =
            ((n - j) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(n, j));
        Matrix arg = A + static_cast<double>(j) * K;
        try {
            acc += coeff * apply_hermitian(f, arg);
        } catch (const DomainError& e) {
            std::ostringstream msg;
            msg << "delta_n: term j = " << j << " escaped: " << e.what();
            throw DomainError(msg.str());
        }
    }
    return acc;
}

Matrix unitary_multiplicative_differences(const FunctionSpec& f, const Matrix& U,
                                          const Matrix& A, int n) {
    if (n < 1)
        throw ParameterError("unitary_multiplicative_differences: n must be positive");
    if (f.domain != Domain::circle)
        throw ParameterError("unitary_multiplicative_differences: " + f.name +
                             " is not a circle function");
    const SpectralDecomposition da = eig_hermitian(A);
    const Eigen::Index d = U.rows();
    Matrix acc = Matrix::Zero(d, d);
    for (int k = 0; k <= n; ++k) {
        const double coeff =
            ((n - k) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(n, k));
        const Matrix rotated = exp_i_hermitian(da, static_cast<double>(k)) * U;
        acc += coeff * apply_unitary(f, rotated);
    }
    return acc;
}

Matrix contraction_differences(std::span<const Complex> coeffs, const Matrix& T,
                               const Matrix& R, int n, ContractionMode mode) {
    if (n < 1) throw ParameterError("contraction_differences: n must be positive");
    const Eigen::Index d = T.rows();
    const Matrix direction = T - R;
    Matrix acc = Matrix::Zero(d, d);
    for (int k = 0; k <= n; ++k) {
        const double coeff =
            ((n - k) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(n, k));
        const double s = static_cast<double>(k) / static_cast<double>(n);
        const Matrix arg =
            (mode == ContractionMode::literal) ? (T + s * direction).eval()
                                               : (R + s * direction).eval();
        acc += coeff * apply_polynomial(coeffs, arg);
    }
    return acc;
}

Matrix contraction_differences(const FunctionSpec& f, const Matrix& T,
                               const Matrix& R, int n, ContractionMode mode) {
    if (f.domain != Domain::circle || !f.analytic || f.fourier.empty())
        throw ParameterError("contraction_differences: " + f.name +
                             " is not an analytic polynomial on the circle");
    std::vector<Complex> coeffs(static_cast<std::size_t>(f.trig_degree()) + 1,
                                Complex(0.0, 0.0));
    for (const auto& [k, c] : f.fourier) coeffs[static_cast<std::size_t>(k)] += c;
    return contraction_differences(coeffs, T, R, n, mode);
}

} // namespace opfc
