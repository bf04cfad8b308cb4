#ifndef OPFC_OPERATOR_CALCULUS_HPP
#define OPFC_OPERATOR_CALCULUS_HPP

#include "opfc/function_space.hpp"
#include "opfc/linalg.hpp"

#include <span>

namespace opfc {

// f(A) for Hermitian A through the eigendecomposition. The spectrum must
// stay inside f's working interval.
Matrix apply_hermitian(const FunctionSpec& f, const Matrix& A);
Matrix apply_hermitian(const FunctionSpec& f, const SpectralDecomposition& dec);

// f(U) for unitary U; f is a circle function evaluated at the eigenvalue
// arguments in (-pi, pi].
Matrix apply_unitary(const FunctionSpec& f, const Matrix& U);
Matrix apply_unitary(const FunctionSpec& f, const SpectralDecomposition& dec);

// sum_k coeffs[k] M^k by Horner's scheme; total for any square matrix.
Matrix apply_polynomial(std::span<const Complex> coeffs, const Matrix& M);

// exp(i t H) for Hermitian H, through the eigendecomposition.
Matrix exp_i_hermitian(const Matrix& H, double t = 1.0);
Matrix exp_i_hermitian(const SpectralDecomposition& dec, double t = 1.0);

// (f(x) - f(y)) / (x - y); at a confluent pair (|x-y| below the splitting
// tolerance) falls back to f'(x) when available, else 0 with the flag set.
struct DividedDifference {
    Complex value;
    bool confluent = false;
};
DividedDifference divided_difference(const FunctionSpec& f, double x, double y);

// f(A) - f(B) assembled as the double operator integral: the divided
// difference matrix acting as a Schur multiplier on A - B in the two
// eigenbases.
Matrix doi_first_difference(const FunctionSpec& f, const Matrix& A, const Matrix& B);

// sum_{j=0..n} (-1)^{n-j} C(n,j) f(A + jK), exact integer binomials.
Matrix delta_n(const FunctionSpec& f, const Matrix& A, const Matrix& K, int n);

// sum_{k=0..n} (-1)^{n-k} C(n,k) f(exp(ikA) U).
Matrix unitary_multiplicative_differences(const FunctionSpec& f, const Matrix& U,
                                          const Matrix& A, int n);

// Argument family for the contraction difference: `literal` walks
// T + (k/n)(T - R) as printed, `interpolating` walks R + (k/n)(T - R).
enum class ContractionMode { literal, interpolating };

Matrix contraction_differences(std::span<const Complex> coeffs, const Matrix& T,
                               const Matrix& R, int n, ContractionMode mode);
Matrix contraction_differences(const FunctionSpec& f, const Matrix& T,
                               const Matrix& R, int n, ContractionMode mode);

} // namespace opfc

#endif
