#include <doctest.h>

#include "opfc/errors.hpp"
#include "opfc/operator_calculus.hpp"
#include "opfc/rng.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace opfc;
using std::numbers::pi;

namespace {

Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Matrix rotation(double t) {
    Matrix m(2, 2);
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
}

} // namespace

TEST_CASE("apply_hermitian: hand cases") {
    FunctionSpec sq = catalog::monomial(2);
    Matrix out = apply_hermitian(sq, diag2(1.0, 2.0));
    CHECK((out - diag2(1.0, 4.0)).norm() < 1e-13);

    FunctionSpec id = catalog::monomial(1);
    Matrix a = random_hermitian(5, 1.0, 3);
    CHECK((apply_hermitian(id, a) - a).norm() <= 1e-12 * a.norm());

    // |x|^{1/2} on [[0,1],[1,0]] has eigenvalues +-1 mapping to 1, 1
    FunctionSpec root = catalog::power_alpha(0.5);
    Matrix flip(2, 2);
    flip << 0.0, 1.0, 1.0, 0.0;
    CHECK((apply_hermitian(root, flip) - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("apply_hermitian: spectrum escaping the working interval") {
    FunctionSpec root = catalog::power_alpha(0.5); // working interval [-4, 4]
    CHECK_THROWS_AS(apply_hermitian(root, diag2(10.0, 0.0)), DomainError);
    CHECK_THROWS_AS(apply_hermitian(catalog::trig_poly({{1, 1.0}}), diag2(1, 1)),
                    ParameterError);
}

TEST_CASE("apply_unitary: hand cases") {
    FunctionSpec e1 = catalog::trig_poly({{1, Complex(1.0, 0.0)}});
    Matrix u = random_unitary(4, 9);
    CHECK((apply_unitary(e1, u) - u).norm() < 1e-12);

    FunctionSpec one = catalog::trig_poly({{0, Complex(1.0, 0.0)}});
    CHECK((apply_unitary(one, u) - Matrix::Identity(4, 4)).norm() < 1e-12);

    FunctionSpec e2 = catalog::trig_poly({{2, Complex(1.0, 0.0)}});
    CHECK((apply_unitary(e2, rotation(pi / 3.0)) - rotation(2.0 * pi / 3.0)).norm() <
          1e-12);
}

TEST_CASE("apply_polynomial: hand cases") {
    std::vector<Complex> sq = {0.0, 0.0, 1.0};
    Matrix nil(2, 2);
    nil << 0.0, 1.0, 0.0, 0.0;
    CHECK(apply_polynomial(sq, nil).norm() == 0.0);

    std::vector<Complex> one = {1.0};
    CHECK((apply_polynomial(one, nil) - Matrix::Identity(2, 2)).norm() == 0.0);

    std::vector<Complex> zz = {0.0, 1.0, 1.0}; // z^2 + z
    Matrix d = diag2(0.5, 1.0 / 3.0);
    CHECK((apply_polynomial(zz, d) - diag2(0.75, 4.0 / 9.0)).norm() < 1e-15);
}

TEST_CASE("exp_i_hermitian: matches the rotation it generates") {
    Matrix gen(2, 2);
    gen << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    // exp(i t gen) for gen = [[0,-i],[i,0]] is cos(t) I + i sin(t) gen,
    // the plane rotation by -t
    for (double t : {0.3, 1.2}) {
        CHECK((exp_i_hermitian(gen, t) - rotation(-t)).norm() < 1e-13);
    }
    Matrix h = random_hermitian(6, 1.0, 77);
    Matrix e = exp_i_hermitian(h, 0.7);
    CHECK((e.adjoint() * e - Matrix::Identity(6, 6)).norm() < 1e-12);
}

TEST_CASE("divided_difference: hand cases and confluent convention") {
    FunctionSpec sq = catalog::monomial(2);
    CHECK(divided_difference(sq, 1.0, 3.0).value.real() == doctest::Approx(4.0));
    CHECK_FALSE(divided_difference(sq, 1.0, 3.0).confluent);

    auto conf = divided_difference(sq, 1.5, 1.5);
    CHECK(conf.value.real() == doctest::Approx(3.0)); // derivative 2x
    CHECK_FALSE(conf.confluent);

    FunctionSpec root = catalog::power_alpha(0.5); // no derivative provided
    auto rc = divided_difference(root, 0.25, 0.25);
    CHECK(rc.confluent);
    CHECK(rc.value == Complex(0.0, 0.0));

    FunctionSpec sine = catalog::sin_sigma(1.0);
    CHECK(std::abs(divided_difference(sine, 0.0, pi).value) < 1e-16);
}

TEST_CASE("doi_first_difference: trivial and commuting cases") {
    FunctionSpec root = catalog::power_alpha(0.5);
    Matrix a = random_hermitian(4, 1.0, 21);
    CHECK(doi_first_difference(root, a, a).norm() < 1e-12);

    const double t = 0.09;
    Matrix A = diag2(0.0, 1.0);
    Matrix B = diag2(t, 1.0);
    Matrix expected = diag2(-std::sqrt(t), 0.0); // f(A) - f(B)
    CHECK((doi_first_difference(root, A, B) - expected).norm() < 1e-12);
}

TEST_CASE("doi_first_difference: identity against direct differencing") {
    // random pairs across the catalog f-set; residual within
    // 1e-9 (1 + ||A||_F + ||B||_F)
    std::vector<FunctionSpec> fs = {catalog::monomial(2), catalog::monomial(3),
                                    catalog::power_alpha(0.5), catalog::sin_sigma(3.0)};
    int idx = 0;
    for (int dim : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 4; ++trial) {
            const FunctionSpec& f = fs[static_cast<std::size_t>(idx++ % 4)];
            const std::uint64_t s = substream(2024, {(std::uint64_t)dim, (std::uint64_t)trial});
            Matrix A = random_hermitian(dim, 1.0, s);
            A *= 1.0 / operator_norm(A);
            Matrix B = A + random_perturbation(dim, {0.25, std::nullopt, kInf}, mix64(s));
            const Matrix direct = apply_hermitian(f, A) - apply_hermitian(f, B);
            const Matrix doi = doi_first_difference(f, A, B);
            CHECK((doi - direct).norm() <= 1e-9 * (1.0 + A.norm() + B.norm()));
        }
    }
}

TEST_CASE("delta_n: polynomial annihilation and the n! K^n identity") {
    // scalar hand case: f = x^2, n = 2, a = 0, k = 1 -> 0 - 2*1 + 4 = 2
    FunctionSpec sq = catalog::monomial(2);
    Matrix a1(1, 1), k1(1, 1);
    a1(0, 0) = 0.0;
    k1(0, 0) = 1.0;
    Matrix d = delta_n(sq, a1, k1, 2);
    CHECK(d(0, 0).real() == doctest::Approx(2.0));

    // f = x^2, n = 2, arbitrary A: only the K-quadratic word survives
    Matrix A = random_hermitian(2, 1.0, 5);
    Matrix K = diag2(1.0, 2.0);
    CHECK((delta_n(sq, A, K, 2) - diag2(2.0, 8.0)).norm() < 1e-12);

    for (int n : {1, 2, 3}) {
        for (int dim : {2, 5}) {
            Matrix An = random_hermitian(dim, 0.5, substream(31, {(std::uint64_t)n, (std::uint64_t)dim}));
            Matrix Kn = random_perturbation(dim, {0.5, std::nullopt, kInf},
                                            substream(32, {(std::uint64_t)n, (std::uint64_t)dim}));
            double scale = 0.0;
            for (int j = 0; j <= n; ++j)
                scale += static_cast<double>(binomial(n, j)) *
                         std::pow(std::max(1.0, operator_norm(An + j * Kn)),
                                  static_cast<double>(n));
            // deg f < n annihilates
            for (int deg = 0; deg < n; ++deg)
                CHECK(delta_n(catalog::monomial(deg), An, Kn, n).norm() <= 1e-10 * scale);
            // delta_n(x^n) = n! K^n
            Matrix lead = delta_n(catalog::monomial(n), An, Kn, n);
            Matrix expect = Matrix::Identity(dim, dim);
            for (int j = 0; j < n; ++j) expect = (expect * Kn).eval();
            expect *= static_cast<double>(binomial(n, 1) > 0 ? 1 : 1);
            double fact = 1.0;
            for (int j = 2; j <= n; ++j) fact *= j;
            CHECK((lead - fact * expect).norm() <= 1e-10 * scale);
        }
    }
}

TEST_CASE("delta_n: telescoping recurrence") {
    FunctionSpec f = catalog::sin_sigma(2.0);
    for (int n : {2, 3}) {
        Matrix A = random_hermitian(4, 0.7, 51);
        Matrix K = random_perturbation(4, {0.3, std::nullopt, kInf}, 52);
        const Matrix lhs = delta_n(f, A, K, n);
        const Matrix rhs = delta_n(f, A + K, K, n - 1) - delta_n(f, A, K, n - 1);
        const double scale = std::max(1.0, operator_norm(A) + n * operator_norm(K));
        CHECK((lhs - rhs).norm() <= 1e-12 * scale);
    }
}

TEST_CASE("unitary_multiplicative_differences: hand cases") {
    FunctionSpec e1 = catalog::trig_poly({{1, Complex(1.0, 0.0)}});
    Matrix U = random_unitary(3, 61);

    CHECK(unitary_multiplicative_differences(e1, U, Matrix::Zero(3, 3), 2).norm() <
          1e-12);

    Matrix A = random_hermitian(3, 0.4, 62);
    const Matrix lhs = unitary_multiplicative_differences(e1, U, A, 1);
    const Matrix rhs = (exp_i_hermitian(A) - Matrix::Identity(3, 3)) * U;
    CHECK((lhs - rhs).norm() < 1e-12);

    // scalar, n = 2: e^{2it} - 2 e^{it} + 1 = (e^{it} - 1)^2
    Matrix u1(1, 1), a1(1, 1);
    u1(0, 0) = 1.0;
    const double t = 0.37;
    a1(0, 0) = t;
    const Complex got = unitary_multiplicative_differences(e1, u1, a1, 2)(0, 0);
    const Complex want = std::pow(std::polar(1.0, t) - Complex(1.0, 0.0), 2);
    CHECK(std::abs(got - want) < 1e-14);
}

TEST_CASE("contraction_differences: hand cases") {
    std::vector<Complex> z = {0.0, 1.0};
    Matrix T = 0.6 * random_unitary(3, 71);
    Matrix R = 0.6 * random_unitary(3, 72);

    for (auto mode : {ContractionMode::literal, ContractionMode::interpolating}) {
        CHECK(contraction_differences(z, T, T, 1, mode).norm() < 1e-15);
        CHECK(contraction_differences(z, T, R, 2, mode).norm() < 1e-14);
    }
    CHECK((contraction_differences(z, T, R, 1, ContractionMode::literal) - (T - R)).norm() <
          1e-14);
    CHECK((contraction_differences(z, T, R, 1, ContractionMode::interpolating) - (T - R))
              .norm() < 1e-14);

    FunctionSpec lac = catalog::lacunary(0.5, 2);
    CHECK(contraction_differences(lac, T, T, 1, ContractionMode::literal).norm() < 1e-14);
    CHECK_THROWS_AS(
        contraction_differences(catalog::power_alpha(0.5), T, R, 1, ContractionMode::literal),
        ParameterError);
}

TEST_CASE("property: commuting pairs reduce to the scalar formula") {
    FunctionSpec root = catalog::power_alpha(0.5);
    const int dim = 6;
    Matrix P = random_unitary(dim, 81);
    Rng rng(82);
    ComplexVector av(dim), bv(dim);
    for (int i = 0; i < dim; ++i) {
        av(i) = rng.uniform(-2.0, 2.0);
        bv(i) = rng.uniform(-2.0, 2.0);
    }
    Matrix A = P * av.asDiagonal() * P.adjoint();
    Matrix B = P * bv.asDiagonal() * P.adjoint();
    A = 0.5 * (A + A.adjoint());
    B = 0.5 * (B + B.adjoint());

    double expected = 0.0;
    // the shared eigenbasis makes ||f(A)-f(B)|| = max_i |f(a_i)-f(b_i)|;
    // read eigenvalue pairs off the common frame P
    for (int i = 0; i < dim; ++i)
        expected = std::max(expected, std::abs(root.evaluate(av(i).real()) -
                                               root.evaluate(bv(i).real())));
    const double got = operator_norm(apply_hermitian(root, A) - apply_hermitian(root, B));
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("property: functional calculus is unitary-conjugation covariant") {
    FunctionSpec f = catalog::sin_sigma(2.0);
    Matrix A = random_hermitian(5, 1.0, 91);
    Matrix W = random_unitary(5, 92);
    const Matrix lhs = apply_hermitian(f, (W * A * W.adjoint()).eval());
    const Matrix rhs = W * apply_hermitian(f, A) * W.adjoint();
    CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, A.norm()));
}
