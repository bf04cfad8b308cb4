#ifndef OPFC_FUNCTION_SPACE_HPP
#define OPFC_FUNCTION_SPACE_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opfc {

using Complex = std::complex<double>;

enum class Domain { line, circle };

// A scalar test function together with its smoothness-class metadata.
// Circle functions take an angle in (-pi, pi] (any real angle works, the
// catalog members are 2*pi periodic); line functions are only guaranteed
// on [working_lo, working_hi].
struct FunctionSpec {
    std::string name;
    Domain domain = Domain::line;
    std::function<Complex(double)> evaluate;
    std::function<Complex(double)> derivative; // may be empty

    int class_order = 1;         // n
    double class_exponent = 0.5; // alpha, with n-1 <= alpha < n
    bool analytic = false;       // circle only: Fourier coefficients vanish for k < 0

    std::optional<double> declared_seminorm;
    std::optional<double> sup_norm_hint;
    std::optional<double> exponential_type; // line band-limited members

    double working_lo = -4.0;
    double working_hi = 4.0;

    // Sparse Fourier terms (index, coefficient); empty when unknown.
    std::vector<std::pair<int, Complex>> fourier;

    bool has_derivative() const { return static_cast<bool>(derivative); }
    bool is_polynomial() const { return !fourier.empty() || !poly_coeffs.empty(); }
    int trig_degree() const;

    // Line polynomials carry their monomial coefficients (index = power).
    std::vector<double> poly_coeffs;

    void validate() const; // throws ParameterError on inconsistent metadata
};

// Grid for difference-based seminorm estimation: base points lo, lo+step, ...
// up to hi, difference steps `steps` (dyadic by default).
struct DifferenceGrid {
    double lo = -1.0;
    double hi = 1.0;
    double step = 1e-4;
    std::vector<double> steps;

    static std::vector<double> dyadic_steps(int k_min, int k_max); // 2^-k, k_min..k_max
    static DifferenceGrid line_default(double lo, double hi, double step = 1e-4);
    static DifferenceGrid circle_default(double step = 1e-4);
};

// max over grid points x and steps t of |nth difference| / t^alpha with
// n = f.class_order. A lower bound on the true seminorm, used as its estimate.
double seminorm_estimate(const FunctionSpec& f, const DifferenceGrid& grid);

// Same estimator against an arbitrary modulus: max |f(x+t)-f(x)| / omega(t).
struct Modulus;
double omega_seminorm_estimate(const FunctionSpec& f, const Modulus& omega,
                               const DifferenceGrid& grid);

// Modulus of continuity with tail metadata. Beyond tail_start the function
// is exactly `tail_value` (constant tail) or `tail_value * t^tail_beta`
// (power tail); omega_star integrates the tail in closed form.
struct Modulus {
    std::string name;
    std::function<double(double)> evaluate;
    enum class Tail { constant, power } tail = Tail::constant;
    double tail_start = 1.0; // T
    double tail_value = 1.0; // B (constant) or C (power)
    double tail_beta = 0.0;  // power tail only; omega_star requires beta < 1
};

// omega*(x) = x * int_x^inf omega(t)/t^2 dt, adaptive Simpson on [x, T]
// plus the closed-form tail.
double omega_star(const Modulus& omega, double x);

struct ModulusViolation {
    enum class Kind { monotonicity, subadditivity } kind;
    double x = 0.0;
    double y = 0.0;    // subadditivity only
    double excess = 0.0;
};

std::vector<ModulusViolation> validate_modulus(const Modulus& omega,
                                               const std::vector<double>& grid);

Modulus modulus_power(double alpha);  // omega(t) = t^alpha, 0 < alpha < 1
Modulus modulus_capped_linear();      // omega(t) = min(t, 1)

// Exact binomial coefficients for the difference operators.
long long binomial(int n, int k);

namespace catalog {

FunctionSpec power_alpha(double alpha);             // |x|^alpha
FunctionSpec sin_sigma(double sigma);               // sin(sigma x), exponential type sigma
FunctionSpec xloglx();                              // x log|x|, smoothly windowed
FunctionSpec trig_poly(const std::vector<std::pair<int, Complex>>& terms);
FunctionSpec lacunary(double alpha, int terms);     // sum 2^{-j alpha} e^{i 2^j theta}
FunctionSpec monomial(int power);                   // x^k on the line
FunctionSpec line_polynomial(const std::vector<double>& coeffs);

} // namespace catalog

// Dense analytic coefficients of the Fejer mean of degree `degree`
// (c_k scaled by 1 - k/(degree+1)); requires an analytic circle function
// with known Fourier terms. If the function's degree is <= `degree` the
// coefficients are returned unattenuated (exact truncation, zero error).
std::vector<Complex> fejer_coefficients(const FunctionSpec& f, int degree);

// Max over an angle grid of |f(theta) - p(e^{i theta})|.
double polynomial_sup_error(const FunctionSpec& f, const std::vector<Complex>& coeffs,
                            int grid_points = 8192);

double circle_sup_norm(const FunctionSpec& f, int grid_points = 8192);

} // namespace opfc

#endif
