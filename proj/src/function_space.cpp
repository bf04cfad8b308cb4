#include "opfc/function_space.hpp"

#include "opfc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace opfc {

using std::numbers::pi;

long long binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

int FunctionSpec::trig_degree() const {
    int d = 0;
    for (const auto& [k, c] : fourier) d = std::max(d, std::abs(k));
    if (!poly_coeffs.empty()) d = std::max(d, static_cast<int>(poly_coeffs.size()) - 1);
    return d;
}

void FunctionSpec::validate() const {
    if (!evaluate) throw ParameterError(name + ": missing evaluation map");
    if (class_order < 1)
        throw ParameterError(name + ": class order must be a positive integer");
    if (!(class_exponent > 0) || class_exponent < class_order - 1 ||
        class_exponent >= class_order) {
        std::ostringstream msg;
        msg << name << ": class exponent " << class_exponent
            << " must satisfy n-1 <= alpha < n with n = " << class_order;
        throw ParameterError(msg.str());
    }
    if (analytic && domain != Domain::circle)
        throw ParameterError(name + ": analytic flag requires the circle domain");
    if (domain == Domain::line && !(working_lo < working_hi))
        throw ParameterError(name + ": empty working interval");
}

std::vector<double> DifferenceGrid::dyadic_steps(int k_min, int k_max) {
    std::vector<double> t;
    for (int k = k_min; k <= k_max; ++k) t.push_back(std::ldexp(1.0, -k));
    return t;
}

DifferenceGrid DifferenceGrid::line_default(double lo, double hi, double step) {
    return DifferenceGrid{lo, hi, step, dyadic_steps(1, 14)};
}

DifferenceGrid DifferenceGrid::circle_default(double step) {
    return DifferenceGrid{-pi, pi, step, dyadic_steps(1, 14)};
}

namespace {

// n-th forward difference sum_{k=0..n} (-1)^{n-k} C(n,k) f(x + k t).
Complex forward_difference(const FunctionSpec& f, double x, double t, int n) {
    Complex acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * static_cast<double>(binomial(n, k)) * f.evaluate(x + k * t);
    }
    return acc;
}

} // namespace

double seminorm_estimate(const FunctionSpec& f, const DifferenceGrid& grid) {
    const int n = f.class_order;
    const double alpha = f.class_exponent;
    if (grid.steps.empty() || !(grid.step > 0))
        throw ParameterError("seminorm_estimate: empty grid");
    if (f.domain == Domain::line &&
        (grid.lo < f.working_lo || grid.hi > f.working_hi)) {
        std::ostringstream msg;
        msg << "seminorm_estimate: grid [" << grid.lo << ", " << grid.hi
            << "] escapes working interval of " << f.name;
        throw DomainError(msg.str());
    }
    double best = 0.0;
    for (double t : grid.steps) {
        const double weight = std::pow(t, -alpha);
        const double x_max = (f.domain == Domain::line) ? grid.hi - n * t : grid.hi;
        for (double x = grid.lo; x <= x_max + 0.5 * grid.step; x += grid.step) {
            if (f.domain == Domain::line && x + n * t > f.working_hi) break;
            best = std::max(best, std::abs(forward_difference(f, x, t, n)) * weight);
        }
    }
    return best;
}

double omega_seminorm_estimate(const FunctionSpec& f, const Modulus& omega,
                               const DifferenceGrid& grid) {
    if (grid.steps.empty() || !(grid.step > 0))
        throw ParameterError("omega_seminorm_estimate: empty grid");
    double best = 0.0;
    for (double t : grid.steps) {
        const double w = omega.evaluate(t);
        if (!(w > 0)) continue;
        const double x_max = (f.domain == Domain::line) ? grid.hi - t : grid.hi;
        for (double x = grid.lo; x <= x_max + 0.5 * grid.step; x += grid.step)
            best = std::max(best, std::abs(f.evaluate(x + t) - f.evaluate(x)) / w);
    }
    return best;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = g(a), fm = g(m), fb = g(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 48);
}

// Closed-form x * int_T^inf omega(t)/t^2 dt from the tail metadata.
double tail_integral(const Modulus& om, double from) {
    switch (om.tail) {
    case Modulus::Tail::constant:
        return om.tail_value / from;
    case Modulus::Tail::power:
        return om.tail_value * std::pow(from, om.tail_beta - 1.0) / (1.0 - om.tail_beta);
    }
    return 0.0;
}

} // namespace

double omega_star(const Modulus& om, double x) {
    if (!(x > 0)) throw ParameterError("omega_star: x must be positive");
    if (om.tail == Modulus::Tail::power && om.tail_beta >= 1.0)
        throw ParameterError("omega_star: declared tail growth t^beta with beta >= 1 diverges");

    const double T = om.tail_start;
    if (x >= T) return x * tail_integral(om, x);

    auto integrand = [&](double t) { return om.evaluate(t) / (t * t); };
    // Dyadic panels keep the adaptive rule honest when T/x is large.
    double integral = 0.0;
    double a = x;
    const double tol = 1e-10 / x; // absolute accuracy 1e-10 on omega_star itself
    while (a < T) {
        const double b = std::min(2.0 * a, T);
        integral += integrate(integrand, a, b, tol * (b - a) / (T - x));
        a = b;
    }
    return x * (integral + tail_integral(om, T));
}

std::vector<ModulusViolation> validate_modulus(const Modulus& om,
                                               const std::vector<double>& grid) {
    constexpr double slack = 1e-9;
    std::vector<ModulusViolation> out;
    if (std::abs(om.evaluate(0.0)) > slack)
        out.push_back({ModulusViolation::Kind::monotonicity, 0.0, 0.0,
                       std::abs(om.evaluate(0.0))});
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double drop = om.evaluate(grid[i]) - om.evaluate(grid[i + 1]);
        if (grid[i] <= grid[i + 1] && drop > slack)
            out.push_back({ModulusViolation::Kind::monotonicity, grid[i + 1], 0.0, drop});
    }
    const double top = grid.empty() ? 0.0 : grid.back();
    for (double x : grid) {
        for (double y : grid) {
            if (y > x || x + y > top) continue;
            const double excess = om.evaluate(x + y) - om.evaluate(x) - om.evaluate(y);
            if (excess > slack)
                out.push_back({ModulusViolation::Kind::subadditivity, x, y, excess});
        }
    }
    return out;
}

Modulus modulus_power(double alpha) {
    if (!(alpha > 0) || alpha >= 1)
        throw ParameterError("modulus_power: alpha must lie in (0, 1)");
    Modulus m;
    std::ostringstream name;
    name << "power(" << alpha << ")";
    m.name = name.str();
    m.evaluate = [alpha](double t) { return std::pow(t, alpha); };
    m.tail = Modulus::Tail::power;
    m.tail_start = 1.0;
    m.tail_value = 1.0;
    m.tail_beta = alpha;
    return m;
}

Modulus modulus_capped_linear() {
    Modulus m;
    m.name = "capped_linear";
    m.evaluate = [](double t) { return std::min(t, 1.0); };
    m.tail = Modulus::Tail::constant;
    m.tail_start = 1.0;
    m.tail_value = 1.0;
    return m;
}

namespace catalog {

namespace {

int order_for_exponent(double alpha) {
    const int n = static_cast<int>(std::floor(alpha)) + 1;
    return n;
}

// C-infinity step: 0 below 0, 1 above 1.
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

} // namespace

FunctionSpec power_alpha(double alpha) {
    if (!(alpha > 0) || alpha >= 2)
        throw ParameterError("power_alpha: alpha must lie in (0, 2)");
    FunctionSpec f;
    std::ostringstream name;
    name << "power_alpha(" << alpha << ")";
    f.name = name.str();
    f.domain = Domain::line;
    f.evaluate = [alpha](double x) { return Complex(std::pow(std::abs(x), alpha), 0.0); };
    f.class_order = order_for_exponent(alpha);
    f.class_exponent = alpha;
    f.declared_seminorm = (alpha < 1.0) ? 1.0 : 2.0; // sup attained at x = 0
    f.working_lo = -4.0;
    f.working_hi = 4.0;
    f.validate();
    return f;
}

FunctionSpec sin_sigma(double sigma) {
    if (!(sigma > 0)) throw ParameterError("sin_sigma: sigma must be positive");
    FunctionSpec f;
    std::ostringstream name;
    name << "sin_sigma(" << sigma << ")";
    f.name = name.str();
    f.domain = Domain::line;
    f.evaluate = [sigma](double x) { return Complex(std::sin(sigma * x), 0.0); };
    f.derivative = [sigma](double x) { return Complex(sigma * std::cos(sigma * x), 0.0); };
    f.class_order = 2;
    f.class_exponent = 1.0;
    f.sup_norm_hint = 1.0;
    f.exponential_type = sigma;
    f.working_lo = -64.0;
    f.working_hi = 64.0;
    f.validate();
    return f;
}

FunctionSpec xloglx() {
    FunctionSpec f;
    f.name = "xloglx";
    f.domain = Domain::line;
    // Window: 1 on [-1,1], 0 outside [-2,2], C-infinity in between, so the
    // cutoff does not change the smoothness class.
    f.evaluate = [](double x) {
        if (x == 0.0) return Complex(0.0, 0.0);
        const double w = smooth_step(2.0 - std::abs(x));
        if (w == 0.0) return Complex(0.0, 0.0);
        return Complex(w * x * std::log(std::abs(x)), 0.0);
    };
    f.class_order = 2;
    f.class_exponent = 1.0;
    f.working_lo = -4.0;
    f.working_hi = 4.0;
    f.validate();
    return f;
}

FunctionSpec trig_poly(const std::vector<std::pair<int, Complex>>& terms) {
    FunctionSpec f;
    std::ostringstream name;
    name << "trig_poly(";
    bool first = true;
    bool all_nonnegative = true;
    double coeff_sum = 0.0;
    for (const auto& [k, c] : terms) {
        if (!first) name << ",";
        name << k;
        first = false;
        if (k < 0) all_nonnegative = false;
        coeff_sum += std::abs(c);
    }
    name << ")";
    f.name = name.str();
    f.domain = Domain::circle;
    f.fourier = terms;
    f.evaluate = [terms](double theta) {
        Complex acc = 0.0;
        for (const auto& [k, c] : terms) acc += c * std::polar(1.0, k * theta);
        return acc;
    };
    f.derivative = [terms](double theta) {
        Complex acc = 0.0;
        for (const auto& [k, c] : terms)
            acc += c * Complex(0.0, static_cast<double>(k)) * std::polar(1.0, k * theta);
        return acc;
    };
    f.class_order = 1;
    f.class_exponent = 0.5;
    f.analytic = all_nonnegative;
    f.sup_norm_hint = coeff_sum;
    f.validate();
    return f;
}

FunctionSpec lacunary(double alpha, int terms) {
    if (!(alpha > 0)) throw ParameterError("lacunary: alpha must be positive");
    if (terms < 0) throw ParameterError("lacunary: term count must be nonnegative");
    std::vector<std::pair<int, Complex>> coeffs;
    for (int j = 0; j <= terms; ++j)
        coeffs.emplace_back(1 << j, Complex(std::pow(2.0, -j * alpha), 0.0));
    FunctionSpec f = trig_poly(coeffs);
    std::ostringstream name;
    name << "lacunary(" << alpha << "," << terms << ")";
    f.name = name.str();
    f.class_order = order_for_exponent(alpha);
    f.class_exponent = alpha;
    f.validate();
    return f;
}

FunctionSpec monomial(int power) {
    if (power < 0) throw ParameterError("monomial: power must be nonnegative");
    std::vector<double> coeffs(static_cast<std::size_t>(power) + 1, 0.0);
    coeffs.back() = 1.0;
    FunctionSpec f = line_polynomial(coeffs);
    std::ostringstream name;
    name << "monomial(" << power << ")";
    f.name = name.str();
    return f;
}

FunctionSpec line_polynomial(const std::vector<double>& coeffs) {
    FunctionSpec f;
    f.name = "line_polynomial";
    f.domain = Domain::line;
    f.poly_coeffs = coeffs;
    f.evaluate = [coeffs](double x) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return Complex(acc, 0.0);
    };
    f.derivative = [coeffs](double x) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 1;)
            acc = acc * x + coeffs[i] * static_cast<double>(i);
        return Complex(acc, 0.0);
    };
    const int deg = std::max(1, static_cast<int>(coeffs.size()) - 1);
    f.class_order = deg;
    f.class_exponent = deg - 0.5;
    f.working_lo = -8.0;
    f.working_hi = 8.0;
    f.validate();
    return f;
}

} // namespace catalog

std::vector<Complex> fejer_coefficients(const FunctionSpec& f, int degree) {
    if (f.domain != Domain::circle || !f.analytic || f.fourier.empty())
        throw ParameterError("fejer_coefficients: requires an analytic circle function "
                             "with known Fourier terms");
    if (degree < 0) throw ParameterError("fejer_coefficients: degree must be nonnegative");
    std::vector<Complex> out(static_cast<std::size_t>(degree) + 1, Complex(0.0, 0.0));
    const bool exact = f.trig_degree() <= degree;
    for (const auto& [k, c] : f.fourier) {
        if (k > degree) continue;
        const double weight = exact ? 1.0 : 1.0 - static_cast<double>(k) / (degree + 1.0);
        out[static_cast<std::size_t>(k)] += weight * c;
    }
    return out;
}

double polynomial_sup_error(const FunctionSpec& f, const std::vector<Complex>& coeffs,
                            int grid_points) {
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double theta = -pi + 2.0 * pi * i / grid_points;
        const Complex z = std::polar(1.0, theta);
        Complex p = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
        worst = std::max(worst, std::abs(f.evaluate(theta) - p));
    }
    return worst;
}

double circle_sup_norm(const FunctionSpec& f, int grid_points) {
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double theta = -pi + 2.0 * pi * i / grid_points;
        worst = std::max(worst, std::abs(f.evaluate(theta)));
    }
    return worst;
}

} // namespace opfc
