#ifndef OPFC_RNG_HPP
#define OPFC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace opfc {

// splitmix64 finalizer; used to derive independent substreams from
// (seed, path...) so that parallel and serial trial orders see the
// same random values.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(seed);
    for (std::uint64_t p : path) s = mix64(s ^ mix64(p + 0x632be59bd9b4e019ULL));
    return s;
}

// Deterministic Gaussian/uniform source. Box-Muller on top of mt19937_64
// keeps the stream independent of the standard library's distribution
// implementations, so seeded runs are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // Standard complex Gaussian: E|z|^2 = 1.
    std::complex<double> complex_gaussian() {
        const double inv_sqrt2 = 0.70710678118654752440;
        return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace opfc

#endif
