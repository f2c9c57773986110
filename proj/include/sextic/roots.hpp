#ifndef SEXTIC_ROOTS_HPP
#define SEXTIC_ROOTS_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

// Horner evaluation of p and p' for coefficients c[0..n] (c[k] multiplies z^k).
inline std::pair<Complex, Complex> horner2(const std::vector<Complex>& c, Complex z) {
    Complex p = 0, dp = 0;
    for (size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

// Aberth-Ehrlich simultaneous iteration. Returns all deg(p) roots with
// multiplicity; clustered multiple roots converge linearly and are handed to
// the caller for polishing.
inline std::vector<Complex> aberth_roots(std::vector<Complex> c,
                                         std::uint64_t seed = 12345) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    int n = static_cast<int>(c.size()) - 1;
    std::vector<Complex> roots;
    if (n <= 0) return roots;
    Complex lead = c.back();
    for (auto& x : c) x /= lead;

    double radius = 0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / (n - k)));
    radius = 1.0 + radius;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.1, 0.1);
    roots.resize(n);
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.41 + jitter(rng);
        roots[i] = 0.7 * radius * Complex(std::cos(ang), std::sin(ang));
    }

    for (int it = 0; it < 600; ++it) {
        double max_step = 0;
        for (int i = 0; i < n; ++i) {
            auto [p, dp] = horner2(c, roots[i]);
            if (std::abs(p) == 0.0) continue;
            Complex w;
            if (std::abs(dp) == 0.0)
                w = Complex(1e-8, 1e-8);
            else
                w = p / dp;
            Complex s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (roots[i] - roots[j]);
            Complex denom = 1.0 - w * s;
            Complex step = (std::abs(denom) < 1e-300) ? w : w / denom;
            roots[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(roots[i])));
        }
        if (max_step < 1e-15) break;
    }
    return roots;
}

} // namespace sextic

#endif
