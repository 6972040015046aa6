/*
 * Copyright 2026 The pfaffcubic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pfaffcubic/roots.hpp"

#include <cmath>

#include "pfaffcubic/tolerance.hpp"

namespace pfc {

BigComplex eval_univariate(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

BigComplex eval_derivative(const std::vector<BigComplex>& c, const BigComplex& z) {
    BigComplex acc;
    for (std::size_t k = c.size() - 1; k >= 1; --k) acc = acc * z + c[k] * BigComplex(static_cast<long>(k));
    return acc;
}

}  // namespace

std::vector<BigComplex> roots_univariate(const std::vector<BigComplex>& coeffs, int max_iter) {
    if (coeffs.size() < 2) throw Error("roots_univariate: degree must be >= 1");
    const std::size_t n = coeffs.size() - 1;
    if (abs(coeffs[n]) <= zero_eps()) throw LeadingZero("roots_univariate: leading coefficient vanishes");

    // Cauchy-style radius bound.
    BigFloat radius(1);
    for (std::size_t k = 0; k < n; ++k) {
        BigFloat q = abs(coeffs[k]) / abs(coeffs[n]);
        if (q > radius) radius = q;
    }
    radius = radius + BigFloat(1);

    // Initial guesses on a slightly irrational spiral to break symmetry.
    std::vector<BigComplex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.39996;
        double scale = 0.5 + 0.5 * (static_cast<double>(k) + 1.0) / static_cast<double>(n);
        z[k] = BigComplex(radius * BigFloat(scale * std::cos(angle)), radius * BigFloat(scale * std::sin(angle)));
    }

    // Absolute magnitude bound for p evaluated near z, used to detect the
    // residual floor at multiple roots.
    auto eval_bound = [&](const BigComplex& at) {
        BigFloat m = max(abs(at), BigFloat(1));
        BigFloat acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + abs(*it);
        return acc;
    };

    const BigFloat stop = BigFloat::pow2(-Precision::bits() + 32) * radius;
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            BigComplex p = eval_univariate(coeffs, z[k]);
            if (abs(p) <= BigFloat::pow2(-Precision::bits() + 16) * eval_bound(z[k])) {
                done[k] = true;
                continue;
            }
            BigComplex dp = eval_derivative(coeffs, z[k]);
            BigComplex newton;
            if (abs(dp) <= BigFloat::pow2(-Precision::bits() + 16)) {
                // At a critical point: nudge off it.
                newton = BigComplex(BigFloat::pow2(-8), BigFloat::pow2(-9));
            } else {
                newton = p / dp;
            }
            BigComplex repulse;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                BigComplex diff = z[k] - z[j];
                if (abs(diff) <= BigFloat::pow2(-Precision::bits() + 16)) {
                    diff = BigComplex(BigFloat::pow2(-Precision::bits() + 20), BigFloat());
                }
                repulse += BigComplex(1) / diff;
            }
            BigComplex denom = BigComplex(1) - newton * repulse;
            BigComplex corr = abs(denom) <= BigFloat::pow2(-Precision::bits() + 16) ? newton : newton / denom;
            z[k] -= corr;
            if (abs(corr) < stop * max(abs(z[k]), BigFloat(1))) {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) return z;
    }
    throw NoConvergence("roots_univariate: no convergence after iteration cap");
}

}  // namespace pfc
