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
#include "pfaffcubic/verifier.hpp"

#include <random>
#include <vector>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/tolerance.hpp"

namespace pfc {

MultiPoly LinearMatrix::entry(int i, int j) const {
    MultiPoly p(4);
    for (int v = 0; v < 4; ++v) {
        Expo e{0, 0, 0, 0};
        e[v] = 1;
        p.add_term(e, a_[v][i][j]);
    }
    return p;
}

std::array<std::array<BigComplex, 6>, 6> LinearMatrix::eval(const std::vector<BigComplex>& point) const {
    std::array<std::array<BigComplex, 6>, 6> m{};
    for (int v = 0; v < 4; ++v) {
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) m[i][j] += point[v] * a_[v][i][j];
        }
    }
    return m;
}

BigFloat LinearMatrix::max_entry_abs() const {
    BigFloat s;
    for (int v = 0; v < 4; ++v) {
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) s = max(s, abs(a_[v][i][j]));
        }
    }
    return s;
}

void LinearMatrix::check_skew() const {
    BigFloat tol = BigFloat::pow2(-Precision::bits() + 8) * max(max_entry_abs(), BigFloat(1));
    for (int v = 0; v < 4; ++v) {
        for (int i = 0; i < 6; ++i) {
            if (abs(a_[v][i][i]) > tol) throw NotSkew("nonzero diagonal entry in coefficient matrix");
            for (int j = i + 1; j < 6; ++j) {
                if (abs(a_[v][i][j] + a_[v][j][i]) > tol) {
                    throw NotSkew("coefficient matrix is not skew-symmetric");
                }
            }
        }
    }
}

namespace {

// First-row recursive expansion over the surviving index list.  Pairing
// the front index with the entry at position k contributes sign
// (-1)^(k-1).
MultiPoly pf_recursive(const LinearMatrix& m, const std::vector<int>& idx) {
    if (idx.empty()) return MultiPoly::constant(4, BigComplex(1));
    MultiPoly acc(4);
    int i = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        int j = idx[k];
        std::vector<int> rest;
        for (std::size_t r = 1; r < idx.size(); ++r) {
            if (r != k) rest.push_back(idx[r]);
        }
        MultiPoly term = m.entry(i, j) * pf_recursive(m, rest);
        if (k % 2 == 0) term = -term;
        acc = acc + term;
    }
    return acc;
}

}  // namespace

MultiPoly pfaffian_symbolic(const LinearMatrix& m) {
    m.check_skew();
    return pf_recursive(m, {0, 1, 2, 3, 4, 5});
}

MultiPoly det_symbolic(const LinearMatrix& m) {
    std::vector<std::vector<MultiPoly>> grid(6, std::vector<MultiPoly>(6, MultiPoly(4)));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) grid[i][j] = m.entry(i, j);
    }
    MultiPoly det = poly_matrix_det(grid);
    MultiPoly pf = pfaffian_symbolic(m);
    BigFloat gap = (det - pf * pf).max_coeff_abs();
    BigFloat scale = max(det.max_coeff_abs(), BigFloat(1));
    if (gap > cert_eps() * scale * BigFloat(1024)) {
        throw Error("det/pfaffian cross-check failed: |det - Pf^2| = " + gap.to_string());
    }
    return det;
}

BigComplex numeric_det6(std::array<std::array<BigComplex, 6>, 6> m) {
    BigComplex det(1);
    for (int col = 0; col < 6; ++col) {
        int pivot = col;
        BigFloat best = abs(m[col][col]);
        for (int r = col + 1; r < 6; ++r) {
            BigFloat a = abs(m[r][col]);
            if (a > best) {
                best = a;
                pivot = r;
            }
        }
        if (best <= BigFloat::pow2(-Precision::bits() + 16)) return BigComplex();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 6; ++r) {
            BigComplex factor = m[r][col] / m[col][col];
            for (int c = col; c < 6; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Certificate certify(const LinearMatrix& m, const CubicSurface& f, int n_samples, std::uint64_t seed) {
    Certificate cert;
    MultiPoly target = to_poly(f);
    BigFloat scale = max(target.max_coeff_abs(), BigFloat(1));

    MultiPoly pf = pfaffian_symbolic(m);
    cert.pf_residual = (pf - target).max_coeff_abs();

    MultiPoly det = det_symbolic(m);
    cert.det_residual = (det - target * target).max_coeff_abs();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s = 0; s < n_samples; ++s) {
        std::vector<BigComplex> v;
        v.reserve(4);
        for (int k = 0; k < 4; ++k) v.push_back(BigComplex::from_double(unit(rng), unit(rng)));
        BigComplex fv = target.eval(v);
        BigComplex dv = numeric_det6(m.eval(v));
        cert.sample_residual = max(cert.sample_residual, abs(dv - fv * fv));
    }

    cert.pass = cert.pf_residual <= cert_eps() * scale &&
                cert.det_residual <= cert_eps() * scale * scale &&
                cert.sample_residual <= cert_eps() * scale * scale * BigFloat(1024);
    return cert;
}

}  // namespace pfc
