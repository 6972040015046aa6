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
#pragma once

#include <array>
#include <cstdint>

#include "pfaffcubic/cubic_io.hpp"
#include "pfaffcubic/multipoly.hpp"

namespace pfc {

/// Matrix of linear forms M(x,y,z,t) = x A0 + y A1 + z A2 + t A3 with
/// each Ai a 6x6 skew-symmetric constant matrix.
class LinearMatrix {
  public:
    using Constant6 = std::array<std::array<BigComplex, 6>, 6>;

    LinearMatrix() = default;
    explicit LinearMatrix(std::array<Constant6, 4> a) : a_(std::move(a)) {}

    const Constant6& coefficient_matrix(int var) const { return a_[var]; }
    Constant6& coefficient_matrix(int var) { return a_[var]; }

    /// Entry (i, j) as a linear polynomial in x,y,z,t.
    MultiPoly entry(int i, int j) const;

    /// Numeric evaluation M(point).
    std::array<std::array<BigComplex, 6>, 6> eval(const std::vector<BigComplex>& point) const;

    /// Throws NotSkew unless every Ai is skew-symmetric entrywise (up to
    /// a bit-level tolerance 2^(-P+8) relative to the entry scale).
    void check_skew() const;

    BigFloat max_entry_abs() const;

  private:
    std::array<Constant6, 4> a_;
};

/// Residual bundle attesting Pf(M) = f and det(M) = f^2.
struct Certificate {
    BigFloat pf_residual;      // max coefficientwise |Pf(M) - f|
    BigFloat det_residual;     // max coefficientwise |det(M) - f^2|
    BigFloat sample_residual;  // max |det(M(v)) - f(v)^2| over samples
    bool pass = false;
};

/// 15-term Pfaffian of the 6x6 matrix of linear forms, by recursive
/// first-row expansion; homogeneous cubic in x,y,z,t.
MultiPoly pfaffian_symbolic(const LinearMatrix& m);

/// Degree-6 determinant, Laplace-expanded over polynomial entries.
/// Always cross-checks det = Pf^2 and throws on an internal mismatch.
MultiPoly det_symbolic(const LinearMatrix& m);

/// Numeric determinant of a 6x6 complex matrix (row reduction with
/// partial pivoting at working precision).
BigComplex numeric_det6(std::array<std::array<BigComplex, 6>, 6> m);

/// Coefficientwise and sampled certification of M against f.  Failure is
/// a pass=false certificate, never an exception.
Certificate certify(const LinearMatrix& m, const CubicSurface& f, int n_samples = 16,
                    std::uint64_t seed = 0);

}  // namespace pfc
