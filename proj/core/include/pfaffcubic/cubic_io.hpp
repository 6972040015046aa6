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
#include <string>

#include <json.hpp>

#include "pfaffcubic/multipoly.hpp"

namespace pfc {

/// Homogeneous cubic in x,y,z,t stored as the 20 coefficients
/// Theta_1..Theta_20 of the fixed monomial basis
///   x^3, y^3, z^3, t^3, x^2y, xy^2, x^2z, xz^2, x^2t, xt^2,
///   y^2z, yz^2, y^2t, yt^2, z^2t, zt^2, xyz, xyt, xzt, yzt.
struct CubicSurface {
    std::array<BigComplex, 20> theta;

    /// 1-based accessors matching the Theta numbering.
    const BigComplex& th(int k) const { return theta[k - 1]; }
    BigComplex& th(int k) { return theta[k - 1]; }

    bool is_zero() const;
};

/// Exponent tuple of the k-th (1-based) Theta monomial.
Expo theta_monomial(int k);

MultiPoly to_poly(const CubicSurface& c);
CubicSurface from_poly(const MultiPoly& p);

/// Canonical text rendering (graded-lex, full-precision coefficients).
std::string render(const CubicSurface& c);

/// Parses an arithmetic expression over x,y,z,t with +,-,*,^,
/// parentheses and complex literals ("2", "1.5e-3", "2i", "i").
/// The expansion must be homogeneous of degree exactly 3 and nonzero.
CubicSurface parse_cubic(const std::string& text);

/// Expression parser without the degree restriction (general arity-4
/// polynomial); used internally and by tests.
MultiPoly parse_poly(const std::string& text);

// JSON helpers (the wire schema stores reals as full-precision decimal
// strings).
nlohmann::json complex_to_json(const BigComplex& v);
BigComplex complex_from_json(const nlohmann::json& j);
nlohmann::json theta_to_json(const CubicSurface& c);
CubicSurface cubic_from_json(const nlohmann::json& input);

}  // namespace pfc
