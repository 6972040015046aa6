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
#include <optional>
#include <string>
#include <vector>

#include "pfaffcubic/cubic_io.hpp"
#include "pfaffcubic/multipoly.hpp"

namespace pfc {

/// Ternary cubic in the variables (x, z, t) = the y = 0 slice of a cubic
/// surface.  Represented as an arity-3 MultiPoly with variable order
/// x -> 0, z -> 1, t -> 2.
using TernaryCubic = MultiPoly;

/// Projective line {u x + v z + w t = 0}, normalized so the
/// largest-magnitude coordinate is 1.
struct ProjectiveLine {
    std::array<BigComplex, 3> uvw;
    MultiPoly form() const;  // u x + v z + w t as an arity-3 polynomial
};

/// Projective point [x : z : t], normalized the same way.
struct ProjectivePoint {
    std::array<BigComplex, 3> coords;
    std::vector<BigComplex> as_vector() const { return {coords[0], coords[1], coords[2]}; }
};

struct Diagnostics {
    std::vector<std::string> warnings;
};

/// Classification label against the canonical-form lists: family I
/// (irreducible) or II (reducible).
struct CanonLabel {
    enum class Family { I, II };
    Family family = Family::I;
    std::string variant;                // e.g. "x^3+z^3-t^2*z" or "reducible: 2 lines"
    std::optional<BigComplex> alpha;    // parameter of the generic family-I form
    bool ambiguous = false;             // set near classification boundaries
};

/// Result of the Weierstrass-type reduction to
///   x^3 + Lam8 x z^2 + Lam3 z^3 - t^2 z + Lam7 x^2 z.
struct CanonicalTernary {
    BigComplex lam3, lam7, lam8;
    LinearChange transform;  // slice o transform = canonical form (certified)
    CanonLabel label;
};

/// Drops every y-monomial of the surface; the result may be zero
/// (signalling y | f, handled upstream).
TernaryCubic slice_y0(const CubicSurface& c);

/// The canonical target polynomial of form lam3/lam7/lam8.
MultiPoly canonical_ternary_poly(const BigComplex& lam3, const BigComplex& lam7, const BigComplex& lam8);

/// All projective lines dividing p (0 to 3, distinct).  Empty iff p is
/// irreducible over C.  Near-threshold rejects are reported as
/// IllConditioned warnings in *diag.
std::vector<ProjectiveLine> find_lines(const TernaryCubic& p, Diagnostics* diag = nullptr);

/// A flex of an irreducible ternary cubic: smooth common zero of p and
/// its Hessian.  Deterministic tie-break: maximal gradient norm, then
/// magnitude-lex of the normalized coordinates.
ProjectivePoint find_flex(const TernaryCubic& p);

/// Label from the reduced coefficients (reporting only).
CanonLabel classify_canonical(const BigComplex& lam3, const BigComplex& lam7, const BigComplex& lam8);

/// Full reduction of an irreducible slice to the canonical target, with
/// a certified Transform3.
CanonicalTernary weierstrass_reduce(const TernaryCubic& p);

}  // namespace pfc
