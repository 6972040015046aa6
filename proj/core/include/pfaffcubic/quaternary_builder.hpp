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
#include "pfaffcubic/ternary_canon.hpp"
#include "pfaffcubic/verifier.hpp"

namespace pfc {

enum class Branch { irreducible, rotated, plane_split };
const char* branch_name(Branch b);

/// Quaternary canonical shape: the Weierstrass slice
///   x^3 + Lam8 x z^2 + Lam3 z^3 - t^2 z + Lam7 x^2 z
/// plus the y-monomials
///   Lam2 y^3 + Lam5 x^2 y + Lam6 x y^2 + Lam11 y^2 z + Lam12 y z^2
///   + Lam13 y^2 t + Lam17 x y z + Lam18 x y t + Lam20 y z t.
/// The y t^2 slot is absent; the shear in embed_and_shear clears it.
struct CanonicalQuaternary {
    BigComplex lam2, lam3, lam5, lam6, lam7, lam8;
    BigComplex lam11, lam12, lam13, lam17, lam18, lam20;
    BigComplex shear_beta;
    LinearChange transform = LinearChange::identity(4);
};

MultiPoly canonical_quaternary_poly(const CanonicalQuaternary& cq);

/// Root of d^2 + Lam18 d + 1 = 0, as (-Lam18 +- sqrt(Lam18^2 - 4)) / 2
/// with the principal square root; branch is +1 or -1.
struct D11 {
    BigComplex value;
    int branch_choice = 1;
};
D11 compute_d11(const BigComplex& lam18, int branch = 1);

struct PfaffianRep {
    LinearMatrix m;
    Branch branch = Branch::irreducible;
    Certificate certificate;
    int pf_sign = 1;
};

/// Extends the certified ternary reduction to 4 variables (y fixed),
/// then shears z -> z + beta y to clear the y t^2 coefficient, and
/// extracts the twelve Lam values.  The result's transform satisfies
/// f o transform = canonical_quaternary_poly within cert_eps.
CanonicalQuaternary embed_and_shear(const CubicSurface& c, const CanonicalTernary& ct);

/// Assembles M0 = x B0 + y B1 + z B2 + t B3 from the Lam values and d;
/// uncertified and in canonical coordinates.
PfaffianRep build_M0(const CanonicalQuaternary& cq, const D11& d);

/// Ensures Pf(M) = +target by an index-0,1 row/column swap when the
/// Pfaffian comes out as -target.
PfaffianRep normalize_sign(PfaffianRep rep, const MultiPoly& target);

/// Composes the entrywise linear forms with T^-1, turning a
/// representation of f o T into a representation of f.
PfaffianRep pull_back(const PfaffianRep& rep, const LinearChange& t);

struct RotationResult {
    CubicSurface g;
    LinearChange rotation = LinearChange::identity(4);
    int attempts = 0;
};

/// Random small-integer changes of variables until the y = 0 slice of
/// the rotated surface is nonzero and irreducible.  Throws
/// RotationExhausted after max_attempts failures.
RotationResult rotate_until_irreducible(const CubicSurface& c, std::uint64_t seed,
                                        int max_attempts = 20);

struct PlaneSplit {
    MultiPoly plane;    // linear form dividing f
    MultiPoly quadric;  // f / plane
};

/// Factors f = plane * quadric, or throws NotSplit when no hyperplane
/// divides f.
PlaneSplit split_plane(const CubicSurface& c);

/// Writes a nonzero quadratic form as l1 l2 + l3 l4 over C, via
/// Lagrange diagonalization into at most four squares.
struct QuadricPairs {
    std::array<MultiPoly, 4> l{MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4)};
    int rank = 0;
};
QuadricPairs quadric_to_pfaffian_pair(const MultiPoly& q);

/// Block-diagonal representation of plane * (l1 l2 + l3 l4): a 2x2
/// block carrying the plane and a 4x4 skew block carrying the pairs.
PfaffianRep block_representation(const MultiPoly& plane, const QuadricPairs& pairs);

}  // namespace pfc
