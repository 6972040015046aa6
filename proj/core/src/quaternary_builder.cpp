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
#include "pfaffcubic/quaternary_builder.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/roots.hpp"
#include "pfaffcubic/tolerance.hpp"

namespace pfc {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::irreducible: return "irreducible";
        case Branch::rotated: return "rotated";
        case Branch::plane_split: return "plane_split";
    }
    return "unknown";
}

MultiPoly canonical_quaternary_poly(const CanonicalQuaternary& cq) {
    MultiPoly p(4);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    p.add_term({1, 0, 2, 0}, cq.lam8);
    p.add_term({0, 0, 3, 0}, cq.lam3);
    p.add_term({0, 0, 1, 2}, BigComplex(-1));
    p.add_term({2, 0, 1, 0}, cq.lam7);
    p.add_term({0, 3, 0, 0}, cq.lam2);
    p.add_term({2, 1, 0, 0}, cq.lam5);
    p.add_term({1, 2, 0, 0}, cq.lam6);
    p.add_term({0, 2, 1, 0}, cq.lam11);
    p.add_term({0, 1, 2, 0}, cq.lam12);
    p.add_term({0, 2, 0, 1}, cq.lam13);
    p.add_term({1, 1, 1, 0}, cq.lam17);
    p.add_term({1, 1, 0, 1}, cq.lam18);
    p.add_term({0, 1, 1, 1}, cq.lam20);
    return p;
}

CanonicalQuaternary embed_and_shear(const CubicSurface& c, const CanonicalTernary& ct) {
    // 4x4 embedding of the ternary transform: the 3x3 block occupies the
    // x,z,t rows and columns, y is fixed.
    const int slot[3] = {0, 2, 3};
    std::vector<BigComplex> e(16);
    e[1 * 4 + 1] = BigComplex(1);
    for (int r = 0; r < 3; ++r) {
        for (int cc = 0; cc < 3; ++cc) e[slot[r] * 4 + slot[cc]] = ct.transform.at(r, cc);
    }
    LinearChange embed(4, e);

    MultiPoly f = to_poly(c);
    MultiPoly g = substitute_linear(f, embed);
    BigComplex beta = g.coeff({0, 1, 0, 2});

    // Shear z -> z + beta y: the -t^2 z slice term then produces the
    // -beta y t^2 cancelling the y t^2 coefficient.
    std::vector<BigComplex> s(16);
    for (int k = 0; k < 4; ++k) s[k * 4 + k] = BigComplex(1);
    s[1 * 4 + 2] = beta;
    LinearChange shear(4, s);

    LinearChange transform = shear * embed;
    MultiPoly h = substitute_linear(f, transform);

    CanonicalQuaternary cq;
    cq.lam2 = h.coeff({0, 3, 0, 0});
    cq.lam3 = h.coeff({0, 0, 3, 0});
    cq.lam5 = h.coeff({2, 1, 0, 0});
    cq.lam6 = h.coeff({1, 2, 0, 0});
    cq.lam7 = h.coeff({2, 0, 1, 0});
    cq.lam8 = h.coeff({1, 0, 2, 0});
    cq.lam11 = h.coeff({0, 2, 1, 0});
    cq.lam12 = h.coeff({0, 1, 2, 0});
    cq.lam13 = h.coeff({0, 2, 0, 1});
    cq.lam17 = h.coeff({1, 1, 1, 0});
    cq.lam18 = h.coeff({1, 1, 0, 1});
    cq.lam20 = h.coeff({0, 1, 1, 1});
    cq.shear_beta = beta;
    cq.transform = transform;

    MultiPoly target = canonical_quaternary_poly(cq);
    BigFloat scale = max(target.max_coeff_abs(), BigFloat(1));
    BigFloat res = (h - target).max_coeff_abs();
    if (res > cert_eps() * scale) {
        throw CertificationFailed("embed_and_shear: canonical shape residual " + res.to_string());
    }
    return cq;
}

D11 compute_d11(const BigComplex& lam18, int branch) {
    BigComplex disc = lam18 * lam18 - BigComplex(4);
    BigComplex root = principal_sqrt(disc);
    if (branch < 0) root = -root;
    D11 d;
    d.value = (-lam18 + root) / BigComplex(2);
    d.branch_choice = branch < 0 ? -1 : 1;
    return d;
}

namespace {

void fill_rows(LinearMatrix::Constant6& b, const BigComplex (&rows)[6][6]) {
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) b[i][j] = rows[i][j];
    }
}

}  // namespace

PfaffianRep build_M0(const CanonicalQuaternary& cq, const D11& dd) {
    const BigComplex O;
    const BigComplex I(1);
    const BigComplex& d = dd.value;
    const BigComplex &l2 = cq.lam2, &l3 = cq.lam3, &l5 = cq.lam5, &l6 = cq.lam6, &l7 = cq.lam7,
                     &l8 = cq.lam8, &l11 = cq.lam11, &l12 = cq.lam12, &l13 = cq.lam13,
                     &l17 = cq.lam17, &l18 = cq.lam18, &l20 = cq.lam20;

    PfaffianRep rep;

    const BigComplex b0[6][6] = {
        {O, I, O, O, O, -l7},
        {-I, O, O, O, O, -l5},
        {O, O, O, -I, O, O},
        {O, O, I, O, O, O},
        {O, O, O, O, O, -I},
        {l7, l5, O, O, I, O},
    };
    fill_rows(rep.m.coefficient_matrix(0), b0);

    const BigComplex b1[6][6] = {
        {O, O, l11, O, -I, l2 - l17},
        {O, O, l2, O, O, -l6},
        {-l11, -l2, O, O, O, l12},
        {O, O, O, O, O, I},
        {I, O, O, O, O, O},
        {-l2 + l17, l6, -l12, -I, O, O},
    };
    fill_rows(rep.m.coefficient_matrix(1), b1);

    const BigComplex b2[6][6] = {
        {O, O, O, -I, O, -l8},
        {O, O, O, O, I, O},
        {O, O, O, O, O, l3},
        {I, O, O, O, O, O},
        {O, -I, O, O, O, O},
        {l8, O, -l3, O, O, O},
    };
    fill_rows(rep.m.coefficient_matrix(2), b2);

    const BigComplex b3[6][6] = {
        {O, O, l20 - d * l6, O, O, l13 + d * l5},
        {O, O, l13, O, O, -l18 - d},
        {-l20 + d * l6, -l13, O, O, d, O},
        {O, O, O, O, O, O},
        {O, O, -d, O, O, O},
        {-l13 - d * l5, l18 + d, O, O, O, O},
    };
    fill_rows(rep.m.coefficient_matrix(3), b3);

    rep.m.check_skew();
    rep.branch = Branch::irreducible;
    return rep;
}

PfaffianRep normalize_sign(PfaffianRep rep, const MultiPoly& target) {
    MultiPoly pf = pfaffian_symbolic(rep.m);
    BigFloat scale = max(target.max_coeff_abs(), BigFloat(1));
    BigFloat tol = cert_eps() * scale;
    if ((pf - target).max_coeff_abs() <= tol) {
        rep.pf_sign = 1;
        return rep;
    }
    if ((pf + target).max_coeff_abs() <= tol) {
        for (int v = 0; v < 4; ++v) {
            auto& a = rep.m.coefficient_matrix(v);
            std::swap(a[0], a[1]);
            for (int i = 0; i < 6; ++i) std::swap(a[i][0], a[i][1]);
        }
        rep.pf_sign = 1;
        return rep;
    }
    throw SignIndeterminate("pfaffian matches neither +target nor -target");
}

PfaffianRep pull_back(const PfaffianRep& rep, const LinearChange& t) {
    const LinearChange& s = t.inverse();
    PfaffianRep out = rep;
    for (int w = 0; w < 4; ++w) {
        auto& aw = out.m.coefficient_matrix(w);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                BigComplex acc;
                for (int u = 0; u < 4; ++u) acc += s.at(w, u) * rep.m.coefficient_matrix(u)[i][j];
                aw[i][j] = acc;
            }
        }
    }
    out.m.check_skew();
    return out;
}

RotationResult rotate_until_irreducible(const CubicSurface& c, std::uint64_t seed, int max_attempts) {
    MultiPoly f = to_poly(c);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<BigComplex> m;
        m.reserve(16);
        for (int k = 0; k < 16; ++k) m.push_back(BigComplex(entry(rng)));
        try {
            LinearChange r(4, m);
            MultiPoly g = substitute_linear(f, r);
            CubicSurface gc = from_poly(g);
            TernaryCubic slice = slice_y0(gc);
            if (!slice.is_zero() && find_lines(slice).empty()) {
                RotationResult out;
                out.g = gc;
                out.rotation = r;
                out.attempts = attempt;
                return out;
            }
        } catch (const Error&) {
        }
    }
    throw RotationExhausted("no rotation gave an irreducible slice; the surface likely has a plane component");
}

namespace {

MultiPoly linear_form4(const std::array<BigComplex, 4>& coeffs) {
    MultiPoly l(4);
    for (int v = 0; v < 4; ++v) {
        Expo e{0, 0, 0, 0};
        e[v] = 1;
        l.add_term(e, coeffs[v]);
    }
    return l;
}

// Tests whether the plane with the given coefficients divides f;
// returns the quotient on success.
bool try_plane(const MultiPoly& f, const std::array<BigComplex, 4>& coeffs, BigFloat scale,
               PlaneSplit* out) {
    MultiPoly l = linear_form4(coeffs);
    if (l.is_zero()) return false;
    BigFloat rem;
    MultiPoly q = divide_by_linear(f, l, &rem);
    if (rem > cert_eps() * scale) return false;
    out->plane = l;
    out->quadric = q;
    return true;
}

}  // namespace

PlaneSplit split_plane(const CubicSurface& c) {
    MultiPoly f = to_poly(c);
    BigFloat scale = max(f.max_coeff_abs(), BigFloat(1));
    PlaneSplit out;

    TernaryCubic slice = slice_y0(c);
    if (slice.is_zero() || slice.max_coeff_abs() <= cert_eps() * scale) {
        // Every monomial contains y.
        if (try_plane(f, {BigComplex(), BigComplex(1), BigComplex(), BigComplex()}, scale, &out)) {
            return out;
        }
        throw NotSplit("zero slice but y does not divide f");
    }

    // A dividing plane restricts to a line dividing the slice, so lift
    // each slice line by solving for the y-coefficient b.  Lines through
    // a multiple factor carry roughly P/3 bits of noise in their small
    // coordinates, so a cleaned copy with near-zero entries dropped is
    // tried before the raw one.
    std::vector<std::array<BigComplex, 3>> line_candidates;
    for (const ProjectiveLine& line : find_lines(slice)) {
        BigFloat top = max(max(abs(line.uvw[0]), abs(line.uvw[1])), abs(line.uvw[2]));
        std::array<BigComplex, 3> cleaned = line.uvw;
        bool changed = false;
        for (int k = 0; k < 3; ++k) {
            if (abs(cleaned[k]) < top * BigFloat::pow2(-Precision::bits() / 8)) {
                if (!cleaned[k].is_zero()) changed = true;
                cleaned[k] = BigComplex();
            }
        }
        if (changed) line_candidates.push_back(cleaned);
        line_candidates.push_back(line.uvw);
    }

    const int slot[3] = {0, 2, 3};  // slice variables x,z,t inside x,y,z,t
    for (const std::array<BigComplex, 3>& uvw : line_candidates) {
        // Pivot on the largest line coefficient.
        int piv = 0;
        for (int k = 1; k < 3; ++k) {
            if (abs(uvw[k]) > abs(uvw[piv])) piv = k;
        }
        const BigComplex& cp = uvw[piv];
        int n1 = (piv + 1) % 3, n2 = (piv + 2) % 3;

        // Substitute the pivot variable away; new ring (b, y, n1, n2).
        MultiPoly pivot_image(4);
        pivot_image.add_term({1, 1, 0, 0}, -(BigComplex(1) / cp));  // -(b/cp) y
        pivot_image.add_term({0, 0, 1, 0}, -(uvw[n1] / cp));
        pivot_image.add_term({0, 0, 0, 1}, -(uvw[n2] / cp));
        std::vector<MultiPoly> images(4, MultiPoly(4));
        images[slot[piv]] = pivot_image;
        images[1] = MultiPoly::variable(4, 1);
        images[slot[n1]] = MultiPoly::variable(4, 2);
        images[slot[n2]] = MultiPoly::variable(4, 3);
        MultiPoly r = substitute_forms(f, images);

        // Group the remainder by (y, n1, n2) exponents; each group is a
        // univariate polynomial in b that must vanish.
        std::map<std::array<int, 3>, MultiPoly> groups;
        for (const auto& [e, coeff] : r.terms()) {
            std::array<int, 3> key{e[1], e[2], e[3]};
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(key, MultiPoly(1)).first;
            it->second.add_term({e[0], 0, 0, 0}, coeff);
        }

        std::vector<BigComplex> candidates{BigComplex()};
        bool impossible = false;
        const MultiPoly* best = nullptr;
        for (const auto& [key, g] : groups) {
            if (g.max_coeff_abs() <= cert_eps() * scale * BigFloat(1024)) continue;
            if (g.degree_in(0) == 0) {
                impossible = true;
                break;
            }
            if (best == nullptr || g.degree_in(0) < best->degree_in(0)) best = &g;
        }
        if (impossible) continue;
        if (best != nullptr) {
            try {
                for (const BigComplex& b : roots_univariate(univariate_coeffs(*best))) {
                    candidates.push_back(b);
                }
            } catch (const Error&) {
            }
        }

        for (const BigComplex& b : candidates) {
            std::array<BigComplex, 4> coeffs{};
            coeffs[slot[piv]] = cp;
            coeffs[slot[n1]] = uvw[n1];
            coeffs[slot[n2]] = uvw[n2];
            coeffs[1] = b;
            if (try_plane(f, coeffs, scale, &out)) return out;
        }
    }
    throw NotSplit("no hyperplane divides f");
}

QuadricPairs quadric_to_pfaffian_pair(const MultiPoly& q) {
    BigFloat scale = max(q.max_coeff_abs(), BigFloat(1));
    BigFloat floor = cert_eps() * scale;

    // Lagrange reduction of q into a sum of at most four squares.
    std::vector<MultiPoly> squares;
    MultiPoly rem = q;
    for (int round = 0; round < 4 && rem.max_coeff_abs() > floor; ++round) {
        int best_sq = -1;
        BigFloat best_sq_abs;
        for (int k = 0; k < 4; ++k) {
            Expo e{0, 0, 0, 0};
            e[k] = 2;
            BigFloat a = abs(rem.coeff(e));
            if (a > best_sq_abs) {
                best_sq_abs = a;
                best_sq = k;
            }
        }
        if (best_sq >= 0 && best_sq_abs > floor) {
            int k = best_sq;
            Expo e{0, 0, 0, 0};
            e[k] = 2;
            BigComplex cc = rem.coeff(e);
            MultiPoly lin = rem.derivative(k) - (BigComplex(2) * cc) * MultiPoly::variable(4, k);
            MultiPoly w = MultiPoly::variable(4, k) + (BigComplex(1) / (BigComplex(2) * cc)) * lin;
            rem = rem - cc * (w * w);
            squares.push_back(principal_sqrt(cc) * w);
            continue;
        }
        // No square term: peel off the largest cross term as a product.
        int bi = -1, bj = -1;
        BigFloat best_abs;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                Expo e{0, 0, 0, 0};
                e[i] = 1;
                e[j] = 1;
                BigFloat a = abs(rem.coeff(e));
                if (a > best_abs) {
                    best_abs = a;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0 || best_abs <= floor) break;
        Expo e{0, 0, 0, 0};
        e[bi] = 1;
        e[bj] = 1;
        BigComplex cc = rem.coeff(e);
        MultiPoly li = rem.derivative(bi) - cc * MultiPoly::variable(4, bj);
        MultiPoly lj = rem.derivative(bj) - cc * MultiPoly::variable(4, bi);
        MultiPoly a = MultiPoly::variable(4, bi) + (BigComplex(1) / cc) * lj;
        MultiPoly b = MultiPoly::variable(4, bj) + (BigComplex(1) / cc) * li;
        BigComplex sc = principal_sqrt(cc);
        BigComplex half(BigFloat(0.5));
        squares.push_back((sc * half) * (a + b));
        squares.push_back((BigComplex::i() * sc * half) * (a - b));
        rem = rem - cc * (a * b);
    }

    QuadricPairs out;
    out.rank = static_cast<int>(squares.size());
    switch (out.rank) {
        case 0:
            throw Error("quadric_to_pfaffian_pair: zero quadratic form");
        case 1:
            out.l[0] = squares[0];
            out.l[1] = squares[0];
            break;
        case 2:
            out.l[0] = squares[0] + BigComplex::i() * squares[1];
            out.l[1] = squares[0] - BigComplex::i() * squares[1];
            break;
        case 3:
            out.l[0] = squares[0] + BigComplex::i() * squares[1];
            out.l[1] = squares[0] - BigComplex::i() * squares[1];
            out.l[2] = squares[2];
            out.l[3] = squares[2];
            break;
        default:
            out.l[0] = squares[0] + BigComplex::i() * squares[1];
            out.l[1] = squares[0] - BigComplex::i() * squares[1];
            out.l[2] = squares[2] + BigComplex::i() * squares[3];
            out.l[3] = squares[2] - BigComplex::i() * squares[3];
            break;
    }

    MultiPoly recon = out.l[0] * out.l[1] + out.l[2] * out.l[3];
    BigFloat res = (recon - q).max_coeff_abs();
    if (res > cert_eps() * scale * BigFloat(1024)) {
        throw CertificationFailed("quadric pairing residual " + res.to_string());
    }
    return out;
}

namespace {

void put_form(LinearMatrix& m, int i, int j, const MultiPoly& l) {
    for (int v = 0; v < 4; ++v) {
        Expo e{0, 0, 0, 0};
        e[v] = 1;
        BigComplex c = l.coeff(e);
        m.coefficient_matrix(v)[i][j] = c;
        m.coefficient_matrix(v)[j][i] = -c;
    }
}

}  // namespace

PfaffianRep block_representation(const MultiPoly& plane, const QuadricPairs& pairs) {
    PfaffianRep rep;
    put_form(rep.m, 0, 1, plane);
    put_form(rep.m, 2, 3, pairs.l[0]);
    put_form(rep.m, 4, 5, pairs.l[1]);
    put_form(rep.m, 2, 5, pairs.l[2]);
    put_form(rep.m, 3, 4, pairs.l[3]);
    rep.m.check_skew();
    rep.branch = Branch::plane_split;
    return rep;
}

}  // namespace pfc
