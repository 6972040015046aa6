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
#include "pfaffcubic/ternary_canon.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/roots.hpp"

namespace pfc {

namespace {

/// Normalize a projective tuple: divide by the largest-magnitude entry.
template <std::size_t N>
void normalize_projective(std::array<BigComplex, N>& v) {
    std::size_t best = 0;
    BigFloat bm = abs(v[0]);
    for (std::size_t k = 1; k < N; ++k) {
        BigFloat m = abs(v[k]);
        if (m > bm) {
            bm = m;
            best = k;
        }
    }
    BigComplex pivot = v[best];
    for (auto& c : v) c = c / pivot;
}

template <std::size_t N>
bool projectively_close(const std::array<BigComplex, N>& a, const std::array<BigComplex, N>& b,
                        const BigFloat& tol) {
    for (std::size_t k = 0; k < N; ++k) {
        if (abs(a[k] - b[k]) > tol) return false;
    }
    return true;
}

/// Roots of an arity-2 polynomial in its second variable after fixing the
/// first, or of an arity-1 polynomial.  Deflates near-zero leading
/// coefficients.
std::vector<BigComplex> robust_roots(std::vector<BigComplex> coeffs, const BigFloat& scale) {
    BigFloat floor = zero_eps() * max(scale, BigFloat(1));
    while (!coeffs.empty() && abs(coeffs.back()) <= floor) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    return roots_univariate(coeffs);
}

std::vector<BigComplex> eval_coeffs_at(const std::vector<MultiPoly>& coeffs,
                                       const std::vector<BigComplex>& point) {
    std::vector<BigComplex> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.eval(point));
    return out;
}

}  // namespace

MultiPoly ProjectiveLine::form() const {
    MultiPoly l(3);
    l.add_term({1, 0, 0, 0}, uvw[0]);
    l.add_term({0, 1, 0, 0}, uvw[1]);
    l.add_term({0, 0, 1, 0}, uvw[2]);
    return l;
}

TernaryCubic slice_y0(const CubicSurface& c) {
    // Slice slots: Theta indices {1,3,4,7,8,9,10,15,16,19}; the exponent
    // tuples lose their (zero) y component.
    MultiPoly p(3);
    for (int k : {1, 3, 4, 7, 8, 9, 10, 15, 16, 19}) {
        Expo e4 = theta_monomial(k);
        p.add_term({e4[0], e4[2], e4[3], 0}, c.th(k));
    }
    return p;
}

MultiPoly canonical_ternary_poly(const BigComplex& lam3, const BigComplex& lam7, const BigComplex& lam8) {
    MultiPoly p(3);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    p.add_term({1, 2, 0, 0}, lam8);
    p.add_term({0, 3, 0, 0}, lam3);
    p.add_term({0, 1, 2, 0}, BigComplex(-1));
    p.add_term({2, 1, 0, 0}, lam7);
    return p;
}

// ---------------------------------------------------------------------------
// find_lines

namespace {

/// Validates the chart-u=1 candidate line x + v z + w t by substituting
/// x = -(v z + w t); returns the max residual coefficient magnitude.
BigFloat chart1_residual(const TernaryCubic& p, const BigComplex& v, const BigComplex& w) {
    MultiPoly x_img(3);
    x_img.add_term({0, 1, 0, 0}, -v);
    x_img.add_term({0, 0, 1, 0}, -w);
    MultiPoly r = substitute_forms(p, {x_img, MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)});
    return r.max_coeff_abs();
}

BigFloat chart2_residual(const TernaryCubic& p, const BigComplex& w) {
    MultiPoly z_img(3);
    z_img.add_term({0, 0, 1, 0}, -w);
    MultiPoly r = substitute_forms(p, {MultiPoly::variable(3, 0), z_img, MultiPoly::variable(3, 2)});
    return r.max_coeff_abs();
}

}  // namespace

std::vector<ProjectiveLine> find_lines(const TernaryCubic& p, Diagnostics* diag) {
    if (p.arity() != 3) throw ArityMismatch("find_lines: arity-3 polynomial required");
    BigFloat scale = max(p.max_coeff_abs(), BigFloat(1));
    const BigFloat accept = cert_eps() * scale;
    const BigFloat warn_band = accept * BigFloat(1000);
    std::vector<ProjectiveLine> lines;
    std::vector<std::pair<std::array<BigComplex, 3>, BigFloat>> accepted;

    auto consider = [&](std::array<BigComplex, 3> uvw, const BigFloat& residual) {
        if (residual <= accept) {
            normalize_projective(uvw);
            for (const auto& [prev, r] : accepted) {
                if (projectively_close(prev, uvw, cert_eps() * BigFloat(10))) return;
            }
            accepted.emplace_back(uvw, residual);
        } else if (residual <= warn_band && diag != nullptr) {
            diag->warnings.push_back("IllConditioned: near-threshold line candidate rejected");
        }
    };

    // Chart u = 1: substitute x = -(v z + w t); the z,t coefficients are
    // arity-2 polynomials in (v, w).
    {
        MultiPoly x_img(4);  // vars (v, w, z, t)
        x_img.add_term({1, 0, 1, 0}, BigComplex(-1));
        x_img.add_term({0, 1, 0, 1}, BigComplex(-1));
        MultiPoly z_img = MultiPoly::variable(4, 2);
        MultiPoly t_img = MultiPoly::variable(4, 3);
        MultiPoly q = substitute_forms(p, {x_img, z_img, t_img});
        // Group by the z,t exponents (which sum to 3).
        std::array<MultiPoly, 4> cs{MultiPoly(2), MultiPoly(2), MultiPoly(2), MultiPoly(2)};
        for (const auto& [e, c] : q.terms()) cs[e[3]].add_term({e[0], e[1], 0, 0}, c);
        std::vector<const MultiPoly*> nz;
        for (const auto& c : cs) {
            if (c.max_coeff_abs() > zero_eps() * scale) nz.push_back(&c);
        }
        std::vector<BigComplex> v_candidates;
        auto add_v_roots = [&](const MultiPoly& r) {
            if (r.is_zero()) return;
            if (r.degree_in(0) < 1) return;
            auto cv = coeffs_in_var(r, 0);
            std::vector<BigComplex> uc;
            for (auto& c : cv) uc.push_back(c.coeff({0, 0, 0, 0}));
            for (auto& root : robust_roots(uc, r.max_coeff_abs())) v_candidates.push_back(root);
        };
        for (std::size_t a = 0; a + 1 < nz.size() && v_candidates.size() < 40; ++a) {
            const MultiPoly& pa = *nz[a];
            const MultiPoly& pb = *nz[a + 1];
            if (pa.degree_in(1) >= 1 || pb.degree_in(1) >= 1) {
                if (pa.degree_in(1) >= 1 && pb.degree_in(1) >= 1) {
                    add_v_roots(resultant(pa, pb, 1));
                } else {
                    add_v_roots(pa.degree_in(1) >= 1 ? pb : pa);
                }
            }
        }
        // Lines independent of w need no resultant: all coefficient polys
        // constant in w share a v-root.
        if (nz.size() == 1) add_v_roots(*nz[0]);
        for (const auto& v0 : v_candidates) {
            bool got_w = false;
            for (const MultiPoly* c : nz) {
                auto wc = eval_coeffs_at(coeffs_in_var(*c, 1), {v0, BigComplex()});
                auto ws = robust_roots(wc, scale);
                for (const auto& w0 : ws) {
                    got_w = true;
                    consider({BigComplex(1), v0, w0}, chart1_residual(p, v0, w0));
                }
                if (got_w) break;
            }
            if (!got_w) {
                // Candidate where every coefficient is constant in w: the
                // line must then have w = 0.
                consider({BigComplex(1), v0, BigComplex()}, chart1_residual(p, v0, BigComplex()));
            }
        }
    }

    // Chart u = 0, v = 1: line z + w t; substitute z = -w t.
    {
        MultiPoly z_img(4);  // vars (x, w, t) packed as (x, w, t, -)
        z_img.add_term({0, 1, 1, 0}, BigComplex(-1));
        MultiPoly q = substitute_forms(
            p, {MultiPoly::variable(4, 0), z_img, MultiPoly::variable(4, 2)});
        // Coefficients of the (x, t) monomials are univariate in w.
        std::array<MultiPoly, 4> cs{MultiPoly(1), MultiPoly(1), MultiPoly(1), MultiPoly(1)};
        for (const auto& [e, c] : q.terms()) cs[e[0]].add_term({e[1], 0, 0, 0}, c);
        for (const auto& c : cs) {
            if (c.max_coeff_abs() <= zero_eps() * scale || c.degree_in(0) < 1) continue;
            for (const auto& w0 : robust_roots(univariate_coeffs(c), scale)) {
                consider({BigComplex(), BigComplex(1), w0}, chart2_residual(p, w0));
            }
            break;
        }
        // w = 0 (the line z = 0) when every w-free coefficient vanishes.
        consider({BigComplex(), BigComplex(1), BigComplex()}, chart2_residual(p, BigComplex()));
    }

    // Chart u = v = 0: the line t = 0 divides p iff p(x, z, 0) ~ 0.
    {
        BigFloat residual;
        MultiPoly t_free(3);
        for (const auto& [e, c] : p.terms()) {
            if (e[2] == 0) t_free.add_term(e, c);
        }
        consider({BigComplex(), BigComplex(), BigComplex(1)}, t_free.max_coeff_abs());
    }

    std::sort(accepted.begin(), accepted.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    if (accepted.size() > 3) accepted.resize(3);
    for (const auto& [uvw, r] : accepted) lines.push_back(ProjectiveLine{uvw});
    return lines;
}

// ---------------------------------------------------------------------------
// find_flex

ProjectivePoint find_flex(const TernaryCubic& p) {
    if (p.arity() != 3) throw ArityMismatch("find_flex: arity-3 polynomial required");
    BigFloat scale = max(p.max_coeff_abs(), BigFloat(1));
    MultiPoly h = hessian3(p);
    if (h.is_zero()) throw NoFlexFound("Hessian vanishes identically");
    BigFloat hscale = max(h.max_coeff_abs(), BigFloat(1));

    std::array<MultiPoly, 3> grad = {p.derivative(0), p.derivative(1), p.derivative(2)};

    struct Candidate {
        std::array<BigComplex, 3> coords;
        BigFloat grad_norm;
    };
    std::vector<Candidate> good;

    // Newton refinement of the 2-unknown system (p, h) in the chart of the
    // largest coordinate; recovers full precision when the resultant root
    // had multiplicity.
    auto polish = [&](std::array<BigComplex, 3>& pt) {
        int fix = 0;
        BigFloat bm = abs(pt[0]);
        for (int k = 1; k < 3; ++k) {
            if (abs(pt[k]) > bm) {
                bm = abs(pt[k]);
                fix = k;
            }
        }
        int u1 = (fix == 0) ? 1 : 0;
        int u2 = (fix == 2) ? 1 : 2;
        for (int it = 0; it < 64; ++it) {
            std::vector<BigComplex> v{pt[0], pt[1], pt[2]};
            BigComplex f1 = p.eval(v), f2 = h.eval(v);
            BigComplex j11 = p.derivative(u1).eval(v), j12 = p.derivative(u2).eval(v);
            BigComplex j21 = h.derivative(u1).eval(v), j22 = h.derivative(u2).eval(v);
            BigComplex det = j11 * j22 - j12 * j21;
            if (abs(det) <= zero_eps() * scale * hscale) return;
            BigComplex d1 = (f1 * j22 - f2 * j12) / det;
            BigComplex d2 = (f2 * j11 - f1 * j21) / det;
            pt[u1] -= d1;
            pt[u2] -= d2;
            if (max(abs(d1), abs(d2)) <= BigFloat::pow2(-Precision::bits() + 16)) return;
        }
    };

    auto try_point = [&](std::array<BigComplex, 3> pt) {
        normalize_projective(pt);
        polish(pt);
        normalize_projective(pt);
        std::vector<BigComplex> v{pt[0], pt[1], pt[2]};
        if (abs(p.eval(v)) > cert_eps() * scale) return;
        if (abs(h.eval(v)) > cert_eps() * hscale) return;
        BigFloat gn;
        for (const auto& g : grad) gn = max(gn, abs(g.eval(v)));
        if (gn <= zero_eps() * scale * BigFloat(1000)) return;  // singular point
        for (const auto& c : good) {
            if (projectively_close(c.coords, pt, cert_eps() * BigFloat(10))) return;
        }
        good.push_back({pt, gn});
    };

    for (int elim = 0; elim < 3 && good.empty(); ++elim) {
        if (p.degree_in(elim) < 1 || h.degree_in(elim) < 1) continue;
        MultiPoly r = resultant(p, h, elim);
        if (r.is_zero()) continue;
        int a = (elim == 0) ? 1 : 0;
        int b = (elim == 2) ? 1 : 2;
        // Candidates in the chart b = 1 plus the point at b = 0.
        auto ra = coeffs_in_var(r, a);
        // Coefficients of r as a polynomial in a, evaluated at b = 1.
        std::vector<BigComplex> uc;
        for (const auto& c : ra) {
            std::vector<BigComplex> pt(3, BigComplex());
            pt[b] = BigComplex(1);
            uc.push_back(c.eval(pt));
        }
        std::vector<std::array<BigComplex, 2>> pairs;  // (value of a, value of b)
        for (const auto& u : robust_roots(uc, r.max_coeff_abs())) pairs.push_back({u, BigComplex(1)});
        pairs.push_back({BigComplex(1), BigComplex()});
        for (const auto& [av, bv] : pairs) {
            // Solve p = 0 along the eliminated variable.
            std::vector<BigComplex> base(3, BigComplex());
            base[a] = av;
            base[b] = bv;
            auto pc = coeffs_in_var(p, elim);
            std::vector<BigComplex> upoly;
            for (const auto& c : pc) upoly.push_back(c.eval(base));
            for (const auto& x0 : robust_roots(upoly, scale)) {
                std::array<BigComplex, 3> pt;
                pt[a] = av;
                pt[b] = bv;
                pt[elim] = x0;
                try_point(pt);
            }
            // The eliminated coordinate may also be zero.
            if (abs(upoly.empty() ? BigComplex() : upoly[0]) <= cert_eps() * scale) {
                std::array<BigComplex, 3> pt;
                pt[a] = av;
                pt[b] = bv;
                pt[elim] = BigComplex();
                try_point(pt);
            }
        }
    }
    if (good.empty()) throw NoFlexFound("no smooth common zero of the cubic and its Hessian found");

    auto mag_lex_less = [](const Candidate& l, const Candidate& r) {
        for (int k = 0; k < 3; ++k) {
            BigFloat ml = abs(l.coords[k]);
            BigFloat mr = abs(r.coords[k]);
            if (ml != mr) return ml < mr;
        }
        return false;
    };
    std::sort(good.begin(), good.end(), [&](const Candidate& l, const Candidate& r) {
        if (l.grad_norm != r.grad_norm) return l.grad_norm > r.grad_norm;
        return mag_lex_less(l, r);
    });
    return ProjectivePoint{good.front().coords};
}

// ---------------------------------------------------------------------------
// classification

CanonLabel classify_canonical(const BigComplex& lam3, const BigComplex& lam7, const BigComplex& lam8) {
    CanonLabel label;
    label.family = CanonLabel::Family::I;
    BigFloat s = BigFloat(1);
    for (const auto& v : {lam3, lam7, lam8}) s = max(s, abs(v));
    const BigFloat tol = zero_eps() * s * BigFloat(1000);
    // Complete the cube x -> x - lam7 z / 3 (internal, reporting only).
    BigComplex third = BigComplex(1) / BigComplex(3);
    BigComplex ap = lam8 - lam7 * lam7 * third;
    BigComplex bp = lam3 - lam7 * lam8 * third +
                    BigComplex(2) * lam7 * lam7 * lam7 / BigComplex(27);
    bool a_zero = abs(ap) <= tol;
    bool b_zero = abs(bp) <= tol;
    if (a_zero && b_zero) {
        label.variant = "x^3-t^2*z";
        return label;
    }
    if (a_zero) {
        label.variant = "x^3+z^3-t^2*z";
        return label;
    }
    if (b_zero) {
        label.variant = "x^3+x*z^2-t^2*z";
        return label;
    }
    BigComplex j = ap * ap * ap / (bp * bp);
    BigComplex boundary = BigComplex(BigFloat("6.75"));  // 27/4
    const BigFloat amb = max(cert_eps() * BigFloat(1000), tol);
    if (abs(j + boundary) <= tol) {
        label.variant = "x^3+x^2*z-t^2*z";
        if (abs(j + boundary) > cert_eps() * s) label.ambiguous = true;
        return label;
    }
    BigComplex mu = principal_cbrt(BigComplex(1) / bp);
    BigComplex alpha = ap * mu * mu;
    label.variant = "x^3+a*x*z^2+z^3-t^2*z";
    label.alpha = alpha;
    if (abs(alpha * alpha * alpha - boundary) <= amb) label.ambiguous = true;
    if (abs(j + boundary) <= amb) label.ambiguous = true;
    return label;
}

// ---------------------------------------------------------------------------
// weierstrass_reduce

namespace {

CanonicalTernary reduce_at_flex(const TernaryCubic& p, const ProjectivePoint& flex) {
    const BigFloat scale = max(p.max_coeff_abs(), BigFloat(1));
    std::vector<BigComplex> q = flex.as_vector();
    std::array<BigComplex, 3> g;
    for (int k = 0; k < 3; ++k) g[k] = p.derivative(k).eval(q);
    int piv = 0;
    BigFloat gm = abs(g[0]);
    for (int k = 1; k < 3; ++k) {
        if (abs(g[k]) > gm) {
            gm = abs(g[k]);
            piv = k;
        }
    }
    if (gm <= zero_eps() * scale) throw DegenerateTangent("gradient vanishes at the chosen flex");

    // Null-space basis of the gradient (tangent-line directions).
    std::array<std::array<BigComplex, 3>, 2> nulls;
    int idx = 0;
    for (int k = 0; k < 3; ++k) {
        if (k == piv) continue;
        std::array<BigComplex, 3> n{BigComplex(), BigComplex(), BigComplex()};
        n[k] = BigComplex(1);
        n[piv] = -g[k] / g[piv];
        nulls[idx++] = n;
    }
    std::array<BigComplex, 3> e_piv{BigComplex(), BigComplex(), BigComplex()};
    e_piv[piv] = BigComplex(1);

    // Rows: x-row in the tangent plane (independent from the flex),
    // z-row transversal, t-row the flex itself.
    auto build = [&](const std::array<BigComplex, 3>& row1) -> std::optional<LinearChange> {
        std::vector<BigComplex> m;
        for (const auto& c : row1) m.push_back(c);
        for (const auto& c : e_piv) m.push_back(c);
        for (const auto& c : q) m.push_back(c);
        try {
            LinearChange a(3, m);
            if (abs(a.det()) <= zero_eps() * BigFloat(1000)) return std::nullopt;
            return a;
        } catch (const SingularMatrix&) {
            return std::nullopt;
        }
    };
    std::array<BigComplex, 3> sum{nulls[0][0] + nulls[1][0], nulls[0][1] + nulls[1][1],
                                  nulls[0][2] + nulls[1][2]};
    std::optional<LinearChange> A;
    BigFloat best_det;
    for (const auto& cand : {nulls[0], nulls[1], sum}) {
        auto a = build(cand);
        if (a && abs(a->det()) > best_det) {
            best_det = abs(a->det());
            A = a;
        }
    }
    if (!A) throw DegenerateTangent("cannot complete the flex frame to an invertible matrix");

    MultiPoly p1 = substitute_linear(p, *A);
    BigComplex c3 = p1.coeff({3, 0, 0, 0});
    BigComplex e = p1.coeff({0, 1, 2, 0});  // z t^2
    BigFloat s1 = max(p1.max_coeff_abs(), BigFloat(1));
    if (abs(c3) <= zero_eps() * s1 * BigFloat(1000)) {
        throw DegenerateTangent("x^3 coefficient underflows (tangent line lies on the curve?)");
    }
    if (abs(e) <= zero_eps() * s1 * BigFloat(1000)) {
        throw DegenerateTangent("t^2 z coefficient underflows");
    }

    // Kill the t-linear cross terms t.z.(g1 x + g2 z) by t -> t + s,
    // s = -(g1 x + g2 z) / (2 e).
    BigComplex g1 = p1.coeff({1, 1, 1, 0});  // x z t
    BigComplex g2 = p1.coeff({0, 2, 1, 0});  // z^2 t
    BigComplex inv2e = BigComplex(1) / (BigComplex(2) * e);
    std::vector<BigComplex> sm = {BigComplex(1), BigComplex(), -g1 * inv2e,
                                  BigComplex(), BigComplex(1), -g2 * inv2e,
                                  BigComplex(), BigComplex(), BigComplex(1)};
    LinearChange S(3, sm);
    MultiPoly p2 = substitute_linear(p1, S);

    // Rescale to unit x^3 and -1 t^2 z coefficients.
    BigComplex lambda = principal_cbrt(BigComplex(1) / p2.coeff({3, 0, 0, 0}));
    BigComplex nu = principal_sqrt(BigComplex(-1) / p2.coeff({0, 1, 2, 0}));
    LinearChange D = LinearChange::diagonal({lambda, BigComplex(1), nu});
    MultiPoly p3 = substitute_linear(p2, D);

    LinearChange transform = D * S * *A;
    CanonicalTernary out{p3.coeff({0, 3, 0, 0}), p3.coeff({2, 1, 0, 0}), p3.coeff({1, 2, 0, 0}),
                         transform, CanonLabel{}};

    // Certify the defining invariant.
    MultiPoly target = canonical_ternary_poly(out.lam3, out.lam7, out.lam8);
    BigFloat residual = (substitute_linear(p, transform) - target).max_coeff_abs();
    if (residual > cert_eps() * max(target.max_coeff_abs(), BigFloat(1))) {
        throw CertificationFailed("ternary canonical form residual " + residual.to_string());
    }
    out.label = classify_canonical(out.lam3, out.lam7, out.lam8);
    return out;
}

}  // namespace

CanonicalTernary weierstrass_reduce(const TernaryCubic& p) {
    ProjectivePoint flex = find_flex(p);
    return reduce_at_flex(p, flex);
}

}  // namespace pfc
