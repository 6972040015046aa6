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
#include "pfaffcubic/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "pfaffcubic/errors.hpp"

namespace pfc {

MultiPoly::MultiPoly(int arity) : arity_(arity) {
    if (arity < 1 || arity > 4) throw Error("MultiPoly: arity must be in 1..4");
}

MultiPoly MultiPoly::constant(int arity, BigComplex c) {
    MultiPoly p(arity);
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int var) {
    MultiPoly p(arity);
    Expo e{0, 0, 0, 0};
    e[var] = 1;
    p.add_term(e, BigComplex(1));
    return p;
}

BigComplex MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigComplex() : it->second;
}

void MultiPoly::add_term(const Expo& e, const BigComplex& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (abs(it->second) <= zero_eps()) terms_.erase(it);
}

void MultiPoly::cleanup() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (abs(it->second) <= zero_eps()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("MultiPoly +: arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("MultiPoly -: arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("MultiPoly *: arity mismatch");
    MultiPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    }
    r.cleanup();
    return r;
}

MultiPoly operator*(const BigComplex& c, const MultiPoly& p) {
    MultiPoly r(p.arity_);
    for (const auto& [e, pc] : p.terms_) r.add_term(e, c * pc);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r = MultiPoly::constant(arity_, BigComplex(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, BigComplex(static_cast<long>(e[var])) * c);
    }
    return r;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        if (e[0] + e[1] + e[2] + e[3] != degree) return false;
    }
    return true;
}

BigComplex MultiPoly::eval(const std::vector<BigComplex>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw ArityMismatch("MultiPoly::eval: arity mismatch");
    // Horner in the first variable; powers of the others cached.
    std::vector<std::vector<BigComplex>> powers(arity_);
    for (int v = 0; v < arity_; ++v) powers[v].push_back(BigComplex(1));
    auto power_of = [&](int v, int e) {
        while (static_cast<int>(powers[v].size()) <= e) powers[v].push_back(powers[v].back() * point[v]);
        return powers[v][e];
    };
    int dmax = degree_in(0);
    std::vector<BigComplex> by_deg0(static_cast<std::size_t>(dmax + 1) + (dmax < 0 ? 1 : 0));
    if (dmax < 0) return BigComplex();
    for (const auto& [e, c] : terms_) {
        BigComplex v = c;
        for (int k = 1; k < arity_; ++k) v *= power_of(k, e[k]);
        by_deg0[e[0]] += v;
    }
    BigComplex acc;
    for (int k = dmax; k >= 0; --k) acc = acc * point[0] + by_deg0[k];
    return acc;
}

BigFloat MultiPoly::max_coeff_abs() const {
    BigFloat m;
    for (const auto& [e, c] : terms_) m = max(m, abs(c));
    return m;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    std::vector<std::string> nm = names;
    if (nm.empty()) {
        if (arity_ == 4) {
            nm = {"x", "y", "z", "t"};
        } else if (arity_ == 3) {
            nm = {"x", "z", "t"};
        } else {
            nm = {"u", "v", "w", "s"};
        }
    }
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c.imag().is_zero()) {
            out += c.real().to_string();
        } else {
            std::string im = c.imag().to_string();
            std::string sep = "+";
            if (im[0] == '-') {
                sep = "-";
                im = im.substr(1);
            }
            out += "(" + c.real().to_string() + sep + im + "i)";
        }
        for (int v = 0; v < arity_; ++v) {
            if (e[v] == 0) continue;
            out += "*" + nm[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearChange

namespace {

/// Gauss-Jordan inverse; also reports the determinant.
std::vector<BigComplex> invert_matrix(int n, std::vector<BigComplex> a, BigComplex* det_out) {
    std::vector<BigComplex> inv(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) inv[i * n + i] = BigComplex(1);
    BigComplex det(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        BigFloat best = abs(a[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            BigFloat m = abs(a[r * n + col]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best <= zero_eps()) throw SingularMatrix("LinearChange: matrix is singular");
        if (piv != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a[piv * n + c], a[col * n + c]);
                std::swap(inv[piv * n + c], inv[col * n + c]);
            }
            det = -det;
        }
        BigComplex p = a[col * n + col];
        det *= p;
        for (int c = 0; c < n; ++c) {
            a[col * n + c] /= p;
            inv[col * n + c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            BigComplex f = a[r * n + col];
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
                inv[r * n + c] -= f * inv[col * n + c];
            }
        }
    }
    *det_out = det;
    return inv;
}

}  // namespace

LinearChange::LinearChange(int dim, std::vector<BigComplex> m, BigComplex det)
    : dim_(dim), m_(std::move(m)), det_(std::move(det)) {}

LinearChange::LinearChange(int dim, std::vector<BigComplex> row_major) : dim_(dim), m_(std::move(row_major)) {
    if (static_cast<int>(m_.size()) != dim_ * dim_) throw Error("LinearChange: wrong entry count");
    BigComplex det;
    std::vector<BigComplex> inv = invert_matrix(dim_, m_, &det);
    det_ = det;
    inv_ = std::shared_ptr<LinearChange>(new LinearChange(dim_, std::move(inv), BigComplex(1) / det));
    // Certify A . A^-1 ~ I entrywise.
    BigFloat tol = BigFloat::pow2(-Precision::bits() + 24);
    BigFloat scale = BigFloat(1);
    for (const auto& e : m_) scale = max(scale, abs(e));
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            BigComplex s;
            for (int k = 0; k < dim_; ++k) s += at(r, k) * inv_->at(k, c);
            if (r == c) s -= BigComplex(1);
            if (abs(s) > tol * scale * scale) {
                throw SingularMatrix("LinearChange: inverse failed certification (ill-conditioned)");
            }
        }
    }
}

LinearChange LinearChange::identity(int dim) {
    std::vector<BigComplex> m(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) m[i * dim + i] = BigComplex(1);
    return LinearChange(dim, std::move(m));
}

LinearChange LinearChange::diagonal(const std::vector<BigComplex>& d) {
    int n = static_cast<int>(d.size());
    std::vector<BigComplex> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) m[i * n + i] = d[i];
    return LinearChange(n, std::move(m));
}

const LinearChange& LinearChange::inverse() const { return *inv_; }

LinearChange operator*(const LinearChange& a, const LinearChange& b) {
    if (a.dim_ != b.dim_) throw ArityMismatch("LinearChange *: dimension mismatch");
    int n = a.dim_;
    std::vector<BigComplex> m(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            BigComplex s;
            for (int k = 0; k < n; ++k) s += a.at(r, k) * b.at(k, c);
            m[r * n + c] = s;
        }
    }
    return LinearChange(n, std::move(m));
}

// ---------------------------------------------------------------------------
// Substitution

MultiPoly substitute_forms(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    if (static_cast<int>(images.size()) != p.arity()) {
        throw ArityMismatch("substitute_forms: one image per variable required");
    }
    int out_arity = images[0].arity();
    for (const auto& im : images) {
        if (im.arity() != out_arity) throw ArityMismatch("substitute_forms: images must share arity");
    }
    // Cache powers of each image.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (std::size_t v = 0; v < images.size(); ++v) {
        powers[v].push_back(MultiPoly::constant(out_arity, BigComplex(1)));
    }
    auto power_of = [&](std::size_t v, int e) -> const MultiPoly& {
        while (static_cast<int>(powers[v].size()) <= e) powers[v].push_back(powers[v].back() * images[v]);
        return powers[v][e];
    };
    MultiPoly r(out_arity);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(out_arity, c);
        for (int v = 0; v < p.arity(); ++v) {
            if (e[v] > 0) t = t * power_of(v, e[v]);
        }
        r = r + t;
    }
    r.cleanup();
    return r;
}

MultiPoly substitute_linear(const MultiPoly& p, const LinearChange& A) {
    if (p.arity() != A.dim()) throw ArityMismatch("substitute_linear: arity mismatch");
    // Variable i of p receives column i of A: (v.A)_i = sum_k v_k A[k][i].
    std::vector<MultiPoly> images;
    images.reserve(p.arity());
    for (int i = 0; i < p.arity(); ++i) {
        MultiPoly form(p.arity());
        for (int k = 0; k < p.arity(); ++k) {
            Expo e{0, 0, 0, 0};
            e[k] = 1;
            form.add_term(e, A.at(k, i));
        }
        images.push_back(std::move(form));
    }
    return substitute_forms(p, images);
}

// ---------------------------------------------------------------------------
// Resultants and determinants

std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1, MultiPoly(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        Expo r = e;
        r[var] = 0;
        out[e[var]].add_term(r, c);
    }
    return out;
}

std::vector<BigComplex> univariate_coeffs(const MultiPoly& p) {
    if (p.arity() != 1) throw ArityMismatch("univariate_coeffs: arity-1 polynomial required");
    std::vector<BigComplex> out(static_cast<std::size_t>(std::max(p.degree_in(0), 0)) + 1);
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw Error("poly_matrix_det: empty matrix");
    int arity = m[0][0].arity();
    // minors[S] = det of rows 0..popcount(S)-1, columns S.
    std::unordered_map<std::uint32_t, MultiPoly> level;
    level.emplace(0u, MultiPoly::constant(arity, BigComplex(1)));
    for (int row = 0; row < n; ++row) {
        std::unordered_map<std::uint32_t, MultiPoly> next;
        for (const auto& [mask, minor] : level) {
            if (minor.is_zero()) continue;
            int pos = 0;  // number of chosen columns below j
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) {
                    ++pos;
                    continue;
                }
                if (m[row][j].is_zero()) continue;
                std::uint32_t nm = mask | (1u << j);
                MultiPoly contrib = m[row][j] * minor;
                if ((row + pos) % 2 == 1) contrib = -contrib;
                auto [it, inserted] = next.try_emplace(nm, contrib);
                if (!inserted) it->second = it->second + contrib;
            }
        }
        level = std::move(next);
        if (level.empty()) return MultiPoly(arity);
    }
    auto it = level.find((n == 32 ? ~0u : (1u << n) - 1u));
    return it == level.end() ? MultiPoly(arity) : it->second;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    int m = p.degree_in(var);
    int n = q.degree_in(var);
    if (m <= 0 && n <= 0) throw Error("resultant: both inputs constant in the eliminated variable");
    int arity = p.arity();
    if (q.arity() != arity) throw ArityMismatch("resultant: arity mismatch");
    auto pc = coeffs_in_var(p, var);
    auto qc = coeffs_in_var(q, var);
    if (m <= 0) return pc[0].pow(n);
    if (n <= 0) return qc[0].pow(m);
    int size = m + n;
    std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, MultiPoly(arity)));
    // n shifted copies of p's coefficients (descending), then m of q's.
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) syl[r][r + k] = pc[m - k];
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) syl[n + r][r + k] = qc[n - k];
    }
    return poly_matrix_det(syl);
}

MultiPoly hessian3(const MultiPoly& p) {
    if (p.arity() != 3) throw ArityMismatch("hessian3: arity-3 polynomial required");
    std::vector<std::vector<MultiPoly>> h(3, std::vector<MultiPoly>(3, MultiPoly(3)));
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            h[i][j] = p.derivative(i).derivative(j);
            h[j][i] = h[i][j];
        }
    }
    return poly_matrix_det(h);
}

MultiPoly divide_by_linear(const MultiPoly& f, const MultiPoly& l, BigFloat* remainder_norm) {
    if (f.arity() != l.arity()) throw ArityMismatch("divide_by_linear: arity mismatch");
    if (l.total_degree() != 1) throw Error("divide_by_linear: divisor must be linear");
    // Pick the pivot variable with the largest coefficient in l.
    int piv = -1;
    BigComplex c;
    BigFloat best;
    for (int v = 0; v < l.arity(); ++v) {
        Expo e{0, 0, 0, 0};
        e[v] = 1;
        BigComplex lv = l.coeff(e);
        if (abs(lv) > best) {
            best = abs(lv);
            piv = v;
            c = lv;
        }
    }
    if (piv < 0) throw Error("divide_by_linear: zero divisor");
    // l/c = piv + u, u linear in the remaining variables.
    MultiPoly u = (BigComplex(1) / c) * l - MultiPoly::variable(l.arity(), piv);
    auto fc = coeffs_in_var(f, piv);
    int d = static_cast<int>(fc.size()) - 1;
    std::vector<MultiPoly> q(static_cast<std::size_t>(std::max(d, 1)), MultiPoly(f.arity()));
    // f = (piv + u) q + rem, computed top-down.
    MultiPoly rem(f.arity());
    if (d < 1) {
        rem = f;
    } else {
        q[d - 1] = fc[d];
        for (int k = d - 1; k >= 1; --k) q[k - 1] = fc[k] - u * q[k];
        rem = fc[0] - u * q[0];
    }
    *remainder_norm = rem.max_coeff_abs();
    MultiPoly quotient(f.arity());
    for (int k = 0; k < static_cast<int>(q.size()); ++k) {
        MultiPoly term = q[k];
        for (int j = 0; j < k; ++j) term = term * MultiPoly::variable(f.arity(), piv);
        quotient = quotient + term;
    }
    return (BigComplex(1) / c) * quotient;
}

}  // namespace pfc
