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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pfaffcubic/bigcomplex.hpp"
#include "pfaffcubic/tolerance.hpp"

namespace pfc {

/// Exponent tuple; entries beyond the arity are zero.
using Expo = std::array<int, 4>;

/// Graded-lex, leading term first: higher total degree sorts earlier;
/// within a degree, lexicographically larger exponent tuple earlier.
struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial in up to 4 variables over BigComplex.
/// Coefficients with magnitude below zero_eps are dropped after every
/// ring operation.
class MultiPoly {
  public:
    using TermMap = std::map<Expo, BigComplex, TermOrder>;

    explicit MultiPoly(int arity = 4);
    static MultiPoly constant(int arity, BigComplex c);
    static MultiPoly variable(int arity, int var);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    BigComplex coeff(const Expo& e) const;
    /// Adds c * monomial(e); cleans up if the slot cancels.
    void add_term(const Expo& e, const BigComplex& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const BigComplex& c, const MultiPoly& p);
    MultiPoly operator-() const;
    MultiPoly pow(int e) const;

    MultiPoly derivative(int var) const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    bool is_homogeneous(int degree) const;

    BigComplex eval(const std::vector<BigComplex>& point) const;
    BigFloat max_coeff_abs() const;

    /// Canonical text rendering in graded-lex order.  Defaults: arity 4
    /// -> x,y,z,t; arity 3 -> x,z,t; otherwise u,v,w,s.
    std::string to_string(const std::vector<std::string>& names = {}) const;

    /// Drops coefficients with |c| <= zero_eps.
    void cleanup();

  private:
    int arity_;
    TermMap terms_;
};

/// Invertible n x n complex matrix acting on row coordinate vectors:
/// (x_1..x_n) -> (x_1..x_n) . A.  The inverse is cached and certified
/// entrywise against the identity at construction.
class LinearChange {
  public:
    LinearChange(int dim, std::vector<BigComplex> row_major);
    static LinearChange identity(int dim);
    static LinearChange diagonal(const std::vector<BigComplex>& d);

    int dim() const { return dim_; }
    const BigComplex& at(int r, int c) const { return m_[r * dim_ + c]; }
    const BigComplex& det() const { return det_; }
    const LinearChange& inverse() const;

    /// Matrix product (row-vector convention composes right to left:
    /// v.(A*B) = (v.A).B).
    friend LinearChange operator*(const LinearChange& a, const LinearChange& b);

  private:
    LinearChange(int dim, std::vector<BigComplex> m, BigComplex det);
    int dim_;
    std::vector<BigComplex> m_;
    BigComplex det_;
    mutable std::shared_ptr<LinearChange> inv_;
};

/// p composed with the row-vector change of variables: q(v) = p(v . A).
MultiPoly substitute_linear(const MultiPoly& p, const LinearChange& A);

/// General substitution: variable i of p is replaced by images[i]; all
/// images share one arity, which becomes the arity of the result.
MultiPoly substitute_forms(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// Coefficients of p viewed as a univariate polynomial in `var`,
/// ascending; each entry has exponent 0 in `var`.
std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, int var);

/// Ascending BigComplex coefficients of an arity-1 polynomial.
std::vector<BigComplex> univariate_coeffs(const MultiPoly& p);

/// Determinant of a square matrix with polynomial entries (Laplace
/// expansion with minors memoized on column subsets).
MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m);

/// Sylvester resultant of p and q eliminating `var`; the result does not
/// involve `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

/// Hessian determinant of a ternary cubic (arity 3).
MultiPoly hessian3(const MultiPoly& p);

/// Divides f by a homogeneous linear form l (same arity).  Returns the
/// quotient; *remainder_norm receives the max remainder coefficient
/// magnitude (exact divisibility gives ~0).
MultiPoly divide_by_linear(const MultiPoly& f, const MultiPoly& l, BigFloat* remainder_norm);

}  // namespace pfc
