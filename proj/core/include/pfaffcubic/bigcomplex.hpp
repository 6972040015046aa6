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

#include <complex>
#include <string>

#include "pfaffcubic/bigfloat.hpp"

namespace pfc {

/// Complex number over BigFloat.  Division by a value whose magnitude is
/// below the hard-zero floor 2^(-P+16) is an error.
class BigComplex {
  public:
    BigComplex() = default;
    BigComplex(BigFloat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    BigComplex(long re) : re_(re) {}                 // NOLINT
    BigComplex(int re) : re_(re) {}                  // NOLINT
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    static BigComplex i() { return BigComplex(0, 1); }
    static BigComplex from_double(double re, double im = 0.0) {
        return BigComplex(BigFloat(re), BigFloat(im));
    }

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    BigComplex operator-() const { return {-re_, -im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (hypot(b.re_, b.im_) < BigFloat::pow2(-Precision::bits() + 16)) {
            throw DivideByZero("complex division by (near-)zero");
        }
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
    friend BigComplex conj(const BigComplex& a) { return {a.re_, -a.im_}; }

    std::complex<double> to_complex_double() const { return {re_.to_double(), im_.to_double()}; }
    std::string to_string() const { return "(" + re_.to_string() + ", " + im_.to_string() + ")"; }

  private:
    BigFloat re_;
    BigFloat im_;
};

/// Principal square root: non-negative real part; if the real part is
/// zero, non-negative imaginary part.
inline BigComplex principal_sqrt(const BigComplex& v) {
    if (v.is_zero()) return BigComplex();
    BigFloat r = abs(v);
    BigFloat two(2);
    if (v.real().sign() >= 0) {
        BigFloat a = sqrt((r + v.real()) / two);
        BigFloat b = v.imag() / (a * two);
        return {a, b};
    }
    // Re < 0: compute the large component first for accuracy.
    BigFloat b = sqrt((r - v.real()) / two);
    if (v.imag().sign() < 0) b = -b;
    if (b.is_zero()) return {BigFloat(), sqrt(-v.real())};
    BigFloat a = v.imag() / (b * two);
    if (a.sign() < 0) {  // can only be roundoff; clamp to the branch
        a = -a;
        b = -b;
    }
    if (a.is_zero() && b.sign() < 0) b = -b;
    return {a, b};
}

/// Principal cube root via polar form.
inline BigComplex principal_cbrt(const BigComplex& v) {
    if (v.is_zero()) return BigComplex();
    BigFloat m = cbrt(abs(v));
    BigFloat th = atan2(v.imag(), v.real()) / BigFloat(3);
    return {m * cos(th), m * sin(th)};
}

}  // namespace pfc
