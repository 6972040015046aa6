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

#include <mpfr.h>

#include <string>
#include <utility>

#include "pfaffcubic/errors.hpp"

namespace pfc {

/// Session-wide floating point precision, in bits.  Thread local so that
/// batch workers can escalate independently.
class Precision {
  public:
    static long bits() { return bits_(); }
    static void set_bits(long b) { bits_() = b; }

  private:
    static long& bits_() {
        thread_local long b = 256;
        return b;
    }
};

/// RAII scope guard that restores the previous precision on exit.
class PrecisionScope {
  public:
    explicit PrecisionScope(long bits) : saved_(Precision::bits()) { Precision::set_bits(bits); }
    ~PrecisionScope() { Precision::set_bits(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    long saved_;
};

/// Arbitrary-precision real number backed by MPFR.  All operations round
/// to the current thread's working precision.
class BigFloat {
  public:
    BigFloat() {
        mpfr_init2(v_, Precision::bits());
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long x) {  // NOLINT(google-explicit-constructor)
        mpfr_init2(v_, Precision::bits());
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(int x) : BigFloat(static_cast<long>(x)) {}  // NOLINT
    explicit BigFloat(double x) {
        mpfr_init2(v_, Precision::bits());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    explicit BigFloat(const std::string& s) {
        mpfr_init2(v_, Precision::bits());
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw Error("BigFloat: cannot parse '" + s + "'");
        }
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pow2(long e) {
        BigFloat r;
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r;
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    /// Square root of a non-negative real.
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r;
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cbrt(const BigFloat& a) {
        BigFloat r;
        mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r;
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r;
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r;
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with enough digits to reparse bit-exactly at the
    /// same precision.
    std::string to_string() const {
        long digits = static_cast<long>(mpfr_get_prec(v_) * 0.301029995663981) + 3;
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits), v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

  private:
    mpfr_t v_;
};

}  // namespace pfc
