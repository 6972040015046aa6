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

#include "pfaffcubic/bigfloat.hpp"

namespace pfc {

/// Tolerances derived from the working precision P.
///
///  - zero_eps: magnitudes below this count as zero in classification
///    decisions and coefficient cleanup.  Default 2^(-P/2).
///  - cert_eps: certificate acceptance threshold, relative to the input
///    coefficient scale.  Default 2^(-P/2).
///
/// Both are clamped to the hard floor 2^(-P+16).
class TolerancePolicy {
  public:
    TolerancePolicy() : TolerancePolicy(Precision::bits()) {}
    explicit TolerancePolicy(long precision_bits)
        : precision_bits_(precision_bits),
          zero_eps_(BigFloat::pow2(-precision_bits / 2)),
          cert_eps_(BigFloat::pow2(-precision_bits / 2)) {}

    long precision_bits() const { return precision_bits_; }
    const BigFloat& zero_eps() const { return zero_eps_; }
    const BigFloat& cert_eps() const { return cert_eps_; }

    void set_zero_eps(BigFloat e) { zero_eps_ = clamp_(std::move(e)); }
    void set_cert_eps(BigFloat e) { cert_eps_ = clamp_(std::move(e)); }

    /// Tolerances for the current thread.  Reset whenever the working
    /// precision changes.
    static TolerancePolicy& current() {
        thread_local TolerancePolicy tol;
        if (tol.precision_bits_ != Precision::bits()) tol = TolerancePolicy(Precision::bits());
        return tol;
    }

  private:
    BigFloat clamp_(BigFloat e) const {
        BigFloat floor = BigFloat::pow2(-precision_bits_ + 16);
        return e < floor ? floor : e;
    }

    long precision_bits_;
    BigFloat zero_eps_;
    BigFloat cert_eps_;
};

inline BigFloat zero_eps() { return TolerancePolicy::current().zero_eps(); }
inline BigFloat cert_eps() { return TolerancePolicy::current().cert_eps(); }

}  // namespace pfc
