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

#include <vector>

#include "pfaffcubic/bigcomplex.hpp"

namespace pfc {

/// All complex roots (with multiplicity) of
///   c[0] + c[1] z + ... + c[n] z^n,   n = coeffs.size() - 1.
///
/// Simultaneous (Aberth-style) iteration from perturbed initial guesses,
/// run until the correction norms fall below 2^(-P+32).
///
/// Throws LeadingZero if |c[n]| <= zero_eps (caller must deflate) and
/// NoConvergence after max_iter sweeps.
std::vector<BigComplex> roots_univariate(const std::vector<BigComplex>& coeffs, int max_iter = 2000);

/// Horner evaluation of the same ascending coefficient vector.
BigComplex eval_univariate(const std::vector<BigComplex>& coeffs, const BigComplex& z);

}  // namespace pfc
