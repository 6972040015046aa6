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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfaffcubic/quaternary_builder.hpp"
#include "pfaffcubic/verifier.hpp"

namespace pfc {

struct PipelineOptions {
    long precision_bits = 256;
    std::uint64_t seed = 0;
    int d11_branch = 1;  // +1 or -1
    int max_rotations = 20;
    int n_samples = 16;
};

struct StageTiming {
    std::string stage;
    double ms = 0.0;
};

struct PipelineResult {
    PfaffianRep rep;
    std::string classification;  // canonical-form label or "surface_reducible"
    std::optional<LinearChange> ternary_transform;  // 3x3 Weierstrass reduction
    std::optional<BigComplex> shear_beta;
    std::optional<LinearChange> rotation;   // 4x4, rotated branch only
    std::optional<LinearChange> composite;  // full 4x4 canonicalizing transform
    std::optional<MultiPoly> plane;         // plane_split branch only
    std::vector<StageTiming> timings;       // not serialized
};

/// Full construction: slice, classify, branch dispatch, build, sign
/// normalization, pull-back, certification.  On a certification failure
/// the precision is doubled once and the whole run repeated; a second
/// failure raises RepresentationFailed.
PipelineResult represent(const CubicSurface& c, const PipelineOptions& opts = {});

// Matrix JSON schema: "matrices" is [A0, A1, A2, A3], each a 6x6 array
// of [re, im] decimal-string pairs.
nlohmann::json matrices_to_json(const LinearMatrix& m);
LinearMatrix matrices_from_json(const nlohmann::json& j);

/// Serializes a result to the output schema (matrices, branch,
/// transforms, certificate); timings are deliberately excluded so the
/// output is byte-deterministic.
nlohmann::json result_to_json(const PipelineResult& r);

/// Certification of an output document ("matrices" plus "cubic" or
/// "theta") against the stated cubic.
Certificate verify_document(const nlohmann::json& doc, int n_samples = 16, std::uint64_t seed = 0);

}  // namespace pfc
