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
#include "pfaffcubic/pipeline.hpp"

#include <chrono>
#include <type_traits>

#include "pfaffcubic/errors.hpp"

namespace pfc {

namespace {

class StageClock {
  public:
    explicit StageClock(std::vector<StageTiming>* out) : out_(out) {}

    template <typename F>
    auto run(const std::string& stage, F&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            out_->push_back({stage, ms});
        };
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            finish();
        } else {
            auto value = fn();
            finish();
            return value;
        }
    }

  private:
    std::vector<StageTiming>* out_;
};

void irreducible_run(const CubicSurface& g, const TernaryCubic& slice, const PipelineOptions& opts,
                     StageClock& clock, PipelineResult* result) {
    CanonicalTernary ct = clock.run("weierstrass_reduce", [&] { return weierstrass_reduce(slice); });
    CanonicalQuaternary cq = clock.run("embed_and_shear", [&] { return embed_and_shear(g, ct); });
    D11 d = compute_d11(cq.lam18, opts.d11_branch);
    PfaffianRep rep = clock.run("build_M0", [&] { return build_M0(cq, d); });
    MultiPoly target = canonical_quaternary_poly(cq);
    rep = clock.run("normalize_sign", [&] { return normalize_sign(rep, target); });
    rep = clock.run("pull_back", [&] { return pull_back(rep, cq.transform); });
    rep.branch = Branch::irreducible;
    result->rep = std::move(rep);
    result->classification = ct.label.variant;
    result->ternary_transform = ct.transform;
    result->shear_beta = cq.shear_beta;
    result->composite = cq.transform;
}

void reducible_run(const CubicSurface& c, const MultiPoly& f, const PipelineOptions&,
                   StageClock& clock, PipelineResult* result) {
    PlaneSplit split = clock.run("split_plane", [&] { return split_plane(c); });
    QuadricPairs pairs =
        clock.run("quadric_pairs", [&] { return quadric_to_pfaffian_pair(split.quadric); });
    PfaffianRep rep = block_representation(split.plane, pairs);
    rep = clock.run("normalize_sign", [&] { return normalize_sign(rep, f); });
    result->rep = std::move(rep);
    result->classification = "surface_reducible";
    result->plane = split.plane;
}

PipelineResult run_once(const CubicSurface& c, const PipelineOptions& opts) {
    PipelineResult result;
    StageClock clock(&result.timings);
    MultiPoly f = to_poly(c);
    TernaryCubic slice = slice_y0(c);

    bool irreducible_slice = false;
    if (!slice.is_zero()) {
        irreducible_slice = clock.run("find_lines", [&] { return find_lines(slice).empty(); });
    }

    // Branch cascade: a later stage can still succeed when an earlier
    // one fails (e.g. a slice misclassified as irreducible), and the
    // final certificate decides in every case.
    bool built = false;
    std::string first_failure;
    if (irreducible_slice) {
        try {
            irreducible_run(c, slice, opts, clock, &result);
            built = true;
        } catch (const Error& e) {
            first_failure = e.what();
        }
    }
    if (!built && !slice.is_zero()) {
        try {
            RotationResult rot = clock.run(
                "rotate", [&] { return rotate_until_irreducible(c, opts.seed, opts.max_rotations); });
            irreducible_run(rot.g, slice_y0(rot.g), opts, clock, &result);
            result.rep = pull_back(result.rep, rot.rotation);
            result.rep.branch = Branch::rotated;
            result.composite = *result.composite * rot.rotation;
            result.rotation = rot.rotation;
            built = true;
        } catch (const Error& e) {
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    if (!built) {
        try {
            reducible_run(c, f, opts, clock, &result);
        } catch (const Error& e) {
            throw RepresentationFailed("dispatch", first_failure.empty() ? e.what()
                                                                         : first_failure + "; " + e.what());
        }
    }

    result.rep.certificate =
        clock.run("certify", [&] { return certify(result.rep.m, c, opts.n_samples, opts.seed); });
    if (!result.rep.certificate.pass) {
        throw CertificationFailed("final certificate residual " +
                                  result.rep.certificate.pf_residual.to_string());
    }
    return result;
}

}  // namespace

PipelineResult represent(const CubicSurface& c, const PipelineOptions& opts) {
    if (c.is_zero()) throw ZeroPolynomial("represent: zero cubic");
    try {
        PrecisionScope scope(opts.precision_bits);
        return run_once(c, opts);
    } catch (const Error& first) {
        try {
            PrecisionScope scope(opts.precision_bits * 2);
            return run_once(c, opts);
        } catch (const Error& second) {
            throw RepresentationFailed("pipeline", std::string(second.what()) +
                                                       " (after precision escalation; first failure: " +
                                                       first.what() + ")");
        }
    }
}

namespace {

nlohmann::json linear_change_to_json(const LinearChange& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < a.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < a.dim(); ++c) row.push_back(complex_to_json(a.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

nlohmann::json matrices_to_json(const LinearMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (int v = 0; v < 4; ++v) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < 6; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < 6; ++j) row.push_back(complex_to_json(m.coefficient_matrix(v)[i][j]));
            rows.push_back(row);
        }
        out.push_back(rows);
    }
    return out;
}

LinearMatrix matrices_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) throw SchemaError("\"matrices\" must be an array of 4 matrices");
    LinearMatrix m;
    for (int v = 0; v < 4; ++v) {
        const auto& rows = j[v];
        if (!rows.is_array() || rows.size() != 6) throw SchemaError("matrix must have 6 rows");
        for (int i = 0; i < 6; ++i) {
            const auto& row = rows[i];
            if (!row.is_array() || row.size() != 6) throw SchemaError("matrix row must have 6 entries");
            for (int jj = 0; jj < 6; ++jj) m.coefficient_matrix(v)[i][jj] = complex_from_json(row[jj]);
        }
    }
    return m;
}

nlohmann::json result_to_json(const PipelineResult& r) {
    nlohmann::json j;
    j["matrices"] = matrices_to_json(r.rep.m);
    j["branch"] = branch_name(r.rep.branch);
    j["classification"] = r.classification;

    nlohmann::json tr;
    tr["ternary"] = r.ternary_transform ? linear_change_to_json(*r.ternary_transform)
                                        : nlohmann::json(nullptr);
    tr["shear_beta"] = r.shear_beta ? complex_to_json(*r.shear_beta) : nlohmann::json(nullptr);
    tr["rotation"] = r.rotation ? linear_change_to_json(*r.rotation) : nlohmann::json(nullptr);
    tr["composite"] = r.composite ? linear_change_to_json(*r.composite) : nlohmann::json(nullptr);
    if (r.plane) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int v = 0; v < 4; ++v) {
            Expo e{0, 0, 0, 0};
            e[v] = 1;
            coeffs.push_back(complex_to_json(r.plane->coeff(e)));
        }
        tr["plane"] = coeffs;
    } else {
        tr["plane"] = nullptr;
    }
    j["transforms"] = tr;

    const Certificate& cert = r.rep.certificate;
    nlohmann::json cj;
    cj["max_coeff_residual"] = max(cert.pf_residual, cert.det_residual).to_string();
    cj["pf_residual"] = cert.pf_residual.to_string();
    cj["det_residual"] = cert.det_residual.to_string();
    cj["sample_residual"] = cert.sample_residual.to_string();
    cj["pf_sign"] = r.rep.pf_sign;
    cj["pass"] = cert.pass;
    j["certificate"] = cj;
    return j;
}

Certificate verify_document(const nlohmann::json& doc, int n_samples, std::uint64_t seed) {
    if (!doc.contains("matrices")) throw SchemaError("document has no \"matrices\" field");
    LinearMatrix m = matrices_from_json(doc["matrices"]);
    m.check_skew();
    CubicSurface f = cubic_from_json(doc);
    return certify(m, f, n_samples, seed);
}

}  // namespace pfc
