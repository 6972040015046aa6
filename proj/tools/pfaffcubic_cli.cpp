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
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pfaffcubic/pipeline.hpp"
#include "pfaffcubic/ternary_canon.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailed = 2;

struct Config {
    long precision_bits = 256;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string d11_branch = "plus";
    int max_rotations = 20;
    unsigned jobs = 0;
};

pfc::PipelineOptions to_options(const Config& cfg) {
    pfc::PipelineOptions opts;
    opts.precision_bits = cfg.precision_bits;
    opts.seed = cfg.seed;
    opts.d11_branch = cfg.d11_branch == "minus" ? -1 : 1;
    opts.max_rotations = cfg.max_rotations;
    return opts;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pfc::SchemaError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw pfc::SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

pfc::CubicSurface load_cubic(const std::string& expr, const std::string& theta_file) {
    if (!expr.empty()) return pfc::parse_cubic(expr);
    if (!theta_file.empty()) return pfc::cubic_from_json(load_json_file(theta_file));
    throw pfc::SchemaError("provide --cubic or --theta-file");
}

void print_result_text(const pfc::PipelineResult& r, std::ostream& out) {
    out << "branch: " << pfc::branch_name(r.rep.branch) << "\n";
    out << "classification: " << r.classification << "\n";
    const pfc::Certificate& c = r.rep.certificate;
    out << "pf_residual: " << c.pf_residual.to_string() << "\n";
    out << "det_residual: " << c.det_residual.to_string() << "\n";
    out << "sample_residual: " << c.sample_residual.to_string() << "\n";
    out << "pass: " << (c.pass ? "yes" : "no") << "\n";
    for (const pfc::StageTiming& t : r.timings) {
        out << "timing " << t.stage << ": " << t.ms << " ms\n";
    }
}

int cmd_represent_single(const Config& cfg, const std::string& expr, const std::string& theta_file) {
    pfc::CubicSurface c = load_cubic(expr, theta_file);
    pfc::PipelineResult r = pfc::represent(c, to_options(cfg));
    if (cfg.format == "text") {
        print_result_text(r, std::cout);
    } else {
        nlohmann::json j = pfc::result_to_json(r);
        {
            pfc::PrecisionScope scope(cfg.precision_bits);
            j["cubic"] = pfc::render(c);
        }
        std::cout << j.dump(2) << "\n";
    }
    return r.rep.certificate.pass ? kExitOk : kExitFailed;
}

int cmd_represent_batch(const Config& cfg, const std::string& batch_file) {
    std::ifstream in(batch_file);
    if (!in) throw pfc::SchemaError("cannot open file: " + batch_file);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }

    std::vector<std::string> outputs(lines.size());
    std::vector<int> codes(lines.size(), kExitOk);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            nlohmann::json out;
            out["index"] = i;
            try {
                nlohmann::json entry = nlohmann::json::parse(lines[i]);
                pfc::CubicSurface c = pfc::cubic_from_json(entry);
                pfc::PipelineOptions opts = to_options(cfg);
                if (entry.contains("precision_bits")) opts.precision_bits = entry["precision_bits"].get<long>();
                opts.seed = entry.contains("seed") ? entry["seed"].get<std::uint64_t>()
                                                  : cfg.seed + static_cast<std::uint64_t>(i);
                pfc::PipelineResult r = pfc::represent(c, opts);
                out["result"] = pfc::result_to_json(r);
                out["ok"] = true;
            } catch (const pfc::RepresentationFailed& e) {
                out["ok"] = false;
                out["error"] = e.what();
                codes[i] = kExitFailed;
            } catch (const nlohmann::json::exception& e) {
                out["ok"] = false;
                out["error"] = std::string("invalid JSON: ") + e.what();
                codes[i] = kExitInput;
            } catch (const pfc::Error& e) {
                out["ok"] = false;
                out["error"] = e.what();
                codes[i] = kExitInput;
            }
            outputs[i] = out.dump();
        }
    };

    unsigned n = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, lines.empty() ? 1 : static_cast<unsigned>(lines.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k + 1 < n; ++k) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::size_t passed = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::cout << outputs[i] << "\n";
        if (codes[i] == kExitOk) ++passed;
    }
    nlohmann::json summary;
    summary["summary"] = {{"total", lines.size()}, {"passed", passed}, {"failed", lines.size() - passed}};
    std::cout << summary.dump() << "\n";
    return passed == lines.size() ? kExitOk : kExitFailed;
}

int cmd_verify(const Config& cfg, const std::string& matrices_file, const std::string& expr) {
    nlohmann::json doc = load_json_file(matrices_file);
    if (!expr.empty()) doc["cubic"] = expr;
    pfc::PrecisionScope scope(cfg.precision_bits);
    pfc::Certificate cert = pfc::verify_document(doc, 16, cfg.seed);
    if (cfg.format == "text") {
        std::cout << "pf_residual: " << cert.pf_residual.to_string() << "\n"
                  << "det_residual: " << cert.det_residual.to_string() << "\n"
                  << "sample_residual: " << cert.sample_residual.to_string() << "\n"
                  << "pass: " << (cert.pass ? "yes" : "no") << "\n";
    } else {
        nlohmann::json j;
        j["pf_residual"] = cert.pf_residual.to_string();
        j["det_residual"] = cert.det_residual.to_string();
        j["sample_residual"] = cert.sample_residual.to_string();
        j["pass"] = cert.pass;
        std::cout << j.dump(2) << "\n";
    }
    return cert.pass ? kExitOk : kExitFailed;
}

nlohmann::json transform3_json(const pfc::LinearChange& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < a.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < a.dim(); ++c) row.push_back(pfc::complex_to_json(a.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

int cmd_canon(const Config& cfg, const std::string& expr, const std::string& theta_file) {
    pfc::CubicSurface c = load_cubic(expr, theta_file);
    pfc::PrecisionScope scope(cfg.precision_bits);
    pfc::TernaryCubic slice = pfc::slice_y0(c);
    nlohmann::json j;
    if (slice.is_zero()) {
        j["slice"] = "zero";
    } else {
        std::vector<pfc::ProjectiveLine> lines = pfc::find_lines(slice);
        if (!lines.empty()) {
            j["slice"] = "reducible";
            nlohmann::json ls = nlohmann::json::array();
            for (const pfc::ProjectiveLine& l : lines) {
                nlohmann::json lj = nlohmann::json::array();
                for (int k = 0; k < 3; ++k) lj.push_back(pfc::complex_to_json(l.uvw[k]));
                ls.push_back(lj);
            }
            j["lines"] = ls;
        } else {
            pfc::CanonicalTernary ct = pfc::weierstrass_reduce(slice);
            j["slice"] = "irreducible";
            j["lam3"] = pfc::complex_to_json(ct.lam3);
            j["lam7"] = pfc::complex_to_json(ct.lam7);
            j["lam8"] = pfc::complex_to_json(ct.lam8);
            j["transform"] = transform3_json(ct.transform);
            j["label"] = ct.label.variant;
            j["family"] = ct.label.family == pfc::CanonLabel::Family::I ? "I" : "II";
            j["ambiguous"] = ct.label.ambiguous;
            if (ct.label.alpha) j["alpha"] = pfc::complex_to_json(*ct.label.alpha);
        }
    }
    if (cfg.format == "text") {
        std::cout << "slice: " << j["slice"].get<std::string>() << "\n";
        if (j.contains("label")) std::cout << "label: " << j["label"].get<std::string>() << "\n";
        if (j.contains("lines")) std::cout << "lines: " << j["lines"].dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian representations of cubic surfaces"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--precision", cfg.precision_bits, "working precision in bits")
        ->check(CLI::Range(64L, 4096L))
        ->envname("PFAFF_PRECISION_BITS");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--d11-branch", cfg.d11_branch, "square-root branch for d11")
        ->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--max-rotations", cfg.max_rotations, "rotation attempts before plane splitting")
        ->check(CLI::Range(1, 1000));
    app.add_option("--jobs", cfg.jobs, "batch worker threads (0 = all processors)");

    std::string expr, theta_file, batch_file, matrices_file;

    CLI::App* rep = app.add_subcommand("represent", "construct a Pfaffian representation");
    rep->fallthrough();
    rep->add_option("--cubic", expr, "cubic expression in x,y,z,t");
    rep->add_option("--theta-file", theta_file, "JSON file with a theta vector");
    rep->add_option("--batch", batch_file, "file with one JSON input object per line");

    CLI::App* ver = app.add_subcommand("verify", "certify matrices against a cubic");
    ver->fallthrough();
    ver->add_option("--matrices", matrices_file, "JSON document with the matrices")->required();
    ver->add_option("--cubic", expr, "cubic expression overriding the document");

    CLI::App* can = app.add_subcommand("canon", "canonicalize the y = 0 slice");
    can->fallthrough();
    can->add_option("--cubic", expr, "cubic expression in x,y,z,t");
    can->add_option("--theta-file", theta_file, "JSON file with a theta vector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (rep->parsed()) {
            if (!batch_file.empty()) return cmd_represent_batch(cfg, batch_file);
            return cmd_represent_single(cfg, expr, theta_file);
        }
        if (ver->parsed()) return cmd_verify(cfg, matrices_file, expr);
        return cmd_canon(cfg, expr, theta_file);
    } catch (const pfc::RepresentationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const pfc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
