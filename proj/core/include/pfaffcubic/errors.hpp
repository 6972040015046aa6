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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numerics
struct DivideByZero : Error {
    using Error::Error;
};
struct LeadingZero : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};

// polynomial layer
struct ArityMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};

// parsing / io
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};
struct NotHomogeneousDegree3 : Error {
    using Error::Error;
};
struct ZeroPolynomial : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

// canonicalization
struct NoFlexFound : Error {
    using Error::Error;
};
struct DegenerateTangent : Error {
    using Error::Error;
};

// builder
struct CertificationFailed : Error {
    using Error::Error;
};
struct SignIndeterminate : Error {
    using Error::Error;
};
struct RotationExhausted : Error {
    using Error::Error;
};
struct NotSplit : Error {
    using Error::Error;
};
struct NotSkew : Error {
    using Error::Error;
};

// pipeline
struct RepresentationFailed : Error {
    RepresentationFailed(const std::string& stage, const std::string& msg)
        : Error("representation failed at stage '" + stage + "': " + msg), stage(stage) {}
    std::string stage;
};

}  // namespace pfc
