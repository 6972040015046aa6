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
#include "pfaffcubic/cubic_io.hpp"

#include <cctype>

#include "pfaffcubic/errors.hpp"

namespace pfc {

namespace {

constexpr std::array<Expo, 20> kThetaMonomials = {{
    {3, 0, 0, 0},  // 1: x^3
    {0, 3, 0, 0},  // 2: y^3
    {0, 0, 3, 0},  // 3: z^3
    {0, 0, 0, 3},  // 4: t^3
    {2, 1, 0, 0},  // 5: x^2 y
    {1, 2, 0, 0},  // 6: x y^2
    {2, 0, 1, 0},  // 7: x^2 z
    {1, 0, 2, 0},  // 8: x z^2
    {2, 0, 0, 1},  // 9: x^2 t
    {1, 0, 0, 2},  // 10: x t^2
    {0, 2, 1, 0},  // 11: y^2 z
    {0, 1, 2, 0},  // 12: y z^2
    {0, 2, 0, 1},  // 13: y^2 t
    {0, 1, 0, 2},  // 14: y t^2
    {0, 0, 2, 1},  // 15: z^2 t
    {0, 0, 1, 2},  // 16: z t^2
    {1, 1, 1, 0},  // 17: x y z
    {1, 1, 0, 1},  // 18: x y t
    {1, 0, 1, 1},  // 19: x z t
    {0, 1, 1, 1},  // 20: y z t
}};

std::string monomial_name(const Expo& e) {
    static const char* names[4] = {"x", "y", "z", "t"};
    std::string s;
    for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

Expo theta_monomial(int k) { return kThetaMonomials[k - 1]; }

bool CubicSurface::is_zero() const {
    for (const auto& c : theta) {
        if (abs(c) > zero_eps()) return false;
    }
    return true;
}

MultiPoly to_poly(const CubicSurface& c) {
    MultiPoly p(4);
    for (int k = 0; k < 20; ++k) p.add_term(kThetaMonomials[k], c.theta[k]);
    return p;
}

CubicSurface from_poly(const MultiPoly& p) {
    if (p.arity() != 4) throw ArityMismatch("from_poly: arity-4 polynomial required");
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] + e[2] + e[3] != 3) {
            throw NotHomogeneousDegree3("polynomial is not homogeneous of degree 3: offending monomial " +
                                        monomial_name(e));
        }
    }
    CubicSurface out;
    for (int k = 0; k < 20; ++k) out.theta[k] = p.coeff(kThetaMonomials[k]);
    return out;
}

std::string render(const CubicSurface& c) { return to_poly(c).to_string(); }

// ---------------------------------------------------------------------------
// Expression parser (recursive descent).
//
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' uint)?
//   primary := number | 'i' | variable | '(' expr ')'

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

  private:
    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                p = p + term();
            } else if (accept('-')) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        skip_ws();
        if (accept('-')) return -factor();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                ++pos_;
                if (e > 64) throw SyntaxError("exponent too large", start);
            }
            if (pos_ == start) throw SyntaxError("expected integer exponent after '^'", pos_);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    MultiPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (accept('(')) {
            MultiPoly p = expr();
            skip_ws();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == 'i') {
            ++pos_;
            return MultiPoly::constant(4, BigComplex::i());
        }
        int var = -1;
        if (c == 'x') var = 0;
        if (c == 'y') var = 1;
        if (c == 'z') var = 2;
        if (c == 't') var = 3;
        if (var >= 0) {
            ++pos_;
            return MultiPoly::variable(4, var);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    MultiPoly number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent marker
            }
        }
        if (pos_ == start) throw SyntaxError("expected number", start);
        BigFloat v(s_.substr(start, pos_ - start));
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return MultiPoly::constant(4, BigComplex(BigFloat(), v));
        }
        return MultiPoly::constant(4, BigComplex(v));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

CubicSurface parse_cubic(const std::string& text) {
    MultiPoly p = parse_poly(text);
    if (p.is_zero()) throw ZeroPolynomial("input expands to the zero polynomial");
    return from_poly(p);
}

// ---------------------------------------------------------------------------
// JSON helpers

nlohmann::json complex_to_json(const BigComplex& v) {
    return nlohmann::json::array({v.real().to_string(), v.imag().to_string()});
}

BigComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("complex value must be a [re, im] pair");
    auto part = [](const nlohmann::json& x) {
        if (x.is_string()) return BigFloat(x.get<std::string>());
        if (x.is_number()) return BigFloat(x.get<double>());
        throw SchemaError("complex component must be a string or number");
    };
    return {part(j[0]), part(j[1])};
}

nlohmann::json theta_to_json(const CubicSurface& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c.theta) arr.push_back(complex_to_json(v));
    return arr;
}

CubicSurface cubic_from_json(const nlohmann::json& input) {
    if (input.contains("cubic")) {
        const auto& v = input["cubic"];
        if (v.is_string()) return parse_cubic(v.get<std::string>());
        if (v.is_object() && v.contains("theta")) {
            const auto& th = v["theta"];
            if (!th.is_array() || th.size() != 20) throw SchemaError("theta must be an array of 20 [re, im] pairs");
            CubicSurface c;
            for (int k = 0; k < 20; ++k) c.theta[k] = complex_from_json(th[k]);
            if (c.is_zero()) throw ZeroPolynomial("theta vector is zero");
            return c;
        }
        throw SchemaError("\"cubic\" must be an expression string or {\"theta\": [...]}");
    }
    if (input.contains("theta")) {
        const auto& th = input["theta"];
        if (!th.is_array() || th.size() != 20) throw SchemaError("theta must be an array of 20 [re, im] pairs");
        CubicSurface c;
        for (int k = 0; k < 20; ++k) c.theta[k] = complex_from_json(th[k]);
        if (c.is_zero()) throw ZeroPolynomial("theta vector is zero");
        return c;
    }
    throw SchemaError("input object must contain \"cubic\" or \"theta\"");
}

}  // namespace pfc
