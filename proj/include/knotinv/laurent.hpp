#pragma once

// Laurent polynomials with big-integer coefficients, plus the exact
// evaluations the coefficient identities need: integer points, t = i
// (Gaussian integers) and t = e^{2*pi*i/3} (Eisenstein integers), and the
// five fixed residue-class coefficient sums.

#include "knotinv/exactnum.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace knotinv {

inline long long mod_euclid(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

struct GaussianInt {
    BigInt re;
    BigInt im;

    friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
        return x.re == y.re && x.im == y.im;
    }

    std::string str() const { return re.str() + (im < 0 ? "" : "+") + im.str() + "*i"; }
};

// a + b*w with w = e^{2*pi*i/3}, reduced via w^2 = -1 - w.
struct EisensteinInt {
    BigInt a;
    BigInt b;

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a == y.a && x.b == y.b;
    }

    std::string str() const { return a.str() + (b < 0 ? "" : "+") + b.str() + "*w"; }
};

// The five coefficient-sum descriptors. These are fixed shapes, not a general
// weight interface: each one names an index set over the exponents and a sign
// rule, and the consumers need them bit-exact.
enum class ResidueSum {
    odd_coeffs,              // sum of c_i over odd i
    multiples_of_three,      // sum of c_i over 3 | i
    non_multiples_of_three_signed,  // sum of (-1)^{(i-1) mod 3} c_i over 3 ∤ i
    non_multiples_of_three,  // sum of c_i over 3 ∤ i
    odd_alternating,         // sum of (-1)^{(i-1)/2} c_i over odd i
};

inline ResidueSum parse_residue_sum(const std::string& name) {
    if (name == "odd") return ResidueSum::odd_coeffs;
    if (name == "mult3") return ResidueSum::multiples_of_three;
    if (name == "nonmult3-signed") return ResidueSum::non_multiples_of_three_signed;
    if (name == "nonmult3") return ResidueSum::non_multiples_of_three;
    if (name == "odd-alternating") return ResidueSum::odd_alternating;
    throw input_error("unknown residue-sum descriptor: " + name);
}

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(BigInt c) {
        LaurentPoly p;
        if (c != 0) p.terms_[0] = std::move(c);
        return p;
    }

    static LaurentPoly monomial(long long exp, BigInt coef) {
        LaurentPoly p;
        if (coef != 0) p.terms_[exp] = std::move(coef);
        return p;
    }

    static LaurentPoly from_terms(std::initializer_list<std::pair<long long, long long>> ts) {
        LaurentPoly p;
        for (const auto& [e, c] : ts) p.add_term(e, BigInt(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, BigInt>& terms() const { return terms_; }

    long long min_exp() const {
        if (terms_.empty()) throw internal_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    long long max_exp() const {
        if (terms_.empty()) throw internal_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    BigInt coeff(long long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(long long exp, const BigInt& coef) {
        if (coef == 0) return;
        BigInt& slot = terms_[exp];
        slot += coef;
        if (slot == 0) terms_.erase(exp);
    }

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [e1, c1] : p.terms_)
            for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

    // Multiply by x^shift.
    LaurentPoly shifted(long long shift) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
        return r;
    }

    LaurentPoly scaled(const BigInt& k) const {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
        return r;
    }

    // Exact evaluation at a nonzero integer point; rational when negative
    // exponents are present.
    BigRational eval_int(const BigInt& t0) const {
        if (t0 == 0) {
            if (!terms_.empty() && min_exp() < 0)
                throw input_error("eval_int: t = 0 with negative exponents");
            return BigRational(coeff(0));
        }
        if (terms_.empty()) return BigRational(0);
        long long lo = min_exp();
        long long shift = lo < 0 ? -lo : 0;
        BigInt acc = 0;
        // Horner over the shifted ordinary polynomial sum c_i t^{i+shift}.
        long long prev = max_exp() + shift;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            long long e = it->first + shift;
            acc *= big_pow(t0, prev - e);
            acc += it->second;
            prev = e;
        }
        acc *= big_pow(t0, prev);
        if (shift == 0) return BigRational(acc);
        return BigRational(acc, big_pow(t0, shift));
    }

    GaussianInt eval_at_i() const {
        GaussianInt g{0, 0};
        for (const auto& [e, c] : terms_) {
            switch (mod_euclid(e, 4)) {
                case 0: g.re += c; break;
                case 1: g.im += c; break;
                case 2: g.re -= c; break;
                default: g.im -= c; break;
            }
        }
        return g;
    }

    EisensteinInt eval_at_omega() const {
        EisensteinInt w{0, 0};
        for (const auto& [e, c] : terms_) {
            switch (mod_euclid(e, 3)) {
                case 0: w.a += c; break;
                case 1: w.b += c; break;
                default:  // w^2 = -1 - w
                    w.a -= c;
                    w.b -= c;
                    break;
            }
        }
        return w;
    }

    BigInt residue_signed_sum(ResidueSum which) const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) {
            switch (which) {
                case ResidueSum::odd_coeffs:
                    if (mod_euclid(e, 2) == 1) s += c;
                    break;
                case ResidueSum::multiples_of_three:
                    if (mod_euclid(e, 3) == 0) s += c;
                    break;
                case ResidueSum::non_multiples_of_three_signed:
                    if (mod_euclid(e, 3) != 0)
                        s += (mod_euclid(e - 1, 3) == 0) ? c : -c;
                    break;
                case ResidueSum::non_multiples_of_three:
                    if (mod_euclid(e, 3) != 0) s += c;
                    break;
                case ResidueSum::odd_alternating:
                    if (mod_euclid(e, 2) == 1) s += (mod_euclid((e - 1) / 2, 2) == 0) ? c : -c;
                    break;
            }
        }
        return s;
    }

    // Exponent negation i -> -i (the mirror image's polynomial).
    LaurentPoly invert_variable() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    // Text form, terms in ascending exponent order: "-t^-4+t^-3+t^-1".
    std::string str(char var = 't') const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            if (e == 0) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str();
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    static LaurentPoly parse(const std::string& text, char var = 't') {
        LaurentPoly p;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        if (i == text.size()) throw input_error("polynomial syntax: empty input");
        bool first = true;
        while (i < text.size()) {
            skip_ws();
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw input_error("polynomial syntax: expected '+' or '-'");
            }
            skip_ws();
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
            long long exp = 0;
            skip_ws();
            if (i < text.size() && text[i] == var) {
                ++i;
                exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::string es;
                    if (i < text.size() && (text[i] == '-' || text[i] == '+')) es += text[i++];
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        es += text[i++];
                    if (es.empty() || es == "-" || es == "+")
                        throw input_error("polynomial syntax: bad exponent");
                    exp = std::strtoll(es.c_str(), nullptr, 10);
                }
            } else if (digits.empty()) {
                throw input_error("polynomial syntax: expected coefficient or variable");
            }
            if (sign < 0) coef = -coef;
            p.add_term(exp, coef);
            first = false;
            skip_ws();
        }
        return p;
    }

    nlohmann::json to_json(const std::string& var = "t") const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : terms_)
            terms.push_back({{"exp", e}, {"coef", c.str()}});
        return {{"var", var}, {"terms", terms}};
    }

    static LaurentPoly from_json(const nlohmann::json& j) {
        LaurentPoly p;
        for (const auto& t : j.at("terms"))
            p.add_term(t.at("exp").get<long long>(), BigInt(t.at("coef").get<std::string>()));
        return p;
    }

private:
    std::map<long long, BigInt> terms_;
};

}  // namespace knotinv
