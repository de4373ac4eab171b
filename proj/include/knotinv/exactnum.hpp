#pragma once

// Exact arbitrary-precision arithmetic: normalized rationals, factorials,
// gcd/lcm over sets, p-adic valuations. Everything here is immutable after
// construction and safe to share across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotinv {

using BigInt = boost::multiprecision::cpp_int;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// All-zero input where at least one nonzero value is required.
struct degenerate_input_error : input_error {
    using input_error::input_error;
};

// A violated internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt big_pow(BigInt base, long long e) {
    if (e < 0) throw input_error("big_pow: negative exponent");
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Exact rational with the canonical-form invariant: gcd(|num|, den) = 1 and
// den >= 1 at all times; zero is 0/1. The verification suites compare
// numerators and denominators directly, so the canonical form is load-bearing.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw input_error("rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    BigRational operator-() const {
        BigRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend BigRational operator+(const BigRational& x, const BigRational& y) {
        if (x.den_ == y.den_)
            return BigRational(x.num_ + y.num_, x.den_);
        BigInt g = big_gcd(x.den_, y.den_);
        BigInt yd = y.den_ / g;
        return BigRational(x.num_ * yd + y.num_ * (x.den_ / g), x.den_ * yd);
    }

    friend BigRational operator-(const BigRational& x, const BigRational& y) {
        return x + (-y);
    }

    friend BigRational operator*(const BigRational& x, const BigRational& y) {
        // Cross-reduce before multiplying to keep intermediates small.
        BigInt g1 = big_gcd(big_abs(x.num_), y.den_);
        BigInt g2 = big_gcd(big_abs(y.num_), x.den_);
        BigRational r;
        r.num_ = (x.num_ / g1) * (y.num_ / g2);
        r.den_ = (x.den_ / g2) * (y.den_ / g1);
        return r;
    }

    friend BigRational operator/(const BigRational& x, const BigRational& y) {
        if (y.num_ == 0) throw input_error("rational: division by zero");
        return x * BigRational(y.den_, y.num_);
    }

    BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
    BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
    BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
    BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

    friend bool operator==(const BigRational& x, const BigRational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const BigRational& x, const BigRational& y) { return !(x == y); }
    friend bool operator<(const BigRational& x, const BigRational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }

    // Serialized as "p/q", or "p" when q = 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        BigInt g = big_gcd(big_abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// Valuation in Z together with a distinguished +infinity (valuation of 0).
// Lemma-style 2-adic bounds must pass vacuously on zero coefficients, which
// is why this is a marker and not an error.
struct Valuation {
    bool finite = true;
    long long v = 0;

    static Valuation infinity() { return Valuation{false, 0}; }
    static Valuation of(long long value) { return Valuation{true, value}; }

    bool at_least(long long bound) const { return !finite || v >= bound; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (!a.finite || !b.finite) return a.finite == b.finite;
        return a.v == b.v;
    }

    std::string str() const { return finite ? std::to_string(v) : "+inf"; }
};

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long int_valuation(BigInt x, long long p) {
    if (x == 0) throw internal_error("int_valuation of zero");
    x = big_abs(x);
    long long e = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(x, BigInt(p), q, r);
        if (r != 0) break;
        x = q;
        ++e;
    }
    return e;
}

inline Valuation padic_valuation(const BigInt& x, long long p) {
    if (!is_prime(p)) throw input_error("padic_valuation: p must be prime");
    if (x == 0) return Valuation::infinity();
    return Valuation::of(int_valuation(x, p));
}

inline Valuation padic_valuation(const BigRational& x, long long p) {
    if (!is_prime(p)) throw input_error("padic_valuation: p must be prime");
    if (x.is_zero()) return Valuation::infinity();
    long long e = int_valuation(x.num(), p);
    if (e == 0 && x.den() != 1) return Valuation::of(-int_valuation(x.den(), p));
    return Valuation::of(e);
}

inline BigInt factorial(long long n) {
    if (n < 0) throw input_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// gcd over a set; zero entries are ignored (gcd(0, x) = x). All-zero input
// has no well-defined answer and is rejected.
inline BigInt gcd_set(const std::vector<BigInt>& xs) {
    BigInt g = 0;
    for (const BigInt& x : xs) {
        if (x == 0) continue;
        g = big_gcd(g, big_abs(x));
        if (g == 1) break;
    }
    if (g == 0) throw degenerate_input_error("gcd_set: all entries zero");
    return g;
}

inline BigInt lcm_set(const std::vector<BigInt>& xs) {
    if (xs.empty()) throw input_error("lcm_set: empty input");
    BigInt l = 1;
    for (const BigInt& x : xs) {
        if (x == 0) throw input_error("lcm_set: zero entry");
        l = big_lcm(l, big_abs(x));
    }
    return l;
}

}  // namespace knotinv
