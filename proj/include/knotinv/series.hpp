#pragma once

// Power-series side: exact coefficients of J(e^x), the minimal
// integer-normalization factors lambda_k, the integer invariants v_k, and
// the coefficients of log J(e^x).
//
// Throughout, the scaled moments S_k = k! * a_k = sum_i c_i i^k are integers;
// working in that scaled form keeps the heavy loops in integer arithmetic.

#include "knotinv/exactnum.hpp"
#include "knotinv/laurent.hpp"

#include <string>
#include <vector>

namespace knotinv {

struct SeriesExpansion {
    std::vector<BigRational> coeffs;  // index 0..K

    long long order() const { return static_cast<long long>(coeffs.size()) - 1; }

    friend bool operator==(const SeriesExpansion& x, const SeriesExpansion& y) {
        return x.coeffs == y.coeffs;
    }
};

inline long long three_adic_exponent(long long k) {
    if (k <= 0) throw input_error("three_adic_exponent: positive k required");
    long long n = 0;
    while (k % 3 == 0) {
        k /= 3;
        ++n;
    }
    return n;
}

// S_0 = sum of all coefficients; S_k = sum over i != 0 of c_i i^k.
inline std::vector<BigInt> integer_moments(const LaurentPoly& J, long long K) {
    if (K < 0) throw input_error("integer_moments: negative order");
    std::vector<BigInt> s(static_cast<size_t>(K) + 1, BigInt(0));
    for (const auto& [e, c] : J.terms()) {
        s[0] += c;
        if (e == 0) continue;
        BigInt p = 1;
        for (long long k = 1; k <= K; ++k) {
            p *= e;
            s[static_cast<size_t>(k)] += c * p;
        }
    }
    return s;
}

// Coefficients a_k of J(e^x) = sum a_k x^k, exact, for 0 <= k <= K.
inline SeriesExpansion expand_exp(const LaurentPoly& J, long long K) {
    std::vector<BigInt> s = integer_moments(J, K);
    if (s[0] != 1 || (K >= 1 && s[1] != 0))
        throw input_error("expand_exp: not a knot Jones polynomial (a0 != 1 or a1 != 0)");
    SeriesExpansion a;
    a.coeffs.reserve(s.size());
    BigInt fact = 1;
    for (long long k = 0; k <= K; ++k) {
        if (k > 1) fact *= k;
        a.coeffs.emplace_back(s[static_cast<size_t>(k)], fact);
    }
    return a;
}

// Formal power-series logarithm, truncated at the input's order. Uses the
// derivative identity a * w' = a' on the scaled coefficients A_k = k! a_k,
// W_k = k! w_k:  W_k = A_k - sum_{j=1}^{k-1} C(k-1, j-1) W_j A_{k-j},
// which stays in integer arithmetic whenever the A_k are integers.
inline SeriesExpansion log_expand(const SeriesExpansion& a) {
    if (a.coeffs.empty() || a.coeffs[0] != BigRational(1))
        throw input_error("log_expand: constant term must be 1");
    const long long K = a.order();
    std::vector<BigRational> A(static_cast<size_t>(K) + 1), W(static_cast<size_t>(K) + 1);
    BigInt fact = 1;
    A[0] = BigRational(1);
    for (long long k = 1; k <= K; ++k) {
        fact *= k;
        A[static_cast<size_t>(k)] = a.coeffs[static_cast<size_t>(k)] * BigRational(fact);
    }
    std::vector<BigInt> binom{1};  // row C(k-1, .)
    for (long long k = 1; k <= K; ++k) {
        BigRational acc = A[static_cast<size_t>(k)];
        for (long long j = 1; j < k; ++j)
            acc -= BigRational(binom[static_cast<size_t>(j - 1)]) * W[static_cast<size_t>(j)] *
                   A[static_cast<size_t>(k - j)];
        W[static_cast<size_t>(k)] = acc;
        binom.push_back(1);
        for (size_t i = binom.size() - 2; i >= 1; --i) binom[i] += binom[i - 1];
    }
    SeriesExpansion w;
    w.coeffs.resize(static_cast<size_t>(K) + 1);
    fact = 1;
    for (long long k = 1; k <= K; ++k) {
        fact *= k;
        w.coeffs[static_cast<size_t>(k)] = W[static_cast<size_t>(k)] / BigRational(fact);
    }
    return w;
}

enum class LambdaStatus { exact, table, conjectured, empirical };

inline std::string lambda_status_name(LambdaStatus s) {
    switch (s) {
        case LambdaStatus::exact: return "exact";
        case LambdaStatus::table: return "table";
        case LambdaStatus::conjectured: return "conjectured";
        default: return "empirical";
    }
}

struct LambdaValue {
    long long order = 0;
    BigRational value;
    LambdaStatus status = LambdaStatus::empirical;

    // value = q_part / p_part with the two parts coprime
    const BigInt& q_part() const { return value.num(); }
    const BigInt& p_part() const { return value.den(); }
};

// lambda_{2k} = (2k)! / (2 * 3^{n+1}) with n the 3-adic valuation of k.
inline LambdaValue lambda_even(long long k) {
    if (k < 1) throw input_error("lambda_even: k >= 1 required");
    long long n = three_adic_exponent(3 * k) - 1;  // = nu_3(k)
    BigRational v(factorial(2 * k), 2 * big_pow(BigInt(3), n + 1));
    return LambdaValue{2 * k, v, LambdaStatus::exact};
}

// Published normalization factors for orders 2..15; even entries are the
// closed form, odd entries are the conjectured values.
inline LambdaValue lambda_known(long long order) {
    struct Entry {
        long long order;
        long long num, den;
    };
    static const Entry entries[] = {
        {2, 1, 3},         {3, 1, 6},          {4, 4, 1},          {5, 2, 1},
        {6, 40, 1},        {7, 60, 1},         {8, 6720, 1},       {9, 672, 1},
        {10, 604800, 1},   {11, 302400, 1},    {12, 26611200, 1},  {13, 1140480, 1},
        {14, 14529715200LL, 1}, {15, 36324288000LL, 1},
    };
    for (const Entry& e : entries)
        if (e.order == order)
            return LambdaValue{order, BigRational(e.num, e.den),
                               order % 2 == 0 ? LambdaStatus::table : LambdaStatus::conjectured};
    throw input_error("lambda_known: order must be in 2..15");
}

// lcm of denominators over gcd of numerators across a knot sample; zero
// values are skipped (they constrain nothing). This is a divisor of the true
// factor, and equals it whenever the sample realizes coprime values.
inline LambdaValue empirical_lambda(long long order, const std::vector<BigRational>& values) {
    BigInt q = 1, p = 0;
    for (const BigRational& v : values) {
        if (v.is_zero()) continue;
        q = big_lcm(q, v.den());
        p = big_gcd(p, big_abs(v.num()));
    }
    if (p == 0) throw degenerate_input_error("empirical_lambda: all values zero");
    BigRational lam(q, p);
    if (lam.num() != q || lam.den() != p)
        throw internal_error("empirical_lambda: lcm/gcd parts not coprime");
    return LambdaValue{order, lam, LambdaStatus::empirical};
}

struct VassilievValue {
    BigRational value;
    bool integral = false;
};

// v_k = lambda_k * a_k. Integrality is guaranteed for even orders with the
// exact lambda; a non-integer there is an internal bug, not data.
inline VassilievValue vassiliev_value(const LaurentPoly& J, long long k, const LambdaValue& lam) {
    if (k < 2) throw input_error("vassiliev_value: k >= 2 required");
    if (lam.order != k) throw input_error("vassiliev_value: lambda order mismatch");
    SeriesExpansion a = expand_exp(J, k);
    BigRational v = lam.value * a.coeffs[static_cast<size_t>(k)];
    bool integral = v.is_integer();
    if (!integral && k % 2 == 0 && lam.status == LambdaStatus::exact)
        throw internal_error("vassiliev_value: even-order value not integral");
    return VassilievValue{v, integral};
}

enum class ReferenceKnot { trefoil, figure_eight };

// v_{2k} for the two reference knots, straight from the evaluations of their
// printed polynomials: trefoil (-16^k + 9^k + 1) / (2*3^{n+1}), figure-eight
// 2(4^k - 1) / (2*3^{n+1}), n = nu_3(k).
inline BigRational closed_form_v(ReferenceKnot knot, long long k) {
    if (k < 1) throw input_error("closed_form_v: k >= 1 required");
    long long n = three_adic_exponent(3 * k) - 1;
    BigInt den = 2 * big_pow(BigInt(3), n + 1);
    BigInt num = knot == ReferenceKnot::trefoil
                     ? BigInt(-big_pow(BigInt(16), k) + big_pow(BigInt(9), k) + 1)
                     : BigInt(2 * (big_pow(BigInt(4), k) - 1));
    return BigRational(num, den);
}

}  // namespace knotinv
