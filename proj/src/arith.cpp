#include "seshadri/arith.hpp"

#include "seshadri/error.hpp"

#include <cctype>

namespace seshadri {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DegenerateSlice: return "DEGENERATE_SLICE";
    case ErrorCode::ValueMismatch: return "VALUE_MISMATCH";
    case ErrorCode::NotFano: return "NOT_FANO";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    }
    return "UNKNOWN";
}

Rational make_rational(const Integer& num, const Integer& den) {
    require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text))
        fail(ErrorCode::Parse, "not an integer: \"" + std::string(text) + "\"");
    if (text.front() == '+')
        text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
        fail(ErrorCode::Parse, "denominator must be a positive integer: \"" + std::string(text) + "\"");
    Integer den = parse_integer(den_text);
    if (den == 0)
        fail(ErrorCode::Parse, "zero denominator: \"" + std::string(text) + "\"");
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den)
        fail(ErrorCode::Parse, "fraction not reduced: \"" + std::string(text) + "\"");
    return q;
}

Integer gcd_of(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& v : values)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
    return make_rational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer floor_of(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rational dot(std::span<const Integer> w, std::span<const Rational> x) {
    require(w.size() == x.size(), ErrorCode::DimensionMismatch, "functional and point have different ranks");
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0)
            s += w[i] * x[i];
    return s;
}

Integer dot(std::span<const Integer> w, std::span<const Integer> x) {
    require(w.size() == x.size(), ErrorCode::DimensionMismatch, "vectors have different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += w[i] * x[i];
    return s;
}

RationalPoint to_rational(std::span<const Integer> v) {
    return RationalPoint(v.begin(), v.end());
}

RationalPoint subtract(std::span<const Rational> a, std::span<const Rational> b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "points have different ranks");
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RationalPoint add(std::span<const Rational> a, std::span<const Rational> b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "points have different ranks");
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RationalPoint scale(std::span<const Rational> a, const Rational& k) {
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * k;
    return r;
}

IntVector clear_denominators(std::span<const Rational> v) {
    Integer l = lcm_of_denominators(v);
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].get_num() * (l / v[i].get_den());
    return r;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

std::string to_string(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace seshadri
