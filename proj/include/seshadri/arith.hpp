#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of the ambient lattice Z^n.
using IntVector = std::vector<Integer>;
/// Integer covector acting on Z^n by the dot product.
using Functional = IntVector;
/// Point of Q^n with reduced coordinates.
using RationalPoint = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "p" or "p/q". The fraction must already be reduced with q > 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer gcd_of(std::span<const Integer> values);
Integer lcm_of_denominators(std::span<const Rational> values);

Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);
Integer factorial(unsigned long n);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

Rational dot(std::span<const Integer> w, std::span<const Rational> x);
Integer dot(std::span<const Integer> w, std::span<const Integer> x);

RationalPoint to_rational(std::span<const Integer> v);
RationalPoint subtract(std::span<const Rational> a, std::span<const Rational> b);
RationalPoint add(std::span<const Rational> a, std::span<const Rational> b);
RationalPoint scale(std::span<const Rational> a, const Rational& k);

/// Multiplies a rational vector by the lcm of its denominators.
IntVector clear_denominators(std::span<const Rational> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

} // namespace seshadri
