#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qcoh {

// Exact rational coefficients. Kept in lowest terms with positive
// denominator by the backing type; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p" / "p/q" form, q > 0, lowest terms.
std::string rational_to_string(const Rational& value);

// Accepts exactly the canonical form (optional leading '-'). Returns
// nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

BigInt binomial(int n, int k);
BigInt factorial(int n);

} // namespace qcoh
