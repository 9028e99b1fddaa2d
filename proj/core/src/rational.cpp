#include "qcoh/rational.hpp"

#include <cctype>

namespace qcoh {

std::string rational_to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0)
        return std::nullopt;
    BigInt n{std::string(num)};
    Rational value(n, d);
    if (negative)
        value = -value;
    return value;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

BigInt factorial(int n) {
    BigInt result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

} // namespace qcoh
