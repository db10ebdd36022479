#include "prozeta/numbers.hpp"

#include <limits>
#include <stdexcept>

namespace prozeta {

Int binomial(long top, long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    if (bottom > top - bottom) bottom = top - bottom;
    Int r = 1;
    for (long i = 1; i <= bottom; ++i) {
        r *= top - bottom + i;
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value exceeds int64 range");
    return static_cast<std::int64_t>(v);
}

std::string decimal_string(const Rat& value, int significant_digits) {
    if (significant_digits < 1) throw std::invalid_argument("significant_digits < 1");
    if (value == 0) {
        std::string s = "0.";
        s.append(static_cast<size_t>(significant_digits - 1), '0');
        return significant_digits == 1 ? "0" : s;
    }
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    bool neg = num < 0;
    if (neg) num = -num;

    // e10 = floor(log10(num/den)): position of the leading digit.
    long e10 = 0;
    if (num >= den) {
        Int x = num / den;
        while (x >= 10) { x /= 10; ++e10; }
    } else {
        Int x = num;
        while (x < den) { x *= 10; --e10; }
    }
    // Round num/den * 10^(sig-1-e10) to an integer with sig digits.
    long shift = significant_digits - 1 - e10;
    Int sn = num, sd = den;
    if (shift >= 0) sn *= pow_int(10, static_cast<unsigned long>(shift));
    else sd *= pow_int(10, static_cast<unsigned long>(-shift));
    Int digits = (2 * sn + sd) / (2 * sd);
    std::string ds = digits.str();
    if (static_cast<long>(ds.size()) > significant_digits) {
        // rounding carried into an extra digit (e.g. 999.99 -> 1000)
        ds.pop_back();
        ++e10;
    }

    std::string out = neg ? "-" : "";
    if (e10 >= 0) {
        long ip = e10 + 1;
        if (ip >= static_cast<long>(ds.size())) {
            out += ds;
            out.append(static_cast<size_t>(ip - ds.size()), '0');
        } else {
            out += ds.substr(0, static_cast<size_t>(ip));
            out += '.';
            out += ds.substr(static_cast<size_t>(ip));
        }
    } else {
        out += "0.";
        out.append(static_cast<size_t>(-e10 - 1), '0');
        out += ds;
    }
    return out;
}

}  // namespace prozeta
