#include "selkow/rational.hpp"

#include <stdexcept>

namespace selkow {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: a product of i consecutive integers is divisible by i!
    }
    return c;
}

BigInt ceil_rational(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);  // canonical form: den > 0
    BigInt q = num / den;               // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;

    const BigInt scaled = num * scale;
    BigInt q = scaled / den;
    const BigInt rem = scaled % den;
    const BigInt twice = rem * 2;
    if (twice > den || (twice == den && q % 2 != 0)) ++q;  // round half to even

    const BigInt whole = q / scale;
    std::string out;
    if (negative && q != 0) out += '-';
    out += whole.str();
    if (digits > 0) {
        std::string frac = BigInt(q % scale).str();
        out += '.';
        out.append(static_cast<size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace selkow
