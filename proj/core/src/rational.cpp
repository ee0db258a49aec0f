#include "geoint/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace geoint {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer_token(s))
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
    return z.get_si();
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("prime_factors(0)");
    if (n == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("prime_factors overflow");
    if (n < 0) n = -n;
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

SquareDecomposition square_decompose(const Rational& r) {
    if (r == 0) throw std::invalid_argument("square_decompose(0)");
    // r = num/den = num*den / den^2
    Integer prod = r.get_num() * r.get_den();
    int s = sgn(prod);
    prod = abs(prod);
    Integer core = 1, root = 1;
    Integer rest = prod;
    for (Integer p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) root *= p;
        if (e % 2) core *= p;
    }
    core *= rest;
    Rational c(root, r.get_den());
    c.canonicalize();
    return {c, s * to_int64(core)};
}

}  // namespace geoint
