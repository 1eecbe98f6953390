#include "seedopt/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace seedopt {

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
    if (s.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        return false;
    out = v;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = 0, d = 0;
        if (!parse_int64(text.substr(0, slash), n) || !parse_int64(text.substr(slash + 1), d))
            throw std::invalid_argument("bad rational: '" + text + "'");
        return Rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || frac_len > 18)
            throw std::invalid_argument("bad rational: '" + text + "'");
        std::int64_t n = 0;
        if (!parse_int64(digits, n))
            throw std::invalid_argument("bad rational: '" + text + "'");
        std::int64_t d = 1;
        for (std::size_t i = 0; i < frac_len; ++i)
            d *= 10;
        return Rational(n, d);
    }
    std::int64_t n = 0;
    if (!parse_int64(text, n))
        throw std::invalid_argument("bad rational: '" + text + "'");
    return Rational(n);
}

}  // namespace seedopt
