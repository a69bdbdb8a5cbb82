#include "geomet/rational.hpp"

#include "geomet/error.hpp"

#include <cctype>

namespace geomet {

Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_text(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) bad();
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class p(n), q{std::string(den)};
    if (q == 0) bad();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace geomet
