#include "bilin/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bilin {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly: coefficient addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly: coefficient multiplication overflow");
    return r;
}

int checked_exp_add(int a, int b) {
    long long r = static_cast<long long>(a) + b;
    if (r < INT32_MIN || r > INT32_MAX)
        throw std::overflow_error("LaurentPoly: exponent overflow");
    return static_cast<int>(r);
}

}  // namespace

LaurentPoly::LaurentPoly(const std::vector<std::pair<int, std::int64_t>>& terms) {
    for (const auto& [e, c] : terms) insert_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
    LaurentPoly p;
    p.insert_term(exponent, coefficient);
    return p;
}

void LaurentPoly::insert_term(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coefficient);
        return;
    }
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> LaurentPoly::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

double pow_int(double x, int e) {
    if (e < 0) {
        if (x == 0.0) throw std::domain_error("pow_int: x = 0 with negative exponent");
        return 1.0 / pow_int(x, -e);
    }
    double r = 1.0, base = x;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

double LaurentPoly::eval(double x) const {
    if (x == 0.0 && order() && *order() < 0)
        throw std::domain_error("LaurentPoly::eval: x = 0 with negative exponent");
    double sum = 0.0;
    for (const auto& [e, c] : terms_)  // ascending exponent
        sum += static_cast<double>(c) * pow_int(x, e);
    return sum;
}

Rational LaurentPoly::eval(const Rational& x) const {
    if (x == 0 && order() && *order() < 0)
        throw std::domain_error("LaurentPoly::eval: x = 0 with negative exponent");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        int n = e < 0 ? -e : e;
        for (int i = 0; i < n; ++i) p *= x;
        if (e < 0) p = Rational(1) / p;
        sum += Rational(c) * p;
    }
    return sum;
}

LaurentPoly LaurentPoly::truncated_below(int bound) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (e < bound) out.terms_.emplace(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (c == INT64_MIN) throw std::overflow_error("LaurentPoly: negation overflow");
        out.terms_.emplace(e, -c);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        if (c == INT64_MIN) throw std::overflow_error("LaurentPoly: negation overflow");
        insert_term(e, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.insert_term(checked_exp_add(e1, e2), checked_mul(c1, c2));
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) out << '-';
        } else {
            out << (a < 0 ? '-' : '+');
        }
        first = false;
        std::uint64_t mag = a < 0 ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << 'x';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad poly \"" + std::string(s) + "\": " + what);
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    std::uint64_t parse_uint() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("digit expected");
        std::uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
            if (v > (UINT64_MAX - d) / 10) fail("integer overflow");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    int parse_int() {
        bool neg = false;
        if (!done() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos;
        }
        std::uint64_t mag = parse_uint();
        if (mag > static_cast<std::uint64_t>(INT32_MAX) + (neg ? 1 : 0)) fail("exponent overflow");
        return neg ? static_cast<int>(-static_cast<std::int64_t>(mag)) : static_cast<int>(mag);
    }

    // term := uint | [uint] 'x' ['^' int]
    std::pair<int, std::int64_t> parse_term(bool negative) {
        std::uint64_t mag = 1;
        bool saw_coeff = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            mag = parse_uint();
            saw_coeff = true;
        }
        if (mag > static_cast<std::uint64_t>(INT64_MAX)) fail("coefficient overflow");
        auto coeff = static_cast<std::int64_t>(mag);
        if (negative) coeff = -coeff;
        if (done() || peek() != 'x') {
            if (!saw_coeff) fail("term expected");
            return {0, coeff};
        }
        ++pos;  // 'x'
        int e = 1;
        if (!done() && peek() == '^') {
            ++pos;
            e = parse_int();
        }
        return {e, coeff};
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    PolyParser p{text};
    if (p.done()) p.fail("empty");
    LaurentPoly out;
    bool neg = false;
    if (p.peek() == '-') {
        neg = true;
        ++p.pos;
    }
    auto [e, c] = p.parse_term(neg);
    out.insert_term(e, c);
    while (!p.done()) {
        char op = p.peek();
        if (op != '+' && op != '-') p.fail("'+' or '-' expected");
        ++p.pos;
        auto [e2, c2] = p.parse_term(op == '-');
        out.insert_term(e2, c2);
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        throw std::invalid_argument("bad rational \"" + std::string(text) + "\"");
    };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto parse_i = [&](std::string_view part) -> boost::multiprecision::cpp_int {
        if (part.empty()) bad();
        std::size_t i = part[0] == '-' || part[0] == '+' ? 1 : 0;
        if (i == part.size()) bad();
        for (std::size_t k = i; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) bad();
        return boost::multiprecision::cpp_int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_i(text));
    auto num = parse_i(text.substr(0, slash));
    auto den = parse_i(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    return r.str();
}

}  // namespace bilin
