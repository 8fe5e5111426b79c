#include "bilin/algorithm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bilin {

void BilinearAlgorithm::validate() const {
    if (n1 <= 0 || n2 <= 0 || n3 <= 0)
        throw std::invalid_argument("algorithm dims must be positive");
    if (length <= 0) throw std::invalid_argument("algorithm length must be positive");
    auto check = [&](const std::vector<CoeffGrid>& grids, int rows, int cols, const char* which) {
        if (static_cast<int>(grids.size()) != length)
            throw std::invalid_argument(std::string(which) + ": expected " +
                                        std::to_string(length) + " grids, got " +
                                        std::to_string(grids.size()));
        for (const auto& g : grids)
            if (g.rows() != rows || g.cols() != cols)
                throw std::invalid_argument(std::string(which) + ": grid shape mismatch");
    };
    check(gamma, n1, n3, "gamma");
    check(alpha, n1, n2, "alpha");
    check(beta, n2, n3, "beta");
}

LaurentPoly decode_decimal_entry(std::string_view text) {
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("bad decimal entry \"" + std::string(text) + "\": " + why);
    };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    if (s.empty()) bad("empty");
    auto dot = s.find('.');
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (ip.empty() || (dot != std::string_view::npos && fp.empty())) bad("malformed");
    if (fp.find('.') != std::string_view::npos) bad("multiple dots");
    std::vector<std::pair<int, std::int64_t>> terms;
    for (std::size_t i = 0; i < ip.size(); ++i) {
        char ch = ip[i];
        if (ch == '0') continue;
        if (ch == '1') {
            int place = static_cast<int>(ip.size() - 1 - i);  // value 10^place -> x^-place
            terms.emplace_back(-place, neg ? -1 : 1);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            bad(std::string("digit '") + ch + "' not representable (digits must be 0 or 1)");
        } else {
            bad("malformed");
        }
    }
    for (std::size_t i = 0; i < fp.size(); ++i) {
        char ch = fp[i];
        if (ch == '0') continue;
        if (ch == '1') {
            terms.emplace_back(static_cast<int>(i + 1), neg ? -1 : 1);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            bad(std::string("digit '") + ch + "' not representable (digits must be 0 or 1)");
        } else {
            bad("malformed");
        }
    }
    return LaurentPoly(terms);
}

std::string encode_decimal_entry(const LaurentPoly& poly) {
    if (poly.is_zero()) return "0";
    int sign = 0;
    for (const auto& [e, c] : poly.terms()) {
        if (c != 1 && c != -1)
            throw std::invalid_argument(
                "entry not decimal-encodable (|coefficient| != 1): use the poly encoding");
        int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign)
            throw std::invalid_argument(
                "entry not decimal-encodable (mixed signs): use the poly encoding");
    }
    int lo = *poly.order();          // most significant digit: place 10^-lo
    int hi = *poly.max_exponent();   // least significant: place 10^-hi
    std::string out;
    if (sign < 0) out += '-';
    if (lo >= 1) {
        out += "0.";
        for (int e = 1; e <= hi; ++e) out += poly.coefficient(e) != 0 ? '1' : '0';
    } else {
        for (int e = lo; e <= std::min(hi, 0); ++e) out += poly.coefficient(e) != 0 ? '1' : '0';
        if (hi >= 1) {
            out += '.';
            for (int e = 1; e <= hi; ++e) out += poly.coefficient(e) != 0 ? '1' : '0';
        }
    }
    return out;
}

namespace {

// line-oriented tokenizer for the BILIN v1 format; '#' starts a comment
struct Tokenizer {
    std::vector<std::pair<std::size_t, std::string>> tokens;  // (line, token)
    std::size_t pos = 0;
    std::size_t last_line = 1;

    explicit Tokenizer(std::string_view text) {
        std::size_t line = 1;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                tokens.emplace_back(line, cur);
                cur.clear();
            }
        };
        bool comment = false;
        for (char ch : text) {
            if (ch == '\n') {
                flush();
                comment = false;
                ++line;
            } else if (comment) {
                // skip
            } else if (ch == '#') {
                flush();
                comment = true;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                flush();
            } else {
                cur += ch;
            }
        }
        flush();
        last_line = line;
    }

    bool done() const { return pos >= tokens.size(); }
    std::size_t line() const { return done() ? last_line : tokens[pos].first; }
    const std::string& next(const char* what) {
        if (done()) throw ParseError(last_line, std::string("unexpected end of file, expected ") + what);
        return tokens[pos++].second;
    }
    void expect(const char* literal) {
        const auto& t = next(literal);
        if (t != literal)
            throw ParseError(tokens[pos - 1].first,
                             "expected \"" + std::string(literal) + "\", got \"" + t + "\"");
    }
    int next_int(const char* what) {
        const auto& t = next(what);
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw ParseError(tokens[pos - 1].first,
                             "expected integer for " + std::string(what) + ", got \"" + t + "\"");
        }
    }
};

LaurentPoly parse_entry(const std::string& tok, Encoding enc, std::size_t line) {
    try {
        return enc == Encoding::Decimal ? decode_decimal_entry(tok) : LaurentPoly::parse(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

BilinearAlgorithm parse_algorithm(std::string_view text) {
    Tokenizer tz(text);
    BilinearAlgorithm alg;

    tz.expect("bilinear");
    alg.name = tz.next("algorithm name");
    tz.expect("dims");
    alg.n1 = tz.next_int("n1");
    alg.n2 = tz.next_int("n2");
    alg.n3 = tz.next_int("n3");
    if (alg.n1 <= 0 || alg.n2 <= 0 || alg.n3 <= 0)
        throw ParseError(tz.line(), "dims must be positive");
    tz.expect("length");
    alg.length = tz.next_int("T");
    if (alg.length <= 0) throw ParseError(tz.line(), "length must be positive");
    tz.expect("encoding");
    const auto& encname = tz.next("encoding name");
    Encoding enc;
    if (encname == "decimal")
        enc = Encoding::Decimal;
    else if (encname == "poly")
        enc = Encoding::Poly;
    else
        throw ParseError(tz.line(), "unknown encoding \"" + encname + "\" (decimal|poly)");

    auto read_grid = [&](int rows, int cols, const char* label) {
        tz.expect(label);
        CoeffGrid g(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                std::size_t line = tz.line();
                g.at(r, c) = parse_entry(tz.next("entry"), enc, line);
            }
        return g;
    };

    for (int t = 1; t <= alg.length; ++t) {
        std::size_t line = tz.line();
        tz.expect("t");
        int got = tz.next_int("t index");
        if (got != t) {
            if (got < t) throw ParseError(line, "duplicate or out-of-order block t " + std::to_string(got));
            throw ParseError(line, "missing block t " + std::to_string(t) + " (found t " +
                                       std::to_string(got) + ")");
        }
        alg.gamma.push_back(read_grid(alg.n1, alg.n3, "gamma"));
        alg.alpha.push_back(read_grid(alg.n1, alg.n2, "alpha"));
        alg.beta.push_back(read_grid(alg.n2, alg.n3, "beta"));
    }
    if (!tz.done())
        throw ParseError(tz.line(), "trailing content after block t " + std::to_string(alg.length) +
                                        " (header length mismatch?)");
    alg.validate();
    return alg;
}

BilinearAlgorithm parse_algorithm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algorithm(buf.str());
}

std::string serialize_algorithm(const BilinearAlgorithm& alg, Encoding enc) {
    alg.validate();
    std::ostringstream out;
    out << "bilinear " << alg.name << "\n";
    out << "dims " << alg.n1 << ' ' << alg.n2 << ' ' << alg.n3 << "\n";
    out << "length " << alg.length << "\n";
    out << "encoding " << (enc == Encoding::Decimal ? "decimal" : "poly") << "\n";
    auto entry = [&](const LaurentPoly& p, const char* tensor, int t, int r, int c) {
        if (enc == Encoding::Poly) return p.to_string();
        try {
            return encode_decimal_entry(p);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string(tensor) + " t=" + std::to_string(t) + " row=" +
                                        std::to_string(r + 1) + " col=" + std::to_string(c + 1) +
                                        ": " + e.what());
        }
    };
    auto grid = [&](const CoeffGrid& g, const char* label, int t) {
        out << label << "\n";
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < g.cols(); ++c) {
                if (c) out << ' ';
                out << entry(g.at(r, c), label, t, r, c);
            }
            out << "\n";
        }
    };
    for (int t = 1; t <= alg.length; ++t) {
        out << "t " << t << "\n";
        grid(alg.gamma[t - 1], "gamma", t);
        grid(alg.alpha[t - 1], "alpha", t);
        grid(alg.beta[t - 1], "beta", t);
    }
    return out.str();
}

namespace {

BilinearAlgorithm make_classical(int n1, int n2, int n3) {
    BilinearAlgorithm alg;
    alg.name = "classical-" + std::to_string(n1) + "x" + std::to_string(n2) + "x" +
               std::to_string(n3);
    alg.n1 = n1;
    alg.n2 = n2;
    alg.n3 = n3;
    alg.length = n1 * n2 * n3;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n3; ++k) {
                CoeffGrid g(n1, n3), a(n1, n2), b(n2, n3);
                g.at(i, k) = LaurentPoly::constant(1);
                a.at(i, j) = LaurentPoly::constant(1);
                b.at(j, k) = LaurentPoly::constant(1);
                alg.gamma.push_back(std::move(g));
                alg.alpha.push_back(std::move(a));
                alg.beta.push_back(std::move(b));
            }
    return alg;
}

// Strassen's seven products for 2x2 matrices, constant coefficients.
BilinearAlgorithm make_strassen() {
    BilinearAlgorithm alg;
    alg.name = "strassen-2x2x2";
    alg.n1 = alg.n2 = alg.n3 = 2;
    alg.length = 7;
    // per product: A-side entries, B-side entries, C-side entries as
    // ((row, col), coeff) lists, 0-based
    using E = std::vector<std::pair<std::pair<int, int>, int>>;
    struct P { E a, b, c; };
    const std::vector<P> products = {
        // M1 = (A11 + A22)(B11 + B22) -> C11 + C22
        {{{{0, 0}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}, {{1, 1}, 1}}},
        // M2 = (A21 + A22) B11 -> C21 - C22
        {{{{1, 0}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}}, {{{1, 0}, 1}, {{1, 1}, -1}}},
        // M3 = A11 (B12 - B22) -> C12 + C22
        {{{{0, 0}, 1}}, {{{0, 1}, 1}, {{1, 1}, -1}}, {{{0, 1}, 1}, {{1, 1}, 1}}},
        // M4 = A22 (B21 - B11) -> C11 + C21
        {{{{1, 1}, 1}}, {{{1, 0}, 1}, {{0, 0}, -1}}, {{{0, 0}, 1}, {{1, 0}, 1}}},
        // M5 = (A11 + A12) B22 -> C12 - C11
        {{{{0, 0}, 1}, {{0, 1}, 1}}, {{{1, 1}, 1}}, {{{0, 1}, 1}, {{0, 0}, -1}}},
        // M6 = (A21 - A11)(B11 + B12) -> C22
        {{{{1, 0}, 1}, {{0, 0}, -1}}, {{{0, 0}, 1}, {{0, 1}, 1}}, {{{1, 1}, 1}}},
        // M7 = (A12 - A22)(B21 + B22) -> C11
        {{{{0, 1}, 1}, {{1, 1}, -1}}, {{{1, 0}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}}},
    };
    for (const auto& p : products) {
        CoeffGrid g(2, 2), a(2, 2), b(2, 2);
        for (const auto& [rc, v] : p.a) a.at(rc.first, rc.second) = LaurentPoly::constant(v);
        for (const auto& [rc, v] : p.b) b.at(rc.first, rc.second) = LaurentPoly::constant(v);
        for (const auto& [rc, v] : p.c) g.at(rc.first, rc.second) = LaurentPoly::constant(v);
        alg.gamma.push_back(std::move(g));
        alg.alpha.push_back(std::move(a));
        alg.beta.push_back(std::move(b));
    }
    return alg;
}

bool parse_classical_dims(const std::string& name, int& n1, int& n2, int& n3) {
    if (name.rfind("classical-", 0) != 0) return false;
    std::string dims = name.substr(10);
    int vals[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t end = i < 2 ? dims.find('x', start) : dims.size();
        if (end == std::string::npos || end == start) return false;
        try {
            std::size_t used = 0;
            vals[i] = std::stoi(dims.substr(start, end - start), &used);
            if (used != end - start) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (vals[i] <= 0 || vals[i] > 16) return false;
        start = end + 1;
    }
    n1 = vals[0];
    n2 = vals[1];
    n3 = vals[2];
    return true;
}

}  // namespace

std::string data_directory() {
    if (const char* env = std::getenv("BILIN_DATA_DIR"); env && *env) return env;
#ifdef BILIN_DEFAULT_DATA_DIR
    return BILIN_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

bool is_builtin_name(const std::string& name) {
    int a, b, c;
    return name == "strassen-2x2x2" || name == "smirnov-4x4x4-46" ||
           parse_classical_dims(name, a, b, c);
}

BilinearAlgorithm builtin(const std::string& name) {
    int n1, n2, n3;
    if (parse_classical_dims(name, n1, n2, n3)) return make_classical(n1, n2, n3);
    if (name == "strassen-2x2x2") return make_strassen();
    if (name == "smirnov-4x4x4-46")
        return parse_algorithm_file(data_directory() + "/smirnov-4x4x4-46.bilin");
    throw std::invalid_argument("unknown builtin algorithm \"" + name + "\"");
}

CoefficientCensus census(const BilinearAlgorithm& alg) {
    CoefficientCensus out;
    out.total_slots = static_cast<std::int64_t>(alg.length) *
                      (alg.n1 * alg.n3 + alg.n1 * alg.n2 + alg.n2 * alg.n3);
    int min_e = 0, max_e = 0;
    bool any = false;
    auto scan = [&](const std::vector<CoeffGrid>& grids, const char* tensor) {
        for (int t = 0; t < alg.length; ++t) {
            const CoeffGrid& g = grids[t];
            for (int r = 0; r < g.rows(); ++r)
                for (int c = 0; c < g.cols(); ++c) {
                    const LaurentPoly& p = g.at(r, c);
                    if (p.is_zero()) continue;
                    ++out.nonzero;
                    if (p.term_count() == 1)
                        ++out.monomials;
                    else
                        out.multi_term.push_back({tensor, t + 1, r + 1, c + 1, p});
                    for (const auto& [e, coef] : p.terms()) {
                        ++out.exponent_histogram[e];
                        if (!any) {
                            min_e = max_e = e;
                            any = true;
                        } else {
                            min_e = std::min(min_e, e);
                            max_e = std::max(max_e, e);
                        }
                    }
                }
        }
    };
    scan(alg.gamma, "gamma");
    scan(alg.alpha, "alpha");
    scan(alg.beta, "beta");
    out.order_span = any ? max_e - min_e : 0;
    return out;
}

}  // namespace bilin
