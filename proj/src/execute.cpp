#include "bilin/execute.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bilin {

namespace {

void check_shapes(const BilinearAlgorithm& alg, int arows, int acols, int brows, int bcols) {
    if (arows != alg.n1 || acols != alg.n2 || brows != alg.n2 || bcols != alg.n3)
        throw std::invalid_argument(
            "shape mismatch: algorithm expects " + std::to_string(alg.n1) + "x" +
            std::to_string(alg.n2) + " times " + std::to_string(alg.n2) + "x" +
            std::to_string(alg.n3) + ", got " + std::to_string(arows) + "x" +
            std::to_string(acols) + " times " + std::to_string(brows) + "x" +
            std::to_string(bcols));
}

// Numeric schedule: per product, the evaluated nonzero coefficients.
template <typename S>
struct Schedule {
    struct Term {
        int index;  // row-major slot in the operand matrix / result
        S weight;
    };
    struct Product {
        std::vector<Term> a, b, c;  // c: scatter into the result via gamma
    };
    std::vector<Product> products;

    Schedule(const BilinearAlgorithm& alg, const S& x) {
        products.resize(alg.length);
        for (int t = 0; t < alg.length; ++t) {
            auto collect = [&](const CoeffGrid& g, std::vector<Term>& out) {
                for (int r = 0; r < g.rows(); ++r)
                    for (int c = 0; c < g.cols(); ++c) {
                        const LaurentPoly& p = g.at(r, c);
                        if (!p.is_zero())
                            out.push_back({r * g.cols() + c, p.eval(x)});
                    }
            };
            collect(alg.alpha[t], products[t].a);
            collect(alg.beta[t], products[t].b);
            collect(alg.gamma[t], products[t].c);
        }
    }
};

template <typename S>
Matrix<S> apply_once(const BilinearAlgorithm& alg, const Schedule<S>& sched,
                     const Matrix<S>& a, const Matrix<S>& b, MulCounters* counters) {
    check_shapes(alg, a.rows(), a.cols(), b.rows(), b.cols());
    Matrix<S> c(alg.n1, alg.n3);
    for (const auto& prod : sched.products) {
        S fa{};
        for (const auto& term : prod.a) fa += term.weight * a.data()[term.index];
        S fb{};
        for (const auto& term : prod.b) fb += term.weight * b.data()[term.index];
        S p = fa * fb;
        if (counters) ++counters->form_products;
        for (const auto& term : prod.c) c.data()[term.index] += term.weight * p;
    }
    return c;
}

// Block-recursive application; blocks materialized per level.
MatrixD apply_recursive(const BilinearAlgorithm& alg, const Schedule<double>& sched,
                        const MatrixD& a, const MatrixD& b, int level,
                        MulCounters* counters) {
    if (level == 1) return apply_once(alg, sched, a, b, counters);
    const int br = a.rows() / alg.n1, bc = a.cols() / alg.n2, bd = b.cols() / alg.n3;
    auto block = [](const MatrixD& m, int r0, int c0, int rows, int cols) {
        MatrixD out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out.at(r, c) = m.at(r0 + r, c0 + c);
        return out;
    };
    MatrixD c(br * alg.n1, bd * alg.n3);
    for (const auto& prod : sched.products) {
        // A-side linear form of blocks
        MatrixD fa(br, bc);
        for (const auto& term : prod.a) {
            int r0 = term.index / alg.n2 * br, c0 = term.index % alg.n2 * bc;
            for (int r = 0; r < br; ++r)
                for (int col = 0; col < bc; ++col)
                    fa.at(r, col) += term.weight * a.at(r0 + r, c0 + col);
        }
        MatrixD fb(bc, bd);
        for (const auto& term : prod.b) {
            int r0 = term.index / alg.n3 * bc, c0 = term.index % alg.n3 * bd;
            for (int r = 0; r < bc; ++r)
                for (int col = 0; col < bd; ++col)
                    fb.at(r, col) += term.weight * b.at(r0 + r, c0 + col);
        }
        MatrixD p = apply_recursive(alg, sched, fa, fb, level - 1, counters);
        for (const auto& term : prod.c) {
            int r0 = term.index / alg.n3 * br, c0 = term.index % alg.n3 * bd;
            for (int r = 0; r < br; ++r)
                for (int col = 0; col < bd; ++col)
                    c.at(r0 + r, c0 + col) += term.weight * p.at(r, col);
        }
    }
    return c;
}

int ipow(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > (1 << 26)) throw std::invalid_argument("recursion size too large");
    }
    return static_cast<int>(r);
}

}  // namespace

std::vector<double> linear_forms(const BilinearAlgorithm& alg, char side, const MatrixD& m,
                                 double x) {
    const std::vector<CoeffGrid>& grids = side == 'a' ? alg.alpha : alg.beta;
    int rows = side == 'a' ? alg.n1 : alg.n2;
    int cols = side == 'a' ? alg.n2 : alg.n3;
    if (side != 'a' && side != 'b') throw std::invalid_argument("side must be 'a' or 'b'");
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument("linear_forms: matrix shape mismatch");
    std::vector<double> out(alg.length, 0.0);
    for (int t = 0; t < alg.length; ++t) {
        double sum = 0.0;
        const CoeffGrid& g = grids[t];
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const LaurentPoly& p = g.at(r, c);
                if (!p.is_zero()) sum += p.eval(x) * m.at(r, c);
            }
        out[t] = sum;
    }
    return out;
}

MatrixD multiply_once(const BilinearAlgorithm& alg, const MatrixD& a, const MatrixD& b,
                      double x, MulCounters* counters) {
    Schedule<double> sched(alg, x);
    return apply_once(alg, sched, a, b, counters);
}

MatrixD multiply_recursive(const BilinearAlgorithm& alg, const MatrixD& a, const MatrixD& b,
                           double x, int levels, bool pad, MulCounters* counters) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const int ar = ipow(alg.n1, levels), ac = ipow(alg.n2, levels), bc = ipow(alg.n3, levels);
    if (!pad) {
        if (a.rows() != ar || a.cols() != ac || b.rows() != ac || b.cols() != bc)
            throw std::invalid_argument(
                "shape mismatch: levels " + std::to_string(levels) + " expects " +
                std::to_string(ar) + "x" + std::to_string(ac) + " times " +
                std::to_string(ac) + "x" + std::to_string(bc));
        Schedule<double> sched(alg, x);
        return apply_recursive(alg, sched, a, b, levels, counters);
    }
    if (a.cols() != b.rows())
        throw std::invalid_argument("shape mismatch: A cols != B rows");
    if (a.rows() > ar || a.cols() > ac || b.cols() > bc)
        throw std::invalid_argument("input larger than the padded size for these levels");
    MatrixD ap(ar, ac), bp(ac, bc);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) ap.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) bp.at(r, c) = b.at(r, c);
    Schedule<double> sched(alg, x);
    MatrixD cp = apply_recursive(alg, sched, ap, bp, levels, counters);
    MatrixD c(a.rows(), b.cols());
    for (int r = 0; r < c.rows(); ++r)
        for (int col = 0; col < c.cols(); ++col) c.at(r, col) = cp.at(r, col);
    return c;
}

MatrixQ multiply_exact(const BilinearAlgorithm& alg, const MatrixQ& a, const MatrixQ& b,
                       const Rational& x, MulCounters* counters) {
    Schedule<Rational> sched(alg, x);
    return apply_once(alg, sched, a, b, counters);
}

MatrixD classical_multiply(const MatrixD& a, const MatrixD& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    MatrixD c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            double sum = 0.0;
            for (int k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            c.at(i, j) = sum;
        }
    return c;
}

MatrixQ classical_multiply(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    MatrixQ c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rational sum = 0;
            for (int k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            c.at(i, j) = sum;
        }
    return c;
}

// ---- CSV I/O ----

namespace {

template <typename T, typename ParseFn>
Matrix<T> read_csv_impl(std::istream& in, ParseFn parse) {
    std::vector<std::vector<T>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR and surrounding whitespace
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::vector<T> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t b = cell.find_first_not_of(" \t");
            std::size_t e = cell.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError(lineno, "empty matrix cell");
            row.push_back(parse(cell.substr(b, e - b + 1), lineno));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(lineno, "ragged matrix row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno ? lineno : 1, "empty matrix");
    Matrix<T> m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

MatrixD read_matrix_csv(std::istream& in) {
    return read_csv_impl<double>(in, [](const std::string& cell, std::size_t lineno) {
        try {
            std::size_t used = 0;
            double v = std::stod(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            return v;
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad number \"" + cell + "\"");
        }
    });
}

MatrixQ read_matrix_csv_exact(std::istream& in) {
    return read_csv_impl<Rational>(in, [](const std::string& cell, std::size_t lineno) {
        try {
            return parse_rational(cell);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad rational \"" + cell + "\"");
        }
    });
}

MatrixD read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix_csv(in);
}

MatrixQ read_matrix_csv_exact_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix_csv_exact(in);
}

void write_matrix_csv(std::ostream& out, const MatrixD& m) {
    char buf[64];
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(r, c));
            if (c) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

void write_matrix_csv(std::ostream& out, const MatrixQ& m) {
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << to_string(m.at(r, c));
        }
        out << '\n';
    }
}

}  // namespace bilin
