#include "bilin/verify.hpp"

#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bilin {

namespace {

void check_range(int v, int hi, const char* what) {
    if (v < 1 || v > hi)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(v) +
                                " out of range [1, " + std::to_string(hi) + "]");
}

int thread_count() {
    if (const char* env = std::getenv("BILIN_THREADS"); env && *env) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int target_tensor(const BilinearAlgorithm& alg, int i1, int i2, int j1, int j2, int k1,
                  int k2) {
    check_range(i1, alg.n1, "i1");
    check_range(i2, alg.n3, "i2");
    check_range(j1, alg.n1, "j1");
    check_range(j2, alg.n2, "j2");
    check_range(k1, alg.n2, "k1");
    check_range(k2, alg.n3, "k2");
    return (i1 == j1 && j2 == k1 && i2 == k2) ? 1 : 0;
}

LaurentPoly residual(const BilinearAlgorithm& alg, int i1, int i2, int j1, int j2, int k1,
                     int k2) {
    int L = target_tensor(alg, i1, i2, j1, j2, k1, k2);
    LaurentPoly sum;
    for (int t = 0; t < alg.length; ++t) {
        const LaurentPoly& g = alg.gamma[t].at(i1 - 1, i2 - 1);
        if (g.is_zero()) continue;
        const LaurentPoly& a = alg.alpha[t].at(j1 - 1, j2 - 1);
        if (a.is_zero()) continue;
        const LaurentPoly& b = alg.beta[t].at(k1 - 1, k2 - 1);
        if (b.is_zero()) continue;
        sum += g * a * b;
    }
    if (L) sum -= LaurentPoly::constant(L);
    return sum;
}

namespace {

struct Partial {
    LaurentPoly objective;
    std::int64_t nonzero = 0;
    bool any = false;
    int min_order = 0;
    std::vector<ResidualIndex> worst;
};

Partial scan_range(const BilinearAlgorithm& alg, int i1_lo, int i1_hi) {
    Partial p;
    for (int i1 = i1_lo; i1 <= i1_hi; ++i1)
        for (int i2 = 1; i2 <= alg.n3; ++i2)
            for (int j1 = 1; j1 <= alg.n1; ++j1)
                for (int j2 = 1; j2 <= alg.n2; ++j2)
                    for (int k1 = 1; k1 <= alg.n2; ++k1)
                        for (int k2 = 1; k2 <= alg.n3; ++k2) {
                            LaurentPoly r = residual(alg, i1, i2, j1, j2, k1, k2);
                            if (r.is_zero()) continue;
                            ++p.nonzero;
                            p.objective += r * r;
                            int ord = *r.order();
                            if (!p.any || ord < p.min_order) {
                                p.any = true;
                                p.min_order = ord;
                                p.worst.clear();
                            }
                            if (ord == p.min_order)
                                p.worst.push_back({i1, i2, j1, j2, k1, k2});
                        }
    return p;
}

}  // namespace

VerificationReport verify(const BilinearAlgorithm& alg) {
    alg.validate();
    int threads = std::min(thread_count(), alg.n1);
    std::vector<Partial> parts;
    if (threads <= 1) {
        parts.push_back(scan_range(alg, 1, alg.n1));
    } else {
        std::vector<std::future<Partial>> futs;
        int chunk = (alg.n1 + threads - 1) / threads;
        for (int lo = 1; lo <= alg.n1; lo += chunk) {
            int hi = std::min(alg.n1, lo + chunk - 1);
            futs.push_back(std::async(std::launch::async,
                                      [&alg, lo, hi] { return scan_range(alg, lo, hi); }));
        }
        for (auto& f : futs) parts.push_back(f.get());
    }
    // deterministic merge in index order (exact integers: order-independent anyway)
    Partial total;
    for (auto& p : parts) {
        total.objective += p.objective;
        total.nonzero += p.nonzero;
        if (p.any && (!total.any || p.min_order < total.min_order)) {
            total.any = true;
            total.min_order = p.min_order;
            total.worst.clear();
        }
        if (p.any && p.min_order == total.min_order)
            total.worst.insert(total.worst.end(), p.worst.begin(), p.worst.end());
    }

    VerificationReport rep;
    rep.objective = total.objective;
    rep.residual_count_nonzero = total.nonzero;
    rep.is_exact = total.objective.is_zero();
    rep.min_order_finite = total.any;
    rep.min_residual_order = total.any ? total.min_order : 0;
    rep.is_apa_valid = !total.any || total.min_order >= 1;
    rep.worst_indices = std::move(total.worst);
    return rep;
}

std::vector<std::pair<ResidualIndex, LaurentPoly>> nonzero_residuals(
    const BilinearAlgorithm& alg) {
    std::vector<std::pair<ResidualIndex, LaurentPoly>> out;
    for (int i1 = 1; i1 <= alg.n1; ++i1)
        for (int i2 = 1; i2 <= alg.n3; ++i2)
            for (int j1 = 1; j1 <= alg.n1; ++j1)
                for (int j2 = 1; j2 <= alg.n2; ++j2)
                    for (int k1 = 1; k1 <= alg.n2; ++k1)
                        for (int k2 = 1; k2 <= alg.n3; ++k2) {
                            LaurentPoly r = residual(alg, i1, i2, j1, j2, k1, k2);
                            if (!r.is_zero())
                                out.push_back({{i1, i2, j1, j2, k1, k2}, std::move(r)});
                        }
    return out;
}

double objective_value(const BilinearAlgorithm& alg, double x) {
    return verify(alg).objective.eval(x);
}

std::string format_report(const VerificationReport& report, const CoefficientCensus& cens,
                          int s_truncate) {
    std::ostringstream out;
    out << "apa_valid " << (report.is_apa_valid ? "true" : "false") << "\n";
    out << "exact " << (report.is_exact ? "true" : "false") << "\n";
    out << "min_residual_order "
        << (report.min_order_finite ? std::to_string(report.min_residual_order) : "inf")
        << "\n";
    out << "residuals_nonzero " << report.residual_count_nonzero << "\n";
    LaurentPoly shown = report.objective.truncated_below(s_truncate);
    out << "objective " << shown.to_string();
    if (shown != report.objective) out << "+O(x^" << s_truncate << ")";
    out << "\n";
    if (report.min_order_finite && !report.worst_indices.empty()) {
        out << "worst_indices";
        std::size_t shown_n = std::min<std::size_t>(report.worst_indices.size(), 8);
        for (std::size_t i = 0; i < shown_n; ++i) {
            const auto& w = report.worst_indices[i];
            out << " (" << w[0] << ',' << w[1] << ';' << w[2] << ',' << w[3] << ';' << w[4]
                << ',' << w[5] << ')';
        }
        if (report.worst_indices.size() > shown_n)
            out << " +" << report.worst_indices.size() - shown_n << " more";
        out << "\n";
    }
    out << "census_slots " << cens.total_slots << "\n";
    out << "census_nonzero " << cens.nonzero << "\n";
    out << "census_monomials " << cens.monomials << "\n";
    out << "census_multi_term " << cens.multi_term.size() << "\n";
    out << "census_order_span " << cens.order_span << "\n";
    return out.str();
}

}  // namespace bilin
