#include "pirep/growth.hpp"

#include <cmath>

namespace pirep {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "fail";
}

namespace {

Int int_pow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Exact comparison of c_n/(n^r d^n) against c_m/(m^r d^m) with r = twice_r/2,
/// via squaring. Returns -1, 0, 1.
int cmp_ratio(std::size_t n, std::size_t cn, std::size_t m, std::size_t cm, int twice_r,
              std::size_t d) {
    // c_n m^r d^m  <=>  c_m n^r d^n, squared to keep exponents integral
    Int lhs = Int(static_cast<unsigned long>(cn));
    lhs *= lhs;
    lhs *= int_pow(static_cast<unsigned long>(d), 2 * static_cast<unsigned long>(m));
    Int rhs = Int(static_cast<unsigned long>(cm));
    rhs *= rhs;
    rhs *= int_pow(static_cast<unsigned long>(d), 2 * static_cast<unsigned long>(n));
    if (twice_r >= 0) {
        lhs *= int_pow(static_cast<unsigned long>(m), static_cast<unsigned long>(twice_r));
        rhs *= int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(twice_r));
    } else {
        lhs *= int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(-twice_r));
        rhs *= int_pow(static_cast<unsigned long>(m), static_cast<unsigned long>(-twice_r));
    }
    return cmp(lhs, rhs);
}

double ratio_approx(std::size_t n, std::size_t c, int twice_r, std::size_t d) {
    return static_cast<double>(c) /
           (std::pow(static_cast<double>(n), twice_r / 2.0) *
            std::pow(static_cast<double>(d), static_cast<double>(n)));
}

} // namespace

GrowthReport run_growth(const std::string &name, const LinearRep &rep, const Envelope &env,
                        const LeviData &levi, const GrowthOptions &opts) {
    if (opts.max_n < 1)
        throw input_error("run_growth: max_n must be at least 1");
    GrowthReport report;
    report.name = name;
    report.max_n = opts.max_n;

    for (std::size_t n = 1; n <= opts.max_n; ++n) {
        CodimResult c = codimension(rep, n, opts.eval);
        GrowthPoint pt;
        pt.n = n;
        pt.c = c.value;
        pt.method = c.method_used;
        pt.seed = c.seed;
        pt.primes = c.primes;
        report.table.push_back(std::move(pt));
    }

    ExponentResult er = pi_exponent(rep, env, levi, opts.exponent);
    report.d = er.d;
    report.d_lower_bound_only = er.lower_bound_only;
    if (er.lower_bound_only) {
        report.verdict = Verdict::inconclusive;
        report.note = "exponent search hit the state cap; d is only a lower bound";
        return report;
    }
    if (er.complement_disagreement)
        report.note = "alternative invariant complements changed the computed d";

    if (report.d == 0) {
        bool trailing_zero = true;
        std::size_t first = report.table.size() >= 2 ? report.table.size() - 2 : 0;
        for (std::size_t i = first; i < report.table.size(); ++i)
            if (report.table[i].c != 0)
                trailing_zero = false;
        report.verdict = trailing_zero ? Verdict::pass : Verdict::fail;
        return report;
    }

    bool all_positive = true;
    for (const auto &pt : report.table)
        if (pt.c == 0)
            all_positive = false;
    if (!all_positive) {
        report.verdict = Verdict::fail;
        report.note = "a codimension vanished although d > 0";
        return report;
    }

    const int R_MAX = 80; // half-integer grid, exponents in [-40, 40]
    GrowthFit fit;
    // least r2 with c_n/(n^{r2} d^n) non-increasing
    bool found = false;
    for (int r2 = -R_MAX; r2 <= R_MAX; ++r2) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < report.table.size() && ok; ++i)
            if (cmp_ratio(report.table[i].n, report.table[i].c, report.table[i + 1].n,
                          report.table[i + 1].c, r2, report.d) < 0)
                ok = false;
        if (ok) {
            fit.twice_r2 = r2;
            found = true;
            break;
        }
    }
    if (!found) {
        report.verdict = Verdict::fail;
        report.note = "no half-integer exponent bounds the sequence from above";
        return report;
    }
    // greatest r1 with c_n/(n^{r1} d^n) non-decreasing
    found = false;
    for (int r1 = R_MAX; r1 >= -R_MAX; --r1) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < report.table.size() && ok; ++i)
            if (cmp_ratio(report.table[i].n, report.table[i].c, report.table[i + 1].n,
                          report.table[i + 1].c, r1, report.d) > 0)
                ok = false;
        if (ok) {
            fit.twice_r1 = r1;
            found = true;
            break;
        }
    }
    if (!found) {
        report.verdict = Verdict::fail;
        report.note = "no half-integer exponent bounds the sequence from below";
        return report;
    }
    // C2 = max ratio, C1 = min ratio (witness indices)
    std::size_t w2 = 0, w1 = 0;
    for (std::size_t i = 1; i < report.table.size(); ++i) {
        if (cmp_ratio(report.table[i].n, report.table[i].c, report.table[w2].n,
                      report.table[w2].c, fit.twice_r2, report.d) > 0)
            w2 = i;
        if (cmp_ratio(report.table[i].n, report.table[i].c, report.table[w1].n,
                      report.table[w1].c, fit.twice_r1, report.d) < 0)
            w1 = i;
    }
    fit.witness_n2 = report.table[w2].n;
    fit.witness_n1 = report.table[w1].n;
    fit.c2_approx = ratio_approx(report.table[w2].n, report.table[w2].c, fit.twice_r2, report.d);
    fit.c1_approx = ratio_approx(report.table[w1].n, report.table[w1].c, fit.twice_r1, report.d);
    report.fit = fit;

    // re-check: the fitted envelope must bracket every computed point
    bool bracket = true;
    for (const auto &pt : report.table) {
        if (cmp_ratio(pt.n, pt.c, report.table[w2].n, report.table[w2].c, fit.twice_r2,
                      report.d) > 0)
            bracket = false;
        if (cmp_ratio(pt.n, pt.c, report.table[w1].n, report.table[w1].c, fit.twice_r1,
                      report.d) < 0)
            bracket = false;
        if (pt.c < 1)
            bracket = false;
    }

    // root window: c_max^(1/max) within [0.6 d, 1.05 d], checked as
    // (3d)^m <= c*5^m and c*20^m <= (21 d)^m
    std::size_t m = report.max_n;
    Int c_max(static_cast<unsigned long>(report.table.back().c));
    Int lo_lhs = int_pow(3 * static_cast<unsigned long>(report.d), static_cast<unsigned long>(m));
    Int lo_rhs = c_max * int_pow(5, static_cast<unsigned long>(m));
    Int hi_lhs = c_max * int_pow(20, static_cast<unsigned long>(m));
    Int hi_rhs = int_pow(21 * static_cast<unsigned long>(report.d), static_cast<unsigned long>(m));
    report.root_in_window = (lo_lhs <= lo_rhs) && (hi_lhs <= hi_rhs);

    report.verdict = (bracket && report.root_in_window) ? Verdict::pass : Verdict::fail;
    if (!bracket)
        report.note = "fitted envelope fails to bracket a computed point";
    else if (!report.root_in_window && report.note.empty())
        report.note = "n-th root of the last codimension is outside the growth window";
    return report;
}

} // namespace pirep
