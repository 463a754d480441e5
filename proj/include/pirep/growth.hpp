#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pirep/exponent.hpp"
#include "pirep/multilin.hpp"

namespace pirep {

enum class Verdict { pass, fail, inconclusive };
std::string verdict_name(Verdict v);

struct GrowthPoint {
    std::size_t n = 0;
    std::size_t c = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> primes;
};

/// Envelope fit c_n ~ C * n^r * d^n over half-integer exponents r. r is
/// stored doubled (twice_r) so all bracket checks stay exact after squaring.
struct GrowthFit {
    int twice_r1 = 0;
    int twice_r2 = 0;
    std::size_t witness_n1 = 1; // C1 = c_{n1} / (n1^{r1} d^{n1})
    std::size_t witness_n2 = 1;
    double c1_approx = 0.0;
    double c2_approx = 0.0;
};

struct GrowthReport {
    std::string name;
    std::size_t max_n = 0;
    std::size_t d = 0;
    bool d_lower_bound_only = false;
    std::vector<GrowthPoint> table;
    std::optional<GrowthFit> fit; // set when d > 0 and all c_n > 0
    bool root_in_window = false;  // c_max^(1/max) within [0.6 d, 1.05 d]
    Verdict verdict = Verdict::fail;
    std::string note;
};

struct GrowthOptions {
    std::size_t max_n = 6;
    EvalOptions eval;
    ExponentOptions exponent;
};

GrowthReport run_growth(const std::string &name, const LinearRep &rep, const Envelope &env,
                        const LeviData &levi, const GrowthOptions &opts);

} // namespace pirep
