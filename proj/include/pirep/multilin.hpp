#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pirep/linalg.hpp"
#include "pirep/linrep.hpp"
#include "pirep/symcomb.hpp"

namespace pirep {

enum class RankMethod { automatic, exact, modular };

struct EvalOptions {
    RankMethod method = RankMethod::automatic;
    std::size_t primes = 2;
    std::uint64_t seed = 1;
    unsigned long long cell_budget = 200'000'000ULL;
    bool force = false;
    std::size_t threads = 1;
};

/// Products of all length-n sequences of the (integer-scaled) basis matrices,
/// built once through shared prefix products; rows of every evaluation matrix
/// index into this table.
class EvalTable {
  public:
    EvalTable(const LinearRep &rep, std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim_l() const { return dim_l_; }
    std::size_t tuple_count() const { return tuples_; }
    std::size_t width() const { return tuples_ * dv2_; }
    unsigned long long row_cells() const; // n! * width as checked against the budget

    /// Value blocks of the monomial x_{sigma(1)}..x_{sigma(n)} across all
    /// substitution tuples (exact integers).
    void row_exact(const Perm &sigma, std::vector<Rat> &out) const;
    /// Same for a full group-algebra element (e.g. e*_T * sigma).
    void eval_exact(const GroupAlgebraElement &g, std::vector<Rat> &out) const;
    /// Value of g on one substitution tuple, as a matrix (exact).
    RatMatrix eval_on_tuple(const GroupAlgebraElement &g, const std::vector<int> &tuple) const;

    struct ModContext {
        std::uint64_t p = 0;
        std::vector<std::uint64_t> table; // same layout as the exact table
    };
    ModContext make_mod_context(std::uint64_t p) const;
    void row_mod(const ModContext &ctx, const Perm &sigma, std::vector<std::uint64_t> &out) const;
    void eval_mod(const ModContext &ctx, const GroupAlgebraElement &g,
                  std::vector<std::uint64_t> &out) const;

  private:
    std::size_t n_, dim_l_, dv_, dv2_, tuples_;
    std::vector<std::size_t> pow_;  // dim_l^k
    std::vector<Int> table_;        // seq-major blocks of dv^2 entries
    std::size_t seq_index(const Perm &sigma, std::size_t tuple_idx) const;
};

struct CodimResult {
    std::size_t n = 0;
    std::size_t value = 0;
    std::string method_used; // "exact" | "modular"
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
};

/// c_n: rank of the n! x (dim_l^n * dv^2) matrix of monomial evaluations.
/// Throws budget_error when n! * width exceeds the cell budget and force is
/// not set.
CodimResult codimension(const LinearRep &rep, std::size_t n, const EvalOptions &opts = {});

/// True iff the element vanishes under every substitution of basis elements.
bool is_identity(const GroupAlgebraElement &f, const LinearRep &rep);

struct CocharRow {
    Partition lambda;
    std::size_t m = 0;
    Int dim;
};

struct CocharTable {
    std::size_t n = 0;
    std::vector<CocharRow> rows;
    std::size_t c_n = 0;
    Int multiplicity_dim_sum() const;
    bool consistent() const;
};

/// m(rho, lambda) = rank over sigma of the evaluations of e*_T * sigma for
/// the canonical row-major tableau. Shapes with more rows than dim rho(L) are
/// reported 0 without computation unless genuine_vanishing_check is set.
CocharTable cocharacter_multiplicities(const LinearRep &rep, std::size_t n,
                                       const EvalOptions &opts = {},
                                       bool genuine_vanishing_check = false);

/// Signed symmetrization over a set of variable positions (1-based).
GroupAlgebraElement alternate(const GroupAlgebraElement &f, const std::vector<int> &vars);

} // namespace pirep
