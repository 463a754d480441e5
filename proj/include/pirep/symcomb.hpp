#pragma once

#include <map>
#include <string>
#include <vector>

#include "pirep/matrix.hpp"

namespace pirep {

/// Partition of n: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;
    Partition() = default;
    explicit Partition(std::vector<int> p);
    int n() const;
    std::size_t num_rows() const { return parts.size(); }
    std::vector<int> conjugate() const;
    std::string to_string() const; // "3+2+1", "()" for n = 0
    bool operator==(const Partition &other) const = default;
};

/// All partitions of n, first part descending ((3), (2,1), (1,1,1)).
std::vector<Partition> partitions_of(int n);

/// n! / product of hook lengths, exact.
Int hook_dimension(const Partition &lambda);

/// Tableau of a shape; the canonical fill is row-major 1..n.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> fill; // values 1..n
    static Tableau row_major(const Partition &shape);
};

/// Permutation of {1..n} stored as 0-based images.
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_compose(const Perm &a, const Perm &b); // (a*b)(i) = a(b(i))
int perm_sign(const Perm &p);
std::vector<Perm> all_perms(int n); // lexicographic

/// Sparse element of the group algebra QS_n; no zero coefficients stored.
/// A term sigma stands for the monomial x_{sigma(1)} ... x_{sigma(n)}, and
/// multiplication is composition (apply the right factor first).
struct GroupAlgebraElement {
    int n = 0;
    std::map<Perm, Rat> terms;

    static GroupAlgebraElement single(int n, const Perm &p, const Rat &c = Rat(1));
    GroupAlgebraElement operator+(const GroupAlgebraElement &other) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement &other) const;
    GroupAlgebraElement scaled(const Rat &c) const;
    bool is_zero() const { return terms.empty(); }
    std::size_t term_count() const { return terms.size(); }
    void prune();
};

/// e*_T = b_T * a_T, with a_T the sum of the row group and b_T the signed sum
/// of the column group.
GroupAlgebraElement young_symmetrizer_star(const Tableau &t);

} // namespace pirep
