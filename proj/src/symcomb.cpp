#include "pirep/symcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pirep {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw input_error("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw input_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::conjugate() const {
    std::vector<int> conj;
    if (parts.empty())
        return conj;
    conj.resize(parts[0], 0);
    for (int part : parts)
        for (int j = 0; j < part; ++j)
            conj[j]++;
    return conj;
}

std::string Partition::to_string() const {
    if (parts.empty())
        return "()";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "+" : "") << parts[i];
    return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int> &prefix,
                    std::vector<Partition> &out) {
    if (remaining == 0) {
        Partition p;
        p.parts = prefix;
        out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        gen_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw input_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

Int hook_dimension(const Partition &lambda) {
    int n = lambda.n();
    Int fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    std::vector<int> conj = lambda.conjugate();
    Int hooks = 1;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            int h = (lambda.parts[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
            hooks *= h;
        }
    Int dim;
    if (!mpz_divisible_p(fact.get_mpz_t(), hooks.get_mpz_t()))
        throw internal_error("hook_dimension: non-exact division");
    mpz_divexact(dim.get_mpz_t(), fact.get_mpz_t(), hooks.get_mpz_t());
    return dim;
}

Tableau Tableau::row_major(const Partition &shape) {
    Tableau t;
    t.shape = shape;
    int v = 1;
    for (int part : shape.parts) {
        std::vector<int> row;
        for (int j = 0; j < part; ++j)
            row.push_back(v++);
        t.fill.push_back(std::move(row));
    }
    return t;
}

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm &a, const Perm &b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

int perm_sign(const Perm &p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::single(int n, const Perm &p, const Rat &c) {
    GroupAlgebraElement g;
    g.n = n;
    if (c != 0)
        g.terms[p] = c;
    return g;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement &other) const {
    if (n != other.n)
        throw input_error("group algebra sum: degree mismatch");
    GroupAlgebraElement out = *this;
    for (const auto &[p, c] : other.terms)
        out.terms[p] += c;
    out.prune();
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement &other) const {
    if (n != other.n)
        throw input_error("group algebra product: degree mismatch");
    GroupAlgebraElement out;
    out.n = n;
    for (const auto &[p, c] : terms)
        for (const auto &[q, d] : other.terms)
            out.terms[perm_compose(p, q)] += c * d;
    out.prune();
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rat &c) const {
    GroupAlgebraElement out;
    out.n = n;
    if (c == 0)
        return out;
    for (const auto &[p, coeff] : terms)
        out.terms[p] = coeff * c;
    return out;
}

void GroupAlgebraElement::prune() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
}

namespace {

/// Permutations preserving each cell group (rows or columns) setwise, with
/// signs.
std::vector<std::pair<Perm, int>> cell_group(const std::vector<std::vector<int>> &cells, int n) {
    std::vector<std::pair<Perm, int>> out;
    out.emplace_back(perm_identity(n), 1);
    for (const auto &cell : cells) {
        if (cell.size() <= 1)
            continue;
        std::vector<int> idx(cell.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::pair<Perm, int>> next;
        do {
            Perm p = perm_identity(n);
            for (std::size_t i = 0; i < cell.size(); ++i)
                p[cell[i] - 1] = cell[static_cast<std::size_t>(idx[i])] - 1;
            int s = perm_sign(p);
            for (const auto &[q, qs] : out)
                next.emplace_back(perm_compose(p, q), s * qs);
        } while (std::next_permutation(idx.begin(), idx.end()));
        out = std::move(next);
    }
    return out;
}

} // namespace

GroupAlgebraElement young_symmetrizer_star(const Tableau &t) {
    int n = t.shape.n();
    std::vector<std::vector<int>> cols;
    if (!t.fill.empty()) {
        cols.resize(t.fill[0].size());
        for (const auto &row : t.fill)
            for (std::size_t j = 0; j < row.size(); ++j)
                cols[j].push_back(row[j]);
    }
    GroupAlgebraElement a, b;
    a.n = b.n = n;
    for (const auto &[p, s] : cell_group(t.fill, n)) {
        (void)s;
        a.terms[p] += 1;
    }
    for (const auto &[p, s] : cell_group(cols, n))
        b.terms[p] += s;
    a.prune();
    b.prune();
    return b * a;
}

} // namespace pirep
