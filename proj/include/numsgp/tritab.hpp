#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "numsgp/census.hpp"
#include "numsgp/errors.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

// Three-generator machinery for <a,b,c> with a < b < c, pairwise coprime,
// and a | b+c. Under these hypotheses every element has a unique position
// in an a-row grid whose row i advances in steps of a.

/// Throws IneligibleTriple naming the failed hypothesis; returns normally
/// when (a,b,c) qualifies.
inline void require_eligible_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 2 || !(a < b && b < c))
        throw IneligibleTriple("need 2 <= a < b < c, got (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
    if (c > kMaxGeneratorValue)
        throw IneligibleTriple("generators are capped at " + std::to_string(kMaxGeneratorValue));
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
        if (std::gcd(x, y) != 1)
            throw IneligibleTriple("generators must be pairwise coprime; gcd(" +
                                   std::to_string(x) + ", " + std::to_string(y) + ") = " +
                                   std::to_string(std::gcd(x, y)));
    if ((b + c) % a != 0)
        throw IneligibleTriple(std::to_string(a) + " does not divide b + c = " +
                               std::to_string(b + c));
}

inline bool is_eligible_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
    try {
        require_eligible_triple(a, b, c);
        return true;
    } catch (const IneligibleTriple&) {
        return false;
    }
}

/// Least k >= 1 with b·k ∈ <a,c>. Always exists with k <= a (b·a is a
/// multiple of a); k = a does occur, e.g. for (2,3,5).
inline std::int64_t compute_k1(std::int64_t a, std::int64_t b, std::int64_t c) {
    require_eligible_triple(a, b, c);
    NumericalSemigroup ac = make_semigroup({a, c});
    for (std::int64_t k = 1; k <= a; ++k)
        if (ac.contains(b * k)) return k;
    throw IneligibleTriple("no k <= a with b*k in <a,c>");  // unreachable
}

/// The a-row grid: cell (i,j) carries d(i,j) = row_start[i] + a·(j−1) for
/// i ∈ [1,a], j >= 1. Row starts are c-multiples above the zero row and
/// b-multiples below it, split at row a−k1+1. Each element of the semigroup
/// occupies exactly one cell.
class TabularGrid {
public:
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t k1() const noexcept { return k1_; }

    /// row_start()[i−1] = d(i,1).
    const std::vector<std::int64_t>& row_start() const noexcept { return row_start_; }

    std::int64_t d(std::int64_t i, std::int64_t j) const {
        if (i < 1 || i > a_ || j < 1)
            throw BadArguments("TabularGrid::d: need 1 <= i <= a and j >= 1");
        return row_start_[static_cast<std::size_t>(i - 1)] + a_ * (j - 1);
    }

    /// Unique (i,j) with d(i,j) = x, for x in the semigroup.
    std::pair<std::int64_t, std::int64_t> locate(std::int64_t x) const {
        if (x >= 0) {
            std::int64_t i = row_of_residue_[static_cast<std::size_t>(x % a_)];
            std::int64_t start = row_start_[static_cast<std::size_t>(i - 1)];
            if (x >= start) return {i, (x - start) / a_ + 1};
        }
        throw NotAnElement("TabularGrid::locate: " + std::to_string(x) +
                           " is not in the semigroup");
    }

private:
    friend TabularGrid build_grid(std::int64_t a, std::int64_t b, std::int64_t c);

    std::int64_t a_ = 0, b_ = 0, c_ = 0, k1_ = 0;
    std::vector<std::int64_t> row_start_;
    std::vector<std::int64_t> row_of_residue_;  // residue mod a -> 1-based row
};

/// Builds the grid and verifies the exact-cover property: row starts must
/// be precisely the Apéry set of <a,b,c> with distinct residues mod a
/// (which covers every element, at every scale), re-checked by an
/// exhaustive cell-by-cell scan up to min(2abc, table limit).
inline TabularGrid build_grid(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t k1 = compute_k1(a, b, c);  // validates eligibility
    TabularGrid g;
    g.a_ = a;
    g.b_ = b;
    g.c_ = c;
    g.k1_ = k1;
    for (std::int64_t i = 1; i <= a; ++i) {
        if (i <= a - k1) g.row_start_.push_back(c * (a + 1 - k1 - i));
        else if (i == a - k1 + 1) g.row_start_.push_back(0);
        else g.row_start_.push_back(b * (i + k1 - a - 1));
    }

    NumericalSemigroup s = make_semigroup({a, b, c});
    g.row_of_residue_.assign(static_cast<std::size_t>(a), 0);
    for (std::int64_t i = 1; i <= a; ++i) {
        std::int64_t start = g.row_start_[static_cast<std::size_t>(i - 1)];
        std::int64_t r = start % a;
        if (g.row_of_residue_[static_cast<std::size_t>(r)] != 0)
            throw CoverViolation("rows " +
                                 std::to_string(g.row_of_residue_[static_cast<std::size_t>(r)]) +
                                 " and " + std::to_string(i) + " collide in residue class " +
                                 std::to_string(r));
        g.row_of_residue_[static_cast<std::size_t>(r)] = i;
        if (start != s.apery()[static_cast<std::size_t>(r)])
            throw CoverViolation("row " + std::to_string(i) + " starts at " +
                                 std::to_string(start) + " but the least element in its class is " +
                                 std::to_string(s.apery()[static_cast<std::size_t>(r)]));
    }

    std::int64_t bound = std::min(2 * a * b * c, kMaxTableSize);
    for (std::int64_t x = 0; x <= bound; ++x) {
        bool in_s = s.contains(x);
        std::int64_t i = g.row_of_residue_[static_cast<std::size_t>(x % a)];
        bool in_grid = x >= g.row_start_[static_cast<std::size_t>(i - 1)];
        if (in_s != in_grid)
            throw CoverViolation("element " + std::to_string(x) +
                                 (in_s ? " is missing from the grid" : " appears in the grid"));
    }
    return g;
}

/// deficiencies[i−1] = number of row-i cells whose labels the ideal lacks.
struct RowDeficiency {
    std::vector<std::int64_t> d;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (std::int64_t v : d) t += v;
        return t;
    }
};

inline RowDeficiency row_deficiencies(const TabularGrid& g, const NumericalSemigroup& s,
                                      const IdealGapSet& ideal) {
    if (!is_ideal(s, ideal.gaps_of_ideal))
        throw NotAnIdeal("row_deficiencies: input gap-set is not an ideal");
    RowDeficiency rd;
    rd.d.assign(static_cast<std::size_t>(g.a()), 0);
    for (std::int64_t x : ideal.gaps_of_ideal)
        ++rd.d[static_cast<std::size_t>(g.locate(x).first - 1)];
    return rd;
}

/// Deficiencies must rise toward the zero row from both ends:
/// d_1 <= ... <= d_{a−k1+1} and d_a <= ... <= d_{a−k1+1}.
inline bool check_chains(const RowDeficiency& rd, std::int64_t k1) {
    std::int64_t a = static_cast<std::int64_t>(rd.d.size());
    std::int64_t mid = a - k1 + 1;
    for (std::int64_t i = 1; i < mid; ++i)
        if (rd.d[static_cast<std::size_t>(i - 1)] > rd.d[static_cast<std::size_t>(i)])
            return false;
    for (std::int64_t i = a; i > mid; --i)
        if (rd.d[static_cast<std::size_t>(i - 1)] > rd.d[static_cast<std::size_t>(i - 2)])
            return false;
    return true;
}

/// R₁ = ideals containing d(1,1) or d(a,1), i.e. min(d_1(I), d_a(I)) = 0.
/// Any such ideal contains x+S for x one of those two labels, so its codim
/// is at most |S \ (x+S)|; enumeration reuses the census search with that
/// codim cap.
struct R1Enumeration {
    std::vector<IdealGapSet> ideals;
    IntPolynomial s1;  // Σ q^codim over R₁
};

namespace detail {

/// |S \ (x+S)| for x ∈ S: elements below x plus those whose difference
/// from x is a gap.
inline std::int64_t shifted_complement_size(const NumericalSemigroup& s, std::int64_t x) {
    std::int64_t count = 0;
    for (std::int64_t v = 0; v < x + s.frobenius() + 1; ++v)
        if (s.contains(v) && (v < x || !s.contains(v - x))) ++count;
    return count;
}

}  // namespace detail

inline R1Enumeration enumerate_R1(std::int64_t a, std::int64_t b, std::int64_t c,
                                  const CensusOptions& options = {}) {
    TabularGrid g = build_grid(a, b, c);
    NumericalSemigroup s = make_semigroup({a, b, c});
    std::int64_t top = g.d(1, 1), bottom = g.d(a, 1);
    std::int64_t cap = std::max(detail::shifted_complement_size(s, top),
                                detail::shifted_complement_size(s, bottom));
    R1Enumeration out;
    std::vector<Int> coeffs(static_cast<std::size_t>(cap) + 1, Int(0));
    enumerate_ideals(
        s, cap,
        [&](const IdealGapSet& i) {
            if (i.contains_gap(top) && i.contains_gap(bottom)) return;
            out.ideals.push_back(i);
            coeffs[static_cast<std::size_t>(i.codim())] += 1;
        },
        options);
    out.s1 = IntPolynomial(std::move(coeffs));
    return out;
}

/// I(a,b,c;q) = S₁(q) / (1 − q^a).
inline GFRational thm_tri_gf(std::int64_t a, std::int64_t b, std::int64_t c,
                             const CensusOptions& options = {}) {
    return GFRational{enumerate_R1(a, b, c, options).s1, {a}};
}

/// Generating function of <3, n+2, 2n+1> for n >= 2, n ≢ 1 (mod 3) — the
/// eligibility range: 3 | (n+2)+(2n+1) always, and pairwise coprimality
/// fails exactly at n ≡ 1 (mod 3).
struct FamilyGF {
    IntPolynomial part1;      // Σ_{i=1}^{n+1} q^i
    IntPolynomial part2;      // Σ_{i=1}^{n+1} q^{i+1}
    IntPolynomial part3;      // Σ_{i=1}^{n} q^i Σ_{j=1}^{i} q^j + q^{n+1} Σ_{i=1}^{n} q^i
    GFRational constructive;  // (1 + part1 + part2 + part3) / (1 − q³)
    GFRational closed;        // the closed expression, evaluated exactly
};

inline FamilyGF family_gf_3(std::int64_t n) {
    if (n < 2 || n % 3 == 1)
        throw BadFamilyParameter("family_gf_3: need n >= 2 with n not 1 mod 3, got " +
                                 std::to_string(n));
    if (2 * n + 1 > kMaxGeneratorValue)
        throw BadFamilyParameter("family_gf_3: 2n+1 exceeds the generator cap");
    int ni = static_cast<int>(n);
    FamilyGF out;
    out.part1 = IntPolynomial::geometric_block(ni + 1, 1);
    out.part2 = IntPolynomial::geometric_block(ni + 1, 2);
    IntPolynomial p3;
    for (int i = 1; i <= ni; ++i)
        p3 = p3 + IntPolynomial::geometric_block(i, 1).shifted(i);
    out.part3 = p3 + IntPolynomial::geometric_block(ni, 1).shifted(ni + 1);
    out.constructive =
        GFRational{IntPolynomial::one() + out.part1 + out.part2 + out.part3, {3}};

    // Closed expression: the bracketed middle term is a quotient by
    // (1−q)²(1+q); bring the outer 1 and −q^{2n+2} over that denominator
    // and divide exactly.
    auto q_pow = [](int e) { return IntPolynomial::monomial(1, e); };
    IntPolynomial one = IntPolynomial::one();
    IntPolynomial denom = (one - q_pow(1)) * (one - q_pow(1)) * (one + q_pow(1));
    IntPolynomial middle =
        q_pow(1) * (q_pow(ni + 1) - one) *
            (IntPolynomial::monomial(2, ni + 3) + q_pow(2) - IntPolynomial::monomial(2, 1) - one) -
        q_pow(4) * (q_pow(2 * ni + 1) - q_pow(ni + 1) - q_pow(ni) + one);
    IntPolynomial total = (one - q_pow(2 * ni + 2)) * denom + middle;
    out.closed = GFRational{exact_div(total, denom), {3}};
    return out;
}

}  // namespace numsgp
