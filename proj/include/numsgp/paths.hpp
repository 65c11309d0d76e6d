#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "numsgp/census.hpp"
#include "numsgp/errors.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

// A lattice path on the a-row grid R(a,b) (cell (x,y) carries label ax+by,
// 0 <= y < a) is written as a word over {D,R}: D = down step, R = right
// step. The infinite horizontal tail is implied and not stored. A word is
// valid when
//   (1) it has exactly a letters D   (the path descends from row a to row 0),
//   (2) it ends with D,
//   (3) the number of R letters strictly between the first and last D is
//       at most b.
// Leading R letters are unrestricted.

/// Reason the word fails validation, or nullopt when valid. The message
/// names the violated condition by number.
inline std::optional<std::string> word_violation(const std::string& word, std::int64_t a,
                                                 std::int64_t b) {
    if (a < 1 || b < 1) throw BadArguments("word_violation: need a >= 1 and b >= 1");
    for (char ch : word)
        if (ch != 'D' && ch != 'R')
            return std::string("letter '") + ch + "' is not in the alphabet {D,R}";
    std::int64_t d_count = std::count(word.begin(), word.end(), 'D');
    if (d_count != a)
        return "condition (1) violated: expected " + std::to_string(a) + " D letters, found " +
               std::to_string(d_count);
    if (word.empty() || word.back() != 'D')
        return "condition (2) violated: the word must end with D";
    std::size_t first_d = word.find('D');
    std::int64_t inner_r = static_cast<std::int64_t>(
        std::count(word.begin() + static_cast<std::ptrdiff_t>(first_d), word.end(), 'R'));
    if (inner_r > b)
        return "condition (3) violated: " + std::to_string(inner_r) +
               " R letters between the first and last D exceed b = " + std::to_string(b);
    return std::nullopt;
}

inline bool validate_word(const std::string& word, std::int64_t a, std::int64_t b) {
    return !word_violation(word, a, b).has_value();
}

/// Number of pairs i < j with word[i] = R and word[j] = D; the area under
/// the path, and the codimension of the corresponding ideal.
inline std::int64_t inversions(const std::string& word) {
    std::int64_t r_seen = 0, inv = 0;
    for (char ch : word) {
        if (ch == 'R') ++r_seen;
        else if (ch == 'D') inv += r_seen;
    }
    return inv;
}

namespace detail {

/// r_k = number of R letters before the k-th D, k = 1..a.
inline std::vector<std::int64_t> r_profile(const std::string& word) {
    std::vector<std::int64_t> r;
    std::int64_t r_seen = 0;
    for (char ch : word) {
        if (ch == 'R') ++r_seen;
        else r.push_back(r_seen);
    }
    return r;
}

}  // namespace detail

/// Gap set of the ideal of <a,b> below the path: the k-th D from the top
/// closes off row y = a−k, whose boxes left of the path carry labels
/// {a·x + b·(a−k) : 0 <= x < r_k}. |D| = inversions(word).
inline IdealGapSet word_to_gapset(const std::string& word, std::int64_t a, std::int64_t b) {
    if (auto why = word_violation(word, a, b))
        throw InvalidWord("word_to_gapset: " + *why);
    std::vector<std::int64_t> r = detail::r_profile(word);
    IdealGapSet out;
    for (std::int64_t k = 1; k <= a; ++k) {
        std::int64_t y = a - k;
        for (std::int64_t x = 0; x < r[static_cast<std::size_t>(k - 1)]; ++x)
            out.gaps_of_ideal.push_back(a * x + b * y);
    }
    std::sort(out.gaps_of_ideal.begin(), out.gaps_of_ideal.end());
    return out;
}

/// Least label of the ideal in each grid row, k = 1..a for rows y = k−1:
/// the first box at or right of the path in that row, a·r_{a−k+1} + b·(k−1).
inline std::vector<std::int64_t> row_minima(const std::string& word, std::int64_t a,
                                            std::int64_t b) {
    if (auto why = word_violation(word, a, b)) throw InvalidWord("row_minima: " + *why);
    std::vector<std::int64_t> r = detail::r_profile(word);
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= a; ++k)
        out.push_back(a * r[static_cast<std::size_t>(a - k)] + b * (k - 1));
    return out;
}

/// Inverse of word_to_gapset: recover r_k as the column of the least label
/// of row a−k absent from D, then lay down the letters.
inline std::string gapset_to_word(std::int64_t a, std::int64_t b, const IdealGapSet& d) {
    NumericalSemigroup s = make_semigroup({a, b});
    if (!is_ideal(s, d.gaps_of_ideal))
        throw NotAnIdeal("gapset_to_word: set is not an ideal gap-set of the semigroup");
    std::string word;
    std::int64_t prev_r = 0;
    for (std::int64_t k = 1; k <= a; ++k) {
        std::int64_t y = a - k;
        std::int64_t x = 0;
        while (d.contains_gap(a * x + b * y)) ++x;
        if (x < prev_r)
            throw NotAnIdeal("gapset_to_word: row gap counts are not nested");
        word.append(static_cast<std::size_t>(x - prev_r), 'R');
        word.push_back('D');
        prev_r = x;
    }
    // Down-closure forces each row's gaps to be the prefix {0..r_k−1}, so
    // the round trip must reproduce d exactly; anything else means the
    // input was not a valid gap-set.
    if (!(word_to_gapset(word, a, b) == d))
        throw NotAnIdeal("gapset_to_word: gap-set does not match any path");
    return word;
}

/// Σ q^inv over all words of length n with exactly k R letters; equals
/// gaussian_binomial(n, k). Brute force, hence the small-n cap.
inline IntPolynomial word_sum_qbinomial(int n, int k) {
    if (k < 0 || n < 0 || k > n || n > 14)
        throw BadArguments("word_sum_qbinomial: need 0 <= k <= n <= 14");
    std::vector<Int> coeffs(static_cast<std::size_t>(k * (n - k)) + 1, Int(0));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;  // bit i set = letter i is R
        std::int64_t r_seen = 0, inv = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) ++r_seen;
            else inv += r_seen;
        }
        coeffs[static_cast<std::size_t>(inv)] += 1;
    }
    return IntPolynomial(std::move(coeffs));
}

/// I(a,b;q) = qbinom(a+b−1, a−1) / (1 − q^a). Symmetric in a and b as a
/// series (the semigroup does not order its generators).
inline GFRational closed_form_two_gen(std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 2) throw BadArguments("closed_form_two_gen: need a, b >= 2");
    if (std::gcd(a, b) != 1)
        throw NonCoprimeGenerators("closed_form_two_gen: gcd(" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") > 1");
    if ((a - 1) * b > kMaxTableSize)
        throw BudgetExceeded("closed_form_two_gen: numerator degree (a-1)*b exceeds the table limit");
    return GFRational{gaussian_binomial(static_cast<int>(a + b - 1), static_cast<int>(a - 1)),
                      {a}};
}

/// All valid words for (a,b) whose path has area exactly k, in the census
/// oracle's canonical order. Their count is m(<a,b>, k).
inline std::vector<std::string> words_of_codim(std::int64_t a, std::int64_t b, std::int64_t k,
                                               const CensusOptions& options = {}) {
    if (k < 0) throw BadArguments("words_of_codim: codim must be >= 0");
    NumericalSemigroup s = make_semigroup({a, b});
    std::vector<std::string> out;
    enumerate_ideals(
        s, k,
        [&](const IdealGapSet& i) {
            if (i.codim() == k) out.push_back(gapset_to_word(a, b, i));
        },
        options);
    return out;
}

}  // namespace numsgp
