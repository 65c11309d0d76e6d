#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "numsgp/errors.hpp"

namespace numsgp {

// Generator cap. Keeps every Apéry value within int64 (paths through the
// residue graph use < m edges of weight <= 10^6, so values stay < 10^12).
inline constexpr std::int64_t kMaxGeneratorValue = 1'000'000;

// Largest element table we are willing to materialize (gaps, small elements,
// sieves). Invariant computations never need it; only explicit enumeration
// of gap / small-element lists does.
inline constexpr std::int64_t kMaxTableSize = 10'000'000;

/// A numerical semigroup S = <a_1, ..., a_r>: all non-negative integer
/// combinations of the generators, with gcd 1 so the complement in N is
/// finite. Immutable after construction; reads are thread-safe.
class NumericalSemigroup {
public:
    /// Minimal generating system, sorted ascending.
    const std::vector<std::int64_t>& generators() const noexcept { return generators_; }

    std::int64_t multiplicity() const noexcept { return generators_.front(); }

    int embedding_dimension() const noexcept { return static_cast<int>(generators_.size()); }

    /// apery()[r] is the least element of S congruent to r mod multiplicity.
    const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

    /// Largest integer not in S; -1 when S = N.
    std::int64_t frobenius() const noexcept { return frobenius_; }

    /// Number of gaps |N \ S|.
    std::int64_t genus() const noexcept { return genus_; }

    bool contains(std::int64_t n) const noexcept {
        if (n < 0) return false;
        std::int64_t m = multiplicity();
        return n >= apery_[static_cast<std::size_t>(n % m)];
    }

    /// N \ S, ascending. Materializes a table of size frobenius+1.
    std::vector<std::int64_t> gaps() const {
        check_table_budget();
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(genus_));
        for (std::int64_t n = 1; n <= frobenius_; ++n)
            if (!contains(n)) out.push_back(n);
        return out;
    }

    /// Elements of S that are <= frobenius, ascending. Empty for S = N.
    std::vector<std::int64_t> small_elements() const {
        check_table_budget();
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(frobenius_ + 1 - genus_));
        for (std::int64_t n = 0; n <= frobenius_; ++n)
            if (contains(n)) out.push_back(n);
        return out;
    }

private:
    friend NumericalSemigroup make_semigroup(std::vector<std::int64_t> raw_generators);

    void check_table_budget() const {
        if (frobenius_ + 1 > kMaxTableSize)
            throw BudgetExceeded(
                "gap/small-element table would exceed " + std::to_string(kMaxTableSize) +
                " entries; invariants (frobenius, genus) remain available");
    }

    std::vector<std::int64_t> generators_;
    std::vector<std::int64_t> apery_;
    std::int64_t frobenius_ = -1;
    std::int64_t genus_ = 0;
};

namespace detail {

/// Least element of <generators> in each residue class mod m, by Dijkstra on
/// the residue graph: edge r -> (r+g) mod m with weight g per generator g.
inline std::vector<std::int64_t> apery_by_dijkstra(const std::vector<std::int64_t>& generators,
                                                   std::int64_t m) {
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kUnreached);
    dist[0] = 0;
    using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [v, r] = queue.top();
        queue.pop();
        if (v != dist[static_cast<std::size_t>(r)]) continue;
        for (std::int64_t g : generators) {
            std::int64_t nv = v + g;
            std::int64_t nr = (r + g) % m;
            if (nv < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nv;
                queue.emplace(nv, nr);
            }
        }
    }
    // gcd(generators) = 1 makes the residue graph strongly connected.
    return dist;
}

}  // namespace detail

/// Validates, reduces to the unique minimal generating system, and computes
/// all invariants exactly.
inline NumericalSemigroup make_semigroup(std::vector<std::int64_t> raw_generators) {
    if (raw_generators.empty()) throw EmptyInput("make_semigroup: no generators given");
    for (std::int64_t g : raw_generators) {
        if (g < 1) throw BadArguments("make_semigroup: generators must be >= 1");
        if (g > kMaxGeneratorValue)
            throw BadArguments("make_semigroup: generators are capped at " +
                               std::to_string(kMaxGeneratorValue));
    }
    std::sort(raw_generators.begin(), raw_generators.end());
    raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                         raw_generators.end());

    std::int64_t g = 0;
    for (std::int64_t v : raw_generators) g = std::gcd(g, v);
    if (g != 1)
        throw NonCoprimeGenerators("make_semigroup: gcd of generators is " + std::to_string(g));

    NumericalSemigroup s;
    if (raw_generators.front() == 1) {
        s.generators_ = {1};
        s.apery_ = {0};
        s.frobenius_ = -1;
        s.genus_ = 0;
        return s;
    }

    std::int64_t m = raw_generators.front();
    std::vector<std::int64_t> apery = detail::apery_by_dijkstra(raw_generators, m);
    auto in_s = [&](std::int64_t n) {
        return n >= 0 && n >= apery[static_cast<std::size_t>(n % m)];
    };

    // g is a minimal generator iff it is not a sum of two nonzero elements.
    // Every minimal generator appears in any generating set, so filtering
    // the input list yields exactly the minimal system.
    for (std::int64_t cand : raw_generators) {
        bool redundant = false;
        for (std::int64_t y = m; y <= cand - m && !redundant; ++y)
            if (in_s(y) && in_s(cand - y)) redundant = true;
        if (!redundant) s.generators_.push_back(cand);
    }

    s.apery_ = std::move(apery);
    s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - m;
    s.genus_ = 0;
    for (std::int64_t r = 0; r < m; ++r)
        s.genus_ += (s.apery_[static_cast<std::size_t>(r)] - r) / m;
    return s;
}

/// G(a,b) = ab - a - b for coprime a, b >= 2.
inline std::int64_t sylvester_frobenius(std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 2) throw BadArguments("sylvester_frobenius: need a, b >= 2");
    if (a > kMaxGeneratorValue || b > kMaxGeneratorValue)
        throw BadArguments("sylvester_frobenius: generators are capped at " +
                           std::to_string(kMaxGeneratorValue));
    if (std::gcd(a, b) != 1)
        throw NonCoprimeGenerators("sylvester_frobenius: gcd(" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") > 1");
    return a * b - a - b;
}

/// {y in S : x - y in S}, ascending. Always contains 0 and x.
inline std::vector<std::int64_t> divisors_in(const NumericalSemigroup& s, std::int64_t x) {
    if (!s.contains(x))
        throw NotAnElement("divisors_in: " + std::to_string(x) + " is not in the semigroup");
    std::vector<std::int64_t> out;
    for (std::int64_t y = 0; y <= x; ++y)
        if (s.contains(y) && s.contains(x - y)) out.push_back(y);
    return out;
}

}  // namespace numsgp
