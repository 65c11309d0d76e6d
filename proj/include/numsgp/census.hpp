#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "numsgp/errors.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

/// An ideal I of S (I + S ⊆ I, finite complement) stored as its gap-set
/// D = S \ I. codim(I) = |D|; D = ∅ is I = S.
struct IdealGapSet {
    std::vector<std::int64_t> gaps_of_ideal;  // sorted ascending, elements of S

    std::int64_t codim() const noexcept {
        return static_cast<std::int64_t>(gaps_of_ideal.size());
    }

    bool contains_gap(std::int64_t x) const noexcept {
        return std::binary_search(gaps_of_ideal.begin(), gaps_of_ideal.end(), x);
    }

    friend bool operator==(const IdealGapSet& a, const IdealGapSet& b) {
        return a.gaps_of_ideal == b.gaps_of_ideal;
    }
    friend bool operator<(const IdealGapSet& a, const IdealGapSet& b) {
        return a.gaps_of_ideal < b.gaps_of_ideal;
    }
};

/// D is an ideal gap-set iff D ⊆ S and D is closed under going down by one
/// generator: d ∈ D, g a generator, d−g ∈ S ⇒ d−g ∈ D. Generator steps
/// compose to arbitrary S-steps, so this equals the full down-closure
/// condition (cross-checked exhaustively in the tests).
inline bool is_ideal(const NumericalSemigroup& s, std::vector<std::int64_t> d) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    auto in_d = [&](std::int64_t x) { return std::binary_search(d.begin(), d.end(), x); };
    for (std::int64_t x : d) {
        if (!s.contains(x)) return false;
        for (std::int64_t g : s.generators()) {
            std::int64_t y = x - g;
            if (s.contains(y) && !in_d(y)) return false;
        }
    }
    return true;
}

/// Reference version checking every S-step d → d−y, not just generator
/// steps. Exists to pin the equivalence with is_ideal in tests.
inline bool is_ideal_full_closure(const NumericalSemigroup& s, std::vector<std::int64_t> d) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    auto in_d = [&](std::int64_t x) { return std::binary_search(d.begin(), d.end(), x); };
    for (std::int64_t x : d) {
        if (!s.contains(x)) return false;
        for (std::int64_t y = 1; y <= x; ++y)
            if (s.contains(y) && s.contains(x - y) && !in_d(x - y)) return false;
    }
    return true;
}

/// Validated construction from an arbitrary finite set.
inline IdealGapSet make_ideal_gapset(const NumericalSemigroup& s, std::vector<std::int64_t> d) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (!is_ideal(s, d))
        throw NotAnIdeal("make_ideal_gapset: set is not down-closed in the semigroup");
    return IdealGapSet{std::move(d)};
}

struct CensusOptions {
    std::int64_t node_budget = 100'000'000;  // enumeration nodes (= ideals visited)
    int threads = 1;
};

struct CensusTable {
    std::vector<Int> counts;            // counts[k] = m(S,k), k = 0..K
    std::optional<std::int64_t> onset;  // least k0 with counts constant on [k0,K],
                                        // reported only when that tail has length
                                        // >= multiplicity
    Int stable_value;                   // counts[K]
};

namespace detail {

/// Finite search universe for down-sets of size <= K, with precomputed
/// proper-divisor index lists.
///
/// Completeness: an element with more than K divisors in S cannot occur in a
/// down-set of size <= K (all its divisors would have to be present). Any
/// x ∈ S with x >= 2G+2 has at least x − (2G+1) divisors — for each
/// y ∈ [G+1, x−G−1] both y and x−y exceed G, hence lie in S — so every
/// universe element satisfies x <= K + 2G + 1. (For S = ℕ this reads
/// x <= K − 1, which matches |divisors(x)| = x+1.) Divisor sets are nested
/// along divisibility, so divisors of universe elements stay in the universe.
struct Universe {
    std::vector<std::int64_t> elements;              // ascending
    std::vector<std::vector<std::int32_t>> divisors;  // indices of proper divisors
};

inline Universe build_universe(const NumericalSemigroup& s, std::int64_t K,
                               std::int64_t node_budget) {
    Universe u;
    if (K <= 0) return u;
    std::int64_t bound = K + 2 * s.frobenius() + 1;
    if (bound > kMaxTableSize)
        throw BudgetExceeded("census universe scan bound " + std::to_string(bound) +
                             " exceeds the table limit " + std::to_string(kMaxTableSize));
    std::vector<std::int32_t> index_of;  // element value -> universe index
    if (bound >= 0) index_of.assign(static_cast<std::size_t>(bound) + 1, -1);
    for (std::int64_t x = 0; x <= bound; ++x) {
        if (!s.contains(x)) continue;
        // Count divisors with early exit past K.
        std::int64_t count = 0;
        std::vector<std::int32_t> divs;
        for (std::int64_t y = 0; y < x && count <= K; ++y) {
            if (s.contains(y) && s.contains(x - y)) {
                ++count;
                divs.push_back(index_of[static_cast<std::size_t>(y)]);
            }
        }
        ++count;  // x itself
        if (count > K) continue;
        // All proper divisors have fewer-or-equal divisor counts, so they
        // were admitted before x and their indices are valid.
        index_of[static_cast<std::size_t>(x)] =
            static_cast<std::int32_t>(u.elements.size());
        u.elements.push_back(x);
        u.divisors.push_back(std::move(divs));
        if (static_cast<std::int64_t>(u.elements.size()) > node_budget)
            throw BudgetExceeded("census universe larger than the node budget");
    }
    return u;
}

/// Depth-first enumeration of down-sets over a universe, in canonical
/// ascending-element order: a set is extended only by elements beyond its
/// maximum whose proper divisors are all present. Each down-set is reached
/// exactly once, and every prefix of the chosen sequence is itself a
/// down-set (dropping the maximum preserves down-closure).
class DownSetDfs {
public:
    DownSetDfs(const Universe& u, std::int64_t K, std::function<void(int)> emit,
               std::function<void()> tick)
        : u_(u), K_(K), emit_(std::move(emit)), tick_(std::move(tick)),
          in_set_(u.elements.size(), 0) {}

    /// Run from a resumed state: `chosen` indices already in the set,
    /// candidates start at `from`. Emits the state itself first.
    void run(const std::vector<std::int32_t>& chosen, std::int32_t from) {
        std::fill(in_set_.begin(), in_set_.end(), 0);
        for (std::int32_t i : chosen) in_set_[static_cast<std::size_t>(i)] = 1;
        descend(static_cast<int>(chosen.size()), from);
    }

    bool admissible(std::int32_t j) const {
        for (std::int32_t d : u_.divisors[static_cast<std::size_t>(j)])
            if (!in_set_[static_cast<std::size_t>(d)]) return false;
        return true;
    }

private:
    void descend(int depth, std::int32_t from) {
        tick_();
        emit_(depth);
        if (depth >= K_) return;
        for (std::int32_t j = from; j < static_cast<std::int32_t>(u_.elements.size()); ++j) {
            if (!admissible(j)) continue;
            in_set_[static_cast<std::size_t>(j)] = 1;
            descend(depth + 1, j + 1);
            in_set_[static_cast<std::size_t>(j)] = 0;
        }
    }

    const Universe& u_;
    std::int64_t K_;
    std::function<void(int)> emit_;
    std::function<void()> tick_;
    std::vector<std::uint8_t> in_set_;
};

}  // namespace detail

/// Streams every ideal gap-set of codim <= K exactly once (sequential,
/// canonical order). The visitor receives each IdealGapSet by reference.
inline void enumerate_ideals(const NumericalSemigroup& s, std::int64_t K,
                             const std::function<void(const IdealGapSet&)>& visit,
                             const CensusOptions& options = {}) {
    if (K < 0) throw BadArguments("enumerate_ideals: K must be >= 0");
    detail::Universe u = detail::build_universe(s, K, options.node_budget);
    std::int64_t nodes = 0;
    std::vector<std::int64_t> current;
    IdealGapSet out;

    std::function<void(int, std::int32_t)> descend;
    std::vector<std::uint8_t> in_set(u.elements.size(), 0);
    auto admissible = [&](std::int32_t j) {
        for (std::int32_t d : u.divisors[static_cast<std::size_t>(j)])
            if (!in_set[static_cast<std::size_t>(d)]) return false;
        return true;
    };
    descend = [&](int depth, std::int32_t from) {
        if (++nodes > options.node_budget)
            throw BudgetExceeded("enumerate_ideals: node budget " +
                                 std::to_string(options.node_budget) + " exhausted");
        out.gaps_of_ideal = current;
        visit(out);
        if (depth >= K) return;
        for (std::int32_t j = from; j < static_cast<std::int32_t>(u.elements.size()); ++j) {
            if (!admissible(j)) continue;
            in_set[static_cast<std::size_t>(j)] = 1;
            current.push_back(u.elements[static_cast<std::size_t>(j)]);
            descend(depth + 1, j + 1);
            current.pop_back();
            in_set[static_cast<std::size_t>(j)] = 0;
        }
    };
    descend(0, 0);
}

/// Convenience collector over enumerate_ideals.
inline std::vector<IdealGapSet> collect_ideals(const NumericalSemigroup& s, std::int64_t K,
                                               const CensusOptions& options = {}) {
    std::vector<IdealGapSet> out;
    enumerate_ideals(s, K, [&](const IdealGapSet& i) { out.push_back(i); }, options);
    return out;
}

/// Counts ideals by codimension: counts[k] = m(S,k) for k <= K.
///
/// With options.threads > 1 the tree is split at a breadth-first frontier
/// and subtrees are counted by a worker pool. Counters are exact integers
/// merged by addition, and the node budget compares a schedule-independent
/// total, so the result — table or BudgetExceeded — is identical to the
/// sequential run.
inline CensusTable census(const NumericalSemigroup& s, std::int64_t K,
                          const CensusOptions& options = {}) {
    if (K < 0) throw BadArguments("census: K must be >= 0");
    detail::Universe u = detail::build_universe(s, K, options.node_budget);

    std::vector<Int> counts(static_cast<std::size_t>(K) + 1, Int(0));
    const int threads = std::max(1, options.threads);

    if (threads == 1 || u.elements.empty()) {
        std::int64_t nodes = 0;
        detail::DownSetDfs dfs(
            u, K, [&](int depth) { counts[static_cast<std::size_t>(depth)] += 1; },
            [&] {
                if (++nodes > options.node_budget)
                    throw BudgetExceeded("census: node budget " +
                                         std::to_string(options.node_budget) + " exhausted");
            });
        dfs.run({}, 0);
    } else {
        // Grow a frontier of unvisited states until there is enough
        // parallel slack; states popped along the way are counted here.
        struct State {
            std::vector<std::int32_t> chosen;
            std::int32_t from;
        };
        std::deque<State> frontier;
        frontier.push_back({{}, 0});
        const std::size_t target = static_cast<std::size_t>(threads) * 4;
        std::int64_t expanded_nodes = 0;
        std::vector<std::uint8_t> in_set(u.elements.size(), 0);
        while (!frontier.empty() && frontier.size() < target) {
            State st = std::move(frontier.front());
            frontier.pop_front();
            if (++expanded_nodes > options.node_budget)
                throw BudgetExceeded("census: node budget " +
                                     std::to_string(options.node_budget) + " exhausted");
            counts[st.chosen.size()] += 1;
            if (static_cast<std::int64_t>(st.chosen.size()) >= K) continue;
            std::fill(in_set.begin(), in_set.end(), 0);
            for (std::int32_t i : st.chosen) in_set[static_cast<std::size_t>(i)] = 1;
            for (std::int32_t j = st.from; j < static_cast<std::int32_t>(u.elements.size());
                 ++j) {
                bool ok = true;
                for (std::int32_t d : u.divisors[static_cast<std::size_t>(j)])
                    if (!in_set[static_cast<std::size_t>(d)]) { ok = false; break; }
                if (!ok) continue;
                State child = st;
                child.chosen.push_back(j);
                child.from = j + 1;
                frontier.push_back(std::move(child));
            }
        }

        std::vector<State> tasks(frontier.begin(), frontier.end());
        std::atomic<std::size_t> next_task{0};
        std::atomic<std::int64_t> nodes{expanded_nodes};
        std::atomic<bool> over_budget{false};
        std::mutex merge_mutex;

        auto worker = [&] {
            std::vector<Int> local(static_cast<std::size_t>(K) + 1, Int(0));
            detail::DownSetDfs dfs(
                u, K, [&](int depth) { local[static_cast<std::size_t>(depth)] += 1; },
                [&] {
                    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 >
                        options.node_budget) {
                        over_budget.store(true, std::memory_order_relaxed);
                        throw BudgetExceeded("census worker over budget");
                    }
                });
            try {
                for (;;) {
                    std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
                    if (t >= tasks.size()) break;
                    if (over_budget.load(std::memory_order_relaxed)) break;
                    dfs.run(tasks[t].chosen, tasks[t].from);
                }
            } catch (const BudgetExceeded&) {
                return;  // flag already set; table is discarded
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
        };

        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (over_budget.load())
            throw BudgetExceeded("census: node budget " +
                                 std::to_string(options.node_budget) + " exhausted");
    }

    CensusTable table;
    table.counts = std::move(counts);
    table.stable_value = table.counts.back();
    std::size_t k0 = table.counts.size() - 1;
    while (k0 > 0 && table.counts[k0 - 1] == table.counts.back()) --k0;
    std::int64_t tail = static_cast<std::int64_t>(table.counts.size() - k0);
    if (tail >= s.multiplicity()) table.onset = static_cast<std::int64_t>(k0);
    return table;
}

/// Truncated ideal generating function: coefficient of q^k is m(S,k).
inline SeriesTruncation ideal_gf(const NumericalSemigroup& s, std::int64_t N,
                                 const CensusOptions& options = {}) {
    if (N < 0) throw BadArguments("ideal_gf: order must be >= 0");
    CensusTable t = census(s, N, options);
    return SeriesTruncation(std::move(t.counts));
}

/// s(I): elements of the ideal that are <= frobenius(S).
inline std::vector<std::int64_t> ideal_small_elements(const NumericalSemigroup& s,
                                                      const IdealGapSet& ideal) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x <= s.frobenius(); ++x)
        if (s.contains(x) && !ideal.contains_gap(x)) out.push_back(x);
    return out;
}

/// I − t for t >= 1, t ∈ S: defined when every element of I shifts down
/// into S. Closure is inherited just as for upward shifts, so membership is
/// the only condition. Returns the gap-set of I − t, or nullopt.
inline std::optional<IdealGapSet> shift_ideal_down(const NumericalSemigroup& s,
                                                   const IdealGapSet& ideal, std::int64_t t) {
    if (t < 1) throw BadArguments("shift_ideal_down: shift must be >= 1");
    if (!is_ideal(s, ideal.gaps_of_ideal))
        throw NotAnIdeal("shift_ideal_down: input gap-set is not an ideal");
    // Elements i > t + frobenius land above the frobenius number; only the
    // finitely many below need checking.
    for (std::int64_t i = 0; i <= t + s.frobenius(); ++i)
        if (s.contains(i) && !ideal.contains_gap(i) && (i < t || !s.contains(i - t)))
            return std::nullopt;
    std::int64_t old_max = ideal.gaps_of_ideal.empty() ? -1 : ideal.gaps_of_ideal.back();
    IdealGapSet shifted;
    for (std::int64_t x = 0; x <= std::max(old_max - t, s.frobenius()); ++x)
        if (s.contains(x) && (!s.contains(x + t) || ideal.contains_gap(x + t)))
            shifted.gaps_of_ideal.push_back(x);
    return shifted;
}

/// I + t for t >= 1. Because (I+t) + S = (I+S) + t ⊆ I + t, closure is
/// inherited; I + t is an ideal of S exactly when it stays inside S, which
/// only elements i <= frobenius − t can violate. Returns the gap-set of
/// I + t, or nullopt when I + t ⊄ S.
inline std::optional<IdealGapSet> shift_ideal(const NumericalSemigroup& s,
                                              const IdealGapSet& ideal, std::int64_t t) {
    if (t < 1) throw BadArguments("shift_ideal: shift must be >= 1");
    if (!is_ideal(s, ideal.gaps_of_ideal))
        throw NotAnIdeal("shift_ideal: input gap-set is not an ideal");
    for (std::int64_t i = 0; i <= s.frobenius() - t; ++i)
        if (s.contains(i) && !ideal.contains_gap(i) && !s.contains(i + t))
            return std::nullopt;

    // New gaps: x ∈ S with x − t outside I (negative, a gap of S, or in D).
    std::int64_t old_max = ideal.gaps_of_ideal.empty() ? -1 : ideal.gaps_of_ideal.back();
    std::int64_t bound = std::max(s.frobenius(), old_max) + t;
    IdealGapSet shifted;
    for (std::int64_t x = 0; x <= bound; ++x) {
        if (!s.contains(x)) continue;
        std::int64_t pre = x - t;
        if (pre < 0 || !s.contains(pre) || ideal.contains_gap(pre))
            shifted.gaps_of_ideal.push_back(x);
    }
    return shifted;
}

}  // namespace numsgp
