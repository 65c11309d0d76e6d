#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numsgp/census.hpp"
#include "numsgp/errors.hpp"
#include "numsgp/paths.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/semigroup.hpp"
#include "numsgp/tritab.hpp"

namespace numsgp {

enum class CheckStatus { Pass, Fail, Skip, Info };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
        case CheckStatus::Info: return "INFO";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string expected;
    std::string actual;
    double ms = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

namespace detail {

/// Runs one named check, timing it and converting exceptions to FAIL.
/// The body reports through the Expectation it is handed: set `expected`
/// and `actual`, and call fail() on any mismatch.
struct Expectation {
    std::string expected;
    std::string actual;
    bool ok = true;
    bool skipped = false;

    void fail(std::string exp, std::string act) {
        if (!ok) return;  // keep the first mismatch
        ok = false;
        expected = std::move(exp);
        actual = std::move(act);
    }

    void skip(std::string why) {
        skipped = true;
        actual = std::move(why);
    }
};

template <class Body>
void run_check(VerifyReport& report, const std::string& name, Body&& body) {
    Expectation e;
    auto start = std::chrono::steady_clock::now();
    try {
        body(e);
    } catch (const std::exception& ex) {
        e.fail("no exception", ex.what());
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    CheckStatus status = e.skipped ? CheckStatus::Skip
                         : e.ok    ? CheckStatus::Pass
                                   : CheckStatus::Fail;
    report.checks.push_back({name, status, e.expected, e.actual, ms});
}

inline void add_info(VerifyReport& report, const std::string& name, std::string expected,
                     std::string actual) {
    report.checks.push_back(
        {name, CheckStatus::Info, std::move(expected), std::move(actual), 0.0});
}

inline std::string join_counts(const std::vector<Int>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << "]";
    return out.str();
}

inline std::string gens_label(const std::vector<std::int64_t>& gens) {
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out << ",";
        out << gens[i];
    }
    out << ">";
    return out.str();
}

/// Coprime pairs 2 <= a < b with a+b <= 13 — the two-generator test bed.
inline std::vector<std::pair<std::int64_t, std::int64_t>> test_pairs() {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t a = 2; a < 13; ++a)
        for (std::int64_t b = a + 1; a + b <= 13; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

/// Eligible three-generator test bed.
inline std::vector<std::array<std::int64_t, 3>> test_triples() {
    return {{{3, 4, 5}, {3, 5, 7}, {4, 5, 7}, {5, 7, 8}}};
}

}  // namespace detail

/// Cross-checks applicable to one semigroup, mirroring what the census,
/// two-generator, and three-generator layers promise about each other.
inline VerifyReport verify_semigroup(const std::vector<std::int64_t>& raw_generators,
                                     const CensusOptions& options = {}) {
    VerifyReport report;
    NumericalSemigroup s = make_semigroup(raw_generators);
    const std::string label = detail::gens_label(s.generators());
    const std::int64_t order = s.frobenius() + 2 * s.multiplicity() + 2;

    CensusTable table = census(s, order, options);

    detail::run_check(report, "series degree equals the frobenius number " + label,
                      [&](detail::Expectation& e) {
                          SeriesNumerator f = extract_numerator(SeriesTruncation(table.counts),
                                                                s.multiplicity());
                          e.expected = std::to_string(s.frobenius());
                          e.actual = std::to_string(f.series_degree);
                          if (f.series_degree != s.frobenius())
                              e.ok = false;
                      });

    const auto& gens = s.generators();
    if (gens.size() == 2) {
        std::int64_t a = gens[0], b = gens[1];
        detail::run_check(report, "closed form matches the ideal census " + label,
                          [&](detail::Expectation& e) {
                              SeriesTruncation closed = expand(closed_form_two_gen(a, b),
                                                               static_cast<int>(order));
                              e.expected = detail::join_counts(closed.coeffs());
                              e.actual = detail::join_counts(table.counts);
                              if (!(closed.coeffs() == table.counts)) e.ok = false;
                          });
        detail::run_check(report, "stable ideal count equals the rational Catalan number " +
                                      label,
                          [&](detail::Expectation& e) {
                              Int cab = rational_catalan(a, b);
                              e.expected = cab.str();
                              e.actual = table.stable_value.str();
                              for (std::int64_t k = s.frobenius() + 1; k <= order; ++k)
                                  if (table.counts[static_cast<std::size_t>(k)] != cab) {
                                      e.fail(cab.str(),
                                             "m(S," + std::to_string(k) + ") = " +
                                                 table.counts[static_cast<std::size_t>(k)].str());
                                      return;
                                  }
                          });
        detail::run_check(report, "inversion sums match Gaussian binomials (n <= 8)",
                          [&](detail::Expectation& e) {
                              for (int n = 0; n <= 8; ++n)
                                  for (int k = 0; k <= n; ++k)
                                      if (!(word_sum_qbinomial(n, k) == gaussian_binomial(n, k))) {
                                          e.fail("equality at (n,k)",
                                                 "mismatch at n=" + std::to_string(n) +
                                                     ", k=" + std::to_string(k));
                                          return;
                                      }
                              e.expected = "all (n,k), n <= 8";
                              e.actual = "all equal";
                          });
        detail::run_check(
            report, "path bijection round-trips on ideals of codim <= 8 " + label,
            [&](detail::Expectation& e) {
                std::int64_t cases = 0;
                enumerate_ideals(
                    s, 8,
                    [&](const IdealGapSet& ideal) {
                        std::string w = gapset_to_word(a, b, ideal);
                        if (!(word_to_gapset(w, a, b) == ideal) ||
                            inversions(w) != ideal.codim())
                            e.fail("round-trip identity", "failed for word " + w);
                        ++cases;
                    },
                    options);
                if (e.ok) {
                    e.expected = "identity on every ideal";
                    e.actual = "identity on " + std::to_string(cases) + " ideals";
                }
            });
    }

    if (gens.size() == 3 && is_eligible_triple(gens[0], gens[1], gens[2])) {
        std::int64_t a = gens[0], b = gens[1], c = gens[2];
        detail::run_check(report,
                          "grid cover is exact and the closed form matches the census " + label,
                          [&](detail::Expectation& e) {
                              SeriesTruncation closed =
                                  expand(thm_tri_gf(a, b, c, options), static_cast<int>(order));
                              e.expected = detail::join_counts(closed.coeffs());
                              e.actual = detail::join_counts(table.counts);
                              if (!(closed.coeffs() == table.counts)) e.ok = false;
                          });
        detail::run_check(
            report, "row-deficiency chains hold on ideals of codim <= 8 " + label,
            [&](detail::Expectation& e) {
                TabularGrid g = build_grid(a, b, c);
                std::int64_t cases = 0;
                enumerate_ideals(
                    s, 8,
                    [&](const IdealGapSet& ideal) {
                        if (!check_chains(row_deficiencies(g, s, ideal), g.k1()))
                            e.fail("chains non-decreasing toward the zero row",
                                   "violated by gap-set of codim " +
                                       std::to_string(ideal.codim()));
                        ++cases;
                    },
                    options);
                if (e.ok) {
                    e.expected = "chains on every ideal";
                    e.actual = "chains on " + std::to_string(cases) + " ideals";
                }
            });
    }

    // The source material claims "I+1 is an ideal iff s(I) is empty", but
    // the reverse implication fails — over <3,4>, I = {3} ∪ N>=6 has
    // s(I) = {3} yet I+1 = {4} ∪ N>=7 is an ideal (3+1 lands in S). What
    // is true, and asserted here: s(I) = ∅ suffices, and in general I+1 is
    // an ideal exactly when s(I)+1 ⊆ S. The literal-iff failures are
    // counted and reported.
    std::int64_t iff_failures = 0;
    detail::run_check(
        report, "unit shift succeeds iff s(I)+1 stays in S (and always when s(I) = ∅) " + label,
        [&](detail::Expectation& e) {
            std::int64_t cases = 0;
            enumerate_ideals(
                s, 8,
                [&](const IdealGapSet& ideal) {
                    bool shifted = shift_ideal(s, ideal, 1).has_value();
                    std::vector<std::int64_t> small = ideal_small_elements(s, ideal);
                    bool all_advance = true;
                    for (std::int64_t i : small)
                        if (!s.contains(i + 1)) all_advance = false;
                    if (shifted != all_advance)
                        e.fail("I+1 ideal iff s(I)+1 in S",
                               "disagreement at gap-set of codim " +
                                   std::to_string(ideal.codim()));
                    if (small.empty() && !shifted)
                        e.fail("I+1 ideal whenever s(I) = ∅",
                               "shift failed at gap-set of codim " +
                                   std::to_string(ideal.codim()));
                    if (shifted && !small.empty()) ++iff_failures;
                    ++cases;
                },
                options);
            if (e.ok) {
                e.expected = "characterization on every ideal";
                e.actual = "holds on " + std::to_string(cases) + " ideals";
            }
        });
    detail::add_info(report, "unit shift literal iff " + label,
                     "stated: I+1 ideal only if s(I) = ∅",
                     "observed: " + std::to_string(iff_failures) +
                         " ideal(s) of codim <= 8 shift despite s(I) ≠ ∅");

    // The count table is claimed (in the source material this library
    // reproduces) to go constant already at k = G(S); empirically the onset
    // is G(S)+1 on some inputs, e.g. <2,3>. Report, don't assert.
    std::string onset_str = table.onset ? std::to_string(*table.onset) : "not yet constant";
    detail::add_info(report, "stabilization onset " + label,
                     "stated: constant from k = G(S) = " + std::to_string(s.frobenius()),
                     "observed: constant from k = " + onset_str + " (table " +
                         detail::join_counts(table.counts) + ")");
    return report;
}

/// Checks for the <3, n+2, 2n+1> family at one parameter value.
inline VerifyReport verify_family3(std::int64_t n, const CensusOptions& options = {}) {
    VerifyReport report;
    FamilyGF fam = family_gf_3(n);  // throws BadFamilyParameter for bad n
    const int order = static_cast<int>(3 * n + 6);
    const std::string label = detail::gens_label({3, n + 2, 2 * n + 1});

    detail::run_check(report,
                      "closed expression equals the constructive parts " + label,
                      [&](detail::Expectation& e) {
                          SeriesTruncation lhs = expand(fam.closed, order);
                          SeriesTruncation rhs = expand(fam.constructive, order);
                          e.expected = detail::join_counts(rhs.coeffs());
                          e.actual = detail::join_counts(lhs.coeffs());
                          if (!(lhs == rhs)) e.ok = false;
                      });

    detail::run_check(report, "family frobenius number equals 2n-2 " + label,
                      [&](detail::Expectation& e) {
                          NumericalSemigroup s = make_semigroup({3, n + 2, 2 * n + 1});
                          e.expected = std::to_string(2 * n - 2);
                          e.actual = std::to_string(s.frobenius());
                          if (s.frobenius() != 2 * n - 2) e.ok = false;
                      });

    detail::run_check(report, "closed expression equals the ideal census " + label,
                      [&](detail::Expectation& e) {
                          if (n > 6) {
                              e.skip("census skipped for n > 6 (enumeration too large)");
                              return;
                          }
                          NumericalSemigroup s = make_semigroup({3, n + 2, 2 * n + 1});
                          CensusTable table = census(s, order, options);
                          SeriesTruncation closed = expand(fam.closed, order);
                          e.expected = detail::join_counts(closed.coeffs());
                          e.actual = detail::join_counts(table.counts);
                          if (!(closed.coeffs() == table.counts)) e.ok = false;
                      });
    return report;
}

/// The acceptance battery: ten criteria, one result line each. A correct
/// build passes all ten.
inline VerifyReport acceptance_suite(const CensusOptions& options = {}) {
    VerifyReport report;
    const auto pairs = detail::test_pairs();
    const auto triples = detail::test_triples();

    detail::run_check(report,
                      "[1] two-generator closed form equals oracle census to codim a*b "
                      "(coprime pairs, a+b <= 13, under 60 s)",
                      [&](detail::Expectation& e) {
                          auto start = std::chrono::steady_clock::now();
                          for (auto [a, b] : pairs) {
                              NumericalSemigroup s = make_semigroup({a, b});
                              CensusTable t = census(s, a * b, options);
                              SeriesTruncation closed =
                                  expand(closed_form_two_gen(a, b), static_cast<int>(a * b));
                              if (!(t.counts == closed.coeffs())) {
                                  e.fail("equal tables for " + detail::gens_label({a, b}),
                                         "oracle " + detail::join_counts(t.counts) +
                                             " vs closed " +
                                             detail::join_counts(closed.coeffs()));
                                  return;
                              }
                          }
                          double sec = std::chrono::duration<double>(
                                           std::chrono::steady_clock::now() - start)
                                           .count();
                          if (sec >= 60.0) {
                              e.fail("runtime < 60 s",
                                     "took " + std::to_string(sec) + " s");
                              return;
                          }
                          e.expected = "exact equality for all " +
                                       std::to_string(pairs.size()) + " pairs in < 60 s";
                          std::ostringstream msg;
                          msg << "all equal in " << std::fixed << std::setprecision(2) << sec
                              << " s";
                          e.actual = msg.str();
                      });

    detail::run_check(
        report, "[2] series degree from the oracle equals the frobenius number",
        [&](detail::Expectation& e) {
            std::vector<std::vector<std::int64_t>> gens_list;
            for (auto [a, b] : pairs) gens_list.push_back({a, b});
            for (const auto& t : triples) gens_list.push_back({t[0], t[1], t[2]});
            for (const auto& gens : gens_list) {
                NumericalSemigroup s = make_semigroup(gens);
                std::int64_t order = s.frobenius() + 2 * s.multiplicity() + 2;
                SeriesNumerator f =
                    extract_numerator(ideal_gf(s, order, options), s.multiplicity());
                std::int64_t expected = s.frobenius();
                if (gens.size() == 2) expected = gens[0] * gens[1] - gens[0] - gens[1];
                if (f.series_degree != expected || s.frobenius() != expected) {
                    e.fail("degree " + std::to_string(expected) + " for " +
                               detail::gens_label(gens),
                           "degree " + std::to_string(f.series_degree) + ", frobenius " +
                               std::to_string(s.frobenius()));
                    return;
                }
            }
            e.expected = "degree = frobenius on " + std::to_string(gens_list.size()) +
                         " semigroups";
            e.actual = "all equal";
        });

    detail::run_check(
        report, "[3] stable ideal count equals the rational Catalan number on [G+1, G+6]",
        [&](detail::Expectation& e) {
            std::vector<std::string> at_g_mismatch;
            for (auto [a, b] : pairs) {
                NumericalSemigroup s = make_semigroup({a, b});
                Int cab = rational_catalan(a, b);
                std::int64_t g = s.frobenius();
                CensusTable t = census(s, g + 6, options);
                for (std::int64_t k = g + 1; k <= g + 6; ++k)
                    if (t.counts[static_cast<std::size_t>(k)] != cab) {
                        e.fail("m(S,k) = " + cab.str() + " for " + detail::gens_label({a, b}),
                               "m(S," + std::to_string(k) + ") = " +
                                   t.counts[static_cast<std::size_t>(k)].str());
                        return;
                    }
                if (t.counts[static_cast<std::size_t>(g)] != cab)
                    at_g_mismatch.push_back(detail::gens_label({a, b}) + " has m(S,G)=" +
                                            t.counts[static_cast<std::size_t>(g)].str() +
                                            " vs c=" + cab.str());
            }
            e.expected = "equality on [G+1, G+6] for all pairs";
            e.actual = "all equal";
            if (!at_g_mismatch.empty()) {
                std::ostringstream note;
                note << "; at k = G itself equality fails for: ";
                for (std::size_t i = 0; i < at_g_mismatch.size(); ++i) {
                    if (i) note << ", ";
                    note << at_g_mismatch[i];
                }
                e.actual += note.str();
            }
        });

    detail::run_check(report,
                      "[4] inversion generating function equals the Gaussian binomial "
                      "(0 <= k <= n <= 12)",
                      [&](detail::Expectation& e) {
                          for (int n = 0; n <= 12; ++n)
                              for (int k = 0; k <= n; ++k)
                                  if (!(word_sum_qbinomial(n, k) == gaussian_binomial(n, k))) {
                                      e.fail("equality for all (n,k)",
                                             "mismatch at n=" + std::to_string(n) +
                                                 ", k=" + std::to_string(k));
                                      return;
                                  }
                          e.expected = "equality for all 91 (n,k) pairs";
                          e.actual = "all equal";
                      });

    detail::run_check(
        report, "[5] path bijection round-trips on every ideal of codim <= 10",
        [&](detail::Expectation& e) {
            std::int64_t cases = 0;
            for (auto [a, b] : pairs) {
                NumericalSemigroup s = make_semigroup({a, b});
                enumerate_ideals(
                    s, 10,
                    [&](const IdealGapSet& ideal) {
                        std::string w = gapset_to_word(a, b, ideal);
                        if (!(word_to_gapset(w, a, b) == ideal) ||
                            inversions(w) != ideal.codim())
                            e.fail("round-trip identity for " + detail::gens_label({a, b}),
                                   "failed at word " + w);
                        ++cases;
                    },
                    options);
                if (!e.ok) return;
            }
            e.expected = "identity on every ideal of every pair";
            e.actual = "identity on " + std::to_string(cases) + " ideals";
        });

    // The claim "I+1 ideal iff s(I) = ∅" holds in the if direction only;
    // over <3,4> the ideal {3} ∪ N>=6 shifts fine with s(I) = {3}. The
    // criterion asserts the true characterization (shift succeeds exactly
    // when s(I)+1 ⊆ S, hence always when s(I) = ∅) and documents how often
    // the literal iff fails, mirroring how the stable-count discrepancy is
    // reported rather than asserted.
    detail::run_check(
        report,
        "[6] unit shift succeeds iff s(I)+1 stays in S — always when s(I) is empty "
        "(codim <= 10)",
        [&](detail::Expectation& e) {
            std::vector<std::vector<std::int64_t>> gens_list;
            for (auto [a, b] : pairs) gens_list.push_back({a, b});
            for (const auto& t : triples) gens_list.push_back({t[0], t[1], t[2]});
            std::int64_t cases = 0, iff_failures = 0;
            for (const auto& gens : gens_list) {
                NumericalSemigroup s = make_semigroup(gens);
                enumerate_ideals(
                    s, 10,
                    [&](const IdealGapSet& ideal) {
                        bool shifted = shift_ideal(s, ideal, 1).has_value();
                        std::vector<std::int64_t> small = ideal_small_elements(s, ideal);
                        bool all_advance = true;
                        for (std::int64_t i : small)
                            if (!s.contains(i + 1)) all_advance = false;
                        if (shifted != all_advance)
                            e.fail("I+1 ideal iff s(I)+1 in S, " + detail::gens_label(gens),
                                   "disagreement at codim " + std::to_string(ideal.codim()));
                        if (small.empty() && !shifted)
                            e.fail("I+1 ideal whenever s(I) empty, " + detail::gens_label(gens),
                                   "shift failed at codim " + std::to_string(ideal.codim()));
                        if (shifted && !small.empty()) ++iff_failures;
                        ++cases;
                    },
                    options);
                if (!e.ok) return;
            }
            e.expected = "characterization on every ideal";
            e.actual = "holds on " + std::to_string(cases) + " ideals; the stated bare iff " +
                       "(shift only when s(I) empty) fails on " + std::to_string(iff_failures) +
                       " of them";
        });

    detail::run_check(
        report, "[7] three-generator grid covers each element <= 500 exactly once",
        [&](detail::Expectation& e) {
            for (const auto& t : triples) {
                TabularGrid g = build_grid(t[0], t[1], t[2]);
                NumericalSemigroup s = make_semigroup({t[0], t[1], t[2]});
                for (std::int64_t x = 0; x <= 500; ++x) {
                    std::int64_t cells = 0;
                    for (std::int64_t i = 1; i <= g.a(); ++i) {
                        std::int64_t off = x - g.row_start()[static_cast<std::size_t>(i - 1)];
                        if (off >= 0 && off % g.a() == 0) ++cells;
                    }
                    std::int64_t want = s.contains(x) ? 1 : 0;
                    if (cells != want) {
                        e.fail(std::to_string(want) + " cell(s) for " + std::to_string(x) +
                                   " in " + detail::gens_label({t[0], t[1], t[2]}),
                               std::to_string(cells) + " cell(s)");
                        return;
                    }
                }
            }
            e.expected = "exact cover for all four triples";
            e.actual = "exact cover verified";
        });

    detail::run_check(
        report,
        "[8] three-generator closed form equals oracle to order 20; deficiency chains hold "
        "to codim 8",
        [&](detail::Expectation& e) {
            for (const auto& t : triples) {
                std::int64_t a = t[0], b = t[1], c = t[2];
                NumericalSemigroup s = make_semigroup({a, b, c});
                CensusTable table = census(s, 20, options);
                SeriesTruncation closed = expand(thm_tri_gf(a, b, c, options), 20);
                if (!(closed.coeffs() == table.counts)) {
                    e.fail("equal tables for " + detail::gens_label({a, b, c}),
                           "oracle " + detail::join_counts(table.counts) + " vs closed " +
                               detail::join_counts(closed.coeffs()));
                    return;
                }
                TabularGrid g = build_grid(a, b, c);
                enumerate_ideals(
                    s, 8,
                    [&](const IdealGapSet& ideal) {
                        if (!check_chains(row_deficiencies(g, s, ideal), g.k1()))
                            e.fail("chains for " + detail::gens_label({a, b, c}),
                                   "violated at codim " + std::to_string(ideal.codim()));
                    },
                    options);
                if (!e.ok) return;
            }
            e.expected = "equality and chains for all four triples";
            e.actual = "all hold";
        });

    detail::run_check(
        report,
        "[9] family closed expression equals constructive parts (n in {2,3,5,6,8,9,11}), "
        "oracle (n in {2,3,5}), and frobenius 2n-2 (n also 12)",
        [&](detail::Expectation& e) {
            for (std::int64_t n : {2, 3, 5, 6, 8, 9, 11}) {
                FamilyGF fam = family_gf_3(n);
                int order = static_cast<int>(3 * n + 6);
                SeriesTruncation closed = expand(fam.closed, order);
                if (!(closed == expand(fam.constructive, order))) {
                    e.fail("closed = constructive at n = " + std::to_string(n),
                           "series differ");
                    return;
                }
                if (n == 2 || n == 3 || n == 5) {
                    NumericalSemigroup s = make_semigroup({3, n + 2, 2 * n + 1});
                    CensusTable table = census(s, order, options);
                    if (!(closed.coeffs() == table.counts)) {
                        e.fail("closed = oracle at n = " + std::to_string(n),
                               "oracle " + detail::join_counts(table.counts) + " vs closed " +
                                   detail::join_counts(closed.coeffs()));
                        return;
                    }
                }
            }
            for (std::int64_t n : {2, 3, 5, 6, 8, 9, 11, 12}) {
                NumericalSemigroup s = make_semigroup({3, n + 2, 2 * n + 1});
                if (s.frobenius() != 2 * n - 2) {
                    e.fail("frobenius 2n-2 at n = " + std::to_string(n),
                           std::to_string(s.frobenius()));
                    return;
                }
            }
            e.expected = "all family identities";
            e.actual = "all hold";
        });

    detail::run_check(
        report, "[10] census of <3,5,7> to codim 12 is identical across 1, 2, 8 threads",
        [&](detail::Expectation& e) {
            NumericalSemigroup s = make_semigroup({3, 5, 7});
            CensusOptions opt = options;
            opt.threads = 1;
            CensusTable t1 = census(s, 12, opt);
            opt.threads = 2;
            CensusTable t2 = census(s, 12, opt);
            opt.threads = 8;
            CensusTable t8 = census(s, 12, opt);
            e.expected = detail::join_counts(t1.counts);
            if (!(t1.counts == t2.counts) || !(t1.counts == t8.counts) ||
                t1.onset != t2.onset || t1.onset != t8.onset ||
                t1.stable_value != t2.stable_value || t1.stable_value != t8.stable_value) {
                e.fail(detail::join_counts(t1.counts),
                       "2 threads " + detail::join_counts(t2.counts) + ", 8 threads " +
                           detail::join_counts(t8.counts));
                return;
            }
            e.actual = "identical tables, onset, and stable value";
        });

    return report;
}

/// One result line: "PASS  name — expected ... / actual ... (12.3 ms)".
inline std::string format_check_line(const CheckResult& c) {
    std::ostringstream out;
    out << to_string(c.status) << "  " << c.name;
    if (c.status == CheckStatus::Fail)
        out << " — expected " << c.expected << "; got " << c.actual;
    else if (c.status == CheckStatus::Info)
        out << " — " << c.expected << "; " << c.actual;
    else if (!c.actual.empty())
        out << " — " << c.actual;
    if (c.status != CheckStatus::Info) {
        out << " (" << std::fixed << std::setprecision(1) << c.ms << " ms)";
    }
    return out.str();
}

}  // namespace numsgp
