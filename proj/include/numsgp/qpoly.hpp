#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numsgp/errors.hpp"

namespace numsgp {

// All counts and coefficients are exact; q-binomial coefficients overflow
// 64-bit machine words already for moderate parameters.
using Int = boost::multiprecision::cpp_int;

/// Dense polynomial over Z in the variable q; index = exponent.
/// Normal form: the highest stored coefficient is nonzero, and the zero
/// polynomial stores no coefficients at all.
class IntPolynomial {
public:
    // degree() of the zero polynomial ("minus infinity").
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial{}; }

    static IntPolynomial one() { return monomial(1, 0); }

    static IntPolynomial monomial(Int coeff, int exponent) {
        IntPolynomial p;
        if (coeff != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Int(0));
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    /// 1 + q + ... + q^(len-1), shifted up by `shift`.
    static IntPolynomial geometric_block(int len, int shift = 0) {
        IntPolynomial p;
        if (len > 0) {
            p.coeffs_.assign(static_cast<std::size_t>(shift + len), Int(0));
            for (int i = 0; i < len; ++i) p.coeffs_[static_cast<std::size_t>(shift + i)] = 1;
        }
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    int degree() const noexcept {
        return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    const Int& coeff(std::size_t i) const noexcept {
        static const Int kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    Int eval_one() const {
        Int s = 0;
        for (const Int& c : coeffs_) s += c;
        return s;
    }

    /// Multiplication by q^e.
    IntPolynomial shifted(int e) const {
        if (is_zero() || e == 0) return *this;
        IntPolynomial p;
        p.coeffs_.assign(coeffs_.size() + static_cast<std::size_t>(e), Int(0));
        std::copy(coeffs_.begin(), coeffs_.end(), p.coeffs_.begin() + e);
        return p;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.normalize();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        r.normalize();
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial{};
        IntPolynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const char* var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            Int abs = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (abs != 1 || i == 0) out << abs.str();
            if (i >= 1) {
                out << var;
                if (i >= 2) out << "^" << i;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        return os << p.to_string();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Exact quotient in Z[q]; throws InexactDivision unless divisor | dividend.
inline IntPolynomial exact_div(const IntPolynomial& dividend, const IntPolynomial& divisor) {
    if (divisor.is_zero()) throw BadArguments("exact_div: division by the zero polynomial");
    if (dividend.is_zero()) return IntPolynomial{};
    if (dividend.degree() < divisor.degree())
        throw InexactDivision("exact_div: divisor degree exceeds dividend degree");

    std::vector<Int> rem(dividend.coeffs());
    const std::vector<Int>& d = divisor.coeffs();
    const Int& lead = d.back();
    std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));

    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw InexactDivision("exact_div: leading coefficient does not divide remainder");
        Int f = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= f * d[i];
        quot[k] = std::move(f);
    }
    for (const Int& c : rem)
        if (c != 0) throw InexactDivision("exact_div: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

/// Exact binomial coefficient; every intermediate division is exact.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// Gaussian binomial [n, k]_q as an exact polynomial, via the recurrence
/// [n, k]_q = [n-1, k-1]_q + q^k [n-1, k]_q. Coefficients are nonnegative,
/// palindromic, and sum to binomial(n, k).
inline IntPolynomial gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw BadArguments("gaussian_binomial: need 0 <= k <= n");
    std::vector<IntPolynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPolynomial::one();
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
    return row[static_cast<std::size_t>(k)];
}

/// binomial(a+b, a) / (a+b), verified exact. Exactness holds whenever
/// gcd(a, b) = 1, so an InexactDivision here flags a non-coprime pair.
inline Int rational_catalan(long long a, long long b) {
    if (a < 1 || b < 1) throw BadArguments("rational_catalan: need positive a, b");
    Int c = binomial(a + b, a);
    if (c % (a + b) != 0)
        throw InexactDivision("rational_catalan: binomial(a+b, a) not divisible by a+b");
    return c / (a + b);
}

/// Power series cut after q^N; stores exactly order+1 coefficients.
class SeriesTruncation {
public:
    explicit SeriesTruncation(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw BadArguments("SeriesTruncation: need at least the constant coefficient");
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    const Int& coeff(std::size_t i) const noexcept {
        static const Int kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    SeriesTruncation truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw BadArguments("SeriesTruncation::truncated: order out of range");
        return SeriesTruncation(std::vector<Int>(
            coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    friend bool operator==(const SeriesTruncation& a, const SeriesTruncation& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Int> coeffs_;
};

/// numerator / prod_e (1 - q^e), with the denominator kept as its factor
/// list. Expansion to any order is exact; the denominator is never expanded.
struct GFRational {
    IntPolynomial numerator;
    std::vector<long long> denominator_factors;  // each e stands for (1 - q^e)
};

/// Exact series coefficients of g up to q^N. Each denominator factor
/// (1 - q^e) is applied as one running prefix-sum pass with stride e.
inline SeriesTruncation expand(const GFRational& g, int order) {
    if (order < 0) throw BadArguments("expand: order must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
    const std::vector<Int>& num = g.numerator.coeffs();
    for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(order); ++i)
        c[i] = num[i];
    for (long long e : g.denominator_factors) {
        if (e < 1) throw BadArguments("expand: denominator factor exponent must be >= 1");
        for (std::size_t i = static_cast<std::size_t>(e); i <= static_cast<std::size_t>(order); ++i)
            c[i] += c[i - static_cast<std::size_t>(e)];
    }
    return SeriesTruncation(std::move(c));
}

struct SeriesNumerator {
    IntPolynomial numerator;  // f with series = f / (1 - q)
    int series_degree;        // deg f - 1; kMinusInfinity - 1 never occurs in practice
};

/// Recovers f from a truncation of f / (1 - q). The caller passes the
/// stabilization window: the last `window` coefficients must be equal, which
/// certifies that (1 - q) * series has no support beyond the truncation.
inline SeriesNumerator extract_numerator(const SeriesTruncation& s, long long window) {
    if (window < 1) throw BadArguments("extract_numerator: window must be >= 1");
    const std::vector<Int>& c = s.coeffs();
    if (static_cast<long long>(c.size()) < window)
        throw NotStabilized("extract_numerator: truncation shorter than the stabilization window");
    for (std::size_t i = c.size() - static_cast<std::size_t>(window); i + 1 < c.size(); ++i)
        if (c[i] != c[i + 1])
            throw NotStabilized(
                "extract_numerator: tail not constant over the stabilization window; raise the order");

    std::vector<Int> f(c.size());
    f[0] = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) f[i] = c[i] - c[i - 1];
    IntPolynomial num{std::move(f)};
    int deg = num.degree();
    return SeriesNumerator{std::move(num),
                           deg == IntPolynomial::kMinusInfinity ? IntPolynomial::kMinusInfinity
                                                                : deg - 1};
}

}  // namespace numsgp
