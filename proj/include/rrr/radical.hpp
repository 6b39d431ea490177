#ifndef RRR_RADICAL_HPP
#define RRR_RADICAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "rrr/errors.hpp"

namespace rrr {

using Rational = mpq_class;

enum class Sign { Less, Equal, Greater };

// Exact value of the form sum_r c_r * sqrt(r) with rational c_r and
// squarefree r >= 1.  The representation is canonical: keys are squarefree,
// zero coefficients are never stored, so two equal values always have
// identical term maps (square roots of distinct squarefree integers are
// linearly independent over the rationals).
class RadicalSum {
public:
    using TermMap = std::map<std::uint64_t, Rational>;

    RadicalSum() = default;
    RadicalSum(long v);  // NOLINT: implicit integer -> rational term
    explicit RadicalSum(const Rational& v);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The rational part (coefficient of sqrt(1)); zero if absent.
    Rational rational_part() const;
    const TermMap& terms() const { return terms_; }

    RadicalSum& operator+=(const RadicalSum& rhs);
    RadicalSum& operator-=(const RadicalSum& rhs);
    RadicalSum& operator*=(const Rational& q);
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(RadicalSum a, const Rational& q) { return a *= q; }
    friend RadicalSum operator*(const Rational& q, RadicalSum a) { return a *= q; }
    RadicalSum operator-() const;

    // Symbolic equality of canonical forms.
    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

    // "c1*sqrt(r1) + c2*sqrt(r2) + ..." with terms sorted by r ascending and
    // the r = 1 term rendered as a bare rational; "0" for zero.
    std::string to_string() const;
    // Decimal expansion with `digits` fractional digits, correctly rounded.
    std::string to_decimal(int digits) const;

    // Non-rigorous double approximation.
    double to_double() const;
    // Rigorous enclosure [lo, hi] of the exact value in doubles.
    std::pair<double, double> to_double_interval() const;

private:
    void set_term(std::uint64_t r, const Rational& c);
    TermMap terms_;

    friend RadicalSum sqrt_int(std::uint64_t m);
    friend RadicalSum sqrt_rational(const Rational& p);
};

// sqrt(m) in canonical form: m = s^2 * r with r squarefree gives s*sqrt(r).
RadicalSum sqrt_int(std::uint64_t m);
// sqrt(a/b) for a/b >= 0, normalized as (1/b)*sqrt(a*b) then square-factored.
RadicalSum sqrt_rational(const Rational& p);

// Total order.  Equal iff term maps are identical; otherwise the sign of
// a - b is decided by interval evaluation with escalating precision (64,
// 128, ... binary digits up to the RRR_MAX_PRECISION cap, default 16384).
Sign compare(const RadicalSum& a, const RadicalSum& b);

// Sign of a nonzero-or-zero value against 0.
Sign sign_of(const RadicalSum& a);

const char* sign_name(Sign s);  // "Less" / "Equal" / "Greater"

}  // namespace rrr

#endif
