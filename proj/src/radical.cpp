#include "rrr/radical.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <mpfr.h>

namespace rrr {

namespace {

long max_precision_bits() {
    static const long cap = [] {
        const char* env = std::getenv("RRR_MAX_PRECISION");
        if (env != nullptr) {
            long v = std::atol(env);
            if (v >= 64) return v;
        }
        return 16384L;
    }();
    return cap;
}

// Minimal RAII wrapper around mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_t v;
};

// Directed-rounding enclosure of the sum at the given precision.
// lo <= value <= hi holds rigorously: sqrt is computed with the matching
// rounding mode and coefficient signs decide which sqrt bound feeds which
// endpoint.
void eval_enclosure(const RadicalSum::TermMap& terms, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    Mpfr s_lo(prec), s_hi(prec), t(prec);
    for (const auto& [r, c] : terms) {
        mpfr_sqrt_ui(s_lo.v, static_cast<unsigned long>(r), MPFR_RNDD);
        mpfr_sqrt_ui(s_hi.v, static_cast<unsigned long>(r), MPFR_RNDU);
        const bool pos = sgn(c) > 0;
        mpfr_mul_q(t.v, pos ? s_lo.v : s_hi.v, c.get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo, lo, t.v, MPFR_RNDD);
        mpfr_mul_q(t.v, pos ? s_hi.v : s_lo.v, c.get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi, hi, t.v, MPFR_RNDU);
    }
}

// Sign of a symbolically nonzero sum.
int nonzero_sign(const RadicalSum::TermMap& terms) {
    bool any_pos = false, any_neg = false;
    for (const auto& kv : terms) {
        (sgn(kv.second) > 0 ? any_pos : any_neg) = true;
    }
    if (!any_neg) return 1;
    if (!any_pos) return -1;

    for (long prec = 64; prec <= max_precision_bits(); prec *= 2) {
        Mpfr lo(prec), hi(prec);
        eval_enclosure(terms, prec, lo.v, hi.v);
        if (mpfr_sgn(lo.v) > 0) return 1;
        if (mpfr_sgn(hi.v) < 0) return -1;
    }
    throw InternalError("sign determination exceeded the precision cap on a nonzero value");
}

std::string rational_to_decimal(const Rational& q, int digits) {
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    const bool neg = sgn(num) < 0;
    if (neg) num = -num;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled_q, rem;
    mpz_fdiv_qr(scaled_q.get_mpz_t(), rem.get_mpz_t(), mpz_class(num * pw).get_mpz_t(),
                den.get_mpz_t());
    // round to nearest, ties to even
    mpz_class twice = 2 * rem;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(scaled_q.get_mpz_t()))) {
        scaled_q += 1;
    }
    mpz_class ip = scaled_q / pw;
    mpz_class fp = scaled_q % pw;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (neg && scaled_q != 0) out.insert(0, "-");
    return out;
}

std::string mpfr_to_decimal(mpfr_srcptr x, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNf", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

RadicalSum::RadicalSum(long v) {
    if (v != 0) terms_.emplace(1, Rational(v));
}

RadicalSum::RadicalSum(const Rational& v) {
    if (sgn(v) != 0) terms_.emplace(1, v);
}

bool RadicalSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalSum::rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalSum::set_term(std::uint64_t r, const Rational& c) {
    if (sgn(c) == 0) {
        terms_.erase(r);
    } else {
        terms_[r] = c;
    }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& rhs) {
    for (const auto& [r, c] : rhs.terms_) {
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& rhs) {
    for (const auto& [r, c] : rhs.terms_) {
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, -c);
        } else {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& q) {
    if (sgn(q) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [r, c] : terms_) c *= q;
    return *this;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum out;
    for (const auto& [r, c] : terms_) out.terms_.emplace(r, -c);
    return out;
}

RadicalSum sqrt_int(std::uint64_t m) {
    if (m == 0) return RadicalSum();
    std::uint64_t square_root = 1, radicand = 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        while (m % (d * d) == 0) {
            square_root *= d;
            m /= d * d;
        }
        if (m % d == 0) {
            radicand *= d;
            m /= d;
        }
    }
    radicand *= m;
    RadicalSum out;
    out.terms_.emplace(radicand, Rational(static_cast<unsigned long>(square_root)));
    return out;
}

RadicalSum sqrt_rational(const Rational& p) {
    if (sgn(p) < 0) throw InternalError("sqrt_rational of a negative rational");
    if (sgn(p) == 0) return RadicalSum();
    mpz_class ab = p.get_num() * p.get_den();
    if (!ab.fits_ulong_p()) throw TooLargeError("sqrt_rational radicand does not fit in 64 bits");
    RadicalSum out = sqrt_int(ab.get_ui());
    out *= Rational(1, p.get_den());
    return out;
}

Sign compare(const RadicalSum& a, const RadicalSum& b) {
    if (a == b) return Sign::Equal;
    return nonzero_sign((a - b).terms()) > 0 ? Sign::Greater : Sign::Less;
}

Sign sign_of(const RadicalSum& a) {
    if (a.is_zero()) return Sign::Equal;
    return nonzero_sign(a.terms()) > 0 ? Sign::Greater : Sign::Less;
}

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::Less: return "Less";
        case Sign::Equal: return "Equal";
        case Sign::Greater: return "Greater";
    }
    return "?";
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, c] : terms_) {
        const Rational mag = abs(c);
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (r == 1) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += "sqrt(" + std::to_string(r) + ")";
        }
        first = false;
    }
    return out;
}

std::string RadicalSum::to_decimal(int digits) const {
    if (digits < 1) throw InternalError("to_decimal requires digits >= 1");
    if (is_rational()) return rational_to_decimal(rational_part(), digits);
    // Irrational value: never exactly on a rounding boundary, so refining the
    // enclosure until both endpoints print identically terminates.
    for (long prec = 64 + 4L * digits; prec <= max_precision_bits(); prec *= 2) {
        Mpfr lo(prec), hi(prec);
        eval_enclosure(terms_, prec, lo.v, hi.v);
        std::string a = mpfr_to_decimal(lo.v, digits);
        std::string b = mpfr_to_decimal(hi.v, digits);
        if (a == b) return a;
    }
    throw InternalError("to_decimal exceeded the precision cap");
}

double RadicalSum::to_double() const {
    double acc = 0.0;
    for (const auto& [r, c] : terms_) {
        acc += c.get_d() * std::sqrt(static_cast<double>(r));
    }
    return acc;
}

std::pair<double, double> RadicalSum::to_double_interval() const {
    Mpfr lo(128), hi(128);
    eval_enclosure(terms_, 128, lo.v, hi.v);
    return {mpfr_get_d(lo.v, MPFR_RNDD), mpfr_get_d(hi.v, MPFR_RNDU)};
}

}  // namespace rrr
