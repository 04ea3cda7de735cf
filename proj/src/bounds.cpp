#include "reptriples/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace reptriples {

namespace {

enum class Verdict { holds, fails, unknown };

// One directed-rounding evaluation of "n < RHS" where
//   RHS = ((10*sqrt(n) + 2)*ln(2g-2) + extra)/ln(g) + 1,
//   extra = ln 16 (case 2) or 4*ln(g-1) + ln 128 (case 3).
// All roundings are pushed outward, so a definite answer is exact.
Verdict check_at(unsigned long g, unsigned n, bool case3, mpfr_prec_t prec) {
    mpfr_t s, l, num, den, rhs, tmp;
    mpfr_inits2(prec, s, l, num, den, rhs, tmp, static_cast<mpfr_ptr>(nullptr));

    auto eval = [&](mpfr_rnd_t rnd, mpfr_rnd_t opp) {
        mpfr_sqrt_ui(s, n, rnd);
        mpfr_mul_ui(s, s, 10, rnd);
        mpfr_add_ui(s, s, 2, rnd);
        mpfr_set_ui(l, 2 * g - 2, MPFR_RNDN);  // exact
        mpfr_log(l, l, rnd);
        mpfr_mul(num, s, l, rnd);  // every factor positive
        if (case3) {
            mpfr_set_ui(tmp, g - 1, MPFR_RNDN);
            mpfr_log(tmp, tmp, rnd);
            mpfr_mul_ui(tmp, tmp, 4, rnd);
            mpfr_add(num, num, tmp, rnd);
            mpfr_set_ui(tmp, 128, MPFR_RNDN);
        } else {
            mpfr_set_ui(tmp, 16, MPFR_RNDN);
        }
        mpfr_log(tmp, tmp, rnd);
        mpfr_add(num, num, tmp, rnd);
        mpfr_set_ui(den, g, MPFR_RNDN);
        mpfr_log(den, den, opp);  // denominator rounded the other way
        mpfr_div(rhs, num, den, rnd);
        mpfr_add_ui(rhs, rhs, 1, rnd);
    };

    Verdict v = Verdict::unknown;
    eval(MPFR_RNDD, MPFR_RNDU);
    if (mpfr_cmp_ui(rhs, n) > 0) {
        v = Verdict::holds;  // n < lower bound of RHS
    } else {
        eval(MPFR_RNDU, MPFR_RNDD);
        if (mpfr_cmp_ui(rhs, n) <= 0) v = Verdict::fails;  // n >= upper bound of RHS
    }
    mpfr_clears(s, l, num, den, rhs, tmp, static_cast<mpfr_ptr>(nullptr));
    return v;
}

bool inequality_holds(unsigned long g, unsigned n, bool case3) {
    if (g < 3) throw std::invalid_argument("bounds: base must be >= 3");
    if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
    for (mpfr_prec_t prec = 192; prec <= 1536; prec *= 2) {
        switch (check_at(g, n, case3, prec)) {
            case Verdict::holds: return true;
            case Verdict::fails: return false;
            case Verdict::unknown: break;
        }
    }
    // Unresolved even at 1536 bits: count it as satisfied, so the cap can
    // only round up. The search must never lose completeness to rounding.
    return true;
}

int scan_cap(unsigned long g, bool case3) {
    for (int n = 400; n >= 2; --n)
        if (inequality_holds(g, static_cast<unsigned>(n), case3)) return n;
    throw std::logic_error("bounds: cap scan found no admissible n");
}

}  // namespace

int case2_cap(unsigned long g) { return scan_cap(g, false); }

int case3_cap(unsigned long g) { return scan_cap(g, true); }

bool case2_holds(unsigned long g, unsigned n) { return inequality_holds(g, n, false); }

bool case3_holds(unsigned long g, unsigned n) { return inequality_holds(g, n, true); }

int n3_cap(unsigned long g) {
    if (g < 2) throw std::invalid_argument("n3_cap: base must be >= 2");
    if (g == 2) return 0;
    // 28 is the ceiling of the dependent-ratio case analysis; it never
    // binds but keeps the combined cap honest if the scans ever shrink.
    const int cap = std::max({case2_cap(g), case3_cap(g), 28});
    return std::min(cap, 186);
}

mpz_class a_bound(unsigned long g) {
    if (g < 3) throw std::invalid_argument("a_bound: base must be >= 3");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), g, static_cast<unsigned long>(n3_cap(g)));
    p -= 2;
    mpz_fdiv_q_ui(p.get_mpz_t(), p.get_mpz_t(), 2);
    return p;
}

mpz_class combinations3(const mpz_class& m) {
    if (m < 3) return 0;
    mpz_class r = m * (m - 1) * (m - 2);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 6);
    return r;
}

mpz_class count_bound(unsigned long g) {
    if (g < 3) throw std::invalid_argument("count_bound: base must be >= 3");
    const mpz_class m = mpz_class(n3_cap(g) - 1) * (g - 1);
    return combinations3(m);
}

BoundReport bound_report(unsigned long g) {
    if (g < 3) throw std::invalid_argument("bound_report: base must be >= 3");
    BoundReport r;
    r.g = g;
    r.case2_cap = case2_cap(g);
    r.case3_cap = case3_cap(g);
    r.n3_cap = std::min(std::max({r.case2_cap, r.case3_cap, 28}), 186);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), g, static_cast<unsigned long>(r.n3_cap));
    p -= 2;
    mpz_fdiv_q_ui(p.get_mpz_t(), p.get_mpz_t(), 2);
    r.a_bound = p;
    r.count_bound = combinations3(mpz_class(r.n3_cap - 1) * (g - 1));
    return r;
}

}  // namespace reptriples
