#pragma once

#include <gmpxx.h>

namespace reptriples {

/// Per-base effective bounds: the two transcendental caps on the longest
/// repdigit length, their combined cap, and the derived size/count bounds.
struct BoundReport {
    unsigned long g = 0;
    int case2_cap = 0;
    int case3_cap = 0;
    int n3_cap = 0;
    mpz_class a_bound;      // floor((g^n3_cap - 2)/2)
    mpz_class count_bound;  // C(M, 3) with M = (n3_cap - 1)*(g - 1)
};

/// Largest n >= 2 with n < ((10*sqrt(n)+2)*ln(2g-2) + ln 16)/ln g + 1.
int case2_cap(unsigned long g);

/// Largest n >= 2 with
/// n < ((10*sqrt(n)+2)*ln(2g-2) + 4*ln(g-1) + ln 128)/ln g + 1.
int case3_cap(unsigned long g);

/// Directed-rounding check of the defining inequality at a single n.
/// Escalates precision until the comparison is certain; an unresolvable
/// margin counts as satisfied so caps can only round up, never down.
bool case2_holds(unsigned long g, unsigned n);
bool case3_holds(unsigned long g, unsigned n);

/// min(186, max(case2_cap(g), case3_cap(g), 28)) for g >= 3; 0 for g = 2
/// (no triple exists in base 2).
int n3_cap(unsigned long g);

mpz_class a_bound(unsigned long g);
mpz_class count_bound(unsigned long g);

/// C(m, 3) = m(m-1)(m-2)/6, exact (0 for m < 3).
mpz_class combinations3(const mpz_class& m);

BoundReport bound_report(unsigned long g);

}  // namespace reptriples
