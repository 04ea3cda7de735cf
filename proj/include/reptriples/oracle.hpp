#pragma once

#include "reptriples/search.hpp"

namespace reptriples {

/// Exhaustive ground truth: every triple 1 <= c < b < a <= a_max whose
/// three products plus one are multi-digit repdigits in base g, sorted by
/// (a, b, c). Repdigit membership is re-derived by base-g digit expansion,
/// independent of classify(), so a bug there cannot hide in both routes.
std::vector<Solution> brute_force(unsigned long g, const mpz_class& a_max,
                                  unsigned workers = 1);

/// #{(a, b, c) : 1 <= c < b < a and ab+1 <= g-1} — the stratum where all
/// three products plus one are single base-g digits (c < b < a makes
/// ab the largest product, so one inequality suffices).
mpz_class count_single_digit_triples(unsigned long g);

}  // namespace reptriples
