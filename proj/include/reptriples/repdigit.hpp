#pragma once

#include <gmpxx.h>

#include <optional>

namespace reptriples {

/// A number whose base-g expansion is the digit d repeated k times,
/// i.e. value = d*(g^k - 1)/(g - 1).
struct Repdigit {
    unsigned long digit = 0;  // d, 1 <= d <= g-1
    unsigned length = 0;      // k >= 1
    unsigned long base = 0;   // g >= 2
    mpz_class value;
};

/// (g^k - 1)/(g - 1) = g^{k-1} + ... + g + 1, exact at any size.
mpz_class repunit(unsigned long g, unsigned k);

/// d * repunit(g, k).
mpz_class repdigit_value(unsigned long d, unsigned k, unsigned long g);

/// Number of base-g digits of n, i.e. the unique k with g^{k-1} <= n < g^k.
unsigned digit_length(const mpz_class& n, unsigned long g);

/// The unique (d, k) with n = d*(g^k - 1)/(g - 1), if any. Single-digit
/// matches (k = 1) are reported too; callers wanting the multi-digit
/// notion filter on length >= 2.
std::optional<Repdigit> classify(const mpz_class& n, unsigned long g);

}  // namespace reptriples
