#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reptriples {

struct Witness {
    unsigned long d = 0;  // digit
    unsigned n = 0;       // length, >= 2 in any verified solution
};

/// A triple c < b < a whose pairwise products plus one are all multi-digit
/// repdigits in base g. witnesses[0] = (d1,n1) for bc+1, witnesses[1] =
/// (d2,n2) for ac+1, witnesses[2] = (d3,n3) for ab+1.
struct Solution {
    unsigned long g = 0;
    mpz_class a, b, c;
    std::array<Witness, 3> witnesses{};
};

bool operator<(const Solution& lhs, const Solution& rhs);   // by (a, b, c)
bool operator==(const Solution& lhs, const Solution& rhs);  // by (a, b, c)

struct SearchConfig {
    std::optional<mpz_class> threshold_B;  // default: 1000 for g <= 100, else 10000
    std::optional<int> n3_cap_override;    // default: n3_cap(g)
    bool phase_small = true;
    bool phase_large = true;
    unsigned workers = 0;  // 0: hardware concurrency
    bool emit_progress = false;
};

mpz_class default_threshold(unsigned long g);

/// Re-checks a solution against the defining repdigit equations, the
/// length constraints n1 <= n2 <= n3 <= 2*n2 (all >= 2) and the strict
/// ordering bc+1 < ac+1 < ab+1. Every search path runs this before
/// emitting anything.
bool verify_solution(const Solution& s);

/// Given ab > ac > bc >= 1, recovers (a, b, c) when ab*ac*bc is a perfect
/// square s^2 and s/bc, s/ac, s/ab are integers consistent with all three
/// products; otherwise nothing.
std::optional<std::array<mpz_class, 3>> solve_products(const mpz_class& ab,
                                                       const mpz_class& ac,
                                                       const mpz_class& bc);

/// Direct scan over a in [3, B), b in [2, a): when ab+1 classifies as a
/// multi-digit repdigit, c in [1, b) is scanned likewise. Finds exactly
/// the solutions with a < B.
std::vector<Solution> small_phase(unsigned long g, const mpz_class& B, unsigned workers = 1);

/// Structural enumeration over repdigit lengths n2 <= n3 <= min(cap, 2*n2)
/// and digits d2, d3, keeping only pairs with gcd(ab, ac) >= B (a divides
/// both products, so anything smaller is already covered by the small
/// phase); candidate (a, b, c) are reconstructed through the square test.
std::vector<Solution> large_phase(unsigned long g, const mpz_class& B, int cap,
                                  unsigned workers = 1);

/// Union of the configured phases, deduplicated and sorted by (a, b, c),
/// each solution re-verified before emission. Base 2 short-circuits to
/// empty: (abc)^2 = 8(2^{n3-1}-1)(2^{n2-1}-1)(2^{n1-1}-1) would be a
/// square divisible by 8 but not 16.
std::vector<Solution> search_base(unsigned long g, const SearchConfig& cfg = {});

struct BaseResult {
    unsigned long g = 0;
    std::vector<Solution> solutions;
    std::string error;  // non-empty when this base failed
};

using BaseSink = std::function<void(const BaseResult&)>;
using ProgressFn = std::function<void(unsigned long g, std::size_t solutions, double seconds)>;

/// Searches the given bases with cfg.workers concurrent workers; sink is
/// invoked on the calling thread in list order, as soon as each prefix of
/// results is complete. Per-base failures are delivered as BaseResult.error
/// without aborting the remaining bases. The progress callback, when set,
/// fires from worker threads on completion (unordered).
void search_bases(const std::vector<unsigned long>& bases, const SearchConfig& cfg,
                  const BaseSink& sink, const ProgressFn& progress = nullptr);

/// All bases in [g_lo, g_hi], in ascending order.
std::vector<BaseResult> search_range(unsigned long g_lo, unsigned long g_hi,
                                     const SearchConfig& cfg = {});

}  // namespace reptriples
