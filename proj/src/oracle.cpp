#include "reptriples/oracle.hpp"

#include "reptriples/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

namespace reptriples {

namespace {

struct DigitRun {
    unsigned long d = 0;
    unsigned k = 0;
};

// Plain base-g digit expansion: all digits equal and non-zero.
std::optional<DigitRun> equal_digits_u64(unsigned long long n, unsigned long long g) {
    const unsigned long long d = n % g;
    if (d == 0) return std::nullopt;
    unsigned k = 1;
    n /= g;
    while (n != 0) {
        if (n % g != d) return std::nullopt;
        n /= g;
        ++k;
    }
    return DigitRun{static_cast<unsigned long>(d), k};
}

template <typename ScanFn>
std::vector<Solution> run_partitioned(unsigned long amax, unsigned workers, ScanFn scan) {
    unsigned nw = workers != 0 ? workers : std::thread::hardware_concurrency();
    if (nw == 0) nw = 1;
    std::vector<std::vector<Solution>> found(nw);
    std::atomic<unsigned long> next{3};
    auto work = [&](unsigned wi) {
        constexpr unsigned long chunk = 256;
        for (;;) {
            const unsigned long lo = next.fetch_add(chunk);
            if (lo > amax) break;
            const unsigned long hi = std::min(amax, lo + chunk - 1);
            for (unsigned long a = lo; a <= hi; ++a) scan(a, found[wi]);
        }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (unsigned wi = 0; wi < nw; ++wi) pool.emplace_back(work, wi);
        for (auto& t : pool) t.join();
    }
    std::vector<Solution> out;
    for (auto& part : found)
        for (auto& s : part) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Solution> brute_force(unsigned long g, const mpz_class& a_max, unsigned workers) {
    if (g < 2) throw std::invalid_argument("brute_force: base must be >= 2");
    if (a_max < 3) throw std::invalid_argument("brute_force: a_max must be >= 3");
    // the quadratic (a, b) scan is already infeasible long before products
    // could overflow 64 bits
    if (!a_max.fits_ulong_p() || a_max.get_ui() > 0xFFFFFFFFUL)
        throw capacity_error("brute_force: a_max exceeds loop budget");

    const unsigned long amax = a_max.get_ui();
    return run_partitioned(amax, workers, [&](unsigned long a, std::vector<Solution>& out) {
        for (unsigned long b = 2; b < a; ++b) {
            const auto r3 = equal_digits_u64(static_cast<unsigned long long>(a) * b + 1, g);
            if (!r3 || r3->k < 2) continue;
            for (unsigned long c = 1; c < b; ++c) {
                const auto r2 = equal_digits_u64(static_cast<unsigned long long>(a) * c + 1, g);
                if (!r2 || r2->k < 2) continue;
                const auto r1 = equal_digits_u64(static_cast<unsigned long long>(b) * c + 1, g);
                if (!r1 || r1->k < 2) continue;
                out.push_back(Solution{g, mpz_class(a), mpz_class(b), mpz_class(c),
                                       {Witness{r1->d, r1->k}, Witness{r2->d, r2->k},
                                        Witness{r3->d, r3->k}}});
            }
        }
    });
}

mpz_class count_single_digit_triples(unsigned long g) {
    if (g < 5) throw std::invalid_argument("count_single_digit_triples: base must be >= 5");
    if (g > 100000000UL)
        throw capacity_error("count_single_digit_triples: base exceeds loop budget");

    const unsigned long long limit = g - 2;  // ab + 1 <= g - 1
    unsigned long long total = 0;
    for (unsigned long long a = 3;; ++a) {
        const unsigned long long b_max = std::min(a - 1, limit / a);
        if (b_max < 2) break;  // limit/a only shrinks from here
        for (unsigned long long b = 2; b <= b_max; ++b) total += b - 1;  // c in [1, b)
    }
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
    return r;
}

}  // namespace reptriples
