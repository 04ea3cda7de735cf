#include "reptriples/search.hpp"

#include "reptriples/bounds.hpp"
#include "reptriples/numtheory.hpp"
#include "reptriples/repdigit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace reptriples {

bool operator<(const Solution& lhs, const Solution& rhs) {
    int c = cmp(lhs.a, rhs.a);
    if (c != 0) return c < 0;
    c = cmp(lhs.b, rhs.b);
    if (c != 0) return c < 0;
    return cmp(lhs.c, rhs.c) < 0;
}

bool operator==(const Solution& lhs, const Solution& rhs) {
    return lhs.g == rhs.g && lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
}

mpz_class default_threshold(unsigned long g) { return g <= 100 ? 1000 : 10000; }

bool verify_solution(const Solution& s) {
    if (s.g < 2) return false;
    if (!(s.c >= 1 && s.b > s.c && s.a > s.b)) return false;
    const mpz_class prods[3] = {s.b * s.c + 1, s.a * s.c + 1, s.a * s.b + 1};
    for (int i = 0; i < 3; ++i) {
        const auto r = classify(prods[i], s.g);
        if (!r || r->length < 2) return false;
        if (r->digit != s.witnesses[i].d || r->length != s.witnesses[i].n) return false;
    }
    const unsigned n1 = s.witnesses[0].n, n2 = s.witnesses[1].n, n3 = s.witnesses[2].n;
    if (!(n1 <= n2 && n2 <= n3 && n3 <= 2 * n2)) return false;
    return prods[0] < prods[1] && prods[1] < prods[2];
}

namespace {

// Classifies all three products; the witnesses come from classify so they
// cannot drift from the values actually checked.
std::optional<Solution> make_solution(unsigned long g, mpz_class a, mpz_class b, mpz_class c) {
    Solution s;
    s.g = g;
    s.a = std::move(a);
    s.b = std::move(b);
    s.c = std::move(c);
    const mpz_class prods[3] = {s.b * s.c + 1, s.a * s.c + 1, s.a * s.b + 1};
    for (int i = 0; i < 3; ++i) {
        const auto r = classify(prods[i], g);
        if (!r || r->length < 2) return std::nullopt;
        s.witnesses[i] = {r->digit, r->length};
    }
    if (!verify_solution(s)) return std::nullopt;
    return s;
}

unsigned resolve_workers(unsigned w) {
    if (w != 0) return w;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

}  // namespace

std::optional<std::array<mpz_class, 3>> solve_products(const mpz_class& ab, const mpz_class& ac,
                                                       const mpz_class& bc) {
    if (!(ab > ac && ac > bc && bc >= 1))
        throw std::invalid_argument("solve_products: need ab > ac > bc >= 1");
    mpz_class p = ab * ac;
    p *= bc;
    const auto s = perfect_square_root(p);
    if (!s) return std::nullopt;
    if (!mpz_divisible_p(s->get_mpz_t(), bc.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(s->get_mpz_t(), ac.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(s->get_mpz_t(), ab.get_mpz_t())) return std::nullopt;
    mpz_class a = *s / bc, b = *s / ac, c = *s / ab;
    if (!(a > b && b > c && c >= 1)) return std::nullopt;
    if (a * b != ab || a * c != ac || b * c != bc) return std::nullopt;
    return std::array<mpz_class, 3>{std::move(a), std::move(b), std::move(c)};
}

std::vector<Solution> small_phase(unsigned long g, const mpz_class& B, unsigned workers) {
    if (g < 2) throw std::invalid_argument("small_phase: base must be >= 2");
    if (B < 2) throw std::invalid_argument("small_phase: threshold must be >= 2");
    if (!B.fits_ulong_p()) throw capacity_error("small_phase: threshold too large to enumerate");
    const unsigned long a_end = B.get_ui();

    const unsigned nw = std::max(1u, resolve_workers(workers));
    std::vector<std::vector<Solution>> found(nw);
    std::atomic<unsigned long> next{3};

    auto work = [&](unsigned wi) {
        std::vector<Solution>& out = found[wi];
        mpz_class prod;
        constexpr unsigned long chunk = 64;
        for (;;) {
            const unsigned long lo = next.fetch_add(chunk);
            if (lo >= a_end) break;
            const unsigned long hi = std::min(a_end - 1, lo + chunk - 1);
            for (unsigned long a = lo; a <= hi; ++a) {
                for (unsigned long b = 2; b < a; ++b) {
                    prod = a;
                    prod *= b;
                    prod += 1;
                    const auto r3 = classify(prod, g);
                    if (!r3 || r3->length < 2) continue;
                    for (unsigned long c = 1; c < b; ++c) {
                        prod = a;
                        prod *= c;
                        prod += 1;
                        const auto r2 = classify(prod, g);
                        if (!r2 || r2->length < 2) continue;
                        prod = b;
                        prod *= c;
                        prod += 1;
                        const auto r1 = classify(prod, g);
                        if (!r1 || r1->length < 2) continue;
                        auto sol = make_solution(g, mpz_class(a), mpz_class(b), mpz_class(c));
                        if (sol) out.push_back(std::move(*sol));
                    }
                }
            }
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

std::vector<Solution> large_phase(unsigned long g, const mpz_class& B, int cap,
                                  unsigned workers) {
    if (g < 3) throw std::invalid_argument("large_phase: base must be >= 3");
    if (B < 2) throw std::invalid_argument("large_phase: threshold must be >= 2");
    if (cap < 2) return {};

    // repunits memoized per base; read-only once the fan-out starts
    std::vector<mpz_class> rep(static_cast<size_t>(cap) + 1);
    rep[0] = 0;
    for (int k = 1; k <= cap; ++k) {
        rep[static_cast<size_t>(k)] = rep[static_cast<size_t>(k) - 1];
        rep[static_cast<size_t>(k)] *= g;
        rep[static_cast<size_t>(k)] += 1;
    }

    std::vector<std::pair<int, int>> grid;  // (n2, n3)
    for (int n2 = 2; n2 <= cap; ++n2)
        for (int n3 = n2; n3 <= std::min(cap, 2 * n2); ++n3)
            grid.emplace_back(n2, n3);

    const unsigned nw =
        std::max<unsigned>(1, std::min<unsigned>(resolve_workers(workers),
                                                 static_cast<unsigned>(grid.size())));
    std::vector<std::vector<Solution>> found(nw);
    std::atomic<size_t> next{0};

    auto work = [&](unsigned wi) {
        mpz_class ab, ac, bc, gg;
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            const auto [n2, n3] = grid[i];
            const mpz_class& r2 = rep[static_cast<size_t>(n2)];
            const mpz_class& r3 = rep[static_cast<size_t>(n3)];
            for (unsigned long d3 = 1; d3 < g; ++d3) {
                ab = r3;
                ab *= d3;
                ab -= 1;
                // ab > ac is automatic for n3 > n2; equal lengths need d3 > d2
                const unsigned long d2_end = (n3 == n2) ? d3 : g;
                for (unsigned long d2 = 1; d2 < d2_end; ++d2) {
                    ac = r2;
                    ac *= d2;
                    ac -= 1;
                    mpz_gcd(gg.get_mpz_t(), ab.get_mpz_t(), ac.get_mpz_t());
                    if (gg < B) continue;  // a | gcd(ab, ac): covered by the small phase
                    for (int n1 = 2; n1 <= n2; ++n1) {
                        for (unsigned long d1 = 1; d1 < g; ++d1) {
                            bc = rep[static_cast<size_t>(n1)];
                            bc *= d1;
                            bc -= 1;
                            if (bc >= ac) break;  // bc grows with d1
                            const auto abc = solve_products(ab, ac, bc);
                            if (!abc) continue;
                            auto sol = make_solution(g, (*abc)[0], (*abc)[1], (*abc)[2]);
                            if (sol) found[wi].push_back(std::move(*sol));
                        }
                    }
                }
            }
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

std::vector<Solution> search_base(unsigned long g, const SearchConfig& cfg) {
    if (g < 2) throw std::invalid_argument("search_base: base must be >= 2");
    if (g == 2) return {};  // no base-2 triple exists; see header

    const mpz_class B = cfg.threshold_B ? *cfg.threshold_B : default_threshold(g);
    if (B < 2) throw std::invalid_argument("search_base: threshold must be >= 2");
    const int cap = cfg.n3_cap_override ? *cfg.n3_cap_override : n3_cap(g);
    const unsigned workers = resolve_workers(cfg.workers);

    std::vector<Solution> all;
    if (cfg.phase_small) {
        auto part = small_phase(g, B, workers);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    if (cfg.phase_large) {
        auto part = large_phase(g, B, cap, workers);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }

    // the phases overlap whenever gcd(ab, ac) >= B despite a < B
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& s : all)
        if (!verify_solution(s))
            throw std::logic_error("search_base: solution failed re-verification");
    return all;
}

void search_bases(const std::vector<unsigned long>& bases, const SearchConfig& cfg,
                  const BaseSink& sink, const ProgressFn& progress) {
    if (bases.empty()) return;

    struct Slot {
        BaseResult result;
        bool done = false;
    };
    std::vector<Slot> slots(bases.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};

    // bases are the primary unit of parallelism; leftover workers go to
    // within-base partitioning (matters for single-base invocations)
    const unsigned total = resolve_workers(cfg.workers);
    const unsigned base_workers =
        std::max<unsigned>(1, std::min<unsigned>(total, bases.size()));
    SearchConfig per_base = cfg;
    per_base.workers = std::max(1u, total / base_workers);

    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= bases.size()) break;
            BaseResult r;
            r.g = bases[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                r.solutions = search_base(bases[i], per_base);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            // fire progress before publishing the slot so per-base metadata
            // (wall time) is available to the sink when it emits
            if (progress) progress(bases[i], r.solutions.size(), secs);
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[i].result = std::move(r);
                slots[i].done = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(base_workers);
    for (unsigned wi = 0; wi < base_workers; ++wi) pool.emplace_back(work);

    // emit in list order as soon as each prefix completes
    if (sink) {
        for (size_t i = 0; i < bases.size(); ++i) {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return slots[i].done; });
            const BaseResult& r = slots[i].result;
            lock.unlock();
            sink(r);
        }
    }
    for (auto& t : pool) t.join();
}

std::vector<BaseResult> search_range(unsigned long g_lo, unsigned long g_hi,
                                     const SearchConfig& cfg) {
    if (g_lo < 2 || g_lo > g_hi) throw std::invalid_argument("search_range: need 2 <= lo <= hi");
    std::vector<unsigned long> bases;
    bases.reserve(g_hi - g_lo + 1);
    for (unsigned long g = g_lo; g <= g_hi; ++g) bases.push_back(g);
    std::vector<BaseResult> out;
    out.reserve(bases.size());
    search_bases(bases, cfg, [&](const BaseResult& r) { out.push_back(r); });
    return out;
}

}  // namespace reptriples
