#include "reptriples/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace reptriples {

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<mpz_class> perfect_square_root(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("perfect_square_root: negative input");
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

ProductForm product_form(unsigned long d, unsigned n, unsigned long g) {
    if (g < 2) throw std::invalid_argument("product_form: base must be >= 2");
    if (d < 1 || d > g - 1) throw std::invalid_argument("product_form: digit out of range");
    if (n < 2) throw std::invalid_argument("product_form: exponent must be >= 2");

    ProductForm pf;
    pf.digit = d;
    pf.exponent = n;
    pf.base = g;

    mpz_class dgn;
    mpz_ui_pow_ui(dgn.get_mpz_t(), g, n);
    dgn *= d;
    mpz_class w = mpz_class(d) + g - 1;

    mpz_gcd(pf.lambda.get_mpz_t(), dgn.get_mpz_t(), w.get_mpz_t());
    pf.x = dgn / pf.lambda;
    pf.y = w / pf.lambda;
    return pf;
}

namespace {

unsigned long floor_sqrt_ul(unsigned long x) {
    auto r = static_cast<unsigned long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

PigeonholePair pigeonhole_pair(unsigned long m, unsigned long n, unsigned long X) {
    if (m == 0 && n == 0) throw std::invalid_argument("pigeonhole_pair: m and n both zero");
    if (X < 3 || X < m || X < n) throw std::invalid_argument("pigeonhole_pair: X < max(3, m, n)");
    if (X > 1000000000UL) throw capacity_error("pigeonhole_pair: X exceeds scan budget");

    const long s = static_cast<long>(floor_sqrt_ul(X));
    bool found = false;
    long long best_t = 0;
    long best_u = 0, best_v = 0;
    for (long u = -s; u <= s; ++u) {
        for (long v = -s; v <= s; ++v) {
            if (u == 0 && v == 0) continue;
            const long long t = static_cast<long long>(m) * u + static_cast<long long>(n) * v;
            if (t < 0) continue;
            if (static_cast<unsigned long long>(t) * static_cast<unsigned long long>(t) >
                4ULL * X)
                continue;  // t <= 2*sqrt(X), compared exactly
            if (!found || t < best_t ||
                (t == best_t && (u < best_u || (u == best_u && v < best_v)))) {
                found = true;
                best_t = t;
                best_u = u;
                best_v = v;
            }
        }
    }
    // existence is guaranteed by the pigeonhole principle
    if (!found) throw std::logic_error("pigeonhole_pair: scan found no qualifying pair");
    return {best_u, best_v};
}

namespace {

constexpr unsigned long kTrialLimit = 2000000;

// Trial division up to kTrialLimit. The p^2 > n cutoff certifies a trailing
// prime cofactor exactly; anything the budget cannot certify is an error.
std::vector<std::pair<mpz_class, unsigned long>> factorize(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned long>> out;
    if (n <= 0) throw std::invalid_argument("factorize: positive input required");
    for (unsigned long p = 2; p <= kTrialLimit; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
            if (n > 1) out.emplace_back(std::move(n), 1);
            return out;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            out.emplace_back(p, e);
        }
    }
    if (n == 1) return out;
    throw capacity_error("mult_dependence: cofactor exceeds trial-division budget");
}

// Signed prime-exponent vector of num/den (coprime inputs keep supports disjoint).
std::map<mpz_class, long> exponent_vector(const mpz_class& num, const mpz_class& den) {
    std::map<mpz_class, long> v;
    for (auto& [p, e] : factorize(num)) v[p] += static_cast<long>(e);
    for (auto& [p, e] : factorize(den)) v[p] -= static_cast<long>(e);
    return v;
}

}  // namespace

Dependence mult_dependence(const mpz_class& x1, const mpz_class& y1,
                           const mpz_class& x2, const mpz_class& y2) {
    mpz_class t;
    mpz_gcd(t.get_mpz_t(), x1.get_mpz_t(), y1.get_mpz_t());
    if (!(y1 >= 1 && x1 > y1) || t != 1)
        throw std::invalid_argument("mult_dependence: x1/y1 must be > 1 in lowest terms");
    mpz_gcd(t.get_mpz_t(), x2.get_mpz_t(), y2.get_mpz_t());
    if (!(y2 >= 1 && x2 > y2) || t != 1)
        throw std::invalid_argument("mult_dependence: x2/y2 must be > 1 in lowest terms");

    const auto v1 = exponent_vector(x1, y1);
    const auto v2 = exponent_vector(x2, y2);

    Dependence dep;
    if (v1.size() != v2.size()) return dep;

    // content = gcd of |exponents|; both ratios are > 1, so parallel vectors
    // share their primitive part exactly (same orientation).
    unsigned long c1 = 0, c2 = 0;
    for (auto& [p, e] : v1) c1 = std::gcd(c1, static_cast<unsigned long>(std::labs(e)));
    for (auto& [p, e] : v2) c2 = std::gcd(c2, static_cast<unsigned long>(std::labs(e)));

    auto it1 = v1.begin();
    auto it2 = v2.begin();
    for (; it1 != v1.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return dep;
        if (it1->second * static_cast<long>(c2) != it2->second * static_cast<long>(c1))
            return dep;
    }

    dep.dependent = true;
    const unsigned long g0 = std::gcd(c1, c2);
    dep.r1 = c1 / g0;
    dep.r2 = c2 / g0;
    dep.gen_num = 1;
    dep.gen_den = 1;
    for (auto& [p, e] : v1) {
        // primitive exponent e/c1, scaled by g0 for the joint generator
        const long ge = e / static_cast<long>(c1) * static_cast<long>(g0);
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(ge)));
        if (ge > 0)
            dep.gen_num *= pw;
        else
            dep.gen_den *= pw;
    }
    return dep;
}

unsigned long GcdBoundInput::C() const {
    unsigned long c = g;
    for (long v : {t1, w1, t2, w2})
        c = std::max(c, static_cast<unsigned long>(std::labs(v)));
    return c;
}

mpz_class gcd_bound(const GcdBoundInput& in) {
    if (in.t1 == 0 || in.w1 == 0 || in.t2 == 0 || in.w2 == 0)
        throw std::invalid_argument("gcd_bound: t and w must be non-zero");
    if (in.g < 2) throw std::invalid_argument("gcd_bound: base must be >= 2");
    if (in.k1 < 1 || in.k2 < 1) throw std::invalid_argument("gcd_bound: exponents must be >= 1");
    if (!std::isfinite(in.X) || !(in.X >= in.k1 && in.X >= in.k2 && in.X >= 3))
        throw std::invalid_argument("gcd_bound: X must be finite and >= max(k1, k2, 3)");

    // exponent = 2 + ceil(5*sqrt(X)): the smallest m with m^2 >= 25*X,
    // compared as exact rationals (a double is a dyadic rational).
    const mpq_class x25 = mpq_class(in.X) * 25;
    const mpz_class num = x25.get_num(), den = x25.get_den();
    mpz_class m = isqrt(num / den);
    while (m * m * den < num) ++m;
    while (m > 0 && (m - 1) * (m - 1) * den >= num) --m;

    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), in.C(), 2 + m.get_ui());
    return 2 * r;
}

mpz_class gcd_special(long t1, long w1, unsigned k1,
                      long t2, long w2, unsigned k2, unsigned long g) {
    if (g < 2) throw std::invalid_argument("gcd_special: base must be >= 2");
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("gcd_special: exponents must be >= 1");
    if (t1 == 0 || w1 == 0 || t2 == 0 || w2 == 0)
        throw std::invalid_argument("gcd_special: t and w must be non-zero");

    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), g, k1);
    a *= t1;
    a -= w1;
    mpz_ui_pow_ui(b.get_mpz_t(), g, k2);
    b *= t2;
    b -= w2;
    if (a == 0 || b == 0) throw std::invalid_argument("gcd_special: t*g^k == w");

    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace reptriples
