#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

namespace reptriples {

/// Thrown when an input exceeds a documented computational budget
/// (trial-division cofactors, census loop sizes).
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// floor(sqrt(n)).
mpz_class isqrt(const mpz_class& n);

/// sqrt(n) when n is a perfect square, otherwise nothing.
std::optional<mpz_class> perfect_square_root(const mpz_class& n);

/// Decomposition d*g^n - (d+g-1) = lambda*(x - y) with
/// lambda = gcd(d*g^n, d+g-1), x = d*g^n/lambda, y = (d+g-1)/lambda.
/// Always gcd(x, y) = 1, x > y >= 1 and lambda <= 2(g-1).
struct ProductForm {
    unsigned long digit = 0;  // d
    unsigned exponent = 0;    // n >= 2
    unsigned long base = 0;   // g
    mpz_class lambda, x, y;
};

ProductForm product_form(unsigned long d, unsigned n, unsigned long g);

struct PigeonholePair {
    long u = 0, v = 0;
};

/// A pair (u, v) != (0, 0) with max(|u|, |v|) <= sqrt(X) and
/// 0 <= m*u + n*v <= 2*sqrt(X). Among all qualifying pairs, returns the
/// one minimizing m*u + n*v, ties broken lexicographically on (u, v).
PigeonholePair pigeonhole_pair(unsigned long m, unsigned long n, unsigned long X);

/// Verdict of a multiplicative-dependence test of two rationals
/// x1/y1, x2/y2 > 1 in lowest terms. When dependent, alpha/beta > 1
/// generates the subgroup of Q+* generated by the two ratios:
/// x_i = alpha^{r_i}, y_i = beta^{r_i}, gcd(r1, r2) = 1.
struct Dependence {
    bool dependent = false;
    mpz_class gen_num, gen_den;    // alpha, beta; gcd(alpha, beta) = 1
    unsigned long r1 = 0, r2 = 0;  // positive when dependent
};

Dependence mult_dependence(const mpz_class& x1, const mpz_class& y1,
                           const mpz_class& x2, const mpz_class& y2);

/// Parameters of the special-shape gcd bound. The bound applies to
/// gcd(t1*g^k1 - w1, t2*g^k2 - w2) whenever the ratios t_i*g^{k_i}/w_i
/// are multiplicatively independent (caller-checked).
struct GcdBoundInput {
    long t1 = 0, w1 = 0, t2 = 0, w2 = 0;  // non-zero
    unsigned k1 = 1, k2 = 1;              // >= 1
    unsigned long g = 2;                  // >= 2
    double X = 3;                         // >= max(k1, k2, 3)

    unsigned long C() const;  // max(g, |t1|, |w1|, |t2|, |w2|)
};

/// 2 * C^ceil(2 + 5*sqrt(X)), computed exactly. The integer ceiling on
/// the exponent only enlarges the bound.
mpz_class gcd_bound(const GcdBoundInput& in);

/// gcd(t1*g^k1 - w1, t2*g^k2 - w2), exact, as a non-negative integer.
mpz_class gcd_special(long t1, long w1, unsigned k1,
                      long t2, long w2, unsigned k2, unsigned long g);

}  // namespace reptriples
