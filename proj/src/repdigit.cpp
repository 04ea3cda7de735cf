#include "reptriples/repdigit.hpp"

#include <stdexcept>

namespace reptriples {

mpz_class repunit(unsigned long g, unsigned k) {
    if (g < 2) throw std::invalid_argument("repunit: base must be >= 2");
    if (k < 1) throw std::invalid_argument("repunit: length must be >= 1");
    // Horner form g^{k-1} + ... + g + 1.
    mpz_class r = 1;
    for (unsigned i = 1; i < k; ++i) {
        r *= g;
        r += 1;
    }
    return r;
}

mpz_class repdigit_value(unsigned long d, unsigned k, unsigned long g) {
    if (g < 2) throw std::invalid_argument("repdigit_value: base must be >= 2");
    if (d < 1 || d > g - 1) throw std::invalid_argument("repdigit_value: digit out of range");
    mpz_class v = repunit(g, k);
    v *= d;
    return v;
}

unsigned digit_length(const mpz_class& n, unsigned long g) {
    if (g < 2) throw std::invalid_argument("digit_length: base must be >= 2");
    if (n < 1) throw std::invalid_argument("digit_length: n must be >= 1");
    unsigned k = 1;
    mpz_class pw(g);
    while (pw <= n) {
        pw *= g;
        ++k;
    }
    return k;
}

std::optional<Repdigit> classify(const mpz_class& n, unsigned long g) {
    if (g < 2) throw std::invalid_argument("classify: base must be >= 2");
    if (n < 1) throw std::invalid_argument("classify: n must be >= 1");

    // k is forced by the digit count, then d by exact division: a k-digit
    // repdigit is d*(g^k - 1)/(g - 1) and any d in [1, g-1] keeps k digits.
    unsigned k = 1;
    mpz_class pw(g);
    while (pw <= n) {
        pw *= g;
        ++k;
    }
    pw -= 1;
    mpz_divexact_ui(pw.get_mpz_t(), pw.get_mpz_t(), g - 1);  // repunit(g, k)

    mpz_class d, rem;
    mpz_tdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), pw.get_mpz_t());
    if (rem != 0) return std::nullopt;
    if (d < 1 || d > g - 1) return std::nullopt;
    return Repdigit{d.get_ui(), k, g, n};
}

}  // namespace reptriples
