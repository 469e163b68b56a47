#ifndef HMF_ZETA_HPP
#define HMF_ZETA_HPP

#include <optional>

#include "hmf/field.hpp"

namespace hmf {

struct zeta_value {
    long k = 0;                 // the value is zeta_L(1-k)
    qq value;
    factorization num, den;
};

/* zeta_L(1-k) for even k >= 2, from the constant term of the pullback of
 * E_k to an elliptic modular form of weight gk */
zeta_value zeta_special_value(field_ptr const & F, long k);
qq zeta_at(field_ptr const & F, long k);      // memoized value only
/* the rational tail a_1..a_N of the pullback of E_k at (O_L, D_L^-1) */
std::vector<qq> pullback_tail(field_ptr const & F, long k, int N);

/* prod_{P | p} (1 - Nm(P)^{k-1}) zeta_L(1-k) */
qq p_adic_zeta(field_ptr const & F, long p, long k);
qq euler_factor_at_p(field_ptr const & F, long p, long k);

/* A p-adic weight k in Z_p restricted to the even classes: k mod (p-1)
 * (mod 2 for p = 2) and k mod p^m, or an exact integer. */
struct padic_weight {
    long p = 0;
    long residue = 0;
    zz digits = 0;
    int m = 0;
    std::optional<long> exact;

    static padic_weight integer(long p, long k);
    static padic_weight from_digits(long p, long residue, zz digits, int m);
    /* period of the classes known at level l: (p-1)p^l, or 2^(l+1) for p = 2 */
    static zz period(long p, int l);
    /* smallest even k >= 2 in the class, reduced mod period(p, l); l <= m
     * unless the weight is exact */
    long representative(int l) const;
};

struct padic_limit {
    qq value;                   // normalized mod p^prec as a/p^s
    int valuation = 0;
    int prec = 0;
    long k1 = 0, k2 = 0;        // the two representatives compared
    int level = 0;              // they agree mod (p-1)p^level
};
padic_limit p_adic_zeta_limit(field_ptr const & F, long p, padic_weight const & k0, int n);

/* reduction of a rational into the canonical p-adic form a/p^s mod p^n */
qq padic_reduce(qq const & x, long p, int n);

} // namespace hmf

#endif
