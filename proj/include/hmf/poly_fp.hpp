#ifndef HMF_POLY_FP_HPP
#define HMF_POLY_FP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hmf/arith.hpp"

namespace hmf {

/* Dense polynomials over F_p, low degree first, no trailing zeros.
 * p must fit comfortably in 62 bits. */
using fp_poly = std::vector<int64_t>;

struct fp_ctx {
    int64_t p;
    explicit fp_ctx(int64_t p_) : p(p_) {}
    int64_t red(int64_t a) const { a %= p; return a < 0 ? a + p : a; }
    int64_t add(int64_t a, int64_t b) const { int64_t c = a + b; return c >= p ? c - p : c; }
    int64_t sub(int64_t a, int64_t b) const { int64_t c = a - b; return c < 0 ? c + p : c; }
    int64_t mul(int64_t a, int64_t b) const { return (int64_t)((__int128)a * b % p); }
    int64_t pow(int64_t a, uint64_t e) const;
    int64_t inv(int64_t a) const;
};

void trim(fp_poly & f);
int deg(fp_poly const & f);   // -1 for zero
fp_poly fp_add(fp_ctx const & F, fp_poly const & a, fp_poly const & b);
fp_poly fp_sub(fp_ctx const & F, fp_poly const & a, fp_poly const & b);
fp_poly fp_mul(fp_ctx const & F, fp_poly const & a, fp_poly const & b);
fp_poly fp_scale(fp_ctx const & F, fp_poly const & a, int64_t c);
/* quotient and remainder; b must be nonzero */
std::pair<fp_poly, fp_poly> fp_divmod(fp_ctx const & F, fp_poly const & a, fp_poly const & b);
fp_poly fp_mod(fp_ctx const & F, fp_poly const & a, fp_poly const & b);
fp_poly fp_gcd(fp_ctx const & F, fp_poly a, fp_poly b);
fp_poly fp_monic(fp_ctx const & F, fp_poly const & a);
fp_poly fp_deriv(fp_ctx const & F, fp_poly const & a);
fp_poly fp_powmod(fp_ctx const & F, fp_poly const & base, zz e, fp_poly const & m);
int64_t fp_eval(fp_ctx const & F, fp_poly const & a, int64_t x);
fp_poly fp_from_z(fp_ctx const & F, zvec const & c);
bool fp_is_irreducible(fp_ctx const & F, fp_poly const & f);

/* Complete factorization of a nonzero polynomial into monic irreducibles
 * with multiplicities, sorted by (degree, coefficients). */
std::vector<std::pair<fp_poly, int>> fp_factor(fp_ctx const & F, fp_poly const & f);

/* compare by degree, then coefficients from the top down */
bool fp_poly_less(fp_poly const & a, fp_poly const & b);

} // namespace hmf

#endif
