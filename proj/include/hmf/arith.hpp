#ifndef HMF_ARITH_HPP
#define HMF_ARITH_HPP

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hmf {

using zz = mpz_class;
using qq = mpq_class;
using zvec = std::vector<zz>;
using qvec = std::vector<qq>;
using zmat = std::vector<zvec>;
using qmat = std::vector<qvec>;

/* All library failures carry a stable error code (the names used in the
 * CLI error JSON) plus a human readable message. */
class hmf_error : public std::runtime_error {
    std::string code_;
  public:
    hmf_error(std::string code, std::string const & msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    std::string const & code() const { return code_; }
};

constexpr int val_infinity = INT_MAX;

std::string to_string(qq const & x);
std::string to_string(zz const & x);
qq parse_rational(std::string_view s);

int val_p(zz const & x, long p);     // val_infinity for 0
int val_p(qq const & x, long p);
zz ipow(zz const & b, unsigned long e);
qq qpow(qq const & b, long e);
zz lcm_den(qvec const & v);
zz gcd_content(zvec const & v);
long long to_ll(zz const & x);       // throws on overflow

/* ceil(a/b) for b > 0 */
zz ceil_div(zz const & a, zz const & b);
zz floor_div(zz const & a, zz const & b);
zz mod_pos(zz const & a, zz const & m);
/* a mod m for rational a with denominator prime to m, in [0, m) */
zz rational_mod(qq const & a, zz const & m);

/* Row-style Hermite normal form of a full-rank integer lattice given by
 * generators (rows). Result is square, upper triangular, positive
 * diagonal, entries above the diagonal reduced into [0, pivot). */
zmat hnf(zmat rows, int dim);
zz det(zmat m);
qq det(qmat m);
qmat inverse(qmat const & m);
qmat transpose(qmat const & m);
qmat to_q(zmat const & m);
/* x * A for a row vector x */
qvec row_times(qvec const & x, qmat const & a);
/* solve x * A = b for invertible A */
qvec solve_row(qmat const & a, qvec const & b);

bool is_probable_prime(zz const & n);
struct factorization {
    std::vector<std::pair<zz, int>> factors;   // sorted by prime
    zz unfactored = 1;                          // composite cofactor left over, 1 if complete
};
/* Trial division, then Pollard-Brent rho with an effort budget. */
factorization factor_integer(zz n, unsigned long rho_budget = 2000000);
std::vector<std::pair<long, int>> factor_small(long n);
std::vector<long> primes_up_to(long n);
bool is_prime_small(long n);

} // namespace hmf

#endif
