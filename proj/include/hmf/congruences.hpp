#ifndef HMF_CONGRUENCES_HPP
#define HMF_CONGRUENCES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmf/field.hpp"

namespace hmf {

struct local_prime_data {
    std::string label;
    int e = 0, f = 0;
    int eprime = 0, e_tame = 0, e_wild = 0;
    std::string reason;
};

struct local_ram_data {
    long p = 0;
    std::vector<local_prime_data> primes;
    int e_t = 0, e_w = 0;       // minima over the primes above p
    // p = 2 only
    int e2 = 0;
    char norm_type = 0;         // 'A': -1 in H; 'B': -1 not in H, H inside 1+4Z_2; 'C': otherwise
    int eps_minus_one = 0;      // 1 iff -1 is not a local unit norm
};

/* per-prime overrides of e'(P/p), keyed by prime label */
using eprime_overrides = std::map<std::string, int>;

/* overrides shipped with the library for fields whose local cubic
 * extensions cannot be classified by the case analysis */
eprime_overrides preloaded_overrides(field_ptr const & F, long p);

local_ram_data local_abelian_data(field_ptr const & F, long p, eprime_overrides const & over = {});
int eps_for_level(local_ram_data const & D, int n);
long l_of_n(int n);
zz hbar_exponent(field_ptr const & F, long p, int n, eprime_overrides const & over = {});

/* exact unit-norm image in (Z/p^n)^*, by closure of generator norms */
std::vector<long> norm_image(field_ptr const & F, long p, int n);
zz group_exponent_mod(std::vector<long> const & H, long m);
zz hbar_bruteforce(field_ptr const & F, long p, int n);
/* norm of an integral element given by integer coordinates, modulo m */
int64_t norm_mod(field_ptr const & F, std::vector<int64_t> const & x, int64_t m);

struct integrality_report {
    long p = 0;
    long k = 0;
    qq a0;                      // 2^-g zeta(1-k)
    int n = 0;                  // -val_p(a0)
    bool integral = false;
    zz modulus;                 // required divisor of k
    bool pass = false;
    std::string detail;
};
integrality_report check_integrality(field_ptr const & F, long p, long k, eprime_overrides const & over = {});

struct congruence_report {
    long p = 0;
    long k = 0, kprime = 0;
    int m = -1;                 // -1: no claim
    int which_case = 0;         // 1, 2, 3
    std::optional<long> predicted;
    qq lhs, rhs;                // the two E-dagger constant terms
    int actual = val_infinity;
    bool pass = false;
    std::string detail;
};
/* predicted lower bound only (no zeta evaluation) */
congruence_report congruence_bound(field_ptr const & F, long p, long k, long kprime, eprime_overrides const & over = {});
congruence_report verify_congruence(field_ptr const & F, long p, long k, long kprime, eprime_overrides const & over = {});

struct real_quadratic_p_report {
    long p = 0, r = 0;
    long k1 = 0, k2 = 0;        // r(p-1) and r(p-1)/2
    int val1 = 0, val2 = 0;
    int expected = 0;           // -1 - val_p(r)
    bool full_weight_holds = false;   // expected under Vandiver; report only
    bool half_weight_applicable = false;
    bool half_weight_holds = false;
};
real_quadratic_p_report real_quadratic_p_check(long p, long r);

} // namespace hmf

#endif
