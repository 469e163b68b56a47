#ifndef HMF_EISENSTEIN_HPP
#define HMF_EISENSTEIN_HPP

#include <utility>
#include <vector>

#include "hmf/qexp.hpp"
#include "hmf/zeta.hpp"

namespace hmf {

/* (Nm P, exponent) for the integral ideal (nu) M^-1; memoized per field */
std::vector<std::pair<zz, int>> divisor_data(field_ptr const & F, elem const & nu, frac_ideal const & M);

/* sum over integral D | (nu)M^-1 of Nm((nu)M^-1 D^-1)^(k-1) */
qq divisor_power_sum(field_ptr const & F, elem const & nu, frac_ideal const & M, long k);
/* the same sum with every term whose norm is divisible by p dropped */
qq divisor_power_sum_prime_to(field_ptr const & F, elem const & nu, frac_ideal const & M, long k, long p);

qexpansion eisenstein_qexp(field_ptr const & F, long k, cusp const & C, qq const & T);

enum class dagger_route { filter, inclusion_exclusion, both };
qexpansion eisenstein_dagger(field_ptr const & F, long k, long p, cusp const & C, qq const & T,
                             dagger_route route = dagger_route::both);

/* E*_k mod p^n for a p-adic weight k0 */
qexpansion eisenstein_pstar(field_ptr const & F, long p, padic_weight const & k0, cusp const & C, qq const & T, int n);

} // namespace hmf

#endif
