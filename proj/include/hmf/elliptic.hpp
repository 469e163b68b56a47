#ifndef HMF_ELLIPTIC_HPP
#define HMF_ELLIPTIC_HPP

#include <vector>

#include "hmf/arith.hpp"

namespace hmf {

/* level one forms over Q as truncated power series a_0 .. a_{N-1} */
struct elliptic_qexp {
    long w = 0;
    std::vector<qq> a;
    int precision() const { return (int)a.size(); }
};

qq bernoulli(long n);              // B_1 = -1/2
zz sigma_power(long n, long r);    // sum of d^r over d | n

elliptic_qexp eisenstein_level1(long w, int N);
elliptic_qexp delta_qexp(int N);
elliptic_qexp series_mul(elliptic_qexp const & f, elliptic_qexp const & g);

long dim_M(long w);
/* f_0 .. f_{d-1} with f_i = q^i + O(q^d) */
std::vector<elliptic_qexp> miller_basis(long w, int N);
/* the unique a_0 with (a_0, tail...) in M_w; tail[i] is a_{i+1} */
qq complete_constant_term(long w, std::vector<qq> const & tail);

} // namespace hmf

#endif
