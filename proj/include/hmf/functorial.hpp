#ifndef HMF_FUNCTORIAL_HPP
#define HMF_FUNCTORIAL_HPP

#include <string>
#include <vector>

#include "hmf/qexp.hpp"
#include "hmf/theta.hpp"

namespace hmf {

/* Q as the degree one field x = 0 */
field_ptr rational_field();

/* L1 inside L2, given on coordinates */
struct relative_embedding {
    field_ptr L1, L2;
    qmat trace;                 // row i = Tr_{L2/L1}(omega_i of L2) in L1 coordinates
    std::vector<int> restrict_to;   // real embedding of L2 -> real embedding of L1
    frac_ideal rel_codifferent;     // D_{L2/L1}^-1
    std::vector<elem> include_basis; // omega_i of L1 in L2 coordinates

    static relative_embedding over_Q(field_ptr const & L2);
    int degree() const { return L2->degree() / L1->degree(); }
    elem rel_trace(elem const & nu) const;
    frac_ideal extend(frac_ideal const & I) const;    // I O_{L2}
};

/* the L2 cusp (A O_{L2}, B D_{L2/L1}^-1) over a cusp (A, B) of L1 */
cusp lift_cusp(relative_embedding const & R, cusp const & C1);

/* a_0 + sum_delta (sum_{Tr nu = delta} a_nu) q^delta at C1; the input lives
 * at lift_cusp(C1) */
qexpansion pullback_qexp(relative_embedding const & R, qexpansion const & f, cusp const & C1);

universal_weight restrict_weight(relative_embedding const & R, universal_weight const & w);

/* coefficients a_0..a_N of an expansion over Q at (Z, Z) */
std::vector<scalar> to_series(qexpansion const & f);
/* q d/dq on an expansion over Q at (Z, Z), coefficients in F_{p^m} */
qexpansion serre_theta(qexpansion const & f);

struct theta_compat_report {
    bool equal = false;
    qexpansion lhs, rhs;
    std::string witness;        // first differing index, if any
};
/* Theta o Upsilon* against Upsilon* o sum_{P, i} e_P Theta_{P,i} for L1 = Q */
theta_compat_report check_theta_compat(relative_embedding const & R, qexpansion const & f, cusp const & C1);

} // namespace hmf

#endif
