#ifndef HMF_FINITE_FIELD_HPP
#define HMF_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "hmf/poly_fp.hpp"

namespace hmf {

/* F_{p^m} = F_p[x]/(modulus). The default modulus is the first monic
 * irreducible of degree m in index order (c_0 + c_1 p + ... as an integer). */
class gf {
    fp_ctx F_;
    int m_;
    fp_poly mod_;

  public:
    using elem = fp_poly;   // reduced and trimmed, so == is field equality

    gf(int64_t p, int m);
    gf(int64_t p, fp_poly modulus);

    int64_t p() const { return F_.p; }
    int m() const { return m_; }
    fp_ctx const & base() const { return F_; }
    fp_poly const & modulus() const { return mod_; }
    zz order() const { return ipow(zz(F_.p), m_); }

    elem zero() const { return {}; }
    elem one() const { return {1}; }
    elem from_int(int64_t a) const;
    elem from_poly(fp_poly const & a) const { return fp_mod(F_, a, mod_); }
    elem add(elem const & a, elem const & b) const { return fp_add(F_, a, b); }
    elem sub(elem const & a, elem const & b) const { return fp_sub(F_, a, b); }
    elem neg(elem const & a) const { return fp_sub(F_, {}, a); }
    elem mul(elem const & a, elem const & b) const { return fp_mod(F_, fp_mul(F_, a, b), mod_); }
    elem pow(elem const & a, zz const & e) const;
    elem inv(elem const & a) const;
    elem frob(elem const & a) const { return pow(a, zz(F_.p)); }
    bool is_zero(elem const & a) const { return a.empty(); }

    /* evaluate a polynomial over F_p (given as F_p coefficients) at x */
    elem eval(fp_poly const & f, elem const & x) const;

    uint64_t to_index(elem const & a) const;
    elem from_index(uint64_t idx) const;
    /* roots in F_{p^m} of f, by exhaustive search in index order */
    std::vector<elem> roots(fp_poly const & f, uint64_t cap = 2000000) const;
};

fp_poly smallest_irreducible(fp_ctx const & F, int m);

} // namespace hmf

#endif
