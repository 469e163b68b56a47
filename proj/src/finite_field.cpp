#include "hmf/finite_field.hpp"

namespace hmf {

fp_poly smallest_irreducible(fp_ctx const & F, int m)
{
    if (m < 1)
        throw hmf_error("BadDegree", "extension degree must be positive");
    zz count = ipow(zz(F.p), m);
    for (zz idx = 0; idx < count; idx++) {
        fp_poly f(m + 1, 0);
        zz t = idx;
        for (int i = 0; i < m; i++) {
            f[i] = mod_pos(t, zz(F.p)).get_si();
            t /= F.p;
        }
        f[m] = 1;
        if (fp_is_irreducible(F, f))
            return f;
    }
    throw hmf_error("Internal", "no irreducible polynomial found");
}

gf::gf(int64_t p, int m) : F_(p), m_(m), mod_(smallest_irreducible(F_, m)) {}

gf::gf(int64_t p, fp_poly modulus) : F_(p), m_(deg(modulus)), mod_(fp_monic(F_, modulus))
{
    if (m_ < 1 || !fp_is_irreducible(F_, mod_))
        throw hmf_error("NotIrreducible", "finite field modulus is not irreducible");
}

gf::elem gf::from_int(int64_t a) const
{
    elem r{F_.red(a)};
    trim(r);
    return r;
}

gf::elem gf::pow(elem const & a, zz const & e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    return fp_powmod(F_, a, e, mod_);
}

gf::elem gf::inv(elem const & a) const
{
    if (a.empty())
        throw hmf_error("DivisionByZero", "inverse of 0 in finite field");
    return pow(a, order() - 2);
}

gf::elem gf::eval(fp_poly const & f, elem const & x) const
{
    elem r;
    for (int i = (int)f.size() - 1; i >= 0; i--)
        r = add(mul(r, x), from_int(f[i]));
    return r;
}

uint64_t gf::to_index(elem const & a) const
{
    uint64_t r = 0;
    for (int i = (int)a.size() - 1; i >= 0; i--)
        r = r * (uint64_t)F_.p + (uint64_t)a[i];
    return r;
}

gf::elem gf::from_index(uint64_t idx) const
{
    elem r(m_, 0);
    for (int i = 0; i < m_; i++) {
        r[i] = (int64_t)(idx % (uint64_t)F_.p);
        idx /= (uint64_t)F_.p;
    }
    trim(r);
    return r;
}

std::vector<gf::elem> gf::roots(fp_poly const & f, uint64_t cap) const
{
    zz q = order();
    if (q > zz((unsigned long)cap))
        throw hmf_error("TooLarge", "field of order " + q.get_str() + " too large for root search");
    uint64_t n = q.get_ui();
    std::vector<elem> r;
    for (uint64_t i = 0; i < n; i++) {
        elem x = from_index(i);
        if (eval(f, x).empty())
            r.push_back(x);
    }
    return r;
}

} // namespace hmf
