#include "hmf/field.hpp"

#include <algorithm>

namespace hmf {

namespace {

fp_poly reduce_integral(number_field const & F, prime_data const & P, elem const & y)
{
    fp_ctx C(P.p);
    qvec c = F.to_power(y);
    fp_poly r(c.size());
    for (size_t i = 0; i < c.size(); i++)
        r[i] = rational_mod(c[i], zz(P.p)).get_si();
    trim(r);
    return fp_mod(C, r, P.gpoly);
}

fp_poly residue_inverse(prime_data const & P, fp_poly const & a)
{
    fp_ctx C(P.p);
    if (a.empty())
        throw hmf_error("DivisionByZero", "residue is zero");
    return fp_powmod(C, a, P.norm() - 2, P.gpoly);
}

} // namespace

std::vector<prime_data> const & number_field::primes_above(long p) const
{
    {
        std::lock_guard<std::mutex> lk(prime_mu_);
        auto it = primes_.find(p);
        if (it != primes_.end())
            return *it->second;
    }
    if (!is_prime_small(p))
        throw hmf_error("NotPrime", std::to_string(p) + " is not prime");
    if (mpz_divisible_ui_p(index_.get_mpz_t(), (unsigned long)p))
        throw hmf_error("IndexDivisible", std::to_string(p) + " divides the index of Z[theta]; factorization refused");
    fp_ctx C(p);
    auto fac = fp_factor(C, fp_from_z(C, poly_));
    std::sort(fac.begin(), fac.end(), [](auto const & a, auto const & b) {
        if (deg(a.first) != deg(b.first))
            return deg(a.first) < deg(b.first);
        if (a.second != b.second)
            return a.second < b.second;
        return fp_poly_less(a.first, b.first);
    });
    auto self = shared_from_this();
    auto out = std::make_shared<std::vector<prime_data>>();
    for (size_t i = 0; i < fac.size(); i++) {
        prime_data P;
        P.p = p;
        P.e = fac[i].second;
        P.f = deg(fac[i].first);
        P.index = (int)i;
        P.label = "P" + std::to_string(i + 1);
        P.gpoly = fac[i].first;
        elem gen = zero(), th = theta(), x = one();
        for (auto c : fac[i].first) {
            gen = add(gen, scale(x, qq(c)));
            x = mul(x, th);
        }
        P.ideal = frac_ideal::generated(self, {from_int(zz(p)), gen});
        for (auto const & row : P.ideal.inverse().basis())
            if (!is_integral(row)) {
                P.anti = row;
                break;
            }
        if (P.anti.empty())
            throw hmf_error("Internal", "prime ideal inverse is integral");
        out->push_back(std::move(P));
    }
    int sum = 0;
    for (auto const & P : *out)
        sum += P.e * P.f;
    if (sum != g_)
        throw hmf_error("Internal", "sum of e*f differs from the degree");
    std::lock_guard<std::mutex> lk(prime_mu_);
    auto [it, inserted] = primes_.emplace(p, out);
    return *it->second;
}

int number_field::valuation(prime_data const & P, elem const & a) const
{
    if (is_zero(a))
        return val_infinity;
    zz d = lcm_den(a);
    elem x = scale(a, qq(d));
    int v = 0;
    zz p = P.p;
    for (;;) {
        bool div = true;
        for (auto const & c : x)
            if (!mpz_divisible_p(c.get_num_mpz_t(), p.get_mpz_t())) {
                div = false;
                break;
            }
        if (!div)
            break;
        x = scale(x, qq(1, P.p));
        v += P.e;
    }
    for (;;) {
        elem y = mul(x, P.anti);
        if (!is_integral(y))
            break;
        x = std::move(y);
        v++;
    }
    return v - P.e * val_p(d, P.p);
}

int number_field::valuation(prime_data const & P, frac_ideal const & I) const
{
    int best = val_infinity;
    for (auto const & row : I.hnf_matrix()) {
        elem x(row.begin(), row.end());
        if (is_zero(x))
            continue;
        best = std::min(best, valuation(P, x));
    }
    return best - P.e * val_p(I.den(), P.p);
}

elem number_field::uniformizer(prime_data const & P) const
{
    {
        std::lock_guard<std::mutex> lk(prime_mu_);
        auto it = unif_.find({P.p, P.index});
        if (it != unif_.end())
            return it->second;
    }
    auto const & all = primes_above(P.p);
    long budget = 5000000;
    for (long r = 1;; r++) {
        for (auto const & v : search_shell(g_, r)) {
            if (--budget < 0)
                throw hmf_error("TooLarge", "uniformizer search exceeded its budget");
            elem x(v.begin(), v.end());
            if (!P.ideal.contains(x))
                continue;
            elem y = mul(x, P.anti);
            if (!is_integral(y) || is_integral(mul(y, P.anti)))
                continue;
            bool ok = true;
            for (auto const & Q : all)
                if (Q.index != P.index && is_integral(mul(x, Q.anti))) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            std::lock_guard<std::mutex> lk(prime_mu_);
            unif_[{P.p, P.index}] = x;
            return x;
        }
    }
}

fp_poly number_field::residue(prime_data const & P, elem const & a) const
{
    if (is_zero(a))
        return {};
    if (valuation(P, a) < 0)
        throw hmf_error("NotIntegral", "element is not integral at " + P.label);
    zz d = lcm_den(a);
    int t = val_p(d, P.p);
    zz dp = d / ipow(zz(P.p), t);
    elem x = scale(a, qq(dp));
    fp_ctx C(P.p);
    fp_poly dr = fp_from_z(C, {dp});
    if (t == 0)
        return fp_mod(C, fp_mul(C, reduce_integral(*this, P, x), residue_inverse(P, dr)), P.gpoly);
    // clear the p-part of the denominator with an element that is a unit at P
    // and highly divisible by the other primes above p
    auto const & all = primes_above(P.p);
    frac_ideal Q = unit_ideal();
    for (auto const & R : all)
        if (R.index != P.index)
            Q = Q * R.ideal.pow(t * R.e);
    elem w;
    for (auto const & row : Q.basis())
        if (!P.ideal.contains(row)) {
            w = row;
            break;
        }
    elem y = mul(x, w);
    if (!is_integral(y))
        throw hmf_error("Internal", "residue lift is not integral");
    fp_poly num = reduce_integral(*this, P, y);
    fp_poly den = fp_mod(C, fp_mul(C, reduce_integral(*this, P, w), dr), P.gpoly);
    return fp_mod(C, fp_mul(C, num, residue_inverse(P, den)), P.gpoly);
}

} // namespace hmf
