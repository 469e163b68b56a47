#include "hmf/zeta.hpp"

#include "hmf/congruences.hpp"
#include "hmf/eisenstein.hpp"
#include "hmf/elliptic.hpp"

namespace hmf {

std::vector<qq> pullback_tail(field_ptr const & F, long k, int N)
{
    frac_ideal const & M = F->codifferent();
    std::vector<qq> tail(N, qq(0));
    for (auto const & nu : enumerate_totally_positive(M, qq(N))) {
        qq t = F->trace(nu);
        if (t.get_den() != 1)
            throw hmf_error("Internal", "trace of a codifferent element is not an integer");
        tail[t.get_num().get_si() - 1] += divisor_power_sum(F, nu, M, k);
    }
    return tail;
}

qq zeta_at(field_ptr const & F, long k)
{
    if (k < 2 || k % 2)
        throw hmf_error("BadWeight", "zeta_L(1-k) is only computed for even k >= 2");
    {
        std::lock_guard<std::mutex> lk(F->cache_mu);
        auto it = F->zeta_memo.find(k);
        if (it != F->zeta_memo.end())
            return it->second;
    }
    int g = F->degree();
    long w = g * k;
    qq a0;
    if (w == 2) {
        // L = Q, k = 2: E_2 is only quasimodular, its constant is -B_2 / 4
        a0 = -bernoulli(2) / 4;
    } else {
        int N = (int)dim_M(w) + 5;
        a0 = complete_constant_term(w, pullback_tail(F, k, N));
    }
    qq z = a0 * ipow(zz(2), g);
    std::lock_guard<std::mutex> lk(F->cache_mu);
    F->zeta_memo[k] = z;
    return z;
}

zeta_value zeta_special_value(field_ptr const & F, long k)
{
    zeta_value z;
    z.k = k;
    z.value = zeta_at(F, k);
    z.num = factor_integer(abs(z.value.get_num()));
    z.den = factor_integer(z.value.get_den());
    return z;
}

qq euler_factor_at_p(field_ptr const & F, long p, long k)
{
    qq e = 1;
    for (auto const & P : F->primes_above(p))
        e *= 1 - ipow(P.norm(), k - 1);
    return e;
}

qq p_adic_zeta(field_ptr const & F, long p, long k) { return euler_factor_at_p(F, p, k) * zeta_at(F, k); }

padic_weight padic_weight::integer(long p, long k)
{
    if (k < 2 || k % 2)
        throw hmf_error("BadWeight", "integer p-adic weights must be even and >= 2");
    padic_weight w;
    w.p = p;
    w.residue = p == 2 ? 0 : k % (p - 1);
    w.digits = k;
    w.exact = k;
    return w;
}

padic_weight padic_weight::from_digits(long p, long residue, zz digits, int m)
{
    if (m < 0)
        throw hmf_error("BadWeight", "digit count must be nonnegative");
    padic_weight w;
    w.p = p;
    w.m = m;
    zz pm = ipow(zz(p), m);
    w.digits = mod_pos(digits, pm);
    if (p == 2) {
        if (residue % 2)
            throw hmf_error("BadWeight", "only even weights are supported");
        w.residue = 0;
        if (m >= 1 && w.digits % 2 != 0)
            throw hmf_error("BadWeight", "only even weights are supported");
    } else {
        w.residue = ((residue % (p - 1)) + (p - 1)) % (p - 1);
        if (w.residue % 2)
            throw hmf_error("BadWeight", "only even weights are supported");
    }
    return w;
}

zz padic_weight::period(long p, int l)
{
    if (p == 2)
        return ipow(zz(2), l < 1 ? 1 : l);
    return (p - 1) * ipow(zz(p), l);
}

long padic_weight::representative(int l) const
{
    if (exact)
        return *exact;
    if (l > m)
        throw hmf_error("InsufficientPrecision", "weight known mod p^" + std::to_string(m) + " only");
    zz per = period(p, l), k;
    if (p == 2) {
        k = mod_pos(digits, ipow(zz(2), l < 1 ? 1 : l));
    } else {
        // CRT: k = residue mod p-1, k = digits mod p^l
        zz pl = ipow(zz(p), l);
        k = residue;
        while (mod_pos(k, pl) != mod_pos(digits, pl))
            k += p - 1;
    }
    k = mod_pos(k, per);
    if (k < 2)
        k += per;
    return to_ll(k);
}

qq padic_reduce(qq const & x, long p, int n)
{
    if (x == 0)
        return 0;
    int v = val_p(x, p);
    int s = v < 0 ? -v : 0;
    zz ps = ipow(zz(p), s);
    qq r(rational_mod(x * ps, ipow(zz(p), n + s)), ps);
    r.canonicalize();
    return r;
}

padic_limit p_adic_zeta_limit(field_ptr const & F, long p, padic_weight const & k0, int n)
{
    if (n < 1)
        throw hmf_error("BadPrecision", "precision must be positive");
    if (k0.p != p)
        throw hmf_error("BadWeight", "weight is for a different prime");
    int g = F->degree();
    int shift = p == 2 ? g : 0;   // 2^g between zeta and the constant term
    padic_limit r;
    r.prec = n;
    for (int level = 0;; level++) {
        if (level > 40)
            throw hmf_error("NonConvergent", "no admissible representative pair found");
        long k1 = k0.representative(level);
        zz step = padic_weight::period(p, level);
        long k2 = to_ll(k1 + step);
        auto b = congruence_bound(F, p, k1, k2);
        if (!b.predicted || *b.predicted + shift < n)
            continue;
        r.k1 = k1;
        r.k2 = k2;
        r.level = level;
        break;
    }
    qq v1 = padic_reduce(p_adic_zeta(F, p, r.k1), p, n);
    qq v2 = padic_reduce(p_adic_zeta(F, p, r.k2), p, n);
    if (v1 != v2)
        throw hmf_error("NonConvergent", "representatives " + std::to_string(r.k1) + " and " + std::to_string(r.k2) +
                                             " disagree mod p^" + std::to_string(n));
    r.value = v1;
    r.valuation = v1 == 0 ? val_infinity : val_p(v1, p);
    return r;
}

} // namespace hmf
