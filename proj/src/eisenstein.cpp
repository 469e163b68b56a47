#include "hmf/eisenstein.hpp"

#include <algorithm>

namespace hmf {

namespace {

std::vector<int64_t> memo_key(elem const & nu, frac_ideal const & M)
{
    std::vector<int64_t> k;
    k.push_back(to_ll(M.den()));
    for (auto const & row : M.hnf_matrix())
        for (auto const & x : row)
            k.push_back(to_ll(x));
    for (auto const & c : nu) {
        k.push_back(to_ll(c.get_num()));
        k.push_back(to_ll(c.get_den()));
    }
    return k;
}

qq sum_of_powers(std::vector<std::pair<zz, int>> const & fac, long k)
{
    qq s = 1;
    for (auto const & [N, a] : fac) {
        zz t = 0, x = 1, Nk = ipow(N, k - 1);
        for (int i = 0; i <= a; i++) {
            t += x;
            x *= Nk;
        }
        s *= t;
    }
    return s;
}

void check_member(field_ptr const & F, elem const & nu, frac_ideal const & M)
{
    if (!M.contains(nu))
        throw hmf_error("NotInLattice", to_string(F, nu) + " is not in the cusp lattice");
    if (F->is_zero(nu) || !F->is_totally_positive(nu))
        throw hmf_error("NotTotallyPositive", to_string(F, nu) + " is not totally positive");
}

} // namespace

std::vector<std::pair<zz, int>> divisor_data(field_ptr const & F, elem const & nu, frac_ideal const & M)
{
    auto key = memo_key(nu, M);
    {
        std::lock_guard<std::mutex> lk(F->cache_mu);
        auto it = F->divisor_memo.find(key);
        if (it != F->divisor_memo.end())
            return it->second;
    }
    qq Nq = abs(F->norm(nu)) / M.norm();
    if (Nq.get_den() != 1)
        throw hmf_error("NotInLattice", to_string(F, nu) + " is not in the cusp lattice");
    zz N = Nq.get_num();
    auto fac = factor_integer(N);
    if (fac.unfactored != 1)
        throw hmf_error("NormTooLarge", "could not factor " + N.get_str());
    std::vector<std::pair<zz, int>> out;
    zz check = 1;
    for (auto const & [p, e] : fac.factors) {
        (void)e;
        if (!p.fits_slong_p())
            throw hmf_error("NormTooLarge", "prime factor " + p.get_str() + " too large");
        for (auto const & P : F->primes_above(p.get_si())) {
            int v = F->valuation(P, nu) - F->valuation(P, M);
            if (v < 0)
                throw hmf_error("NotInLattice", to_string(F, nu) + " is not in the cusp lattice");
            if (v > 0) {
                out.emplace_back(P.norm(), v);
                check *= ipow(P.norm(), v);
            }
        }
    }
    if (check != N)
        throw hmf_error("Internal", "divisor factorization does not multiply back to the norm");
    std::lock_guard<std::mutex> lk(F->cache_mu);
    F->divisor_memo.emplace(key, out);
    return out;
}

qq divisor_power_sum(field_ptr const & F, elem const & nu, frac_ideal const & M, long k)
{
    check_member(F, nu, M);
    return sum_of_powers(divisor_data(F, nu, M), k);
}

qq divisor_power_sum_prime_to(field_ptr const & F, elem const & nu, frac_ideal const & M, long k, long p)
{
    check_member(F, nu, M);
    auto fac = divisor_data(F, nu, M);
    // walk every divisor D of I = (nu)M^-1 through its exponent vector
    std::vector<int> t(fac.size(), 0);
    zz s = 0;
    for (;;) {
        zz N = 1;
        for (size_t i = 0; i < fac.size(); i++)
            N *= ipow(fac[i].first, fac[i].second - t[i]);
        if (!mpz_divisible_ui_p(N.get_mpz_t(), (unsigned long)p))
            s += ipow(N, k - 1);
        size_t i = 0;
        while (i < t.size() && t[i] == fac[i].second)
            t[i++] = 0;
        if (i == t.size())
            break;
        t[i]++;
    }
    return s;
}

namespace {

void check_k(long k)
{
    if (k < 2 || k % 2)
        throw hmf_error("BadWeight", "Eisenstein series need even k >= 2");
}

qq nm_a_power(cusp const & C, long k) { return qpow(C.A.norm(), k - 1); }

} // namespace

qexpansion eisenstein_qexp(field_ptr const & F, long k, cusp const & C, qq const & T)
{
    check_k(k);
    int g = F->degree();
    qexpansion f(C, coeff_ring::rationals(), T);
    qq c = nm_a_power(C, k);
    f.set_a0({c * zeta_at(F, k) / ipow(zz(2), g), {}});
    for (auto const & nu : enumerate_totally_positive(C.M, T))
        f.set_unchecked(nu, {c * divisor_power_sum(F, nu, C.M, k), {}});
    f.uweight = parallel_weight(g, k - 1);
    f.meta["name"] = "E_" + std::to_string(k);
    return f;
}

qexpansion eisenstein_dagger(field_ptr const & F, long k, long p, cusp const & C, qq const & T, dagger_route route)
{
    check_k(k);
    int g = F->degree();
    qq c = nm_a_power(C, k);
    auto const & primes = F->primes_above(p);
    auto pts = enumerate_totally_positive(C.M, T);
    qq a0 = c * euler_factor_at_p(F, p, k) * zeta_at(F, k) / ipow(zz(2), g);

    auto make = [&]() {
        qexpansion f(C, coeff_ring::rationals(), T);
        f.set_a0({a0, {}});
        f.uweight = parallel_weight(g, k - 1);
        f.meta["name"] = "E_" + std::to_string(k) + "^dagger";
        f.meta["p"] = std::to_string(p);
        return f;
    };
    auto by_filter = [&]() {
        qexpansion f = make();
        for (auto const & nu : pts)
            f.set_unchecked(nu, {c * divisor_power_sum_prime_to(F, nu, C.M, k, p), {}});
        return f;
    };
    auto by_subsets = [&]() {
        // sum over subsets S of the primes above p of (-1)^|S| pi_{D_S}^* E_k
        qexpansion f = make();
        size_t z = primes.size();
        std::vector<frac_ideal> MD;
        std::vector<qq> sign_norm;
        for (unsigned long S = 0; S < (1ul << z); S++) {
            frac_ideal D = F->unit_ideal();
            int bits = 0;
            for (size_t i = 0; i < z; i++)
                if (S >> i & 1) {
                    D = D * primes[i].ideal;
                    bits++;
                }
            MD.push_back(C.M * D);
            sign_norm.push_back(qpow(D.norm(), k - 1) * (bits % 2 ? -1 : 1));
        }
        for (auto const & nu : pts) {
            qq s = 0;
            for (size_t S = 0; S < MD.size(); S++)
                if (MD[S].contains(nu))
                    s += sign_norm[S] * divisor_power_sum(F, nu, MD[S], k);
            f.set_unchecked(nu, {c * s, {}});
        }
        return f;
    };
    if (route == dagger_route::filter)
        return by_filter();
    if (route == dagger_route::inclusion_exclusion)
        return by_subsets();
    qexpansion a = by_filter(), b = by_subsets();
    if (!equal(a, b))
        throw hmf_error("Internal", "the two E-dagger constructions disagree");
    return a;
}

qexpansion eisenstein_pstar(field_ptr const & F, long p, padic_weight const & k0, cusp const & C, qq const & T, int n)
{
    if (!(C.A == F->unit_ideal()))
        throw hmf_error("Unsupported", "E* is generated at cusps with A = O_L");
    int g = F->degree();
    coeff_ring R = coeff_ring::padic(p, n);
    qexpansion f(C, R, T);
    auto lim = p_adic_zeta_limit(F, p, k0, n);
    f.set_a0(s_from_rational(R, lim.value / ipow(zz(2), g)));
    // Nm' terms are units mod p^n, so their (k-1)-th powers only depend on
    // k-1 modulo the exponent of (Z/p^n)^*, which divides period(p, n-1)
    int l = n - 1;
    zz per = padic_weight::period(p, l);
    zz e1 = k0.representative(l) - 1, e2 = e1 + per;
    zz pn = ipow(zz(p), n);
    for (auto const & nu : enumerate_totally_positive(C.M, T)) {
        auto fac = divisor_data(F, nu, C.M);
        std::vector<int> t(fac.size(), 0);
        zz s1 = 0, s2 = 0;
        for (;;) {
            zz N = 1;
            for (size_t i = 0; i < fac.size(); i++)
                N *= ipow(fac[i].first, fac[i].second - t[i]);
            if (!mpz_divisible_ui_p(N.get_mpz_t(), (unsigned long)p)) {
                zz r1, r2;
                mpz_powm(r1.get_mpz_t(), N.get_mpz_t(), e1.get_mpz_t(), pn.get_mpz_t());
                mpz_powm(r2.get_mpz_t(), N.get_mpz_t(), e2.get_mpz_t(), pn.get_mpz_t());
                s1 += r1;
                s2 += r2;
            }
            size_t i = 0;
            while (i < t.size() && t[i] == fac[i].second)
                t[i++] = 0;
            if (i == t.size())
                break;
            t[i]++;
        }
        if (mod_pos(s1, pn) != mod_pos(s2, pn))
            throw hmf_error("NonConvergent", "coefficient depends on the exponent representative");
        f.set_unchecked(nu, s_from_rational(R, qq(s1)));
    }
    f.meta["name"] = "E*";
    f.meta["p"] = std::to_string(p);
    f.meta["k1"] = std::to_string(lim.k1);
    return f;
}

} // namespace hmf
