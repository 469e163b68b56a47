#include "hmf/congruences.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>

#include "hmf/zeta.hpp"

namespace hmf {

namespace {

int ilog2_exact(int x)
{
    int a = 0;
    while ((1 << a) < x)
        a++;
    return a;
}

int split_tame(int e, long p)
{
    while (e % p == 0)
        e /= (int)p;
    return e;
}

zz ceil_ratio(zz const & a, zz const & b) { return ceil_div(a, b); }

} // namespace

eprime_overrides preloaded_overrides(field_ptr const & F, long p)
{
    eprime_overrides o;
    // x^3 - 9x - 6: the completion at 3 is a non-Galois cubic, so the maximal
    // abelian subextension is Q_3 itself
    if (F->poly() == zvec{-6, -9, 0, 1} && p == 3)
        o["P1"] = 1;
    return o;
}

long l_of_n(int n) { return n <= 2 ? n - 1 : n - 2; }

int64_t norm_mod(field_ptr const & F, std::vector<int64_t> const & x, int64_t m)
{
    int g = F->degree();
    std::vector<std::vector<int64_t>> M(g, std::vector<int64_t>(g, 0));
    for (int i = 0; i < g; i++) {
        auto const & row = F->mult_row(i);
        for (int j = 0; j < g; j++) {
            if (x[j] == 0)
                continue;
            for (int k = 0; k < g; k++) {
                int64_t c = (int64_t)(mpz_fdiv_ui(row[j][k].get_mpz_t(), (unsigned long)m));
                M[i][k] = (int64_t)(((__int128)M[i][k] + (__int128)c * x[j]) % m);
            }
        }
    }
    // Laplace expansion; the degree is small
    std::function<int64_t(std::vector<int>, int)> det = [&](std::vector<int> cols, int r) -> int64_t {
        if (r == g)
            return 1 % m;
        __int128 s = 0;
        for (size_t c = 0; c < cols.size(); c++) {
            if (M[r][cols[c]] == 0)
                continue;
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + c);
            __int128 t = (__int128)M[r][cols[c]] * det(rest, r + 1) % m;
            s = (c % 2 ? s - t : s + t) % m;
        }
        return (int64_t)((s % m + m) % m);
    };
    std::vector<int> cols(g);
    std::iota(cols.begin(), cols.end(), 0);
    return det(cols, 0);
}

std::vector<long> norm_image(field_ptr const & F, long p, int n)
{
    int g = F->degree();
    zz pn = ipow(zz(p), n);
    if (!pn.fits_slong_p() || pn > 100000000)
        throw hmf_error("TooLarge", "p^n too large for the norm image");
    int64_t m = pn.get_si();
    auto const & primes = F->primes_above(p);
    std::vector<int64_t> gens;
    // residue representatives: coordinates in [0, p)
    zz cnt = ipow(zz(p), g);
    if (cnt > 5000000)
        throw hmf_error("TooLarge", "too many residue representatives");
    std::vector<int64_t> x(g);
    for (long idx = 0; idx < cnt.get_si(); idx++) {
        long t = idx;
        for (int i = 0; i < g; i++) {
            x[i] = t % p;
            t /= p;
        }
        int64_t N = norm_mod(F, x, m);
        if (N % p != 0)
            gens.push_back(N);
    }
    // 1 + J^j for the radical J, through each layer of the filtration
    frac_ideal J = F->unit_ideal();
    int emax = 0;
    for (auto const & P : primes) {
        J = J * P.ideal;
        emax = std::max(emax, P.e);
    }
    frac_ideal Jj = J;
    for (int j = 1; j <= n * emax; j++) {
        for (auto const & row : Jj.hnf_matrix()) {
            for (int i = 0; i < g; i++)
                x[i] = (int64_t)mpz_fdiv_ui(row[i].get_mpz_t(), (unsigned long)m);
            x[0] = (x[0] + 1) % m;
            gens.push_back(norm_mod(F, x, m));
        }
        Jj = Jj * J;
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::set<int64_t> H{1 % m};
    std::vector<int64_t> frontier{1 % m};
    while (!frontier.empty()) {
        std::vector<int64_t> next;
        for (auto h : frontier)
            for (auto gen : gens) {
                int64_t y = (int64_t)((__int128)h * gen % m);
                if (H.insert(y).second)
                    next.push_back(y);
            }
        frontier.swap(next);
    }
    return std::vector<long>(H.begin(), H.end());
}

zz group_exponent_mod(std::vector<long> const & H, long m)
{
    zz e = 1;
    for (long h : H) {
        long o = 1;
        __int128 y = h % m;
        while (y != 1 % m) {
            y = y * h % m;
            o++;
        }
        e = lcm(e, zz(o));
    }
    return e;
}

zz hbar_bruteforce(field_ptr const & F, long p, int n)
{
    long m = ipow(zz(p), n).get_si();
    return group_exponent_mod(norm_image(F, p, n), m);
}

local_ram_data local_abelian_data(field_ptr const & F, long p, eprime_overrides const & over)
{
    eprime_overrides all = preloaded_overrides(F, p);
    for (auto const & [k, v] : over)
        all[k] = v;
    local_ram_data D;
    D.p = p;
    D.e_t = INT_MAX;
    D.e_w = INT_MAX;
    for (auto const & P : F->primes_above(p)) {
        local_prime_data L;
        L.label = P.label;
        L.e = P.e;
        L.f = P.f;
        int d = P.e * P.f;
        auto it = all.find(P.label);
        if (it != all.end()) {
            if (it->second < 1 || P.e % it->second != 0)
                throw hmf_error("BadOverride", "e' must divide e_P for " + P.label);
            L.eprime = it->second;
            L.reason = "override";
        } else if (P.e == 1) {
            L.eprime = 1;
            L.reason = "unramified";
        } else if (d == 2) {
            L.eprime = P.e;
            L.reason = "quadratic completion";
        } else if (d == 3 && p != 3) {
            // totally tamely ramified cubic: Galois iff Q_p has the cube roots of unity
            L.eprime = (p - 1) % 3 == 0 ? 3 : 1;
            L.reason = (p - 1) % 3 == 0 ? "tame cubic, Galois" : "tame cubic, not Galois";
        } else {
            throw hmf_error("NeedsOverride", "cannot determine e'(" + P.label + "/" + std::to_string(p) +
                                                 "); supply an override");
        }
        L.e_tame = split_tame(L.eprime, p);
        L.e_wild = L.eprime / L.e_tame;
        D.e_t = std::min(D.e_t, L.e_tame);
        D.e_w = std::min(D.e_w, L.e_wild);
        D.primes.push_back(L);
    }
    if (p == 2) {
        D.e2 = D.e_w;
        int a = ilog2_exact(D.e2);
        int n0 = a + 3;
        auto H = norm_image(F, 2, n0);
        long m = 1L << n0;
        bool minus_one = std::binary_search(H.begin(), H.end(), m - 1);
        bool in_4 = std::all_of(H.begin(), H.end(), [](long h) { return h % 4 == 1; });
        D.eps_minus_one = minus_one ? 0 : 1;
        D.norm_type = minus_one ? 'A' : (in_4 ? 'B' : 'C');
    }
    return D;
}

int eps_for_level(local_ram_data const & D, int n)
{
    if (D.p != 2 || n <= 1)
        return 0;
    zz c = ceil_ratio(ipow(zz(2), l_of_n(n)), zz(D.e2));
    switch (D.norm_type) {
    case 'A':   // {+-1} x (1 + 4 e_2 Z_2): the sign survives when the 1-units die
        return c == 1 ? 1 : 0;
    case 'B':   // H inside 1 + 4Z_2 with index e_2 in Z_2^*
        return n >= 3 && ipow(zz(2), l_of_n(n)) >= D.e2 ? 1 : 0;
    default:    // topologically cyclic, generator = 3 mod 4
        return 1;
    }
}

zz hbar_exponent(field_ptr const & F, long p, int n, eprime_overrides const & over)
{
    if (n < 1)
        throw hmf_error("BadPrecision", "n must be >= 1");
    auto D = local_abelian_data(F, p, over);
    if (p != 2)
        return zz((p - 1) / D.e_t) * ceil_ratio(ipow(zz(p), n - 1), zz(D.e_w));
    return ipow(zz(2), eps_for_level(D, n)) * ceil_ratio(ipow(zz(2), l_of_n(n)), zz(D.e2));
}

integrality_report check_integrality(field_ptr const & F, long p, long k, eprime_overrides const & over)
{
    integrality_report r;
    r.p = p;
    r.k = k;
    int g = F->degree();
    r.a0 = zeta_at(F, k) / ipow(zz(2), g);
    int v = val_p(r.a0, p);
    r.n = v == val_infinity ? 0 : -v;
    if (r.n <= 0) {
        r.integral = true;
        r.modulus = 1;
        r.pass = true;
        r.detail = "2^-g zeta_L(1-k) is p-integral";
        return r;
    }
    auto D = local_abelian_data(F, p, over);
    if (p != 2)
        r.modulus = zz((p - 1) / D.e_t) * ceil_ratio(ipow(zz(p), r.n - 1), zz(D.e_w));
    else
        r.modulus = ceil_ratio(ipow(zz(2), l_of_n(r.n)), zz(D.e2));
    r.pass = mpz_divisible_p(zz(k).get_mpz_t(), r.modulus.get_mpz_t()) != 0;
    r.detail = "n = " + std::to_string(r.n) + ", need " + r.modulus.get_str() + " | " + std::to_string(k);
    return r;
}

congruence_report congruence_bound(field_ptr const & F, long p, long k, long kprime, eprime_overrides const & over)
{
    for (long x : {k, kprime})
        if (x < 2 || x % 2)
            throw hmf_error("BadWeight", "k and k' must be even and >= 2");
    congruence_report r;
    r.p = p;
    r.k = k;
    r.kprime = kprime;
    zz d = abs(zz(k - kprime));
    if (d == 0) {
        r.detail = "k = k'";
        return r;
    }
    if (d % (p - 1) != 0) {
        r.detail = "k and k' are not congruent mod p-1";
        return r;
    }
    r.m = val_p(zz(d / (p - 1)), p);
    auto D = local_abelian_data(F, p, over);
    long vkk = val_p(zz(zz(k) * kprime), p);
    if (p != 2 && k % ((p - 1) / D.e_t) != 0) {
        r.which_case = 1;
        r.predicted = r.m + 1;
    } else if (p != 2) {
        r.which_case = 2;
        r.predicted = r.m - vkk - 1 - 2 * val_p(zz(D.e_w), p);
    } else {
        r.which_case = 3;
        r.predicted = r.m - 2 - vkk - 2 * val_p(zz(D.e2), 2);
    }
    return r;
}

congruence_report verify_congruence(field_ptr const & F, long p, long k, long kprime, eprime_overrides const & over)
{
    congruence_report r = congruence_bound(F, p, k, kprime, over);
    int g = F->degree();
    zz two_g = ipow(zz(2), g);
    r.lhs = euler_factor_at_p(F, p, k) * zeta_at(F, k) / two_g;
    r.rhs = euler_factor_at_p(F, p, kprime) * zeta_at(F, kprime) / two_g;
    qq diff = r.lhs - r.rhs;
    r.actual = diff == 0 ? val_infinity : val_p(diff, p);
    r.pass = !r.predicted || r.actual >= *r.predicted;
    if (r.detail.empty())
        r.detail = "case " + std::to_string(r.which_case) + ", m = " + std::to_string(r.m);
    return r;
}

real_quadratic_p_report real_quadratic_p_check(long p, long r)
{
    if (p % 4 != 1 || !is_prime_small(p))
        throw hmf_error("BadArgument", "p must be a prime congruent to 1 mod 4");
    if (r < 1)
        throw hmf_error("BadArgument", "r must be positive");
    real_quadratic_p_report s;
    s.p = p;
    s.r = r;
    // Q(sqrt p) with its ring of integers Z[(1 + sqrt p)/2]
    auto K = number_field::make({zz(-(p - 1) / 4), zz(-1), zz(1)});
    s.k1 = r * (p - 1);
    s.k2 = r * (p - 1) / 2;
    s.expected = -1 - val_p(zz(r), p);
    s.val1 = val_p(zeta_at(K, s.k1), p);
    s.full_weight_holds = s.val1 == s.expected;
    s.half_weight_applicable = r % 2 == 1;
    if (s.half_weight_applicable) {
        s.val2 = val_p(zeta_at(K, s.k2), p);
        s.half_weight_holds = s.val2 == s.expected;
    }
    return s;
}

} // namespace hmf
