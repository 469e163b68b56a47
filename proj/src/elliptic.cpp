#include "hmf/elliptic.hpp"

#include <mutex>

namespace hmf {

namespace {

std::mutex bern_mu;
std::vector<qq> bern_cache{qq(1)};

} // namespace

qq bernoulli(long n)
{
    if (n < 0)
        throw hmf_error("BadArgument", "Bernoulli index must be nonnegative");
    std::lock_guard<std::mutex> lk(bern_mu);
    while ((long)bern_cache.size() <= n) {
        long m = (long)bern_cache.size();
        if (m > 1 && m % 2 == 1) {
            bern_cache.push_back(0);
            continue;
        }
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        qq s = 0;
        zz c = 1;   // C(m+1, k)
        for (long k = 0; k < m; k++) {
            s += c * bern_cache[k];
            c = c * (m + 1 - k) / (k + 1);
        }
        bern_cache.push_back(-s / (m + 1));
    }
    return bern_cache[n];
}

zz sigma_power(long n, long r)
{
    zz s = 0;
    for (long d = 1; d * d <= n; d++)
        if (n % d == 0) {
            s += ipow(zz(d), r);
            if (d * d != n)
                s += ipow(zz(n / d), r);
        }
    return s;
}

elliptic_qexp eisenstein_level1(long w, int N)
{
    if (w < 4 || w % 2)
        throw hmf_error("BadWeight", "level one Eisenstein series need even weight >= 4");
    elliptic_qexp E{w, std::vector<qq>(N, qq(0))};
    qq c = -2 * w / bernoulli(w);
    if (N > 0)
        E.a[0] = 1;
    for (int n = 1; n < N; n++)
        E.a[n] = c * sigma_power(n, w - 1);
    return E;
}

elliptic_qexp series_mul(elliptic_qexp const & f, elliptic_qexp const & g)
{
    int N = std::min(f.precision(), g.precision());
    elliptic_qexp h{f.w + g.w, std::vector<qq>(N, qq(0))};
    for (int i = 0; i < N; i++) {
        if (f.a[i] == 0)
            continue;
        for (int j = 0; i + j < N; j++)
            if (g.a[j] != 0)
                h.a[i + j] += f.a[i] * g.a[j];
    }
    return h;
}

elliptic_qexp delta_qexp(int N)
{
    auto E4 = eisenstein_level1(4, N), E6 = eisenstein_level1(6, N);
    auto a = series_mul(series_mul(E4, E4), E4), b = series_mul(E6, E6);
    elliptic_qexp D{12, std::vector<qq>(N)};
    for (int n = 0; n < N; n++)
        D.a[n] = (a.a[n] - b.a[n]) / 1728;
    return D;
}

long dim_M(long w)
{
    if (w < 0 || w % 2)
        throw hmf_error("BadWeight", "weight must be even and nonnegative");
    if (w % 12 == 2)
        return w / 12;
    return w / 12 + 1;
}

namespace {

elliptic_qexp power(elliptic_qexp const & f, long e, int N)
{
    elliptic_qexp r{0, std::vector<qq>(N, qq(0))};
    r.a[0] = 1;
    elliptic_qexp b = f;
    b.a.resize(N);
    while (e) {
        if (e & 1)
            r = series_mul(r, b);
        e >>= 1;
        if (e)
            b = series_mul(b, b);
    }
    return r;
}

} // namespace

std::vector<elliptic_qexp> miller_basis(long w, int N)
{
    long d = dim_M(w);
    if (N <= d)
        throw hmf_error("BadPrecision", "precision must exceed the dimension");
    std::vector<elliptic_qexp> g;
    if (d == 0)
        return g;
    auto E4 = eisenstein_level1(4, N), E6 = eisenstein_level1(6, N), D = delta_qexp(N);
    for (long j = 0; j < d; j++) {
        long r = w - 12 * j;
        long b = r % 4 == 0 ? 0 : 1;
        long a = (r - 6 * b) / 4;
        auto m = series_mul(series_mul(power(D, j, N), power(E4, a, N)), power(E6, b, N));
        m.w = w;
        g.push_back(m);
    }
    // g_j = q^j + ..., clear the entries above the diagonal from the bottom up
    for (long j = d - 1; j >= 0; j--)
        for (long i = 0; i < j; i++) {
            qq c = g[i].a[j];
            if (c == 0)
                continue;
            for (int n = 0; n < N; n++)
                g[i].a[n] -= c * g[j].a[n];
        }
    return g;
}

qq complete_constant_term(long w, std::vector<qq> const & tail)
{
    long d = dim_M(w);
    int N = (int)tail.size();
    auto at = [&](int n) { return tail[n - 1]; };
    if (d == 0) {
        for (auto const & x : tail)
            if (x != 0)
                throw hmf_error("InconsistentTail", "M_" + std::to_string(w) + " is zero");
        return 0;
    }
    if (N < d)
        throw hmf_error("InconsistentTail", "tail shorter than the dimension");
    auto f = miller_basis(w, N + 1);
    auto rest = [&](int n) {
        qq s = 0;
        for (long i = 1; i < d; i++)
            s += at((int)i) * f[i].a[n];
        return s;
    };
    int piv = -1;
    for (int n = (int)d; n <= N; n++)
        if (f[0].a[n] != 0) {
            piv = n;
            break;
        }
    if (piv < 0)
        throw hmf_error("InconsistentTail", "tail too short to determine the constant term");
    qq a0 = (at(piv) - rest(piv)) / f[0].a[piv];
    for (int n = (int)d; n <= N; n++)
        if (a0 * f[0].a[n] + rest(n) != at(n))
            throw hmf_error("InconsistentTail", "coefficient " + std::to_string(n) + " is not in the span of M_" + std::to_string(w));
    return a0;
}

} // namespace hmf
