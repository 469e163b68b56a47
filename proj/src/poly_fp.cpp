#include "hmf/poly_fp.hpp"

#include <algorithm>
#include <random>

namespace hmf {

int64_t fp_ctx::pow(int64_t a, uint64_t e) const
{
    int64_t r = 1 % p;
    a = red(a);
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int64_t fp_ctx::inv(int64_t a) const
{
    a = red(a);
    if (a == 0)
        throw hmf_error("DivisionByZero", "inverse of 0 mod p");
    return pow(a, (uint64_t)(p - 2));
}

void trim(fp_poly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int deg(fp_poly const & f) { return (int)f.size() - 1; }

fp_poly fp_add(fp_ctx const & F, fp_poly const & a, fp_poly const & b)
{
    fp_poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

fp_poly fp_sub(fp_ctx const & F, fp_poly const & a, fp_poly const & b)
{
    fp_poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

fp_poly fp_mul(fp_ctx const & F, fp_poly const & a, fp_poly const & b)
{
    if (a.empty() || b.empty())
        return {};
    fp_poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

fp_poly fp_scale(fp_ctx const & F, fp_poly const & a, int64_t c)
{
    fp_poly r(a.size());
    for (size_t i = 0; i < a.size(); i++)
        r[i] = F.mul(a[i], F.red(c));
    trim(r);
    return r;
}

std::pair<fp_poly, fp_poly> fp_divmod(fp_ctx const & F, fp_poly const & a, fp_poly const & b)
{
    if (b.empty())
        throw hmf_error("DivisionByZero", "polynomial division by zero");
    fp_poly r = a;
    trim(r);
    if (r.size() < b.size())
        return {{}, r};
    fp_poly q(r.size() - b.size() + 1, 0);
    int64_t li = F.inv(b.back());
    for (int i = (int)r.size() - (int)b.size(); i >= 0; i--) {
        int64_t c = F.mul(r[i + b.size() - 1], li);
        q[i] = c;
        if (!c)
            continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = F.sub(r[i + j], F.mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

fp_poly fp_mod(fp_ctx const & F, fp_poly const & a, fp_poly const & b)
{
    return fp_divmod(F, a, b).second;
}

fp_poly fp_monic(fp_ctx const & F, fp_poly const & a)
{
    if (a.empty())
        return a;
    return fp_scale(F, a, F.inv(a.back()));
}

fp_poly fp_gcd(fp_ctx const & F, fp_poly a, fp_poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        fp_poly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

fp_poly fp_deriv(fp_ctx const & F, fp_poly const & a)
{
    if (a.size() <= 1)
        return {};
    fp_poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++)
        r[i - 1] = F.mul(a[i], F.red((int64_t)i));
    trim(r);
    return r;
}

fp_poly fp_powmod(fp_ctx const & F, fp_poly const & base, zz e, fp_poly const & m)
{
    fp_poly r{1};
    r = fp_mod(F, r, m);
    fp_poly b = fp_mod(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = fp_mod(F, fp_mul(F, r, b), m);
        e >>= 1;
        if (e > 0)
            b = fp_mod(F, fp_mul(F, b, b), m);
    }
    return r;
}

int64_t fp_eval(fp_ctx const & F, fp_poly const & a, int64_t x)
{
    int64_t r = 0;
    for (int i = (int)a.size() - 1; i >= 0; i--)
        r = F.add(F.mul(r, x), a[i]);
    return r;
}

fp_poly fp_from_z(fp_ctx const & F, zvec const & c)
{
    fp_poly r(c.size());
    zz p = F.p;
    for (size_t i = 0; i < c.size(); i++)
        r[i] = mod_pos(c[i], p).get_si();
    trim(r);
    return r;
}

bool fp_poly_less(fp_poly const & a, fp_poly const & b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (int i = (int)a.size() - 1; i >= 0; i--)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

namespace {

/* p-th root of a polynomial whose derivative vanishes */
fp_poly pth_root(fp_ctx const & F, fp_poly const & f)
{
    fp_poly r;
    for (size_t i = 0; i < f.size(); i += (size_t)F.p)
        r.push_back(f[i]);   // a^p = a on F_p
    trim(r);
    return r;
}

/* square-free factorization: list of (squarefree factor, multiplicity) */
void squarefree(fp_ctx const & F, fp_poly f, int mult, std::vector<std::pair<fp_poly, int>> & out)
{
    f = fp_monic(F, f);
    if (deg(f) <= 0)
        return;
    fp_poly d = fp_deriv(F, f);
    if (d.empty()) {
        squarefree(F, pth_root(F, f), mult * (int)F.p, out);
        return;
    }
    fp_poly c = fp_gcd(F, f, d);
    fp_poly w = fp_divmod(F, f, c).first;
    int i = 1;
    while (deg(w) > 0) {
        fp_poly y = fp_gcd(F, w, c);
        fp_poly z = fp_divmod(F, w, y).first;
        if (deg(z) > 0)
            out.emplace_back(fp_monic(F, z), i * mult);
        i++;
        w = y;
        c = fp_divmod(F, c, y).first;
    }
    if (deg(c) > 0)
        squarefree(F, pth_root(F, c), mult * (int)F.p, out);
}

void equal_degree(fp_ctx const & F, fp_poly const & f, int d, std::mt19937_64 & rng, std::vector<fp_poly> & out)
{
    int n = deg(f);
    if (n == d) {
        out.push_back(fp_monic(F, f));
        return;
    }
    std::uniform_int_distribution<int64_t> dist(0, F.p - 1);
    zz q = ipow(zz(F.p), d);
    for (;;) {
        fp_poly a(n);
        for (auto & c : a)
            c = dist(rng);
        trim(a);
        if (deg(a) <= 0)
            continue;
        fp_poly b;
        if (F.p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            fp_poly t = fp_mod(F, a, f), s = t;
            for (int i = 1; i < d; i++) {
                t = fp_mod(F, fp_mul(F, t, t), f);
                s = fp_add(F, s, t);
            }
            b = s;
        } else {
            b = fp_powmod(F, a, (q - 1) / 2, f);
            b = fp_sub(F, b, fp_poly{1});
        }
        fp_poly g = fp_gcd(F, f, b);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, fp_divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<fp_poly, int>> fp_factor(fp_ctx const & F, fp_poly const & f0)
{
    fp_poly f = f0;
    trim(f);
    if (f.empty())
        throw hmf_error("ZeroElement", "cannot factor the zero polynomial");
    std::vector<std::pair<fp_poly, int>> sqf, res;
    squarefree(F, f, 1, sqf);
    std::mt19937_64 rng(0x5eed);
    for (auto const & [g, m] : sqf) {
        fp_poly rest = g;
        fp_poly x{0, 1};
        fp_poly h = x;
        for (int d = 1; 2 * d <= deg(rest); d++) {
            h = fp_powmod(F, h, zz(F.p), rest);
            fp_poly part = fp_gcd(F, rest, fp_sub(F, h, x));
            if (deg(part) > 0) {
                std::vector<fp_poly> pieces;
                equal_degree(F, part, d, rng, pieces);
                for (auto & pc : pieces)
                    res.emplace_back(pc, m);
                rest = fp_divmod(F, rest, part).first;
                h = fp_mod(F, h, rest);
            }
        }
        if (deg(rest) > 0)
            res.emplace_back(fp_monic(F, rest), m);
    }
    std::sort(res.begin(), res.end(), [](auto const & a, auto const & b) {
        if (a.first != b.first)
            return fp_poly_less(a.first, b.first);
        return a.second < b.second;
    });
    // merge duplicates that came from different squarefree layers
    std::vector<std::pair<fp_poly, int>> merged;
    for (auto & pr : res) {
        if (!merged.empty() && merged.back().first == pr.first)
            merged.back().second += pr.second;
        else
            merged.push_back(pr);
    }
    return merged;
}

bool fp_is_irreducible(fp_ctx const & F, fp_poly const & f)
{
    auto fac = fp_factor(F, f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace hmf
