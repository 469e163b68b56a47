#include "hmf/field.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hmf {

namespace {

bool all_zero(qmat const & rows)
{
    for (auto const & r : rows)
        for (auto const & x : r)
            if (x != 0)
                return false;
    return true;
}

/* (den, H) for the lattice spanned by rational rows */
std::pair<zz, zmat> lattice_hnf(qmat const & rows, int g)
{
    zz den = 1;
    for (auto const & r : rows)
        den = lcm(den, lcm_den(r));
    zmat z;
    for (auto const & r : rows) {
        zvec v(g);
        for (int i = 0; i < g; i++)
            v[i] = qq(r[i] * den).get_num();
        z.push_back(v);
    }
    zmat H = hnf(z, g);
    zz c = den;
    for (auto const & r : H)
        for (auto const & x : r)
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c != 1) {
        den /= c;
        for (auto & r : H)
            for (auto & x : r)
                x /= c;
    }
    return {den, H};
}

std::vector<std::vector<long double>> ld_inverse(std::vector<std::vector<long double>> a)
{
    int n = (int)a.size();
    std::vector<std::vector<long double>> r(n, std::vector<long double>(n, 0.0L));
    for (int i = 0; i < n; i++)
        r[i][i] = 1;
    for (int c = 0; c < n; c++) {
        int piv = c;
        for (int i = c + 1; i < n; i++)
            if (std::fabs(a[i][c]) > std::fabs(a[piv][c]))
                piv = i;
        std::swap(a[piv], a[c]);
        std::swap(r[piv], r[c]);
        long double d = a[c][c];
        for (int j = 0; j < n; j++) {
            a[c][j] /= d;
            r[c][j] /= d;
        }
        for (int i = 0; i < n; i++) {
            if (i == c)
                continue;
            long double f = a[i][c];
            if (f == 0)
                continue;
            for (int j = 0; j < n; j++) {
                a[i][j] -= f * a[c][j];
                r[i][j] -= f * r[c][j];
            }
        }
    }
    return r;
}

} // namespace

frac_ideal::frac_ideal(field_ptr F, qmat const & rows) : F_(std::move(F))
{
    if (rows.empty() || all_zero(rows))
        throw hmf_error("ZeroIdeal", "ideal generators are all zero");
    auto [d, H] = lattice_hnf(rows, F_->degree());
    den_ = d;
    H_ = H;
}

frac_ideal frac_ideal::unit(field_ptr F)
{
    qmat I(F->degree(), qvec(F->degree(), qq(0)));
    for (int i = 0; i < F->degree(); i++)
        I[i][i] = 1;
    return frac_ideal(F, I);
}

frac_ideal frac_ideal::principal(field_ptr F, elem const & a)
{
    if (F->is_zero(a))
        throw hmf_error("ZeroIdeal", "principal ideal of zero");
    return frac_ideal(F, F->mul_matrix(a));
}

frac_ideal frac_ideal::generated(field_ptr F, std::vector<elem> const & gens)
{
    qmat rows;
    for (auto const & a : gens) {
        auto m = F->mul_matrix(a);
        rows.insert(rows.end(), m.begin(), m.end());
    }
    return frac_ideal(F, rows);
}

qmat frac_ideal::basis() const
{
    qmat b = to_q(H_);
    for (auto & r : b)
        for (auto & x : r)
            x /= den_;
    return b;
}

qq frac_ideal::norm() const
{
    zz d = 1;
    for (size_t i = 0; i < H_.size(); i++)
        d *= H_[i][i];
    qq n(d, ipow(den_, H_.size()));
    n.canonicalize();
    return n;
}

std::optional<zvec> frac_ideal::coords(elem const & a) const
{
    int g = (int)H_.size();
    zvec y(g);
    qvec t(g);
    for (int i = 0; i < g; i++)
        t[i] = a[i] * den_;
    for (int c = 0; c < g; c++) {
        qq s = t[c];
        for (int i = 0; i < c; i++)
            s -= y[i] * H_[i][c];
        s /= H_[c][c];
        if (s.get_den() != 1)
            return std::nullopt;
        y[c] = s.get_num();
    }
    return y;
}

bool frac_ideal::contains(elem const & a) const { return coords(a).has_value(); }

frac_ideal frac_ideal::operator*(frac_ideal const & J) const
{
    qmat a = basis(), b = J.basis();
    qmat rows;
    for (auto const & x : a)
        for (auto const & y : b)
            rows.push_back(F_->mul(x, y));
    return frac_ideal(F_, rows);
}

frac_ideal frac_ideal::operator*(elem const & a) const
{
    if (F_->is_zero(a))
        throw hmf_error("ZeroIdeal", "ideal times zero");
    qmat rows;
    for (auto const & x : basis())
        rows.push_back(F_->mul(x, a));
    return frac_ideal(F_, rows);
}

frac_ideal frac_ideal::inverse() const
{
    // x lies in the inverse iff x * b is integral for every basis element b,
    // i.e. x pairs integrally with every column of the stacked matrices
    int g = F_->degree();
    qmat cols;
    for (auto const & b : basis()) {
        qmat m = F_->mul_matrix(b);
        for (int c = 0; c < g; c++) {
            qvec col(g);
            for (int i = 0; i < g; i++)
                col[i] = m[i][c];
            cols.push_back(col);
        }
    }
    auto [d, H] = lattice_hnf(cols, g);
    qmat C = to_q(H);
    for (auto & r : C)
        for (auto & x : r)
            x /= d;
    return frac_ideal(F_, hmf::inverse(transpose(C)));
}

frac_ideal frac_ideal::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    frac_ideal r = unit(F_), b = *this;
    while (n) {
        if (n & 1)
            r = r * b;
        n >>= 1;
        if (n)
            b = b * b;
    }
    return r;
}

std::vector<elem> enumerate_totally_positive(frac_ideal const & I, qq const & bound)
{
    std::vector<elem> out;
    if (bound <= 0)
        return out;
    field_ptr const & F = I.field();
    int g = F->degree();
    qmat b = I.basis();
    std::vector<std::vector<long double>> G(g, std::vector<long double>(g, 0.0L));
    std::vector<qq> trb(g);
    for (int k = 0; k < g; k++) {
        auto e = F->embed(b[k]);
        for (int j = 0; j < g; j++)
            G[k][j] = e[j];
        trb[k] = F->trace(b[k]);
    }
    auto Gi = ld_inverse(G);
    long double T = (long double)bound.get_d();
    const long double tol = 1e-9L;
    std::vector<long> zlo(g), zhi(g);
    for (int k = 0; k < g; k++) {
        long double lo = 0, hi = 0;
        for (int j = 0; j < g; j++) {
            long double v = T * Gi[j][k];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        long double w = tol * (1 + std::fabs(lo) + std::fabs(hi));
        zlo[k] = (long)std::floor(lo - w);
        zhi[k] = (long)std::ceil(hi + w);
    }
    long double gsum = 0;
    for (int j = 0; j < g; j++)
        gsum += G[g - 1][j];

    std::vector<long> z(g);
    std::vector<long double> s(g);
    auto visit_last = [&]() {
        // interval for the last coordinate from positivity and the trace bound
        long double lo = (long double)zlo[g - 1], hi = (long double)zhi[g - 1];
        long double ssum = 0;
        for (int j = 0; j < g; j++) {
            ssum += s[j];
            long double c = G[g - 1][j];
            long double scale = tol * (1 + std::fabs(s[j]) + std::fabs(c) * std::max(std::fabs(lo), std::fabs(hi)));
            if (c > 0)
                lo = std::max(lo, (-s[j] - scale) / c);
            else if (c < 0)
                hi = std::min(hi, (-s[j] - scale) / c);
            else if (s[j] < -scale)
                return;
        }
        long double scale = tol * (1 + T + std::fabs(ssum));
        if (gsum > 0)
            hi = std::min(hi, (T - ssum + scale) / gsum);
        else if (gsum < 0)
            lo = std::max(lo, (T - ssum + scale) / gsum);
        long a = (long)std::ceil(lo - tol), c = (long)std::floor(hi + tol);
        for (long t = std::max(a, zlo[g - 1]); t <= std::min(c, zhi[g - 1]); t++) {
            z[g - 1] = t;
            qq tr = 0;
            for (int k = 0; k < g; k++)
                tr += trb[k] * z[k];
            if (tr > bound || tr <= 0)
                continue;
            bool pos = true, sure = true;
            for (int j = 0; j < g; j++) {
                long double v = s[j] + t * G[g - 1][j];
                long double m = 1e-12L * (1 + std::fabs(s[j]) + std::fabs(t * G[g - 1][j]));
                if (v < -m) {
                    pos = false;
                    break;
                }
                if (v <= m)
                    sure = false;
            }
            if (!pos)
                continue;
            elem nu(g, qq(0));
            for (int k = 0; k < g; k++)
                if (z[k])
                    for (int i = 0; i < g; i++)
                        nu[i] += b[k][i] * z[k];
            if (F->is_zero(nu))
                continue;
            if (!sure && !F->is_totally_positive(nu))
                continue;
            out.push_back(nu);
        }
    };
    // odometer over the first g-1 coordinates
    std::function<void(int)> rec = [&](int k) {
        if (k == g - 1) {
            visit_last();
            return;
        }
        for (long v = zlo[k]; v <= zhi[k]; v++) {
            z[k] = v;
            for (int j = 0; j < g; j++)
                s[j] += v * G[k][j];
            rec(k + 1);
            for (int j = 0; j < g; j++)
                s[j] -= v * G[k][j];
        }
    };
    std::fill(s.begin(), s.end(), 0.0L);
    rec(0);
    std::vector<std::pair<qq, elem>> keyed;
    for (auto & nu : out)
        keyed.emplace_back(F->trace(nu), std::move(nu));
    std::sort(keyed.begin(), keyed.end(), [](auto const & x, auto const & y) {
        if (x.first != y.first)
            return x.first < y.first;
        return x.second < y.second;
    });
    out.clear();
    for (auto & kv : keyed)
        out.push_back(std::move(kv.second));
    return out;
}

std::vector<ideal_factor> factor_integral_ideal(frac_ideal const & I, zz const & norm_bound)
{
    if (!I.is_integral())
        throw hmf_error("NotIntegral", "factor_integral_ideal needs an integral ideal");
    field_ptr const & F = I.field();
    zz N = I.norm().get_num();
    if (N > norm_bound)
        throw hmf_error("NormTooLarge", "ideal norm " + N.get_str() + " exceeds the factoring bound");
    std::vector<ideal_factor> out;
    zz check = 1;
    for (auto const & [p, e] : factor_small(N.get_si())) {
        (void)e;
        for (auto const & P : F->primes_above(p)) {
            int v = F->valuation(P, I);
            if (v > 0) {
                out.push_back({P, v});
                check *= ipow(P.norm(), v);
            }
        }
    }
    if (check != N)
        throw hmf_error("Internal", "ideal factorization does not multiply back to the norm");
    return out;
}

} // namespace hmf
