#include "hmf/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace hmf {

std::string to_string(qq const & x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(zz const & x) { return x.get_str(); }

qq parse_rational(std::string_view s)
{
    std::string t(s);
    auto bad = [&]() { return hmf_error("ParseError", "not a rational: '" + t + "'"); };
    if (t.empty())
        throw bad();
    auto slash = t.find('/');
    auto check_int = [&](std::string const & u) {
        size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i == u.size())
            throw bad();
        for (; i < u.size(); i++)
            if (u[i] < '0' || u[i] > '9')
                throw bad();
    };
    std::string num = t.substr(0, slash);
    if (!num.empty() && num[0] == '+')
        num = num.substr(1);
    check_int(num);
    zz n(num, 10), d = 1;
    if (slash != std::string::npos) {
        std::string den = t.substr(slash + 1);
        check_int(den);
        d = zz(den, 10);
        if (d == 0)
            throw hmf_error("ParseError", "zero denominator in '" + t + "'");
    }
    qq r(n, d);
    r.canonicalize();
    return r;
}

int val_p(zz const & x, long p)
{
    if (x == 0)
        return val_infinity;
    zz y = abs(x);
    int v = 0;
    zz pp = p;
    while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
        y /= pp;
        v++;
    }
    return v;
}

int val_p(qq const & x, long p)
{
    if (x == 0)
        return val_infinity;
    return val_p(x.get_num(), p) - val_p(x.get_den(), p);
}

zz ipow(zz const & b, unsigned long e)
{
    zz r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

qq qpow(qq const & b, long e)
{
    if (e >= 0) {
        qq r(ipow(b.get_num(), e), ipow(b.get_den(), e));
        r.canonicalize();
        return r;
    }
    if (b == 0)
        throw hmf_error("DivisionByZero", "negative power of zero");
    qq r(ipow(b.get_den(), -e), ipow(b.get_num(), -e));
    r.canonicalize();
    return r;
}

zz lcm_den(qvec const & v)
{
    zz l = 1;
    for (auto const & x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

zz gcd_content(zvec const & v)
{
    zz g = 0;
    for (auto const & x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

long long to_ll(zz const & x)
{
    if (!x.fits_slong_p())
        throw hmf_error("Overflow", "integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

zz ceil_div(zz const & a, zz const & b)
{
    zz q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

zz floor_div(zz const & a, zz const & b)
{
    zz q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

zz mod_pos(zz const & a, zz const & m)
{
    zz r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

zz rational_mod(qq const & a, zz const & m)
{
    zz inv;
    zz d = a.get_den();
    if (!mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t())) {
        if (m == 1)
            return 0;
        throw hmf_error("NotIntegral", "denominator " + d.get_str() + " not invertible mod " + m.get_str());
    }
    return mod_pos(a.get_num() * inv, m);
}

zmat hnf(zmat a, int dim)
{
    int n = (int)a.size();
    int r = 0;
    for (int c = 0; c < dim; c++) {
        for (;;) {
            int best = -1;
            for (int i = r; i < n; i++)
                if (a[i][c] != 0 && (best < 0 || abs(a[i][c]) < abs(a[best][c])))
                    best = i;
            if (best < 0)
                throw hmf_error("NotFullRank", "lattice generators do not span a full-rank lattice");
            std::swap(a[r], a[best]);
            bool done = true;
            for (int i = r + 1; i < n; i++) {
                if (a[i][c] == 0)
                    continue;
                zz q = floor_div(a[i][c], a[r][c]);
                for (int j = c; j < dim; j++)
                    a[i][j] -= q * a[r][j];
                if (a[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a[r][c] < 0)
            for (int j = c; j < dim; j++)
                a[r][j] = -a[r][j];
        for (int i = 0; i < r; i++) {
            zz q = floor_div(a[i][c], a[r][c]);
            if (q != 0)
                for (int j = c; j < dim; j++)
                    a[i][j] -= q * a[r][j];
        }
        r++;
    }
    a.resize(dim);
    return a;
}

zz det(zmat m)
{
    qmat q = to_q(m);
    qq d = det(q);
    return d.get_num();
}

qq det(qmat m)
{
    int n = (int)m.size();
    qq d = 1;
    for (int c = 0; c < n; c++) {
        int piv = -1;
        for (int i = c; i < n; i++)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0)
            return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int i = c + 1; i < n; i++) {
            if (m[i][c] == 0)
                continue;
            qq f = m[i][c] / m[c][c];
            for (int j = c; j < n; j++)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

qmat inverse(qmat const & m)
{
    int n = (int)m.size();
    qmat a = m;
    qmat r(n, qvec(n, qq(0)));
    for (int i = 0; i < n; i++)
        r[i][i] = 1;
    for (int c = 0; c < n; c++) {
        int piv = -1;
        for (int i = c; i < n; i++)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0)
            throw hmf_error("Singular", "matrix is not invertible");
        std::swap(a[piv], a[c]);
        std::swap(r[piv], r[c]);
        qq inv = 1 / a[c][c];
        for (int j = 0; j < n; j++) {
            a[c][j] *= inv;
            r[c][j] *= inv;
        }
        for (int i = 0; i < n; i++) {
            if (i == c || a[i][c] == 0)
                continue;
            qq f = a[i][c];
            for (int j = 0; j < n; j++) {
                a[i][j] -= f * a[c][j];
                r[i][j] -= f * r[c][j];
            }
        }
    }
    return r;
}

qmat transpose(qmat const & m)
{
    if (m.empty())
        return {};
    qmat t(m[0].size(), qvec(m.size()));
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < m[0].size(); j++)
            t[j][i] = m[i][j];
    return t;
}

qmat to_q(zmat const & m)
{
    qmat q(m.size());
    for (size_t i = 0; i < m.size(); i++)
        for (auto const & x : m[i])
            q[i].emplace_back(x);
    return q;
}

qvec row_times(qvec const & x, qmat const & a)
{
    size_t n = a.empty() ? 0 : a[0].size();
    qvec r(n, qq(0));
    for (size_t i = 0; i < x.size(); i++) {
        if (x[i] == 0)
            continue;
        for (size_t j = 0; j < n; j++)
            r[j] += x[i] * a[i][j];
    }
    return r;
}

qvec solve_row(qmat const & a, qvec const & b)
{
    return row_times(b, inverse(a));
}

bool is_probable_prime(zz const & n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

/* Brent's variant of Pollard rho; returns a nontrivial factor or 0 */
zz rho(zz const & n, unsigned long budget, unsigned long seed)
{
    zz y = 2 + seed, c = 1 + seed, m = 128, g = 1, r = 1, q = 1, x, ys;
    unsigned long steps = 0;
    auto f = [&](zz const & v) { return mod_pos(v * v + c, n); };
    while (g == 1) {
        x = y;
        for (zz i = 0; i < r; i++)
            y = f(y);
        zz k = 0;
        while (k < r && g == 1) {
            ys = y;
            zz lim = r - k < m ? zz(r - k) : m;
            for (zz i = 0; i < lim; i++) {
                y = f(y);
                q = mod_pos(q * abs(x - y), n);
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            steps += lim.get_ui();
            if (steps > budget)
                return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            zz t = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? zz(0) : g;
}

void split(zz n, std::vector<std::pair<zz, int>> & out, zz & left, unsigned long budget)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        zz s = sqrt(n);
        split(s, out, left, budget);
        split(s, out, left, budget);
        return;
    }
    for (unsigned long seed = 0; seed < 4; seed++) {
        zz d = rho(n, budget, seed);
        if (d != 0) {
            split(d, out, left, budget);
            split(n / d, out, left, budget);
            return;
        }
    }
    left *= n;
}

} // namespace

factorization factor_integer(zz n, unsigned long rho_budget)
{
    factorization res;
    n = abs(n);
    if (n == 0)
        throw hmf_error("ZeroElement", "cannot factor 0");
    std::vector<std::pair<zz, int>> raw;
    for (long p = 2; p < 100000 && zz(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                e++;
            }
            raw.emplace_back(zz(p), e);
        }
    }
    if (n > 1)
        split(n, raw, res.unfactored, rho_budget);
    std::sort(raw.begin(), raw.end());
    for (auto const & [p, e] : raw) {
        if (!res.factors.empty() && res.factors.back().first == p)
            res.factors.back().second += e;
        else
            res.factors.emplace_back(p, e);
    }
    return res;
}

std::vector<std::pair<long, int>> factor_small(long n)
{
    std::vector<std::pair<long, int>> r;
    n = std::labs(n);
    for (long p = 2; p * p <= n; p++) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        r.emplace_back(p, e);
    }
    if (n > 1)
        r.emplace_back(n, 1);
    return r;
}

bool is_prime_small(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; d++)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long> primes_up_to(long n)
{
    std::vector<long> r;
    std::vector<bool> comp(n + 1, false);
    for (long i = 2; i <= n; i++) {
        if (comp[i])
            continue;
        r.push_back(i);
        for (long j = i * i; j <= n; j += i)
            comp[j] = true;
    }
    return r;
}

} // namespace hmf
