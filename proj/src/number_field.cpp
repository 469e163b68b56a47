#include "hmf/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hmf {

namespace {

using qpoly = qvec;   // low degree first

void qtrim(qpoly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

qpoly qrem(qpoly a, qpoly const & b)
{
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        qq c = a.back() / b.back();
        size_t s = a.size() - b.size();
        for (size_t j = 0; j < b.size(); j++)
            a[s + j] -= c * b[j];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

qpoly qderiv(qpoly const & a)
{
    qpoly r;
    for (size_t i = 1; i < a.size(); i++)
        r.push_back(a[i] * (long)i);
    qtrim(r);
    return r;
}

qq qeval(qpoly const & a, qq const & x)
{
    qq r = 0;
    for (int i = (int)a.size() - 1; i >= 0; i--)
        r = r * x + a[i];
    return r;
}

int sgn(qq const & x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<qpoly> sturm_chain(qpoly const & f)
{
    std::vector<qpoly> s{f, qderiv(f)};
    while (!s.back().empty()) {
        qpoly r = qrem(s[s.size() - 2], s.back());
        for (auto & c : r)
            c = -c;
        if (r.empty())
            break;
        s.push_back(r);
    }
    return s;
}

int variations(std::vector<qpoly> const & s, qq const & x)
{
    int v = 0, last = 0;
    for (auto const & p : s) {
        int t = sgn(qeval(p, x));
        if (t == 0)
            continue;
        if (last != 0 && t != last)
            v++;
        last = t;
    }
    return v;
}

long double to_ld(qq const & x)
{
    // 80 bits after the binary point is plenty for long double
    zz scaled = floor_div(x.get_num() * ipow(zz(2), 80), x.get_den());
    long double v = std::strtold(scaled.get_str().c_str(), nullptr);
    return std::ldexp(v, -80);
}

/* interval image of a polynomial over [lo, hi] */
std::pair<qq, qq> interval_eval(qpoly const & a, qq const & lo, qq const & hi)
{
    qq rl = 0, rh = 0;
    for (int i = (int)a.size() - 1; i >= 0; i--) {
        qq p1 = rl * lo, p2 = rl * hi, p3 = rh * lo, p4 = rh * hi;
        rl = std::min({p1, p2, p3, p4}) + a[i];
        rh = std::max({p1, p2, p3, p4}) + a[i];
    }
    return {rl, rh};
}

} // namespace

field_ptr number_field::make(zvec poly, std::optional<qmat> basis)
{
    std::shared_ptr<number_field> F(new number_field());
    F->init(std::move(poly), std::move(basis));
    return F;
}

void number_field::init(zvec poly, std::optional<qmat> basis)
{
    if (poly.size() < 2 || poly.back() != 1)
        throw hmf_error("NotMonic", "defining polynomial must be monic of positive degree");
    poly_ = poly;
    g_ = (int)poly.size() - 1;
    qpoly f(poly.begin(), poly.end());

    if (g_ == 1) {
        qq r = -f[0];
        roots_.push_back({r, r});
    } else {
        qpoly d = qderiv(f);
        // gcd(f, f') must be constant
        qpoly a = f, b = d;
        while (!b.empty()) {
            qpoly r = qrem(a, b);
            a = b;
            b = r;
        }
        if (a.size() > 1)
            throw hmf_error("NotIrreducible", "defining polynomial has a repeated factor");
        auto chain = sturm_chain(f);
        zz R = 1;
        for (auto const & c : poly)
            if (abs(c) + 1 > R)
                R = abs(c) + 1;
        qq lo0 = -qq(R), hi0 = qq(R);
        if (variations(chain, lo0) - variations(chain, hi0) != g_)
            throw hmf_error("NotTotallyReal", "defining polynomial has non-real roots");
        std::vector<std::pair<qq, qq>> todo{{lo0, hi0}};
        while (!todo.empty()) {
            auto [lo, hi] = todo.back();
            todo.pop_back();
            int n = variations(chain, lo) - variations(chain, hi);
            if (n == 0)
                continue;
            if (n == 1) {
                roots_.push_back({lo, hi});
                continue;
            }
            qq mid = (lo + hi) / 2;
            if (qeval(f, mid) == 0)
                throw hmf_error("NotIrreducible", "defining polynomial has a rational root");
            todo.push_back({lo, mid});
            todo.push_back({mid, hi});
        }
        std::sort(roots_.begin(), roots_.end(), [](auto const & x, auto const & y) { return x.lo < y.lo; });
        for (auto & iv : roots_) {
            int slo = sgn(qeval(f, iv.lo));
            qq width = iv.hi - iv.lo;
            while (width > qq(1, 1) / ipow(zz(2), 72)) {
                qq mid = (iv.lo + iv.hi) / 2;
                int sm = sgn(qeval(f, mid));
                if (sm == 0)
                    throw hmf_error("NotIrreducible", "defining polynomial has a rational root");
                if (sm == slo)
                    iv.lo = mid;
                else
                    iv.hi = mid;
                width = iv.hi - iv.lo;
            }
        }
    }
    for (auto const & iv : roots_)
        roots_ld_.push_back(to_ld((iv.lo + iv.hi) / 2));

    if (g_ >= 2) {
        // a monic factor over Q has integer coefficients, which we recover by
        // rounding the product over a subset of roots and then test exactly
        for (int d = 1; 2 * d <= g_; d++) {
            std::vector<int> sel(g_, 0);
            std::fill(sel.begin(), sel.begin() + d, 1);
            std::sort(sel.begin(), sel.end());
            do {
                std::vector<long double> c{1.0L};
                for (int j = 0; j < g_; j++) {
                    if (!sel[j])
                        continue;
                    std::vector<long double> n(c.size() + 1, 0.0L);
                    for (size_t i = 0; i < c.size(); i++) {
                        n[i + 1] += c[i];
                        n[i] -= c[i] * roots_ld_[j];
                    }
                    c = n;
                }
                qpoly h;
                bool ok = true;
                for (auto x : c) {
                    long double r = std::round(x);
                    if (std::fabs(x - r) > 1e-6L || std::fabs(r) > 1e17L) {
                        ok = false;
                        break;
                    }
                    h.emplace_back((long)r);
                }
                if (ok && qrem(f, h).empty())
                    throw hmf_error("NotIrreducible", "defining polynomial factors over Q");
            } while (std::next_permutation(sel.begin(), sel.end()));
        }
    }

    if (basis) {
        if ((int)basis->size() != g_)
            throw hmf_error("BasisNotARing", "integral basis must have g rows");
        for (auto const & r : *basis)
            if ((int)r.size() != g_)
                throw hmf_error("BasisNotARing", "integral basis rows must have g entries");
        B_ = *basis;
    } else {
        B_.assign(g_, qvec(g_, qq(0)));
        for (int i = 0; i < g_; i++)
            B_[i][i] = 1;
    }
    try {
        Binv_ = inverse(B_);
    } catch (hmf_error const &) {
        throw hmf_error("BasisNotARing", "integral basis is singular");
    }
    power_basis_ = true;
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++)
            if (B_[i][j] != (i == j ? 1 : 0))
                power_basis_ = false;
    for (auto const & r : Binv_)
        for (auto const & x : r)
            if (x.get_den() != 1)
                throw hmf_error("BasisNotARing", "integral basis does not contain the power basis");

    // products of power-basis polynomials reduced mod f
    auto polymul = [&](qvec const & a, qvec const & b) {
        qvec r(2 * g_, qq(0));
        for (int i = 0; i < g_; i++)
            for (int j = 0; j < g_; j++)
                r[i + j] += a[i] * b[j];
        for (int k = 2 * g_ - 1; k >= g_; k--) {
            if (r[k] == 0)
                continue;
            qq c = r[k];
            for (int j = 0; j <= g_; j++)
                r[k - g_ + j] -= c * f[j];
        }
        r.resize(g_);
        return r;
    };
    mt_.assign(g_, std::vector<zvec>(g_));
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++) {
            qvec c = row_times(polymul(B_[i], B_[j]), Binv_);
            zvec z;
            for (auto const & x : c) {
                if (x.get_den() != 1)
                    throw hmf_error("BasisNotARing", "integral basis is not closed under multiplication");
                z.push_back(x.get_num());
            }
            mt_[i][j] = z;
        }

    // power sums of the roots by Newton's identities
    std::vector<qq> ps(2 * g_, qq(0));
    ps[0] = g_;
    for (int k = 1; k < 2 * g_; k++) {
        qq s = 0;
        // e-coefficients: f = x^g + a_{g-1} x^{g-1} + ... + a_0
        for (int i = 1; i <= std::min(k, g_); i++) {
            qq a = f[g_ - i];
            if (i < k)
                s -= a * ps[k - i];
            else
                s -= a * i;
        }
        ps[k] = s;
    }
    tr_.assign(g_, 0);
    for (int i = 0; i < g_; i++) {
        qq t = 0;
        for (int k = 0; k < g_; k++)
            t += B_[i][k] * ps[k];
        tr_[i] = t.get_num();
    }
    trace_form_.assign(g_, zvec(g_, 0));
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++)
            for (int k = 0; k < g_; k++)
                trace_form_[i][j] += mt_[i][j][k] * tr_[k];
    disc_ = det(trace_form_);
    zmat pf(g_, zvec(g_));
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++)
            pf[i][j] = ps[i + j].get_num();
    poly_disc_ = det(pf);
    index_ = abs(det(Binv_).get_num());
    if (poly_disc_ != index_ * index_ * disc_)
        throw hmf_error("BasisNotARing", "discriminant check failed for the integral basis");

    emb_.assign(g_, std::vector<long double>(g_, 0.0L));
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++) {
            long double s = 0, x = 1;
            for (int k = 0; k < g_; k++) {
                s += to_ld(B_[i][k]) * x;
                x *= roots_ld_[j];
            }
            emb_[i][j] = s;
        }
}

std::string number_field::describe() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = g_; i >= 0; i--) {
        zz c = poly_[i];
        if (c == 0)
            continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        zz a = abs(c);
        std::string coef = (a == 1 && i > 0) ? "" : a.get_str() + (i > 0 ? "*" : "");
        if (first)
            os << (c < 0 ? "-" : "") << coef << mono;
        else
            os << (c < 0 ? " - " : " + ") << coef << mono;
        first = false;
    }
    return os.str();
}

elem number_field::one() const { return Binv_[0]; }

elem number_field::from_int(zz const & a) const { return scale(one(), qq(a)); }

elem number_field::from_rational(qq const & a) const { return scale(one(), a); }

elem number_field::from_power(qvec const & c) const
{
    qvec p = c;
    p.resize(g_, qq(0));
    return row_times(p, Binv_);
}

qvec number_field::to_power(elem const & a) const { return row_times(a, B_); }

elem number_field::theta() const
{
    if (g_ == 1)
        return from_rational(-qq(poly_[0]));
    qvec c(g_, qq(0));
    c[1] = 1;
    return from_power(c);
}

elem number_field::add(elem const & a, elem const & b) const
{
    elem r(g_);
    for (int i = 0; i < g_; i++)
        r[i] = a[i] + b[i];
    return r;
}

elem number_field::sub(elem const & a, elem const & b) const
{
    elem r(g_);
    for (int i = 0; i < g_; i++)
        r[i] = a[i] - b[i];
    return r;
}

elem number_field::neg(elem const & a) const
{
    elem r(g_);
    for (int i = 0; i < g_; i++)
        r[i] = -a[i];
    return r;
}

elem number_field::scale(elem const & a, qq const & c) const
{
    elem r(g_);
    for (int i = 0; i < g_; i++)
        r[i] = a[i] * c;
    return r;
}

elem number_field::mul(elem const & a, elem const & b) const
{
    elem r(g_, qq(0));
    qq t;
    for (int i = 0; i < g_; i++) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < g_; j++) {
            if (b[j] == 0)
                continue;
            t = a[i] * b[j];
            auto const & m = mt_[i][j];
            for (int k = 0; k < g_; k++)
                if (m[k] != 0)
                    r[k] += t * m[k];
        }
    }
    return r;
}

qmat number_field::mul_matrix(elem const & a) const
{
    qmat m(g_, qvec(g_, qq(0)));
    for (int i = 0; i < g_; i++)
        for (int j = 0; j < g_; j++) {
            if (a[j] == 0)
                continue;
            for (int k = 0; k < g_; k++)
                m[i][k] += a[j] * mt_[i][j][k];
        }
    return m;
}

elem number_field::inv(elem const & a) const
{
    if (is_zero(a))
        throw hmf_error("ZeroElement", "inverse of zero field element");
    return row_times(one(), inverse(mul_matrix(a)));
}

elem number_field::pow(elem const & a, long n) const
{
    if (n < 0)
        return pow(inv(a), -n);
    elem r = one(), b = a;
    while (n) {
        if (n & 1)
            r = mul(r, b);
        n >>= 1;
        if (n)
            b = mul(b, b);
    }
    return r;
}

qq number_field::norm(elem const & a) const { return det(mul_matrix(a)); }

qq number_field::trace(elem const & a) const
{
    qq t = 0;
    for (int i = 0; i < g_; i++)
        t += a[i] * tr_[i];
    return t;
}

bool number_field::is_zero(elem const & a) const
{
    for (auto const & x : a)
        if (x != 0)
            return false;
    return true;
}

bool number_field::is_integral(elem const & a) const
{
    for (auto const & x : a)
        if (x.get_den() != 1)
            return false;
    return true;
}

qvec number_field::char_poly(elem const & a) const
{
    // Faddeev-LeVerrier
    qmat A = mul_matrix(a);
    int n = g_;
    qvec c(n + 1, qq(0));
    c[n] = 1;
    qmat Mk(n, qvec(n, qq(0)));
    for (int k = 1; k <= n; k++) {
        qmat N(n, qvec(n, qq(0)));
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                for (int l = 0; l < n; l++)
                    N[i][j] += A[i][l] * Mk[l][j];
                if (i == j)
                    N[i][j] += c[n - k + 1];
            }
        Mk = N;
        qq t = 0;
        for (int i = 0; i < n; i++)
            for (int l = 0; l < n; l++)
                t += A[i][l] * Mk[l][i];
        c[n - k] = -t / k;
    }
    return c;
}

std::vector<long double> number_field::embed(elem const & a) const
{
    std::vector<long double> r(g_, 0.0L);
    for (int i = 0; i < g_; i++) {
        if (a[i] == 0)
            continue;
        long double c = to_ld(a[i]);
        for (int j = 0; j < g_; j++)
            r[j] += c * emb_[i][j];
    }
    return r;
}

int number_field::sign_at(elem const & a, int j) const
{
    qvec A = to_power(a);
    qtrim(A);
    if (A.empty())
        return 0;
    if (g_ == 1)
        return sgn(qeval(A, roots_[0].lo));
    // quick floating-point decision with a safety margin
    {
        long double v = 0, mag = 0, x = 1;
        for (size_t k = 0; k < A.size(); k++) {
            long double c = to_ld(A[k]);
            v += c * x;
            mag += std::fabs(c * x);
            x *= roots_ld_[j];
        }
        if (std::fabs(v) > 1e-12L * mag + 1e-30L)
            return v > 0 ? 1 : -1;
    }
    qpoly f(poly_.begin(), poly_.end());
    qq lo = roots_[j].lo, hi = roots_[j].hi;
    int slo = sgn(qeval(f, lo));
    for (;;) {
        auto [rl, rh] = interval_eval(A, lo, hi);
        if (rl > 0)
            return 1;
        if (rh < 0)
            return -1;
        qq mid = (lo + hi) / 2;
        if (sgn(qeval(f, mid)) == slo)
            lo = mid;
        else
            hi = mid;
    }
}

bool number_field::is_totally_positive(elem const & a) const
{
    if (is_zero(a))
        throw hmf_error("ZeroElement", "positivity of zero is undefined");
    for (int j = 0; j < g_; j++)
        if (sign_at(a, j) <= 0)
            return false;
    return true;
}

frac_ideal const & number_field::codifferent() const
{
    std::lock_guard<std::mutex> lk(codiff_mu_);
    if (!codiff_) {
        qmat T = inverse(to_q(trace_form_));
        codiff_ = std::make_unique<frac_ideal>(shared_from_this(), T);
        diff_ = std::make_unique<frac_ideal>(codiff_->inverse());
    }
    return *codiff_;
}

frac_ideal const & number_field::different() const
{
    codifferent();
    return *diff_;
}

frac_ideal number_field::unit_ideal() const { return frac_ideal::unit(shared_from_this()); }

std::string to_string(field_ptr const & F, elem const & a)
{
    std::string s = "[";
    for (int i = 0; i < F->degree(); i++) {
        if (i)
            s += ", ";
        s += to_string(a[i]);
    }
    return s + "]";
}

std::vector<std::vector<long>> search_shell(int g, long radius)
{
    std::vector<std::vector<long>> out;
    if (radius == 0) {
        out.emplace_back(g, 0);
        return out;
    }
    std::vector<long> v(g, -radius);
    for (;;) {
        long mx = 0;
        for (auto x : v)
            mx = std::max(mx, std::labs(x));
        if (mx == radius)
            out.push_back(v);
        int i = g - 1;
        while (i >= 0 && v[i] == radius) {
            v[i] = -radius;
            i--;
        }
        if (i < 0)
            break;
        v[i]++;
    }
    auto key = [](long c) { return c > 0 ? 2 * c - 1 : -2 * c; };
    std::sort(out.begin(), out.end(), [&](auto const & a, auto const & b) {
        for (size_t i = 0; i < a.size(); i++)
            if (a[i] != b[i])
                return key(a[i]) < key(b[i]);
        return false;
    });
    return out;
}

} // namespace hmf
