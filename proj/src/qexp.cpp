#include "hmf/qexp.hpp"

#include <algorithm>

namespace hmf {

cusp cusp::make(frac_ideal const & A, frac_ideal const & B, std::string label)
{
    if (A.field() != B.field())
        throw hmf_error("CuspMismatch", "cusp ideals live in different fields");
    cusp c;
    c.A = A;
    c.B = B;
    c.M = A * B;
    c.label = std::move(label);
    return c;
}

cusp cusp::standard(field_ptr const & F) { return make(F->unit_ideal(), F->codifferent()); }
cusp cusp::trivial(field_ptr const & F) { return make(F->unit_ideal(), F->unit_ideal()); }

coeff_ring coeff_ring::rationals_at(long p)
{
    coeff_ring R;
    R.kind = ring_kind::Qp;
    R.p = p;
    return R;
}

coeff_ring coeff_ring::finite(long p, int m)
{
    coeff_ring R;
    R.kind = ring_kind::Fq;
    R.p = p;
    R.m = m;
    R.fq = std::make_shared<const gf>(p, m);
    return R;
}

coeff_ring coeff_ring::padic(long p, int prec)
{
    if (prec < 1)
        throw hmf_error("BadPrecision", "p-adic precision must be positive");
    coeff_ring R;
    R.kind = ring_kind::padic;
    R.p = p;
    R.prec = prec;
    return R;
}

std::string coeff_ring::name() const
{
    switch (kind) {
    case ring_kind::Q: return "Q";
    case ring_kind::Qp: return "Q(p=" + std::to_string(p) + ")";
    case ring_kind::Fq: return "F_" + std::to_string(p) + "^" + std::to_string(m);
    case ring_kind::padic: return "Z_" + std::to_string(p) + "/p^" + std::to_string(prec);
    }
    return "?";
}

scalar s_normalize(coeff_ring const & R, scalar a)
{
    if (R.kind == ring_kind::Fq) {
        a.q = 0;
        a.v = R.fq->from_poly(a.v);
        return a;
    }
    a.v.clear();
    if (R.kind == ring_kind::padic && a.q != 0) {
        // a = u / p^s with u known mod p^(prec+s)
        int v = val_p(a.q, R.p);
        int s = v < 0 ? -v : 0;
        zz ps = ipow(zz(R.p), s);
        zz mod = ipow(zz(R.p), R.prec + s);
        zz u = rational_mod(a.q * ps, mod);
        a.q = qq(u, ps);
        a.q.canonicalize();
    }
    return a;
}

scalar s_from_rational(coeff_ring const & R, qq const & a)
{
    scalar s;
    if (R.kind == ring_kind::Fq) {
        if (mpz_divisible_ui_p(a.get_den_mpz_t(), (unsigned long)R.p))
            throw hmf_error("NotIntegral", to_string(a) + " has no reduction mod " + std::to_string(R.p));
        s.v = R.fq->from_int(rational_mod(a, zz(R.p)).get_si());
        return s;
    }
    s.q = a;
    return s_normalize(R, s);
}

scalar s_add(coeff_ring const & R, scalar const & a, scalar const & b)
{
    if (R.kind == ring_kind::Fq)
        return {0, R.fq->add(a.v, b.v)};
    return s_normalize(R, {a.q + b.q, {}});
}

scalar s_mul(coeff_ring const & R, scalar const & a, scalar const & b)
{
    if (R.kind == ring_kind::Fq)
        return {0, R.fq->mul(a.v, b.v)};
    return s_normalize(R, {a.q * b.q, {}});
}

scalar s_neg(coeff_ring const & R, scalar const & a)
{
    if (R.kind == ring_kind::Fq)
        return {0, R.fq->neg(a.v)};
    return s_normalize(R, {-a.q, {}});
}

bool s_is_zero(coeff_ring const & R, scalar const & a)
{
    return R.kind == ring_kind::Fq ? a.v.empty() : a.q == 0;
}

int s_val(coeff_ring const & R, scalar const & a)
{
    if (!R.tracks_prime())
        throw hmf_error("NoTrackedPrime", "valuation needs a ring with a distinguished prime");
    if (s_is_zero(R, a))
        return val_infinity;
    if (R.kind == ring_kind::Fq)
        return 0;
    return val_p(a.q, R.p);
}

std::string s_to_string(coeff_ring const & R, scalar const & a)
{
    if (R.kind != ring_kind::Fq)
        return to_string(a.q);
    std::string s = "[";
    for (size_t i = 0; i < a.v.size(); i++)
        s += (i ? "," : "") + std::to_string(a.v[i]);
    return s + "]";
}

qexpansion::qexpansion(cusp C, coeff_ring R, qq T) : C_(std::move(C)), R_(std::move(R)), T_(std::move(T))
{
    if (T_ < 0)
        throw hmf_error("BadTraceBound", "trace bound must be nonnegative");
    den_ = C_.M.den();
    a0_ = s_from_rational(R_, 0);
}

qexpansion::key qexpansion::key_of(elem const & nu) const
{
    field_ptr const & F = field();
    key k;
    qq t = F->trace(nu) * den_;
    if (t.get_den() != 1)
        throw hmf_error("BadIndex", "index is not in the cusp lattice");
    k.push_back(to_ll(t.get_num()));
    for (auto const & c : nu) {
        qq x = c * den_;
        if (x.get_den() != 1)
            throw hmf_error("BadIndex", "index is not in the cusp lattice");
        k.push_back(to_ll(x.get_num()));
    }
    return k;
}

elem qexpansion::nu_of(key const & k) const
{
    elem nu(k.size() - 1);
    for (size_t i = 1; i < k.size(); i++)
        nu[i - 1] = qq(zz((long)k[i]), den_);
    for (auto & x : nu)
        x.canonicalize();
    return nu;
}

void qexpansion::check_index(elem const & nu) const
{
    field_ptr const & F = field();
    if (!C_.M.contains(nu))
        throw hmf_error("BadIndex", "index " + to_string(F, nu) + " is not in M");
    if (F->is_zero(nu) || !F->is_totally_positive(nu))
        throw hmf_error("BadIndex", "index " + to_string(F, nu) + " is not totally positive");
    if (F->trace(nu) > T_)
        throw hmf_error("BadIndex", "index " + to_string(F, nu) + " exceeds the trace bound");
}

void qexpansion::set_a0(scalar a) { a0_ = s_normalize(R_, std::move(a)); }

void qexpansion::set(elem const & nu, scalar a)
{
    check_index(nu);
    set_unchecked(nu, std::move(a));
}

void qexpansion::set_unchecked(elem const & nu, scalar a)
{
    a = s_normalize(R_, std::move(a));
    key k = key_of(nu);
    if (s_is_zero(R_, a))
        coeffs_.erase(k);
    else
        coeffs_[k] = {nu, std::move(a)};
}

void qexpansion::add_to(elem const & nu, scalar const & a)
{
    key k = key_of(nu);
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        set_unchecked(nu, a);
        return;
    }
    it->second.a = s_add(R_, it->second.a, a);
    if (s_is_zero(R_, it->second.a))
        coeffs_.erase(it);
}

scalar qexpansion::coeff(elem const & nu) const
{
    if (field()->is_zero(nu))
        return a0_;
    auto it = coeffs_.find(key_of(nu));
    return it == coeffs_.end() ? s_from_rational(R_, 0) : it->second.a;
}

namespace {

coeff_ring joint_ring(qexpansion const & f, qexpansion const & g)
{
    if (!(f.at() == g.at()))
        throw hmf_error("CuspMismatch", "expansions live at different cusps");
    if (!f.ring().compatible(g.ring()))
        throw hmf_error("RingMismatch", "expansions have different coefficient rings");
    coeff_ring R = f.ring();
    R.prec = std::min(f.ring().prec, g.ring().prec);
    return R;
}

} // namespace

qexpansion linear_combine(scalar const & c1, qexpansion const & f, scalar const & c2, qexpansion const & g)
{
    coeff_ring R = joint_ring(f, g);
    qq T = std::min(f.trace_bound(), g.trace_bound());
    qexpansion h(f.at(), R, T);
    auto const & F = f.field();
    h.set_a0(s_add(R, s_mul(R, c1, f.a0()), s_mul(R, c2, g.a0())));
    for (auto const & [k, t] : f.terms())
        if (F->trace(t.nu) <= T)
            h.add_to(t.nu, s_mul(R, c1, t.a));
    for (auto const & [k, t] : g.terms())
        if (F->trace(t.nu) <= T)
            h.add_to(t.nu, s_mul(R, c2, t.a));
    if (f.uweight && g.uweight && *f.uweight == *g.uweight)
        h.uweight = f.uweight;
    if (f.rweight && g.rweight && *f.rweight == *g.rweight)
        h.rweight = f.rweight;
    return h;
}

qexpansion multiply(qexpansion const & f, qexpansion const & g)
{
    coeff_ring R = joint_ring(f, g);
    qq T = std::min(f.trace_bound(), g.trace_bound());
    qexpansion h(f.at(), R, T);
    qq Td = T * f.at().M.den();
    int64_t tmax = to_ll(floor_div(Td.get_num(), Td.get_den()));
    h.set_a0(s_mul(R, f.a0(), g.a0()));
    // keys are linear in nu, so the product key is the sum of keys
    std::vector<std::pair<qexpansion::key, scalar>> fs, gs;
    fs.push_back({qexpansion::key(f.field()->degree() + 1, 0), f.a0()});
    gs.push_back({qexpansion::key(f.field()->degree() + 1, 0), g.a0()});
    for (auto const & [k, t] : f.terms())
        fs.push_back({k, t.a});
    for (auto const & [k, t] : g.terms())
        gs.push_back({k, t.a});
    std::map<qexpansion::key, scalar> acc;
    for (auto const & [k1, a] : fs) {
        if (s_is_zero(R, a))
            continue;
        for (auto const & [k2, b] : gs) {
            if (k1[0] + k2[0] > tmax)
                break;
            if (k1[0] + k2[0] == 0 || s_is_zero(R, b))
                continue;
            qexpansion::key k(k1.size());
            for (size_t i = 0; i < k.size(); i++)
                k[i] = k1[i] + k2[i];
            auto it = acc.find(k);
            scalar ab = s_mul(R, a, b);
            if (it == acc.end())
                acc.emplace(k, ab);
            else
                it->second = s_add(R, it->second, ab);
        }
    }
    for (auto & [k, a] : acc)
        h.set_unchecked(h.nu_of(k), a);
    return h;
}

int val(qexpansion const & f)
{
    coeff_ring const & R = f.ring();
    int v = s_val(R, f.a0());
    for (auto const & [k, t] : f.terms())
        v = std::min(v, s_val(R, t.a));
    return v;
}

qexpansion change_ring(qexpansion const & f, coeff_ring const & R)
{
    coeff_ring const & S = f.ring();
    if (S.kind == ring_kind::Fq && !(R.kind == ring_kind::Fq && R.p == S.p && R.m == S.m))
        throw hmf_error("RingMismatch", "cannot leave a finite coefficient field");
    if (S.kind == ring_kind::padic && R.kind != ring_kind::Fq && R.kind != ring_kind::padic)
        throw hmf_error("RingMismatch", "p-adic coefficients cannot be lifted to Q");
    if (S.tracks_prime() && R.tracks_prime() && S.p != R.p)
        throw hmf_error("RingMismatch", "tracked primes differ");
    if (S.kind == ring_kind::padic && R.kind == ring_kind::padic && R.prec > S.prec)
        throw hmf_error("RingMismatch", "cannot raise p-adic precision");
    qexpansion h(f.at(), R, f.trace_bound());
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    h.meta = f.meta;
    auto conv = [&](scalar const & a) {
        if (R.kind == ring_kind::Fq && S.kind == ring_kind::Fq)
            return a;
        if (R.kind == ring_kind::Fq && S.kind == ring_kind::padic && val_p(a.q, S.p) < 0 && a.q != 0)
            throw hmf_error("NotIntegral", "p-adic coefficient is not integral");
        return s_from_rational(R, a.q);
    };
    h.set_a0(conv(f.a0()));
    for (auto const & [k, t] : f.terms())
        h.set_unchecked(t.nu, conv(t.a));
    return h;
}

qexpansion truncate(qexpansion const & f, qq const & T)
{
    if (T > f.trace_bound())
        throw hmf_error("TraceBoundMismatch", "cannot extend a truncated expansion");
    qexpansion h(f.at(), f.ring(), T);
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    h.meta = f.meta;
    h.set_a0(f.a0());
    for (auto const & [k, t] : f.terms())
        if (f.field()->trace(t.nu) <= T)
            h.set_unchecked(t.nu, t.a);
    return h;
}

bool equal(qexpansion const & f, qexpansion const & g)
{
    joint_ring(f, g);
    if (f.trace_bound() != g.trace_bound())
        throw hmf_error("TraceBoundMismatch", "expansions are truncated at different trace bounds");
    if (!(f.a0() == g.a0()) || f.size() != g.size())
        return false;
    auto it = g.terms().begin();
    for (auto const & [k, t] : f.terms()) {
        if (k != it->first || !(t.a == it->second.a))
            return false;
        ++it;
    }
    return true;
}

} // namespace hmf
