#include "hmf/theta.hpp"

#include <numeric>

namespace hmf {

residue_character_table::residue_character_table(field_ptr F, long p, frac_ideal M)
    : F_(std::move(F)), p_(p), M_(std::move(M))
{
    if (M_.field() != F_)
        throw hmf_error("CuspMismatch", "lattice belongs to another field");
    primes_ = &F_->primes_above(p);
    int m = 1;
    for (auto const & P : *primes_)
        m = std::lcm(m, P.f);
    K_ = std::make_shared<const gf>(p, m);
    for (auto const & P : *primes_) {
        auto r = K_->roots(P.gpoly);
        if (r.empty())
            throw hmf_error("Internal", "residue polynomial has no root in the working field");
        root_.push_back(r.front());
        vM_.push_back(F_->valuation(P, M_));
    }
}

coeff_ring residue_character_table::ring() const
{
    coeff_ring R;
    R.kind = ring_kind::Fq;
    R.p = p_;
    R.m = K_->m();
    R.fq = K_;
    return R;
}

int residue_character_table::prime_index(std::string const & label) const
{
    for (auto const & P : *primes_)
        if (P.label == label)
            return P.index;
    throw hmf_error("BadPrime", "no prime " + label + " above " + std::to_string(p_));
}

bool residue_character_table::in_Pj(elem const & nu, int P, int j) const
{
    if (F_->is_zero(nu))
        return true;
    return F_->valuation(primes()[P], nu) >= j + vM_[P];
}

elem residue_character_table::normalized(elem const & nu, int P, int j) const
{
    int n = j + vM_[P];
    elem pi = F_->uniformizer(primes()[P]);
    if (n > 0)
        return F_->mul(nu, F_->pow(F_->inv(pi), n));
    if (n < 0)
        return F_->mul(nu, F_->pow(pi, -n));
    return nu;
}

gf::elem residue_character_table::chi_tilde(elem const & nu, int P, long i, int j) const
{
    if (P < 0 || P >= (int)primes().size())
        throw hmf_error("BadPrime", "prime index out of range");
    if (j < 0 || !in_Pj(nu, P, j))
        throw hmf_error("NotInPj", to_string(F_, nu) + " is not in " + primes()[P].label + "^" + std::to_string(j) + " M");
    std::vector<int64_t> key{P, j};
    for (auto const & c : nu) {
        key.push_back(to_ll(c.get_num()));
        key.push_back(to_ll(c.get_den()));
    }
    gf::elem v;
    bool hit = false;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            v = it->second;
            hit = true;
        }
    }
    if (!hit) {
        fp_poly r = F_->residue(primes()[P], normalized(nu, P, j));
        v = K_->eval(r, root_[P]);
        std::lock_guard<std::mutex> lk(mu_);
        memo_.emplace(key, v);
    }
    // sigma_{P,i} = Frob^(i-1) o sigma_{P,1}
    long f = primes()[P].f;
    long s = ((i - 1) % f + f) % f;
    for (long t = 0; t < s; t++)
        v = K_->frob(v);
    return v;
}

namespace {

void check_ring(residue_character_table const & X, qexpansion const & f)
{
    coeff_ring const & R = f.ring();
    if (R.kind != ring_kind::Fq || R.p != X.p() || R.m != X.m())
        throw hmf_error("RingMismatch", "theta operators act on F_" + std::to_string(X.p()) + "^" +
                                            std::to_string(X.m()) + "-expansions");
    if (!(f.at().M == X.lattice()))
        throw hmf_error("CuspMismatch", "character table was built for another lattice");
}

void check_support(residue_character_table const & X, qexpansion const & f, int P, int j)
{
    if (P < 0 || P >= (int)X.primes().size())
        throw hmf_error("BadPrime", "prime index out of range");
    if (j < 0)
        throw hmf_error("BadIndex", "j must be nonnegative");
    for (auto const & [k, t] : f.terms())
        if (!X.in_Pj(t.nu, P, j))
            throw hmf_error("SupportViolation", "coefficient at " + to_string(f.field(), t.nu) + " is outside " +
                                                    X.primes()[P].label + "^" + std::to_string(j) + " M");
}

std::optional<residue_weight> residue_weight_of(qexpansion const & f, long p)
{
    if (f.rweight && f.rweight->L.p == p)
        return f.rweight;
    if (f.uweight) {
        auto L = weight_layout::of(f.field(), p);
        return reduce_weight(*f.uweight, L, default_assignment(f.field(), L));
    }
    return std::nullopt;
}

qexpansion same_shape(qexpansion const & f, qq const & T)
{
    qexpansion h(f.at(), f.ring(), T);
    h.meta = f.meta;
    h.set_a0(f.a0());
    return h;
}

} // namespace

qexpansion theta(residue_character_table const & X, qexpansion const & f, int P, long i, int j)
{
    check_ring(X, f);
    check_support(X, f, P, j);
    coeff_ring const & R = f.ring();
    qexpansion h(f.at(), R, f.trace_bound());
    h.meta = f.meta;
    prime_data const & Pd = X.primes()[P];
    h.meta["uniformizer " + Pd.label] = to_string(X.field(), X.field()->uniformizer(Pd));
    for (auto const & [k, t] : f.terms())
        h.set_unchecked(t.nu, s_mul(R, {0, X.chi_tilde(t.nu, P, i, j)}, t.a));
    if (auto w = residue_weight_of(f, X.p()))
        h.rweight = transform_weight(*w, {weight_op_kind::Theta, P, i});
    return h;
}

qexpansion v_operator(qexpansion const & f, long p)
{
    auto const & F = f.field();
    qexpansion h = same_shape(f, f.trace_bound() * p);
    for (auto const & [k, t] : f.terms())
        h.set_unchecked(F->scale(t.nu, qq(p)), t.a);
    if (f.uweight && f.uweight->is_parallel()) {
        h.uweight = f.uweight;
        for (auto & a : h.uweight->a)
            a *= p;
    }
    if (f.rweight && f.rweight->L.p == p)
        h.rweight = frobenius_twist(*f.rweight);
    else if (f.ring().kind == ring_kind::Fq && f.ring().p == p)
        if (auto w = residue_weight_of(f, p))
            h.rweight = frobenius_twist(*w);
    return h;
}

qexpansion u_operator(qexpansion const & f, long p)
{
    auto const & F = f.field();
    qq T = f.trace_bound() / p;
    qexpansion h = same_shape(f, T);
    qq inv_p(1, p);
    inv_p.canonicalize();
    for (auto const & [k, t] : f.terms()) {
        elem mu = F->scale(t.nu, inv_p);
        if (F->trace(mu) <= T && f.at().M.contains(mu))
            h.set_unchecked(mu, t.a);
    }
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    return h;
}

qexpansion lambda_pj_filter(residue_character_table const & X, qexpansion const & f, int P, int j)
{
    check_support(X, f, P, j);
    qexpansion h = same_shape(f, f.trace_bound());
    for (auto const & [k, t] : f.terms())
        if (X.in_Pj(t.nu, P, j + 1))
            h.set_unchecked(t.nu, t.a);
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    return h;
}

qexpansion lambda_pj_composition(residue_character_table const & X, qexpansion const & f, int P, int j,
                                 std::vector<int64_t> const & psi)
{
    check_ring(X, f);
    check_support(X, f, P, j);
    auto L = weight_layout::of(X.field(), X.p());
    int fP = L.f[P];
    if ((int)psi.size() != fP)
        throw hmf_error("BadCharacter", "need one exponent per residue embedding of " + X.primes()[P].label);
    residue_weight w(L);
    bool nonzero = false;
    for (int i = 1; i <= fP; i++) {
        if (psi[i - 1] < 0)
            throw hmf_error("BadCharacter", "exponents must be nonnegative");
        nonzero |= psi[i - 1] > 0;
        w.at(P, i) = psi[i - 1];
    }
    if (!nonzero || !in_Xk1(w))
        throw hmf_error("BadCharacter", "psi must be a nontrivial element of X_k(1)");
    qexpansion g = f;
    for (int i = 1; i <= fP; i++)
        for (int64_t a = 0; a < psi[i - 1]; a++)
            g = theta(X, g, P, i, j);
    coeff_ring const & R = f.ring();
    qexpansion h = linear_combine(s_from_rational(R, 1), f, s_from_rational(R, -1), g);
    h.meta = f.meta;
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    return h;
}

qexpansion lambda_pj(residue_character_table const & X, qexpansion const & f, int P, int j,
                     std::optional<std::vector<int64_t>> psi)
{
    if (!psi)
        psi = std::vector<int64_t>(X.primes()[P].f, X.p() - 1);
    qexpansion a = lambda_pj_composition(X, f, P, j, *psi);
    qexpansion b = lambda_pj_filter(X, f, P, j);
    if (!equal(a, b))
        throw hmf_error("Internal", "Lambda(P,j) composition and index filter disagree");
    return a;
}

qexpansion lambda_filter(qexpansion const & f, long p)
{
    auto const & F = f.field();
    qexpansion h = same_shape(f, f.trace_bound());
    qq inv_p(1, p);
    inv_p.canonicalize();
    for (auto const & [k, t] : f.terms())
        if (f.at().M.contains(F->scale(t.nu, inv_p)))
            h.set_unchecked(t.nu, t.a);
    h.uweight = f.uweight;
    h.rweight = f.rweight;
    return h;
}

qexpansion lambda(residue_character_table const & X, qexpansion const & f)
{
    qexpansion g = f;
    for (auto const & P : X.primes())
        for (int j = 0; j < P.e; j++)
            g = lambda_pj(X, g, P.index, j);
    if (!equal(g, lambda_filter(f, X.p())))
        throw hmf_error("Internal", "Lambda composition differs from the pM filter");
    return g;
}

qexpansion vu_product_formula(residue_character_table const & X, qexpansion const & f)
{
    qexpansion g = f;
    for (auto const & P : X.primes())
        for (int j = 0; j < P.e; j++)
            g = lambda_pj_composition(X, g, P.index, j, std::vector<int64_t>(P.f, X.p() - 1));
    return g;
}

qq padic_embed(field_ptr const & F, prime_data const & P, elem const & a, int prec)
{
    if (P.e != 1 || P.f != 1)
        throw hmf_error("Unsupported", "p-adic embedding implemented for e = f = 1 only");
    if (F->is_zero(a))
        return 0;
    if (F->valuation(P, a) < 0)
        throw hmf_error("NotIntegral", "element is not integral at " + P.label);
    long p = P.p;
    qvec c = F->to_power(a);
    int vmin = 0;
    for (auto const & x : c)
        if (x != 0)
            vmin = std::min(vmin, val_p(x, p));
    int N = prec - vmin + 1;
    zz pN = ipow(zz(p), N);
    // Newton lift of the simple root of g_P
    zvec const & poly = F->poly();
    auto eval = [&](zz const & r, bool deriv) {
        zz s = 0;
        for (size_t d = poly.size(); d-- > 0;) {
            if (deriv && d == 0)
                break;
            s = s * r + (deriv ? poly[d] * (long)d : poly[d]);
        }
        return mod_pos(s, pN);
    };
    zz r = mod_pos(zz(-P.gpoly[0]), zz(p));
    for (int it = 0; it < 64 && eval(r, false) != 0; it++) {
        zz d = eval(r, true), di;
        if (!mpz_invert(di.get_mpz_t(), d.get_mpz_t(), pN.get_mpz_t()))
            throw hmf_error("Internal", "root of g_P is not simple");
        r = mod_pos(r - eval(r, false) * di, pN);
    }
    if (eval(r, false) != 0)
        throw hmf_error("Internal", "Hensel lift did not converge");
    qq v = 0;
    zz rk = 1;
    for (auto const & x : c) {
        v += x * rk;
        rk = rk * r % pN;
    }
    if (val_p(v, p) < 0)
        throw hmf_error("Internal", "p-adic image is not integral");
    return qq(rational_mod(v, ipow(zz(p), prec)));
}

qexpansion padic_theta(qexpansion const & f, long p, int P, long i, int j)
{
    coeff_ring const & R = f.ring();
    if (R.kind != ring_kind::padic || R.p != p)
        throw hmf_error("RingMismatch", "p-adic theta needs a Z_p/p^n expansion");
    auto const & F = f.field();
    auto const & primes = F->primes_above(p);
    if (P < 0 || P >= (int)primes.size())
        throw hmf_error("BadPrime", "prime index out of range");
    prime_data const & Pd = primes[P];
    if (Pd.e != 1 || Pd.f != 1)
        throw hmf_error("Unsupported", "p-adic theta implemented for e = f = 1 only");
    int t = R.prec - j;
    if (t < 1)
        throw hmf_error("InsufficientPrecision", "dividing by pi^j leaves no p-adic digits");
    residue_character_table X(F, p, f.at().M);
    check_support(X, f, P, j);
    coeff_ring Rt = coeff_ring::padic(p, t);
    qexpansion h(f.at(), Rt, f.trace_bound());
    h.meta = f.meta;
    h.meta["prec_drop"] = std::to_string(j);
    h.meta["uniformizer " + Pd.label] = to_string(F, F->uniformizer(Pd));
    for (auto const & [k, term] : f.terms()) {
        qq chi = padic_embed(F, Pd, X.normalized(term.nu, P, j), t);
        h.set_unchecked(term.nu, s_from_rational(Rt, term.a.q * chi));
    }
    // weight chi * chi_{P,i}^2
    if (f.uweight) {
        auto L = weight_layout::of(F, p);
        auto as = default_assignment(F, L);
        h.uweight = f.uweight;
        for (size_t g = 0; g < as.size(); g++)
            if (as[g] == L.pos(P, i))
                h.uweight->a[g] += 2;
    }
    if (f.rweight && f.rweight->L.p == p) {
        h.rweight = f.rweight;
        h.rweight->at(P, i) += 2;
    }
    return h;
}

} // namespace hmf
