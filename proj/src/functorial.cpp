#include "hmf/functorial.hpp"

namespace hmf {

field_ptr rational_field()
{
    static field_ptr Q = number_field::make({0, 1});
    return Q;
}

relative_embedding relative_embedding::over_Q(field_ptr const & L2)
{
    relative_embedding R;
    R.L1 = rational_field();
    R.L2 = L2;
    int g = L2->degree();
    for (int i = 0; i < g; i++) {
        elem w(g, qq(0));
        w[i] = 1;
        R.trace.push_back({L2->trace(w)});
    }
    R.restrict_to.assign(g, 0);
    R.rel_codifferent = L2->codifferent();
    R.include_basis = {L2->one()};
    return R;
}

elem relative_embedding::rel_trace(elem const & nu) const { return row_times(nu, trace); }

frac_ideal relative_embedding::extend(frac_ideal const & I) const
{
    std::vector<elem> gens;
    for (auto const & row : I.basis()) {
        elem x = L2->zero();
        for (size_t i = 0; i < row.size(); i++)
            x = L2->add(x, L2->scale(include_basis[i], row[i]));
        gens.push_back(x);
    }
    return frac_ideal::generated(L2, gens);
}

cusp lift_cusp(relative_embedding const & R, cusp const & C1)
{
    if (C1.field() != R.L1)
        throw hmf_error("IncompatibleCusp", "cusp does not live on the subfield");
    return cusp::make(R.extend(C1.A), R.extend(C1.B) * R.rel_codifferent, C1.label);
}

qexpansion pullback_qexp(relative_embedding const & R, qexpansion const & f, cusp const & C1)
{
    cusp C2 = lift_cusp(R, C1);
    if (f.field() != R.L2 || !(f.at().A == C2.A) || !(f.at().B == C2.B))
        throw hmf_error("IncompatibleCusp", "expansion is not at (A O_L2, B D_{L2/L1}^-1)");
    qexpansion h(C1, f.ring(), f.trace_bound());
    h.meta = f.meta;
    h.set_a0(f.a0());
    for (auto const & [k, t] : f.terms()) {
        elem d = R.rel_trace(t.nu);
        h.check_index(d);
        h.add_to(d, t.a);
    }
    if (f.uweight)
        h.uweight = restrict_weight(R, *f.uweight);
    return h;
}

universal_weight restrict_weight(relative_embedding const & R, universal_weight const & w)
{
    if (w.a.size() != R.restrict_to.size())
        throw hmf_error("BadWeight", "weight has the wrong number of embeddings");
    universal_weight r;
    r.a.assign(R.L1->degree(), 0);
    for (size_t g = 0; g < w.a.size(); g++)
        r.a[R.restrict_to[g]] += w.a[g];
    return r;
}

std::vector<scalar> to_series(qexpansion const & f)
{
    if (f.field()->degree() != 1)
        throw hmf_error("BadField", "series view needs an expansion over Q");
    qq T = f.trace_bound();
    long N = floor_div(T.get_num(), T.get_den()).get_si();
    std::vector<scalar> a(N + 1, s_from_rational(f.ring(), 0));
    a[0] = f.a0();
    for (auto const & [k, t] : f.terms()) {
        if (t.nu[0].get_den() != 1)
            throw hmf_error("BadIndex", "series view needs integral indices");
        a[t.nu[0].get_num().get_si()] = t.a;
    }
    return a;
}

qexpansion serre_theta(qexpansion const & f)
{
    if (f.field()->degree() != 1)
        throw hmf_error("BadField", "q d/dq is taken over Q");
    coeff_ring const & R = f.ring();
    qexpansion h(f.at(), R, f.trace_bound());
    h.meta = f.meta;
    for (auto const & [k, t] : f.terms())
        h.set_unchecked(t.nu, s_mul(R, s_from_rational(R, t.nu[0]), t.a));
    return h;
}

theta_compat_report check_theta_compat(relative_embedding const & R, qexpansion const & f, cusp const & C1)
{
    if (R.L1->degree() != 1)
        throw hmf_error("Unsupported", "Theta compatibility is checked for L1 = Q");
    coeff_ring const & ring = f.ring();
    if (ring.kind != ring_kind::Fq)
        throw hmf_error("RingMismatch", "Theta compatibility is a characteristic p statement");
    long p = ring.p;
    residue_character_table X(R.L2, p, f.at().M);
    qexpansion sum(f.at(), ring, f.trace_bound());
    for (auto const & P : X.primes())
        for (int i = 1; i <= P.f; i++)
            sum = linear_combine(s_from_rational(ring, 1), sum, s_from_rational(ring, P.e), theta(X, f, P.index, i, 0));
    theta_compat_report r;
    r.lhs = serre_theta(pullback_qexp(R, f, C1));
    r.rhs = pullback_qexp(R, sum, C1);
    r.equal = equal(r.lhs, r.rhs);
    if (!r.equal) {
        for (auto const & [k, t] : r.lhs.terms())
            if (!(r.rhs.coeff(t.nu) == t.a)) {
                r.witness = to_string(R.L1, t.nu);
                break;
            }
        if (r.witness.empty())
            for (auto const & [k, t] : r.rhs.terms())
                if (!(r.lhs.coeff(t.nu) == t.a)) {
                    r.witness = to_string(R.L1, t.nu);
                    break;
                }
    }
    return r;
}

} // namespace hmf
