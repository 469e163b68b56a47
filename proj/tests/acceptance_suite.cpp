#include "acceptance_suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "hmf/congruences.hpp"
#include "hmf/eisenstein.hpp"
#include "hmf/elliptic.hpp"
#include "hmf/functorial.hpp"
#include "hmf/theta.hpp"
#include "hmf/weights.hpp"
#include "hmf/zeta.hpp"
#include "oracles.hpp"

namespace acceptance {

using namespace hmf;

namespace {

// Timing limits from the criteria, in seconds.
constexpr double zeta_limit = 60;
constexpr double integrality_limit = 300;

field_ptr sqrt3() { return number_field::make({-3, 0, 1}); }
field_ptr cubic49() { return number_field::make({1, -2, -1, 1}); }
field_ptr cubic1944() { return number_field::make({-6, -9, 0, 1}); }

struct checker {
    int total = 0, bad = 0;
    std::vector<std::string> failures;
    void operator()(bool ok, std::string const & what)
    {
        total++;
        if (!ok) {
            bad++;
            if (failures.size() < 4)
                failures.push_back(what);
        }
    }
    bool pass() const { return bad == 0 && total > 0; }
    std::string tally() const
    {
        std::string s = std::to_string(total - bad) + "/" + std::to_string(total) + " checks";
        for (auto const & f : failures)
            s += "; failed: " + f;
        return s;
    }
};

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", s);
    return buf;
}

// ---- 1: zeta goldens

criterion_result zeta_goldens()
{
    struct golden {
        std::function<field_ptr()> make;
        std::string name;
        long k;
        std::string value;      // empty: only the denominator is checked
        zz den;
    };
    zz den35 = zz(4) * 27 * 5 * 7 * 13 * 19 * 37;
    qq z5 = qq(zz(-2) * 25 * 184669 * 512249, zz(9) * 7);
    z5.canonicalize();
    std::vector<golden> gs = {
        {sqrt3, "Q(sqrt3)", 2, "1/6", 0},
        {sqrt3, "Q(sqrt3)", 18, "514802473837215246476827/7182", 0},
        {sqrt3, "Q(sqrt3)", 26, "59603426243912408678663547473670548011/6", 0},
        {sqrt3, "Q(sqrt3)", 36, "", den35},
        {cubic49, "disc49", 2, "-1/21", 0},
        {cubic49, "disc49", 10, "-1141452324871/231", 0},
        {cubic49, "disc49", 14, "-5589087133015782866737/147", 0},
        {cubic1944, "x3-9x-6", 2, "-70/3", 0},
        {cubic1944, "x3-9x-6", 4, "2556221/15", 0},
        {cubic1944, "x3-9x-6", 6, to_string(z5), 0},
        {cubic1944, "x3-9x-6", 14, "-433461315504312280903563360244187028747610/3", 0},
        {cubic1944, "x3-9x-6", 16, "83822500848624173596590790551322515127580563498549957/1020", 0},
        {cubic1944, "x3-9x-6", 18,
         "-36474212258415789533196138096664548388320650187321255430632643" "0/3591", 0},
    };
    checker c;
    double worst = 0;
    for (auto const & g : gs) {
        // a fresh field per value, so each timing includes the full computation
        field_ptr F = g.make();
        auto t0 = std::chrono::steady_clock::now();
        qq v = zeta_special_value(F, g.k).value;
        double s = since(t0);
        worst = std::max(worst, s);
        std::string what = g.name + " zeta(" + std::to_string(1 - g.k) + ")";
        if (g.value.empty())
            c(v.get_den() == g.den, what + " denominator " + v.get_den().get_str());
        else
            c(v == parse_rational(g.value), what + " = " + to_string(v));
        c(s < zeta_limit, what + " took " + fmt_seconds(s) + " s");
    }
    return {1, c.pass(), "zeta goldens: " + c.tally() + ", slowest " + fmt_seconds(worst) + " s (limit 60 s)"};
}

// ---- 2: congruence statements

criterion_result congruence_statements()
{
    checker c;
    struct stmt {
        std::function<field_ptr()> make;
        std::string name;
        long p, k, kp;
        long bound;                 // printed lower bound
        std::optional<int> actual;  // printed valuation, if stated
    };
    std::vector<stmt> ss = {
        {sqrt3, "Q(sqrt3)", 2, 2, 26, -3, -1},
        {sqrt3, "Q(sqrt3)", 3, 2, 26, 0, 0},
        {sqrt3, "Q(sqrt3)", 7, 2, 26, 1, 1},
        {sqrt3, "Q(sqrt3)", 13, 2, 26, 1, 1},
        {cubic49, "disc49", 7, 2, 14, -2, std::nullopt},
        {cubic49, "disc49", 2, 2, 14, -2, std::nullopt},
        {cubic49, "disc49", 13, 2, 14, 1, 1},
        {cubic1944, "x3-9x-6", 7, 2, 14, 1, std::nullopt},
        {cubic1944, "x3-9x-6", 7, 4, 16, 1, 1},
        {cubic1944, "x3-9x-6", 2, 4, 16, -6, -5},
        {cubic1944, "x3-9x-6", 2, 2, 18, 0, 1},
    };
    field_ptr fs[3] = {sqrt3(), cubic49(), cubic1944()};
    auto pick = [&](std::string const & n) { return n == "Q(sqrt3)" ? fs[0] : n == "disc49" ? fs[1] : fs[2]; };
    for (auto const & s : ss) {
        field_ptr F = pick(s.name);
        std::string what = s.name + " p=" + std::to_string(s.p) + " (" + std::to_string(s.k) + "," + std::to_string(s.kp) + ")";
        auto b = congruence_bound(F, s.p, s.k, s.kp);
        auto r = verify_congruence(F, s.p, s.k, s.kp);
        c(b.predicted && *b.predicted == s.bound, what + " bound");
        c(b.predicted && r.actual != val_infinity && *b.predicted <= r.actual, what + " bound <= valuation");
        c(r.pass, what + " report");
        if (s.actual)
            c(r.actual == *s.actual, what + " valuation " + std::to_string(r.actual));
    }
    // disc49 at 7: neither denominator is divisible by 7^3
    for (long k : {2, 14})
        c(val_p(zeta_at(fs[1], k).get_den(), 7) < 3, "disc49 7^3 does not divide den zeta(" + std::to_string(1 - k) + ")");
    // disc49 at 7, k = 10: the denominator valuation 1 is allowed, likewise at 3 and 11
    for (long p : {3, 7, 11}) {
        auto r = check_integrality(fs[1], p, 10);
        c(r.pass && r.n == 1, "disc49 integrality k=10 p=" + std::to_string(p));
    }
    c(val_p(zeta_at(fs[1], 10), 2) >= 0, "disc49 zeta(-9) is 2-integral");
    // disc49 at 2: both numerators odd
    for (long k : {2, 14})
        c(zeta_at(fs[1], k).get_num() % 2 != 0, "disc49 odd numerator zeta(" + std::to_string(1 - k) + ")");
    // x3-9x-6 at 7 for (2, 14): both values divisible by 7
    for (long k : {2, 14})
        c(val_p(zeta_at(fs[2], k), 7) >= 1, "x3-9x-6 7 | zeta(" + std::to_string(1 - k) + ")");
    // x3-9x-6 at 7 for (4, 16): both values 7-adic units
    for (long k : {4, 16})
        c(val_p(zeta_at(fs[2], k), 7) == 0, "x3-9x-6 zeta(" + std::to_string(1 - k) + ") 7-adic unit");
    return {2, c.pass(), "congruence statements: " + c.tally()};
}

// ---- 3: integrality of the constant term

criterion_result integrality_sweep()
{
    checker c;
    auto t0 = std::chrono::steady_clock::now();
    int nontrivial = 0;
    for (auto F : {sqrt3(), cubic49(), cubic1944()})
        for (long k = 2; k <= 20; k += 2)
            for (long p : primes_up_to(40)) {
                std::string what = F->describe() + " k=" + std::to_string(k) + " p=" + std::to_string(p);
                try {
                    auto r = check_integrality(F, p, k);
                    if (r.n > 0)
                        nontrivial++;
                    c(r.pass, what + " " + r.detail);
                } catch (hmf_error const & e) {
                    c(false, what + " " + e.what());
                }
            }
    double s = since(t0);
    c(s < integrality_limit, "sweep took " + fmt_seconds(s) + " s");
    return {3, c.pass(), "integrality: " + c.tally() + ", " + std::to_string(nontrivial) + " with positive denominator valuation, " +
                             fmt_seconds(s) + " s (limit 300 s)"};
}

// ---- 4: Eisenstein coefficients against the divisor oracle

criterion_result eisenstein_oracle()
{
    checker c;
    struct job {
        field_ptr F;
        long T;         // coefficient check
        long Tenum;     // enumeration check against the coordinate box
        long p;         // prime for the E-dagger check
    };
    std::vector<job> jobs = {{sqrt3(), 12, 12, 3}, {cubic49(), 9, 9, 2}, {cubic1944(), 6, 6, 2}};
    for (auto const & j : jobs) {
        cusp C = cusp::standard(j.F);
        std::string name = j.F->describe();
        auto lib = enumerate_totally_positive(C.M, j.Tenum);
        auto box = oracle::box_enumerate(C.M, j.Tenum);
        std::sort(lib.begin(), lib.end());
        std::sort(box.begin(), box.end());
        c(lib == box, name + " enumeration");
        for (long k : {2, 4, 6}) {
            auto E = eisenstein_qexp(j.F, k, C, j.T);
            int bad = 0;
            for (auto const & [key, t] : E.terms())
                if (t.a.q != oracle::divisor_sum(j.F, t.nu, C.M, k))
                    bad++;
            c(bad == 0 && E.size() == enumerate_totally_positive(C.M, j.T).size(), name + " E_" + std::to_string(k));
            c(E.a0().q == zeta_at(j.F, k) / ipow(zz(2), j.F->degree()), name + " E_" + std::to_string(k) + " constant");
        }
        auto D = eisenstein_dagger(j.F, 2, j.p, C, j.T);
        int bad = 0;
        for (auto const & [key, t] : D.terms())
            if (t.a.q != oracle::divisor_sum(j.F, t.nu, C.M, 2, j.p))
                bad++;
        c(bad == 0, name + " E_2 dagger at " + std::to_string(j.p));
    }
    // a cusp with A != O: the coefficients scale by Nm(A)^(k-1)
    {
        field_ptr F = sqrt3();
        frac_ideal A = F->primes_above(2)[0].ideal;
        cusp C = cusp::make(A, F->codifferent());
        auto E = eisenstein_qexp(F, 2, C, 8);
        int bad = 0;
        for (auto const & [key, t] : E.terms())
            if (t.a.q != A.norm() * oracle::divisor_sum(F, t.nu, C.M, 2))
                bad++;
        c(bad == 0 && E.size() > 0, "Q(sqrt3) E_2 at (P2, D^-1)");
    }
    return {4, c.pass(), "Eisenstein vs divisor oracle (T = 12, 9, 6): " + c.tally()};
}

// ---- 5: pullback identities

criterion_result pullback_identities()
{
    checker c;
    field_ptr F = sqrt3();
    auto R = relative_embedding::over_Q(F);
    cusp C1 = cusp::trivial(rational_field());
    cusp C2 = lift_cusp(R, C1);
    c(C2.A == F->unit_ideal() && C2.B == F->codifferent(), "lifted cusp is (O, D^-1)");
    {
        auto h = to_series(pullback_qexp(R, eisenstein_qexp(F, 2, C2, 10), C1));
        auto e4 = oracle::eisenstein_series(4, 11);
        bool ok = h.size() == 11;
        for (size_t n = 0; ok && n < h.size(); n++)
            ok = h[n].q == e4[n] / 24;
        c(ok, "pullback of E_2 = E_4 / 24 through q^10");
    }
    for (long k : {2, 4, 6}) {
        long w = 2 * k;
        long d = dim_M(w);
        int N = (int)d + 8;
        auto h = to_series(pullback_qexp(R, eisenstein_qexp(F, k, C2, N - 1), C1));
        // fit on a_0..a_{d-1}, compare the rest
        auto basis = miller_basis(w, N);
        bool ok = true;
        for (int n = 0; n < N; n++) {
            qq s = 0;
            for (long i = 0; i < d; i++)
                s += h[i].q * basis[i].a[n];
            ok = ok && s == h[n].q;
        }
        c(ok, "pullback of E_" + std::to_string(k) + " lies in M_" + std::to_string(w));
        std::vector<qq> tail;
        for (int n = 1; n < N; n++)
            tail.push_back(h[n].q);
        c(complete_constant_term(w, tail) == h[0].q, "constant term of the pullback of E_" + std::to_string(k));
    }
    return {5, c.pass(), "pullback: " + c.tally()};
}

// ---- 6: operator identities in characteristic p

using key = qexpansion::key;
using svec = std::map<key, gf::elem>;

svec to_svec(qexpansion const & f)
{
    svec v;
    if (!s_is_zero(f.ring(), f.a0()))
        v[{}] = f.a0().v;
    for (auto const & [k, t] : f.terms())
        if (!s_is_zero(f.ring(), t.a))
            v[k] = t.a.v;
    return v;
}

void axpy(gf const & K, svec & v, gf::elem const & a, svec const & w)
{
    for (auto const & [k, x] : w) {
        auto y = K.add(v[k], K.mul(a, x));
        if (K.is_zero(y))
            v.erase(k);
        else
            v[k] = y;
    }
}

// row echelon span keyed by leading index; tracks how each row was formed
struct echelon {
    gf const * K;
    std::map<key, std::pair<svec, svec>> rows;

    // reduce v (and its history h alongside); returns the remainder
    void reduce(svec & v, svec & h) const
    {
        while (!v.empty()) {
            auto it = rows.find(v.begin()->first);
            if (it == rows.end())
                return;
            auto a = K->neg(v.begin()->second);
            axpy(*K, v, a, it->second.first);
            axpy(*K, h, a, it->second.second);
        }
    }
    // true if v was independent
    bool insert(svec v, svec h)
    {
        reduce(v, h);
        if (v.empty())
            return false;
        auto inv = K->inv(v.begin()->second);
        svec nv, nh;
        axpy(*K, nv, inv, v);
        axpy(*K, nh, inv, h);
        rows[nv.begin()->first] = {nv, nh};
        return true;
    }
    bool contains(svec v) const
    {
        svec h;
        reduce(v, h);
        return v.empty();
    }
};

using linear_map = std::function<qexpansion(qexpansion const &)>;

// unit expansions a_0 = 1 and q^nu, nu in M+, Tr nu <= T
std::vector<qexpansion> units(cusp const & C, coeff_ring const & R, qq const & T)
{
    std::vector<qexpansion> out;
    qexpansion one(C, R, T);
    one.set_a0(s_from_rational(R, 1));
    out.push_back(one);
    for (auto const & nu : enumerate_totally_positive(C.M, T)) {
        qexpansion e(C, R, T);
        e.set_unchecked(nu, s_from_rational(R, 1));
        out.push_back(e);
    }
    return out;
}

std::vector<svec> kernel(gf const & K, std::vector<qexpansion> const & basis, linear_map const & op)
{
    echelon E{&K, {}};
    std::vector<svec> ker;
    for (auto const & e : basis) {
        svec v = to_svec(op(e)), h = to_svec(e);
        E.reduce(v, h);
        if (v.empty())
            ker.push_back(h);
        else
            E.insert(v, h);
    }
    return ker;
}

std::vector<svec> image(std::vector<qexpansion> const & basis, linear_map const & op)
{
    std::vector<svec> im;
    for (auto const & e : basis)
        im.push_back(to_svec(op(e)));
    return im;
}

bool same_span(gf const & K, std::vector<svec> const & a, std::vector<svec> const & b)
{
    echelon A{&K, {}}, B{&K, {}};
    for (auto const & v : a)
        A.insert(v, {});
    for (auto const & v : b)
        B.insert(v, {});
    if (A.rows.size() != B.rows.size())
        return false;
    for (auto const & v : a)
        if (!B.contains(v))
            return false;
    return true;
}

qexpansion random_expansion(residue_character_table const & X, cusp const & C, qq const & T, std::mt19937_64 & rng)
{
    coeff_ring R = X.ring();
    gf const & K = X.fq();
    uint64_t q = K.order().get_ui();
    qexpansion f(C, R, T);
    f.set_a0({0, K.from_index(rng() % q)});
    for (auto const & nu : enumerate_totally_positive(C.M, T))
        f.set_unchecked(nu, {0, K.from_index(rng() % q)});
    return f;
}

criterion_result operator_identities()
{
    checker c;
    std::mt19937_64 rng(20240611);
    struct job {
        field_ptr F;
        long T;
    };
    std::vector<job> jobs = {{sqrt3(), 9}, {cubic1944(), 6}};
    int inert_checked = 0;
    for (auto const & j : jobs)
        for (long p : {2, 3, 5}) {
            cusp C = cusp::standard(j.F);
            residue_character_table X(j.F, p, C.M);
            coeff_ring R = X.ring();
            gf const & K = X.fq();
            std::string name = j.F->describe() + " p=" + std::to_string(p);
            qq T(j.T);
            qexpansion f = random_expansion(X, C, T, rng);

            c(equal(u_operator(v_operator(f, p), p), f), name + " U V = Id");
            qexpansion vu = v_operator(u_operator(f, p), p);
            c(equal(vu, lambda(X, f)), name + " Lambda = V U");

            scalar one = s_from_rational(R, 1), minus = s_from_rational(R, -1);
            linear_map U = [&](qexpansion const & e) { return u_operator(e, p); };
            linear_map V = [&](qexpansion const & e) { return v_operator(e, p); };
            linear_map LmI = [&](qexpansion const & e) { return linear_combine(one, lambda(X, e), minus, e); };
            auto space = units(C, R, T);
            auto small = units(C, R, T / p);
            c(same_span(K, kernel(K, space, U), image(space, LmI)), name + " ker U = im(Lambda - Id)");
            c(same_span(K, kernel(K, space, LmI), image(small, V)), name + " ker(Lambda - Id) = im V");

            auto const & primes = X.primes();
            for (auto const & P : primes)
                for (auto const & Q : primes)
                    for (int i = 1; i <= P.f; i++)
                        for (int i2 = 1; i2 <= Q.f; i2++) {
                            auto a = theta(X, theta(X, f, Q.index, i2, 0), P.index, i, 0);
                            auto b = theta(X, theta(X, f, P.index, i, 0), Q.index, i2, 0);
                            c(equal(a, b), name + " Theta commute " + P.label + "," + std::to_string(i) + " " + Q.label + "," +
                                               std::to_string(i2));
                        }

            bool inert = primes.size() == 1 && primes[0].e == 1;
            if (inert) {
                // V U = I - prod_i Theta_i^(p-1), written out directly
                auto const & P = primes[0];
                qexpansion g = f;
                for (int i = 1; i <= P.f; i++)
                    for (long r = 0; r < p - 1; r++)
                        g = theta(X, g, P.index, i, 0);
                c(equal(vu, linear_combine(one, f, minus, g)), name + " inert V U = I - prod Theta_i^(p-1)");
                inert_checked++;
            }
            c(equal(vu, vu_product_formula(X, f)), name + " V U = product formula");
        }
    c(inert_checked == 2, "inert cases present");
    return {6, c.pass(), "operator identities (T = 9, 6): " + c.tally()};
}

// ---- 7: weight lattice

criterion_result weight_lattice()
{
    checker c;
    std::mt19937_64 rng(7);
    for (auto F : {sqrt3(), cubic49(), cubic1944()})
        for (long p : {2, 3, 5, 7}) {
            weight_layout L = weight_layout::of(F, p);
            std::string name = F->describe() + " p=" + std::to_string(p);
            zz expect = 1;
            for (int P = 0; P < L.primes(); P++)
                expect *= ipow(zz(p), L.f[P]) - 1;
            qmat Psi = psi_matrix(L);
            c(hasse_lattice_index(L) == expect, name + " index");
            c(abs(det(Psi)) == qq(expect), name + " det psi");
            qmat Ci = comparecones_inverse(L);
            int n = L.rank();
            bool ident = true;
            for (int r = 0; r < n; r++)
                for (int s = 0; s < n; s++) {
                    qq x = 0, y = 0;
                    for (int t = 0; t < n; t++) {
                        x += Ci[r][t] * Psi[t][s];
                        y += Psi[r][t] * Ci[t][s];
                    }
                    ident = ident && x == (r == s ? 1 : 0) && y == (r == s ? 1 : 0);
                }
            c(ident, name + " circulant inverse");

            for (int P = 0; P < L.primes(); P++)
                for (int i = 1; i <= L.f[P]; i++)
                    c(frobenius_twist(psi(L, P, i)) == psi(L, P, i - 1).scaled(p), name + " twist of psi");

            std::uniform_int_distribution<int> d(-6, 6);
            for (int trial = 0; trial < 25; trial++) {
                residue_weight w(L), w2(L);
                for (auto & x : w.a)
                    x = d(rng);
                for (auto & x : w2.a)
                    x = d(rng);
                residue_weight zero(L);
                c(leq_k(zero, w) == leq_k(zero, frobenius_twist(w)), name + " cone stability");
                c(leq_k(w, w2) == leq_k(frobenius_twist(w), frobenius_twist(w2)), name + " order stability");
                c(!in_Xk1(w) || in_Xk1(frobenius_twist(w)), name + " twist keeps X_k^1");

                auto bv = filtration_bound({weight_op_kind::V, 0, 1}, w);
                c(bv.exact && bv.bound == frobenius_twist(w), name + " PhiV exact");

                for (int P = 0; P < L.primes(); P++)
                    for (int i = 1; i <= L.f[P]; i++) {
                        auto bt = filtration_bound({weight_op_kind::Theta, P, i}, w);
                        residue_weight e(L);
                        e.at(P, i - 1) += p;
                        e.at(P, i) += 1;
                        c(bt.bound == w + e, name + " PhiTheta bound");
                        c(bt.strict == (w.at(P, i) % p == 0), name + " PhiTheta strictness");
                    }

                auto bu = filtration_bound({weight_op_kind::U, 0, 1}, bv.bound);
                c(leq_k(w, bu.bound), name + " PhiU after PhiV dominates the start");
                // twisting the rational U bound back gives the shifted weight exactly
                residue_weight target = bv.bound + residue_norm(L, p * p - 1);
                bool back = true;
                for (int P = 0; P < L.primes(); P++)
                    for (int i = 1; i <= L.f[P]; i++)
                        back = back && p * bu.rational_bound[L.pos(P, i + 1)] == qq(target.at(P, i));
                c(back, name + " PhiU rational bound");
            }

            if (p <= 5) {
                auto box = ordinary_box(L);
                int lo = p == 2 ? 0 : 1;
                c(box.t == lo && box.hi == p + 1, name + " ordinary box");
                for (auto const & [a, b] : box.box)
                    c(a == lo && b == p + 1, name + " ordinary box entry");
                bool tr = L.primes() == 1 && L.f[0] == 1 && L.e[0] == F->degree();
                c(box.totally_ramified == tr, name + " totally ramified flag");
                if (tr && p != 2)
                    c(box.ramified_variant && *box.ramified_variant == std::make_pair(2, (int)p + 1), name + " totally ramified box");
            }
        }
    return {7, c.pass(), "weight lattice: " + c.tally()};
}

// ---- 8: hbar

criterion_result hbar_closed_form()
{
    checker c;
    for (auto F : {sqrt3(), cubic49(), cubic1944()})
        for (long p : primes_up_to(13))
            for (int n = 1; n <= 3; n++) {
                std::string what = F->describe() + " p=" + std::to_string(p) + " n=" + std::to_string(n);
                try {
                    zz a = hbar_exponent(F, p, n), b = hbar_bruteforce(F, p, n);
                    c(a == b, what + " closed " + a.get_str() + " brute " + b.get_str());
                } catch (hmf_error const & e) {
                    c(false, what + " " + e.what());
                }
            }
    return {8, c.pass(), "hbar closed form vs norm image: " + c.tally()};
}

// ---- 9: p-adic suite

criterion_result padic_suite()
{
    checker c;
    struct job {
        field_ptr F;
        long p;
        std::vector<long> ks;
        int nmax;
    };
    // zeta_L(-3) of Q(sqrt3) has 5 in its denominator, so k = 4 needs
    // representatives near 2500 for n = 3; n = 2 keeps it fast
    std::vector<job> jobs = {{sqrt3(), 5, {2}, 3}, {sqrt3(), 5, {4}, 2}, {sqrt3(), 13, {2}, 2}, {cubic49(), 13, {2}, 2},
                             {cubic1944(), 7, {4}, 2}};
    for (auto const & j : jobs) {
        cusp C = cusp::standard(j.F);
        std::string name = j.F->describe() + " p=" + std::to_string(j.p);
        for (long k : j.ks) {
            auto dag = eisenstein_dagger(j.F, k, j.p, C, 6);
            for (int n = 1; n <= j.nmax; n++) {
                auto st = eisenstein_pstar(j.F, j.p, padic_weight::integer(j.p, k), C, 6, n);
                c(equal(st, change_ring(dag, coeff_ring::padic(j.p, n))),
                  name + " E* = E-dagger k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
        }
    }
    // the limit does not depend on the representative of the weight class
    struct rep_job {
        field_ptr F;
        long p, k;
        int nmax;
    };
    for (auto const & j : std::vector<rep_job>{{sqrt3(), 5, 2, 3}, {sqrt3(), 7, 2, 2}, {cubic49(), 13, 2, 1}}) {
        std::string name = j.F->describe() + " p=" + std::to_string(j.p);
        for (int n = 1; n <= j.nmax; n++) {
            try {
                zz step = padic_weight::period(j.p, n - 1);
                qq base = p_adic_zeta_limit(j.F, j.p, padic_weight::integer(j.p, j.k), n).value;
                qq shifted = p_adic_zeta_limit(j.F, j.p, padic_weight::integer(j.p, j.k + to_ll(step)), n).value;
                qq digits = p_adic_zeta_limit(j.F, j.p, padic_weight::from_digits(j.p, j.k, zz(j.k) + step, n + 1), n).value;
                c(base == shifted && base == digits, name + " representative independence n=" + std::to_string(n));
            } catch (hmf_error const & e) {
                c(false, name + " n=" + std::to_string(n) + " " + e.what());
            }
        }
    }
    for (long p : {5, 13}) {
        auto r = real_quadratic_p_check(p, 1);
        c(r.half_weight_applicable && r.half_weight_holds, "spot check p=" + std::to_string(p) + " r=1");
    }
    return {9, c.pass(), "p-adic suite: " + c.tally()};
}

} // namespace

criterion_result run_criterion(int id)
{
    static std::function<criterion_result()> const table[] = {zeta_goldens,        congruence_statements, integrality_sweep,
                                                               eisenstein_oracle,   pullback_identities,   operator_identities,
                                                               weight_lattice,      hbar_closed_form,      padic_suite};
    if (id < 1 || id > 9)
        throw hmf_error("BadCriterion", "criteria are numbered 1..9");
    auto t0 = std::chrono::steady_clock::now();
    criterion_result r;
    try {
        r = table[id - 1]();
    } catch (std::exception const & e) {
        r = {id, false, std::string("aborted: ") + e.what()};
    }
    r.seconds = since(t0);
    return r;
}

std::string format_line(criterion_result const & r)
{
    return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + "  " + r.summary + "  [" +
           fmt_seconds(r.seconds) + " s]";
}

std::vector<criterion_result> run_all(std::ostream & out)
{
    std::vector<criterion_result> rs;
    for (int id = 1; id <= 9; id++) {
        rs.push_back(run_criterion(id));
        out << format_line(rs.back()) << std::endl;
    }
    return rs;
}

} // namespace acceptance
