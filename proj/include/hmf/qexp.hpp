#ifndef HMF_QEXP_HPP
#define HMF_QEXP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmf/field.hpp"
#include "hmf/finite_field.hpp"
#include "hmf/weights.hpp"

namespace hmf {

struct cusp {
    frac_ideal A, B, M;
    std::string label = "standard";

    static cusp make(frac_ideal const & A, frac_ideal const & B, std::string label = "standard");
    /* (O_L, D_L^-1): M is the codifferent */
    static cusp standard(field_ptr const & F);
    /* (O_L, O_L) */
    static cusp trivial(field_ptr const & F);
    field_ptr const & field() const { return A.field(); }
    bool operator==(cusp const & o) const { return A == o.A && B == o.B && label == o.label; }
};

enum class ring_kind { Q, Qp, Fq, padic };

struct coeff_ring {
    ring_kind kind = ring_kind::Q;
    long p = 0;
    int m = 1;
    int prec = 0;                       // padic only: values known mod p^prec
    std::shared_ptr<const gf> fq;       // Fq only

    static coeff_ring rationals() { return {}; }
    static coeff_ring rationals_at(long p);
    static coeff_ring finite(long p, int m);
    static coeff_ring padic(long p, int prec);

    bool tracks_prime() const { return kind != ring_kind::Q; }
    /* same ring up to p-adic precision */
    bool compatible(coeff_ring const & o) const { return kind == o.kind && p == o.p && m == o.m; }
    bool operator==(coeff_ring const & o) const { return compatible(o) && prec == o.prec; }
    std::string name() const;
};

/* a coefficient: q for the rational kinds, v for F_{p^m} */
struct scalar {
    qq q;
    fp_poly v;
    bool operator==(scalar const & o) const { return q == o.q && v == o.v; }
};

/* ring operations on scalars */
scalar s_from_rational(coeff_ring const & R, qq const & a);
scalar s_normalize(coeff_ring const & R, scalar a);
scalar s_add(coeff_ring const & R, scalar const & a, scalar const & b);
scalar s_mul(coeff_ring const & R, scalar const & a, scalar const & b);
scalar s_neg(coeff_ring const & R, scalar const & a);
bool s_is_zero(coeff_ring const & R, scalar const & a);
int s_val(coeff_ring const & R, scalar const & a);     // val_infinity for 0
std::string s_to_string(coeff_ring const & R, scalar const & a);

/* A truncated q-expansion sum a_nu q^nu over nu in M^+ with Tr(nu) <= T.
 * Coefficient keys are (Tr(d nu), d*coords) with d the denominator of M,
 * so key order is (trace, coordinates). */
class qexpansion {
  public:
    using key = std::vector<int64_t>;
    struct term {
        elem nu;
        scalar a;
    };

    qexpansion() = default;
    qexpansion(cusp C, coeff_ring R, qq T);

    cusp const & at() const { return C_; }
    coeff_ring const & ring() const { return R_; }
    field_ptr const & field() const { return C_.field(); }
    qq const & trace_bound() const { return T_; }
    scalar const & a0() const { return a0_; }
    std::map<key, term> const & terms() const { return coeffs_; }
    size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return s_is_zero(R_, a0_) && coeffs_.empty(); }

    key key_of(elem const & nu) const;
    elem nu_of(key const & k) const;
    /* membership in M, total positivity and the trace bound */
    void check_index(elem const & nu) const;

    void set_a0(scalar a);
    void set(elem const & nu, scalar a);            // checked
    void set_unchecked(elem const & nu, scalar a);  // nu known to be valid
    void add_to(elem const & nu, scalar const & a);
    scalar coeff(elem const & nu) const;

    std::optional<universal_weight> uweight;
    std::optional<residue_weight> rweight;
    std::map<std::string, std::string> meta;

  private:
    cusp C_;
    coeff_ring R_;
    qq T_;
    zz den_ = 1;
    scalar a0_;
    std::map<key, term> coeffs_;
};

qexpansion linear_combine(scalar const & c1, qexpansion const & f, scalar const & c2, qexpansion const & g);
qexpansion multiply(qexpansion const & f, qexpansion const & g);
int val(qexpansion const & f);
qexpansion change_ring(qexpansion const & f, coeff_ring const & R);
/* restriction to a smaller trace bound */
qexpansion truncate(qexpansion const & f, qq const & T);
/* semantic equality; throws TraceBoundMismatch when the bounds differ */
bool equal(qexpansion const & f, qexpansion const & g);

} // namespace hmf

#endif
