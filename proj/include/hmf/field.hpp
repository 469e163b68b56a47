#ifndef HMF_FIELD_HPP
#define HMF_FIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hmf/arith.hpp"
#include "hmf/poly_fp.hpp"

namespace hmf {

/* Field elements are rational coordinate vectors over the integral basis. */
using elem = qvec;

class number_field;
class frac_ideal;
struct prime_data;
using field_ptr = std::shared_ptr<const number_field>;

/* A fractional ideal stored as (1/den) * rowspan(H) in integral-basis
 * coordinates, H in Hermite normal form and den minimal, so that two
 * ideals are equal iff (den, H) agree. */
class frac_ideal {
    field_ptr F_;
    zz den_ = 1;
    zmat H_;

  public:
    frac_ideal() = default;
    /* lattice spanned by the given rows; must have full rank */
    frac_ideal(field_ptr F, qmat const & rows);

    static frac_ideal unit(field_ptr F);
    static frac_ideal principal(field_ptr F, elem const & a);
    /* O_L-ideal generated by the given elements */
    static frac_ideal generated(field_ptr F, std::vector<elem> const & gens);

    field_ptr const & field() const { return F_; }
    zz const & den() const { return den_; }
    zmat const & hnf_matrix() const { return H_; }
    qmat basis() const;
    qq norm() const;
    bool is_integral() const { return den_ == 1; }
    bool contains(elem const & a) const;
    /* exact coordinates of a over basis(); nullopt if not a member */
    std::optional<zvec> coords(elem const & a) const;

    frac_ideal operator*(frac_ideal const & J) const;
    frac_ideal operator*(elem const & a) const;
    frac_ideal inverse() const;
    frac_ideal pow(int n) const;
    bool operator==(frac_ideal const & J) const { return den_ == J.den_ && H_ == J.H_; }
    bool operator!=(frac_ideal const & J) const { return !(*this == J); }
};

struct prime_data {
    long p = 0;
    int e = 0, f = 0;
    int index = 0;              // position among the primes above p
    std::string label;          // "P1", "P2", ...
    fp_poly gpoly;              // monic factor of the defining polynomial mod p
    frac_ideal ideal;
    elem anti;                  // v_P(anti) = -1, integral at every other prime
    zz norm() const { return ipow(zz(p), f); }
};

/* exact real root isolation data: lo < root < hi */
struct root_interval {
    qq lo, hi;
};

class number_field : public std::enable_shared_from_this<number_field> {
    int g_ = 0;
    zvec poly_;
    qmat B_, Binv_;             // rows of B are the basis elements in power coordinates
    bool power_basis_ = true;
    std::vector<std::vector<zvec>> mt_;   // omega_i * omega_j
    zvec tr_;                   // Tr(omega_i)
    zmat trace_form_;
    zz disc_, poly_disc_, index_;
    std::vector<root_interval> roots_;
    std::vector<long double> roots_ld_;
    std::vector<std::vector<long double>> emb_;   // emb_[i][j] = sigma_j(omega_i)
    mutable std::unique_ptr<frac_ideal> codiff_, diff_;

    mutable std::mutex prime_mu_, codiff_mu_;
    mutable std::map<long, std::shared_ptr<const std::vector<prime_data>>> primes_;
    mutable std::map<std::pair<long, int>, elem> unif_;

    number_field() = default;
    void init(zvec poly, std::optional<qmat> basis);

  public:
    static field_ptr make(zvec poly, std::optional<qmat> basis = std::nullopt);

    int degree() const { return g_; }
    zvec const & poly() const { return poly_; }
    qmat const & basis() const { return B_; }
    qmat const & basis_inv() const { return Binv_; }
    bool has_power_basis() const { return power_basis_; }
    zz const & disc() const { return disc_; }
    zz const & poly_disc() const { return poly_disc_; }
    zz const & index() const { return index_; }
    zmat const & trace_form() const { return trace_form_; }
    std::vector<zvec> const & mult_row(int i) const { return mt_[i]; }
    std::string describe() const;

    elem zero() const { return elem(g_, qq(0)); }
    elem one() const;
    elem from_int(zz const & a) const;
    elem from_rational(qq const & a) const;
    elem from_power(qvec const & c) const;
    qvec to_power(elem const & a) const;
    elem theta() const;

    elem add(elem const & a, elem const & b) const;
    elem sub(elem const & a, elem const & b) const;
    elem neg(elem const & a) const;
    elem scale(elem const & a, qq const & c) const;
    elem mul(elem const & a, elem const & b) const;
    elem inv(elem const & a) const;
    elem div(elem const & a, elem const & b) const { return mul(a, inv(b)); }
    elem pow(elem const & a, long n) const;
    qmat mul_matrix(elem const & a) const;   // row i = omega_i * a
    qq norm(elem const & a) const;
    qq trace(elem const & a) const;
    bool is_zero(elem const & a) const;
    bool is_integral(elem const & a) const;
    /* characteristic polynomial of a, monic, low degree first */
    qvec char_poly(elem const & a) const;

    std::vector<root_interval> const & root_intervals() const { return roots_; }
    std::vector<long double> const & roots_approx() const { return roots_ld_; }
    std::vector<long double> embed(elem const & a) const;
    std::vector<std::vector<long double>> const & embedding_matrix() const { return emb_; }
    int sign_at(elem const & a, int j) const;     // exact
    bool is_totally_positive(elem const & a) const;

    frac_ideal const & codifferent() const;
    frac_ideal const & different() const;
    frac_ideal unit_ideal() const;

    /* Dedekind factorization of p; throws IndexDivisible when p | index */
    std::vector<prime_data> const & primes_above(long p) const;
    /* canonical uniformizer: first vector in search_shell order with
     * v_P = 1 and v_P' = 0 for the other primes above p */
    elem uniformizer(prime_data const & P) const;
    int valuation(prime_data const & P, elem const & a) const;   // val_infinity for 0
    int valuation(prime_data const & P, frac_ideal const & I) const;
    /* reduction of a P-integral element into O/P = F_p[x]/(g_P) */
    fp_poly residue(prime_data const & P, elem const & a) const;

    mutable std::mutex cache_mu;   // guards the memo tables below
    mutable std::map<long, qq> zeta_memo;
    mutable std::map<std::vector<int64_t>, std::vector<std::pair<zz, int>>> divisor_memo;
};

std::string to_string(field_ptr const & F, elem const & a);

/* Totally positive elements of I with trace <= bound, sorted by
 * (trace, coordinates). */
std::vector<elem> enumerate_totally_positive(frac_ideal const & I, qq const & bound);

struct ideal_factor {
    prime_data P;
    int exp;
};
/* I = prod P^exp for an integral nonzero ideal */
std::vector<ideal_factor> factor_integral_ideal(frac_ideal const & I, zz const & norm_bound = zz(1000000000));

/* integer vectors in the canonical search order: max-norm first, then
 * lexicographic with 0 < 1 < -1 < 2 < -2 < ... per coordinate */
std::vector<std::vector<long>> search_shell(int g, long radius);

} // namespace hmf

#endif
