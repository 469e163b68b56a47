#ifndef HMF_THETA_HPP
#define HMF_THETA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hmf/qexp.hpp"

namespace hmf {

/* Residue characters chi~_{P,i}^[j] for the primes above p at a cusp
 * lattice M, valued in F_{p^m} with m = lcm f_P.
 *
 * chi~_{P,i}^[j](nu) is the residue of nu * pi_P^-(j + v_P(M)) pushed along
 * sigma_{P,i}: x -> r_P^(p^(i-1)), r_P the first root of g_P in F_{p^m}.
 * pi_P is the canonical uniformizer. The extra pi_P^-v_P(M) only matters
 * when M is not a P-unit lattice (ramified P at the standard cusp); with
 * M = O_L or P unramified it is 1. */
class residue_character_table {
  public:
    residue_character_table(field_ptr F, long p, frac_ideal M);

    field_ptr const & field() const { return F_; }
    long p() const { return p_; }
    int m() const { return K_->m(); }
    gf const & fq() const { return *K_; }
    coeff_ring ring() const;
    frac_ideal const & lattice() const { return M_; }
    std::vector<prime_data> const & primes() const { return *primes_; }
    int prime_index(std::string const & label) const;   // BadPrime if unknown

    /* nu in P^j M */
    bool in_Pj(elem const & nu, int P, int j) const;
    /* throws NotInPj */
    gf::elem chi_tilde(elem const & nu, int P, long i, int j) const;
    /* nu * pi_P^-(j + v_P(M)), P-integral when nu is in P^j M */
    elem normalized(elem const & nu, int P, int j) const;

  private:
    field_ptr F_;
    long p_;
    frac_ideal M_;
    std::vector<prime_data> const * primes_;
    std::shared_ptr<const gf> K_;
    std::vector<gf::elem> root_;     // sigma_{P,1}(x)
    std::vector<int> vM_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int64_t>, gf::elem> memo_;   // (P, j, nu) -> sigma_{P,1} value
};

/* Theta_{P,i}^[j] on F_{p^m}-expansions */
qexpansion theta(residue_character_table const & X, qexpansion const & f, int P, long i, int j);

qexpansion v_operator(qexpansion const & f, long p);   // bound p T
qexpansion u_operator(qexpansion const & f, long p);   // bound T / p

/* Lambda(P, j): keep a_0 and the nu in P^(j+1) M. psi holds the exponents
 * a_{P,1..f_P}; the default is a_{P,i} = p - 1 (Nm_P^(p-1)). */
qexpansion lambda_pj_filter(residue_character_table const & X, qexpansion const & f, int P, int j);
qexpansion lambda_pj_composition(residue_character_table const & X, qexpansion const & f, int P, int j,
                                 std::vector<int64_t> const & psi);
qexpansion lambda_pj(residue_character_table const & X, qexpansion const & f, int P, int j,
                     std::optional<std::vector<int64_t>> psi = std::nullopt);
/* composition of all Lambda(P, j), j < e_P; both routes, asserted equal */
qexpansion lambda(residue_character_table const & X, qexpansion const & f);
/* index filter only: a_0 plus the nu in pM; any coefficient ring */
qexpansion lambda_filter(qexpansion const & f, long p);

/* prod_P prod_j (I - prod_i (Theta_{P,i}^[j])^(p-1)) f, the q-expansion
 * shape of V U when all partial Hasse invariants are set to 1 */
qexpansion vu_product_formula(residue_character_table const & X, qexpansion const & f);

/* p-adic Theta_{P,i}^[j] on a Z_p/p^n expansion, for e_P = f_P = 1. The
 * result is known mod p^(n - j). */
qexpansion padic_theta(qexpansion const & f, long p, int P, long i, int j);
/* the p-adic value of a P-integral element under O_L -> Z_p (e_P = f_P = 1) */
qq padic_embed(field_ptr const & F, prime_data const & P, elem const & a, int prec);

} // namespace hmf

#endif
