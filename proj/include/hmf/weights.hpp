#ifndef HMF_WEIGHTS_HPP
#define HMF_WEIGHTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmf/field.hpp"

namespace hmf {

/* The residue pairs (P, i), 1 <= i <= f_P, of a field at p, flattened in
 * prime order. */
struct weight_layout {
    long p = 0;
    std::vector<int> e, f, offset;
    std::vector<std::string> labels;

    static weight_layout of(field_ptr const & F, long p);
    int primes() const { return (int)f.size(); }
    int rank() const { return offset.empty() ? 0 : offset.back() + f.back(); }
    /* flat position of (P, i); i is 1-based and read cyclically mod f_P */
    int pos(int P, long i) const;
    bool operator==(weight_layout const & o) const { return p == o.p && e == o.e && f == o.f; }
};

struct residue_weight {
    weight_layout L;
    std::vector<int64_t> a;

    residue_weight() = default;
    explicit residue_weight(weight_layout L_) : L(std::move(L_)), a(L.rank(), 0) {}
    int64_t & at(int P, long i) { return a[L.pos(P, i)]; }
    int64_t at(int P, long i) const { return a[L.pos(P, i)]; }
    bool operator==(residue_weight const & o) const { return L == o.L && a == o.a; }
    residue_weight operator+(residue_weight const & o) const;
    residue_weight operator-(residue_weight const & o) const;
    residue_weight scaled(int64_t c) const;
};

/* exponents of the fundamental characters chi_gamma, one per embedding */
struct universal_weight {
    std::vector<int64_t> a;
    bool operator==(universal_weight const & o) const { return a == o.a; }
    bool is_parallel() const;
};

universal_weight parallel_weight(int g, int64_t k);
residue_weight residue_norm(weight_layout const & L, int64_t k);   // reduction of Nm^k

/* Default embedding assignment: real embeddings in ascending order of the
 * root, packed as e_P copies of (P1,1), then (P1,2), ... */
std::vector<int> default_assignment(field_ptr const & F, weight_layout const & L);
residue_weight reduce_weight(universal_weight const & w, weight_layout const & L, std::vector<int> const & assignment);

residue_weight psi(weight_layout const & L, int P, long i);
qmat psi_matrix(weight_layout const & L);        // row r = psi at flat position r
qmat comparecones_inverse(weight_layout const & L);
zz hasse_lattice_index(weight_layout const & L);
qvec psi_coords(residue_weight const & w);
bool leq_k(residue_weight const & w1, residue_weight const & w2);
bool in_Xk1(residue_weight const & w);

residue_weight frobenius_twist(residue_weight const & w);
qvec frobenius_untwist(weight_layout const & L, qvec const & a);

enum class weight_op_kind { Theta, V, U, MulHasse };
struct weight_op {
    weight_op_kind kind;
    int P = 0;
    long i = 1;
};
residue_weight transform_weight(residue_weight const & w, weight_op const & op);

struct bound_result {
    residue_weight bound;       // integral bound
    qvec rational_bound;        // before rounding, in flat coordinates
    bool exact = false;         // the bound is an equality
    bool strict = false;        // the inequality is known to be strict
    std::string rule;
};
bound_result filtration_bound(weight_op const & op, residue_weight const & current);

struct ordinary_box_result {
    int t = 1, hi = 0;
    std::vector<std::pair<int, int>> box;     // per flat position
    bool totally_ramified = false;
    std::optional<std::pair<int, int>> ramified_variant;
};
ordinary_box_result ordinary_box(weight_layout const & L);

/* Largest n <= max_n such that w1/w2 is trivial on (O_L/p^n)^*. Parallel
 * weights use the exponent formula; other weights are decided at level 1
 * only, through residue characters. */
int weight_congruence_level(field_ptr const & F, universal_weight const & w1, universal_weight const & w2, long p, int max_n);
/* brute force over the unit group of O_L/p^n */
int weight_congruence_level_bruteforce(field_ptr const & F, int64_t k1, int64_t k2, long p, int max_n, uint64_t budget = 3000000);

} // namespace hmf

#endif
