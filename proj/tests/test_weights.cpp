#include <doctest.h>

#include "hmf/json_io.hpp"
#include "hmf/weights.hpp"
#include "test_util.hpp"

using namespace hmf;
using namespace testutil;

TEST_CASE("layouts")
{
    auto L = weight_layout::of(cubic1944(), 2);
    CHECK(L.primes() == 2);
    CHECK(L.rank() == 2);
    auto M = weight_layout::of(cubic49(), 2);
    CHECK(M.rank() == 3);
    CHECK(M.pos(0, 4) == M.pos(0, 1));   // cyclic in i
    CHECK(M.pos(0, 0) == M.pos(0, 3));
}

TEST_CASE("Hasse weights and their lattice")
{
    // inert in a quadratic field: det [[-1, p], [p, -1]]
    auto L = weight_layout::of(sqrt3(), 5);
    CHECK(hasse_lattice_index(L) == 24);
    auto P1 = psi(L, 0, 1);
    CHECK(P1.at(0, 1) == -1);
    CHECK(P1.at(0, 2) == 5);
    // totally ramified: psi = Psi^(p-1), index p-1
    auto R = weight_layout::of(cubic1944(), 3);
    CHECK(hasse_lattice_index(R) == 2);
    CHECK(psi(R, 0, 1).at(0, 1) == 2);
    for (long p : {2, 3, 5, 7}) {
        auto W = weight_layout::of(cubic49(), p);
        CHECK(in_Xk1(psi(W, 0, 1)));
        residue_weight e(W);
        e.a[0] = 1;
        CHECK_FALSE(in_Xk1(e));
    }
}

TEST_CASE("Frobenius twist")
{
    auto L = weight_layout::of(cubic49(), 3);
    residue_weight w(L);
    w.at(0, 1) = 1;
    w.at(0, 2) = 2;
    w.at(0, 3) = 5;
    auto t = frobenius_twist(w);
    CHECK(t.at(0, 1) == 6);
    CHECK(t.at(0, 2) == 15);
    CHECK(t.at(0, 3) == 3);
    qvec back = frobenius_untwist(L, qvec(t.a.begin(), t.a.end()));
    for (size_t s = 0; s < back.size(); s++)
        CHECK(back[s] == w.a[s]);
    // parallel weights: Nm -> Nm^p
    CHECK(frobenius_twist(residue_norm(L, 1)) == residue_norm(L, 3));
}

TEST_CASE("the order <=_k")
{
    auto L = weight_layout::of(sqrt3(), 5);
    residue_weight z(L);
    CHECK(leq_k(z, psi(L, 0, 1)));
    CHECK(leq_k(z, psi(L, 0, 1) + psi(L, 0, 2)));
    CHECK_FALSE(leq_k(psi(L, 0, 1), z));
    residue_weight e(L);
    e.a[0] = 1;
    // chi_1 has psi-coordinates (1, 5) / 24 >= 0
    CHECK(leq_k(z, e));
    CHECK_FALSE(leq_k(z, e.scaled(-1)));
}

TEST_CASE("reduction of universal weights")
{
    auto F = sqrt3();
    auto L = weight_layout::of(F, 11);
    auto a = default_assignment(F, L);
    CHECK(reduce_weight(parallel_weight(2, 3), L, a) == residue_norm(L, 3));
    auto R = weight_layout::of(F, 3);
    // both embeddings go to the single pair (P1, 1) at a ramified prime
    CHECK(reduce_weight(parallel_weight(2, 1), R, default_assignment(F, R)).at(0, 1) == 2);
}

TEST_CASE("weight congruence levels: exponent formula against brute force")
{
    auto F = sqrt3();
    for (long p : {3, 5, 7, 11, 13})
        for (auto [k1, k2] : std::vector<std::pair<long, long>>{{2, 26}, {2, 14}, {4, 16}, {2, 4}})
            CHECK(weight_congruence_level(F, parallel_weight(2, k1), parallel_weight(2, k2), p, 3) ==
                  weight_congruence_level_bruteforce(F, k1, k2, p, 3));
}

TEST_CASE("weight JSON")
{
    auto F = cubic1944();
    residue_weight w(weight_layout::of(F, 2));
    w.at(0, 1) = 4;
    w.at(1, 1) = -2;
    auto j = weight_to_json(w);
    CHECK(j["kind"] == "residue");
    CHECK(j["exps"]["P1,1"] == 4);
    CHECK(residue_weight_from_json(F, j) == w);
    CHECK(universal_weight_from_json(weight_to_json(parallel_weight(3, 2))) == parallel_weight(3, 2));
    CHECK_THROWS_AS(residue_weight_from_json(F, json::parse("{\"kind\":\"residue\",\"p\":2,\"exps\":{\"P9,1\":1}}")), hmf_error);
}
