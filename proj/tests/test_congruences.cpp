#include <doctest.h>

#include "hmf/congruences.hpp"
#include "hmf/zeta.hpp"
#include "test_util.hpp"

using namespace hmf;
using namespace testutil;

TEST_CASE("hbar: closed form against the unit-norm image")
{
    for (auto F : {sqrt3(), cubic49(), cubic1944()})
        for (long p : {2, 3, 5, 7})
            for (int n = 1; n <= 3; n++)
                CHECK(hbar_exponent(F, p, n) == hbar_bruteforce(F, p, n));
}

TEST_CASE("local data at 2 for Q(sqrt3)")
{
    auto D = local_abelian_data(sqrt3(), 2);
    CHECK(D.e2 == 2);
    CHECK(D.norm_type == 'B');
    CHECK(D.eps_minus_one == 1);
    CHECK(eps_for_level(D, 1) == 0);
    CHECK(eps_for_level(D, 2) == 0);
    CHECK(eps_for_level(D, 3) == 1);
}

TEST_CASE("a congruence between weights 2 and 26 at 13")
{
    auto r = verify_congruence(sqrt3(), 13, 2, 26);
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == 1);
    CHECK(r.actual == 1);
    CHECK(r.pass);
}

TEST_CASE("congruences at 5 for Q(sqrt3)")
{
    // zeta(-1) is a 5-unit, zeta(-3) has 5 in the denominator
    for (auto [k, kp] : std::vector<std::pair<long, long>>{{2, 6}, {2, 22}, {4, 8}, {4, 24}}) {
        auto r = verify_congruence(sqrt3(), 5, k, kp);
        CHECK(r.pass);
        CHECK(congruence_bound(sqrt3(), 5, k, kp).predicted == r.predicted);
    }
}

TEST_CASE("integrality of the constant term")
{
    auto F = sqrt3();
    for (long p : {2, 3, 5, 7, 11, 13})
        for (long k : {2, 4, 6, 8}) {
            auto r = check_integrality(F, p, k);
            CHECK(r.pass);
            CHECK(r.a0 == zeta_at(F, k) / 4);
        }
    auto bad = check_integrality(cubic49(), 7, 10);
    CHECK(bad.n == 1);
    CHECK(bad.pass);
}

TEST_CASE("the p-th cyclotomic consistency check")
{
    auto s = real_quadratic_p_check(5, 1);
    CHECK(s.k1 == 4);
    CHECK(s.k2 == 2);
    CHECK(s.val1 == -1);
    CHECK(s.val2 == -1);
    CHECK(s.expected == -1);
    CHECK(s.half_weight_applicable);
    CHECK(s.half_weight_holds);
    auto t = real_quadratic_p_check(13, 1);
    CHECK(t.half_weight_holds);
}

TEST_CASE("norm_mod")
{
    // Nm(2 + sqrt3) = 1, Nm(sqrt3) = -3
    CHECK(norm_mod(sqrt3(), {2, 1}, 7) == 1);
    CHECK(norm_mod(sqrt3(), {0, 1}, 7) == 4);
}
