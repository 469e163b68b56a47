#ifndef HMF_TEST_UTIL_HPP
#define HMF_TEST_UTIL_HPP

#include <random>

#include "hmf/field.hpp"
#include "hmf/qexp.hpp"

namespace testutil {

using namespace hmf;

inline field_ptr sqrt3() { return number_field::make({-3, 0, 1}); }
inline field_ptr cubic49() { return number_field::make({1, -2, -1, 1}); }
inline field_ptr cubic1944() { return number_field::make({-6, -9, 0, 1}); }

inline elem el(std::initializer_list<long> c)
{
    elem a;
    for (long x : c)
        a.push_back(qq(x));
    return a;
}

// rational coefficients in [-9, 9] on every index up to T
inline qexpansion random_rational(cusp const & C, qq const & T, std::mt19937_64 & rng)
{
    std::uniform_int_distribution<int> d(-9, 9);
    qexpansion f(C, coeff_ring::rationals(), T);
    f.set_a0({qq(d(rng)), {}});
    for (auto const & nu : enumerate_totally_positive(C.M, T))
        f.set_unchecked(nu, {qq(d(rng)), {}});
    return f;
}

inline qexpansion random_fq(cusp const & C, coeff_ring const & R, qq const & T, std::mt19937_64 & rng)
{
    uint64_t q = R.fq->order().get_ui();
    qexpansion f(C, R, T);
    f.set_a0({0, R.fq->from_index(rng() % q)});
    for (auto const & nu : enumerate_totally_positive(C.M, T))
        f.set_unchecked(nu, {0, R.fq->from_index(rng() % q)});
    return f;
}

} // namespace testutil

#endif
