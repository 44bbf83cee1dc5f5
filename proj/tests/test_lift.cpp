#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flipsym/lift.hpp"
#include "flipsym/search.hpp"
#include "flipsym/seeds.hpp"
#include "helpers.hpp"

using namespace flipsym;
namespace ft = flipsym::test;

namespace {

// LiftState holding the integer scheme's coefficients as residues mod 2^m.
LiftState state_from_int(const IntScheme& s, int m) {
    REQUIRE(s.group == Group::C3);
    LiftState st;
    st.n = s.n;
    st.m = m;
    st.k = int(s.orbits.size());
    st.fixed = s.fixed;
    st.partition = s.partition;
    const uint64_t mask = (uint64_t(1) << m) - 1;
    const int nn = s.n * s.n;
    st.coeffs.assign(st.variables(), 0);
    for (int l = 0; l < st.k; ++l) {
        const IntMatrix* fam[3] = {&s.orbits[l].a, &s.orbits[l].b, &s.orbits[l].c};
        for (int f = 0; f < 3; ++f)
            for (int cell = 0; cell < nn; ++cell)
                st.coeffs[std::size_t(l * 3 + f) * nn + cell] =
                    uint64_t(fam[f]->v[cell]) & mask;
    }
    return st;
}

// The classic integer scheme regrouped into cyclic orbits: the orbit
// representative and its mirror image.
IntScheme strassen_c3() {
    const IntScheme z = ft::strassen_z();
    IntScheme s;
    s.n = 2;
    s.group = Group::C3;
    s.partition = z.partition;
    s.fixed = z.fixed;
    s.orbits.push_back(z.orbits[0]);
    s.orbits.push_back(act(GroupElement{0, 1}, z.orbits[0]));
    return s;
}

bool residual_is_zero(const LiftState& st, int order) {
    for (uint64_t v : brent_residual(st, order))
        if (v)
            return false;
    return true;
}

}  // namespace

TEST_CASE("the exact integer scheme has zero residual at every order") {
    const IntScheme s = strassen_c3();
    REQUIRE(verify_int(s));
    for (int m : {1, 2, 4, 8, 16}) {
        LiftState st = state_from_int(s, m);
        CHECK(residual_is_zero(st, m));
    }
}

TEST_CASE("the mod-2 image of a verified scheme has zero residual at order 1") {
    for (const Scheme& s :
         {ft::strassen_f2(), make_start(3, Group::C3, parse_partition("{1,3},{2}")),
          make_start(2, Group::C3xZ2, parse_partition("{1},{2}"))}) {
        LiftState st = lift_state_from(s);
        CHECK(st.m == 1);
        CHECK(residual_is_zero(st, 1));
    }
}

TEST_CASE("flipping one coefficient bit breaks the residual") {
    LiftState st = lift_state_from(ft::strassen_f2());
    st.coeffs[0] ^= 1;
    CHECK_FALSE(residual_is_zero(st, 1));
}

TEST_CASE("schemes failing F2 verification are rejected") {
    Scheme broken = ft::strassen_f2();
    broken.orbits.clear();
    CHECK_THROWS_AS(lift_state_from(broken), std::invalid_argument);
    CHECK_THROWS_AS(lift(broken), std::invalid_argument);
}

TEST_CASE("plain schemes cannot be lifted through the cyclic system") {
    Scheme plain;
    plain.n = 1;
    plain.group = Group::None;
    plain.fixed.emplace_back(BitMatrix(1, 1), BitMatrix(1, 1), BitMatrix(1, 1));
    CHECK_THROWS_AS(lift_state_from(plain), std::invalid_argument);
}

TEST_CASE("lifting the rank-7 scheme converges at order 2 with unit coefficients") {
    const LiftResult result = lift(ft::strassen_f2());
    REQUIRE(result.scheme);
    CHECK(verify_int(*result.scheme));
    REQUIRE(!result.log.empty());
    CHECK(result.log[0].attempt == 0);
    CHECK(result.log[0].order_reached == 2);
    CHECK(result.log[0].lifted);
    for (const auto& t : result.scheme->orbits)
        for (const IntMatrix* m : {&t.a, &t.b, &t.c})
            for (int64_t v : m->v)
                CHECK((v == -1 || v == 0 || v == 1));
    // the mod-2 image reproduces the input's cyclic representatives
    const Scheme back = mod2(*result.scheme);
    CHECK(verify_f2(back));
    CHECK(ft::odd_multiset(expand(back)) == ft::odd_multiset(expand(ft::strassen_f2())));
}

TEST_CASE("an already-exact state is stationary under the step") {
    // The standard algorithm's cyclic form has 0/1 coefficients that solve
    // the equations exactly over the integers.
    const Scheme standard = make_start(2, Group::C3, parse_partition("{1},{2}"));
    LiftState st = lift_state_from(standard);
    const std::vector<uint64_t> coeffs = st.coeffs;
    for (int step = 0; step < 3; ++step) {
        auto next = hensel_step(st);
        REQUIRE(next);
        CHECK(next->m == st.m + 1);
        CHECK(next->coeffs == coeffs);  // particular solution is y = 0
        st = *next;
    }
    CHECK(verify_int(balanced_scheme(st)));
}

TEST_CASE("accepted steps vanish at the refined order") {
    for (const Scheme& s :
         {ft::strassen_f2(), make_start(3, Group::C3, parse_partition("{1,3},{2}"))}) {
        LiftState st = lift_state_from(s);
        const Gf2Matrix jac = brent_jacobian(st);
        HenselOptions options;
        options.jacobian = &jac;
        for (int step = 0; step < 4; ++step) {
            auto next = hensel_step(st, options);
            REQUIRE(next);
            CHECK(residual_is_zero(*next, next->m));
            st = *next;
        }
    }
}

TEST_CASE("stepping from an unbalanced residual is a precondition error") {
    LiftState st = lift_state_from(ft::strassen_f2());
    st.coeffs[0] ^= 1;
    CHECK_THROWS_AS(hensel_step(st), std::invalid_argument);
}

TEST_CASE("the jacobian matches finite differences mod 4 divided by 2") {
    Xoshiro256 rng(17);
    for (int n : {2, 3}) {
        // random coefficient state at order 2 over a couple of orbits
        LiftState st;
        st.n = n;
        st.m = 2;
        st.k = 3;
        const int nn = n * n;
        st.coeffs.assign(st.variables(), 0);
        for (auto& c : st.coeffs)
            c = rng.below(4);
        IntRankOneTensor fixed{IntMatrix(n), IntMatrix(n), IntMatrix(n)};
        for (int i = 0; i < n; ++i)
            fixed.a.at(i, i) = fixed.b.at(i, i) = fixed.c.at(i, i) = 1;
        st.fixed.push_back(fixed);

        const Gf2Matrix jac = brent_jacobian(st);
        const std::vector<uint64_t> base = brent_residual(st, 2);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t v = rng.below(st.variables());
            LiftState perturbed = st;
            perturbed.coeffs[v] = (perturbed.coeffs[v] + 2) & 3;
            const std::vector<uint64_t> shifted = brent_residual(perturbed, 2);
            for (std::size_t q = 0; q < base.size(); ++q) {
                const uint64_t diff = (shifted[q] - base[q]) & 3;
                REQUIRE(diff % 2 == 0);
                CHECK((diff >> 1) == uint64_t(jac.get(q, v)));
            }
        }
    }
}

TEST_CASE("searched schemes lift to integer schemes") {
    // 2x2: walk to rank 7, lift, verify exactly
    WalkParams params22;
    params22.limit = 100000;
    params22.plus_interval = 100;
    params22.target_rank = 7;
    params22.seed = 5;
    SearchOptions one;
    one.workers = 1;
    WalkOutcome found22 =
        run_parallel(make_start(2, Group::C3xZ2, parse_partition("{1,2}")), params22, one);
    REQUIRE(found22.best_rank == 7);
    const LiftResult lifted22 = lift(found22.best);
    REQUIRE(lifted22.scheme);
    CHECK(verify_int(*lifted22.scheme));
    CHECK(lifted22.scheme->rank() == 7);
    CHECK(verify_f2(mod2(*lifted22.scheme)));

    // 3x3: walk to rank 23, lift, verify exactly
    WalkParams params33;
    params33.limit = 10000000;
    params33.plus_interval = 5000;
    params33.target_rank = 23;
    params33.seed = 3;
    SearchOptions two;
    two.workers = 2;
    WalkOutcome found33 =
        run_parallel(make_start(3, Group::C3, parse_partition("{1,3},{2}")), params33, two);
    REQUIRE(found33.best_rank == 23);
    const LiftResult lifted33 = lift(found33.best);
    REQUIRE(lifted33.scheme);
    CHECK(verify_int(*lifted33.scheme));
    CHECK(lifted33.scheme->rank() == 23);
    CHECK(verify_f2(mod2(*lifted33.scheme)));
}
