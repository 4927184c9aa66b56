#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kochenlab/pyth.hpp"

using namespace kochenlab;

namespace {

MPoly X1() { return MPoly::variable(1, 0); }

RingSpec spec31(long n = 1) { return RingSpec{KochenParams(3, Tau{1, 1}), X1(), n}; }

Rat reeval(const KochenParams& kp, const MPoly& g, const std::vector<Rat>& args) {
    std::vector<Rat> gs;
    for (const Rat& a : args) gs.push_back(gamma_eval(kp, a).value);
    return g.eval_rat(gs);
}

} // namespace

TEST_CASE("family enumeration") {
    KochenParams k2(2, Tau{1, 1}), k3(3, Tau{1, 1});
    auto P2 = enumerate_P(k2, 1);
    CHECK(P2.size() == 9);
    auto P3 = enumerate_P(k3, 1);
    CHECK(P3.size() == 9); // height-1 coefficients carry no denominators
    for (const MPoly& g : P2) {
        CHECK(g.arity() == 1);
        CHECK(g.total_degree() <= 1);
        CHECK(g.height() <= 1);
    }
    CHECK_THROWS_AS(enumerate_P(k2, 0), input_error);
    CHECK_THROWS_AS(enumerate_P(k2, 3, 1000), resource_error);
    // height-2 coefficients for p = 2 must all have odd denominators
    auto P22 = enumerate_P(k2, 2);
    for (const MPoly& g : P22)
        for (const auto& [e, c] : g.terms()) CHECK(val_p(c, 2) >= ExtInt(0));
}

TEST_CASE("direct ring membership") {
    RingSpec s = spec31();
    auto v0 = member_R_pgt(s, Rat(0));
    REQUIRE(v0.verdict == Verdict::Member);
    auto v1 = member_R_pgt(s, Rat(2) / 35);
    REQUIRE(v1.verdict == Verdict::Member);
    // witness re-verifies: x (1 + t b) = a with a, b in g(gamma(Q))
    const auto& w = *v1.witness;
    Rat a = reeval(s.params, s.g, w.u), b = reeval(s.params, s.g, w.w);
    CHECK(Rat(2) / 35 * (1 + Rat(3) * b) == a);

    auto v2 = member_R_pgt(s, Rat(1) / 3);
    REQUIRE(v2.verdict == Verdict::NonMember);
    CHECK(v2.obstruction->val_p);

    // 1/2: ell = 2 applies to g = X1 since 1 + t g(0) = 1
    auto v3 = member_R_pgt(s, Rat(1) / 2);
    REQUIRE(v3.verdict == Verdict::NonMember);
    CHECK(v3.obstruction->ell == 2);

    CHECK_THROWS_AS(member_R_pgt(RingSpec{s.params, X1() * Rat(1, 3), 1}, Rat(0)), input_error);
}

TEST_CASE("bounded integral closure membership") {
    RingSpec s = spec31(2);
    auto v = member_R_pgtn(s, Rat(2) / 35);
    REQUIRE(v.verdict == Verdict::Member);
    CHECK(v.witness->m == 1); // x + a_0 = 0 with a_0 = -2/35 in the ring
    auto v0 = member_R_pgtn(spec31(1), Rat(0));
    CHECK(v0.verdict == Verdict::Member);
    auto vn = member_R_pgtn(s, Rat(1) / 2);
    REQUIRE(vn.verdict == Verdict::NonMember);
    CHECK(vn.obstruction->ell == 2);

    // monotonicity: Member at n stays Member for larger n
    for (long n : {1L, 2L, 3L}) {
        auto vm = member_R_pgtn(spec31(n), Rat(2) / 35);
        CHECK(vm.verdict == Verdict::Member);
    }
}

TEST_CASE("union membership over the finite family") {
    KochenParams k3(3, Tau{1, 1});
    SearchBounds fast;
    fast.height = 25;
    auto v1 = member_R_pn(k3, 1, Rat(-2) / 35, fast);
    CHECK(v1.verdict == Verdict::Member);
    auto v2 = member_R_pn(k3, 1, Rat(1) / 3, fast);
    REQUIRE(v2.verdict == Verdict::NonMember);
    CHECK(v2.obstruction->val_p);
    // 1/2 is a genuine member: for the constant g = 1 and t = -3 the ring
    // R_{3,1,-3} is {1/(1-3)} = {-1/2}, and the degree-1 relation x - 1/2
    // puts 1/2 in the closure; no ell = 2 exclusion can apply to such g
    auto v3 = member_R_pn(k3, 1, Rat(1) / 2, fast);
    REQUIRE(v3.verdict == Verdict::Member);
    CHECK(v3.witness->m == 1);
    {
        RingSpec splus{KochenParams(3, Tau{1, 1}), X1() + MPoly::constant(1, Rat(1)), 1};
        auto vq = member_R_pgt(splus, Rat(1) / 4);
        CHECK(vq.verdict == Verdict::Member); // the counterexample element
    }
}

TEST_CASE("exclusion tests") {
    CHECK(exclusion_root_test(3, 2));
    CHECK(exclusion_root_test(2, 17));
    CHECK_FALSE(exclusion_root_test(3, 5)); // 3^3 - 3 + 1 = 25 = 0 mod 5
    CHECK_THROWS_AS(exclusion_root_test(3, 3), input_error);
    for (Int p = 3; p <= 199; p += 2)
        if (is_prime(p)) CHECK(exclusion_root_test(p, 2));

    CHECK(deep_exclusion_test(7, 3));
    CHECK(deep_exclusion_test(5, 2));
    CHECK_FALSE(deep_exclusion_test(7, 5));
    CHECK_THROWS_AS(deep_exclusion_test(7, 7), input_error);
    // sampled consequence: val_3(gamma_7(x)) >= 1
    KochenParams k7(7, Tau{1, 1});
    for (const Rat& x : rationals_up_to_height(25)) {
        GammaValue g = gamma_eval(k7, x);
        REQUIRE_FALSE(g.pole);
        CHECK(val_p(g.value, 3) >= ExtInt(1));
    }
}

TEST_CASE("proper subring witnesses") {
    auto w3 = proper_subring_witness(3);
    CHECK(w3.ell == 2);
    CHECK(w3.witness == Rat(1) / 2);
    CHECK(w3.samples_checked > 100);
    auto w2 = proper_subring_witness(2);
    CHECK(w2.ell == 17);
    CHECK(w2.witness == Rat(1) / 17);
    auto w101 = proper_subring_witness(101);
    CHECK(w101.ell == 2);
}

TEST_CASE("lower-bound certificates") {
    // toy family {X1}
    auto toy = pi_lower_bound_family({X1()}, 1);
    CHECK(toy.ell == 3);
    CHECK(toy.a == 1);
    CHECK(toy.p == 5);
    lower_bound_verify(toy);

    // full height/degree <= 1 family in one variable
    auto full = pi_lower_bound(1);
    CHECK(full.family.size() == 9);
    CHECK(full.ell == 11);
    CHECK(full.a == 2);
    CHECK(full.p == 71);
    lower_bound_verify(full);

    CHECK_THROWS_AS(pi_lower_bound(0), input_error);
    // a family not closed under g -> -g(-X) is rejected
    CHECK_THROWS_AS(pi_lower_bound_family({X1() + MPoly::constant(1, Rat(1))}, 1), input_error);

    // sampled ring elements: gamma lands in ell Z_(ell), denominators are
    // ell-units, and the quotients stay in Z_(ell)
    for (const auto& cert : {toy, full}) {
        KochenParams kp(cert.p, Tau{1, 1});
        std::vector<Rat> gammas;
        for (const Rat& x : rationals_up_to_height(12)) gammas.push_back(gamma_eval(kp, x).value);
        for (const MPoly& g : cert.family) {
            if (g.arity() != 1) continue;
            Rat g0 = g.coeff({0});
            for (const Rat& gv : gammas) {
                Rat val = g.eval_rat({gv});
                CHECK(val_p(val - g0, cert.ell) >= ExtInt(1));
                Rat den = 1 + Rat(cert.p) * val;
                CHECK(val_p(den, cert.ell) == ExtInt(0));
                CHECK(val_p(Rat(1) / den, cert.ell) == ExtInt(0));
            }
        }
    }
}
