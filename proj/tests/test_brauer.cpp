#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kochenlab/brauer.hpp"
#include "kochenlab/errors.hpp"
#include "kochenlab/fq.hpp"

using namespace kochenlab;

namespace {

std::set<Place> odd_support_places(const Rat& a, const Rat& b) {
    std::set<Place> out{Place::real(), Place::at(2)};
    for (const Rat& x : {a, b}) {
        Int n = abs(x.get_num()) * x.get_den();
        while (n % 2 == 0) n /= 2;
        for (Int d = 3; d * d <= n; d += 2)
            while (n % d == 0) {
                out.insert(Place::at(d));
                n /= d;
            }
        if (n > 2) out.insert(Place::at(n));
    }
    return out;
}

Rat random_nonzero(std::mt19937& rng, const std::vector<Rat>& pool) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    Rat x;
    do {
        x = pool[pick(rng)];
    } while (x == 0);
    return x;
}

} // namespace

TEST_CASE("hilbert symbols") {
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::real()) == -1);
    CHECK(hilbert_symbol(Rat(2), Rat(5), Place::at(5)) == -1);
    CHECK(hilbert_symbol(Rat(2), Rat(5), Place::at(2)) == -1);
    CHECK(hilbert_symbol(Rat(2), Rat(5), Place::at(3)) == +1);
    CHECK(hilbert_symbol(Rat(2), Rat(5), Place::real()) == +1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::at(2)) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::at(3)) == +1);
    CHECK(hilbert_symbol(Rat(-1), Rat(3), Place::at(3)) == -1);
    for (const Place& v : {Place::real(), Place::at(2), Place::at(5), Place::at(7)}) {
        CHECK(hilbert_symbol(Rat(1), Rat(-7), v) == +1);
        CHECK(hilbert_symbol(Rat(1) / 4, Rat(6), v) == +1); // 1/4 is a square
    }
    // symmetric in the two arguments
    CHECK(hilbert_symbol(Rat(5), Rat(2), Place::at(5)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), Place::real()), input_error);
    CHECK_THROWS_AS(hilbert_symbol(Rat(1), Rat(0), Place::at(2)), input_error);
    CHECK_THROWS_AS(hilbert_symbol(Rat(1), Rat(1), Place::at(6)), input_error);
}

TEST_CASE("reciprocity and bilinearity") {
    std::vector<Rat> pool = rationals_up_to_height(50);
    std::mt19937 rng(20260823);
    for (int iter = 0; iter < 1000; ++iter) {
        Rat a = random_nonzero(rng, pool), b = random_nonzero(rng, pool);
        int prod = 1;
        for (const Place& v : odd_support_places(a, b)) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == +1);
    }
    std::vector<Rat> small = rationals_up_to_height(20);
    std::vector<Place> places{Place::real(), Place::at(2), Place::at(3), Place::at(5),
                              Place::at(7)};
    for (int iter = 0; iter < 300; ++iter) {
        Rat a = random_nonzero(rng, small);
        Rat b1 = random_nonzero(rng, small), b2 = random_nonzero(rng, small);
        for (const Place& v : places)
            CHECK(hilbert_symbol(a, b1 * b2, v) ==
                  hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
    }
}

TEST_CASE("ramification sets") {
    CHECK(ramification_set({Rat(-1), Rat(-1)}) ==
          std::set<Place>{Place::at(2), Place::real()});
    CHECK(ramification_set({Rat(2), Rat(5)}) == std::set<Place>{Place::at(2), Place::at(5)});
    CHECK(ramification_set({Rat(1), Rat(7)}) == std::set<Place>{});
    CHECK(ramification_set({Rat(5), Rat(13)}) == std::set<Place>{Place::at(5), Place::at(13)});
    // scaling by squares changes nothing
    CHECK(ramification_set({Rat(8), Rat(45)}) == std::set<Place>{Place::at(2), Place::at(5)});
    CHECK_THROWS_AS(ramification_set({Rat(0), Rat(3)}), input_error);
}

TEST_CASE("construct AB") {
    auto [A, B] = construct_AB(5, 2, 13);
    CHECK(ramification_set(A) == std::set<Place>{Place::at(5), Place::at(2)});
    CHECK(ramification_set(B) == std::set<Place>{Place::at(5), Place::at(13)});
    // neither splits at p, exactly one is ramified at any other place, both
    // split at the real place
    std::set<Place> ra = ramification_set(A), rb = ramification_set(B);
    CHECK(ra.count(Place::at(5)) == 1);
    CHECK(rb.count(Place::at(5)) == 1);
    CHECK(ra.count(Place::real()) == 0);
    CHECK(rb.count(Place::real()) == 0);
    std::set<Place> common;
    for (const Place& v : ra)
        if (rb.count(v)) common.insert(v);
    CHECK(common == std::set<Place>{Place::at(5)});

    auto [A2, B2] = construct_AB(2, 5, 13);
    CHECK(ramification_set(A2) == std::set<Place>{Place::at(2), Place::at(5)});
    CHECK(ramification_set(B2) == std::set<Place>{Place::at(2), Place::at(13)});

    CHECK_THROWS_AS(construct_AB(5, 5, 13), input_error);
    CHECK_THROWS_AS(construct_AB(4, 3, 13), input_error);
}

TEST_CASE("brauer classes") {
    BrauerClass c1 = brauer_class_prescribe(
        2, {{Place::at(5), Rat(1) / 2}, {Place::at(2), Rat(1) / 2}});
    REQUIRE(c1.realization.has_value());
    CHECK(ramification_set(*c1.realization) ==
          std::set<Place>{Place::at(2), Place::at(5)});
    CHECK(c1.invariants.size() == 2);

    BrauerClass c2 = brauer_class_prescribe(
        3, {{Place::at(7), Rat(1) / 3}, {Place::at(13), Rat(2) / 3}});
    CHECK(c2.invariants.size() == 2);
    CHECK(!c2.realization.has_value());

    // values are read modulo 1
    BrauerClass c3 = brauer_class_prescribe(
        2, {{Place::at(5), Rat(3) / 2}, {Place::at(2), Rat(-1) / 2}});
    CHECK(c3.invariants.at(Place::at(5)) == Rat(1) / 2);
    CHECK(c3.invariants.at(Place::at(2)) == Rat(1) / 2);

    BrauerClass trivial = brauer_class_prescribe(2, {});
    REQUIRE(trivial.realization.has_value());
    CHECK(ramification_set(*trivial.realization).empty());

    CHECK_THROWS_AS(brauer_class_prescribe(2, {{Place::at(5), Rat(1) / 2}}), input_error);
    CHECK_THROWS_AS(brauer_class_prescribe(2, {{Place::at(5), Rat(1) / 3},
                                               {Place::at(7), Rat(2) / 3}}),
                    input_error);
    CHECK_THROWS_AS(brauer_class_prescribe(3, {{Place::real(), Rat(1) / 2},
                                               {Place::at(7), Rat(1) / 2}}),
                    input_error);
    CHECK_THROWS_AS(brauer_class_prescribe(4, {}), input_error);
}

TEST_CASE("reduced norm and trace") {
    QuaternionAlgebra A{Rat(2), Rat(5)};
    CHECK(nrd(A, {Rat(1), Rat(0), Rat(0), Rat(0)}) == 1);
    CHECK(trd(A, {Rat(1), Rat(0), Rat(0), Rat(0)}) == 2);
    CHECK(nrd(A, {Rat(3), Rat(2), Rat(0), Rat(0)}) == 1);
    CHECK(trd(A, {Rat(3), Rat(2), Rat(0), Rat(0)}) == 6);
    QuaternionAlgebra H{Rat(-1), Rat(-1)};
    CHECK(nrd(H, {Rat(0), Rat(1), Rat(0), Rat(0)}) == 1);
    CHECK(trd(H, {Rat(0), Rat(1), Rat(0), Rat(0)}) == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    auto rand_quat = [&]() {
        Quat q;
        for (int i = 0; i < 4; ++i) q[i] = Rat(coef(rng)) / den(rng);
        return q;
    };
    for (const QuaternionAlgebra& alg :
         {A, H, QuaternionAlgebra{Rat(5), Rat(13)}, QuaternionAlgebra{Rat(-2), Rat(3)}}) {
        for (int iter = 0; iter < 50; ++iter) {
            Quat x = rand_quat(), y = rand_quat();
            CHECK(nrd(alg, qmul(alg, x, y)) == nrd(alg, x) * nrd(alg, y));
        }
    }
}

TEST_CASE("sampled trace differences") {
    QuaternionAlgebra A{Rat(2), Rat(5)};
    std::set<Rat> t1 = sample_T(A, 1);
    CHECK(t1.count(Rat(0)) == 1);
    std::set<Rat> t3 = sample_T(A, 3);
    CHECK(t3.count(Rat(4)) == 1);
    CHECK(val_p(Rat(4), 2) >= ExtInt(0));
    CHECK(val_p(Rat(4), 5) >= ExtInt(0));
    for (long H = 1; H <= 6; ++H) {
        std::set<Rat> t = sample_T(A, H);
        CHECK(t.count(Rat(1) / 2) == 0);
        for (const Rat& v : t) {
            if (v == 0) continue;
            CHECK(val_p(v, 2) >= ExtInt(0));
            CHECK(val_p(v, 5) >= ExtInt(0));
        }
    }
    CHECK_THROWS_AS(sample_T(A, 0), input_error);
}

TEST_CASE("compiled T family") {
    QuaternionAlgebra A{Rat(2), Rat(5)};
    DiophFamily TA = compile_T_family(A);
    CHECK(TA.n == 1);
    CHECK(TA.m == 8);
    CHECK(TA.polys.size() == 3);

    // sampled witnesses satisfy the compiled relations exactly
    for (const auto& [v, wit] : sample_T_witnessed(A, 3)) {
        std::vector<Rat> pt(9);
        pt[0] = v;
        for (int i = 0; i < 4; ++i) pt[1 + i] = wit.x[i];
        for (int i = 0; i < 4; ++i) pt[5 + i] = wit.y[i];
        for (const MPoly& g : TA.polys) CHECK(g.eval_rat(pt) == 0);
    }

    // over F_q the family agrees with direct norm-one enumeration
    for (int q : {3, 5}) {
        FqField F(q);
        int a = F.from_rat(A.a), b = F.from_rat(A.b);
        std::set<int> traces;
        for (int x0 = 0; x0 < q; ++x0)
            for (int x1 = 0; x1 < q; ++x1)
                for (int x2 = 0; x2 < q; ++x2)
                    for (int x3 = 0; x3 < q; ++x3) {
                        int n = F.sub(F.mul(x0, x0), F.mul(a, F.mul(x1, x1)));
                        n = F.sub(n, F.mul(b, F.mul(x2, x2)));
                        n = F.add(n, F.mul(F.mul(a, b), F.mul(x3, x3)));
                        if (n == F.one()) traces.insert(F.add(x0, x0));
                    }
        std::set<std::vector<int>> expect;
        for (int s : traces)
            for (int s2 : traces) expect.insert({F.sub(s, s2)});
        CHECK(eval_over_Fq(TA, q) == expect);
    }
}

TEST_CASE("compiled D family") {
    KochenParams k5(5, Tau{1, 1});
    QuaternionAlgebra A{Rat(2), Rat(5)}, B{Rat(5), Rat(13)};
    DiophFamily D = compile_D_family(k5, A, B);
    CHECK(D.n == 1);
    CHECK(D.m == 40);
    CHECK(D.polys.size() == 16);

    CHECK(d_family_member_Q(k5, A, B, Rat(0), 3).verdict == Verdict::Member);
    CHECK(d_family_member_Q(k5, A, B, Rat(7), 10).verdict == Verdict::Member);
    auto bad = d_family_member_Q(k5, A, B, Rat(1) / 5, 3);
    REQUIRE(bad.verdict == Verdict::NonMember);
    CHECK(bad.obstruction->val_p);

    CHECK_THROWS_AS(compile_D_family(KochenParams(5, Tau{1, 2}), A, B), unsupported_error);
    CHECK_THROWS_AS(compile_D_family(KochenParams(5, Tau{2, 1}), A, B), unsupported_error);
}
