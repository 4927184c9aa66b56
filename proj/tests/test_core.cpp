#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kochenlab/extint.hpp"
#include "kochenlab/fpelem.hpp"
#include "kochenlab/jsonio.hpp"
#include "kochenlab/mpoly.hpp"
#include "kochenlab/primes.hpp"
#include "kochenlab/rat.hpp"
#include "kochenlab/upoly.hpp"

using namespace kochenlab;

TEST_CASE("extended integers") {
    ExtInt inf = ExtInt::infinity();
    CHECK(inf > ExtInt(1000000));
    CHECK(ExtInt(3) + ExtInt(4) == ExtInt(7));
    CHECK(inf + ExtInt(-5) == inf);
    CHECK(std::min(ExtInt(2), inf) == ExtInt(2));
    CHECK((-ExtInt(3)) == ExtInt(-3));
    CHECK(ExtInt(4) * 3 == ExtInt(12));
}

TEST_CASE("p-adic valuation basics") {
    CHECK(val_p(Rat(12), 2) == ExtInt(2));
    CHECK(val_p(Rat(12), 3) == ExtInt(1));
    CHECK(val_p(Rat(5, 8), 2) == ExtInt(-3));
    CHECK(val_p(Rat(0), 7) == ExtInt::infinity());
    CHECK(val_p(Rat(-9, 25), 5) == ExtInt(-2));
    CHECK_THROWS_AS(val_p(Rat(1), 6), input_error);
}

TEST_CASE("valuation is a homomorphism and ultrametric") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> d(-500, 500);
    const long primes[] = {2, 3, 5, 7};
    for (int iter = 0; iter < 2500; ++iter) {
        long an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 1;
        Rat a(an, ad), b(bn, bd);
        a.canonicalize();
        b.canonicalize();
        for (long p : primes) {
            ExtInt va = val_p(a, p), vb = val_p(b, p);
            CHECK(val_p(a * b, p) == va + vb);
            ExtInt vs = val_p(a + b, p);
            CHECK(vs >= std::min(va, vb));
            if (va != vb) CHECK(vs == std::min(va, vb));
        }
    }
}

TEST_CASE("residues mod p") {
    CHECK(residue_p(Rat(7, 3), 5) == FpElem(5, 4)); // 7 * 3^{-1} = 2*2 = 4 mod 5
    CHECK(residue_p(Rat(10), 5) == FpElem(5, 0));
    CHECK_THROWS_AS(residue_p(Rat(1, 5), 5), domain_error);
    CHECK(FpElem(7, 3).inv() == FpElem(7, 5));
    CHECK(FpElem(11, 2).pow(10) == FpElem(11, 1));
}

TEST_CASE("heights and enumeration order") {
    CHECK(height_rat(Rat(3, 7)) == 7);
    CHECK(height_rat(Rat(-22, 7)) == 22);
    CHECK(height_rat(Rat(0)) == 1);
    auto v = rationals_up_to_height(3);
    // 0, then height shells in increasing order, sign pairs together.
    CHECK(v[0] == Rat(0));
    CHECK(v[1] == Rat(1));
    CHECK(v[2] == Rat(-1));
    for (const Rat& r : v) CHECK(height_rat(r) <= 3);
    // Every reduced a/b with max(|a|, b) <= 3 shows up exactly once.
    CHECK(v.size() == 15); // 0 plus sign pairs of 1, 2, 1/2, 3, 3/2, 1/3, 2/3
    std::set<std::string> seen;
    for (const Rat& r : v) CHECK(seen.insert(rat_to_string(r)).second);
}

TEST_CASE("primes in arithmetic progressions") {
    auto q = dirichlet_prime(1, 4, nullptr, 1000);
    REQUIRE(q.has_value());
    CHECK(*q == 5);
    auto r = dirichlet_prime(2, 3, [](const Int& n) { return n > 40; }, 1000);
    REQUIRE(r.has_value());
    CHECK(*r == 41);
    CHECK_THROWS_AS(dirichlet_prime(2, 4, nullptr, 100), input_error);
    CHECK_FALSE(dirichlet_prime(1, 1000000007, nullptr, 10).has_value());
}

TEST_CASE("multivariate polynomial arithmetic") {
    // f = X1^2 + 2 X1 X2, g = X2 - 3
    MPoly f(2), g(2);
    f.add_term({2, 0}, 1);
    f.add_term({1, 1}, 2);
    g.add_term({0, 1}, 1);
    g.add_term({0, 0}, -3);
    CHECK(f.total_degree() == 2);
    CHECK(f.height() == 2);
    MPoly h = f * g;
    CHECK(h.coeff({2, 1}) == 1);
    CHECK(h.coeff({2, 0}) == -3);
    CHECK(h.coeff({1, 2}) == 2);
    CHECK(h.coeff({1, 1}) == -6);
    CHECK(h.total_degree() == 3);
    CHECK((f - f).is_zero());
    CHECK(f.eval_rat({Rat(3), Rat(1, 2)}) == Rat(12));
    MPoly fp = f.pow(3);
    CHECK(fp.eval_rat({Rat(3), Rat(1, 2)}) == Rat(1728));

    MPoly fr = f.remap(3, {2, 0});
    CHECK(fr.arity() == 3);
    CHECK(fr.eval_rat({Rat(1, 2), Rat(99), Rat(3)}) == Rat(12));

    MPoly fs = f.substitute_tail(1, {Rat(1, 2)});
    CHECK(fs.arity() == 1);
    CHECK(fs.eval_rat({Rat(3)}) == Rat(12));
}

TEST_CASE("polynomial JSON round trip") {
    MPoly f(3);
    f.add_term({1, 0, 2}, Rat(-7, 3));
    f.add_term({0, 0, 0}, Rat(5));
    json j = mpoly_to_json(f);
    CHECK(j["arity"] == 3);
    MPoly g = mpoly_from_json(j);
    CHECK(f == g);
    CHECK_THROWS_AS(mpoly_from_json(json::parse("{\"arity\":-1,\"terms\":[]}")), input_error);
    CHECK_THROWS_AS(mpoly_from_json(json::parse("{\"terms\":[]}")), input_error);
}

TEST_CASE("univariate division, gcd, xgcd") {
    // f = (T^2 + 1)(T - 2), g = (T^2 + 1)(T + 3)
    UPoly t2p1({Rat(1), Rat(0), Rat(1)});
    UPoly f = t2p1 * UPoly({Rat(-2), Rat(1)});
    UPoly g = t2p1 * UPoly({Rat(3), Rat(1)});
    auto [q, r] = f.divmod(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(upoly_gcd(f, g) == t2p1);
    auto x = upoly_xgcd(f, g);
    CHECK(x.g == t2p1);
    CHECK(x.u * f + x.v * g == x.g);
    auto coprime = upoly_xgcd(UPoly({Rat(-2), Rat(1)}), UPoly({Rat(3), Rat(1)}));
    CHECK(coprime.g == UPoly::constant(1));
    CHECK(coprime.u * UPoly({Rat(-2), Rat(1)}) + coprime.v * UPoly({Rat(3), Rat(1)}) == UPoly::constant(1));
}

TEST_CASE("resultants") {
    UPoly f({Rat(-1), Rat(0), Rat(1)}); // T^2 - 1
    UPoly g({Rat(0), Rat(0), Rat(0), Rat(1)}); // T^3
    // Res(f, g) = lc(f)^deg g * g(1) * g(-1) = -1
    CHECK(upoly_resultant(f, g) == Rat(-1));
    CHECK(upoly_resultant(f, f.derivative()) == Rat(-4));
    CHECK(upoly_resultant(f, UPoly({Rat(-1), Rat(1)})) == Rat(0));
    // Multiplicativity and swap symmetry on random samples.
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int iter = 0; iter < 200; ++iter) {
        auto rnd = [&](int deg) {
            std::vector<Rat> cs(deg + 1);
            for (auto& c : cs) c = Rat(d(rng));
            if (cs.back() == 0) cs.back() = 1;
            return UPoly(cs);
        };
        UPoly a = rnd(2), b = rnd(2), c = rnd(3);
        CHECK(upoly_resultant(a * b, c) == upoly_resultant(a, c) * upoly_resultant(b, c));
        Rat sym = upoly_resultant(c, a);
        if ((a.degree() * c.degree()) % 2 != 0) sym = -sym;
        CHECK(upoly_resultant(a, c) == sym);
    }
}

TEST_CASE("multivariate coprimality probe") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly f = x * x + y; // irreducible
    MPoly g = x * y - MPoly::constant(2, 1);
    CHECK(mpoly_coprime(f, g));
    CHECK_FALSE(mpoly_coprime(f * g, g));
    CHECK_FALSE(mpoly_coprime(f, MPoly(2)));
    CHECK(mpoly_coprime(f, MPoly::constant(2, 5)));
}

TEST_CASE("error taxonomy exit codes") {
    CHECK(exit_code_for(input_error("x")) == 2);
    CHECK(exit_code_for(resource_error("x")) == 3);
    CHECK(exit_code_for(invariant_violation("x")) == 4);
    CHECK(exit_code_for(domain_error("x")) == 2);
}
