// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "kochenlab/brauer.hpp"
#include "kochenlab/dioph.hpp"
#include "kochenlab/errors.hpp"
#include "kochenlab/fq.hpp"
#include "kochenlab/kochen.hpp"
#include "kochenlab/numberfield.hpp"
#include "kochenlab/pyth.hpp"

using namespace kochenlab;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::vector<Rat> sample_pool(long H) { return rationals_up_to_height(H); }

// ---- 1: operator valuation table ----
void crit_valuation_table() {
    std::mt19937 rng(101);
    std::vector<Rat> pool = sample_pool(40);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::vector<KochenParams> combos;
    for (long p : {2L, 3L, 5L, 7L, 11L})
        for (Tau tau : {Tau{1, 1}, Tau{1, 2}, Tau{2, 1}}) combos.emplace_back(p, tau);
    for (int i = 0; i < 10000; ++i) {
        Rat x = pool[pick(rng)];
        for (const KochenParams& kp : combos) {
            GammaValue g = gamma_eval(kp, x);
            GammaPrediction pr = gamma_valuation_predict(kp, x);
            if (g.pole) {
                require(pr.tag == GammaCase::Pole, "pole not predicted");
            } else {
                require(pr.tag != GammaCase::Pole, "pole wrongly predicted");
                require(val_p(g.value, kp.p) == pr.valuation, "valuation mismatch");
            }
        }
    }
}

// ---- 2: exclusion primes ----
void crit_exclusion_primes() {
    for (long p = 3; p <= 199; p += 2)
        if (is_prime(Int(p))) require(exclusion_root_test(p, 2), "odd-prime exclusion at 2");
    require(exclusion_root_test(2, 17), "exclusion at 17 for p = 2");
    std::mt19937 rng(202);
    std::vector<Rat> pool = sample_pool(40);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        Rat x = pool[pick(rng)];
        for (long p : {3L, 5L, 7L}) {
            GammaValue g = gamma_eval(KochenParams(p, Tau{1, 1}), x);
            if (!g.pole) require(val_p(g.value, 2) >= ExtInt(0), "gamma value escapes Z_(2)");
        }
    }
}

// ---- 3: counterexample coherence ----
void crit_counterexample() {
    require(!exclusion_root_test(3, 5), "exclusion at 5 should fail for p = 3");
    GammaValue g = gamma_eval(KochenParams(3, Tau{1, 1}), Rat(3));
    require(!g.pole && g.value == Rat(8) / Rat(575), "gamma_3(3) != 8/575");
    require(val_p(g.value, 5) == ExtInt(-2), "val_5(gamma_3(3)) != -2");
}

// ---- 4: lower-bound certificate ----
void crit_lower_bound() {
    auto toy = pi_lower_bound_family({MPoly::variable(1, 0)}, 1);
    require(toy.ell == 3 && toy.a == 1 && toy.p == 5, "toy certificate parameters");
    lower_bound_verify(toy);
    KochenParams kp(toy.p, Tau{1, 1});
    std::mt19937 rng(404);
    std::vector<Rat> pool = sample_pool(15);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    long done = 0;
    while (done < 1000) {
        GammaValue a1 = gamma_eval(kp, pool[pick(rng)]);
        GammaValue a2 = gamma_eval(kp, pool[pick(rng)]);
        GammaValue b = gamma_eval(kp, pool[pick(rng)]);
        if (a1.pole || a2.pole || b.pole) continue;
        Rat den = 1 + Rat(toy.p) * b.value;
        if (den == 0) continue;
        Rat elem = (a1.value + a2.value * a2.value) / den;
        require(val_p(elem, toy.ell) >= ExtInt(0), "ring element escapes Z_(3)");
        ++done;
    }
}

// ---- shared randomized family machinery ----
MPoly random_poly(std::mt19937& rng, int arity, int maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(-2, 2), d(0, maxdeg);
    MPoly f(arity);
    for (int t = nterms(rng); t > 0; --t) {
        std::vector<int> e(arity);
        for (int i = 0; i < arity; ++i) e[i] = d(rng);
        f.add_term(e, Rat(coef(rng)));
    }
    return f;
}

DiophFamily random_family(std::mt19937& rng, long n, long m, int maxdeg = 2, int npolys = 2) {
    DiophFamily D{n, m, {}};
    for (int i = 0; i < npolys; ++i) {
        MPoly f = random_poly(rng, static_cast<int>(n + m), maxdeg);
        if (!f.is_zero()) D.polys.push_back(f);
    }
    if (D.polys.empty()) D.polys.push_back(MPoly::constant(static_cast<int>(n + m), 0));
    return D;
}

// ---- 5: combinator oracles ----
void crit_combinators() {
    std::mt19937 rng(505);
    const int qs[] = {2, 3, 4, 5, 7, 9};
    for (int iter = 0; iter < 200; ++iter) {
        int q = qs[iter % 6];
        FqField F(q);
        DiophFamily a = random_family(rng, 1, 1), b = random_family(rng, 1, 1);
        auto pa = eval_over_Fq(a, q), pb = eval_over_Fq(b, q);
        std::set<std::vector<int>> u = pa, isect;
        for (const auto& x : pb) u.insert(x);
        for (const auto& x : pa)
            if (pb.count(x)) isect.insert(x);
        require(eval_over_Fq(family_union(a, b), q) == u, "union oracle");
        require(eval_over_Fq(family_intersect(a, b), q) == isect, "intersect oracle");
        std::set<std::vector<int>> prod;
        for (const auto& x : pa)
            for (const auto& y : pb) prod.insert({x[0], y[0]});
        require(eval_over_Fq(family_product(a, b), q) == prod, "product oracle");

        // image under num/den with den from a fixed coprime-friendly list
        MPoly num = random_poly(rng, 1, 2);
        MPoly den = iter % 2 ? MPoly::constant(1, 1)
                             : MPoly::variable(1, 0) * MPoly::variable(1, 0) +
                                   MPoly::constant(1, 1);
        if (den.total_degree() == 0 || mpoly_coprime(num, den)) {
            std::set<std::vector<int>> img;
            for (const auto& x : pa) {
                int hv = den.eval(F, {x[0]});
                if (hv == 0) continue;
                img.insert({F.mul(num.eval(F, {x[0]}), F.inv(hv))});
            }
            require(eval_over_Fq(rational_image(a, {RatFunc{num, den}}), q) == img,
                    "image oracle");
        }

        // section of a two-variable family at a small integer
        DiophFamily c = random_family(rng, 2, 1);
        auto pc = eval_over_Fq(c, q);
        long s = iter % 3;
        std::set<std::vector<int>> sliced;
        int sF = F.from_rat(Rat(s));
        for (const auto& x : pc)
            if (x[1] == sF) sliced.insert({x[0]});
        require(eval_over_Fq(section(c, {Rat(s)}, 1), q) == sliced, "section oracle");
    }
}

// ---- 6: restriction vs direct algebra arithmetic ----
std::set<std::vector<int>> direct_algebra_points(const DiophFamily& D, const FqField& F,
                                                 const FqPoly& g) {
    FqAlgebra B(&F, g);
    std::vector<FqPoly> elems = B.elements();
    std::set<std::vector<int>> out;
    std::vector<int> xi(D.n, 0);
    int q = F.q();
    auto adv = [&](std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < q) return true;
            v[i] = 0;
        }
        return false;
    };
    do {
        std::vector<FqPoly> pt(D.n + D.m);
        for (long i = 0; i < D.n; ++i) pt[i] = FqPoly::constant(&F, xi[i]);
        std::vector<int> yi(D.m, 0);
        bool found = false;
        do {
            for (long j = 0; j < D.m; ++j) pt[D.n + j] = elems[yi[j]];
            bool ok = true;
            for (const MPoly& f : D.polys)
                if (!f.eval(B, pt).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = true;
                break;
            }
        } while ([&] {
            for (size_t i = 0; i < yi.size(); ++i) {
                if (++yi[i] < static_cast<int>(elems.size())) return true;
                yi[i] = 0;
            }
            return false;
        }());
        if (found) out.insert(xi);
    } while (adv(xi));
    return out;
}

void crit_weil() {
    std::mt19937 rng(606);
    struct Cfg {
        int q;
        long k;
    };
    const std::vector<Cfg> cfgs{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3},
                                {4, 1}, {4, 2}, {5, 1}, {5, 2}, {7, 1}, {9, 1}};
    for (int iter = 0; iter < 100; ++iter) {
        const Cfg& cfg = cfgs[iter % cfgs.size()];
        FqField F(cfg.q);
        DiophFamily D = random_family(rng, 1, 1, 2, 2);
        WeilFamily W = weil_restrict(D, cfg.k);
        auto pts = weil_points_Fq(W, cfg.q);
        std::vector<int> z(cfg.k, 0);
        do {
            std::vector<int> gc(cfg.k + 1, 0);
            gc[cfg.k] = F.one();
            for (long i = 0; i < cfg.k; ++i) gc[i] = z[i];
            FqPoly g(&F, gc);
            auto direct = direct_algebra_points(D, F, g);
            for (int x = 0; x < cfg.q; ++x) {
                std::vector<int> key(1 + cfg.k);
                key[0] = x;
                for (long i = 0; i < cfg.k; ++i) key[1 + i] = z[i];
                require(pts.count(key) == direct.count({x}), "restriction point mismatch");
            }
        } while ([&] {
            for (size_t i = 0; i < z.size(); ++i) {
                if (++z[i] < cfg.q) return true;
                z[i] = 0;
            }
            return false;
        }());
    }
}

// ---- 7: radical-power identity ----
void crit_radical() {
    std::mt19937 rng(707);
    const int qs[] = {2, 3, 5};
    for (int iter = 0; iter < 50; ++iter) {
        int q = qs[iter % 3];
        FqField F(q);
        std::uniform_int_distribution<int> dim_pick(1, 3), coef(0, q - 1);
        int dim = dim_pick(rng);
        std::vector<int> gc;
        if (iter % 3 == 0) {
            gc.assign(dim + 1, 0); // nilpotent: T^dim
            gc[dim] = 1;
        } else if (iter % 3 == 1) {
            FqPoly g = FqPoly::constant(&F, 1); // split: distinct linear factors
            dim = std::min(dim, q);
            for (int r = 0; r < dim; ++r)
                g = g * FqPoly(&F, {F.neg(r), 1});
            gc = g.coeffs();
        } else {
            for (int i = 0; i < dim; ++i) gc.push_back(coef(rng));
            gc.push_back(1);
        }
        DiophFamily D = random_family(rng, 1, 1, 2, 2);
        require(radical_power_check(D, dim + iter % 2, F, FqPoly(&F, gc)),
                "radical-power identity");
    }
}

// ---- 8: reciprocity and algebra construction ----
void crit_brauer() {
    auto [A, B] = construct_AB(5, 2, 13);
    require(ramification_set(A) == std::set<Place>{Place::at(5), Place::at(2)},
            "first ramification set");
    require(ramification_set(B) == std::set<Place>{Place::at(5), Place::at(13)},
            "second ramification set");
    require(hilbert_symbol(A.a, A.b, Place::real()) == +1, "A not split at the real place");
    require(hilbert_symbol(B.a, B.b, Place::real()) == +1, "B not split at the real place");
    std::mt19937 rng(808);
    std::vector<Rat> pool = sample_pool(50);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    long done = 0;
    while (done < 1000) {
        Rat a = pool[pick(rng)], b = pool[pick(rng)];
        if (a == 0 || b == 0) continue;
        std::set<Place> places{Place::real(), Place::at(2)};
        for (const Rat& x : {a, b}) {
            Int n = abs(x.get_num()) * x.get_den();
            while (n % 2 == 0) n /= 2;
            for (Int d = 3; d * d <= n; d += 2)
                while (n % d == 0) {
                    places.insert(Place::at(d));
                    n /= d;
                }
            if (n > 2) places.insert(Place::at(n));
        }
        int prod = 1;
        for (const Place& v : places) prod *= hilbert_symbol(a, b, v);
        require(prod == +1, "symbol product != +1");
        ++done;
    }
}

// ---- 9: trace-difference containment ----
void crit_trace_containment() {
    std::set<Rat> vals = sample_T(QuaternionAlgebra{Rat(2), Rat(5)}, 10);
    require(!vals.empty(), "empty sample");
    for (const Rat& v : vals) {
        if (v == 0) continue;
        require(val_p(v, 2) >= ExtInt(0) && val_p(v, 5) >= ExtInt(0),
                "trace difference escapes Z_(2) or Z_(5)");
    }
}

// ---- 10: decomposition types and the kill check ----
void crit_numberfield() {
    NumberField Qi(UPoly({Rat(1), Rat(0), Rat(1)}));
    auto types = [&](long p) {
        std::vector<std::pair<int, int>> out;
        long sum = 0;
        for (const NFPrime& P : primes_above(Qi, p)) {
            out.emplace_back(P.e, P.f);
            sum += static_cast<long>(P.e) * P.f;
        }
        require(sum == 2, "sum e_i f_i != 2");
        std::sort(out.begin(), out.end());
        return out;
    };
    require(types(2) == std::vector<std::pair<int, int>>{{2, 1}}, "type at 2");
    require(types(3) == std::vector<std::pair<int, int>>{{1, 2}}, "type at 3");
    require(types(5) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}}, "type at 5");
    const std::vector<Rat> as{Rat(0), Rat(1), Rat(2), Rat(1) / Rat(2), Rat(3) / Rat(4)};
    for (const Rat& a : as) require(lemma_kill_check(2, Tau{1, 1}, a), "kill check");
}

// ---- 11: compiled family vs direct search ----
void crit_cross_module() {
    KochenParams k3(3, Tau{1, 1});
    CompiledRFamily C = compile_R_family(k3, 1);
    SearchBounds bounds;
    bounds.height = 25;
    std::vector<Rat> pool = sample_pool(30);
    std::mt19937 rng(1111);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 200; ++i) {
        Rat x = pool[pick(rng)];
        MembershipVerdict direct = member_R_pn(k3, 1, x, bounds);
        MembershipVerdict compiled = family_member_Q(C, x, bounds);
        if (direct.verdict == Verdict::Unknown || compiled.verdict == Verdict::Unknown) continue;
        require(direct.verdict == compiled.verdict, "verdict disagreement at " + rat_to_string(x));
    }
}

struct Criterion {
    int id;
    const char* name;
    void (*fn)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "operator valuation table", crit_valuation_table},
        {2, "exclusion primes", crit_exclusion_primes},
        {3, "counterexample coherence", crit_counterexample},
        {4, "lower-bound certificate", crit_lower_bound},
        {5, "diophantine combinators", crit_combinators},
        {6, "restriction vs algebra arithmetic", crit_weil},
        {7, "radical-power identity", crit_radical},
        {8, "reciprocity and algebra construction", crit_brauer},
        {9, "trace-difference containment", crit_trace_containment},
        {10, "decomposition types and kill check", crit_numberfield},
        {11, "compiled family vs direct search", crit_cross_module},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.fn();
            auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
            std::printf("PASS %2d %s (%.1fs)\n", c.id, c.name, dt.count());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL %2d %s: %s\n", c.id, c.name, e.what());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
