#include "kochenlab/dioph.hpp"

#include <algorithm>
#include <limits>

#include "kochenlab/errors.hpp"

namespace kochenlab {

namespace {

// base-q odometer, lowest slot fastest; false once wrapped around
bool advance(std::vector<int>& odo, int base) {
    for (size_t i = 0; i < odo.size(); ++i) {
        if (++odo[i] < base) return true;
        odo[i] = 0;
    }
    return false;
}

void check_space(long vars, int q, long long budget, const char* who) {
    Int space = 1;
    for (long i = 0; i < vars; ++i) {
        space *= q;
        if (space > static_cast<long>(budget))
            throw resource_error(std::string(who) + ": search space exceeds budget");
    }
}

MPoly star(const MPoly& g) {
    MPoly s(g.arity());
    for (const auto& [e, c] : g.terms()) {
        long deg = 0;
        for (int ei : e) deg += ei;
        s.add_term(e, deg % 2 ? c : -c);
    }
    return s;
}

// polynomials in T with MPoly coefficients, index = T-power, top trimmed
struct TRing {
    using Elem = std::vector<MPoly>;

    int arity;
    long long* work; // charged with terms * arity per produced value

    void charge(const Elem& v) const {
        long long t = 0;
        for (const MPoly& c : v) t += static_cast<long long>(c.terms().size());
        *work -= t * arity;
        if (*work < 0) throw resource_error("weil restriction: symbolic expansion exceeds budget");
    }
    static void trim(Elem& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    }

    Elem zero() const { return {}; }
    Elem one() const { return {MPoly::constant(arity, 1)}; }
    Elem from_rat(const Rat& c) const {
        if (c == 0) return {};
        return {MPoly::constant(arity, c)};
    }
    Elem add(const Elem& x, const Elem& y) const {
        Elem out(std::max(x.size(), y.size()), MPoly(arity));
        for (size_t i = 0; i < out.size(); ++i) {
            if (i < x.size()) out[i] = out[i] + x[i];
            if (i < y.size()) out[i] = out[i] + y[i];
        }
        trim(out);
        charge(out);
        return out;
    }
    Elem mul(const Elem& x, const Elem& y) const {
        if (x.empty() || y.empty()) return {};
        Elem out(x.size() + y.size() - 1, MPoly(arity));
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
        trim(out);
        charge(out);
        return out;
    }
};

// Shared Weil restriction: monic selects g_z = T^k + sum z_i T^i with k
// free parameters; otherwise the Kochen parameter algebra with one free
// parameter a and modulus t a^e ((T^{q^f}-T)^2 - 1) - (T^{q^f}-T).
WeilFamily restrict_common(const DiophFamily& Din, long kfree, long digits, bool monic,
                           const KochenParams* kp, long long budget) {
    const long n = Din.n, m = Din.m;
    const long r = static_cast<long>(Din.polys.size());
    const long A0 = n + kfree + digits * m;
    long long work = budget;
    TRing R{static_cast<int>(A0), &work};

    std::vector<TRing::Elem> point(n + m);
    for (long i = 0; i < n; ++i) point[i] = {MPoly::variable(static_cast<int>(A0), static_cast<int>(i))};
    for (long j = 0; j < m; ++j) {
        TRing::Elem y(digits, MPoly(static_cast<int>(A0)));
        for (long i = 0; i < digits; ++i)
            y[i] = MPoly::variable(static_cast<int>(A0),
                                   static_cast<int>(n + kfree + j * digits + i));
        point[n + j] = y;
    }

    std::vector<TRing::Elem> hf;
    long d = 0;
    for (const MPoly& f : Din.polys) {
        TRing::Elem h = f.eval(R, point);
        d = std::max(d, static_cast<long>(h.size()) - 1);
        hf.push_back(std::move(h));
    }

    const long A = A0 + r * (d + 1);
    const int Ai = static_cast<int>(A);
    std::vector<int> idmap(A0);
    for (long i = 0; i < A0; ++i) idmap[i] = static_cast<int>(i);
    for (auto& h : hf)
        for (auto& c : h) c = c.remap(Ai, idmap);

    std::vector<MPoly> gT;
    if (monic) {
        gT.assign(digits + 1, MPoly(Ai));
        for (long i = 0; i < kfree; ++i)
            gT[i] = MPoly::variable(Ai, static_cast<int>(n + i));
        gT[digits] = MPoly::constant(Ai, 1);
    } else {
        const long qf = digits / 2;
        std::vector<MPoly> DT(qf + 1, MPoly(Ai));
        DT[1] = MPoly::constant(Ai, -1);
        DT[qf] = DT[qf] + MPoly::constant(Ai, 1);
        std::vector<MPoly> D2(2 * qf + 1, MPoly(Ai));
        for (long i = 0; i <= qf; ++i)
            for (long j = 0; j <= qf; ++j) D2[i + j] = D2[i + j] + DT[i] * DT[j];
        D2[0] = D2[0] - MPoly::constant(Ai, 1);
        MPoly coef =
            MPoly::variable(Ai, static_cast<int>(n)).pow(static_cast<unsigned>(kp->tau.e)) *
            kp->t();
        gT.assign(2 * qf + 1, MPoly(Ai));
        for (long i = 0; i <= 2 * qf; ++i) gT[i] = D2[i] * coef;
        for (long i = 0; i <= qf; ++i) gT[i] = gT[i] - DT[i];
    }

    WeilFamily W{DiophFamily{n + kfree, digits * m + r * (d + 1), {}},
                 n, m, kfree, r, d, digits, gT, {}};
    for (long s = 0; s < r; ++s) {
        // f~ = hf - g * W_s; solvable in W exactly when g divides hf
        std::vector<MPoly> gw(gT.size() + d, MPoly(Ai));
        for (size_t i = 0; i < gT.size(); ++i)
            for (long l = 0; l <= d; ++l) {
                MPoly w = MPoly::variable(Ai, static_cast<int>(A0 + s * (d + 1) + l));
                gw[i + l] = gw[i + l] + gT[i] * w;
            }
        size_t len = std::max(hf[s].size(), gw.size());
        for (size_t i = 0; i < len; ++i) {
            MPoly c(Ai);
            if (i < hf[s].size()) c = c + hf[s][i];
            if (i < gw.size()) c = c - gw[i];
            if (!c.is_zero()) W.D.polys.push_back(std::move(c));
        }
        W.hf.push_back(hf[s]);
    }
    return W;
}

} // namespace

void validate_family(const DiophFamily& D) {
    if (D.n < 0 || D.m < 0) throw input_error("DiophFamily: negative dimensions");
    for (const MPoly& f : D.polys)
        if (f.arity() != D.n + D.m) throw input_error("DiophFamily: polynomial arity mismatch");
}

DiophFamily full_space(long n) {
    if (n < 0) throw input_error("full_space: negative dimension");
    return DiophFamily{n, 0, {}};
}

FamilySize family_size(const DiophFamily& D) {
    FamilySize s;
    s.polys = static_cast<long>(D.polys.size());
    s.arity = D.n + D.m;
    for (const MPoly& f : D.polys) s.terms += static_cast<long long>(f.terms().size());
    return s;
}

json dioph_family_to_json(const DiophFamily& D) {
    json polys = json::array();
    for (const MPoly& f : D.polys) polys.push_back(mpoly_to_json(f));
    json j;
    j["n"] = D.n;
    j["m"] = D.m;
    j["polys"] = std::move(polys);
    return j;
}

DiophFamily dioph_family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("polys"))
        throw input_error("family JSON needs 'n', 'm' and 'polys'");
    if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
        throw input_error("family dimensions must be integers");
    DiophFamily D{j["n"].get<long>(), j["m"].get<long>(), {}};
    if (!j["polys"].is_array()) throw input_error("family 'polys' must be an array");
    for (const auto& p : j["polys"]) D.polys.push_back(mpoly_from_json(p));
    validate_family(D);
    return D;
}

std::set<std::vector<int>> eval_over_Fq(const DiophFamily& D, int q, long long budget) {
    validate_family(D);
    FqField F(q);
    check_space(D.n + D.m, q, budget, "eval_over_Fq");
    std::set<std::vector<int>> out;
    std::vector<int> x(D.n, 0);
    do {
        std::vector<int> pt(D.n + D.m, 0);
        std::copy(x.begin(), x.end(), pt.begin());
        std::vector<int> y(D.m, 0);
        bool found = false;
        do {
            std::copy(y.begin(), y.end(), pt.begin() + D.n);
            bool ok = true;
            for (const MPoly& f : D.polys)
                if (f.eval(F, pt) != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = true;
                break;
            }
        } while (advance(y, q));
        if (found) out.insert(x);
    } while (advance(x, q));
    return out;
}

DiophFamily family_union(const DiophFamily& a, const DiophFamily& b) {
    validate_family(a);
    validate_family(b);
    if (a.n != b.n) throw input_error("family_union: free-variable counts differ");
    const long n = a.n;
    const int A = static_cast<int>(n + a.m + b.m);
    std::vector<int> ma(n + a.m), mb(n + b.m);
    for (long i = 0; i < n; ++i) ma[i] = mb[i] = static_cast<int>(i);
    for (long j = 0; j < a.m; ++j) ma[n + j] = static_cast<int>(n + j);
    for (long j = 0; j < b.m; ++j) mb[n + j] = static_cast<int>(n + a.m + j);
    DiophFamily out{n, a.m + b.m, {}};
    for (const MPoly& f : a.polys)
        for (const MPoly& g : b.polys) out.polys.push_back(f.remap(A, ma) * g.remap(A, mb));
    return out;
}

DiophFamily family_intersect(const DiophFamily& a, const DiophFamily& b) {
    validate_family(a);
    validate_family(b);
    if (a.n != b.n) throw input_error("family_intersect: free-variable counts differ");
    const long n = a.n;
    const int A = static_cast<int>(n + a.m + b.m);
    std::vector<int> ma(n + a.m), mb(n + b.m);
    for (long i = 0; i < n; ++i) ma[i] = mb[i] = static_cast<int>(i);
    for (long j = 0; j < a.m; ++j) ma[n + j] = static_cast<int>(n + j);
    for (long j = 0; j < b.m; ++j) mb[n + j] = static_cast<int>(n + a.m + j);
    DiophFamily out{n, a.m + b.m, {}};
    for (const MPoly& f : a.polys) out.polys.push_back(f.remap(A, ma));
    for (const MPoly& g : b.polys) out.polys.push_back(g.remap(A, mb));
    return out;
}

DiophFamily family_product(const DiophFamily& a, const DiophFamily& b) {
    validate_family(a);
    validate_family(b);
    const long n = a.n + b.n;
    const int A = static_cast<int>(n + a.m + b.m);
    std::vector<int> ma(a.n + a.m), mb(b.n + b.m);
    for (long i = 0; i < a.n; ++i) ma[i] = static_cast<int>(i);
    for (long j = 0; j < a.m; ++j) ma[a.n + j] = static_cast<int>(n + j);
    for (long i = 0; i < b.n; ++i) mb[i] = static_cast<int>(a.n + i);
    for (long j = 0; j < b.m; ++j) mb[b.n + j] = static_cast<int>(n + a.m + j);
    DiophFamily out{n, a.m + b.m, {}};
    for (const MPoly& f : a.polys) out.polys.push_back(f.remap(A, ma));
    for (const MPoly& g : b.polys) out.polys.push_back(g.remap(A, mb));
    return out;
}

DiophFamily rational_image(const DiophFamily& D, const std::vector<RatFunc>& f) {
    validate_family(D);
    const long k = static_cast<long>(f.size()), n = D.n, m = D.m;
    const int A = static_cast<int>(k + n + m + k);
    for (const RatFunc& c : f) {
        if (c.num.arity() != n || c.den.arity() != n)
            throw input_error("rational_image: component arity mismatch");
        if (c.den.is_zero()) throw input_error("rational_image: zero denominator");
        if (c.den.total_degree() > 0 && !mpoly_coprime(c.num, c.den))
            throw input_error("rational_image: numerator and denominator are not coprime");
    }
    std::vector<int> xmap(n), dmap(n + m);
    for (long i = 0; i < n; ++i) xmap[i] = dmap[i] = static_cast<int>(k + i);
    for (long j = 0; j < m; ++j) dmap[n + j] = static_cast<int>(k + n + j);
    DiophFamily out{k, n + m + k, {}};
    for (long i = 0; i < k; ++i) {
        MPoly num = f[i].num.remap(A, xmap), den = f[i].den.remap(A, xmap);
        out.polys.push_back(num - MPoly::variable(A, static_cast<int>(i)) * den);
        out.polys.push_back(MPoly::variable(A, static_cast<int>(k + n + m + i)) * den -
                            MPoly::constant(A, 1));
    }
    for (const MPoly& g : D.polys) out.polys.push_back(g.remap(A, dmap));
    return out;
}

DiophFamily section(const DiophFamily& D, const std::vector<Rat>& a, long r) {
    validate_family(D);
    if (r != static_cast<long>(a.size()))
        throw input_error("section: r must equal the number of constants");
    if (r < 0 || r >= D.n)
        throw input_error("section: r must satisfy 0 <= r < n");
    const long n = D.n, m = D.m, keep = n - r + m;
    const int A = static_cast<int>(n + m);
    std::vector<int> map(n + m);
    for (long i = 0; i < n - r; ++i) map[i] = static_cast<int>(i);
    for (long i = 0; i < r; ++i) map[n - r + i] = static_cast<int>(keep + i);
    for (long j = 0; j < m; ++j) map[n + j] = static_cast<int>(n - r + j);
    DiophFamily out{n - r, m, {}};
    for (const MPoly& f : D.polys)
        out.polys.push_back(f.remap(A, map).substitute_tail(static_cast<int>(keep), a));
    return out;
}

WeilFamily weil_restrict(const DiophFamily& D, long k, long long budget) {
    validate_family(D);
    if (k < 1) throw input_error("weil_restrict: k must be >= 1");
    return restrict_common(D, k, k, true, nullptr, budget);
}

std::set<std::vector<int>> weil_points_Fq(const WeilFamily& W, int q, long long budget) {
    FqField F(q);
    const long nk = W.n + W.k;
    check_space(nk + W.digits * W.m, q, budget, "weil_points_Fq");
    const long A = W.D.n + W.D.m;
    std::set<std::vector<int>> out;
    std::vector<int> free_vars(nk, 0);
    do {
        std::vector<int> pt(A, 0);
        std::copy(free_vars.begin(), free_vars.end(), pt.begin());
        std::vector<int> gc;
        for (const MPoly& c : W.g_T) gc.push_back(c.eval(F, pt));
        FqPoly g(&F, gc);
        if (g.is_zero())
            throw invariant_violation("weil_points_Fq: parameter polynomial vanished");
        std::vector<int> u(W.digits * W.m, 0);
        bool member = false;
        do {
            std::copy(u.begin(), u.end(), pt.begin() + nk);
            bool ok = true;
            for (long s = 0; s < W.r; ++s) {
                std::vector<int> hc;
                for (const MPoly& c : W.hf[s]) hc.push_back(c.eval(F, pt));
                if (!FqPoly(&F, hc).mod(g).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                member = true;
                break;
            }
        } while (advance(u, q));
        if (member) out.insert(free_vars);
    } while (advance(free_vars, q));
    return out;
}

FqAlgebra::FqAlgebra(const FqField* field, FqPoly mod) : F(field), modulus(std::move(mod)) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw input_error("FqAlgebra: modulus must have positive degree");
}

std::vector<FqPoly> FqAlgebra::elements() const {
    std::vector<FqPoly> out;
    std::vector<int> c(dim(), 0);
    do {
        out.emplace_back(F, c);
    } while (advance(c, F->q()));
    return out;
}

bool radical_power_check(const DiophFamily& D, long l, const FqField& F, const FqPoly& g,
                         long long budget) {
    validate_family(D);
    if (l < 1) throw input_error("radical_power_check: l must be >= 1");
    if (g.degree() < 1 || g.lead() != 1)
        throw input_error("radical_power_check: modulus must be monic of positive degree");
    if (g.degree() > l) throw input_error("radical_power_check: dim B must be at most l");
    check_space(D.n + g.degree() * D.m, F.q(), budget, "radical_power_check");

    auto scalar_points = [&](const FqAlgebra& B, bool power) {
        std::set<std::vector<int>> pts;
        std::vector<FqPoly> residues = B.elements();
        std::vector<int> x(D.n, 0);
        do {
            std::vector<FqPoly> pt(D.n + D.m, B.zero());
            for (long i = 0; i < D.n; ++i) pt[i] = FqPoly::constant(B.F, x[i]);
            std::vector<int> y(D.m, 0);
            bool found = false;
            do {
                for (long j = 0; j < D.m; ++j) pt[D.n + j] = residues[y[j]];
                bool ok = true;
                for (const MPoly& f : D.polys) {
                    FqPoly v = f.eval(B, pt);
                    if (power) {
                        FqPoly pw = B.one();
                        for (long i = 0; i < l; ++i) pw = B.mul(pw, v);
                        v = pw;
                    }
                    if (!v.is_zero()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
            } while (advance(y, static_cast<int>(residues.size())));
            if (found) pts.insert(x);
        } while (advance(x, F.q()));
        return pts;
    };

    FqAlgebra B(&F, g);
    std::set<std::vector<int>> left = scalar_points(B, true);
    std::set<std::vector<int>> right;
    bool first = true;
    for (const auto& [fac, mult] : fqpoly_factor(g)) {
        FqAlgebra Bi(&F, fac);
        std::set<std::vector<int>> s = scalar_points(Bi, false);
        if (first) {
            right = std::move(s);
            first = false;
        } else {
            std::set<std::vector<int>> both;
            std::set_intersection(right.begin(), right.end(), s.begin(), s.end(),
                                  std::inserter(both, both.begin()));
            right = std::move(both);
        }
    }
    if (left == right) return true;
    throw invariant_violation("radical_power_check: power identity disagrees with the "
                              "maximal-ideal decomposition");
}

CompiledRFamily compile_R_family(const KochenParams& params, long n, long budget) {
    if (n < 1) throw input_error("compile_R_family: n must be >= 1");
    std::vector<MPoly> gs = enumerate_P(params, n, budget);
    const long G = static_cast<long>(gs.size());
    const long k = n;
    const long r = G * 2 * n;
    if (r * r > budget)
        throw resource_error("compile_R_family: selector expansion exceeds budget");
    Int qfI = params.qf();
    if (!qfI.fits_ulong_p() || qfI.get_ui() > 4096)
        throw resource_error("compile_R_family: q^f too large");
    const unsigned qf = static_cast<unsigned>(qfI.get_ui());
    const unsigned e = static_cast<unsigned>(params.tau.e);
    const long pc = 6 * k + 1;

    CompiledRFamily C{params};
    C.n = n;
    C.gs = gs;
    C.per_coeff = pc;
    long off = 2;
    for (long gi = 0; gi < G; ++gi)
        for (int sign : {+1, -1})
            for (long m = 1; m <= n; ++m) {
                C.branches.push_back({gi, sign, m, off});
                off += m * pc;
            }
    const long A = off;
    const int Ai = static_cast<int>(A);

    auto var = [&](long i) { return MPoly::variable(Ai, static_cast<int>(i)); };
    auto cst = [&](const Rat& c) { return MPoly::constant(Ai, c); };

    // selector: prod (s - j) = 0 picks the active branch, and each branch
    // polynomial is multiplied by e_j = prod_{j' != j} (s - j')
    std::vector<MPoly> pre(r + 1, cst(1)), suf(r + 1, cst(1));
    for (long j = 0; j < r; ++j) pre[j + 1] = pre[j] * (var(1) - cst(Rat(j)));
    for (long j = r - 1; j >= 0; --j) suf[j] = suf[j + 1] * (var(1) - cst(Rat(j)));

    C.D.n = 1;
    C.D.m = A - 1;
    C.D.polys.push_back(pre[r]);
    for (long j = 0; j < r; ++j) {
        const CompiledBranch& b = C.branches[j];
        MPoly ej = pre[j] * suf[j + 1];
        Rat t = Rat(b.t_sign) * Rat(params.p);
        MPoly rel = var(0).pow(static_cast<unsigned>(b.m));
        for (long i = 0; i < b.m; ++i) {
            const long base = b.offset + i * pc;
            for (int role = 0; role < 2; ++role) {
                for (long jj = 0; jj < k; ++jj) {
                    MPoly u = var(base + role * 3 * k + jj);
                    MPoly c = var(base + role * 3 * k + k + jj);
                    MPoly v = var(base + role * 3 * k + 2 * k + jj);
                    MPoly Dp = u.pow(qf) - u;
                    MPoly E2 = Dp * Dp - cst(1);
                    // c = gamma(u) as a rational image, plus pole exclusion
                    C.D.polys.push_back(ej * (c * E2.pow(e) * t - Dp.pow(e)));
                    C.D.polys.push_back(ej * (v * E2 - cst(1)));
                }
            }
            std::vector<int> cbmap(k);
            for (long jj = 0; jj < k; ++jj)
                cbmap[jj] = static_cast<int>(base + 4 * k + jj);
            MPoly gB = gs[b.g_index].remap(Ai, cbmap);
            MPoly w = var(base + 6 * k);
            C.D.polys.push_back(ej * (w * (cst(1) + gB * t) - cst(1)));
            std::vector<int> camap(k);
            for (long jj = 0; jj < k; ++jj)
                camap[jj] = static_cast<int>(base + k + jj);
            rel = rel + gs[b.g_index].remap(Ai, camap) * w * var(0).pow(static_cast<unsigned>(i));
        }
        C.D.polys.push_back(ej * rel);
    }
    return C;
}

MembershipVerdict family_member_Q(const CompiledRFamily& C, const Rat& x,
                                  const SearchBounds& bounds, long budget) {
    MembershipVerdict v = member_R_pn(C.params, C.n, x, bounds, budget);
    if (v.verdict != Verdict::Member) return v;
    const MemberWitness& wit = *v.witness;
    const long m = wit.m;
    const long k = C.n;

    // relation coefficients for x itself in the branch (h, t)
    MPoly h = wit.g;
    std::vector<Rat> b = wit.relation;
    if (wit.t_sign < 0) {
        h = star(wit.g);
        for (long i = 0; i < m; ++i)
            if ((m - i) % 2) b[i] = -b[i];
    }
    auto git = std::find(C.gs.begin(), C.gs.end(), h);
    if (git == C.gs.end())
        throw invariant_violation("family_member_Q: branch polynomial missing from the family");
    const long gi = git - C.gs.begin();
    long jidx = -1;
    for (size_t j = 0; j < C.branches.size(); ++j)
        if (C.branches[j].g_index == gi && C.branches[j].t_sign == wit.t_sign &&
            C.branches[j].m == m)
            jidx = static_cast<long>(j);
    if (jidx < 0) throw invariant_violation("family_member_Q: no branch for the witness");
    const CompiledBranch& br = C.branches[jidx];

    // each coefficient needs its own a/(1 + t b) representation; the t = -p
    // branches are searched through b_i = -h*(gamma(u))/(1 - p h*(gamma(w)))
    KochenParams kb(C.params.p, C.params.tau, br.t_sign);
    KochenParams kplus(C.params.p, C.params.tau, +1);
    std::vector<std::vector<Rat>> us(m), ws(m);
    for (long i = 0; i < m; ++i) {
        Rat target = br.t_sign > 0 ? b[i] : -b[i];
        RingSpec rs{kplus, br.t_sign > 0 ? h : wit.g, 1};
        MembershipVerdict mv = member_R_pgt(rs, target, bounds);
        if (mv.verdict != Verdict::Member) {
            MembershipVerdict out;
            out.verdict = Verdict::Unknown;
            out.height_bound = bounds.height;
            return out;
        }
        us[i] = mv.witness->u;
        ws[i] = mv.witness->w;
    }

    Int qfI = C.params.qf();
    const unsigned long qf = qfI.get_ui();
    Rat t = kb.t();
    std::vector<Rat> pt(1 + C.D.m, Rat(0));
    pt[0] = x;
    pt[1] = Rat(jidx);
    for (long i = 0; i < m; ++i) {
        const long base = br.offset + i * C.per_coeff;
        for (int role = 0; role < 2; ++role) {
            const std::vector<Rat>& args = role == 0 ? us[i] : ws[i];
            for (long jj = 0; jj < k; ++jj) {
                const Rat& u = args[jj];
                GammaValue gv = gamma_eval(kb, u);
                if (gv.pole)
                    throw invariant_violation("family_member_Q: witness argument is a pole");
                Rat Dv = rat_pow(u, qf) - u;
                pt[base + role * 3 * k + jj] = u;
                pt[base + role * 3 * k + k + jj] = gv.value;
                pt[base + role * 3 * k + 2 * k + jj] = Rat(1) / (Dv * Dv - 1);
            }
        }
        std::vector<Rat> gargs;
        for (long jj = 0; jj < k; ++jj) gargs.push_back(gamma_eval(kb, ws[i][jj]).value);
        Rat Bval = C.gs[gi].eval_rat(gargs);
        pt[base + 6 * k] = Rat(1) / (1 + t * Bval);
    }
    for (const MPoly& f : C.D.polys)
        if (f.eval_rat(pt) != 0)
            throw invariant_violation("family_member_Q: assembled witness failed re-verification");
    return v;
}

HolomorphyFamily holomorphy_restrict(const DiophFamily& R1, const KochenParams& params,
                                     long long budget) {
    validate_family(R1);
    if (R1.n != 1) throw input_error("holomorphy_restrict: input family must be one-dimensional");
    Int qfI = params.qf();
    if (!qfI.fits_ulong_p() || qfI.get_ui() > 32)
        throw resource_error("holomorphy_restrict: q^f too large");
    const long l = 2 * static_cast<long>(qfI.get_ui());
    DiophFamily P{R1.n, R1.m, {}};
    for (const MPoly& f : R1.polys) {
        // term-count estimate of f^l before expanding anything
        Int est = static_cast<long>(R1.n + R1.m);
        long t = static_cast<long>(f.terms().size());
        for (long i = 0; i < l; ++i) est *= t;
        if (est > Int(static_cast<long>(std::min<long long>(budget,
                                                            std::numeric_limits<long>::max()))))
            throw resource_error("holomorphy_restrict: symbolic expansion exceeds budget");
        P.polys.push_back(f.pow(static_cast<unsigned>(l)));
    }
    WeilFamily W = restrict_common(P, 1, l, false, &params, budget);
    return HolomorphyFamily{params, 0, l, std::move(W)};
}

HolomorphyFamily compile_holomorphy_family(const KochenParams& params, long n_prime,
                                           long long budget) {
    CompiledRFamily C = compile_R_family(
        params, n_prime, static_cast<long>(std::min<long long>(budget, 200000)));
    HolomorphyFamily H = holomorphy_restrict(C.D, params, budget);
    H.n_prime = n_prime;
    return H;
}

bool holomorphy_member_Q(const KochenParams& params, const Rat& x, const Rat& a) {
    if (params.t_sign != +1)
        throw unsupported_error("holomorphy_member_Q: only t = +p is supported");
    KillCheckReport rep = lemma_kill_report(params.p, params.tau, a);
    bool constrained = false;
    for (const auto& br : rep.branches)
        if (br.has_type_tau_prime) constrained = true;
    // rational x has v_P(x) = e_P v_p(x) at every prime of every branch field
    return !constrained || val_p(x, params.p) >= ExtInt(0);
}

} // namespace kochenlab
