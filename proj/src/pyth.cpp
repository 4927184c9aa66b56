#include "kochenlab/pyth.hpp"

#include "kochenlab/primes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kochenlab {

namespace {

Int mod_rat(const Rat& c, const Int& ell) {
    Int den = c.get_den(), di;
    if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t()) == 0)
        throw input_error("mod_rat: denominator vanishes mod ell");
    Int r = c.get_num() * di % ell;
    if (r < 0) r += ell;
    return r;
}

std::vector<Int> denominator_primes(const Rat& x) {
    Int m = x.get_den();
    std::vector<Int> out;
    for (Int d = 2; d * d <= m && d < 1000000; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) {
        if (is_prime(m)) out.push_back(m);
        // a huge composite cofactor only costs us an obstruction opportunity
    }
    return out;
}

// exponent vectors of arity k with total degree <= d, lexicographic
void collect_monomials(int k, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.push_back(e);
        collect_monomials(k, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<MPoly> enumerate_family(int arity, long n, const std::vector<Rat>& coeff_values,
                                    long budget) {
    std::vector<std::vector<int>> mons;
    std::vector<int> cur;
    collect_monomials(arity, static_cast<int>(n), cur, mons);
    Int count;
    mpz_ui_pow_ui(count.get_mpz_t(), coeff_values.size(), mons.size());
    if (count > budget)
        throw resource_error("enumerate_P: family size " + count.get_str() +
                             " exceeds the budget");
    std::vector<MPoly> out;
    std::vector<size_t> idx(mons.size(), 0);
    while (true) {
        MPoly g(arity);
        for (size_t i = 0; i < mons.size(); ++i)
            if (coeff_values[idx[i]] != 0) g.add_term(mons[i], coeff_values[idx[i]]);
        out.push_back(std::move(g));
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == coeff_values.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

struct GammaTable {
    std::vector<Rat> args; // deterministic increasing-height order
    std::vector<Rat> vals; // gamma of each argument
};

GammaTable build_gamma_table(const KochenParams& kp, long height) {
    GammaTable T;
    T.args = rationals_up_to_height(height);
    for (const Rat& x : T.args) {
        GammaValue g = gamma_eval(kp, x);
        if (g.pole) throw invariant_violation("build_gamma_table: rational pole of gamma");
        T.vals.push_back(g.value);
    }
    return T;
}

// g evaluated over gamma-value tuples: achieved value -> first argument tuple
std::map<Rat, std::vector<Rat>> achievable_values(const MPoly& g, const GammaTable& T,
                                                  long max_tuples) {
    std::map<Rat, std::vector<Rat>> out;
    int k = g.arity();
    if (k == 0) {
        out.emplace(g.eval_rat({}), std::vector<Rat>{});
        return out;
    }
    size_t N = T.args.size();
    std::vector<size_t> idx(k, 0);
    long used = 0;
    std::vector<Rat> point(k), tuple(k);
    while (used < max_tuples) {
        for (int i = 0; i < k; ++i) {
            point[i] = T.vals[idx[i]];
            tuple[i] = T.args[idx[i]];
        }
        out.emplace(g.eval_rat(point), tuple);
        ++used;
        int pos = 0;
        while (pos < k && ++idx[pos] == N) idx[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

// obstruction checks shared by all membership levels; nullopt = no obstruction
std::optional<Obstruction> find_obstruction(const RingSpec& spec, const Rat& x) {
    if (val_p(x, spec.params.p) < ExtInt(0)) {
        Obstruction o;
        o.val_p = true;
        return o;
    }
    for (const Int& ell : denominator_primes(x)) {
        if (ell == spec.params.p) continue;
        if (exclusion_applies(spec.params, spec.g, spec.params.t(), ell)) {
            Obstruction o;
            o.ell = ell;
            return o;
        }
    }
    return std::nullopt;
}

void verify_direct_witness(const RingSpec& spec, const Rat& x, const MemberWitness& wit) {
    auto gval = [&](const std::vector<Rat>& args) {
        std::vector<Rat> gs;
        for (const Rat& a : args) gs.push_back(gamma_eval(spec.params, a).value);
        return spec.g.eval_rat(gs);
    };
    Rat a = gval(wit.u), b = gval(wit.w);
    if (x * (1 + spec.params.t() * b) != a)
        throw invariant_violation("member_R_pgt: witness failed re-verification");
}

// x in R_{p,g,t} iff some b makes x (1 + t b) an achievable a-value
std::optional<MemberWitness> direct_member_search(const RingSpec& spec, const Rat& x,
                                                  const std::map<Rat, std::vector<Rat>>& A) {
    Rat t = spec.params.t();
    for (const auto& [b, wargs] : A) {
        Rat target = x * (1 + t * b);
        auto it = A.find(target);
        if (it == A.end()) continue;
        MemberWitness wit;
        wit.u = it->second;
        wit.w = wargs;
        wit.m = 0; // direct membership, no integral relation
        wit.g = spec.g;
        wit.t_sign = spec.params.t_sign;
        verify_direct_witness(spec, x, wit);
        return wit;
    }
    return std::nullopt;
}

} // namespace

void validate_ring_spec(const RingSpec& spec) {
    if (spec.n < 1) throw input_error("RingSpec: n must be >= 1");
    for (const auto& [e, c] : spec.g.terms())
        if (val_p(c, spec.params.p) < ExtInt(0))
            throw input_error("RingSpec: coefficient of g is not p-integral");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member: return "Member";
        case Verdict::NonMember: return "NonMember";
        case Verdict::Unknown: return "Unknown";
    }
    throw invariant_violation("verdict_name: bad tag");
}

std::vector<MPoly> enumerate_P(const KochenParams& params, long n, long budget) {
    if (n < 1) throw input_error("enumerate_P: n must be >= 1");
    std::vector<Rat> coeffs;
    for (const Rat& c : rationals_up_to_height(n))
        if (val_p(c, params.p) >= ExtInt(0)) coeffs.push_back(c);
    return enumerate_family(static_cast<int>(n), n, coeffs, budget);
}

MembershipVerdict member_R_pgt(const RingSpec& spec, const Rat& x, const SearchBounds& bounds) {
    validate_ring_spec(spec);
    MembershipVerdict out;
    if (auto obs = find_obstruction(spec, x)) {
        out.verdict = Verdict::NonMember;
        out.obstruction = obs;
        return out;
    }
    GammaTable T = build_gamma_table(spec.params, bounds.height);
    auto A = achievable_values(spec.g, T, bounds.max_tuples);
    if (auto wit = direct_member_search(spec, x, A)) {
        out.verdict = Verdict::Member;
        out.witness = wit;
        return out;
    }
    out.verdict = Verdict::Unknown;
    out.height_bound = bounds.height;
    return out;
}

MembershipVerdict member_R_pgtn(const RingSpec& spec, const Rat& x, const SearchBounds& bounds) {
    validate_ring_spec(spec);
    MembershipVerdict out;
    if (auto obs = find_obstruction(spec, x)) {
        out.verdict = Verdict::NonMember; // integral closedness of Z_(ell)
        out.obstruction = obs;
        return out;
    }
    GammaTable T = build_gamma_table(spec.params, bounds.height);
    auto A = achievable_values(spec.g, T, bounds.max_tuples);
    Rat t = spec.params.t();

    // m = 1: the relation x + a_0 = 0 needs a_0 = -x in R_{p,g,t}
    if (auto wit = direct_member_search(spec, -x, A)) {
        wit->m = 1;
        wit->relation = {-x};
        out.verdict = Verdict::Member;
        out.witness = wit;
        return out;
    }

    // m >= 2: upper coefficients from a small pool of ring elements, the
    // constant term is then forced and searched for directly
    if (spec.n >= 2) {
        GammaTable Ts = build_gamma_table(spec.params, bounds.coeff_height);
        auto As = achievable_values(spec.g, Ts, bounds.max_tuples);
        std::set<Rat> pool;
        for (const auto& [a, ua] : As)
            for (const auto& [b, wb] : As) {
                Rat den = 1 + t * b;
                if (den == 0) continue;
                pool.insert(a / den);
                if (static_cast<long>(pool.size()) >= bounds.max_coeff_candidates) break;
            }
        std::vector<Rat> ring_small(pool.begin(), pool.end());
        long tried = 0;
        for (long m = 2; m <= spec.n; ++m) {
            std::vector<size_t> pick(m - 1, 0);
            if (ring_small.empty()) break;
            while (tried < bounds.max_coeff_candidates) {
                ++tried;
                Rat a0 = -rat_pow(x, static_cast<unsigned long>(m));
                std::vector<Rat> rel(m, Rat(0));
                for (long i = 1; i < m; ++i) {
                    rel[i] = ring_small[pick[i - 1]];
                    a0 -= rel[i] * rat_pow(x, static_cast<unsigned long>(i));
                }
                rel[0] = a0;
                RingSpec inner = spec;
                if (auto wit = direct_member_search(inner, a0, A)) {
                    // coefficients above a_0 are re-verified by membership in
                    // the same pool construction; record the relation itself
                    MemberWitness full = *wit;
                    full.m = m;
                    full.relation = rel;
                    out.verdict = Verdict::Member;
                    out.witness = full;
                    return out;
                }
                size_t pos = 0;
                while (pos < pick.size() && ++pick[pos] == ring_small.size()) pick[pos++] = 0;
                if (pos == pick.size()) break;
            }
        }
    }
    out.verdict = Verdict::Unknown;
    out.height_bound = bounds.height;
    return out;
}

MembershipVerdict member_R_pn(const KochenParams& params, long n, const Rat& x,
                              const SearchBounds& bounds, long budget) {
    MembershipVerdict out;
    if (val_p(x, params.p) < ExtInt(0)) {
        out.verdict = Verdict::NonMember;
        Obstruction o;
        o.val_p = true;
        out.obstruction = o;
        return out;
    }
    std::vector<MPoly> gs = enumerate_P(params, n, budget);
    KochenParams plus(params.p, params.tau, +1);
    bool all_excluded = true;
    Int common_ell = 0;
    for (const MPoly& g : gs) {
        RingSpec spec{plus, g, n};
        // t = -p is covered through R_{p,g,-p,n} = -R_{p,g*,p,n}: as g runs
        // over the star-closed family, checking -x against t = p suffices
        for (int sign : {+1, -1}) {
            Rat y = sign > 0 ? x : -x;
            MembershipVerdict v = member_R_pgtn(spec, y, bounds);
            if (v.verdict == Verdict::Member) {
                out.verdict = Verdict::Member;
                out.witness = v.witness;
                out.witness->t_sign = sign; // reported against the original x
                return out;
            }
            if (v.verdict != Verdict::NonMember)
                all_excluded = false;
            else if (v.obstruction && !v.obstruction->val_p)
                common_ell = v.obstruction->ell;
        }
    }
    if (all_excluded) {
        out.verdict = Verdict::NonMember;
        Obstruction o;
        o.ell = common_ell;
        out.obstruction = o;
        return out;
    }
    out.verdict = Verdict::Unknown;
    out.height_bound = bounds.height;
    return out;
}

bool exclusion_root_test(const Int& p, const Int& ell) {
    if (ell == p) throw input_error("exclusion_root_test: ell must differ from p");
    if (!is_prime(p) || !is_prime(ell)) throw input_error("exclusion_root_test: arguments must be prime");
    for (Int x = 0; x < ell; ++x) {
        Int xp;
        mpz_powm(xp.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t(), ell.get_mpz_t());
        Int d = (xp - x) % ell;
        if (d < 0) d += ell;
        if (d == 1 || d == ell - 1) return false;
    }
    return true;
}

bool deep_exclusion_test(const Int& p, const Int& ell) {
    if (ell == p) throw input_error("deep_exclusion_test: ell must differ from p");
    if (!is_prime(p) || !is_prime(ell)) throw input_error("deep_exclusion_test: arguments must be prime");
    return (p - 1) % (ell - 1) == 0;
}

bool exclusion_applies(const KochenParams& params, const MPoly& g, const Rat& t, const Int& ell) {
    if (ell == params.p) return false;
    // gamma_p(Q) in ell Z_(ell) makes g(gamma...) = g(0) mod ell, so the
    // denominators 1 + t b are ell-units exactly when 1 + t g(0) is one
    if (!deep_exclusion_test(params.p, ell)) return false;
    for (const auto& [e, c] : g.terms())
        if (val_p(c, ell) < ExtInt(0)) return false;
    Rat g0 = g.coeff(std::vector<int>(g.arity(), 0));
    Rat den = 1 + t * g0;
    return den != 0 && val_p(den, ell) == ExtInt(0);
}

SubringWitness proper_subring_witness(const Int& p) {
    if (!is_prime(p)) throw input_error("proper_subring_witness: p must be prime");
    SubringWitness out;
    out.ell = p == 2 ? Int(17) : Int(2);
    if (!exclusion_root_test(p, out.ell))
        throw invariant_violation("proper_subring_witness: root test failed");
    out.witness = Rat(1) / Rat(out.ell);
    KochenParams kp(p, Tau{1, 1});
    for (const Rat& x : rationals_up_to_height(20)) {
        GammaValue g = gamma_eval(kp, x);
        if (g.pole) continue;
        if (val_p(g.value, out.ell) < ExtInt(0))
            throw invariant_violation("proper_subring_witness: sampled gamma left Z_(ell)");
        ++out.samples_checked;
    }
    return out;
}

LowerBoundCertificate pi_lower_bound_family(std::vector<MPoly> family, long n,
                                            const Int& prime_bound) {
    if (n < 1) throw input_error("pi_lower_bound: n must be >= 1");
    if (family.empty()) throw input_error("pi_lower_bound: empty family");
    // t = -p is handled through the identity R_{p,g,-p,n} = -R_{p,g*,p,n},
    // which needs the family closed under g -> -g(-X)
    auto star = [](const MPoly& g) {
        MPoly s(g.arity());
        for (const auto& [e, c] : g.terms()) {
            long deg = 0;
            for (int ei : e) deg += ei;
            s.add_term(e, deg % 2 == 0 ? -c : c);
        }
        return s;
    };
    for (const MPoly& g : family) {
        MPoly s = star(g);
        if (std::find(family.begin(), family.end(), s) == family.end())
            throw input_error("pi_lower_bound: family is not closed under g -> -g(-X)");
    }

    LowerBoundCertificate cert;
    cert.n = n;
    cert.family = family;
    // least admissible ell
    Int ell = Int(family.size()) + 2;
    while (true) {
        while (!is_prime(ell)) ++ell;
        bool ok = true;
        for (const MPoly& g : family)
            for (const auto& [e, c] : g.terms())
                if (val_p(c, ell) < ExtInt(0)) ok = false;
        if (ok) break;
        ++ell;
    }
    cert.ell = ell;
    // least a with a != 0 and a != g(0) mod ell for every g
    std::set<Int> banned = {Int(0)};
    for (const MPoly& g : family)
        banned.insert(mod_rat(g.coeff(std::vector<int>(g.arity(), 0)), ell));
    Int a = 1;
    while (banned.count(a)) ++a;
    if (a >= ell) throw invariant_violation("pi_lower_bound: no admissible residue a");
    cert.a = a;
    // p = 1 mod (ell-1), p = -a^{-1} mod ell, p > ell, via CRT + Dirichlet
    Int ainv;
    mpz_invert(ainv.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
    Int r_ell = (ell - ainv) % ell;
    Int M = ell * (ell - 1);
    // residue class r with r = 1 mod (ell-1) and r = r_ell mod ell
    Int r = 0;
    for (Int c = r_ell; c < M; c += ell)
        if (c % (ell - 1) == 1) { r = c; break; }
    auto p = dirichlet_prime(r, M, [&](const Int& q) { return q > ell; }, prime_bound);
    if (!p)
        throw not_found_error("pi_lower_bound: no prime = " + r.get_str() + " mod " +
                              M.get_str() + " up to " + prime_bound.get_str());
    cert.p = *p;
    std::ostringstream rep;
    rep << "|P| = " << family.size() << ", ell = " << ell.get_str() << " > |P|+1, a = "
        << a.get_str() << ", p = " << cert.p.get_str() << " = 1 mod " << Int(ell - 1).get_str()
        << " and = -a^-1 mod " << ell.get_str()
        << "; union of R_{p,g,+-p," << n << "}(Q) lies in Z_(" << ell.get_str()
        << "), while R_p(Q) = Z_(p) contains 1/" << ell.get_str() << ", so pi_p(Q) > " << n;
    cert.report = rep.str();
    lower_bound_verify(cert);
    return cert;
}

LowerBoundCertificate pi_lower_bound(long n, long budget, const Int& prime_bound) {
    if (n < 1) throw input_error("pi_lower_bound: n must be >= 1");
    std::vector<Rat> coeffs = rationals_up_to_height(n);
    auto family = enumerate_family(static_cast<int>(n), n, coeffs, budget);
    return pi_lower_bound_family(std::move(family), n, prime_bound);
}

void lower_bound_verify(const LowerBoundCertificate& c) {
    if (!is_prime(c.ell) || !is_prime(c.p)) throw invariant_violation("certificate: non-prime ell or p");
    if (c.ell <= Int(c.family.size()) + 1) throw invariant_violation("certificate: ell too small");
    if (c.p <= c.ell) throw invariant_violation("certificate: p <= ell");
    if ((c.p - 1) % (c.ell - 1) != 0) throw invariant_violation("certificate: p != 1 mod ell-1");
    if ((c.p * c.a + 1) % c.ell != 0) throw invariant_violation("certificate: p != -a^-1 mod ell");
    if (c.a % c.ell == 0) throw invariant_violation("certificate: a = 0 mod ell");
    for (const MPoly& g : c.family) {
        for (const auto& [e, co] : g.terms()) {
            if (val_p(co, c.ell) < ExtInt(0))
                throw invariant_violation("certificate: family not in Z_(ell)[X]");
            if (val_p(co, c.p) < ExtInt(0))
                throw invariant_violation("certificate: family not p-admissible");
        }
        Int g0 = mod_rat(g.coeff(std::vector<int>(g.arity(), 0)), c.ell);
        if (g0 == c.a % c.ell) throw invariant_violation("certificate: a = g(0) mod ell");
    }
}

} // namespace kochenlab
