#include "kochenlab/numberfield.hpp"

#include "kochenlab/maximalorder.hpp"

#include <algorithm>

namespace kochenlab {

namespace {

UPoly upoly_from_coords(const std::vector<Rat>& c) {
    return UPoly(std::vector<Rat>(c));
}

std::vector<Rat> coords_from_upoly(const UPoly& u, int n) {
    std::vector<Rat> c(n, Rat(0));
    for (int i = 0; i <= u.degree(); ++i) c[i] = u.coeff(i);
    return c;
}

} // namespace

NFElem::NFElem(const NumberField* L, std::vector<Rat> coords) : L_(L), c_(std::move(coords)) {
    if (L_ == nullptr) throw input_error("NFElem: null field");
    if (static_cast<int>(c_.size()) != L_->degree())
        throw input_error("NFElem: coordinate count must equal the field degree");
}

bool NFElem::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

NFElem NFElem::operator+(const NFElem& o) const {
    if (L_ != o.L_) throw input_error("NFElem: mixed fields");
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return NFElem(L_, std::move(r));
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return NFElem(L_, std::move(r));
}

NFElem NFElem::operator*(const NFElem& o) const {
    if (L_ != o.L_) throw input_error("NFElem: mixed fields");
    UPoly prod = upoly_from_coords(c_) * upoly_from_coords(o.c_);
    return L_->from_upoly(prod);
}

NFElem NFElem::operator*(const Rat& k) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return NFElem(L_, std::move(r));
}

NFElem NFElem::inv() const {
    if (is_zero()) throw domain_error("NFElem: inverse of zero");
    auto x = upoly_xgcd(upoly_from_coords(c_), L_->h());
    if (x.g.degree() != 0)
        throw invariant_violation("NFElem::inv: gcd with the minimal polynomial is not constant");
    return L_->from_upoly(x.u);
}

NFElem NFElem::pow(unsigned n) const {
    NFElem acc = L_->one();
    NFElem base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const { return L_ == o.L_ && c_ == o.c_; }

std::string NFElem::str() const { return upoly_from_coords(c_).str("T"); }

NumberField::NumberField(UPoly h) : h_(std::move(h)) {
    if (h_.degree() < 1) throw input_error("NumberField: minimal polynomial must be nonconstant");
    if (h_.lead() != 1) throw input_error("NumberField: minimal polynomial must be monic");
    for (const Rat& c : h_.coeffs())
        if (c.get_den() != 1) throw input_error("NumberField: minimal polynomial must have integer coefficients");
    if (!upoly_irreducible_Q(h_)) throw input_error("NumberField: minimal polynomial is reducible");
}

NFElem NumberField::theta() const {
    std::vector<Rat> c(degree(), Rat(0));
    if (degree() == 1) return from_upoly(UPoly::x()); // theta is rational here
    c[1] = 1;
    return NFElem(this, std::move(c));
}

NFElem NumberField::from_rat(const Rat& x) const {
    std::vector<Rat> c(degree(), Rat(0));
    c[0] = x;
    return NFElem(this, std::move(c));
}

NFElem NumberField::from_upoly(const UPoly& u) const {
    UPoly r = u.divmod(h_).second;
    return NFElem(this, coords_from_upoly(r, degree()));
}

std::vector<NFPrime> primes_above(const NumberField& L, const Int& p) {
    if (!is_prime(p)) throw input_error("primes_above: p is not prime");
    PrimePoly hbar = primepoly_from_upoly(L.h(), p);
    auto fac = factor_mod_p(hbar);

    // Dedekind criterion: with hbar = prod gbar_i^{e_i}, set g = prod gbar_i,
    // h1 = hbar / g, F = (lift(g) lift(h1) - h)/p; the index is prime to p
    // iff gcd(F mod p, g, h1) = 1.
    PrimePoly g = PrimePoly::constant(p, 1), h1 = PrimePoly::constant(p, 1);
    for (const auto& [gi, ei] : fac) {
        g = g * gi;
        for (int j = 1; j < ei; ++j) h1 = h1 * gi;
    }
    UPoly gl = upoly_from_primepoly(g), h1l = upoly_from_primepoly(h1);
    UPoly Fnum = gl * h1l - L.h();
    std::vector<Rat> fc;
    for (const Rat& c : Fnum.coeffs()) fc.push_back(c / Rat(p));
    for (const Rat& c : fc)
        if (c.get_den() != 1) throw invariant_violation("primes_above: Dedekind numerator not divisible by p");
    PrimePoly F = primepoly_from_upoly(UPoly(std::move(fc)), p);
    PrimePoly common = primepoly_gcd(primepoly_gcd(F, g), h1);
    if (common.degree() > 0)
        throw unsupported_error("primes_above: p divides the index of the generator order; pick another generator");

    std::vector<NFPrime> out;
    int sum = 0;
    for (const auto& [gi, ei] : fac) {
        NFPrime P;
        P.p = p;
        P.gbar = gi;
        P.e = ei;
        P.f = gi.degree();
        sum += P.e * P.f;
        out.push_back(std::move(P));
    }
    if (sum != L.degree()) throw invariant_violation("primes_above: sum of e*f misses the degree");
    return out;
}

namespace {

// Ints mod m as dense polynomials, low degree first (local mirror of the
// lifting helpers; divisor monic).
using ZV = std::vector<Int>;

void ztrim(ZV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZV zreduce(ZV a, const Int& m) {
    for (Int& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(a);
    return a;
}

ZV zmul(const ZV& a, const ZV& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

ZV zsub(const ZV& a, const ZV& b, const Int& m) {
    ZV r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zreduce(std::move(r), m);
}

ZV zmod_monic(ZV a, const ZV& d, const Int& m) {
    int dd = static_cast<int>(d.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= dd; --k) {
        Int c = a[k] % m;
        if (c < 0) c += m;
        if (c == 0) { a[k] = 0; continue; }
        for (int j = 0; j <= dd; ++j) a[k - dd + j] -= c * d[j];
        a[k] = 0;
    }
    return zreduce(std::move(a), m);
}

ZV zv_of(const UPoly& f, const Int& m) {
    ZV r;
    for (const Rat& c : f.coeffs()) {
        if (c.get_den() != 1) throw domain_error("expected integer coefficients");
        r.push_back(c.get_num());
    }
    return zreduce(std::move(r), m);
}

// Lift the grouped factorization h = prod gbar_i^{e_i} (mod p) to p^k,
// returned in primes_above order.
std::vector<UPoly> lift_groups(const NumberField& L, const std::vector<NFPrime>& primes,
                               const Int& p, int k) {
    std::vector<PrimePoly> groups;
    for (const NFPrime& P : primes) {
        PrimePoly g = PrimePoly::constant(p, 1);
        for (int i = 0; i < P.e; ++i) g = g * P.gbar;
        groups.push_back(g);
    }
    return hensel_lift(L.h(), groups, p, k);
}

struct ClearedElem {
    UPoly U;   // integer numerator polynomial in theta
    long vd;   // v_p of the cleared denominator
};

ClearedElem clear_denominator(const NFElem& x, const Int& p) {
    UPoly u = UPoly(std::vector<Rat>(x.coords().begin(), x.coords().end()));
    Int d = upoly_common_den(u);
    ClearedElem out;
    out.U = u * Rat(d);
    out.vd = d == 1 ? 0 : val_p_int(d, p);
    return out;
}

} // namespace

ExtInt val_at_prime(const NumberField& L, const NFPrime& P, const NFElem& x) {
    if (x.field() != &L) throw input_error("val_at_prime: element from another field");
    if (x.is_zero()) return ExtInt::infinity();
    auto primes = primes_above(L, P.p);
    size_t which = primes.size();
    for (size_t i = 0; i < primes.size(); ++i)
        if (primes[i].gbar == P.gbar) which = i;
    if (which == primes.size()) throw input_error("val_at_prime: prime does not belong to this field");

    ClearedElem cx = clear_denominator(x, P.p);
    // v_p(Res(Ghat, U)) = f * v_P(U(theta)) once the precision exceeds it
    for (int k = 16; k <= 4096; k *= 2) {
        std::vector<UPoly> lifts = lift_groups(L, primes, P.p, k);
        Rat res = upoly_resultant(lifts[which], cx.U);
        if (res == 0) continue;
        long long v = val_p_int(res.get_num(), P.p);
        if (v < k) {
            if (v % P.f != 0)
                throw invariant_violation("val_at_prime: resultant valuation not divisible by the residue degree");
            return ExtInt(v / P.f - static_cast<long long>(P.e) * cx.vd);
        }
    }
    throw resource_error("val_at_prime: precision ceiling reached");
}

PrimePoly residue_at_prime(const NumberField& L, const NFPrime& P, const NFElem& x) {
    if (x.field() != &L) throw input_error("residue_at_prime: element from another field");
    UPoly u = UPoly(std::vector<Rat>(x.coords().begin(), x.coords().end()));
    Int d = upoly_common_den(u);
    if (mpz_divisible_p(d.get_mpz_t(), P.p.get_mpz_t()))
        throw unsupported_error("residue_at_prime: representation has a denominator divisible by p");
    PrimePoly num = primepoly_from_upoly(u * Rat(d), P.p).mod(P.gbar);
    Int di;
    mpz_invert(di.get_mpz_t(), d.get_mpz_t(), P.p.get_mpz_t());
    return num.scale(di).mod(P.gbar);
}

int residue_subfield_degree(const NFPrime& P, const PrimePoly& res) {
    PrimePoly cur = res;
    for (int d = 1; d <= P.f; ++d) {
        cur = cur.powmod(P.p, P.gbar);
        if (cur == res.mod(P.gbar)) return d;
    }
    throw invariant_violation("residue_subfield_degree: Frobenius orbit did not close");
}

std::vector<NFPrime> s_p_tau(const NumberField& L, const Int& p, Tau tau) {
    if (tau.e < 1 || tau.f < 1) throw input_error("s_p_tau: tau components must be >= 1");
    std::vector<NFPrime> out;
    for (const NFPrime& P : primes_above(L, p))
        if (P.e <= tau.e && tau.f % P.f == 0) out.push_back(P);
    return out;
}

std::vector<NFPrime> s_p_tau_basic(const NumberField& L, const Int& p, Tau tau, const NFElem& a) {
    std::vector<NFPrime> out;
    for (const NFPrime& P : s_p_tau(L, p, tau))
        if (val_at_prime(L, P, a) >= ExtInt(0)) out.push_back(P);
    return out;
}

bool holomorphy_member(const NumberField& L, const Int& p, Tau tau, const NFElem& x) {
    for (const NFPrime& P : s_p_tau(L, p, tau))
        if (val_at_prime(L, P, x) < ExtInt(0)) return false;
    return true;
}

NFElem weak_approx(const NumberField& L, const std::vector<ApproxConstraint>& constraints) {
    if (constraints.empty()) throw input_error("weak_approx: no constraints");
    Int p = constraints[0].P.p;
    for (const auto& c : constraints) {
        if (c.P.p != p) throw unsupported_error("weak_approx: constraints must share one rational prime");
        if (c.target.field() != &L) throw input_error("weak_approx: target from another field");
    }
    for (size_t i = 0; i < constraints.size(); ++i)
        for (size_t j = i + 1; j < constraints.size(); ++j)
            if (constraints[i].P.gbar == constraints[j].P.gbar)
                throw input_error("weak_approx: duplicate prime in constraints");

    auto primes = primes_above(L, p);
    std::vector<size_t> which(constraints.size(), primes.size());
    for (size_t i = 0; i < constraints.size(); ++i) {
        for (size_t j = 0; j < primes.size(); ++j)
            if (primes[j].gbar == constraints[i].P.gbar) which[i] = j;
        if (which[i] == primes.size()) throw input_error("weak_approx: prime does not belong to this field");
    }

    // scale away p in the target denominators
    long m = 0;
    long maxb = 1;
    int maxe = 1;
    for (const auto& c : constraints) {
        ClearedElem ce = clear_denominator(c.target, p);
        m = std::max(m, ce.vd);
        maxb = std::max(maxb, c.bound);
        maxe = std::max(maxe, c.P.e);
    }
    Rat pm = 1;
    for (long i = 0; i < m; ++i) pm *= Rat(p);

    int k0 = static_cast<int>(2 * (maxb + m * maxe + 2));
    for (int k = k0; k <= 4096; k *= 2) {
        Int modulus = 1;
        for (int i = 0; i < k; ++i) modulus *= p;
        std::vector<UPoly> lifts = lift_groups(L, primes, p, k);
        ZV hz = zv_of(L.h(), modulus);

        ZV acc; // the CRT combination
        for (size_t i = 0; i < constraints.size(); ++i) {
            // idempotent: 1 mod G_i, 0 mod the others
            ZV Mi = {Int(1)};
            for (size_t j = 0; j < primes.size(); ++j)
                if (j != which[i]) Mi = zmul(Mi, zv_of(lifts[j], modulus), modulus);
            ZV Gi = zv_of(lifts[which[i]], modulus);
            // invert Mi mod (G_i, p) then refine by Newton iteration
            PrimePoly gie = PrimePoly::constant(p, 1);
            for (int r = 0; r < primes[which[i]].e; ++r) gie = gie * primes[which[i]].gbar;
            PrimePoly mi_p(p, ZV(Mi));
            // xgcd over F_p[y] modulo gie
            PrimePoly r0 = gie, r1 = mi_p.mod(gie);
            PrimePoly s0(p), s1 = PrimePoly::constant(p, 1);
            while (!r1.is_zero()) {
                auto [qq, rr] = r0.divmod(r1);
                PrimePoly s2 = s0 - qq * s1;
                r0 = r1; r1 = rr;
                s0 = s1; s1 = s2;
            }
            if (r0.degree() != 0)
                throw invariant_violation("weak_approx: factor groups not coprime");
            Int li;
            mpz_invert(li.get_mpz_t(), r0.lead().get_mpz_t(), p.get_mpz_t());
            ZV w = zreduce(s0.scale(li).coeffs(), modulus);
            int iters = 1;
            while ((1L << iters) < k) ++iters;
            for (int it = 0; it <= iters; ++it) {
                // w <- w (2 - Mi w) mod (G_i, p^k)
                ZV t = zmul(Mi, w, modulus);
                ZV two = {Int(2)};
                t = zsub(two, t, modulus);
                w = zmod_monic(zmul(w, t, modulus), Gi, modulus);
            }
            ZV idem = zmod_monic(zmul(Mi, w, modulus), hz, modulus);
            // scaled target as an integer polynomial mod p^k
            NFElem st = constraints[i].target * pm;
            ZV tv;
            for (const Rat& c : st.coords()) {
                Int den = c.get_den(), di;
                if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
                    throw invariant_violation("weak_approx: scaled target still has p in a denominator");
                tv.push_back(c.get_num() * di);
            }
            tv = zreduce(std::move(tv), modulus);
            ZV term = zmod_monic(zmul(idem, tv, modulus), hz, modulus);
            if (acc.empty()) acc = term;
            else {
                ZV sum(std::max(acc.size(), term.size()), Int(0));
                for (size_t j = 0; j < acc.size(); ++j) sum[j] = acc[j];
                for (size_t j = 0; j < term.size(); ++j) sum[j] += term[j];
                acc = zreduce(std::move(sum), modulus);
            }
        }

        std::vector<Rat> coords(L.degree(), Rat(0));
        for (size_t j = 0; j < acc.size() && j < coords.size(); ++j) {
            Int c = acc[j];
            if (c * 2 > modulus) c -= modulus; // symmetric lift keeps heights small
            coords[j] = Rat(c) / pm;
        }
        NFElem cand(&L, std::move(coords));
        bool ok = true;
        for (const auto& c : constraints)
            if (val_at_prime(L, c.P, cand - c.target) < ExtInt(c.bound)) ok = false;
        if (ok) return cand; // verification, not construction, is the contract
    }
    throw resource_error("weak_approx: precision ceiling reached");
}

UPoly minimal_polynomial(const NFElem& x) {
    const NumberField* L = x.field();
    if (L == nullptr) throw input_error("minimal_polynomial: empty element");
    int n = L->degree();
    // incremental Gaussian elimination on the powers of x, with the
    // combination tracked so the dependency yields the polynomial
    std::vector<std::vector<Rat>> basis;      // echelon rows, length n
    std::vector<std::vector<Rat>> combos;     // their expressions in powers
    std::vector<int> pivots;
    NFElem power = L->one();
    for (int j = 0; j <= n; ++j) {
        std::vector<Rat> row = power.coords();
        std::vector<Rat> combo(j + 1, Rat(0));
        combo[j] = 1;
        for (size_t b = 0; b < basis.size(); ++b) {
            Rat c = row[pivots[b]];
            if (c == 0) continue;
            for (int i = 0; i < n; ++i) row[i] -= basis[b][i] * c;
            for (size_t i = 0; i < combos[b].size(); ++i) combo[i] -= combos[b][i] * c;
        }
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (row[i] != 0) { piv = i; break; }
        if (piv < 0) {
            // dependency: sum combo_i x^i = 0 with combo_j = 1
            return UPoly(std::move(combo)).monic();
        }
        Rat c = row[piv];
        for (int i = 0; i < n; ++i) row[i] /= c;
        for (auto& cc : combo) cc /= c;
        basis.push_back(std::move(row));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        power = power * x;
    }
    throw invariant_violation("minimal_polynomial: no dependency within degree bound");
}

namespace {

// integer monic polynomial with the same splitting behavior as monic u over Q
UPoly monicize_integer(const UPoly& u, Int& scale_out) {
    Int den = upoly_common_den(u);
    UPoly w = u * Rat(den);
    Int content = 0;
    for (const Rat& c : w.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    if (content > 1) w = w * (Rat(1) / Rat(content));
    if (w.lead() < 0) w = -w;
    Int l = w.lead().get_num();
    int n = w.degree();
    std::vector<Rat> vc(n + 1);
    vc[n] = 1;
    Int scale = 1;
    for (int i = n - 1; i >= 0; --i) {
        vc[i] = w.coeff(i) * Rat(scale);
        scale *= l;
    }
    scale_out = l;
    return UPoly(std::move(vc));
}

// whether the field cut out by an irreducible factor has a prime of type
// at most tau above p; prime_types_above also covers index-divisible cases
bool field_has_type_tau_prime(const UPoly& factor, const Int& p, Tau tau, UPoly& used_poly) {
    Int l;
    UPoly h0 = monicize_integer(factor, l);
    used_poly = h0;
    if (h0.degree() == 1) return true; // the branch field is Q; (1,1) is within any tau
    NumberField E(h0);
    for (const PrimeType& t : prime_types_above(E, p))
        if (t.e <= tau.e && tau.f % t.f == 0) return true;
    return false;
}

} // namespace

KillCheckReport lemma_kill_report(const Int& p, Tau tau, const Rat& a) {
    if (!is_prime(p)) throw input_error("lemma_kill_check: p must be prime");
    if (tau.e < 1 || tau.f < 1) throw input_error("lemma_kill_check: tau components must be >= 1");
    // g_a = t a^e ((T^{q^f} - T)^2 - 1) - (T^{q^f} - T), with t = q = p
    Int qf = 1;
    for (long i = 0; i < tau.f; ++i) qf *= p;
    if (2 * qf > 12) throw resource_error("lemma_kill_check: degree of g_a exceeds the factorization cap");
    UPoly s = UPoly::monomial(static_cast<int>(qf.get_si()), 1) - UPoly::x();
    Rat coef = Rat(p) * rat_pow(a, static_cast<unsigned long>(tau.e));
    UPoly g = (s * s - UPoly::constant(1)) * coef - s;

    KillCheckReport rep;
    rep.g_a = mpoly_from_upoly(g);
    rep.left_nonempty = val_p(a, p) >= ExtInt(0);

    bool right_nonempty = false;
    if (g.degree() < 1) {
        // g_a collapses only if a is a pole-free degenerate case; the empty
        // algebra has no maximal ideals
        rep.agree = (rep.left_nonempty == right_nonempty);
    } else {
        auto fac = factor_over_Q(g);
        for (const auto& [u, mult] : fac.factors) {
            KillCheckReport::Branch br;
            br.factor = u;
            br.has_type_tau_prime = field_has_type_tau_prime(u, p, tau, br.field_poly);
            right_nonempty = right_nonempty || br.has_type_tau_prime;
            rep.branches.push_back(std::move(br));
        }
        rep.agree = (rep.left_nonempty == right_nonempty);
    }
    return rep;
}

bool lemma_kill_check(const Int& p, Tau tau, const Rat& a) {
    KillCheckReport rep = lemma_kill_report(p, tau, a);
    if (!rep.agree)
        throw invariant_violation("lemma_kill_check: factor-field description disagrees with the base-field answer");
    return true;
}

} // namespace kochenlab
