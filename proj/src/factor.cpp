#include "kochenlab/factor.hpp"

#include <algorithm>
#include <random>

namespace kochenlab {

PrimePoly::PrimePoly(Int p, std::vector<Int> cs) : p_(std::move(p)), c_(std::move(cs)) {
    for (Int& c : c_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    trim();
}

Int PrimePoly::lead() const {
    if (c_.empty()) throw domain_error("PrimePoly::lead: zero polynomial");
    return c_.back();
}

PrimePoly PrimePoly::operator+(const PrimePoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator-(const PrimePoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator*(const PrimePoly& o) const {
    if (c_.empty() || o.c_.empty()) return PrimePoly(p_);
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::scale(const Int& k) const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return PrimePoly(p_, std::move(r));
}

bool PrimePoly::operator<(const PrimePoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return c_ < o.c_;
}

PrimePoly PrimePoly::monic() const {
    if (c_.empty()) return *this;
    Int li;
    if (mpz_invert(li.get_mpz_t(), lead().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw domain_error("PrimePoly::monic: leading coefficient not invertible");
    return scale(li);
}

PrimePoly PrimePoly::derivative() const {
    if (c_.size() <= 1) return PrimePoly(p_);
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return PrimePoly(p_, std::move(r));
}

Int PrimePoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    if (acc < 0) acc += p_;
    return acc;
}

std::pair<PrimePoly, PrimePoly> PrimePoly::divmod(const PrimePoly& d) const {
    if (d.is_zero()) throw domain_error("PrimePoly::divmod: division by zero polynomial");
    PrimePoly r = *this;
    if (r.degree() < d.degree()) return {PrimePoly(p_), r};
    std::vector<Int> q(r.degree() - d.degree() + 1, Int(0));
    Int li;
    if (mpz_invert(li.get_mpz_t(), d.lead().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw domain_error("PrimePoly::divmod: leading coefficient not invertible");
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Int c = r.lead() * li % p_;
        q[k] = c;
        std::vector<Int> sub(k + d.c_.size(), Int(0));
        for (size_t j = 0; j < d.c_.size(); ++j) sub[k + j] = d.c_[j] * c;
        r = r - PrimePoly(p_, std::move(sub));
    }
    return {PrimePoly(p_, std::move(q)), r};
}

PrimePoly PrimePoly::powmod(const Int& e, const PrimePoly& m) const {
    PrimePoly acc = constant(p_, 1);
    PrimePoly base = mod(m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base).mod(m);
        base = (base * base).mod(m);
        k >>= 1;
    }
    return acc;
}

PrimePoly primepoly_gcd(const PrimePoly& a, const PrimePoly& b) {
    PrimePoly x = a, y = b;
    while (!y.is_zero()) {
        PrimePoly r = x.mod(y);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

PrimePoly primepoly_from_upoly(const UPoly& f, const Int& p) {
    std::vector<Int> cs;
    for (const Rat& c : f.coeffs()) {
        Int num = c.get_num(), den = c.get_den();
        Int di;
        if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw domain_error("primepoly_from_upoly: denominator vanishes mod " + p.get_str());
        cs.push_back(num * di);
    }
    return PrimePoly(p, std::move(cs));
}

UPoly upoly_from_primepoly(const PrimePoly& f) {
    std::vector<Rat> cs;
    for (const Int& c : f.coeffs()) cs.emplace_back(c);
    return UPoly(std::move(cs));
}

namespace {

struct XgcdP {
    PrimePoly g, u, v;
};

XgcdP primepoly_xgcd(const PrimePoly& a, const PrimePoly& b) {
    const Int& p = a.p();
    PrimePoly r0 = a, r1 = b;
    PrimePoly u0 = PrimePoly::constant(p, 1), u1(p);
    PrimePoly v0(p), v1 = PrimePoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        PrimePoly u2 = u0 - q * u1;
        PrimePoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Int li;
    mpz_invert(li.get_mpz_t(), r0.lead().get_mpz_t(), p.get_mpz_t());
    return {r0.scale(li), u0.scale(li), v0.scale(li)};
}

// p-th root when f' = 0; over F_p the coefficients come over unchanged.
PrimePoly pth_root_fp(const PrimePoly& f) {
    long step = f.p().get_si();
    std::vector<Int> r;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(step)) r.push_back(f.coeff(i));
    return PrimePoly(f.p(), std::move(r));
}

void squarefree_fp(const PrimePoly& f, int mult, std::vector<std::pair<PrimePoly, int>>& out) {
    if (f.degree() <= 0) return;
    long pl = f.p().get_si();
    PrimePoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_fp(pth_root_fp(f), mult * static_cast<int>(pl), out);
        return;
    }
    PrimePoly c = primepoly_gcd(f, fp);
    PrimePoly w = f.divmod(c).first;
    int i = 1;
    while (w.degree() > 0) {
        PrimePoly y = primepoly_gcd(w, c);
        PrimePoly z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_fp(pth_root_fp(c), mult * static_cast<int>(pl), out);
}

void edf_fp(const PrimePoly& f, int d, std::mt19937_64& rng, std::vector<PrimePoly>& out) {
    const Int& p = f.p();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        std::vector<Int> hc(f.degree());
        for (auto& c : hc) c = Int(static_cast<unsigned long>(rng()));
        PrimePoly h(p, std::move(hc));
        if (h.degree() < 1) continue;
        PrimePoly g = primepoly_gcd(h, f);
        if (g.degree() == 0) {
            if (p == 2) {
                PrimePoly t = h.mod(f), acc = t;
                for (int i = 1; i < d; ++i) {
                    t = (t * t).mod(f);
                    acc = acc + t;
                }
                g = primepoly_gcd(acc, f);
            } else {
                Int e = 1;
                for (int i = 0; i < d; ++i) e *= p;
                e = (e - 1) / 2;
                PrimePoly m = h.powmod(e, f) - PrimePoly::constant(p, 1);
                g = primepoly_gcd(m, f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_fp(g, d, rng, out);
            edf_fp(f.divmod(g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<PrimePoly, int>> factor_mod_p(const PrimePoly& f) {
    if (f.is_zero()) throw input_error("factor_mod_p: zero polynomial");
    std::vector<std::pair<PrimePoly, int>> result;
    if (f.degree() == 0) return result;
    const Int& p = f.p();
    std::vector<std::pair<PrimePoly, int>> sqf;
    squarefree_fp(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x70666163u);
    for (const auto& [part, mult] : sqf) {
        PrimePoly g = part;
        PrimePoly h = PrimePoly::x(p).mod(g);
        int d = 0;
        std::vector<std::pair<PrimePoly, int>> byDeg;
        while (g.degree() > 0 && 2 * (d + 1) <= g.degree()) {
            ++d;
            h = h.powmod(p, g);
            PrimePoly gd = primepoly_gcd(h - PrimePoly::x(p), g);
            if (gd.degree() > 0) {
                byDeg.emplace_back(gd, d);
                g = g.divmod(gd).first;
                h = h.mod(g);
            }
        }
        if (g.degree() > 0) byDeg.emplace_back(g, g.degree());
        for (const auto& [prod, deg] : byDeg) {
            std::vector<PrimePoly> irr;
            edf_fp(prod, deg, rng, irr);
            for (const auto& u : irr) result.emplace_back(u, mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return result;
}

std::vector<std::pair<MPoly, int>> factor_mod_p(const MPoly& f, const Int& p) {
    if (!is_prime(p)) throw input_error("factor_mod_p: modulus is not prime");
    auto fs = factor_mod_p(primepoly_from_upoly(upoly_from_mpoly(f), p));
    std::vector<std::pair<MPoly, int>> out;
    for (const auto& [g, m] : fs) out.emplace_back(mpoly_from_upoly(upoly_from_primepoly(g)), m);
    return out;
}

namespace {

// Arithmetic on dense integer polynomials reduced mod m, low degree first.
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

ZV zadd(const ZV& a, const ZV& b, const Int& m) {
    ZV r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zreduce(std::move(r), m);
}

ZV zsub(const ZV& a, const ZV& b, const Int& m) {
    ZV r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zreduce(std::move(r), m);
}

ZV zmul(const ZV& a, const ZV& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

// divisor must be monic
std::pair<ZV, ZV> zdivmod(ZV a, const ZV& d, const Int& m) {
    if (d.empty() || d.back() != 1) throw domain_error("zdivmod: divisor must be monic");
    int dd = static_cast<int>(d.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < dd) return {{}, std::move(a)};
    ZV q(a.size() - d.size() + 1, Int(0));
    for (int k = static_cast<int>(a.size()) - 1; k >= dd; --k) {
        Int c = a[k] % m;
        if (c < 0) c += m;
        if (c == 0) { a[k] = 0; continue; }
        q[k - dd] = c;
        for (int j = 0; j <= dd; ++j) a[k - dd + j] -= c * d[j];
    }
    return {zreduce(std::move(q), m), zreduce(std::move(a), m)};
}

struct HenselPair {
    ZV g, h, s, t;
};

// One quadratic step: from f = g h (mod m), s g + t h = 1 (mod m), with h
// monic, to the same relations mod m^2.
HenselPair hensel_step(const ZV& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    ZV e = zsub(f, zmul(in.g, in.h, m2), m2);
    auto [q, r] = zdivmod(zmul(in.s, e, m2), in.h, m2);
    ZV g1 = zadd(zadd(in.g, zmul(in.t, e, m2), m2), zmul(q, in.g, m2), m2);
    ZV h1 = zadd(in.h, r, m2);
    ZV one = {Int(1)};
    ZV b = zsub(zadd(zmul(in.s, g1, m2), zmul(in.t, h1, m2), m2), one, m2);
    auto [c, d] = zdivmod(zmul(in.s, b, m2), h1, m2);
    ZV s1 = zsub(in.s, d, m2);
    ZV t1 = zsub(zsub(in.t, zmul(in.t, b, m2), m2), zmul(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

ZV zv_from_upoly(const UPoly& f) {
    ZV r;
    for (const Rat& c : f.coeffs()) {
        if (c.get_den() != 1) throw domain_error("expected integer coefficients");
        r.push_back(c.get_num());
    }
    return r;
}

UPoly upoly_from_zv(const ZV& a) {
    std::vector<Rat> cs;
    for (const Int& c : a) cs.emplace_back(c);
    return UPoly(std::move(cs));
}

// Lift f = prod(gs) (mod p), all monic, to precision p^k (tree of pair lifts).
void hensel_tree(const ZV& f, const std::vector<PrimePoly>& gs, size_t lo, size_t hi,
                 const Int& p, const Int& target, std::vector<ZV>& out) {
    if (hi - lo == 1) {
        out.push_back(zreduce(f, target));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    PrimePoly g0 = PrimePoly::constant(p, 1), h0 = PrimePoly::constant(p, 1);
    for (size_t i = lo; i < mid; ++i) g0 = g0 * gs[i];
    for (size_t i = mid; i < hi; ++i) h0 = h0 * gs[i];
    auto bez = primepoly_xgcd(g0, h0);
    if (bez.g.degree() != 0)
        throw invariant_violation("hensel_tree: factors not coprime mod p");
    HenselPair cur;
    auto toZV = [](const PrimePoly& a) {
        ZV r = a.coeffs();
        return r;
    };
    cur.g = toZV(g0);
    cur.h = toZV(h0);
    cur.s = toZV(bez.u);
    cur.t = toZV(bez.v);
    Int m = p;
    while (m < target) {
        cur = hensel_step(zreduce(f, m * m), cur, m);
        m *= m;
    }
    cur.g = zreduce(cur.g, target);
    cur.h = zreduce(cur.h, target);
    hensel_tree(cur.g, gs, lo, mid, p, target, out);
    hensel_tree(cur.h, gs, mid, hi, p, target, out);
}

} // namespace

std::vector<UPoly> hensel_lift(const UPoly& f, const std::vector<PrimePoly>& gs, const Int& p, int k) {
    if (gs.empty()) throw input_error("hensel_lift: no factors");
    if (f.is_zero() || f.lead() != 1) throw input_error("hensel_lift: f must be monic");
    Int target = 1;
    for (int i = 0; i < k; ++i) target *= p;
    ZV fz = zv_from_upoly(f);
    std::vector<ZV> lifted;
    hensel_tree(zreduce(fz, target), gs, 0, gs.size(), p, target, lifted);
    // sanity: each lift reduces to its seed mod p and the product recovers f
    std::vector<UPoly> out;
    ZV prod = {Int(1)};
    for (size_t i = 0; i < lifted.size(); ++i) {
        ZV red = zreduce(lifted[i], p);
        if (!(PrimePoly(p, red) == gs[i].monic()))
            throw invariant_violation("hensel_lift: lifted factor does not reduce to its seed");
        prod = zmul(prod, lifted[i], target);
        out.push_back(upoly_from_zv(lifted[i]));
    }
    if (prod != zreduce(fz, target))
        throw invariant_violation("hensel_lift: product check failed");
    return out;
}

namespace {

Int symmetric_rep(Int c, const Int& m) {
    c %= m;
    if (c < 0) c += m;
    if (c * 2 > m) c -= m;
    return c;
}

// factor a monic squarefree integer polynomial into monic integer irreducibles
std::vector<UPoly> zassenhaus_monic(const UPoly& v) {
    int n = v.degree();
    if (n <= 1) return {v};
    // prime with squarefree reduction
    Int p = 0;
    for (long cand : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L}) {
        PrimePoly vp = primepoly_from_upoly(v, cand);
        if (vp.degree() != n) continue;
        if (primepoly_gcd(vp, vp.derivative()).degree() == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw resource_error("zassenhaus: no small squarefree prime found");
    auto fac = factor_mod_p(primepoly_from_upoly(v, p));
    std::vector<PrimePoly> seeds;
    for (const auto& [g, m] : fac) {
        if (m != 1) throw invariant_violation("zassenhaus: reduction not squarefree");
        seeds.push_back(g);
    }
    if (seeds.size() == 1) return {v};
    // Mignotte-style coefficient bound for monic factors
    Int maxc = 0;
    for (const Rat& c : v.coeffs()) {
        Int a = abs(c.get_num());
        if (a > maxc) maxc = a;
    }
    Int B = (maxc + 1) * Int(n + 1);
    for (int i = 0; i < n; ++i) B *= 2;
    Int target = p;
    int k = 1;
    while (target <= 2 * B) {
        target *= p;
        ++k;
    }
    std::vector<UPoly> lifted = hensel_lift(v, seeds, p, k);
    Int modulus = 1;
    for (int i = 0; i < k; ++i) modulus *= p;

    std::vector<UPoly> result;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    UPoly rem = v;
    size_t s = 1;
    while (2 * s <= live.size()) {
        // all subsets of size s of live indices
        std::vector<int> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
        bool found = false;
        while (true) {
            ZV prod = {Int(1)};
            for (size_t i = 0; i < s; ++i)
                prod = zmul(prod, zv_from_upoly(lifted[live[idx[i]]]), modulus);
            std::vector<Rat> cs;
            for (const Int& c : prod) cs.emplace_back(symmetric_rep(c, modulus));
            UPoly cand(std::move(cs));
            auto [q, r] = rem.divmod(cand);
            bool ok = r.is_zero();
            if (ok)
                for (const Rat& c : q.coeffs())
                    if (c.get_den() != 1) ok = false;
            if (ok) {
                result.push_back(cand);
                rem = q;
                std::vector<int> nl;
                for (size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < s && static_cast<int>(i) == idx[j]) { ++j; continue; }
                    nl.push_back(live[i]);
                }
                live = nl;
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(s) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(live.size() - s + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.degree() > 0) result.push_back(rem);
    return result;
}

// squarefree decomposition over Q (Yun), f monic
std::vector<std::pair<UPoly, int>> yun_squarefree(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly a = upoly_gcd(f, f.derivative());
    UPoly b = f.divmod(a).first;
    UPoly c = f.derivative().divmod(a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = upoly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// map monic squarefree u over Q to monic irreducibles over Q
std::vector<UPoly> factor_squarefree_Q(const UPoly& u) {
    if (u.degree() == 1) return {u};
    // integer primitive version w, lc l > 0
    Int den = upoly_common_den(u);
    std::vector<Int> w;
    Int content = 0;
    for (const Rat& c : u.coeffs()) {
        Rat s = c * Rat(den);
        w.push_back(s.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num().get_mpz_t());
    }
    if (content > 1)
        for (Int& c : w) c /= content;
    if (w.back() < 0)
        for (Int& c : w) c = -c;
    Int l = w.back();
    // monicize: v(x) = l^{n-1} w(x/l)
    int n = static_cast<int>(w.size()) - 1;
    std::vector<Rat> vc(n + 1);
    vc[n] = 1;
    Int scale = 1; // l^{n-1-i} at index i
    for (int i = n - 1; i >= 0; --i) {
        vc[i] = Rat(w[i] * scale);
        scale *= l;
    }
    std::vector<UPoly> vf = zassenhaus_monic(UPoly(std::move(vc)));
    std::vector<UPoly> out;
    for (const UPoly& g : vf) {
        // undo the substitution: roots of g are l times roots of the true factor
        UPoly back = g.compose(UPoly({Rat(0), Rat(l)}));
        out.push_back(back.monic());
    }
    return out;
}

} // namespace

QFactorization factor_over_Q(const UPoly& f) {
    if (f.is_zero()) throw input_error("factor_over_Q: zero polynomial");
    if (f.degree() > 12) throw unsupported_error("factor_over_Q: degree cap is 12");
    QFactorization out;
    out.unit = f.lead();
    if (f.degree() == 0) return out;
    UPoly u = f.monic();
    for (const auto& [part, mult] : yun_squarefree(u))
        for (const UPoly& g : factor_squarefree_Q(part)) out.factors.emplace_back(g, mult);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return a.second < b.second;
    });
    // remultiplication is the contract
    UPoly prod = UPoly::constant(out.unit);
    for (const auto& [g, m] : out.factors) prod = prod * g.pow(static_cast<unsigned>(m));
    if (!(prod == f)) throw invariant_violation("factor_over_Q: remultiplication mismatch");
    return out;
}

std::vector<std::pair<MPoly, int>> factor_over_Q_mpoly(const MPoly& f) {
    auto fs = factor_over_Q(upoly_from_mpoly(f));
    std::vector<std::pair<MPoly, int>> out;
    for (const auto& [g, m] : fs.factors) out.emplace_back(mpoly_from_upoly(g), m);
    return out;
}

bool upoly_irreducible_Q(const UPoly& f) {
    if (f.degree() < 1) return false;
    auto fs = factor_over_Q(f);
    return fs.factors.size() == 1 && fs.factors[0].second == 1;
}

UPoly upoly_from_mpoly(const MPoly& f) {
    if (f.arity() != 1) throw input_error("expected a univariate polynomial");
    std::vector<Rat> cs(f.total_degree() + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) cs[e[0]] = c;
    return UPoly(std::move(cs));
}

MPoly mpoly_from_upoly(const UPoly& f) {
    MPoly r(1);
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) r.add_term({i}, f.coeff(i));
    return r;
}

} // namespace kochenlab
