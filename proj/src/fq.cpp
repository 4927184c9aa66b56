#include "kochenlab/fq.hpp"

#include <algorithm>
#include <random>

namespace kochenlab {

namespace {

// Plain F_p polynomial helpers used only while building field tables.
using Vec = std::vector<int>;

void vtrim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec vmulmod(const Vec& a, const Vec& b, const Vec& m, int p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce mod monic m
    int dm = static_cast<int>(m.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
        int c = r[k];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int idx = k - dm + j;
            r[idx] = ((r[idx] - c * m[j]) % p + p) % p;
        }
    }
    vtrim(r);
    return r;
}

Vec vpowmod(Vec base, long long e, const Vec& m, int p) {
    Vec acc = {1};
    while (e) {
        if (e & 1) acc = vmulmod(acc, base, m, p);
        base = vmulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Vec vgcd(Vec a, Vec b, int p) {
    auto vmod = [&](Vec x, const Vec& d) {
        int dd = static_cast<int>(d.size()) - 1;
        int linv = 1;
        for (int i = 1; i < p; ++i)
            if (d.back() * i % p == 1) { linv = i; break; }
        for (int k = static_cast<int>(x.size()) - 1; k >= dd; --k) {
            int c = x[k] * linv % p;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                int idx = k - dd + j;
                x[idx] = ((x[idx] - c * d[j]) % p + p) % p;
            }
        }
        vtrim(x);
        return x;
    };
    while (!b.empty()) {
        Vec r = vmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool vec_irreducible(const Vec& m, int p) {
    int n = static_cast<int>(m.size()) - 1;
    Vec x = {0, 1};
    // x^(p^n) = x mod m, and no fixed points of lower Frobenius powers.
    Vec h = x;
    for (int i = 0; i < n; ++i) h = vpowmod(h, p, m, p);
    Vec diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    vtrim(diff);
    if (!diff.empty()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rprime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) rprime = false;
        if (!rprime) continue;
        int d = n / r;
        Vec g = x;
        for (int i = 0; i < d; ++i) g = vpowmod(g, p, m, p);
        Vec dif = g;
        dif.resize(std::max<size_t>(dif.size(), 2), 0);
        dif[1] = ((dif[1] - 1) % p + p) % p;
        vtrim(dif);
        Vec gc = vgcd(m, dif, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

} // namespace

FqField::FqField(int q) : q_(q) {
    if (q < 2 || q > 64) throw input_error("FqField: q must be in [2, 64]");
    p_ = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) { p_ = d; break; }
    int t = q;
    f_ = 0;
    while (t > 1) {
        if (t % p_ != 0) throw input_error("FqField: q is not a prime power");
        t /= p_;
        ++f_;
    }
    if (!is_prime(Int(p_))) throw input_error("FqField: q is not a prime power");

    if (f_ == 1) {
        mod_ = {0, 1}; // the field is F_p itself
    } else {
        int count = 1;
        for (int i = 0; i < f_; ++i) count *= p_;
        for (int k = 0; k < count; ++k) {
            Vec m(f_ + 1, 0);
            m[f_] = 1;
            int v = k;
            for (int i = 0; i < f_; ++i) {
                m[i] = v % p_;
                v /= p_;
            }
            if (vec_irreducible(m, p_)) {
                mod_ = m;
                break;
            }
        }
    }

    auto digits = [&](int a) {
        Vec d(f_);
        for (int i = 0; i < f_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto pack = [&](const Vec& d) {
        int a = 0;
        for (int i = f_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
        return a;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Vec da = digits(a);
        Vec nd(f_);
        for (int i = 0; i < f_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = pack(nd);
        for (int b = 0; b < q_; ++b) {
            Vec db = digits(b);
            Vec s(f_);
            for (int i = 0; i < f_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = pack(s);
            Vec ta = da, tb = db;
            vtrim(ta);
            vtrim(tb);
            mul_[a * q_ + b] = pack(vmulmod(ta, tb, mod_, p_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
}

FqField::Elem FqField::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

FqField::Elem FqField::from_rat(const Rat& x) const {
    Int num = x.get_num(), den = x.get_den();
    if (mpz_fdiv_ui(den.get_mpz_t(), p_) == 0)
        throw domain_error("FqField::from_rat: denominator vanishes in characteristic " + std::to_string(p_));
    long n = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), p_));
    long d = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), p_));
    return mul(from_int(n), inv(from_int(d)));
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw domain_error("FqField: inverse of zero");
    return inv_[a];
}

FqField::Elem FqField::pow(Elem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

int FqField::subfield_degree(Elem a) const {
    Elem x = a;
    for (int d = 1; d <= f_; ++d) {
        x = frobenius(x);
        if (x == a) return d;
    }
    throw invariant_violation("FqField: Frobenius orbit did not close");
}

int FqPoly::lead() const {
    if (c_.empty()) throw domain_error("FqPoly::lead: zero polynomial");
    return c_.back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = F_->add(r[i], o.c_[i]);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = F_->sub(r[i], o.c_[i]);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (c_.empty() || o.c_.empty()) return FqPoly(F_);
    std::vector<int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::scale(int k) const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], k);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::monic() const {
    if (c_.empty()) return *this;
    return scale(F_->inv(lead()));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(F_);
    std::vector<int> r(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
        int k = F_->from_int(static_cast<long>(i));
        r[i - 1] = F_->mul(c_[i], k);
    }
    return FqPoly(F_, std::move(r));
}

int FqPoly::eval(int x) const {
    int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F_->add(F_->mul(acc, x), *it);
    return acc;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
    if (d.is_zero()) throw domain_error("FqPoly::divmod: division by zero polynomial");
    FqPoly r = *this;
    if (r.degree() < d.degree()) return {FqPoly(F_), r};
    std::vector<int> q(r.degree() - d.degree() + 1, 0);
    int linv = F_->inv(d.lead());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        int c = F_->mul(r.lead(), linv);
        q[k] = c;
        std::vector<int> sub(k + d.c_.size(), 0);
        for (size_t j = 0; j < d.c_.size(); ++j) sub[k + j] = F_->mul(d.c_[j], c);
        r = r - FqPoly(F_, std::move(sub));
    }
    return {FqPoly(F_, std::move(q)), r};
}

FqPoly FqPoly::powmod(long long e, const FqPoly& m) const {
    FqPoly acc = constant(F_, 1);
    FqPoly base = mod(m);
    while (e) {
        if (e & 1) acc = (acc * base).mod(m);
        base = (base * base).mod(m);
        e >>= 1;
    }
    return acc;
}

FqPoly fqpoly_gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = x.mod(y);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

namespace {

// powmod with a big exponent, needed for q^d - 1 splitting exponents
FqPoly powmod_big(const FqPoly& base, Int e, const FqPoly& m) {
    const FqField* F = base.field();
    FqPoly acc = FqPoly::constant(F, 1);
    FqPoly b = base.mod(m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = (acc * b).mod(m);
        b = (b * b).mod(m);
        e >>= 1;
    }
    return acc;
}

// p-th root of f, valid when f' = 0 (all exponents divisible by p)
FqPoly pth_root(const FqPoly& f) {
    const FqField* F = f.field();
    int p = F->p();
    long long rootexp = F->q() / p;
    std::vector<int> r;
    for (int i = 0; i <= f.degree(); i += p)
        r.push_back(F->pow(f.coeff(i), rootexp));
    return FqPoly(F, std::move(r));
}

// f monic: list of (squarefree part, multiplicity), pairwise coprime
void squarefree_decompose(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
    const FqField* F = f.field();
    if (f.degree() <= 0) return;
    FqPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f), mult * F->p(), out);
        return;
    }
    FqPoly c = fqpoly_gcd(f, fp);
    FqPoly w = f.divmod(c).first;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fqpoly_gcd(w, c);
        FqPoly z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * F->p(), out);
}

// split a squarefree monic product of degree-d irreducibles
void equal_degree_split(const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    const FqField* F = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    int q = F->q();
    while (true) {
        std::vector<int> hc(f.degree());
        for (auto& c : hc) c = static_cast<int>(rng() % q);
        FqPoly h(F, std::move(hc));
        if (h.degree() < 1) continue;
        FqPoly g = fqpoly_gcd(h, f);
        if (g.degree() == 0) {
            if (q % 2 == 1) {
                Int e = 1;
                for (int i = 0; i < d; ++i) e *= q;
                e = (e - 1) / 2;
                FqPoly m = powmod_big(h, e, f) - FqPoly::constant(F, 1);
                g = fqpoly_gcd(m, f);
            } else {
                // characteristic 2: additive trace map over F_2
                int k = F->f() * d;
                FqPoly t = h.mod(f), acc = t;
                for (int i = 1; i < k; ++i) {
                    t = (t * t).mod(f);
                    acc = acc + t;
                }
                g = fqpoly_gcd(acc, f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.divmod(g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<FqPoly, int>> fqpoly_factor(const FqPoly& f) {
    if (f.is_zero()) throw domain_error("fqpoly_factor: zero polynomial");
    const FqField* F = f.field();
    std::vector<std::pair<FqPoly, int>> result;
    if (f.degree() == 0) return result;
    std::vector<std::pair<FqPoly, int>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x66616374u);
    for (const auto& [part, mult] : sqf) {
        // distinct-degree split
        FqPoly g = part;
        FqPoly h = FqPoly::x(F).mod(g);
        int d = 0;
        std::vector<std::pair<FqPoly, int>> byDeg;
        while (g.degree() > 0 && 2 * (d + 1) <= g.degree()) {
            ++d;
            h = h.powmod(F->q(), g);
            FqPoly gd = fqpoly_gcd(h - FqPoly::x(F), g);
            if (gd.degree() > 0) {
                byDeg.emplace_back(gd, d);
                g = g.divmod(gd).first;
                h = h.mod(g);
            }
        }
        if (g.degree() > 0) byDeg.emplace_back(g, g.degree());
        for (const auto& [prod, deg] : byDeg) {
            std::vector<FqPoly> irr;
            equal_degree_split(prod, deg, rng, irr);
            for (const auto& u : irr) result.emplace_back(u, mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
        return a.second < b.second;
    });
    return result;
}

bool fqpoly_irreducible(const FqPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fs = fqpoly_factor(f);
    return fs.size() == 1 && fs[0].second == 1;
}

std::vector<int> fqpoly_roots(const FqPoly& f) {
    if (f.is_zero()) throw domain_error("fqpoly_roots: zero polynomial");
    std::vector<int> out;
    for (int a = 0; a < f.field()->q(); ++a)
        if (f.eval(a) == 0) out.push_back(a);
    return out;
}

} // namespace kochenlab
