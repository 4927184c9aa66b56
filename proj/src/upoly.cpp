#include "kochenlab/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace kochenlab {

UPoly UPoly::monomial(int deg, const Rat& a) {
    if (deg < 0) throw input_error("UPoly::monomial: negative degree");
    std::vector<Rat> cs(deg + 1, Rat(0));
    cs[deg] = a;
    return UPoly(std::move(cs));
}

Rat UPoly::lead() const {
    if (c_.empty()) throw domain_error("UPoly::lead: zero polynomial");
    return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return zero();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& k) const {
    if (k == 0) return zero();
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned n) const {
    UPoly acc = constant(1);
    UPoly base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return zero();
    return *this * (Rat(1) / lead());
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc = zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw domain_error("UPoly::divmod: division by zero polynomial");
    UPoly r = *this;
    if (r.degree() < d.degree()) return {zero(), r};
    std::vector<Rat> q(r.degree() - d.degree() + 1, Rat(0));
    Rat dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat c = r.lead() / dl;
        q[k] = c;
        r = r - d * UPoly::monomial(k, c);
    }
    return {UPoly(std::move(q)), r};
}

std::string UPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(c_[i]) << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

XgcdResult upoly_xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly u0 = UPoly::constant(1), u1 = UPoly::zero();
    UPoly v0 = UPoly::zero(), v1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly u2 = u0 - q * u1;
        UPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat k = Rat(1) / r0.lead();
    return {r0 * k, u0 * k, v0 * k};
}

Rat upoly_resultant(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    // Euclidean recursion over Q; exact and fine at the sizes used here.
    UPoly f = a, g = b;
    Rat res = 1;
    while (true) {
        if (g.degree() == 0) {
            res *= rat_pow(g.lead(), static_cast<unsigned long>(f.degree()));
            return res;
        }
        UPoly r = f.divmod(g).second;
        if (r.is_zero()) return 0;
        // res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * res(g, r)
        if ((static_cast<long long>(f.degree()) * g.degree()) % 2 != 0) res = -res;
        res *= rat_pow(g.lead(), static_cast<unsigned long>(f.degree() - r.degree()));
        f = g;
        g = r;
    }
}

Int upoly_common_den(const UPoly& f) {
    Int d = 1;
    for (const Rat& c : f.coeffs()) {
        Int den = c.get_den();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    return d;
}

} // namespace kochenlab
