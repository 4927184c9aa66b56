#include "kochenlab/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "kochenlab/upoly.hpp"

namespace kochenlab {

MPoly MPoly::constant(int arity, const Rat& c) {
    MPoly r(arity);
    if (c != 0) r.terms_[Exps(arity, 0)] = c;
    return r;
}

MPoly MPoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw input_error("MPoly::variable: index out of range");
    MPoly r(arity);
    Exps e(arity, 0);
    e[index] = 1;
    r.terms_[e] = 1;
    return r;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (static_cast<int>(e.size()) != arity_) throw input_error("MPoly::add_term: exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw input_error("MPoly::add_term: negative exponent");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (arity_ != o.arity_) throw input_error("MPoly: arity mismatch in +");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
    MPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (arity_ != o.arity_) throw input_error("MPoly: arity mismatch in *");
    MPoly r(arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly acc = constant(arity_, 1);
    MPoly base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Int MPoly::height() const {
    Int h = 0;
    for (const auto& [e, c] : terms_) {
        Int hc = height_rat(c);
        if (hc > h) h = hc;
    }
    return h;
}

MPoly MPoly::remap(int new_arity, const std::vector<int>& map) const {
    if (static_cast<int>(map.size()) != arity_) throw input_error("MPoly::remap: map arity mismatch");
    for (int i : map)
        if (i < 0 || i >= new_arity) throw input_error("MPoly::remap: target index out of range");
    MPoly r(new_arity);
    for (const auto& [e, c] : terms_) {
        Exps ne(new_arity, 0);
        for (int i = 0; i < arity_; ++i) ne[map[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

MPoly MPoly::substitute_tail(int keep, const std::vector<Rat>& values) const {
    if (keep < 0 || keep > arity_) throw input_error("MPoly::substitute_tail: bad keep count");
    if (static_cast<int>(values.size()) != arity_ - keep)
        throw input_error("MPoly::substitute_tail: value count mismatch");
    MPoly r(keep);
    for (const auto& [e, c] : terms_) {
        Rat k = c;
        for (int i = keep; i < arity_; ++i)
            k *= rat_pow(values[i - keep], static_cast<unsigned long>(e[i]));
        if (k == 0) continue;
        Exps ne(e.begin(), e.begin() + keep);
        r.add_term(ne, k);
    }
    return r;
}

Rat MPoly::eval_rat(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != arity_) throw input_error("MPoly::eval_rat: point arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < arity_; ++i)
            if (e[i]) t *= rat_pow(x[i], static_cast<unsigned long>(e[i]));
        acc += t;
    }
    return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(c) << ")";
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < static_cast<int>(names.size())) os << names[i];
            else os << "X" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

// Specialize all variables to x_i = a_i * T + b_i. Degree-preserving for
// generic (a, b), so gcd over the line witnesses a common factor.
UPoly specialize_line(const MPoly& f, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    UPoly acc = UPoly::zero();
    for (const auto& [e, c] : f.terms()) {
        UPoly t = UPoly::constant(c);
        for (int i = 0; i < f.arity(); ++i) {
            if (e[i] == 0) continue;
            UPoly lin({b[i], a[i]});
            t = t * lin.pow(static_cast<unsigned>(e[i]));
        }
        acc = acc + t;
    }
    return acc;
}

} // namespace

bool mpoly_coprime(const MPoly& f, const MPoly& g) {
    if (f.arity() != g.arity()) throw input_error("mpoly_coprime: arity mismatch");
    if (f.is_zero() || g.is_zero()) return false;
    if (f.total_degree() == 0 || g.total_degree() == 0) return true;
    int n = f.arity();
    std::mt19937_64 rng(0x6b6f6368u); // fixed seed for reproducibility
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rat> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            long ai = dist(rng);
            a[i] = Rat(ai == 0 ? 1 : ai);
            b[i] = Rat(dist(rng));
        }
        UPoly F = specialize_line(f, a, b);
        UPoly G = specialize_line(g, a, b);
        if (F.degree() < f.total_degree() || G.degree() < g.total_degree()) continue;
        UPoly d = upoly_gcd(F, G);
        if (d.degree() == 0) return true;
    }
    return false;
}

} // namespace kochenlab
