#ifndef KOCHENLAB_FQ_HPP
#define KOCHENLAB_FQ_HPP

#include <vector>

#include "kochenlab/rat.hpp"

namespace kochenlab {

// Small finite field F_q, q = p^f <= 64. Elements are ints in [0, q)
// encoding polynomial coefficient vectors base p (constant digit first);
// arithmetic is table driven. The defining modulus is the first monic
// irreducible of degree f in lexicographic coefficient order.
class FqField {
  public:
    using Elem = int;

    explicit FqField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int f() const { return f_; }
    const std::vector<int>& modulus() const { return mod_; } // length f+1, monic

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long n) const; // image of n under Z -> F_q
    Elem from_rat(const Rat& x) const;

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    // Least d >= 1 with a^(p^d) = a, i.e. [F_p(a) : F_p].
    int subfield_degree(Elem a) const;

  private:
    int q_, p_, f_;
    std::vector<int> mod_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

// Dense univariate polynomial over F_q, coefficients low to high, trimmed.
class FqPoly {
  public:
    FqPoly() : F_(nullptr) {}
    explicit FqPoly(const FqField* F) : F_(F) {}
    FqPoly(const FqField* F, std::vector<int> cs) : F_(F), c_(std::move(cs)) { trim(); }

    static FqPoly constant(const FqField* F, int a) { return FqPoly(F, {a}); }
    static FqPoly x(const FqField* F) { return FqPoly(F, {0, 1}); }

    const FqField* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<int>& coeffs() const { return c_; }
    int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    int lead() const;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly scale(int k) const;
    bool operator==(const FqPoly& o) const { return c_ == o.c_; }

    FqPoly monic() const;
    FqPoly derivative() const;
    int eval(int x) const;

    std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
    FqPoly mod(const FqPoly& d) const { return divmod(d).second; }
    FqPoly powmod(long long e, const FqPoly& m) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const FqField* F_;
    std::vector<int> c_;
};

FqPoly fqpoly_gcd(const FqPoly& a, const FqPoly& b); // monic unless zero

// Full factorization into monic irreducibles with multiplicities,
// sorted by (degree, coefficient vector). Leading unit dropped.
std::vector<std::pair<FqPoly, int>> fqpoly_factor(const FqPoly& f);

bool fqpoly_irreducible(const FqPoly& f);

// All roots of f in F_q, sorted.
std::vector<int> fqpoly_roots(const FqPoly& f);

} // namespace kochenlab

#endif
