#ifndef KOCHENLAB_FACTOR_HPP
#define KOCHENLAB_FACTOR_HPP

#include <utility>
#include <vector>

#include "kochenlab/mpoly.hpp"
#include "kochenlab/rat.hpp"
#include "kochenlab/upoly.hpp"

namespace kochenlab {

// Dense univariate polynomial over F_p for an arbitrary prime p.
// Coefficients are Ints reduced into [0, p), low degree first, trimmed.
class PrimePoly {
  public:
    PrimePoly() : p_(0) {}
    explicit PrimePoly(Int p) : p_(std::move(p)) {}
    PrimePoly(Int p, std::vector<Int> cs);

    static PrimePoly constant(const Int& p, const Int& a) { return PrimePoly(p, {a}); }
    static PrimePoly x(const Int& p) { return PrimePoly(p, {0, 1}); }

    const Int& p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0); }
    Int lead() const;

    PrimePoly operator+(const PrimePoly& o) const;
    PrimePoly operator-(const PrimePoly& o) const;
    PrimePoly operator*(const PrimePoly& o) const;
    PrimePoly scale(const Int& k) const;
    bool operator==(const PrimePoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const PrimePoly& o) const;

    PrimePoly monic() const;
    PrimePoly derivative() const;
    Int eval(const Int& x) const;

    std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& d) const;
    PrimePoly mod(const PrimePoly& d) const { return divmod(d).second; }
    PrimePoly powmod(const Int& e, const PrimePoly& m) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Int p_;
    std::vector<Int> c_;
};

PrimePoly primepoly_gcd(const PrimePoly& a, const PrimePoly& b); // monic unless zero
PrimePoly primepoly_from_upoly(const UPoly& f, const Int& p);    // denominators must be units mod p
UPoly upoly_from_primepoly(const PrimePoly& f);

// Monic irreducible factors with multiplicities, sorted by
// (degree, coefficient vector); the leading unit is dropped.
std::vector<std::pair<PrimePoly, int>> factor_mod_p(const PrimePoly& f);
std::vector<std::pair<MPoly, int>> factor_mod_p(const MPoly& f, const Int& p);

// Hensel: given monic f over Z and monic pairwise-coprime gs with
// f = prod gs (mod p), produce monic lifts with f = prod out (mod p^k).
std::vector<UPoly> hensel_lift(const UPoly& f, const std::vector<PrimePoly>& gs, const Int& p, int k);

struct QFactorization {
    Rat unit;                                // leading constant
    std::vector<std::pair<UPoly, int>> factors; // monic irreducible over Q
};

// Zassenhaus with a hard degree cap of 12; inputs above the cap are refused.
QFactorization factor_over_Q(const UPoly& f);
std::vector<std::pair<MPoly, int>> factor_over_Q_mpoly(const MPoly& f);

bool upoly_irreducible_Q(const UPoly& f);

// MPoly <-> UPoly bridges for arity-1 polynomials.
UPoly upoly_from_mpoly(const MPoly& f);
MPoly mpoly_from_upoly(const UPoly& f);

} // namespace kochenlab

#endif
