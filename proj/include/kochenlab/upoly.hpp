#ifndef KOCHENLAB_UPOLY_HPP
#define KOCHENLAB_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "kochenlab/rat.hpp"

namespace kochenlab {

// Dense univariate polynomial over Q, coefficients low to high with no
// trailing zeros. Zero polynomial has empty coefficient vector.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rat& a) { return UPoly({a}); }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }
    static UPoly monomial(int deg, const Rat& a);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    Rat lead() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& k) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly pow(unsigned n) const;
    UPoly derivative() const;
    UPoly monic() const;

    Rat eval(const Rat& x) const;
    UPoly compose(const UPoly& inner) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    std::string str(const std::string& var = "T") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b); // monic unless zero
// g = gcd(a, b) monic, with u*a + v*b = g.
struct XgcdResult {
    UPoly g, u, v;
};
XgcdResult upoly_xgcd(const UPoly& a, const UPoly& b);

Rat upoly_resultant(const UPoly& a, const UPoly& b);

// Smallest d > 0 with d*f having integer coefficients.
Int upoly_common_den(const UPoly& f);

} // namespace kochenlab

#endif
