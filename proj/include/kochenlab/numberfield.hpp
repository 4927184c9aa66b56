#ifndef KOCHENLAB_NUMBERFIELD_HPP
#define KOCHENLAB_NUMBERFIELD_HPP

#include <vector>

#include "kochenlab/extint.hpp"
#include "kochenlab/factor.hpp"
#include "kochenlab/rat.hpp"
#include "kochenlab/upoly.hpp"

namespace kochenlab {

// Ramification/residue type bound (e, f).
struct Tau {
    long e = 1;
    long f = 1;
};

class NumberField;

// Element of L = Q[T]/(h), stored as coefficients of 1, theta, ..., theta^{n-1}.
class NFElem {
  public:
    NFElem() : L_(nullptr) {}
    NFElem(const NumberField* L, std::vector<Rat> coords);

    const NumberField* field() const { return L_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator-() const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rat& k) const;
    NFElem inv() const;
    NFElem operator/(const NFElem& o) const { return *this * o.inv(); }
    NFElem pow(unsigned n) const;
    bool operator==(const NFElem& o) const;

    std::string str() const;

  private:
    const NumberField* L_;
    std::vector<Rat> c_;
};

// Prime of L above p, identified by an irreducible factor of h mod p.
struct NFPrime {
    Int p;
    PrimePoly gbar; // monic irreducible over F_p
    int e = 1;      // ramification index
    int f = 1;      // residue degree
};

// Monogenic number field Q[T]/(h), h monic irreducible with integer
// coefficients, degree <= 12.
class NumberField {
  public:
    explicit NumberField(UPoly h);

    const UPoly& h() const { return h_; }
    int degree() const { return h_.degree(); }

    NFElem zero() const { return from_rat(0); }
    NFElem one() const { return from_rat(1); }
    NFElem theta() const;
    NFElem from_rat(const Rat& x) const;
    NFElem from_coords(std::vector<Rat> c) const { return NFElem(this, std::move(c)); }
    NFElem from_upoly(const UPoly& u) const; // reduce u(theta) mod h

  private:
    UPoly h_;
};

std::vector<NFPrime> primes_above(const NumberField& L, const Int& p);

ExtInt val_at_prime(const NumberField& L, const NFPrime& P, const NFElem& x);

// Image of x in the residue field F_p[y]/(gbar); requires v_P(x) >= 0 and a
// representation whose denominator is a unit mod p.
PrimePoly residue_at_prime(const NumberField& L, const NFPrime& P, const NFElem& x);

// [F_p(res) : F_p] inside the residue field of P.
int residue_subfield_degree(const NFPrime& P, const PrimePoly& res);

std::vector<NFPrime> s_p_tau(const NumberField& L, const Int& p, Tau tau);
std::vector<NFPrime> s_p_tau_basic(const NumberField& L, const Int& p, Tau tau, const NFElem& a);

bool holomorphy_member(const NumberField& L, const Int& p, Tau tau, const NFElem& x);

struct ApproxConstraint {
    NFPrime P;
    NFElem target;
    long bound; // require v_P(x - target) >= bound
};

// Weak approximation at primes above one rational prime; the output is
// re-verified against every constraint before being returned.
NFElem weak_approx(const NumberField& L, const std::vector<ApproxConstraint>& constraints);

// Monic minimal polynomial of x over Q.
UPoly minimal_polynomial(const NFElem& x);

// Cross-checks the factor-field description of {P : v_P(a) >= 0} within
// type bound tau against the direct base-field answer; true on agreement.
bool lemma_kill_check(const Int& p, Tau tau, const Rat& a);

// Factor fields of g_a together with whether each has a prime of type <= tau
// above p; exposed for the CLI report.
struct KillCheckReport {
    MPoly g_a;
    bool left_nonempty = false;
    struct Branch {
        UPoly factor;
        UPoly field_poly; // monicized generator actually used, or factor itself
        bool has_type_tau_prime = false;
    };
    std::vector<Branch> branches;
    bool agree = false;
};
KillCheckReport lemma_kill_report(const Int& p, Tau tau, const Rat& a);

} // namespace kochenlab

#endif
