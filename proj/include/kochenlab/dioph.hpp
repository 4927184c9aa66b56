#ifndef KOCHENLAB_DIOPH_HPP
#define KOCHENLAB_DIOPH_HPP

#include <set>
#include <vector>

#include "kochenlab/fq.hpp"
#include "kochenlab/jsonio.hpp"
#include "kochenlab/kochen.hpp"
#include "kochenlab/mpoly.hpp"
#include "kochenlab/pyth.hpp"

namespace kochenlab {

// Existentially defined subset of F^n: the points x for which some y in
// F^m makes every polynomial vanish at (x, y). Polynomials have arity
// n + m with the free block first.
struct DiophFamily {
    long n = 0;
    long m = 0;
    std::vector<MPoly> polys;
};
void validate_family(const DiophFamily& D);

DiophFamily full_space(long n);

struct FamilySize {
    long polys = 0;
    long long terms = 0;
    long arity = 0;
};
FamilySize family_size(const DiophFamily& D);

json dioph_family_to_json(const DiophFamily& D);
DiophFamily dioph_family_from_json(const json& j);

// Exhaustive point set over F_q; tuples use the F_q element encoding.
std::set<std::vector<int>> eval_over_Fq(const DiophFamily& D, int q,
                                        long long budget = 20000000);

// Union through all pairwise products, intersection through concatenation;
// auxiliary blocks stay disjoint.
DiophFamily family_union(const DiophFamily& a, const DiophFamily& b);
DiophFamily family_intersect(const DiophFamily& a, const DiophFamily& b);
DiophFamily family_product(const DiophFamily& a, const DiophFamily& b);

struct RatFunc {
    MPoly num, den; // same arity, den nonzero
};

// Image of D under a tuple of rational functions of the free variables;
// every numerator/denominator pair must be coprime.
DiophFamily rational_image(const DiophFamily& D, const std::vector<RatFunc>& f);

// Substitute the last r free variables by the constants a (r == a.size()).
DiophFamily section(const DiophFamily& D, const std::vector<Rat>& a, long r);

// Weil restriction along the parametric algebra F[T]/g: the output points
// (x, z) are those with x in P_{polys}(F[T]/g_z). For weil_restrict the
// parameter polynomial is monic, g_z = T^k + sum z_i T^i with z free.
struct WeilFamily {
    DiophFamily D; // free: x block (n), then parameter block (k)
    long n = 0, m = 0, k = 0, r = 0, d = 0;
    long digits = 0; // T-digits per restricted auxiliary variable
    // aux layout: U_{i,j} at n+k + j*digits + i, then r blocks W of size d+1
    std::vector<MPoly> g_T;             // T-coefficients of the parameter polynomial
    std::vector<std::vector<MPoly>> hf; // T-coefficients of each substituted polynomial
};
WeilFamily weil_restrict(const DiophFamily& D, long k, long long budget = 2000000);

// Points of the restriction over F_q; the W block is eliminated through
// the divisibility criterion, only the U block is searched.
std::set<std::vector<int>> weil_points_Fq(const WeilFamily& W, int q,
                                          long long budget = 20000000);

// F[T]/(modulus) over F_q, usable as the ring argument of MPoly::eval.
struct FqAlgebra {
    using Elem = FqPoly;

    const FqField* F = nullptr;
    FqPoly modulus; // nonzero with unit leading coefficient

    FqAlgebra(const FqField* field, FqPoly mod);

    long dim() const { return modulus.degree(); }
    Elem zero() const { return FqPoly(F); }
    Elem one() const { return FqPoly::constant(F, 1); }
    Elem from_rat(const Rat& c) const { return FqPoly::constant(F, F->from_rat(c)); }
    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem mul(const Elem& x, const Elem& y) const { return (x * y).mod(modulus); }

    std::vector<Elem> elements() const; // all q^dim residues
};

// Checks the nilpotent-radical identity for B = F_q[T]/(g), g monic with
// dim B <= l: the scalar points of P_{f^l}(B) must equal the intersection
// of the scalar points of P_f(B/m) over the maximal ideals m. Returns true
// on agreement and throws invariant_violation otherwise.
bool radical_power_check(const DiophFamily& D, long l, const FqField& F, const FqPoly& g,
                         long long budget = 20000000);

// One-dimensional family with the same points as the degree-n bounded
// closure of the union of the R_{p,g,t} over g in enumerate_P(n) and
// t = +-p. One selector variable picks the branch (g, t, relation degree);
// each branch block holds, per relation coefficient, the Kochen arguments,
// operator values and inverses for the two generators a and b plus the
// inverse of the denominator 1 + t b.
struct CompiledBranch {
    long g_index = 0;
    int t_sign = +1;
    long m = 1;      // relation degree of this branch
    long offset = 0; // first variable of the branch block
};
struct CompiledRFamily {
    KochenParams params;
    long n = 1;
    std::vector<MPoly> gs;
    std::vector<CompiledBranch> branches;
    long per_coeff = 0; // block slots per relation coefficient, 6k + 1
    DiophFamily D;      // free: x; aux: selector, then the branch blocks
};
CompiledRFamily compile_R_family(const KochenParams& params, long n, long budget = 200000);

// Bounded witness search over Q: a Member verdict comes with a full
// assignment of the compiled family's variables, re-verified exactly;
// NonMember carries the valuation or exclusion obstruction.
MembershipVerdict family_member_Q(const CompiledRFamily& C, const Rat& x,
                                  const SearchBounds& bounds = SearchBounds(),
                                  long budget = 200000);

// Weil restriction along the parametric algebra B_a cut out by
// t a^e ((T^{q^f}-T)^2 - 1) - (T^{q^f}-T), applied to the l-th powers
// (l = 2 q^f) of the defining polynomials of a one-dimensional family.
// The second free coordinate of the result is the parameter a.
struct HolomorphyFamily {
    KochenParams params;
    long n_prime = 1;
    long l = 0;
    WeilFamily W;
};
HolomorphyFamily holomorphy_restrict(const DiophFamily& R1, const KochenParams& params,
                                     long long budget = 2000000);

// The paper-scale instantiation on compile_R_family output; its symbolic
// expansion exceeds any realistic budget and then raises resource_error,
// so Q-instances are decided by holomorphy_member_Q instead.
HolomorphyFamily compile_holomorphy_family(const KochenParams& params, long n_prime,
                                           long long budget = 2000000);

// Membership of (x, a) in Q^2 through the maximal-ideal decomposition of
// B_a: x must have v_P(x) >= 0 at every type-bounded prime of every factor
// field; for rational x this reduces to v_p(x) >= 0 whenever some factor
// field carries such a prime. Only t = +p is supported.
bool holomorphy_member_Q(const KochenParams& params, const Rat& x, const Rat& a);

} // namespace kochenlab

#endif
