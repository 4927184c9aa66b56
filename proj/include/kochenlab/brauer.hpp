#ifndef KOCHENLAB_BRAUER_HPP
#define KOCHENLAB_BRAUER_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "kochenlab/dioph.hpp"
#include "kochenlab/kochen.hpp"
#include "kochenlab/pyth.hpp"
#include "kochenlab/rat.hpp"

namespace kochenlab {

// A place of Q: one real place plus a finite place for every prime.
struct Place {
    bool finite = true;
    Int p = 0; // prime when finite

    static Place real() { return Place{false, Int(0)}; }
    static Place at(const Int& prime) { return Place{true, prime}; }

    bool operator<(const Place& o) const {
        if (finite != o.finite) return !finite; // real place sorts first
        return p < o.p;
    }
    bool operator==(const Place& o) const { return finite == o.finite && p == o.p; }
    std::string str() const;
};

// Quaternion algebra (a, b): basis 1, i, j, k with i^2 = a, j^2 = b,
// k = ij = -ji.
struct QuaternionAlgebra {
    Rat a, b;
};

// Local splitting symbol of (a, b) over Q_v: +1 iff split. Real place by
// signs, odd p through Legendre symbols on the unit parts, p = 2 through
// the mod-8 exponent formula.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// All places where (a, b) is non-split; always of even cardinality.
std::set<Place> ramification_set(const QuaternionAlgebra& A);

// Smallest quaternion algebra (by height, then lexicographic) whose
// ramification set equals S, searched over products of signed primes from
// the support of S and auxiliary primes up to aux_bound.
QuaternionAlgebra quaternion_with_ramification(const std::set<Place>& S, long aux_bound = 50);

// A ramified exactly at {p, q1}, B exactly at {p, q2}; both split at the
// real place and share no other ramified place.
std::pair<QuaternionAlgebra, QuaternionAlgebra> construct_AB(const Int& p, const Int& q1,
                                                             const Int& q2, long aux_bound = 50);

// A division-algebra class recorded by its local invariants: a finitely
// supported assignment of fractions with denominator ell summing to zero,
// with the real place restricted to {0, 1/2}.
struct BrauerClass {
    long ell = 2;
    std::map<Place, Rat> invariants; // nonzero entries only, values in (0, 1)
    std::optional<QuaternionAlgebra> realization; // present only for ell = 2
};
BrauerClass brauer_class_prescribe(long ell, const std::map<Place, Rat>& assignments);

using Quat = std::array<Rat, 4>;

Quat qmul(const QuaternionAlgebra& A, const Quat& x, const Quat& y);
Rat nrd(const QuaternionAlgebra& A, const Quat& x);
Rat trd(const QuaternionAlgebra& A, const Quat& x);

// Norm-one elements found by scanning numerators up to H over denominators
// up to H in the first three coordinates and solving for the fourth.
struct TraceWitness {
    Quat x, y; // both of reduced norm 1; the value is trd(x) - trd(y)
};
std::map<Rat, TraceWitness, std::less<Rat>> sample_T_witnessed(const QuaternionAlgebra& A,
                                                               long H);

// Pairwise trace differences of the sampled norm-one elements; every value
// is checked to be integral at each ramified finite place.
std::set<Rat> sample_T(const QuaternionAlgebra& A, long H);

// z is a member iff z is the trace difference of two norm-one quaternions:
// free z, auxiliary x(4), y(4), relations nrd(x) = nrd(y) = 1 and
// z = trd(x) - trd(y).
DiophFamily compile_T_family(const QuaternionAlgebra& A);

// One-dimensional family of the values x / (1 + t w^{e+1} y) with x, y
// ranging over T_A + T_B and w over the operator image; built as the
// rational image of the 5-fold product T_A x T_B x T_A x T_B x gamma.
// Requires tau = (1, 1).
DiophFamily compile_D_family(const KochenParams& params, const QuaternionAlgebra& A,
                             const QuaternionAlgebra& B);

// Bounded membership for the compiled family at rational points: a Member
// verdict assembles a full variable assignment from sampled trace
// witnesses and re-verifies it exactly; NonMember reports the valuation
// obstruction at p.
MembershipVerdict d_family_member_Q(const KochenParams& params, const QuaternionAlgebra& A,
                                    const QuaternionAlgebra& B, const Rat& x, long H = 10);

} // namespace kochenlab

#endif
