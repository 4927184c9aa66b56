#ifndef KOCHENLAB_PYTH_HPP
#define KOCHENLAB_PYTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "kochenlab/kochen.hpp"
#include "kochenlab/mpoly.hpp"
#include "kochenlab/rat.hpp"

namespace kochenlab {

// R_{p,g,t} = { a / (1 + t b) : a, b in g(gamma(Q), ..., gamma(Q)) } and its
// degree-n bounded integral closure R_{p,g,t,n}.
struct RingSpec {
    KochenParams params;
    MPoly g; // coefficients must be p-integral
    long n = 1;
};
void validate_ring_spec(const RingSpec& spec);

struct SearchBounds {
    long height = 50;              // Kochen-argument height for the direct search
    long max_tuples = 20000;       // cap on argument tuples per polynomial
    long coeff_height = 8;         // argument height feeding relation coefficients
    long max_coeff_candidates = 3000;
};

enum class Verdict { Member, NonMember, Unknown };
std::string verdict_name(Verdict v);

struct MemberWitness {
    std::vector<Rat> u, w; // Kochen arguments producing a and b
    long m = 1;            // degree of the monic relation
    std::vector<Rat> relation; // a_0 .. a_{m-1}; for m = 1 the single a_0 = -x
    MPoly g;               // the generating polynomial actually used
    int t_sign = +1;       // which uniformizer the witness is for
};

struct Obstruction {
    bool val_p = false; // val_p(x) < 0, which already rules membership out
    Int ell = 0;        // exclusion prime otherwise
};

struct MembershipVerdict {
    Verdict verdict = Verdict::Unknown;
    std::optional<MemberWitness> witness;
    std::optional<Obstruction> obstruction;
    long height_bound = 0; // exhausted search height when Unknown
};

// All g in n variables with total degree <= n and coefficients of height
// <= n whose denominators are prime to p; deterministic order.
std::vector<MPoly> enumerate_P(const KochenParams& params, long n, long budget = 200000);

MembershipVerdict member_R_pgt(const RingSpec& spec, const Rat& x,
                               const SearchBounds& bounds = SearchBounds());
MembershipVerdict member_R_pgtn(const RingSpec& spec, const Rat& x,
                                const SearchBounds& bounds = SearchBounds());

// Union over t in {p, -p} and g in enumerate_P(n); the t = -p half is
// reduced to t = p through R_{p,g,-p,n} = -R_{p,g*,p,n} with g*(X) = -g(-X).
MembershipVerdict member_R_pn(const KochenParams& params, long n, const Rat& x,
                              const SearchBounds& bounds = SearchBounds(),
                              long budget = 200000);

// True iff gamma_p(Q) is contained in Z_(ell): neither X^p - X + 1 nor
// X^p - X - 1 has a root in F_ell.
bool exclusion_root_test(const Int& p, const Int& ell);

// True iff (ell - 1) | (p - 1), in which case gamma_p(Q) lies in ell Z_(ell).
bool deep_exclusion_test(const Int& p, const Int& ell);

// The exclusion prime ell certifies NonMember verdicts for the pair (g, t)
// only when the denominator 1 + t b is provably an ell-unit.
bool exclusion_applies(const KochenParams& params, const MPoly& g, const Rat& t, const Int& ell);

struct SubringWitness {
    Int ell;
    Rat witness; // element of Z_(p) outside Z_(ell)
    long samples_checked = 0;
};
SubringWitness proper_subring_witness(const Int& p);

struct LowerBoundCertificate {
    long n = 1;
    Int ell, p, a;
    std::vector<MPoly> family;
    std::string report;
};

// Certificate that pi_p(Q) > n for the explicitly given closed-under-*
// family; the general entry point builds the full height/degree <= n family.
LowerBoundCertificate pi_lower_bound_family(std::vector<MPoly> family, long n,
                                            const Int& prime_bound = 1000000);
LowerBoundCertificate pi_lower_bound(long n, long budget = 200000,
                                     const Int& prime_bound = 1000000);
void lower_bound_verify(const LowerBoundCertificate& c); // throws on any broken invariant

} // namespace kochenlab

#endif
