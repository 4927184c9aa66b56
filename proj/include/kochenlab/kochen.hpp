#ifndef KOCHENLAB_KOCHEN_HPP
#define KOCHENLAB_KOCHEN_HPP

#include <string>

#include "kochenlab/extint.hpp"
#include "kochenlab/numberfield.hpp"
#include "kochenlab/rat.hpp"

namespace kochenlab {

// Parameters (p, tau, t) over K = Q; the uniformizer is t = p or -p.
struct KochenParams {
    Int p;
    Tau tau;
    int t_sign = +1; // t = t_sign * p

    KochenParams(Int p_, Tau tau_, int sign = +1);

    Rat t() const { return Rat(t_sign) * Rat(p); }
    Int q() const { return p; }
    Int qf() const; // q^f
};

enum class GammaCase { NegVal, PosVal, ResRootPos, ResUnit, Pole };
std::string gamma_case_name(GammaCase c);

// gamma(x) = (1/t) * (D / (D^2 - 1))^e with D = x^{q^f} - x; pole iff D^2 = 1.
struct GammaValue {
    bool pole = false;
    Rat value;
};
GammaValue gamma_eval(const KochenParams& kp, const Rat& x);

struct NFGammaValue {
    bool pole = false;
    NFElem value;
};
NFGammaValue gamma_eval(const KochenParams& kp, const NFElem& x);

// Valuation of gamma(x) from the valuations alone. v_diff = v_P(x^{q^f} - x)
// and v_unit_diff = v_P((x^{q^f} - x)^2 - 1) are consulted only when
// v_P(x) = 0; pass the sentinel ExtInt::infinity() when genuinely infinite.
struct GammaPrediction {
    GammaCase tag = GammaCase::ResUnit;
    ExtInt valuation; // meaningless when tag == Pole
};
GammaPrediction gamma_valuation_predict(const KochenParams& kp, const ExtInt& v_x, long long v_t,
                                        const ExtInt& v_diff, const ExtInt& v_unit_diff);

// Convenience: compute all valuations of a rational at p and predict.
GammaPrediction gamma_valuation_predict(const KochenParams& kp, const Rat& x);

// Certificate that v_P(gamma(x)) <= -v_P(t)/(e+1), available when either
//   (i)  0 < (e+1) v_P(x) <= v_P(t), or
//   (ii) v_P(x) = 0 and the residue generates a subfield of degree not
//        dividing f.
// Throws input_error naming the failed clause when neither holds.
bool gamma_small_certificate(const KochenParams& kp, const NumberField& L, const NFPrime& P,
                             const NFElem& x);

// If v_P(gamma(x)) < 0 and v_P(x - y) >= v_P(t), then y is not a pole and
// v_P(gamma(y)) < 0; verified by direct evaluation.
bool gamma_perturbation_check(const KochenParams& kp, const Rat& x, const Rat& y,
                              const NFPrime& P);
bool gamma_perturbation_check(const KochenParams& kp, const NumberField& L, const NFElem& x,
                              const NFElem& y, const NFPrime& P);

// rho(x) = x / (x^{q^f} - x + 1).
Rat rho_eval(const KochenParams& kp, const Rat& x);
NFElem rho_eval(const KochenParams& kp, const NFElem& x);

// At a prime of type <= tau: v_P(rho(x)) = 0 with res(rho(x)) = res(x) when
// v_P(x) = 0, and v_P(rho(x)) > 0 otherwise.
bool rho_check(const KochenParams& kp, const NumberField& L, const NFPrime& P, const NFElem& x);

// omega(X) = (beta + beta^{-1})^{-1} with beta = t^{-k} X^l, l = 1 + k e
// prime and l > e'. At primes of type <= tau' it takes positive valuation,
// with valuation exactly 1 at uniformizers of primes of exact type tau.
struct Omega {
    KochenParams kp;
    long k = 0;
    long ell = 0; // 1 + k e, prime, > e'

    Rat eval(const Rat& x) const;
    NFElem eval(const NFElem& x) const;
    std::string str() const; // "(beta+beta^-1)^-1, beta = X^l / t^k"
};
Omega omega_construct(const KochenParams& kp, Tau tau_prime, long search_bound = 10000);

// Rational points of the pole locus (x^{q^f} - x)^2 = 1.
std::vector<Rat> gamma_rational_poles(const KochenParams& kp);

} // namespace kochenlab

#endif
