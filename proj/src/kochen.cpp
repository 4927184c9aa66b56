#include "kochenlab/kochen.hpp"

#include <sstream>

namespace kochenlab {

namespace {

long long to_ll(const Int& n) {
    if (!n.fits_slong_p()) throw resource_error("kochen: value does not fit a machine word");
    return n.get_si();
}

} // namespace

KochenParams::KochenParams(Int p_, Tau tau_, int sign) : p(std::move(p_)), tau(tau_), t_sign(sign) {
    if (!is_prime(p)) throw input_error("KochenParams: p must be prime");
    if (tau.e < 1 || tau.f < 1) throw input_error("KochenParams: tau components must be >= 1");
    if (t_sign != 1 && t_sign != -1) throw input_error("KochenParams: t must be p or -p");
}

Int KochenParams::qf() const {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(tau.f));
    return r;
}

std::string gamma_case_name(GammaCase c) {
    switch (c) {
        case GammaCase::NegVal: return "NegVal";
        case GammaCase::PosVal: return "PosVal";
        case GammaCase::ResRootPos: return "ResRootPos";
        case GammaCase::ResUnit: return "ResUnit";
        case GammaCase::Pole: return "Pole";
    }
    throw invariant_violation("gamma_case_name: bad tag");
}

GammaValue gamma_eval(const KochenParams& kp, const Rat& x) {
    unsigned long n = static_cast<unsigned long>(to_ll(kp.qf()));
    Rat D = rat_pow(x, n) - x;
    Rat den = D * D - 1;
    GammaValue out;
    if (den == 0) {
        out.pole = true;
        return out;
    }
    out.value = rat_pow(D / den, static_cast<unsigned long>(kp.tau.e)) / kp.t();
    return out;
}

NFGammaValue gamma_eval(const KochenParams& kp, const NFElem& x) {
    const NumberField* L = x.field();
    unsigned n = static_cast<unsigned>(to_ll(kp.qf()));
    NFElem D = x.pow(n) - x;
    NFElem den = D * D - L->one();
    NFGammaValue out;
    if (den.is_zero()) {
        out.pole = true;
        return out;
    }
    out.value = (D / den).pow(static_cast<unsigned>(kp.tau.e)) * (Rat(1) / kp.t());
    return out;
}

GammaPrediction gamma_valuation_predict(const KochenParams& kp, const ExtInt& v_x, long long v_t,
                                        const ExtInt& v_diff, const ExtInt& v_unit_diff) {
    if (v_t < 1) throw input_error("gamma_valuation_predict: v_P(t) must be >= 1");
    long long e = kp.tau.e;
    long long qf = to_ll(kp.qf());
    GammaPrediction out;
    if (!v_x.is_infinite() && v_x.value() < 0) {
        out.tag = GammaCase::NegVal;
        out.valuation = ExtInt(-e * qf * v_x.value() - v_t);
        return out;
    }
    if (v_x.is_infinite() || v_x.value() > 0) {
        out.tag = GammaCase::PosVal;
        out.valuation = v_x.is_infinite() ? ExtInt::infinity() : ExtInt(e * v_x.value() - v_t);
        return out;
    }
    // v_P(x) = 0: the two residue cases
    if (v_diff < ExtInt(0)) throw input_error("gamma_valuation_predict: v(x^{q^f}-x) < 0 contradicts v(x) = 0");
    if (v_diff > ExtInt(0)) {
        if (!v_unit_diff.is_infinite() && v_unit_diff != ExtInt(0))
            throw input_error("gamma_valuation_predict: inconsistent case data");
        out.tag = GammaCase::ResRootPos;
        out.valuation = v_diff.is_infinite() ? ExtInt::infinity()
                                             : ExtInt(e * v_diff.value() - v_t);
        return out;
    }
    if (v_unit_diff < ExtInt(0))
        throw input_error("gamma_valuation_predict: v((x^{q^f}-x)^2-1) < 0 contradicts the unit case");
    if (v_unit_diff.is_infinite()) {
        out.tag = GammaCase::Pole;
        return out;
    }
    out.tag = GammaCase::ResUnit;
    out.valuation = ExtInt(-e * v_unit_diff.value() - v_t);
    return out;
}

GammaPrediction gamma_valuation_predict(const KochenParams& kp, const Rat& x) {
    ExtInt vx = val_p(x, kp.p);
    ExtInt vd = ExtInt(0), vu = ExtInt(0);
    if (vx == ExtInt(0)) {
        unsigned long n = static_cast<unsigned long>(to_ll(kp.qf()));
        Rat D = rat_pow(x, n) - x;
        vd = val_p(D, kp.p);
        vu = val_p(D * D - 1, kp.p);
        if (vd > ExtInt(0)) vu = ExtInt(0); // unused in this case
    }
    return gamma_valuation_predict(kp, vx, 1, vd, vu);
}

bool gamma_small_certificate(const KochenParams& kp, const NumberField& L, const NFPrime& P,
                             const NFElem& x) {
    if (P.p != kp.p) throw input_error("gamma_small_certificate: prime does not lie above p");
    long long e = kp.tau.e;
    long long vt = P.e; // v_P(t) = e(P|p)
    ExtInt vx = val_at_prime(L, P, x);

    bool hyp_i = !vx.is_infinite() && vx.value() > 0 && (e + 1) * vx.value() <= vt;
    bool hyp_ii = false;
    if (vx == ExtInt(0)) {
        PrimePoly res = residue_at_prime(L, P, x);
        int d = residue_subfield_degree(P, res);
        hyp_ii = kp.tau.f % d != 0;
    }
    if (!hyp_i && !hyp_ii)
        throw input_error(vx == ExtInt(0)
                              ? "gamma_small_certificate: hypothesis (ii) failed: residue "
                                "subfield degree divides f (and (i) needs v_P(x) > 0)"
                              : "gamma_small_certificate: hypothesis (i) failed: need "
                                "0 < (e+1) v_P(x) <= v_P(t)");

    NFGammaValue g = gamma_eval(kp, x);
    if (g.pole) throw input_error("gamma_small_certificate: x is a pole of gamma");
    ExtInt vg = val_at_prime(L, P, g.value);
    // conclusion: v_P(gamma(x)) <= -v_P(t)/(e+1), compared exactly
    bool ok = !vg.is_infinite() &&
              Rat(static_cast<long>(vg.value())) <=
                  Rat(static_cast<long>(-vt)) / Rat(static_cast<long>(e + 1));
    if (!ok) throw invariant_violation("gamma_small_certificate: conclusion failed");
    return true;
}

bool gamma_perturbation_check(const KochenParams& kp, const Rat& x, const Rat& y,
                              const NFPrime& P) {
    if (P.p != kp.p) throw input_error("gamma_perturbation_check: prime does not lie above p");
    long long eP = P.e;
    auto v_P = [&](const Rat& z) -> ExtInt {
        ExtInt v = val_p(z, kp.p);
        return v.is_infinite() ? v : ExtInt(eP * v.value());
    };
    GammaValue gx = gamma_eval(kp, x);
    if (gx.pole) throw input_error("gamma_perturbation_check: x is a pole of gamma");
    ExtInt vgx = v_P(gx.value);
    if (!(vgx < ExtInt(0)))
        throw input_error("gamma_perturbation_check: v_P(gamma(x)) is not negative");
    if (v_P(x - y) < ExtInt(eP))
        throw input_error("gamma_perturbation_check: v_P(x - y) < v_P(t)");
    GammaValue gy = gamma_eval(kp, y);
    if (gy.pole || !(v_P(gy.value) < ExtInt(0)))
        throw invariant_violation("gamma_perturbation_check: conclusion failed for y");
    return true;
}

bool gamma_perturbation_check(const KochenParams& kp, const NumberField& L, const NFElem& x,
                              const NFElem& y, const NFPrime& P) {
    if (P.p != kp.p) throw input_error("gamma_perturbation_check: prime does not lie above p");
    NFGammaValue gx = gamma_eval(kp, x);
    if (gx.pole) throw input_error("gamma_perturbation_check: x is a pole of gamma");
    if (!(val_at_prime(L, P, gx.value) < ExtInt(0)))
        throw input_error("gamma_perturbation_check: v_P(gamma(x)) is not negative");
    if (val_at_prime(L, P, x - y) < ExtInt(P.e))
        throw input_error("gamma_perturbation_check: v_P(x - y) < v_P(t)");
    NFGammaValue gy = gamma_eval(kp, y);
    if (gy.pole || !(val_at_prime(L, P, gy.value) < ExtInt(0)))
        throw invariant_violation("gamma_perturbation_check: conclusion failed for y");
    return true;
}

Rat rho_eval(const KochenParams& kp, const Rat& x) {
    unsigned long n = static_cast<unsigned long>(to_ll(kp.qf()));
    Rat den = rat_pow(x, n) - x + 1;
    if (den == 0) throw domain_error("rho_eval: pole");
    return x / den;
}

NFElem rho_eval(const KochenParams& kp, const NFElem& x) {
    const NumberField* L = x.field();
    unsigned n = static_cast<unsigned>(to_ll(kp.qf()));
    NFElem den = x.pow(n) - x + L->one();
    if (den.is_zero()) throw domain_error("rho_eval: pole");
    return x / den;
}

bool rho_check(const KochenParams& kp, const NumberField& L, const NFPrime& P, const NFElem& x) {
    if (P.p != kp.p || P.e > kp.tau.e || kp.tau.f % P.f != 0)
        throw input_error("rho_check: prime is not of type <= tau above p");
    unsigned n = static_cast<unsigned>(to_ll(kp.qf()));
    NFElem den = x.pow(n) - x + L.one();
    if (den.is_zero()) throw invariant_violation("rho_check: pole at a prime of type <= tau");
    NFElem r = x / den;
    ExtInt vx = val_at_prime(L, P, x);
    ExtInt vr = val_at_prime(L, P, r);
    if (vx == ExtInt(0)) {
        if (vr != ExtInt(0) || !(residue_at_prime(L, P, r) == residue_at_prime(L, P, x)))
            throw invariant_violation("rho_check: unit case failed");
    } else {
        if (!(vr > ExtInt(0))) throw invariant_violation("rho_check: non-unit case failed");
    }
    return true;
}

Omega omega_construct(const KochenParams& kp, Tau tau_prime, long search_bound) {
    if (kp.tau.e > tau_prime.e || tau_prime.f % kp.tau.f != 0)
        throw input_error("omega_construct: tau is not <= tau'");
    long e = kp.tau.e;
    for (long k = 1; 1 + k * e <= search_bound; ++k) {
        long ell = 1 + k * e;
        if (ell > tau_prime.e && is_prime(Int(ell))) {
            Omega w{kp, k, ell};
            return w;
        }
    }
    throw not_found_error("omega_construct: no prime l = 1 + k e within the search bound");
}

Rat Omega::eval(const Rat& x) const {
    Rat beta = rat_pow(x, static_cast<unsigned long>(ell)) /
               rat_pow(kp.t(), static_cast<unsigned long>(k));
    Rat den = beta * beta + 1;
    if (den == 0) throw domain_error("omega: pole");
    return beta / den;
}

NFElem Omega::eval(const NFElem& x) const {
    const NumberField* L = x.field();
    Rat tk = rat_pow(kp.t(), static_cast<unsigned long>(k));
    NFElem beta = x.pow(static_cast<unsigned>(ell)) * (Rat(1) / tk);
    NFElem den = beta * beta + L->one();
    if (den.is_zero()) throw domain_error("omega: pole");
    return beta / den;
}

std::string Omega::str() const {
    std::ostringstream os;
    os << "omega(X) = beta/(beta^2+1), beta = X^" << ell << " / (" << rat_to_string(kp.t())
       << ")^" << k;
    return os.str();
}

std::vector<Rat> gamma_rational_poles(const KochenParams& kp) {
    // rational roots of the monic X^{q^f} - X -+ 1: candidates are +-1 only
    unsigned long n = static_cast<unsigned long>(to_ll(kp.qf()));
    std::vector<Rat> out;
    for (long c : {1L, -1L}) {
        Rat x(c);
        Rat D = rat_pow(x, n) - x;
        if (D * D == 1) out.push_back(x);
    }
    return out;
}

} // namespace kochenlab
