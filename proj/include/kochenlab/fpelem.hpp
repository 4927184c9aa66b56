#ifndef KOCHENLAB_FPELEM_HPP
#define KOCHENLAB_FPELEM_HPP

#include "kochenlab/rat.hpp"

namespace kochenlab {

// Element of the prime field F_p. Arithmetic stays exact via mpz.
struct FpElem {
    Int p;
    Int v; // in [0, p)

    FpElem() : p(0), v(0) {}
    FpElem(Int prime, const Int& value) : p(std::move(prime)) {
        v = value % p;
        if (v < 0) v += p;
    }

    FpElem operator+(const FpElem& o) const { return FpElem(p, v + o.v); }
    FpElem operator-(const FpElem& o) const { return FpElem(p, v - o.v); }
    FpElem operator*(const FpElem& o) const { return FpElem(p, v * o.v); }
    FpElem operator-() const { return FpElem(p, -v); }
    bool operator==(const FpElem& o) const { return p == o.p && v == o.v; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    FpElem inv() const {
        if (v == 0) throw domain_error("FpElem: inverse of zero");
        Int r;
        if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
            throw domain_error("FpElem: not invertible");
        return FpElem(p, r);
    }

    FpElem pow(const Int& e) const {
        Int r;
        mpz_powm(r.get_mpz_t(), v.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return FpElem(p, r);
    }
};

// Image of a p-integral rational in F_p. Throws domain_error if val_p(x) < 0.
FpElem residue_p(const Rat& x, const Int& p);

} // namespace kochenlab

#endif
