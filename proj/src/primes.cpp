#include "kochenlab/primes.hpp"

#include "kochenlab/fpelem.hpp"

namespace kochenlab {

FpElem residue_p(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw input_error("residue_p: non-prime modulus");
    if (x == 0) return FpElem(p, 0);
    if (val_p(x, p) < ExtInt(0))
        throw domain_error("residue_p: " + rat_to_string(x) + " is not a " + p.get_str() + "-integer");
    FpElem num(p, x.get_num());
    FpElem den(p, x.get_den());
    return num * den.inv();
}

std::optional<Int> dirichlet_prime(const Int& a, const Int& m,
                                   const std::function<bool(const Int&)>& extra,
                                   const Int& bound) {
    if (m <= 0) throw input_error("dirichlet_prime: modulus must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw input_error("dirichlet_prime: gcd(a, m) != 1");
    Int c = a % m;
    if (c <= 0) c += m;
    for (Int q = c; q <= bound; q += m) {
        if (q < 2) continue;
        if (!is_prime(q)) continue;
        if (extra && !extra(q)) continue;
        return q;
    }
    return std::nullopt;
}

} // namespace kochenlab
