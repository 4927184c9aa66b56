#include "kochenlab/rat.hpp"

#include <algorithm>
#include <numeric>

namespace kochenlab {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds; deterministic for anything desk scale.
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    return r > 0;
}

long long val_p_int(const Int& n, const Int& p) {
    if (n == 0) throw domain_error("val_p_int: zero");
    Int tmp;
    mp_bitcnt_t v = mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<long long>(v);
}

ExtInt val_p(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw input_error("val_p: modulus " + p.get_str() + " is not prime");
    if (x == 0) return ExtInt::infinity();
    return ExtInt(val_p_int(x.get_num(), p) - val_p_int(x.get_den(), p));
}

Int height_rat(const Rat& x) {
    Int a = abs(x.get_num());
    Int b = x.get_den();
    return a > b ? a : b;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("cannot parse rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

std::vector<Rat> rationals_up_to_height(long H) {
    std::vector<Rat> out;
    out.emplace_back(0);
    for (long h = 1; h <= H; ++h) {
        std::vector<Rat> shell;
        // max(|a|,|b|) == h: either a == h (b = 1..h) or b == h (a = 1..h-1).
        for (long b = 1; b <= h; ++b)
            if (std::gcd(h, b) == 1) shell.emplace_back(Rat(h, b));
        for (long a = 1; a < h; ++a)
            if (std::gcd(a, h) == 1) shell.emplace_back(Rat(a, h));
        std::sort(shell.begin(), shell.end());
        for (const Rat& r : shell) {
            out.push_back(r);
            out.push_back(-r);
        }
    }
    return out;
}

Rat rat_pow(const Rat& x, unsigned long n) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), x.get_num().get_mpz_t(), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), x.get_den().get_mpz_t(), n);
    return r;
}

} // namespace kochenlab
