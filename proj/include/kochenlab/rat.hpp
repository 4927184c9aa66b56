#ifndef KOCHENLAB_RAT_HPP
#define KOCHENLAB_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kochenlab/errors.hpp"
#include "kochenlab/extint.hpp"

namespace kochenlab {

// Exact rationals. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the Rat contract.
using Rat = mpq_class;
using Int = mpz_class;

bool is_prime(const Int& n);

// p-adic valuation of n; n must be nonzero.
long long val_p_int(const Int& n, const Int& p);

// p-adic valuation; +infinity iff x == 0. Throws input_error for non-prime p.
ExtInt val_p(const Rat& x, const Int& p);

// Multiplicative height on Q: H(a/b) = max(|a|, |b|) in lowest terms.
Int height_rat(const Rat& x);

// Parse "a/b" or "a"; accepts an optional leading '-'.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

// All rationals of height <= H (including 0), in a fixed deterministic
// order: by increasing height, positive before negative, numerator
// ascending within a height shell.
std::vector<Rat> rationals_up_to_height(long H);

// Integer power with rational base, n >= 0.
Rat rat_pow(const Rat& x, unsigned long n);

} // namespace kochenlab

#endif
