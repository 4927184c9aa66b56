#ifndef KOCHENLAB_PRIMES_HPP
#define KOCHENLAB_PRIMES_HPP

#include <functional>
#include <optional>

#include "kochenlab/rat.hpp"

namespace kochenlab {

// Smallest prime q <= bound with q = a (mod m) satisfying extra(q).
// Requires gcd(a, m) = 1; otherwise the progression holds at most one
// prime and the call is rejected.
std::optional<Int> dirichlet_prime(const Int& a, const Int& m,
                                   const std::function<bool(const Int&)>& extra,
                                   const Int& bound);

} // namespace kochenlab

#endif
