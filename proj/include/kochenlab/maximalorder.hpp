#ifndef KOCHENLAB_MAXIMALORDER_HPP
#define KOCHENLAB_MAXIMALORDER_HPP

#include <vector>

#include "kochenlab/numberfield.hpp"

namespace kochenlab {

struct PrimeType {
    int e = 1;
    int f = 1;
};

// Multiset of relative types (e, f) of the primes above p, sorted.
// Unlike primes_above this also handles p dividing the index of Z[theta]:
// it computes a p-maximal order (round-two style) and splits O/pO.
std::vector<PrimeType> prime_types_above(const NumberField& L, const Int& p);

} // namespace kochenlab

#endif
