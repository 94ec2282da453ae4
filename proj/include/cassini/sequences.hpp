#pragma once

// Exact generators for the four sequence families. All are produced by
// forward iteration over the full prefix, so every returned value is an
// exact integer; cost is O(count * k) with no silent truncation.

#include <cstddef>
#include <vector>

#include "cassini/types.hpp"

namespace cassini {

// Dying-rabbit sequence with shifted initial conditions:
//   T[0] = 1, T[1..k-1] = 0, T[k..k+ell-2] = 1,
//   T[n] = T[n-ell] + T[n-ell-1] + ... + T[n-k-ell+1]   for n >= k+ell-1.
std::vector<Term> tilde_sequence(const Params& p, std::size_t count);

// Dying-rabbit sequence with the population initial conditions:
//   C[0..ell-1] = 1, C[n] = C[n-1] + C[n-ell] for ell <= n <= k+ell-2,
//   then the same order-(k+ell-1) recurrence as above. Satisfies
//   C[n] == tilde[n+k+1] for all n.
std::vector<Term> original_sequence(const Params& p, std::size_t count);

// Order-k generalized Fibonacci numbers: f[0..k-2] = 0, f[k-1] = 1,
// f[n] = f[n-1] + ... + f[n-k] for n >= k. Requires k >= 2.
std::vector<Term> miles_sequence(int k, std::size_t count);

// Classic Fibonacci with f[0] = f[1] = 1.
std::vector<Term> classic_fibonacci(std::size_t count);

// Dispatch on a SequenceKind tag.
std::vector<Term> generate(const SequenceKind& kind, std::size_t count);

}  // namespace cassini
