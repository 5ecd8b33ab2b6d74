#pragma once

#include "abp/exact/polynomial.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace abp::exact {

// Degrees d for which p (squarefree, integer, primitive) could have a factor of
// degree d over Q, judged from its factorization pattern modulo several small
// primes. Always contains 0 and deg p.
std::set<int> possible_factor_degrees(const Polynomial& p);

// Distinct irreducible factors of p over Q, each primitive with integer
// coefficients and positive leading coefficient, ordered by degree.
// Multiplicities and constant factors are dropped. Uses Kronecker's
// interpolation search with modular degree pruning; throws Error(Reducible)
// if the search budget is exhausted.
std::vector<Polynomial> factor(const Polynomial& p, std::uint64_t budget = 50'000'000);

bool is_irreducible(const Polynomial& p);

// Positive divisors of |n| (n != 0), ascending.
std::vector<Integer> divisors(const Integer& n);

} // namespace abp::exact
