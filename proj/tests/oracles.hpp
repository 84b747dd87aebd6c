#pragma once

// Brute-force reference computations for the test suites. They rely only on
// FieldSpec element arithmetic (itself checked against naive coordinate
// arithmetic) and plain loops; none calls the library's search or
// construction routines.

#include <cstdint>
#include <random>
#include <vector>

#include "duadic/codes.hpp"
#include "duadic/gf.hpp"

namespace oracle {

using duadic::Elem;
using duadic::FieldSpec;
using Word = std::vector<Elem>;

struct SweepPoint {
  std::uint64_t q;
  std::uint64_t n;
  Elem lambda;
};

/// Every (q, n, lambda) with q in {2,3,4,5,7,8,9,11,13,16}, n <= 30, gcd(n, q) = 1.
const std::vector<SweepPoint>& sweep();
duadic::FieldPtr field(std::uint64_t q);
duadic::SettingPtr setting(const SweepPoint& p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Least k >= 1 with a^k = 1 mod m by repeated multiplication; 0 if none.
std::uint64_t order_by_powers(std::uint64_t a, std::uint64_t m);
std::uint64_t phi_by_count(std::uint64_t m);
/// Largest divisor of n coprime to r.
std::uint64_t coprime_part(std::uint64_t n, std::uint64_t r);

/// Orbits of x -> g x on a closed set, each sorted, ordered by least element.
std::vector<std::vector<std::uint64_t>> orbits(const std::vector<std::uint64_t>& set, std::uint64_t g, std::uint64_t m);

struct SplitTruth {
  bool type1 = false;
  bool type2 = false;
};

/// Exhaustive search over s in G_{n,r} and unions of q-cosets of 1 + rZ_{nr}.
SplitTruth splitting_truth(std::uint64_t q, std::uint64_t n, std::uint64_t r);

/// max |P'| over s' in G_{n,r} and unions P' of q-cosets with P' and s'P' disjoint
/// and s'^2 P' = P', by trying every subset. Only for few cosets.
std::uint64_t max_iso_dim_by_subsets(std::uint64_t q, std::uint64_t n, std::uint64_t r);

/// a * b mod X^n - c by schoolbook multiplication and folding.
Word ring_mul(const FieldSpec& f, std::size_t n, Elem c, const Word& a, const Word& b);
/// a(X^e) in F_q[X]/(X^n - c), built from repeated multiplication by X.
Word substitute_power(const FieldSpec& f, std::size_t n, Elem c, const Word& a, std::uint64_t e);

/// Minimum weight over all q^k - 1 nonzero combinations of the rows.
std::uint64_t min_weight_all_messages(const FieldSpec& f, const std::vector<Word>& rows);

/// Product by coordinate polynomials reduced by the modulus, ignoring the log tables.
Elem mul_by_coordinates(const FieldSpec& f, Elem a, Elem b);

/// No monic factor of degree 1..deg/2, by trial division with every candidate.
bool irreducible_by_trial(const FieldSpec& f, const std::vector<Elem>& poly);

/// Uniform random element of a vector.
template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Word random_word(const FieldSpec& f, std::size_t n, std::mt19937_64& rng);

}  // namespace oracle
