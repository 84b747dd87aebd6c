#pragma once

// Even-like duadic constacyclic codes of length q+1 that are subfield subcodes
// of generalized Reed-Solomon codes over F_{q^2}, and MDS verification.

#include <cstdint>
#include <optional>
#include <vector>

#include "duadic/codes.hpp"
#include "duadic/splitting.hpp"

namespace duadic {

struct GrsPlan {
  std::uint64_t q = 0;
  std::uint64_t n = 0;        // q + 1
  std::uint64_t n_half = 0;   // n' = n / 2
  std::uint64_t r = 0;        // 2^{nu2(q-1)}
  std::uint64_t r_odd = 0;    // r' = (q-1) / r
  std::uint64_t s = 0;        // 1 + r n'
  std::uint64_t z = 0;        // (n' + r') / 2 + 1
  std::vector<std::uint64_t> P;   // {1 + ri : (n'+r')/2 < i < (3n'+r')/2}, sorted mod nr
  std::vector<std::uint64_t> P0;  // {1 + r(n'+r')/2, 1 + r(3n'+r')/2}, sorted mod nr
};

/// BadQ unless q is a prime power with nu2(q-1) >= 2.
GrsPlan grs_plan(std::uint64_t q);

/// Least element of F_q^* of order r.
Elem canonical_lambda(const FieldSpec& field, std::uint64_t r);

struct GrsPair {
  Splitting splitting;
  ConstaCode first;   // C_P
  ConstaCode second;  // phi_s(C_P) = C_{sP}
};

/// BadLambda unless lambda has order plan.r; the splitting is verified.
GrsPair grs_code_pair(const GrsPlan& plan, FieldPtr field, Elem lambda);

/// The codewords c_f for monomials f of degree < n'-1 satisfy the root conditions of
/// C~_P over F_{q^2} and span a space of dimension |P|. `z` overrides the plan's z.
bool grs_oracle_check(const GrsPlan& plan, const CodeSetting& setting, std::optional<std::uint64_t> z = std::nullopt);

/// d = n - k + 1 by exhaustive search; TooLarge when infeasible. The zero code is not MDS.
bool is_mds(const ConstaCode& code);

/// Consecutive-root bound: 1 + the longest run t + r(b + cj), j = 0, 1, ..., inside the
/// defining set, over all b and c coprime to n.
Distance bch_bound(const ConstaCode& code);

}  // namespace duadic
