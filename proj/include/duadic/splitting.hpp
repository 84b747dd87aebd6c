#pragma once

// Duadic splittings of P_{n,lambda^t}: existence, construction, verification,
// the odd-like and dual pairs, and iso-orthogonality.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duadic/codes.hpp"

namespace duadic {

enum class SplittingKind { TypeI, TypeII };

std::string_view to_string(SplittingKind kind);
std::optional<SplittingKind> parse_splitting_kind(std::string_view text);

/// TypeI: P and sP partition P_{n,lambda^t}.
/// TypeII: P0, P and sP partition it.
struct Splitting {
  SettingPtr setting;
  std::uint64_t t = 1;
  std::uint64_t s = 1;
  IndexSet P;
  IndexSet sP;
  SplittingKind kind = SplittingKind::TypeII;
};

/// Which sufficient condition for existence holds.
enum class ExistenceReason { NrEven, OddSquare, None };

std::string_view to_string(ExistenceReason reason);

struct ExistenceVerdict {
  bool exists = false;
  ExistenceReason reason = ExistenceReason::None;
  std::optional<Splitting> witness;
};

struct Check {
  std::string name;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
  /// Name of the first failed check, empty when ok.
  std::string first_failure() const;
};

/// G_{n,r} = Z_{nr}^* intersected with 1 + rZ_{nr}, sorted.
std::vector<std::uint64_t> multiplier_group(const CodeSetting& setting);
bool in_multiplier_group(const CodeSetting& setting, std::uint64_t s);

/// P0 = {x in P_{n,lambda^t} : n_r' | x}.
IndexSet p0_set(SettingPtr setting, std::int64_t t = 1);
/// X^{n_r} - lambda^{t * inverse(n_r') mod r}.
Poly c0_check_poly(const CodeSetting& setting, std::int64_t t = 1);

/// Order of (1 + rZ_{n_r r}) / <q> is even.
bool exists_type1(const CodeSetting& setting);
/// q is a square in Z_{n_r'}.
bool q_is_square_mod_nr_prime(const CodeSetting& setting);
/// Verdict for t = 1 with a verified witness when a splitting exists.
ExistenceVerdict exists_type2(SettingPtr setting);

std::optional<Splitting> construct_type1(SettingPtr setting, std::int64_t t = 1);
/// NoSplitting when none exists.
Splitting construct_type2(SettingPtr setting, std::int64_t t = 1);

/// Set-theoretic checks plus the factorization of X^n - lambda^t.
VerificationReport verify_splitting(const Splitting& sp);
/// The same for unvalidated data, e.g. a certificate read from a file.
VerificationReport verify_splitting_data(SettingPtr setting, std::int64_t t, std::int64_t s, SplittingKind kind,
                                         std::vector<std::uint64_t> P, std::vector<std::uint64_t> sP);

/// The odd-like codes with check sets P0 + P and P0 + sP.
std::pair<ConstaCode, ConstaCode> odd_like_pair(const Splitting& sp);

/// phi_t(C) is contained in the dual of C: -t in G_{n,r} and P disjoint from -tP. NonUnit for bad t.
bool is_iso_orthogonal(const ConstaCode& code, std::int64_t t);

/// The duals of an even-like pair form an odd-like pair in R_{n,lambda^{-t}}.
bool even_dual_is_odd(const Splitting& sp);

/// Largest |P'| over s' in G_{n,r} and mu_q-invariant P' with P' disjoint from s'P'
/// and s'^2 P' = P'. TooLarge above kMaxIsoCosets cosets.
inline constexpr std::size_t kMaxIsoCosets = 22;
std::uint64_t max_iso_orthogonal_dim(const CodeSetting& setting);

}  // namespace duadic
