#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secorder/bitword.hpp"
#include "secorder/boolfn.hpp"

namespace secorder
{

/*! \brief The eight defining lines of the non-finite-generation witness.

  For a word u of weight w the lines are, in precedence order:
    1. w = 0                                    -> 0^n
    2. w = 1                                    -> 1 0^{n-1}
    3. w even                                   -> 1^w 0^{n-w}
    4. u = 0..0 11 0^l 1 0..0, l > 0            -> 1101 0^{n-4}
    5. w = 3, not line 4                        -> 1110 0^{n-4}
    6. u = 0..0 1^L 0^L 1 0..0, L = 2^k, k > 1  -> 1^L 01 0^{n-L-2}
    7. u = 0..0 1 0^L 1^L 0..0, L = 2^k, k > 1  -> 1^L 01 0^{n-L-2}
    8. anything else (odd w = 2k+1)             -> 1^{2k} 10 0^{n-2k-2}
*/
enum class CaseTag : std::uint8_t
{
  zero = 1,
  unit = 2,
  even = 3,
  pair_gap_single = 4,
  other_weight_three = 5,
  block_gap_single = 6,
  single_gap_block = 7,
  remaining = 8,
};

inline constexpr int case_number( CaseTag tag ) noexcept
{
  return static_cast<int>( tag );
}

inline constexpr unsigned min_counterexample_width = 8;

/// Whether `u` satisfies the condition of a line on its own, ignoring precedence.
bool matches_case( CaseTag tag, unsigned width, std::uint64_t u );

/// First line, in precedence order, whose condition holds for `u`.
CaseTag classify( unsigned width, std::uint64_t u );

/// Output prescribed by a line (meaningful when the line matches `u`).
std::uint64_t case_output( CaseTag tag, unsigned width, std::uint64_t u );

/// Rule-backed witness function on B^n, n >= 8.
BooleanFunction counterexample_fn( unsigned width );

/*! \brief Searches v with f(v + e_i1) != f(v + e_i2), v zero on K, i1 and i2.

  Positions are zero-based. Candidates are tried in this order: the zero
  word; a pair of adjacent free positions strictly between i1 and i2 and
  adjacent to neither; runs of 2^k free positions ending 2^k before i1 or
  starting 2^k after i2; every other run of consecutive free positions; and
  finally every assignment of the free positions, so a missing result means no
  such v exists. Throws resource_error if the exhaustive stage would exceed
  2^`max_free_exhaustive` assignments.
*/
std::optional<BitWord> differentiates( const BooleanFunction& f, unsigned i1, unsigned i2,
                                       const std::vector<unsigned>& fixed_zero,
                                       unsigned max_free_exhaustive = 26 );

/// A choice of distinguished wires i1 < i2 and m-2 wires K held at zero (zero-based).
struct WirePlacement
{
  unsigned i1 = 0;
  unsigned i2 = 0;
  std::vector<unsigned> fixed_zero;

  /// One-based key "i1,i2|k1,k2,..." as used in the JSON report.
  std::string key() const;

  friend bool operator==( const WirePlacement&, const WirePlacement& ) = default;
};

struct RefutationReport
{
  unsigned m = 0;
  unsigned n = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t placements_checked = 0;
  std::vector<WirePlacement> failures;
  std::vector<std::pair<WirePlacement, BitWord>> witnesses;
  bool increasing = false;
  bool contractive = false;
  bool strictly_increasing = false;

  bool valid() const noexcept { return failures.empty() && increasing && contractive && strictly_increasing; }
};

/// 2^{m+1} + 4
unsigned refutation_width( unsigned m );

/*! \brief Checks that counterexample_fn(n) separates every pair of wires.

  Uses n = 2^{m+1} + 4 unless overridden. Requires m >= 2 (usage_error) and
  n <= max_width (resource_error).
*/
RefutationReport refute_arity( unsigned m, std::optional<unsigned> n_override = std::nullopt,
                               unsigned max_width = default_sweep_width );

/// Same harness applied to an arbitrary function of width >= m.
RefutationReport refute_arity_with( const BooleanFunction& f, unsigned m,
                                    unsigned max_width = default_sweep_width );

} // namespace secorder
