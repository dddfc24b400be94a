#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "secorder/bitword.hpp"
#include "secorder/permutation.hpp"

namespace secorder
{

/// Default bound on n for exhaustive sweeps over B^n.
inline constexpr unsigned default_sweep_width = 24;

/// Hard bound on n for materialized truth tables.
inline constexpr unsigned max_table_width = 30;

/*! \brief A function B^n -> B^n.

  Backed either by an explicit truth table (2^n packed outputs indexed by the
  packed input) or by a rule evaluated on demand. Both representations sit
  behind the same evaluation contract; copies share storage.
*/
class BooleanFunction
{
public:
  using Rule = std::function<std::uint64_t( std::uint64_t )>;

  static BooleanFunction from_table( unsigned width, std::vector<std::uint64_t> outputs );
  static BooleanFunction from_rule( unsigned width, Rule rule );

  static BooleanFunction identity( unsigned width );
  static BooleanFunction constant( const BitWord& value );

  unsigned width() const noexcept { return width_; }
  bool has_table() const noexcept { return static_cast<bool>( table_ ); }

  BitWord operator()( const BitWord& u ) const;

  /// Evaluation on packed words; no width checks.
  std::uint64_t eval( std::uint64_t u ) const { return table_ ? ( *table_ )[u] : rule_( u ); }

  /// Table-backed copy; throws resource_error when width exceeds `max_width`.
  BooleanFunction materialized( unsigned max_width = default_sweep_width ) const;

  /// All 2^n outputs, from the table or by sweeping the rule.
  std::vector<std::uint64_t> outputs( unsigned max_width = default_sweep_width ) const;

private:
  BooleanFunction( unsigned width, std::shared_ptr<const std::vector<std::uint64_t>> table, Rule rule );

  unsigned width_ = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> table_;
  Rule rule_;
};

/// Extensional equality over all of B^n.
bool extensionally_equal( const BooleanFunction& f, const BooleanFunction& g,
                          unsigned max_width = default_sweep_width );

/// f(u) <= f(v) for every u and every successor v of u.
bool is_increasing( const BooleanFunction& f, unsigned max_width = default_sweep_width );

/// |f(u)| <= |u| for all u.
bool is_contractive( const BooleanFunction& f, unsigned max_width = default_sweep_width );

/// Increasing with |f(u)| = |u| for all u.
bool is_strictly_increasing( const BooleanFunction& f, unsigned max_width = default_sweep_width );

bool is_bijective( const BooleanFunction& f, unsigned max_width = default_sweep_width );

/// f(e_i) != f(e_j) for all i != j.
bool is_injective_on_units( const BooleanFunction& f );

/// u -> sigma . u
BooleanFunction permutation_action( const Permutation& sigma );

/*! \brief Recovers tau with f(u) = tau . u, if f is such an action.

  Requires f increasing and contractive (domain_error otherwise). Returns
  nothing unless every f(e_i) is a unit word e_tau(i) with tau injective; the
  candidate tau is then checked against f on all of B^n.
*/
std::optional<Permutation> as_permutation( const BooleanFunction& f, unsigned max_width = default_sweep_width );

/// u -> f(g(u))
BooleanFunction compose( const BooleanFunction& f, const BooleanFunction& g );

/// (.., b_i, .., b_j, ..) -> (.., b_i & b_j, .., b_i | b_j, ..), zero-based positions i < j.
BooleanFunction and_or_cell( unsigned width, unsigned i, unsigned j );

} // namespace secorder
