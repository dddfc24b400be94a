#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secorder/bitword.hpp"
#include "secorder/boolfn.hpp"
#include "secorder/families.hpp"
#include "secorder/permutation.hpp"

namespace secorder
{

struct OrderLimits
{
  /// Bound on prod |X_i| for the brute-force oracle.
  std::uint64_t enumeration_cap = default_enumeration_cap;
  /// Bound on n for the 2^n truth-table sweep.
  unsigned max_width = default_sweep_width;
};

/*! \brief Sparse seed of the least monotone cover of x -> chi_X(a) along chi_Y.

  Holds, for every key k = chi_Y(a), the join of chi_X(a) over the elements
  with that key. Missing keys read as the zero word.
*/
class CoverMap
{
public:
  explicit CoverMap( unsigned width ) : width_( width ) {}

  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return entries_.size(); }

  void raise( std::uint64_t key, std::uint64_t value ) { entries_[key] |= value; }

  BitWord at( const BitWord& key ) const;
  std::uint64_t at_packed( std::uint64_t key ) const;

  /// Entries sorted by key.
  std::vector<std::pair<BitWord, BitWord>> entries() const;

private:
  unsigned width_;
  std::unordered_map<std::uint64_t, std::uint64_t> entries_;
};

CoverMap least_cover_map( const SetFamily& x, const SetFamily& y );

/// X [= Y via the weight-ordered sweep of the least monotone cover.
bool fast_check( const SetFamily& x, const SetFamily& y, const OrderLimits& limits = {} );

/// X [= Y by enumerating Sec(X) and matching every section against Y.
bool naive_check( const SetFamily& x, const SetFamily& y, const OrderLimits& limits = {} );

/// Full truth table of the least monotone cover when X [= Y, nothing otherwise.
std::optional<BooleanFunction> witness( const SetFamily& x, const SetFamily& y, const OrderLimits& limits = {} );

/// f^(Y): a in X_i iff f(chi_Y(a)) has a 1 at position i. Components may be empty.
SetFamily lift( const BooleanFunction& f, const SetFamily& y );

/// sigma with sigma . X = Y, if X and Y agree up to a reordering of components.
std::optional<Permutation> equiv_check( const SetFamily& x, const SetFamily& y );

/// X_i subset of Y_i for every i.
bool pointwise_included( const SetFamily& x, const SetFamily& y );

} // namespace secorder
