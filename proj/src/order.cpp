#include "secorder/order.hpp"

#include <algorithm>
#include <bit>

#include "secorder/errors.hpp"

namespace secorder
{

namespace
{

void require_comparable( const SetFamily& x, const SetFamily& y )
{
  if ( x.arity() != y.arity() )
    throw usage_error( "families have different arities (" + std::to_string( x.arity() ) + " and " +
                       std::to_string( y.arity() ) + ")" );
  if ( !( x.ground() == y.ground() ) )
    throw usage_error( "families are defined over different ground sets" );
}

void require_sweep( const SetFamily& x, const SetFamily& y, const OrderLimits& limits )
{
  require_comparable( x, y );
  require_nonempty( x );
  require_nonempty( y );
  if ( x.arity() > limits.max_width || x.arity() > max_table_width )
    throw resource_error( "arity " + std::to_string( x.arity() ) + " exceeds the sweep limit of " +
                          std::to_string( std::min( limits.max_width, max_table_width ) ) );
}

// Dense version of the cover map, finalized level by level; returns false as
// soon as some u has |f(u)| > |u|. On success `table` holds f on all of B^n.
bool sweep_cover( const SetFamily& x, const SetFamily& y, std::vector<std::uint32_t>& table )
{
  const unsigned n = x.arity();
  table.assign( std::size_t{ 1 } << n, 0 );
  for ( ElementId a = 0; a < x.ground().size(); ++a )
    table[y.chi_packed( a )] |= static_cast<std::uint32_t>( x.chi_packed( a ) );

  for ( unsigned w = 0; w <= n; ++w )
  {
    for ( auto it = Combinations( n, w ).begin(), end = Combinations::iterator{}; it != end; ++it )
    {
      const auto u = it.packed();
      auto v = table[u];
      for ( auto rest = u; rest; rest &= rest - 1 )
        v |= table[u & ~( rest & ( ~rest + 1 ) )];
      table[u] = v;
      if ( static_cast<unsigned>( std::popcount( v ) ) > w )
        return false;
    }
  }
  return true;
}

} // namespace

BitWord CoverMap::at( const BitWord& key ) const
{
  if ( key.width() != width_ )
    throw usage_error( "cover map key has the wrong width" );
  return BitWord( width_, at_packed( key.packed() ) );
}

std::uint64_t CoverMap::at_packed( std::uint64_t key ) const
{
  auto it = entries_.find( key );
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<BitWord, BitWord>> CoverMap::entries() const
{
  std::vector<std::pair<BitWord, BitWord>> out;
  out.reserve( entries_.size() );
  for ( const auto& [k, v] : entries_ )
    out.emplace_back( BitWord( width_, k ), BitWord( width_, v ) );
  std::sort( out.begin(), out.end() );
  return out;
}

CoverMap least_cover_map( const SetFamily& x, const SetFamily& y )
{
  require_comparable( x, y );
  require_nonempty( x );
  require_nonempty( y );
  CoverMap map( x.arity() );
  for ( ElementId a = 0; a < x.ground().size(); ++a )
    map.raise( y.chi_packed( a ), x.chi_packed( a ) );
  return map;
}

bool fast_check( const SetFamily& x, const SetFamily& y, const OrderLimits& limits )
{
  require_sweep( x, y, limits );
  std::vector<std::uint32_t> table;
  return sweep_cover( x, y, table );
}

bool naive_check( const SetFamily& x, const SetFamily& y, const OrderLimits& limits )
{
  require_comparable( x, y );
  require_nonempty( y );
  const auto sections = enumerate_sections( x, limits.enumeration_cap );
  return std::all_of( sections.sections.begin(), sections.sections.end(),
                      [&]( const Section& s ) { return is_section( s, y ); } );
}

std::optional<BooleanFunction> witness( const SetFamily& x, const SetFamily& y, const OrderLimits& limits )
{
  require_sweep( x, y, limits );
  std::vector<std::uint32_t> table;
  if ( !sweep_cover( x, y, table ) )
    return std::nullopt;
  return BooleanFunction::from_table( x.arity(), std::vector<std::uint64_t>( table.begin(), table.end() ) );
}

SetFamily lift( const BooleanFunction& f, const SetFamily& y )
{
  const auto n = y.arity();
  if ( f.width() != n )
    throw usage_error( "function width " + std::to_string( f.width() ) + " does not match family arity " +
                       std::to_string( n ) );
  std::vector<Subset> components( n );
  for ( ElementId a = 0; a < y.ground().size(); ++a )
  {
    const auto image = f.eval( y.chi_packed( a ) );
    for ( unsigned i = 0; i < n; ++i )
      if ( image & position_bit( n, i ) )
        components[i].push_back( a );
  }
  return SetFamily( y.ground_ptr(), std::move( components ) );
}

std::optional<Permutation> equiv_check( const SetFamily& x, const SetFamily& y )
{
  require_comparable( x, y );
  if ( canonical_form( x ) != canonical_form( y ) )
    return std::nullopt;

  const auto n = x.arity();
  std::vector<std::size_t> images( n );
  std::vector<bool> taken( n, false );
  for ( std::size_t j = 0; j < n; ++j )
  {
    std::size_t i = 0;
    while ( taken[i] || x.component( i ) != y.component( j ) )
      ++i;
    taken[i] = true;
    images[i] = j;
  }
  return Permutation( std::move( images ) );
}

bool pointwise_included( const SetFamily& x, const SetFamily& y )
{
  require_comparable( x, y );
  for ( std::size_t i = 0; i < x.arity(); ++i )
    if ( !std::includes( y.component( i ).begin(), y.component( i ).end(), x.component( i ).begin(),
                         x.component( i ).end() ) )
      return false;
  return true;
}

} // namespace secorder
