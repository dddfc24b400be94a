#include "secorder/boolfn.hpp"

#include <algorithm>
#include <bit>

#include "secorder/errors.hpp"

namespace secorder
{

namespace
{

void require_sweepable( unsigned width, unsigned max_width )
{
  if ( width > max_width || width > max_table_width )
    throw resource_error( "exhaustive sweep over B^" + std::to_string( width ) + " exceeds the width limit " +
                          std::to_string( std::min( max_width, max_table_width ) ) );
}

void require_valid_width( unsigned width )
{
  if ( width == 0 || width > BitWord::max_width )
    throw usage_error( "boolean function width must be in 1.." + std::to_string( BitWord::max_width ) );
}

unsigned popcount( std::uint64_t u )
{
  return static_cast<unsigned>( std::popcount( u ) );
}

} // namespace

BooleanFunction::BooleanFunction( unsigned width, std::shared_ptr<const std::vector<std::uint64_t>> table,
                                  Rule rule )
    : width_( width ), table_( std::move( table ) ), rule_( std::move( rule ) )
{
}

BooleanFunction BooleanFunction::from_table( unsigned width, std::vector<std::uint64_t> outputs )
{
  require_valid_width( width );
  if ( width > max_table_width )
    throw resource_error( "truth table width " + std::to_string( width ) + " too large" );
  if ( outputs.size() != ( std::size_t{ 1 } << width ) )
    throw usage_error( "truth table for width " + std::to_string( width ) + " needs " +
                       std::to_string( std::size_t{ 1 } << width ) + " rows, got " +
                       std::to_string( outputs.size() ) );
  const auto mask = width_mask( width );
  for ( auto v : outputs )
    if ( v & ~mask )
      throw usage_error( "truth table output wider than " + std::to_string( width ) + " bits" );
  return BooleanFunction( width, std::make_shared<const std::vector<std::uint64_t>>( std::move( outputs ) ), {} );
}

BooleanFunction BooleanFunction::from_rule( unsigned width, Rule rule )
{
  require_valid_width( width );
  if ( !rule )
    throw usage_error( "empty rule" );
  return BooleanFunction( width, nullptr, std::move( rule ) );
}

BooleanFunction BooleanFunction::identity( unsigned width )
{
  return from_rule( width, []( std::uint64_t u ) { return u; } );
}

BooleanFunction BooleanFunction::constant( const BitWord& value )
{
  const auto v = value.packed();
  return from_rule( value.width(), [v]( std::uint64_t ) { return v; } );
}

BitWord BooleanFunction::operator()( const BitWord& u ) const
{
  if ( u.width() != width_ )
    throw usage_error( "function of width " + std::to_string( width_ ) + " applied to word of width " +
                       std::to_string( u.width() ) );
  return BitWord( width_, eval( u.packed() ) );
}

std::vector<std::uint64_t> BooleanFunction::outputs( unsigned max_width ) const
{
  if ( table_ )
    return *table_;
  require_sweepable( width_, max_width );
  const std::uint64_t size = std::uint64_t{ 1 } << width_;
  const auto mask = width_mask( width_ );
  std::vector<std::uint64_t> out( size );
  for ( std::uint64_t u = 0; u < size; ++u )
  {
    out[u] = rule_( u );
    if ( out[u] & ~mask )
      throw usage_error( "rule produced a word wider than its declared width" );
  }
  return out;
}

BooleanFunction BooleanFunction::materialized( unsigned max_width ) const
{
  if ( table_ )
    return *this;
  return BooleanFunction( width_, std::make_shared<const std::vector<std::uint64_t>>( outputs( max_width ) ),
                          rule_ );
}

bool extensionally_equal( const BooleanFunction& f, const BooleanFunction& g, unsigned max_width )
{
  if ( f.width() != g.width() )
    return false;
  require_sweepable( f.width(), max_width );
  const std::uint64_t size = std::uint64_t{ 1 } << f.width();
  for ( std::uint64_t u = 0; u < size; ++u )
    if ( f.eval( u ) != g.eval( u ) )
      return false;
  return true;
}

bool is_increasing( const BooleanFunction& f, unsigned max_width )
{
  const auto table = f.outputs( max_width );
  const auto n = f.width();
  for ( std::uint64_t u = 0; u < table.size(); ++u )
    for ( unsigned b = 0; b < n; ++b )
    {
      const auto bit = std::uint64_t{ 1 } << b;
      if ( !( u & bit ) && ( table[u] & ~table[u | bit] ) )
        return false;
    }
  return true;
}

bool is_contractive( const BooleanFunction& f, unsigned max_width )
{
  require_sweepable( f.width(), max_width );
  const std::uint64_t size = std::uint64_t{ 1 } << f.width();
  for ( std::uint64_t u = 0; u < size; ++u )
    if ( popcount( f.eval( u ) ) > popcount( u ) )
      return false;
  return true;
}

bool is_strictly_increasing( const BooleanFunction& f, unsigned max_width )
{
  require_sweepable( f.width(), max_width );
  const std::uint64_t size = std::uint64_t{ 1 } << f.width();
  for ( std::uint64_t u = 0; u < size; ++u )
    if ( popcount( f.eval( u ) ) != popcount( u ) )
      return false;
  return is_increasing( f, max_width );
}

bool is_bijective( const BooleanFunction& f, unsigned max_width )
{
  const auto table = f.outputs( max_width );
  std::vector<bool> hit( table.size(), false );
  for ( auto v : table )
  {
    if ( hit[v] )
      return false;
    hit[v] = true;
  }
  return true;
}

bool is_injective_on_units( const BooleanFunction& f )
{
  const auto n = f.width();
  std::vector<std::uint64_t> images( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    images[i] = f.eval( position_bit( n, i ) );
    for ( unsigned j = 0; j < i; ++j )
      if ( images[j] == images[i] )
        return false;
  }
  return true;
}

BooleanFunction permutation_action( const Permutation& sigma )
{
  const auto n = static_cast<unsigned>( sigma.size() );
  require_valid_width( n );
  std::vector<std::uint64_t> target( n );
  for ( unsigned pos = 0; pos < n; ++pos )
    target[pos] = position_bit( n, static_cast<unsigned>( sigma( pos ) ) );
  return BooleanFunction::from_rule( n, [n, target = std::move( target )]( std::uint64_t u ) {
    std::uint64_t out = 0;
    for ( unsigned pos = 0; pos < n; ++pos )
      if ( u & position_bit( n, pos ) )
        out |= target[pos];
    return out;
  } );
}

std::optional<Permutation> as_permutation( const BooleanFunction& f, unsigned max_width )
{
  if ( !is_increasing( f, max_width ) || !is_contractive( f, max_width ) )
    throw domain_error( "as_permutation requires an increasing contractive function" );

  const auto n = f.width();
  std::vector<std::size_t> tau( n );
  std::vector<bool> used( n, false );
  for ( unsigned i = 0; i < n; ++i )
  {
    const auto image = f.eval( position_bit( n, i ) );
    if ( popcount( image ) != 1 )
      return std::nullopt;
    const auto j = n - 1 - static_cast<unsigned>( std::countr_zero( image ) );
    if ( used[j] )
      return std::nullopt;
    used[j] = true;
    tau[i] = j;
  }
  Permutation candidate( std::move( tau ) );
  if ( !extensionally_equal( f, permutation_action( candidate ), max_width ) )
    throw domain_error( "increasing contractive function is injective on units but not a permutation action" );
  return candidate;
}

BooleanFunction compose( const BooleanFunction& f, const BooleanFunction& g )
{
  if ( f.width() != g.width() )
    throw usage_error( "cannot compose functions of widths " + std::to_string( f.width() ) + " and " +
                       std::to_string( g.width() ) );
  return BooleanFunction::from_rule( f.width(), [f, g]( std::uint64_t u ) { return f.eval( g.eval( u ) ); } );
}

BooleanFunction and_or_cell( unsigned width, unsigned i, unsigned j )
{
  require_valid_width( width );
  if ( i >= j || j >= width )
    throw usage_error( "and/or cell needs positions i < j < " + std::to_string( width ) );
  const auto bi = position_bit( width, i );
  const auto bj = position_bit( width, j );
  return BooleanFunction::from_rule( width, [bi, bj]( std::uint64_t u ) {
    const bool a = u & bi;
    const bool b = u & bj;
    auto out = u & ~( bi | bj );
    if ( a && b )
      out |= bi;
    if ( a || b )
      out |= bj;
    return out;
  } );
}

} // namespace secorder
