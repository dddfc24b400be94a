#include "secorder/counterexample.hpp"

#include <algorithm>
#include <bit>

#include "secorder/errors.hpp"

namespace secorder
{

namespace
{

unsigned popcount( std::uint64_t u )
{
  return static_cast<unsigned>( std::popcount( u ) );
}

// u shifted so that its rightmost 1 sits at bit 0 (u != 0).
std::uint64_t normalized( std::uint64_t u )
{
  return u >> std::countr_zero( u );
}

// Leftmost `k` positions set.
std::uint64_t top( unsigned width, unsigned k )
{
  return width_mask( k ) << ( width - k );
}

bool is_block_length( unsigned length )
{
  return length >= 4 && std::has_single_bit( length );
}

} // namespace

bool matches_case( CaseTag tag, unsigned width, std::uint64_t u )
{
  const auto w = popcount( u );
  switch ( tag )
  {
  case CaseTag::zero:
    return w == 0;
  case CaseTag::unit:
    return w == 1;
  case CaseTag::even:
    return w % 2 == 0;
  case CaseTag::pair_gap_single:
  {
    if ( w != 3 )
      return false;
    const auto head = normalized( u ) >> 1;
    return ( head & 1 ) == 0 && normalized( head ) == 3;
  }
  case CaseTag::other_weight_three:
    return w == 3 && !matches_case( CaseTag::pair_gap_single, width, u );
  case CaseTag::block_gap_single:
  {
    const auto block = w - 1;
    if ( w < 5 || !is_block_length( block ) )
      return false;
    return normalized( u ) == ( ( width_mask( block ) << ( block + 1 ) ) | 1 );
  }
  case CaseTag::single_gap_block:
  {
    const auto block = w - 1;
    if ( w < 5 || !is_block_length( block ) )
      return false;
    return normalized( u ) == ( ( std::uint64_t{ 1 } << ( 2 * block ) ) | width_mask( block ) );
  }
  case CaseTag::remaining:
    return true;
  }
  return false;
}

CaseTag classify( unsigned width, std::uint64_t u )
{
  static constexpr CaseTag precedence[] = {
      CaseTag::zero,             CaseTag::unit,          CaseTag::even,
      CaseTag::pair_gap_single,  CaseTag::other_weight_three, CaseTag::block_gap_single,
      CaseTag::single_gap_block, CaseTag::remaining };
  for ( auto tag : precedence )
    if ( matches_case( tag, width, u ) )
      return tag;
  return CaseTag::remaining;
}

std::uint64_t case_output( CaseTag tag, unsigned width, std::uint64_t u )
{
  const auto w = popcount( u );
  switch ( tag )
  {
  case CaseTag::zero:
    return 0;
  case CaseTag::unit:
    return top( width, 1 );
  case CaseTag::even:
    return top( width, w );
  case CaseTag::pair_gap_single:
    return top( width, 2 ) | position_bit( width, 3 );
  case CaseTag::other_weight_three:
    return top( width, 3 );
  case CaseTag::block_gap_single:
  case CaseTag::single_gap_block:
    return top( width, w - 1 ) | position_bit( width, w );
  case CaseTag::remaining:
    return top( width, w );
  }
  return 0;
}

BooleanFunction counterexample_fn( unsigned width )
{
  if ( width < min_counterexample_width || width > BitWord::max_width )
    throw usage_error( "counterexample width must be in " + std::to_string( min_counterexample_width ) + ".." +
                       std::to_string( BitWord::max_width ) + ", got " + std::to_string( width ) );
  return BooleanFunction::from_rule(
      width, [width]( std::uint64_t u ) { return case_output( classify( width, u ), width, u ); } );
}

std::optional<BitWord> differentiates( const BooleanFunction& f, unsigned i1, unsigned i2,
                                       const std::vector<unsigned>& fixed_zero, unsigned max_free_exhaustive )
{
  const auto n = f.width();
  if ( !( i1 < i2 && i2 < n ) )
    throw usage_error( "differentiation needs positions i1 < i2 < " + std::to_string( n ) );
  if ( fixed_zero.size() + 2 > n )
    throw usage_error( "too many fixed wires for width " + std::to_string( n ) );

  std::uint64_t blocked = position_bit( n, i1 ) | position_bit( n, i2 );
  for ( auto k : fixed_zero )
  {
    if ( k >= n )
      throw usage_error( "fixed wire out of range" );
    const auto bit = position_bit( n, k );
    if ( blocked & bit )
      throw usage_error( "fixed wires must be distinct and differ from i1, i2" );
    blocked |= bit;
  }
  const auto free = width_mask( n ) & ~blocked;
  const auto b1 = position_bit( n, i1 );
  const auto b2 = position_bit( n, i2 );

  auto separates = [&]( std::uint64_t v ) { return f.eval( v | b1 ) != f.eval( v | b2 ); };

  // Positions [start, start + length) as a packed mask, if all are free.
  auto run = [&]( long start, unsigned length ) -> std::optional<std::uint64_t> {
    if ( start < 0 || length == 0 || static_cast<unsigned long>( start ) + length > n )
      return std::nullopt;
    std::uint64_t mask = 0;
    for ( unsigned p = 0; p < length; ++p )
      mask |= position_bit( n, static_cast<unsigned>( start ) + p );
    if ( ( mask & free ) != mask )
      return std::nullopt;
    return mask;
  };

  auto attempt = [&]( std::optional<std::uint64_t> v ) { return v && separates( *v ); };

  if ( separates( 0 ) )
    return BitWord( n, 0 );

  for ( long p = static_cast<long>( i1 ) + 2; p + 2 < static_cast<long>( i2 ); ++p )
    if ( auto v = run( p, 2 ); attempt( v ) )
      return BitWord( n, *v );

  for ( unsigned block = 4; 2 * block < n; block *= 2 )
  {
    if ( auto v = run( static_cast<long>( i1 ) - 2 * static_cast<long>( block ), block ); attempt( v ) )
      return BitWord( n, *v );
    if ( auto v = run( static_cast<long>( i2 ) + block + 1, block ); attempt( v ) )
      return BitWord( n, *v );
  }

  for ( unsigned length = 1; length <= n; ++length )
    for ( long start = 0; start + length <= n; ++start )
      if ( auto v = run( start, length ); attempt( v ) )
        return BitWord( n, *v );

  if ( static_cast<unsigned>( std::popcount( free ) ) > max_free_exhaustive )
    throw resource_error( "exhaustive differentiation search over " + std::to_string( std::popcount( free ) ) +
                          " free wires exceeds the budget" );
  // Enumerate every submask of `free`, ending with the empty one.
  for ( std::uint64_t v = free;; v = ( v - 1 ) & free )
  {
    if ( separates( v ) )
      return BitWord( n, v );
    if ( v == 0 )
      break;
  }
  return std::nullopt;
}

std::string WirePlacement::key() const
{
  std::string out = std::to_string( i1 + 1 ) + "," + std::to_string( i2 + 1 ) + "|";
  for ( std::size_t i = 0; i < fixed_zero.size(); ++i )
  {
    if ( i )
      out += ',';
    out += std::to_string( fixed_zero[i] + 1 );
  }
  return out;
}

unsigned refutation_width( unsigned m )
{
  if ( m < 2 )
    throw usage_error( "cell arity m must be at least 2" );
  if ( m > 30 )
    throw resource_error( "cell arity too large" );
  return static_cast<unsigned>( ( std::uint64_t{ 1 } << ( m + 1 ) ) + 4 );
}

RefutationReport refute_arity( unsigned m, std::optional<unsigned> n_override, unsigned max_width )
{
  const auto n = n_override ? *n_override : refutation_width( m );
  if ( m < 2 )
    throw usage_error( "cell arity m must be at least 2" );
  if ( n > max_width )
    throw resource_error( "width " + std::to_string( n ) + " for m = " + std::to_string( m ) +
                          " exceeds the sweep limit of " + std::to_string( max_width ) );
  return refute_arity_with( counterexample_fn( n ), m, max_width );
}

RefutationReport refute_arity_with( const BooleanFunction& f, unsigned m, unsigned max_width )
{
  const auto n = f.width();
  if ( m < 2 || m > n )
    throw usage_error( "cell arity must satisfy 2 <= m <= n" );
  if ( n > max_width )
    throw resource_error( "width " + std::to_string( n ) + " exceeds the sweep limit of " +
                          std::to_string( max_width ) );

  const auto table = f.materialized( max_width );
  RefutationReport report;
  report.m = m;
  report.n = n;
  report.increasing = is_increasing( table, max_width );
  report.contractive = is_contractive( table, max_width );
  report.strictly_increasing = is_strictly_increasing( table, max_width );

  const unsigned k_size = m - 2;
  std::vector<unsigned> others;
  others.reserve( n );
  for ( unsigned i1 = 0; i1 < n; ++i1 )
    for ( unsigned i2 = i1 + 1; i2 < n; ++i2 )
    {
      ++report.pairs_checked;
      others.clear();
      for ( unsigned p = 0; p < n; ++p )
        if ( p != i1 && p != i2 )
          others.push_back( p );

      auto check = [&]( WirePlacement placement ) {
        ++report.placements_checked;
        if ( auto v = differentiates( table, placement.i1, placement.i2, placement.fixed_zero ) )
          report.witnesses.emplace_back( std::move( placement ), *v );
        else
          report.failures.push_back( std::move( placement ) );
      };

      const auto rest = static_cast<unsigned>( others.size() );
      if ( rest == 0 )
      {
        check( WirePlacement{ i1, i2, {} } );
        continue;
      }
      for ( auto pick : Combinations( rest, k_size ) )
      {
        WirePlacement placement{ i1, i2, {} };
        for ( unsigned q = 0; q < rest; ++q )
          if ( pick.test( q ) )
            placement.fixed_zero.push_back( others[q] );
        check( std::move( placement ) );
      }
    }
  return report;
}

} // namespace secorder
