#include "secorder/bitword.hpp"

#include "secorder/errors.hpp"

#include <algorithm>

namespace secorder
{

namespace
{

void require_same_width( const BitWord& u, const BitWord& v )
{
  if ( u.width() != v.width() )
    throw usage_error( "bit words of width " + std::to_string( u.width() ) + " and " +
                       std::to_string( v.width() ) + " are not comparable" );
}

} // namespace

BitWord::BitWord( unsigned width, std::uint64_t packed ) : bits_( packed ), width_( width )
{
  if ( width == 0 || width > max_width )
    throw usage_error( "bit word width must be in 1.." + std::to_string( max_width ) + ", got " +
                       std::to_string( width ) );
  if ( ( packed & ~width_mask( width ) ) != 0 )
    throw usage_error( "packed value has bits beyond width " + std::to_string( width ) );
}

BitWord BitWord::ones( unsigned width )
{
  return BitWord( width, width_mask( width ) );
}

BitWord BitWord::unit( unsigned width, unsigned pos )
{
  return zero( width ).with( pos );
}

BitWord BitWord::parse( std::string_view text )
{
  if ( text.empty() || text.size() > max_width )
    throw usage_error( "bit word literal must have 1.." + std::to_string( max_width ) + " characters" );
  std::uint64_t packed = 0;
  for ( char ch : text )
  {
    if ( ch != '0' && ch != '1' )
      throw usage_error( "invalid character in bit word literal '" + std::string( text ) + "'" );
    packed = ( packed << 1 ) | static_cast<std::uint64_t>( ch == '1' );
  }
  return BitWord( static_cast<unsigned>( text.size() ), packed );
}

std::uint64_t BitWord::mask_of( unsigned pos ) const
{
  if ( pos >= width_ )
    throw usage_error( "position " + std::to_string( pos ) + " out of range for width " +
                       std::to_string( width_ ) );
  return position_bit( width_, pos );
}

bool BitWord::test( unsigned pos ) const
{
  return ( bits_ & mask_of( pos ) ) != 0;
}

BitWord BitWord::with( unsigned pos ) const
{
  return BitWord( width_, bits_ | mask_of( pos ) );
}

BitWord BitWord::without( unsigned pos ) const
{
  return BitWord( width_, bits_ & ~mask_of( pos ) );
}

std::string BitWord::to_string() const
{
  std::string out( width_, '0' );
  for ( unsigned pos = 0; pos < width_; ++pos )
    if ( bits_ & position_bit( width_, pos ) )
      out[pos] = '1';
  return out;
}

BitWord join( const BitWord& u, const BitWord& v )
{
  require_same_width( u, v );
  return BitWord( u.width(), u.packed() | v.packed() );
}

BitWord meet( const BitWord& u, const BitWord& v )
{
  require_same_width( u, v );
  return BitWord( u.width(), u.packed() & v.packed() );
}

bool leq( const BitWord& u, const BitWord& v )
{
  require_same_width( u, v );
  return ( u.packed() & ~v.packed() ) == 0;
}

std::vector<BitWord> successors( const BitWord& u )
{
  std::vector<BitWord> out;
  out.reserve( u.width() - weight( u ) );
  for ( unsigned pos = 0; pos < u.width(); ++pos )
  {
    const auto bit = position_bit( u.width(), pos );
    if ( ( u.packed() & bit ) == 0 )
      out.emplace_back( u.width(), u.packed() | bit );
  }
  return out;
}

Combinations::Combinations( unsigned width, unsigned weight ) : width_( width ), weight_( weight )
{
  if ( width == 0 || width > BitWord::max_width )
    throw usage_error( "combination width must be in 1.." + std::to_string( BitWord::max_width ) );
  if ( weight > width )
    throw usage_error( "weight " + std::to_string( weight ) + " exceeds width " + std::to_string( width ) );
}

Combinations::iterator Combinations::begin() const
{
  return iterator( width_, width_mask( weight_ ), std::uint64_t{ 1 } << width_, false );
}

std::uint64_t binomial( unsigned n, unsigned k )
{
  if ( k > n )
    return 0;
  k = std::min( k, n - k );
  unsigned __int128 result = 1;
  for ( unsigned i = 1; i <= k; ++i )
    result = result * ( n - k + i ) / i;
  return static_cast<std::uint64_t>( result );
}

} // namespace secorder
