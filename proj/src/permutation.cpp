#include "secorder/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "secorder/errors.hpp"

namespace secorder
{

Permutation::Permutation( std::vector<std::size_t> images ) : images_( std::move( images ) )
{
  std::vector<bool> seen( images_.size(), false );
  for ( auto j : images_ )
  {
    if ( j >= images_.size() || seen[j] )
      throw usage_error( "not a permutation of {1.." + std::to_string( images_.size() ) + "}" );
    seen[j] = true;
  }
}

Permutation Permutation::identity( std::size_t n )
{
  std::vector<std::size_t> images( n );
  std::iota( images.begin(), images.end(), std::size_t{ 0 } );
  return Permutation( std::move( images ) );
}

Permutation Permutation::transposition( std::size_t n, std::size_t i, std::size_t j )
{
  if ( i >= n || j >= n )
    throw usage_error( "transposition index out of range" );
  auto p = identity( n );
  std::swap( p.images_[i], p.images_[j] );
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<std::size_t> inv( images_.size() );
  for ( std::size_t i = 0; i < images_.size(); ++i )
    inv[images_[i]] = i;
  return Permutation( std::move( inv ) );
}

Permutation Permutation::after( const Permutation& tau ) const
{
  if ( tau.size() != size() )
    throw usage_error( "cannot compose permutations of different sizes" );
  std::vector<std::size_t> images( size() );
  for ( std::size_t i = 0; i < size(); ++i )
    images[i] = images_[tau.images_[i]];
  return Permutation( std::move( images ) );
}

BitWord Permutation::act( const BitWord& u ) const
{
  if ( u.width() != size() )
    throw usage_error( "permutation size does not match word width" );
  std::uint64_t out = 0;
  for ( unsigned pos = 0; pos < u.width(); ++pos )
    if ( u.packed() & position_bit( u.width(), pos ) )
      out |= position_bit( u.width(), static_cast<unsigned>( images_[pos] ) );
  return BitWord( u.width(), out );
}

bool Permutation::is_identity() const noexcept
{
  for ( std::size_t i = 0; i < images_.size(); ++i )
    if ( images_[i] != i )
      return false;
  return true;
}

std::string Permutation::to_string() const
{
  std::string out = "(";
  for ( std::size_t i = 0; i < images_.size(); ++i )
  {
    if ( i )
      out += ' ';
    out += std::to_string( images_[i] + 1 );
  }
  return out + ")";
}

std::vector<Permutation> Permutation::all( std::size_t n )
{
  std::vector<Permutation> out;
  auto images = identity( n ).images_;
  do
  {
    out.emplace_back( images );
  } while ( std::next_permutation( images.begin(), images.end() ) );
  return out;
}

} // namespace secorder
