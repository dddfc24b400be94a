#include "secorder/random.hpp"

#include <limits>

#include "secorder/errors.hpp"

namespace secorder
{

std::uint64_t uniform_below( Rng& rng, std::uint64_t bound )
{
  if ( bound == 0 )
    throw usage_error( "empty range" );
  const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for ( ;; )
  {
    const auto draw = rng();
    if ( draw < limit )
      return draw % bound;
  }
}

Subset random_nonempty_subset( Rng& rng, std::size_t c )
{
  if ( c == 0 )
    throw usage_error( "cannot draw a nonempty subset of an empty set" );
  Subset out;
  do
  {
    out.clear();
    std::uint64_t bits = 0;
    for ( std::size_t a = 0; a < c; ++a )
    {
      if ( a % 64 == 0 )
        bits = rng();
      if ( bits & 1 )
        out.push_back( static_cast<ElementId>( a ) );
      bits >>= 1;
    }
  } while ( out.empty() );
  return out;
}

SetFamily random_family( Rng& rng, const std::shared_ptr<const GroundSet>& ground, unsigned n )
{
  std::vector<Subset> components;
  components.reserve( n );
  for ( unsigned i = 0; i < n; ++i )
    components.push_back( random_nonempty_subset( rng, ground->size() ) );
  return SetFamily( ground, std::move( components ) );
}

std::pair<SetFamily, SetFamily> random_pair( Rng& rng, std::size_t c, unsigned n )
{
  const auto ground = numbered_ground( c );
  auto x = random_family( rng, ground, n );
  auto y = random_family( rng, ground, n );
  return { std::move( x ), std::move( y ) };
}

} // namespace secorder
