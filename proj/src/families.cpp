#include "secorder/families.hpp"

#include <algorithm>
#include <limits>

#include "secorder/errors.hpp"

namespace secorder
{

GroundSet::GroundSet( std::vector<std::string> labels ) : labels_( std::move( labels ) )
{
  if ( labels_.empty() )
    throw usage_error( "ground set must have at least one element" );
  if ( labels_.size() > std::numeric_limits<ElementId>::max() )
    throw resource_error( "ground set too large" );
  index_.reserve( labels_.size() );
  for ( std::size_t i = 0; i < labels_.size(); ++i )
    if ( !index_.emplace( labels_[i], static_cast<ElementId>( i ) ).second )
      throw usage_error( "duplicate ground label '" + labels_[i] + "'" );
}

std::optional<ElementId> GroundSet::find( std::string_view label ) const
{
  if ( auto it = index_.find( std::string( label ) ); it != index_.end() )
    return it->second;
  return std::nullopt;
}

ElementId GroundSet::index_of( std::string_view label ) const
{
  if ( auto a = find( label ) )
    return *a;
  throw usage_error( "unknown ground label '" + std::string( label ) + "'" );
}

std::shared_ptr<const GroundSet> numbered_ground( std::size_t c )
{
  std::vector<std::string> labels;
  labels.reserve( c );
  for ( std::size_t i = 1; i <= c; ++i )
    labels.push_back( std::to_string( i ) );
  return std::make_shared<const GroundSet>( std::move( labels ) );
}

SetFamily::SetFamily( std::shared_ptr<const GroundSet> ground, std::vector<Subset> components )
    : ground_( std::move( ground ) ), components_( std::move( components ) )
{
  if ( !ground_ )
    throw usage_error( "family requires a ground set" );
  if ( components_.empty() || components_.size() > BitWord::max_width )
    throw usage_error( "family arity must be in 1.." + std::to_string( BitWord::max_width ) );

  const auto n = arity();
  chi_.assign( ground_->size(), 0 );
  for ( unsigned i = 0; i < n; ++i )
  {
    auto& comp = components_[i];
    std::sort( comp.begin(), comp.end() );
    comp.erase( std::unique( comp.begin(), comp.end() ), comp.end() );
    if ( comp.empty() )
      all_nonempty_ = false;
    for ( auto a : comp )
    {
      if ( a >= ground_->size() )
        throw usage_error( "component " + std::to_string( i + 1 ) + " is not a subset of the ground set" );
      chi_[a] |= position_bit( n, i );
    }
  }
}

SetFamily SetFamily::from_labels( std::shared_ptr<const GroundSet> ground,
                                  const std::vector<std::vector<std::string>>& components )
{
  if ( !ground )
    throw usage_error( "family requires a ground set" );
  std::vector<Subset> ids;
  ids.reserve( components.size() );
  for ( const auto& comp : components )
  {
    Subset s;
    s.reserve( comp.size() );
    for ( const auto& label : comp )
      s.push_back( ground->index_of( label ) );
    ids.push_back( std::move( s ) );
  }
  return SetFamily( std::move( ground ), std::move( ids ) );
}

bool SetFamily::contains( std::size_t i, ElementId a ) const
{
  if ( i >= components_.size() )
    throw usage_error( "component index out of range" );
  return std::binary_search( components_[i].begin(), components_[i].end(), a );
}

SetFamily SetFamily::permuted( const Permutation& sigma ) const
{
  if ( sigma.size() != components_.size() )
    throw usage_error( "permutation size does not match family arity" );
  return SetFamily( ground_, sigma.act( components_ ) );
}

SetFamily SetFamily::without_component( std::size_t i ) const
{
  if ( components_.size() < 2 || i >= components_.size() )
    throw usage_error( "cannot drop component from this family" );
  auto rest = components_;
  rest.erase( rest.begin() + static_cast<std::ptrdiff_t>( i ) );
  return SetFamily( ground_, std::move( rest ) );
}

Section::Section( std::vector<ElementId> elements ) : elements_( std::move( elements ) )
{
  std::sort( elements_.begin(), elements_.end() );
}

std::string render( const Section& s, const GroundSet& ground )
{
  std::string out = "[";
  for ( std::size_t i = 0; i < s.size(); ++i )
  {
    if ( i )
      out += ',';
    out += ground.label( s.elements()[i] );
  }
  return out + "]";
}

BitWord chi( ElementId a, const SetFamily& family )
{
  if ( a >= family.ground().size() )
    throw usage_error( "element index out of range" );
  return BitWord( family.arity(), family.chi_packed( a ) );
}

BitWord chi( std::string_view label, const SetFamily& family )
{
  return chi( family.ground().index_of( label ), family );
}

std::uint64_t product_size( const SetFamily& family )
{
  std::uint64_t product = 1;
  for ( const auto& comp : family.components() )
  {
    if ( comp.empty() )
      return 0;
    if ( product > std::numeric_limits<std::uint64_t>::max() / comp.size() )
      return std::numeric_limits<std::uint64_t>::max();
    product *= comp.size();
  }
  return product;
}

void require_nonempty( const SetFamily& family )
{
  if ( !family.all_nonempty() )
    throw domain_error( "family has an empty component; sections are only defined for nonempty components" );
}

SectionSet enumerate_sections( const SetFamily& family, std::uint64_t cap )
{
  require_nonempty( family );
  const auto product = product_size( family );
  if ( product > cap )
    throw resource_error( "section enumeration needs " + std::to_string( product ) +
                          " tuples, above the cap of " + std::to_string( cap ) );

  const auto n = family.arity();
  SectionSet out{ n, {} };
  std::vector<std::size_t> cursor( n, 0 );
  std::vector<ElementId> tuple( n );
  for ( ;; )
  {
    for ( unsigned i = 0; i < n; ++i )
      tuple[i] = family.component( i )[cursor[i]];
    out.sections.insert( Section( tuple ) );

    unsigned i = 0;
    for ( ; i < n; ++i )
    {
      if ( ++cursor[i] < family.component( i ).size() )
        break;
      cursor[i] = 0;
    }
    if ( i == n )
      break;
  }
  return out;
}

namespace
{

// Kuhn's augmenting path search; slot i may use component j iff bit j of edges[i] is set.
bool augment( unsigned slot, const std::vector<std::uint64_t>& edges, unsigned n,
              std::vector<int>& owner, std::uint64_t& visited )
{
  for ( unsigned j = 0; j < n; ++j )
  {
    const auto bit = position_bit( n, j );
    if ( !( edges[slot] & bit ) || ( visited & bit ) )
      continue;
    visited |= bit;
    if ( owner[j] < 0 || augment( static_cast<unsigned>( owner[j] ), edges, n, owner, visited ) )
    {
      owner[j] = static_cast<int>( slot );
      return true;
    }
  }
  return false;
}

} // namespace

bool is_section( const Section& s, const SetFamily& family )
{
  const auto n = family.arity();
  if ( s.size() != n )
    throw usage_error( "section of length " + std::to_string( s.size() ) + " tested against family of arity " +
                       std::to_string( n ) );
  require_nonempty( family );

  std::vector<std::uint64_t> edges( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    const auto a = s.elements()[i];
    if ( a >= family.ground().size() )
      throw usage_error( "section element outside the ground set" );
    edges[i] = family.chi_packed( a );
    if ( edges[i] == 0 )
      return false;
  }

  std::vector<int> owner( n, -1 );
  for ( unsigned i = 0; i < n; ++i )
  {
    std::uint64_t visited = 0;
    if ( !augment( i, edges, n, owner, visited ) )
      return false;
  }
  return true;
}

SectionSet divide( const SectionSet& sections, const Subset& z )
{
  if ( sections.arity < 2 )
    throw usage_error( "division needs sections of arity at least 2" );
  if ( z.empty() )
    throw domain_error( "division by an empty set" );

  SectionSet out{ sections.arity - 1, {} };
  const auto pivot = z.front();

  auto extend = []( const std::vector<ElementId>& rest, ElementId a ) {
    std::vector<ElementId> full;
    full.reserve( rest.size() + 1 );
    auto at = std::lower_bound( rest.begin(), rest.end(), a );
    full.insert( full.end(), rest.begin(), at );
    full.push_back( a );
    full.insert( full.end(), at, rest.end() );
    return Section( std::move( full ) );
  };

  // Every quotient element t satisfies [pivot] + t in T, so t is some s in T
  // with one occurrence of the pivot removed.
  for ( const auto& s : sections.sections )
  {
    const auto& elems = s.elements();
    auto at = std::lower_bound( elems.begin(), elems.end(), pivot );
    if ( at == elems.end() || *at != pivot )
      continue;
    std::vector<ElementId> rest( elems.begin(), at );
    rest.insert( rest.end(), at + 1, elems.end() );

    const bool all = std::all_of( z.begin(), z.end(),
                                  [&]( ElementId a ) { return sections.contains( extend( rest, a ) ); } );
    if ( all )
      out.sections.insert( Section( std::move( rest ) ) );
  }
  return out;
}

std::vector<Subset> canonical_form( const SetFamily& family )
{
  auto comps = family.components();
  std::sort( comps.begin(), comps.end(), []( const Subset& a, const Subset& b ) {
    if ( a.size() != b.size() )
      return a.size() < b.size();
    return a < b;
  } );
  return comps;
}

SetFamily canonical_family( unsigned n, unsigned max_n )
{
  if ( n == 0 || n > max_n || n > BitWord::max_width )
    throw usage_error( "canonical family width must be in 1.." + std::to_string( std::min( max_n, BitWord::max_width ) ) );

  const std::uint64_t count = ( std::uint64_t{ 1 } << n ) - 1;
  std::vector<std::string> labels;
  labels.reserve( count );
  std::vector<Subset> components( n );
  for ( std::uint64_t u = 1; u <= count; ++u )
  {
    labels.push_back( BitWord( n, u ).to_string() );
    const auto a = static_cast<ElementId>( u - 1 );
    for ( unsigned i = 0; i < n; ++i )
      if ( u & position_bit( n, i ) )
        components[i].push_back( a );
  }
  return SetFamily( std::make_shared<const GroundSet>( std::move( labels ) ), std::move( components ) );
}

} // namespace secorder
