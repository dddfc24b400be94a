#pragma once

// Test-only reference implementations. Each one follows the textbook
// definition directly and shares no code path with the library routine it
// is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "secorder/boolfn.hpp"
#include "secorder/families.hpp"
#include "secorder/random.hpp"

namespace secorder::oracle
{

/// s in Sec(F) iff some reordering of s lies in F_1 x ... x F_n; tries all n! orders.
inline bool section_by_permutations( std::vector<ElementId> s, const SetFamily& f )
{
  std::sort( s.begin(), s.end() );
  do
  {
    bool fits = true;
    for ( std::size_t i = 0; i < s.size() && fits; ++i )
      fits = std::binary_search( f.component( i ).begin(), f.component( i ).end(), s[i] );
    if ( fits )
      return true;
  } while ( std::next_permutation( s.begin(), s.end() ) );
  return false;
}

/// Sec(F) as a set of sorted tuples, via a plain recursive product.
inline std::set<std::vector<ElementId>> sections( const SetFamily& f )
{
  std::set<std::vector<ElementId>> out;
  std::vector<ElementId> tuple;
  auto rec = [&]( auto&& self, std::size_t i ) -> void {
    if ( i == f.arity() )
    {
      auto sorted = tuple;
      std::sort( sorted.begin(), sorted.end() );
      out.insert( sorted );
      return;
    }
    for ( auto a : f.component( i ) )
    {
      tuple.push_back( a );
      self( self, i + 1 );
      tuple.pop_back();
    }
  };
  rec( rec, 0 );
  return out;
}

/// X [= Y straight from the definition Sec(X) subset of Sec(Y), with permutation search.
inline bool order_by_definition( const SetFamily& x, const SetFamily& y )
{
  for ( const auto& s : sections( x ) )
    if ( !section_by_permutations( s, y ) )
      return false;
  return true;
}

/// f(u) = join of chi_X(a) over all a with chi_Y(a) <= u, computed independently for every u.
inline std::vector<std::uint64_t> least_cover_table( const SetFamily& x, const SetFamily& y )
{
  const auto n = x.arity();
  std::vector<std::uint64_t> table( std::size_t{ 1 } << n, 0 );
  for ( std::uint64_t u = 0; u < table.size(); ++u )
    for ( ElementId a = 0; a < x.ground().size(); ++a )
      if ( ( y.chi_packed( a ) & ~u ) == 0 )
        table[u] |= x.chi_packed( a );
  return table;
}

/// Every nonempty subset of {0..c-1}, as sorted index lists.
inline std::vector<Subset> nonempty_subsets( std::size_t c )
{
  std::vector<Subset> out;
  for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << c ); ++mask )
  {
    Subset s;
    for ( std::size_t a = 0; a < c; ++a )
      if ( mask & ( std::uint64_t{ 1 } << a ) )
        s.push_back( static_cast<ElementId>( a ) );
    out.push_back( std::move( s ) );
  }
  return out;
}

/// All n-tuples of nonempty subsets of a ground set of size c: (2^c - 1)^n families.
inline std::vector<SetFamily> all_families( std::size_t c, unsigned n )
{
  const auto ground = numbered_ground( c );
  const auto subsets = nonempty_subsets( c );
  std::vector<SetFamily> out;
  std::vector<std::size_t> idx( n, 0 );
  for ( ;; )
  {
    std::vector<Subset> comps;
    for ( auto i : idx )
      comps.push_back( subsets[i] );
    out.emplace_back( ground, std::move( comps ) );
    std::size_t k = 0;
    for ( ; k < n; ++k )
    {
      if ( ++idx[k] < subsets.size() )
        break;
      idx[k] = 0;
    }
    if ( k == n )
      break;
  }
  return out;
}

/// All monotone g: B^n -> B as 2^n-bit masks (bit u = g(u)), by filtering every boolean function.
inline std::vector<std::uint64_t> monotone_scalar_functions( unsigned n )
{
  const std::uint64_t points = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> out;
  for ( std::uint64_t g = 0; g < ( std::uint64_t{ 1 } << points ); ++g )
  {
    bool mono = true;
    for ( std::uint64_t u = 0; u < points && mono; ++u )
      for ( std::uint64_t v = 0; v < points && mono; ++v )
        if ( ( u & ~v ) == 0 && ( g >> u & 1 ) && !( g >> v & 1 ) )
          mono = false;
    if ( mono )
      out.push_back( g );
  }
  return out;
}

/// Every monotone f: B^n -> B^n as a truth table (n <= 3).
inline std::vector<std::vector<std::uint64_t>> all_monotone_tables( unsigned n )
{
  const auto scalars = monotone_scalar_functions( n );
  const std::uint64_t points = std::uint64_t{ 1 } << n;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::size_t> pick( n, 0 );
  for ( ;; )
  {
    std::vector<std::uint64_t> table( points, 0 );
    for ( unsigned i = 0; i < n; ++i )
      for ( std::uint64_t u = 0; u < points; ++u )
        if ( scalars[pick[i]] >> u & 1 )
          table[u] |= std::uint64_t{ 1 } << ( n - 1 - i );
    out.push_back( std::move( table ) );
    unsigned k = 0;
    for ( ; k < n; ++k )
    {
      if ( ++pick[k] < scalars.size() )
        break;
      pick[k] = 0;
    }
    if ( k == n )
      break;
  }
  return out;
}

/// Monotone by brute force over all comparable pairs (u <= v).
inline bool monotone_by_pairs( const std::vector<std::uint64_t>& table )
{
  for ( std::uint64_t u = 0; u < table.size(); ++u )
    for ( std::uint64_t v = 0; v < table.size(); ++v )
      if ( ( u & ~v ) == 0 && ( table[u] & ~table[v] ) != 0 )
        return false;
  return true;
}

/*! Random monotone contractive table: starting from the zero function, repeatedly
  raise one output bit at a random u together with its whole up-set, keeping the
  raise only if every |f(v)| <= |v| still holds. Not a uniform sampler.
*/
inline std::vector<std::uint64_t> random_monotone_contractive( Rng& rng, unsigned n, unsigned raises )
{
  const std::uint64_t points = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> table( points, 0 );
  for ( unsigned step = 0; step < raises; ++step )
  {
    const auto u = uniform_below( rng, points );
    const auto bit = std::uint64_t{ 1 } << uniform_below( rng, n );
    auto next = table;
    bool ok = true;
    for ( std::uint64_t v = 0; v < points && ok; ++v )
      if ( ( u & ~v ) == 0 )
      {
        next[v] |= bit;
        ok = std::popcount( next[v] ) <= std::popcount( v );
      }
    if ( ok )
      table = std::move( next );
  }
  return table;
}

/// Random monotone table with f(0) = 0: coordinate i is the up-closure of a few random nonzero generators.
inline std::vector<std::uint64_t> random_monotone( Rng& rng, unsigned n )
{
  const std::uint64_t points = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> table( points, 0 );
  for ( unsigned i = 0; i < n; ++i )
  {
    const auto generators = uniform_below( rng, 4 );
    for ( std::uint64_t g = 0; g < generators; ++g )
    {
      const auto gen = 1 + uniform_below( rng, points - 1 );
      for ( std::uint64_t v = 0; v < points; ++v )
        if ( ( gen & ~v ) == 0 )
          table[v] |= std::uint64_t{ 1 } << ( n - 1 - i );
    }
  }
  return table;
}

/*! Evaluates the eight-line witness function on the textual rendering of u,
  matching each line's shape with a regular expression.
*/
inline std::string counterexample_by_text( const std::string& u )
{
  const auto n = u.size();
  const auto w = static_cast<std::size_t>( std::count( u.begin(), u.end(), '1' ) );
  auto prefix = [n]( const std::string& head ) { return head + std::string( n - head.size(), '0' ); };

  if ( w == 0 )
    return std::string( n, '0' );
  if ( w == 1 )
    return prefix( "1" );
  if ( w % 2 == 0 )
    return prefix( std::string( w, '1' ) );
  if ( std::regex_match( u, std::regex( "0*110+10*" ) ) )
    return prefix( "1101" );
  if ( w == 3 )
    return prefix( "1110" );
  for ( std::size_t block = 4; 2 * block + 1 <= n; block *= 2 )
  {
    const auto ones = std::string( block, '1' );
    const auto zeros = std::string( block, '0' );
    if ( std::regex_match( u, std::regex( "0*" + ones + zeros + "10*" ) ) ||
         std::regex_match( u, std::regex( "0*1" + zeros + ones + "0*" ) ) )
      return prefix( ones + "01" );
  }
  return prefix( std::string( w - 1, '1' ) + "10" );
}

} // namespace secorder::oracle
