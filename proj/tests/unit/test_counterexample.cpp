#include <gtest/gtest.h>

#include "oracles.hpp"
#include "secorder/counterexample.hpp"
#include "secorder/errors.hpp"
#include "secorder/random.hpp"

using namespace secorder;

namespace
{

std::string apply( unsigned n, const std::string& u )
{
  return counterexample_fn( n )( BitWord::parse( u ) ).to_string();
}

constexpr CaseTag all_tags[] = { CaseTag::zero,
                                 CaseTag::unit,
                                 CaseTag::even,
                                 CaseTag::pair_gap_single,
                                 CaseTag::other_weight_three,
                                 CaseTag::block_gap_single,
                                 CaseTag::single_gap_block,
                                 CaseTag::remaining };

} // namespace

TEST( Counterexample, FrozenExamples )
{
  EXPECT_EQ( apply( 12, "000000000000" ), "000000000000" );
  EXPECT_EQ( apply( 12, "011010000000" ), "110100000000" );
  EXPECT_EQ( apply( 12, "101010100000" ), "111100000000" );
  EXPECT_EQ( apply( 12, "111100001000" ), "111101000000" );
  EXPECT_EQ( apply( 12, "100001111000" ), "111101000000" );
  EXPECT_EQ( apply( 12, "000100000000" ), "100000000000" );
  EXPECT_EQ( apply( 12, "101010000000" ), "111000000000" );
  EXPECT_EQ( apply( 12, "111110000000" ), "111110000000" );
  EXPECT_EQ( apply( 12, "110111000000" ), "111110000000" );
}

TEST( Counterexample, Classification )
{
  EXPECT_EQ( classify( 12, 0 ), CaseTag::zero );
  EXPECT_EQ( classify( 12, BitWord::parse( "000001000000" ).packed() ), CaseTag::unit );
  EXPECT_EQ( classify( 12, BitWord::parse( "000011000000" ).packed() ), CaseTag::even );
  EXPECT_EQ( classify( 12, BitWord::parse( "000110010000" ).packed() ), CaseTag::pair_gap_single );
  EXPECT_EQ( classify( 12, BitWord::parse( "000111000000" ).packed() ), CaseTag::other_weight_three );
  EXPECT_EQ( classify( 12, BitWord::parse( "100110000000" ).packed() ), CaseTag::other_weight_three );
  EXPECT_EQ( classify( 12, BitWord::parse( "011110000100" ).packed() ), CaseTag::block_gap_single );
  EXPECT_EQ( classify( 12, BitWord::parse( "010000111100" ).packed() ), CaseTag::single_gap_block );
  EXPECT_EQ( classify( 12, BitWord::parse( "011110001000" ).packed() ), CaseTag::remaining );
  EXPECT_EQ( classify( 12, BitWord::parse( "110001110000" ).packed() ), CaseTag::remaining );
  EXPECT_EQ( case_number( CaseTag::remaining ), 8 );
}

TEST( Counterexample, RejectsNarrowWidths )
{
  EXPECT_THROW( counterexample_fn( 7 ), usage_error );
  EXPECT_THROW( counterexample_fn( 63 ), usage_error );
  EXPECT_NO_THROW( counterexample_fn( 8 ) );
}

TEST( Counterexample, MatchesTextualEvaluationAtTwelve )
{
  const unsigned n = 12;
  const auto f = counterexample_fn( n );
  for ( std::uint64_t u = 0; u < ( 1u << n ); ++u )
  {
    const BitWord w( n, u );
    ASSERT_EQ( f( w ).to_string(), oracle::counterexample_by_text( w.to_string() ) ) << w.to_string();
  }
}

TEST( Counterexample, MatchesTextualEvaluationOnSamplesAtTwenty )
{
  const unsigned n = 20;
  const auto f = counterexample_fn( n );
  Rng rng( 59 );
  for ( int trial = 0; trial < 4000; ++trial )
  {
    const BitWord w( n, rng() & width_mask( n ) );
    ASSERT_EQ( f( w ).to_string(), oracle::counterexample_by_text( w.to_string() ) ) << w.to_string();
  }
  // Every pattern-shaped word of width 20, which random sampling rarely hits.
  for ( unsigned block = 4; 2 * block + 1 <= n; block *= 2 )
    for ( unsigned start = 0; start + 2 * block + 1 <= n; ++start )
    {
      const auto ones = width_mask( block );
      const auto left = BitWord( n, ( ( ones << ( block + 1 ) ) | 1 ) << ( n - start - 2 * block - 1 ) );
      const auto right = BitWord( n, ( ( std::uint64_t{ 1 } << ( 2 * block ) ) | ones ) << ( n - start - 2 * block - 1 ) );
      ASSERT_EQ( f( left ).to_string(), oracle::counterexample_by_text( left.to_string() ) );
      ASSERT_EQ( f( right ).to_string(), oracle::counterexample_by_text( right.to_string() ) );
      ASSERT_EQ( classify( n, left.packed() ), CaseTag::block_gap_single );
      ASSERT_EQ( classify( n, right.packed() ), CaseTag::single_gap_block );
    }
}

TEST( Counterexample, PrecedenceAndCaseStructure )
{
  for ( unsigned n : { 12u, 20u } )
  {
    std::vector<std::uint64_t> per_case( 9, 0 );
    for ( std::uint64_t u = 0; u < ( std::uint64_t{ 1 } << n ); ++u )
    {
      const auto tag = classify( n, u );
      ++per_case[case_number( tag )];
      ASSERT_TRUE( matches_case( tag, n, u ) );
      ASSERT_FALSE( matches_case( CaseTag::block_gap_single, n, u ) && matches_case( CaseTag::single_gap_block, n, u ) );
      // The chosen line is the first one whose own shape matches.
      for ( auto other : all_tags )
        if ( other != tag && other != CaseTag::remaining && other != CaseTag::even && matches_case( other, n, u ) )
          ASSERT_LT( case_number( tag ), case_number( other ) );
      if ( tag == CaseTag::remaining )
      {
        const auto w = static_cast<unsigned>( std::popcount( u ) );
        ASSERT_TRUE( w % 2 == 1 && w >= 5 );
      }
    }
    for ( int c = 1; c <= 8; ++c )
      EXPECT_GT( per_case[c], 0u ) << "case " << c << " unused at n=" << n;
  }
}

TEST( Counterexample, StrictlyIncreasingAtTwelveAndTwenty )
{
  for ( unsigned n : { 12u, 20u } )
  {
    const auto f = counterexample_fn( n ).materialized();
    for ( std::uint64_t u = 0; u < ( std::uint64_t{ 1 } << n ); ++u )
    {
      const auto fu = f.eval( u );
      ASSERT_EQ( std::popcount( fu ), std::popcount( u ) );
      for ( unsigned i = 0; i < n; ++i )
      {
        const auto v = u | ( std::uint64_t{ 1 } << i );
        if ( v == u )
          continue;
        const auto fv = f.eval( v );
        ASSERT_EQ( fu & ~fv, 0u );
        ASSERT_NE( fu, fv );
      }
    }
    EXPECT_TRUE( is_increasing( f ) );
    EXPECT_TRUE( is_contractive( f ) );
    EXPECT_TRUE( is_strictly_increasing( f ) );
    EXPECT_FALSE( is_bijective( f ) );
  }
}

TEST( Differentiates, Examples )
{
  const auto f = counterexample_fn( 12 );
  const auto v = differentiates( f, 2, 7, {} );
  ASSERT_TRUE( v.has_value() );
  EXPECT_EQ( v->to_string(), "000011000000" );
  EXPECT_EQ( apply( 12, "001011000000" ), "111000000000" );
  EXPECT_EQ( apply( 12, "000011010000" ), "110100000000" );

  EXPECT_EQ( differentiates( BooleanFunction::identity( 12 ), 2, 7, { 4 } )->to_string(), "000000000000" );
  EXPECT_FALSE( differentiates( BooleanFunction::constant( BitWord::zero( 12 ) ), 2, 7, { 4 } ).has_value() );

  EXPECT_THROW( differentiates( f, 7, 2, {} ), usage_error );
  EXPECT_THROW( differentiates( f, 2, 7, { 2 } ), usage_error );
  EXPECT_THROW( differentiates( f, 2, 12, {} ), usage_error );
  EXPECT_THROW( differentiates( BooleanFunction::constant( BitWord::zero( 30 ) ), 0, 1, {}, 20 ), resource_error );
}

TEST( Differentiates, WitnessesAreGenuine )
{
  const auto f = counterexample_fn( 12 ).materialized();
  for ( unsigned i1 = 0; i1 < 12; ++i1 )
    for ( unsigned i2 = i1 + 1; i2 < 12; ++i2 )
      for ( unsigned k = 0; k < 12; ++k )
      {
        if ( k == i1 || k == i2 )
          continue;
        const auto v = differentiates( f, i1, i2, { k } );
        ASSERT_TRUE( v.has_value() );
        ASSERT_FALSE( v->test( i1 ) || v->test( i2 ) || v->test( k ) );
        ASSERT_NE( f.eval( v->with( i1 ).packed() ), f.eval( v->with( i2 ).packed() ) );
      }
}

TEST( Differentiates, NoneOnlyWhenExhaustivelyAbsent )
{
  // f ignores the first two wires entirely, so no assignment separates them.
  const auto f = BooleanFunction::from_rule( 8, []( std::uint64_t u ) { return u & 0b00111111; } );
  EXPECT_FALSE( differentiates( f, 0, 1, {} ).has_value() );
  // Separable only with both of wires 6 and 8 (zero-based 5, 7) set.
  const auto g = BooleanFunction::from_rule( 8, []( std::uint64_t u ) {
    return ( u & 0b101 ) == 0b101 ? ( u & 0b01000000 ) : 0;
  } );
  const auto v = differentiates( g, 0, 1, {} );
  ASSERT_TRUE( v.has_value() );
  EXPECT_TRUE( v->test( 5 ) && v->test( 7 ) );
  EXPECT_FALSE( differentiates( g, 0, 1, { 7 } ).has_value() );
}

TEST( Refutation, WidthsAndErrors )
{
  EXPECT_EQ( refutation_width( 2 ), 12u );
  EXPECT_EQ( refutation_width( 3 ), 20u );
  EXPECT_EQ( refutation_width( 4 ), 36u );
  EXPECT_THROW( refute_arity( 1 ), usage_error );
  EXPECT_THROW( refute_arity( 4 ), resource_error );
  EXPECT_THROW( refute_arity( 2, 7u ), usage_error );
}

TEST( Refutation, ArityTwo )
{
  const auto report = refute_arity( 2 );
  EXPECT_EQ( report.n, 12u );
  EXPECT_EQ( report.pairs_checked, 66u );
  EXPECT_EQ( report.placements_checked, 66u );
  EXPECT_TRUE( report.failures.empty() );
  EXPECT_EQ( report.witnesses.size(), 66u );
  EXPECT_TRUE( report.valid() );
  EXPECT_EQ( report.witnesses.front().first.key(), "1,2|" );
}

TEST( Refutation, ArityThree )
{
  const auto report = refute_arity( 3 );
  EXPECT_EQ( report.n, 20u );
  EXPECT_EQ( report.pairs_checked, 190u );
  EXPECT_EQ( report.placements_checked, 190u * 18u );
  EXPECT_TRUE( report.failures.empty() );
  EXPECT_TRUE( report.valid() );
}

TEST( Refutation, HarnessOnIdentity )
{
  const auto report = refute_arity_with( BooleanFunction::identity( 12 ), 2 );
  EXPECT_TRUE( report.failures.empty() );
  EXPECT_TRUE( report.increasing && report.contractive && report.strictly_increasing );
  for ( const auto& [placement, v] : report.witnesses )
    ASSERT_EQ( v, BitWord::zero( 12 ) );

  // The constant zero function separates nothing.
  const auto zero = refute_arity_with( BooleanFunction::constant( BitWord::zero( 8 ) ), 2 );
  EXPECT_EQ( zero.failures.size(), 28u );
  EXPECT_FALSE( zero.valid() );
}

TEST( Refutation, NarrowerWidthsStillSeparate )
{
  // The width bound is sufficient, not tight: every pair is already separated at n = 8.
  const auto report = refute_arity( 2, 8u );
  EXPECT_EQ( report.pairs_checked, 28u );
  EXPECT_TRUE( report.valid() );
  const auto f = counterexample_fn( 8 );
  for ( const auto& [p, v] : report.witnesses )
    ASSERT_NE( f.eval( v.with( p.i1 ).packed() ), f.eval( v.with( p.i2 ).packed() ) );
}
