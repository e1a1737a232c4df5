#include <doctest.h>

#include "postlab/boolfn.hpp"
#include "postlab/error.hpp"
#include "support/generators.hpp"

#include <algorithm>
#include <bit>

using namespace postlab;

namespace
{

TruthTable tt( const char* literal )
{
  return TruthTable::parse_literal( literal );
}

// Brute-force reference predicates, written directly from the definitions.

bool monotone_oracle( const TruthTable& f )
{
  for ( std::uint32_t a = 0; a < f.num_bits(); ++a )
  {
    for ( std::uint32_t b = 0; b < f.num_bits(); ++b )
    {
      if ( ( a & ~b ) == 0u && f.bit( a ) && !f.bit( b ) )
      {
        return false;
      }
    }
  }
  return true;
}

bool affine_oracle( const TruthTable& f )
{
  const auto n = f.arity();
  for ( std::uint32_t coeffs = 0; coeffs < ( 1u << n ); ++coeffs )
  {
    for ( unsigned c = 0; c < 2; ++c )
    {
      bool all = true;
      for ( std::uint32_t a = 0; a < f.num_bits() && all; ++a )
      {
        all = f.bit( a ) == static_cast<bool>( ( std::popcount( a & coeffs ) + c ) & 1 );
      }
      if ( all )
      {
        return true;
      }
    }
  }
  return false;
}

// Largest k such that every subset of size <= k of f^{-1}(c) has a common c-coordinate.
SeparationDegree separation_oracle( const TruthTable& f, bool c )
{
  std::vector<std::uint32_t> pre;
  for ( std::uint32_t a = 0; a < f.num_bits(); ++a )
  {
    if ( f.bit( a ) == c )
    {
      pre.push_back( a );
    }
  }
  const auto all_coords = static_cast<std::uint32_t>( ( 1u << f.arity() ) - 1u );
  std::size_t smallest_failure = pre.size() + 1;
  for ( std::uint64_t subset = 1; subset < ( std::uint64_t{ 1 } << pre.size() ); ++subset )
  {
    std::uint32_t common = all_coords;
    for ( std::size_t j = 0; j < pre.size(); ++j )
    {
      if ( ( subset >> j ) & 1u )
      {
        common &= c ? pre[j] : ( ~pre[j] & all_coords );
      }
    }
    if ( common == 0u )
    {
      smallest_failure = std::min<std::size_t>( smallest_failure, static_cast<std::size_t>( std::popcount( subset ) ) );
    }
  }
  if ( smallest_failure == pre.size() + 1 )
  {
    return SeparationDegree::full();
  }
  if ( smallest_failure - 1 < 2 )
  {
    return SeparationDegree::not_separating();
  }
  return SeparationDegree::of_degree( static_cast<unsigned>( smallest_failure - 1 ) );
}

std::vector<TruthTable> all_tables( unsigned arity )
{
  std::vector<TruthTable> out;
  const auto bits = 1u << arity;
  for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << bits ); ++v )
  {
    out.push_back( TruthTable::from_bits( arity, v ) );
  }
  return out;
}

} // namespace

TEST_CASE( "eval follows the index convention" )
{
  const auto and2 = tt( "tt 2 0b1000" );
  const std::uint8_t one_one[] = { 1, 1 };
  const std::uint8_t one_zero[] = { 1, 0 };
  CHECK( and2.eval( one_one ) );
  CHECK_FALSE( and2.eval( one_zero ) );
  const std::uint8_t xor_args[] = { 1, 1, 0 };
  CHECK_FALSE( fn::parity( 3 ).eval( xor_args ) );
  CHECK_THROWS_AS( and2.eval( xor_args ), ArityError );
  const auto imp = fn::implication();
  const std::uint8_t x1y0[] = { 1, 0 };
  CHECK_FALSE( imp.eval( x1y0 ) );
}

TEST_CASE( "literal round trip" )
{
  CHECK( tt( "tt 2 0b1000" ) == fn::conjunction() );
  CHECK( tt( "tt 0 0b1" ) == fn::constant( true ) );
  CHECK( fn::threshold( 2 ).to_literal() == "tt 3 0b11101000" );
  postlab::testing::Rng rng( 7 );
  for ( unsigned arity = 0; arity <= 8; ++arity )
  {
    const auto t = postlab::testing::random_table( rng, arity );
    CHECK( TruthTable::parse_literal( t.to_literal() ) == t );
  }
  // Leading zeros may be omitted, as in a binary number.
  CHECK( tt( "tt 2 0b100" ) == TruthTable::from_bits( 2, 0b0100 ) );
  CHECK_THROWS( tt( "tt 2 0b10000" ) );
  CHECK_THROWS( tt( "tt 2 0b1002" ) );
  CHECK_THROWS( tt( "tt 17 0b0" ) );
}

TEST_CASE( "reproducing examples" )
{
  CHECK( is_reproducing( fn::conjunction(), false ) );
  CHECK( is_reproducing( fn::conjunction(), true ) );
  CHECK( is_reproducing( fn::parity(), false ) );
  CHECK_FALSE( is_reproducing( fn::parity(), true ) );
  CHECK_FALSE( is_reproducing( fn::negation(), false ) );
  CHECK_FALSE( is_reproducing( fn::negation(), true ) );
}

TEST_CASE( "monotone, self-dual and affine examples" )
{
  CHECK( is_monotone( fn::disjunction() ) );
  const auto g = fn::from_tuple_function( 3, []( auto a ) { return a[0] && ( true && ( a[1] || a[2] ) ); } );
  CHECK( is_monotone( g ) );
  CHECK_FALSE( is_monotone( fn::negation() ) );

  const auto xor3_not = fn::from_tuple_function( 3, []( auto a ) { return !( ( a[0] ^ a[1] ^ a[2] ) & 1 ); } );
  CHECK( is_self_dual( xor3_not ) );
  CHECK( is_self_dual( fn::threshold( 2 ) ) );
  CHECK_FALSE( is_self_dual( fn::conjunction() ) );

  CHECK( is_affine( xor3_not ) );
  CHECK_FALSE( is_affine( fn::conjunction() ) );
  for ( unsigned arity = 2; arity <= 5; ++arity )
  {
    CHECK( is_affine( fn::projection( arity, 1 ) ) );
  }
}

TEST_CASE( "separation degree examples" )
{
  CHECK( separation_degree( fn::threshold( 2 ), true ) == SeparationDegree::of_degree( 2 ) );
  CHECK( separation_degree( fn::implication(), false ) == SeparationDegree::full() );
  const auto and_not = fn::from_tuple_function( 2, []( auto a ) { return a[0] && !a[1]; } );
  CHECK( separation_degree( and_not, true ) == SeparationDegree::full() );
  CHECK( separation_degree( fn::threshold( 3 ), true ) == SeparationDegree::of_degree( 3 ) );
  CHECK( separation_degree( fn::threshold( 5 ), true ) == SeparationDegree::of_degree( 5 ) );
  CHECK( separation_degree( fn::constant( false ), false ) == SeparationDegree::not_separating() );
  CHECK( separation_degree( fn::constant( true ), false ) == SeparationDegree::full() );
  CHECK( separation_degree( fn::negation(), true ) == SeparationDegree::not_separating() );
  CHECK( separation_degree( fn::parity(), true ) == SeparationDegree::not_separating() );
}

TEST_CASE( "dual examples" )
{
  CHECK( dual( fn::conjunction() ) == fn::disjunction() );
  CHECK( dual( fn::threshold( 2 ) ) == fn::threshold( 2 ) );
  const auto not_x_and_y = fn::from_tuple_function( 2, []( auto a ) { return !a[0] && a[1]; } );
  CHECK( dual( fn::implication() ) == not_x_and_y );
}

TEST_CASE( "shape predicates" )
{
  const auto or_shape = shape_predicates( fn::disjunction() );
  CHECK( or_shape.is_or_function );
  CHECK_FALSE( or_shape.is_and_function );
  const auto proj = shape_predicates( fn::projection( 3, 0 ) );
  CHECK( proj.essentially_unary_projection );
  CHECK( proj.is_or_function );
  CHECK( proj.is_and_function );
  const auto maj = shape_predicates( fn::threshold( 2 ) );
  CHECK_FALSE( maj.is_or_function );
  CHECK_FALSE( maj.is_and_function );
  CHECK_FALSE( maj.essentially_unary_projection );
  CHECK_FALSE( maj.essentially_unary_negation );
  CHECK_FALSE( maj.is_constant( false ) );
  CHECK_FALSE( maj.is_constant( true ) );
  const auto neg = shape_predicates( fn::from_tuple_function( 2, []( auto a ) { return !a[1]; } ) );
  CHECK( neg.essentially_unary_negation );
  const auto one = shape_predicates( TruthTable::from_bits( 2, 0b1111 ) );
  CHECK( one.is_constant( true ) );
  CHECK( one.is_or_function );
  CHECK( one.is_and_function );
}

TEST_CASE( "predicates agree with brute-force oracles up to arity 3" )
{
  for ( unsigned arity = 0; arity <= 3; ++arity )
  {
    for ( const auto& f : all_tables( arity ) )
    {
      CAPTURE( f.to_literal() );
      REQUIRE( is_monotone( f ) == monotone_oracle( f ) );
      REQUIRE( is_affine( f ) == affine_oracle( f ) );
      REQUIRE( separation_degree( f, false ) == separation_oracle( f, false ) );
      REQUIRE( separation_degree( f, true ) == separation_oracle( f, true ) );
      REQUIRE( is_self_dual( f ) == ( dual( f ) == f ) );
      REQUIRE( dual( dual( f ) ) == f );
    }
  }
}

TEST_CASE( "predicates agree with oracles on sampled arity-4 tables" )
{
  postlab::testing::Rng rng( 11 );
  for ( int round = 0; round < 300; ++round )
  {
    // Bias toward sparse preimages so separating functions show up.
    auto f = postlab::testing::random_table( rng, 4 );
    if ( round % 3 == 0 )
    {
      const auto g = postlab::testing::random_table( rng, 4 );
      const auto h = postlab::testing::random_table( rng, 4 );
      f = TruthTable::from_index_function( 4, [&]( std::uint32_t i ) { return f.bit( i ) || g.bit( i ) || h.bit( i ); } );
    }
    CAPTURE( f.to_literal() );
    REQUIRE( is_monotone( f ) == monotone_oracle( f ) );
    REQUIRE( is_affine( f ) == affine_oracle( f ) );
    REQUIRE( separation_degree( f, false ) == separation_oracle( f, false ) );
    REQUIRE( separation_degree( f, true ) == separation_oracle( f, true ) );
    REQUIRE( dual( dual( f ) ) == f );
    REQUIRE( is_self_dual( f ) == ( dual( f ) == f ) );
  }
}

TEST_CASE( "affine functions have 0, half or all assignments as models" )
{
  for ( unsigned arity = 0; arity <= 4; ++arity )
  {
    const auto half = arity == 0 ? 0u : ( 1u << ( arity - 1 ) );
    for ( std::uint32_t coeffs = 0; coeffs < ( 1u << arity ); ++coeffs )
    {
      for ( int c = 0; c < 2; ++c )
      {
        const auto f = TruthTable::from_index_function(
            arity, [&]( std::uint32_t i ) { return ( ( std::popcount( i & coeffs ) + c ) & 1 ) != 0; } );
        REQUIRE( is_affine( f ) );
        const auto ones = f.count_ones();
        CHECK( ( ones == 0u || ones == half || ones == f.num_bits() ) );
      }
    }
  }
}

TEST_CASE( "full separation gives a coordinate fixed on the preimage; degrees form a ladder" )
{
  for ( unsigned arity = 1; arity <= 3; ++arity )
  {
    for ( const auto& f : all_tables( arity ) )
    {
      for ( int c = 0; c < 2; ++c )
      {
        const auto sep = separation_degree( f, c == 1 );
        if ( sep == SeparationDegree::full() && f.count_ones() != ( c == 1 ? 0u : f.num_bits() ) )
        {
          bool found = false;
          for ( unsigned i = 0; i < arity && !found; ++i )
          {
            bool fixed = true;
            for ( std::uint32_t a = 0; a < f.num_bits() && fixed; ++a )
            {
              fixed = f.bit( a ) != ( c == 1 ) || ( ( ( a >> i ) & 1u ) == static_cast<unsigned>( c ) );
            }
            found = fixed;
          }
          CHECK( found );
        }
        for ( unsigned k = 2; k < 8; ++k )
        {
          if ( sep.at_least( k + 1 ) )
          {
            CHECK( sep.at_least( k ) );
          }
        }
      }
    }
  }
}

TEST_CASE( "wide tables" )
{
  const auto t = fn::threshold( 15 );
  CHECK( t.arity() == 16u );
  CHECK( t.count_ones() == 17u );
  CHECK( is_monotone( t ) );
  CHECK( separation_degree( t, true ) == SeparationDegree::of_degree( 15 ) );
  CHECK( essential_variables( t ).size() == 16u );
  CHECK_THROWS_AS( TruthTable( 17 ), ArityError );
}
