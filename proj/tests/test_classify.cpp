#include <doctest.h>

#include "postlab/classify.hpp"
#include "postlab/dsl.hpp"
#include "postlab/error.hpp"
#include "support/golden.hpp"

using namespace postlab;

namespace
{

constexpr Problem all_problems[] = { Problem::SAT, Problem::SAT_STAR, Problem::VAL, Problem::EQ,
                                     Problem::ISO, Problem::FV,       Problem::EFV, Problem::AUDIT,
                                     Problem::USAT, Problem::ENUM,     Problem::ENUM_LEX };

std::vector<TruthTable> compile( const std::vector<std::string_view>& formulas )
{
  std::vector<TruthTable> base;
  for ( const auto f : formulas )
  {
    base.push_back( compile_formula( f ) );
  }
  return base;
}

} // namespace

TEST_CASE( "problem names" )
{
  CHECK( parse_problem( "sat*" ) == Problem::SAT_STAR );
  CHECK( parse_problem( "Sat_Star" ) == Problem::SAT_STAR );
  CHECK( parse_problem( "enum-lex" ) == Problem::ENUM_LEX );
  CHECK( parse_problem( "audit" ) == Problem::AUDIT );
  CHECK_THROWS_AS( parse_problem( "sharp-sat" ), InvalidArgument );
  for ( const auto p : all_problems )
  {
    CHECK( parse_problem( to_string( p ) ) == p );
  }
}

TEST_CASE( "golden dichotomy rows" )
{
  for ( const auto& row : testing::golden_rows() )
  {
    const auto base = compile( row.base );
    const auto verdict = classify( parse_problem( row.problem ), base );
    INFO( std::string( row.clone ) << " " << std::string( row.problem ) );
    CHECK( verdict.clone.to_string() == row.clone );
    CHECK( to_string( verdict.label ) == row.label );
    CHECK_FALSE( verdict.trace.empty() );
  }
  CHECK( testing::golden_rows().size() >= 25u );
}

TEST_CASE( "bounded S12 members beyond S12 fall in the last frozen-variable case" )
{
  for ( unsigned k = 2; k <= 6; ++k )
  {
    const auto v = classify( Problem::EFV, CloneName{ CloneFamily::S12, k } );
    CHECK( v.label == ComplexityLabel::CoNPComplete );
    CHECK( v.trace.find( "remaining" ) != std::string::npos );
  }
  CHECK( classify( Problem::EFV, CloneName::parse( "S12" ) ).label == ComplexityLabel::PolynomialTime );
}

TEST_CASE( "every clone gets a verdict for every problem" )
{
  for ( const auto& c : all_clones( 4 ) )
  {
    for ( const auto p : all_problems )
    {
      const auto v = classify( p, c );
      CHECK( v.clone == c );
      CHECK( v.problem == p );
      CHECK_FALSE( v.trace.empty() );
      // Verdicts through the standard base agree with verdicts by name.
      CHECK( classify( p, standard_base( c ) ).label == v.label );
    }
  }
}

TEST_CASE( "hardness propagates upward" )
{
  const auto clones = all_clones( 4 );
  const auto hard = [] ( Problem p, const CloneName& c ) {
    return classify( p, c ).label != ComplexityLabel::PolynomialTime;
  };
  for ( const auto& small : clones )
  {
    for ( const auto& big : clones )
    {
      if ( !includes( big, small ) )
        continue;
      for ( const auto p : { Problem::SAT, Problem::SAT_STAR, Problem::EQ, Problem::ISO, Problem::FV, Problem::AUDIT } )
      {
        if ( hard( p, small ) )
        {
          CHECK( hard( p, big ) );
        }
      }
      if ( classify( Problem::ENUM, small ).label == ComplexityLabel::NoPolyTotalUnlessPeqNP )
      {
        CHECK( classify( Problem::ENUM, big ).label == ComplexityLabel::NoPolyTotalUnlessPeqNP );
      }
    }
  }
}

TEST_CASE( "EQ and ISO labels are invariant under duality" )
{
  for ( const auto& c : all_clones( 4 ) )
  {
    for ( const auto p : { Problem::EQ, Problem::ISO } )
    {
      CHECK( classify( p, c ).label == classify( p, dual_clone( c ) ).label );
    }
  }
}

TEST_CASE( "enumeration labels refine each other" )
{
  for ( const auto& c : all_clones( 4 ) )
  {
    const auto plain = classify( Problem::ENUM, c ).label;
    const auto lex = classify( Problem::ENUM_LEX, c ).label;
    if ( lex == ComplexityLabel::PolyDelayLex || lex == ComplexityLabel::NoLexDelayUnlessPeqNP )
    {
      CHECK( plain == ComplexityLabel::PolyDelay );
    }
    else
    {
      CHECK( plain == ComplexityLabel::NoPolyTotalUnlessPeqNP );
    }
  }
}
