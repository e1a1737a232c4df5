#include "postlab/classify.hpp"

#include "postlab/error.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace postlab
{

namespace
{

constexpr std::array<std::pair<Problem, std::string_view>, 11> problem_names{ {
    { Problem::SAT, "SAT" },
    { Problem::SAT_STAR, "SAT_STAR" },
    { Problem::VAL, "VAL" },
    { Problem::EQ, "EQ" },
    { Problem::ISO, "ISO" },
    { Problem::FV, "FV" },
    { Problem::EFV, "EFV" },
    { Problem::AUDIT, "AUDIT" },
    { Problem::USAT, "USAT" },
    { Problem::ENUM, "ENUM" },
    { Problem::ENUM_LEX, "ENUM_LEX" },
} };

std::string upper( std::string_view text )
{
  std::string out;
  for ( const char ch : text )
  {
    out.push_back( ch == '-' ? '_' : static_cast<char>( std::toupper( static_cast<unsigned char>( ch ) ) ) );
  }
  return out;
}

CloneName named( CloneFamily family, unsigned degree = 0 )
{
  return CloneName{ family, degree };
}

struct Case
{
  ComplexityLabel label;
  std::string trace;
};

bool within( const CloneName& c, CloneFamily family, unsigned degree = 0 )
{
  return includes( named( family, degree ), c );
}

bool contains( const CloneName& c, CloneFamily family )
{
  return includes( c, named( family ) );
}

Case classify_case( Problem p, const CloneName& c )
{
  using F = CloneFamily;
  using L = ComplexityLabel;
  const auto s1 = named( F::S1 );
  const auto s12 = named( F::S12 );
  switch ( p )
  {
  case Problem::SAT:
    if ( contains( c, F::S1 ) )
      return { L::NPComplete, "SAT: clone contains S1, NP-complete" };
    return { L::PolynomialTime, "SAT: clone does not contain S1, solvable in polynomial time" };
  case Problem::VAL:
    return { L::PolynomialTime, "VAL: the all-constant evaluation is polynomial for every base" };
  case Problem::EQ:
  case Problem::ISO:
  {
    const auto tag = p == Problem::EQ ? std::string( "EQ" ) : std::string( "ISO" );
    if ( within( c, F::E ) )
      return { L::PolynomialTime, tag + ": clone inside E, conjunctive normal form comparison" };
    if ( within( c, F::V ) )
      return { L::PolynomialTime, tag + ": clone inside V, disjunctive normal form comparison" };
    if ( within( c, F::L ) )
      return { L::PolynomialTime, tag + ": clone inside L, parity normal form comparison" };
    if ( p == Problem::EQ )
      return { L::CoNPComplete, "EQ: clone outside E, V and L, coNP-complete" };
    return { L::CoNPHardInSigma2P,
             "ISO: clone outside E, V and L, coNP-hard and in Sigma2P (completeness open)" };
  }
  case Problem::SAT_STAR:
    if ( contains( c, F::S12 ) )
      return { L::NPComplete, "SAT_STAR: clone contains S12, NP-complete" };
    return { L::PolynomialTime, "SAT_STAR: clone does not contain S12, polynomial time" };
  case Problem::EFV:
    if ( within( c, F::L ) )
      return { L::PolynomialTime, "EFV: clone inside L, unique 1-coefficient rule" };
    if ( within( c, F::M ) )
      return { L::PolynomialTime, "EFV: clone inside M, probe 1^n and its single-zero neighbours" };
    if ( c == s12 )
      return { L::PolynomialTime, "EFV: clone equals S12, every circuit is satisfiable and 1-separating" };
    if ( c == s1 )
      return { L::NPComplete, "EFV: clone equals S1, a frozen variable exists iff the circuit is satisfiable" };
    if ( contains( c, F::S1 ) )
      return { L::DPComplete, "EFV: clone strictly contains S1, DP-complete" };
    return { L::CoNPComplete, "EFV: remaining clones (not in L or M, not containing S1, not S12), coNP-complete" };
  case Problem::FV:
    if ( within( c, F::M ) )
      return { L::PolynomialTime, "FV: clone inside M, probe 1^n and its single-zero neighbours" };
    if ( within( c, F::L ) )
      return { L::PolynomialTime, "FV: clone inside L, parity normal form" };
    if ( contains( c, F::S1 ) )
      return { L::DPComplete, "FV: clone contains S1, DP-complete" };
    return { L::CoNPComplete, "FV: remaining clones, coNP-complete" };
  case Problem::AUDIT:
    if ( within( c, F::M ) )
      return { L::PolynomialTime, "AUDIT: clone inside M, monotone probes" };
    if ( within( c, F::L ) )
      return { L::PolynomialTime, "AUDIT: clone inside L, parity normal form" };
    if ( within( c, F::S1 ) )
      return { L::PolynomialTime, "AUDIT: clone inside S1, every satisfiable circuit has a frozen variable" };
    return { L::CoNPComplete, "AUDIT: remaining clones, coNP-complete" };
  case Problem::USAT:
    if ( contains( c, F::S1 ) )
      return { L::EquivalentToGeneralCase,
               "USAT: clone contains S1, as hard as for unrestricted circuits (complete for US)" };
    if ( contains( c, F::S12 ) && within( c, F::R1 ) )
      return { L::CoNPComplete, "USAT: S12 inside the clone inside R1, coNP-complete" };
    return { L::PolynomialTime, "USAT: remaining clones, polynomial time" };
  case Problem::ENUM:
    if ( within( c, F::M ) )
      return { L::PolyDelay, "ENUM: clone inside M, backtracking with polynomial delay" };
    if ( within( c, F::L ) )
      return { L::PolyDelay, "ENUM: clone inside L, backtracking with polynomial delay" };
    if ( within( c, F::D ) )
      return { L::PolyDelay, "ENUM: clone inside D, models come in complementary pairs" };
    if ( within( c, F::S0, 2 ) )
      return { L::PolyDelay, "ENUM: clone inside S0^2, models come in complementary pairs" };
    return { L::NoPolyTotalUnlessPeqNP, "ENUM: remaining clones, no polynomial total time unless P = NP" };
  case Problem::ENUM_LEX:
    if ( within( c, F::M ) )
      return { L::PolyDelayLex, "ENUM_LEX: clone inside M, lexicographic backtracking" };
    if ( within( c, F::L ) )
      return { L::PolyDelayLex, "ENUM_LEX: clone inside L, lexicographic backtracking" };
    if ( within( c, F::D ) || within( c, F::S0, 2 ) )
      return { L::NoLexDelayUnlessPeqNP,
               "ENUM_LEX: clone inside D or S0^2 but not M or L, no lexicographic polynomial delay unless P = NP" };
    return { L::NoPolyTotalUnlessPeqNP, "ENUM_LEX: remaining clones, no polynomial total time unless P = NP" };
  }
  throw InvalidArgument( "unknown problem" );
}

} // namespace

Problem parse_problem( std::string_view text )
{
  auto key = upper( text );
  if ( key == "SAT*" || key == "SATSTAR" )
    key = "SAT_STAR";
  if ( key == "EXISTS_FROZEN" || key == "EFV" || key == "∃FV" )
    key = "EFV";
  if ( key == "ENUMLEX" )
    key = "ENUM_LEX";
  for ( const auto& [p, name] : problem_names )
  {
    if ( name == key )
    {
      return p;
    }
  }
  throw InvalidArgument( "unknown problem '" + std::string( text ) + "'" );
}

std::string to_string( Problem p )
{
  for ( const auto& [q, name] : problem_names )
  {
    if ( q == p )
    {
      return std::string( name );
    }
  }
  return "?";
}

std::string to_string( ComplexityLabel label )
{
  switch ( label )
  {
  case ComplexityLabel::PolynomialTime: return "PolynomialTime";
  case ComplexityLabel::NPComplete: return "NPComplete";
  case ComplexityLabel::CoNPComplete: return "CoNPComplete";
  case ComplexityLabel::CoNPHardInSigma2P: return "CoNPHardInSigma2P";
  case ComplexityLabel::DPComplete: return "DPComplete";
  case ComplexityLabel::EquivalentToGeneralCase: return "EquivalentToGeneralCase";
  case ComplexityLabel::PolyDelay: return "PolyDelay";
  case ComplexityLabel::PolyDelayLex: return "PolyDelayLex";
  case ComplexityLabel::NoPolyTotalUnlessPeqNP: return "NoPolyTotalUnlessPeqNP";
  case ComplexityLabel::NoLexDelayUnlessPeqNP: return "NoLexDelayUnlessPeqNP";
  }
  return "?";
}

ComplexityVerdict classify( Problem p, const CloneName& clone )
{
  auto [label, trace] = classify_case( p, clone );
  return { p, clone, label, clone.to_string() + ": " + trace };
}

ComplexityVerdict classify( Problem p, std::span<const TruthTable> base )
{
  return classify( p, clone_of( base ) );
}

} // namespace postlab
