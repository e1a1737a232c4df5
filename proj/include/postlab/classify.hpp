#pragma once

#include "postlab/boolfn.hpp"
#include "postlab/clones.hpp"

#include <span>
#include <string>
#include <string_view>

namespace postlab
{

enum class Problem
{
  SAT,
  SAT_STAR,
  VAL,
  EQ,
  ISO,
  FV,
  EFV,
  AUDIT,
  USAT,
  ENUM,
  ENUM_LEX
};

enum class ComplexityLabel
{
  PolynomialTime,
  NPComplete,
  CoNPComplete,
  CoNPHardInSigma2P,
  DPComplete,
  EquivalentToGeneralCase,
  PolyDelay,
  PolyDelayLex,
  NoPolyTotalUnlessPeqNP,
  NoLexDelayUnlessPeqNP
};

/// Accepts the enum spellings case-insensitively, plus `sat*`, `efv`/`exists_frozen` and `enum-lex`.
Problem parse_problem( std::string_view text );
std::string to_string( Problem p );
std::string to_string( ComplexityLabel label );

struct ComplexityVerdict
{
  Problem problem = Problem::SAT;
  CloneName clone;
  ComplexityLabel label = ComplexityLabel::PolynomialTime;
  std::string trace;
};

ComplexityVerdict classify( Problem p, const CloneName& clone );
ComplexityVerdict classify( Problem p, std::span<const TruthTable> base );

} // namespace postlab
