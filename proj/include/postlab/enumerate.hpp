#pragma once

#include "postlab/circuit.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace postlab
{

enum class EnumAlgorithm
{
  Backtrack,
  DualPairing,
  BruteForce
};

std::string to_string( EnumAlgorithm algorithm );

using SolutionSink = std::function<void( const Assignment& )>;

/*! Oracle calls (SAT tests for Backtrack, circuit evaluations for
  DualPairing, scanned assignments for BruteForce) before the first output,
  between consecutive outputs, and after the last one.  Always one entry
  more than there are solutions.
*/
struct EnumerationStats
{
  EnumAlgorithm algorithm = EnumAlgorithm::BruteForce;
  std::vector<std::uint64_t> delays;

  std::uint64_t max_delay() const;
  std::uint64_t solutions() const { return delays.empty() ? 0u : delays.size() - 1u; }
};

struct EnumerationReport
{
  std::vector<Assignment> solutions;
  EnumerationStats stats;
};

/// Depth-first self-reduction in variable order; lexicographic output.  WrongClone outside M and L.
EnumerationStats enum_backtrack( const Circuit& c, const SolutionSink& sink );
/// Pairs every I with I(x_1) = 0 with its complement.  WrongClone outside D and S0^2.
EnumerationStats enum_dual_pairing( const Circuit& c, const SolutionSink& sink );
/// Lexicographic exhaustive scan; LimitExceeded beyond brute_limit().
EnumerationStats enum_bruteforce( const Circuit& c, const SolutionSink& sink );

EnumerationReport enum_backtrack( const Circuit& c );
EnumerationReport enum_dual_pairing( const Circuit& c );
EnumerationReport enum_bruteforce( const Circuit& c );

} // namespace postlab
