#pragma once

#include "postlab/boolfn.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace postlab::detail
{

/// How a member of a closure was first reached.
struct ClosureStep
{
  static constexpr std::size_t projection = static_cast<std::size_t>( -1 );

  /// Index of the base function applied, or `projection`.
  std::size_t function = projection;
  /// Member tables fed to the function; for a projection, the single variable index.
  std::vector<std::uint32_t> children;
};

struct ClosureResult
{
  unsigned arity = 0;
  /// Members (tables packed into the low 2^arity bits) in breadth-first discovery order.
  std::vector<std::uint32_t> members;
  std::unordered_map<std::uint32_t, ClosureStep> parents;
  bool target_found = false;
};

/// Maximum number of function applications a closure computation may perform.
inline constexpr std::uint64_t closure_work_limit = 400'000'000ull;

/*! \brief Breadth-first closure of the n-ary part of [base], n <= 4.

  Starts from the projections and the base constants lifted to arity n, and
  applies every base function to member tuples involving at least one member
  found in the previous round, until nothing new appears.  Stops early once
  `target` is reached.  Throws LimitExceeded past `closure_work_limit`.
*/
ClosureResult explore_closure( std::span<const TruthTable> base, unsigned arity,
                               std::optional<std::uint32_t> target = std::nullopt );

std::uint32_t pack_table( const TruthTable& t );
TruthTable unpack_table( unsigned arity, std::uint32_t bits );

} // namespace postlab::detail
