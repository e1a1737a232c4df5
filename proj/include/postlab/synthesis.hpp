#pragma once

#include "postlab/boolfn.hpp"
#include "postlab/circuit.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace postlab
{

/// Largest target arity handled by closure search.
inline constexpr unsigned synthesis_arity_cap = 4;

/*! \brief A circuit over `base` computing `target`, variables x1..xn.

  Breadth-first closure from the projections; each table remembers the
  function and child tables that first produced it, so the result is
  minimal in discovery depth (not in gate count).  A 0-ary target is built as
  the unary constant over x1.  Throws NotInClone if the target lies outside
  [base] and ArityError above the arity cap.
*/
Circuit synthesize( const TruthTable& target, const Base& base );

/// Builds one circuit over a fixed base, realizing arbitrary members of its clone.
class CircuitBuilder
{
public:
  /// With `allow_extension`, members wider than the arity cap are appended to the base instead of synthesized.
  explicit CircuitBuilder( Base base, bool allow_extension = true );

  std::size_t add_variable( std::string name );
  std::size_t variable( std::string_view name ) const;
  const Circuit& circuit() const noexcept { return circuit_; }

  /// Gate computing f(args); throws NotInClone if f is outside [base].
  std::size_t realize( const TruthTable& f, std::span<const std::size_t> args );
  std::size_t realize( const TruthTable& f, std::initializer_list<std::size_t> args )
  {
    return realize( f, std::span<const std::size_t>( args.begin(), args.size() ) );
  }

  /// Gate computing a constant: the bound gate if any, a 0-ary base function if present, else a unary constant over the first variable.
  std::size_t constant( bool value );

  /// Makes every later request for the constant `value` (including 0-ary gates met by embed) return `gate`.
  void bind_constant( bool value, std::size_t gate );

  /// Splices `other` with its variables bound to existing gates; its functions are realized over this base.
  std::size_t embed( const Circuit& other, std::span<const std::size_t> bindings );

  Circuit finish( std::size_t output ) const;

private:
  Circuit circuit_;
  bool allow_extension_;
  std::vector<TruthTable> base_tables_;
  std::map<TruthTable, Circuit> cache_;
  std::optional<std::size_t> constant_binding_[2];
};

/// Gate-by-gate translation to another base; requires [source base] to be a subclone of [target].
Circuit convert( const Circuit& circuit, const Base& target );

} // namespace postlab
