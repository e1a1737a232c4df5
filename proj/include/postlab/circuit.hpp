#pragma once

#include "postlab/boolfn.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postlab
{

struct BaseFunction
{
  std::string name;
  TruthTable table;

  friend bool operator==( const BaseFunction&, const BaseFunction& ) = default;
};

/// Ordered list of named gate functions; list positions are the gate labels.
class Base
{
public:
  Base() = default;
  Base( std::vector<BaseFunction> functions );

  /// Appends a function; throws InvalidArgument on a duplicate name.
  std::size_t add( std::string name, TruthTable table );

  /// Index of a function with this table, appending one under `preferred_name` (made unique) if absent.
  std::size_t ensure( const TruthTable& table, std::string_view preferred_name );

  std::optional<std::size_t> find( std::string_view name ) const;
  std::optional<std::size_t> find_table( const TruthTable& table ) const;

  std::size_t size() const noexcept { return functions_.size(); }
  bool empty() const noexcept { return functions_.empty(); }
  const BaseFunction& operator[]( std::size_t i ) const { return functions_.at( i ); }
  auto begin() const noexcept { return functions_.begin(); }
  auto end() const noexcept { return functions_.end(); }

  std::vector<TruthTable> tables() const;

  /// A fresh name derived from `stem` that no function uses yet.
  std::string unique_name( std::string_view stem ) const;

  friend bool operator==( const Base&, const Base& ) = default;

private:
  std::vector<BaseFunction> functions_;
};

struct Gate
{
  enum class Kind
  {
    input,
    apply
  };

  Kind kind = Kind::input;
  /// Variable index for inputs.
  std::size_t variable = 0;
  /// Base function index for applications.
  std::size_t function = 0;
  std::vector<std::size_t> children;

  friend bool operator==( const Gate&, const Gate& ) = default;
};

/// Total assignment over an ordered variable list.
class Assignment
{
public:
  Assignment() = default;
  Assignment( std::shared_ptr<const std::vector<std::string>> variables, std::vector<std::uint8_t> values );

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::string>& variables() const { return *variables_; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  bool operator[]( std::size_t i ) const { return values_.at( i ) != 0u; }
  bool value_of( std::string_view variable ) const;

  Assignment complement() const;
  /// Number of positions set to `a`.
  std::size_t count_value( bool a ) const noexcept;
  /// Bits in variable order, e.g. "101".
  std::string to_bits() const;
  /// Index in the lexicographic order (first variable most significant).
  std::uint64_t lex_index() const noexcept;

  /// Componentwise order.
  bool leq( const Assignment& other ) const;

  friend bool operator==( const Assignment& a, const Assignment& b ) { return a.values_ == b.values_; }

private:
  std::shared_ptr<const std::vector<std::string>> variables_ = std::make_shared<const std::vector<std::string>>();
  std::vector<std::uint8_t> values_;
};

/*! \brief A single-output circuit over a base.

  Gates form a DAG in topological order: every child index is smaller than
  the gate's own index.  Each variable has exactly one input gate, created
  by `add_variable`; input gates may sit anywhere in the gate list.
*/
class Circuit
{
public:
  Circuit() = default;
  explicit Circuit( Base base, std::vector<std::string> variables = {} );

  /// Declares a variable and returns its input gate; throws InvalidArgument on a duplicate.
  std::size_t add_variable( std::string name );
  std::size_t apply( std::size_t function, std::vector<std::size_t> children );
  std::size_t apply( std::string_view function_name, std::vector<std::size_t> children );
  /// Appends a named function to the base; throws InvalidArgument on a duplicate name.
  std::size_t add_function( std::string name, TruthTable table ) { return base_.add( std::move( name ), std::move( table ) ); }
  /// Adds a function to the base (reusing an equal table) and returns its index.
  std::size_t ensure_function( const TruthTable& table, std::string_view preferred_name );
  /// Gate computing a constant, backed by a 0-ary base function.
  std::size_t constant_gate( bool value );
  void set_output( std::size_t gate );

  const Base& base() const noexcept { return base_; }
  const std::vector<std::string>& variables() const noexcept { return *variables_; }
  std::shared_ptr<const std::vector<std::string>> shared_variables() const { return variables_; }
  std::size_t num_variables() const noexcept { return variables_->size(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t output() const;
  bool has_output() const noexcept { return output_.has_value(); }
  std::optional<std::size_t> variable_index( std::string_view name ) const;
  std::size_t input_gate( std::size_t variable ) const { return input_gates_.at( variable ); }

  /// Value under an assignment to the circuit's own variable list.
  bool evaluate( const Assignment& assignment ) const;
  /// Value at bits given in variable order; throws ArityError on a length mismatch.
  bool evaluate( std::span<const std::uint8_t> bits ) const;

  /// Same circuit with input gates first (in variable order) and application gates in their original order.
  Circuit canonical() const;

  Assignment make_assignment( std::vector<std::uint8_t> values ) const;
  /// Assignment whose lexicographic index (first variable most significant) is `index`.
  Assignment assignment_at( std::uint64_t index ) const;

  /// Equality of canonical forms.
  friend bool operator==( const Circuit& a, const Circuit& b );

private:
  Base base_;
  std::shared_ptr<std::vector<std::string>> variables_ = std::make_shared<std::vector<std::string>>();
  std::vector<Gate> gates_;
  std::vector<std::size_t> input_gates_;
  std::optional<std::size_t> output_;
};

/// C[x/c]: the variable is removed and its input replaced by a constant gate.
Circuit substitute( const Circuit& circuit, std::string_view variable, bool value );
/// C[x/y]: uses of x read y instead; y is added to the variable list if it is new.
Circuit substitute_variable( const Circuit& circuit, std::string_view variable, std::string_view replacement );

/// Circuit computing the dual function: same structure, every base function dualized.
Circuit dual_circuit( const Circuit& circuit );

/// Copy of the circuit with extra (fictive) variables appended to its list.
Circuit with_variables( const Circuit& circuit, std::span<const std::string> variables );

/// Same circuit read over `variables`, which must list every variable of `c`; the others are fictive.
Circuit over_variables( const Circuit& c, std::span<const std::string> variables );

/// Number of positions of an assignment set to `a`.
std::size_t count_value( const Assignment& assignment, bool a );

/// Variable cap for exhaustive scans: POSTLAB_BRUTE_LIMIT if set, else 20.
unsigned brute_limit();

/// Bitset of models indexed lexicographically (first variable most significant).
class ModelSet
{
public:
  ModelSet() = default;
  explicit ModelSet( unsigned num_variables );

  unsigned num_variables() const noexcept { return n_; }
  std::uint64_t universe() const noexcept { return std::uint64_t{ 1 } << n_; }
  bool contains( std::uint64_t index ) const noexcept { return ( words_[index >> 6] >> ( index & 63u ) ) & 1u; }
  void set( std::uint64_t index ) noexcept { words_[index >> 6] |= std::uint64_t{ 1 } << ( index & 63u ); }
  std::uint64_t count() const noexcept;
  /// Least model index >= from, if any.
  std::optional<std::uint64_t> next( std::uint64_t from ) const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==( const ModelSet&, const ModelSet& ) = default;

private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>( 1, 0u );
};

/// All models by bit-parallel exhaustive evaluation; throws LimitExceeded beyond brute_limit().
ModelSet model_set( const Circuit& circuit );

std::optional<Assignment> sat_bruteforce( const Circuit& circuit );
std::uint64_t count_sat( const Circuit& circuit );
std::vector<Assignment> all_sat( const Circuit& circuit );

/// Truth table of the circuit over its variable list (variable i is table argument i); arity <= 16.
TruthTable circuit_table( const Circuit& circuit );

} // namespace postlab
