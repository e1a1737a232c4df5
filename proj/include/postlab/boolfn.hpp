#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postlab
{

/*! \brief A Boolean function of bounded arity stored as its full truth table.

  Bit `i` of the table is `f(a_1, ..., a_n)` where `a_j` is the `(j-1)`-th
  binary digit of `i`; the least-significant digit is `a_1`.  Tables of arity
  0 are the two constants.
*/
class TruthTable
{
public:
  static constexpr unsigned max_arity = 16;

  /// The 0-ary constant 0.
  TruthTable() : TruthTable( 0u ) {}

  /// All-zero table of the given arity.
  explicit TruthTable( unsigned arity );

  /// Table whose low `2^arity` bits are taken from `bits` (arity <= 6).
  static TruthTable from_bits( unsigned arity, std::uint64_t bits );

  /// Table with bit `i` equal to `f(i)`.
  static TruthTable from_index_function( unsigned arity, const std::function<bool( std::uint32_t )>& f );

  /// Parses `tt <arity> 0b<bits>`; the rightmost digit is table index 0.
  static TruthTable parse_literal( std::string_view text );

  unsigned arity() const noexcept { return arity_; }
  std::size_t num_bits() const noexcept { return std::size_t{ 1 } << arity_; }

  bool bit( std::uint32_t index ) const noexcept { return ( words_[index >> 6] >> ( index & 63u ) ) & 1u; }
  void set_bit( std::uint32_t index, bool value ) noexcept;

  /// Evaluates at an argument tuple; throws ArityError on a length mismatch.
  bool eval( std::span<const std::uint8_t> args ) const;

  std::size_t count_ones() const noexcept;
  bool is_constant() const noexcept;

  /// Low 64 bits of the table (the whole table when arity <= 6).
  std::uint64_t low_word() const noexcept { return words_[0]; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// `tt <arity> 0b<bits>` with exactly `2^arity` digits.
  std::string to_literal() const;

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;
  friend std::strong_ordering operator<=>( const TruthTable& a, const TruthTable& b );

private:
  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

struct TruthTableHash
{
  std::size_t operator()( const TruthTable& t ) const noexcept;
};

/*! \brief Degree of c-separation of a function.

  `degree(k)` means separating of degree `k` but not `k+1`; `full` is the
  unqualified notion (every subset of `f^{-1}(c)` has a common c-coordinate).
  Ordered: not_separating < degree(2) < degree(3) < ... < full.
*/
class SeparationDegree
{
public:
  enum class Kind
  {
    not_separating,
    degree,
    full
  };

  static SeparationDegree not_separating() { return SeparationDegree( Kind::not_separating, 0 ); }
  static SeparationDegree of_degree( unsigned k );
  static SeparationDegree full() { return SeparationDegree( Kind::full, 0 ); }

  Kind kind() const noexcept { return kind_; }
  /// The k of `degree(k)`; 0 for the other kinds.
  unsigned k() const noexcept { return k_; }

  /// True iff the function is c-separating of degree `n` (n >= 2).
  bool at_least( unsigned n ) const noexcept;

  std::string to_string() const;

  friend bool operator==( const SeparationDegree&, const SeparationDegree& ) = default;
  friend std::strong_ordering operator<=>( const SeparationDegree& a, const SeparationDegree& b );

private:
  SeparationDegree( Kind kind, unsigned k ) : kind_( kind ), k_( k ) {}

  Kind kind_;
  unsigned k_;
};

bool is_reproducing( const TruthTable& f, bool c );
bool is_monotone( const TruthTable& f );
bool is_self_dual( const TruthTable& f );
bool is_affine( const TruthTable& f );
SeparationDegree separation_degree( const TruthTable& f, bool c );

/// `dual f(a) = not f(not a)`.
TruthTable dual( const TruthTable& f );

struct ShapePredicates
{
  bool is_or_function = false;
  bool is_and_function = false;
  bool essentially_unary_projection = false;
  bool essentially_unary_negation = false;
  bool is_constant_0 = false;
  bool is_constant_1 = false;

  bool is_constant( bool c ) const noexcept { return c ? is_constant_1 : is_constant_0; }
};

ShapePredicates shape_predicates( const TruthTable& f );

/// Indices of the variables the function depends on.
std::vector<unsigned> essential_variables( const TruthTable& f );

/// Named functions used throughout the library.
namespace fn
{

TruthTable constant( bool c );
TruthTable projection( unsigned arity, unsigned index );
TruthTable negation();
TruthTable conjunction( unsigned arity = 2 );
TruthTable disjunction( unsigned arity = 2 );
TruthTable parity( unsigned arity = 2 );
TruthTable implication();
/// The (k+1)-ary threshold function: true iff at least k inputs are true.
TruthTable threshold( unsigned k );
/// Table of a function given on argument tuples.
TruthTable from_tuple_function( unsigned arity, const std::function<bool( std::span<const std::uint8_t> )>& f );

} // namespace fn

} // namespace postlab
