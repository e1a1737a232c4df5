#include "postlab/boolfn.hpp"

#include "postlab/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace postlab
{

namespace
{

std::size_t word_count( unsigned arity )
{
  return arity <= 6u ? 1u : ( std::size_t{ 1 } << ( arity - 6u ) );
}

void check_arity( unsigned arity )
{
  if ( arity > TruthTable::max_arity )
  {
    throw ArityError( "truth table arity " + std::to_string( arity ) + " exceeds the maximum of 16" );
  }
}

} // namespace

TruthTable::TruthTable( unsigned arity ) : arity_( arity )
{
  check_arity( arity );
  words_.assign( word_count( arity ), 0u );
}

TruthTable TruthTable::from_bits( unsigned arity, std::uint64_t bits )
{
  if ( arity > 6u )
  {
    throw ArityError( "from_bits supports arity <= 6" );
  }
  TruthTable t( arity );
  const auto n = t.num_bits();
  t.words_[0] = n == 64u ? bits : ( bits & ( ( std::uint64_t{ 1 } << n ) - 1u ) );
  return t;
}

TruthTable TruthTable::from_index_function( unsigned arity, const std::function<bool( std::uint32_t )>& f )
{
  TruthTable t( arity );
  for ( std::uint32_t i = 0; i < t.num_bits(); ++i )
  {
    t.set_bit( i, f( i ) );
  }
  return t;
}

TruthTable TruthTable::parse_literal( std::string_view text )
{
  auto skip_ws = [&]() {
    while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.front() ) ) )
    {
      text.remove_prefix( 1 );
    }
  };
  skip_ws();
  if ( !text.starts_with( "tt" ) )
  {
    throw InvalidArgument( "truth-table literal must start with 'tt'" );
  }
  text.remove_prefix( 2 );
  skip_ws();
  unsigned arity = 0;
  const auto [ptr, ec] = std::from_chars( text.data(), text.data() + text.size(), arity );
  if ( ec != std::errc{} )
  {
    throw InvalidArgument( "truth-table literal: expected arity" );
  }
  text.remove_prefix( static_cast<std::size_t>( ptr - text.data() ) );
  skip_ws();
  if ( !text.starts_with( "0b" ) )
  {
    throw InvalidArgument( "truth-table literal: expected 0b prefix" );
  }
  text.remove_prefix( 2 );
  std::size_t len = 0;
  while ( len < text.size() && ( text[len] == '0' || text[len] == '1' ) )
  {
    ++len;
  }
  const auto digits = text.substr( 0, len );
  text.remove_prefix( len );
  skip_ws();
  if ( !text.empty() || digits.empty() )
  {
    throw InvalidArgument( "truth-table literal: malformed bit string" );
  }
  check_arity( arity );
  TruthTable t( arity );
  if ( digits.size() > t.num_bits() )
  {
    throw ArityError( "truth-table literal has " + std::to_string( digits.size() ) + " digits but arity " +
                      std::to_string( arity ) + " allows " + std::to_string( t.num_bits() ) );
  }
  for ( std::size_t k = 0; k < digits.size(); ++k )
  {
    t.set_bit( static_cast<std::uint32_t>( k ), digits[digits.size() - 1u - k] == '1' );
  }
  return t;
}

void TruthTable::set_bit( std::uint32_t index, bool value ) noexcept
{
  const auto mask = std::uint64_t{ 1 } << ( index & 63u );
  if ( value )
  {
    words_[index >> 6] |= mask;
  }
  else
  {
    words_[index >> 6] &= ~mask;
  }
}

bool TruthTable::eval( std::span<const std::uint8_t> args ) const
{
  if ( args.size() != arity_ )
  {
    throw ArityError( "function of arity " + std::to_string( arity_ ) + " applied to " +
                      std::to_string( args.size() ) + " arguments" );
  }
  std::uint32_t index = 0;
  for ( std::size_t j = 0; j < args.size(); ++j )
  {
    if ( args[j] )
    {
      index |= std::uint32_t{ 1 } << j;
    }
  }
  return bit( index );
}

std::size_t TruthTable::count_ones() const noexcept
{
  std::size_t n = 0;
  for ( auto w : words_ )
  {
    n += static_cast<std::size_t>( std::popcount( w ) );
  }
  return n;
}

bool TruthTable::is_constant() const noexcept
{
  const auto ones = count_ones();
  return ones == 0u || ones == num_bits();
}

std::string TruthTable::to_literal() const
{
  std::string s = "tt " + std::to_string( arity_ ) + " 0b";
  for ( auto i = num_bits(); i-- > 0; )
  {
    s.push_back( bit( static_cast<std::uint32_t>( i ) ) ? '1' : '0' );
  }
  return s;
}

std::strong_ordering operator<=>( const TruthTable& a, const TruthTable& b )
{
  if ( auto c = a.arity_ <=> b.arity_; c != 0 )
  {
    return c;
  }
  for ( auto i = a.words_.size(); i-- > 0; )
  {
    if ( auto c = a.words_[i] <=> b.words_[i]; c != 0 )
    {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t TruthTableHash::operator()( const TruthTable& t ) const noexcept
{
  std::size_t h = std::hash<unsigned>{}( t.arity() );
  for ( auto w : t.words() )
  {
    h ^= std::hash<std::uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return h;
}

SeparationDegree SeparationDegree::of_degree( unsigned k )
{
  if ( k < 2u )
  {
    throw InvalidArgument( "separation degree must be at least 2" );
  }
  return SeparationDegree( Kind::degree, k );
}

bool SeparationDegree::at_least( unsigned n ) const noexcept
{
  switch ( kind_ )
  {
  case Kind::full:
    return true;
  case Kind::degree:
    return k_ >= n;
  default:
    return false;
  }
}

std::string SeparationDegree::to_string() const
{
  switch ( kind_ )
  {
  case Kind::full:
    return "full";
  case Kind::degree:
    return std::to_string( k_ );
  default:
    return "none";
  }
}

std::strong_ordering operator<=>( const SeparationDegree& a, const SeparationDegree& b )
{
  if ( auto c = static_cast<int>( a.kind_ ) <=> static_cast<int>( b.kind_ ); c != 0 )
  {
    return c;
  }
  return a.k_ <=> b.k_;
}

bool is_reproducing( const TruthTable& f, bool c )
{
  const auto index = c ? static_cast<std::uint32_t>( f.num_bits() - 1u ) : 0u;
  return f.bit( index ) == c;
}

bool is_monotone( const TruthTable& f )
{
  const auto n = f.num_bits();
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    const auto flip = std::uint32_t{ 1 } << i;
    for ( std::uint32_t idx = 0; idx < n; ++idx )
    {
      if ( !( idx & flip ) && f.bit( idx ) && !f.bit( idx | flip ) )
      {
        return false;
      }
    }
  }
  return true;
}

bool is_self_dual( const TruthTable& f )
{
  const auto mask = static_cast<std::uint32_t>( f.num_bits() - 1u );
  for ( std::uint32_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.bit( idx ) == f.bit( ~idx & mask ) )
    {
      return false;
    }
  }
  return true;
}

bool is_affine( const TruthTable& f )
{
  const bool a0 = f.bit( 0 );
  std::uint32_t coeffs = 0;
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    if ( f.bit( std::uint32_t{ 1 } << i ) != a0 )
    {
      coeffs |= std::uint32_t{ 1 } << i;
    }
  }
  for ( std::uint32_t idx = 0; idx < f.num_bits(); ++idx )
  {
    const bool expected = a0 ^ static_cast<bool>( std::popcount( idx & coeffs ) & 1 );
    if ( f.bit( idx ) != expected )
    {
      return false;
    }
  }
  return true;
}

SeparationDegree separation_degree( const TruthTable& f, bool c )
{
  // Each a in f^{-1}(c) is represented by the set of its c-coordinates; a
  // subset fails to separate exactly when those sets have empty intersection.
  const auto n = f.arity();
  const auto full_mask = static_cast<std::uint32_t>( f.num_bits() - 1u );
  const auto states = std::size_t{ 1 } << n;
  std::vector<std::uint8_t> present( states, 0u );
  std::uint32_t common = full_mask;
  bool any = false;
  for ( std::uint32_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.bit( idx ) == c )
    {
      const std::uint32_t m = c ? idx : ( ~idx & full_mask );
      present[m] = 1u;
      common &= m;
      any = true;
    }
  }
  if ( !any || common != 0u )
  {
    return SeparationDegree::full();
  }
  if ( present[0] )
  {
    return SeparationDegree::not_separating();
  }

  // Keep only inclusion-minimal sets; a smaller set is always the better choice.
  std::vector<std::uint8_t> has_proper_subset( states, 0u );
  {
    std::vector<std::uint8_t> down = present;
    for ( unsigned i = 0; i < n; ++i )
    {
      for ( std::size_t m = 0; m < states; ++m )
      {
        if ( m & ( std::size_t{ 1 } << i ) )
        {
          down[m] |= down[m ^ ( std::size_t{ 1 } << i )];
        }
      }
    }
    for ( std::size_t m = 0; m < states; ++m )
    {
      if ( !present[m] )
      {
        continue;
      }
      for ( unsigned i = 0; i < n; ++i )
      {
        if ( ( m & ( std::size_t{ 1 } << i ) ) && down[m ^ ( std::size_t{ 1 } << i )] )
        {
          has_proper_subset[m] = 1u;
          break;
        }
      }
    }
  }
  std::vector<std::uint32_t> generators;
  for ( std::size_t m = 0; m < states; ++m )
  {
    if ( present[m] && !has_proper_subset[m] )
    {
      generators.push_back( static_cast<std::uint32_t>( m ) );
    }
  }

  // After round L every intersection of at most L members has been seen; the
  // first round reaching the empty set gives the smallest non-separated subset.
  std::vector<std::uint32_t> level = generators;
  std::vector<std::uint8_t> seen( states, 0u );
  for ( auto m : level )
  {
    seen[m] = 1u;
  }
  for ( unsigned size = 2;; ++size )
  {
    std::vector<std::uint32_t> next;
    for ( auto x : level )
    {
      for ( auto y : generators )
      {
        const auto z = x & y;
        if ( z == 0u )
        {
          const unsigned degree = size - 1u;
          return degree >= 2u ? SeparationDegree::of_degree( degree ) : SeparationDegree::not_separating();
        }
        if ( !seen[z] )
        {
          seen[z] = 1u;
          next.push_back( z );
        }
      }
    }
    level = std::move( next );
  }
}

TruthTable dual( const TruthTable& f )
{
  const auto mask = static_cast<std::uint32_t>( f.num_bits() - 1u );
  return TruthTable::from_index_function( f.arity(), [&]( std::uint32_t idx ) { return !f.bit( ~idx & mask ); } );
}

std::vector<unsigned> essential_variables( const TruthTable& f )
{
  std::vector<unsigned> vars;
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    const auto flip = std::uint32_t{ 1 } << i;
    for ( std::uint32_t idx = 0; idx < f.num_bits(); ++idx )
    {
      if ( !( idx & flip ) && f.bit( idx ) != f.bit( idx | flip ) )
      {
        vars.push_back( i );
        break;
      }
    }
  }
  return vars;
}

ShapePredicates shape_predicates( const TruthTable& f )
{
  ShapePredicates s;
  const auto ones = f.count_ones();
  s.is_constant_0 = ones == 0u;
  s.is_constant_1 = ones == f.num_bits();
  const auto all = static_cast<std::uint32_t>( f.num_bits() - 1u );

  // a_0 v OR_{i in S} x_i with S read off the unit vectors.
  {
    const bool a0 = f.bit( 0 );
    std::uint32_t support = 0;
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      if ( f.bit( std::uint32_t{ 1 } << i ) )
      {
        support |= std::uint32_t{ 1 } << i;
      }
    }
    bool ok = true;
    for ( std::uint32_t idx = 0; idx < f.num_bits() && ok; ++idx )
    {
      ok = f.bit( idx ) == ( a0 || ( idx & support ) != 0u );
    }
    s.is_or_function = ok;
  }
  // a_0 and AND_{i in S} x_i with S read off the co-unit vectors.
  {
    const bool a0 = f.bit( all );
    std::uint32_t support = 0;
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      if ( !f.bit( all & ~( std::uint32_t{ 1 } << i ) ) )
      {
        support |= std::uint32_t{ 1 } << i;
      }
    }
    bool ok = true;
    for ( std::uint32_t idx = 0; idx < f.num_bits() && ok; ++idx )
    {
      ok = f.bit( idx ) == ( a0 && ( idx & support ) == support );
    }
    s.is_and_function = ok;
  }
  const auto ess = essential_variables( f );
  if ( ess.size() == 1u )
  {
    const auto flip = std::uint32_t{ 1 } << ess.front();
    const bool positive = !f.bit( 0 ) && f.bit( flip );
    s.essentially_unary_projection = positive;
    s.essentially_unary_negation = !positive;
  }
  return s;
}

namespace fn
{

TruthTable constant( bool c )
{
  return TruthTable::from_bits( 0, c ? 1u : 0u );
}

TruthTable projection( unsigned arity, unsigned index )
{
  if ( index >= arity )
  {
    throw ArityError( "projection index out of range" );
  }
  return TruthTable::from_index_function( arity, [&]( std::uint32_t i ) { return ( i >> index ) & 1u; } );
}

TruthTable negation()
{
  return TruthTable::from_bits( 1, 0b01 );
}

TruthTable conjunction( unsigned arity )
{
  const auto all = ( std::uint32_t{ 1 } << arity ) - 1u;
  return TruthTable::from_index_function( arity, [&]( std::uint32_t i ) { return i == all; } );
}

TruthTable disjunction( unsigned arity )
{
  return TruthTable::from_index_function( arity, []( std::uint32_t i ) { return i != 0u; } );
}

TruthTable parity( unsigned arity )
{
  return TruthTable::from_index_function( arity, []( std::uint32_t i ) { return std::popcount( i ) & 1; } );
}

TruthTable implication()
{
  // x -> y with x the first argument
  return TruthTable::from_bits( 2, 0b1101 );
}

TruthTable threshold( unsigned k )
{
  return TruthTable::from_index_function( k + 1u, [&]( std::uint32_t i ) {
    return static_cast<unsigned>( std::popcount( i ) ) >= k;
  } );
}

TruthTable from_tuple_function( unsigned arity, const std::function<bool( std::span<const std::uint8_t> )>& f )
{
  std::vector<std::uint8_t> args( arity );
  return TruthTable::from_index_function( arity, [&]( std::uint32_t idx ) {
    for ( unsigned j = 0; j < arity; ++j )
    {
      args[j] = ( idx >> j ) & 1u;
    }
    return f( args );
  } );
}

} // namespace fn

} // namespace postlab
