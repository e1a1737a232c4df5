#include "postlab/circuit.hpp"

#include "postlab/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>

namespace postlab
{

Base::Base( std::vector<BaseFunction> functions )
{
  for ( auto& f : functions )
  {
    add( std::move( f.name ), std::move( f.table ) );
  }
}

std::size_t Base::add( std::string name, TruthTable table )
{
  if ( find( name ) )
  {
    throw InvalidArgument( "duplicate base function name '" + name + "'" );
  }
  functions_.push_back( { std::move( name ), std::move( table ) } );
  return functions_.size() - 1u;
}

std::size_t Base::ensure( const TruthTable& table, std::string_view preferred_name )
{
  if ( const auto existing = find_table( table ) )
  {
    return *existing;
  }
  return add( unique_name( preferred_name ), table );
}

std::optional<std::size_t> Base::find( std::string_view name ) const
{
  for ( std::size_t i = 0; i < functions_.size(); ++i )
  {
    if ( functions_[i].name == name )
    {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> Base::find_table( const TruthTable& table ) const
{
  for ( std::size_t i = 0; i < functions_.size(); ++i )
  {
    if ( functions_[i].table == table )
    {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<TruthTable> Base::tables() const
{
  std::vector<TruthTable> out;
  out.reserve( functions_.size() );
  for ( const auto& f : functions_ )
  {
    out.push_back( f.table );
  }
  return out;
}

std::string Base::unique_name( std::string_view stem ) const
{
  std::string name( stem );
  for ( unsigned suffix = 2; find( name ); ++suffix )
  {
    name = std::string( stem ) + "_" + std::to_string( suffix );
  }
  return name;
}

Assignment::Assignment( std::shared_ptr<const std::vector<std::string>> variables, std::vector<std::uint8_t> values )
    : variables_( std::move( variables ) ), values_( std::move( values ) )
{
  if ( variables_->size() != values_.size() )
  {
    throw ArityError( "assignment has " + std::to_string( values_.size() ) + " values for " +
                      std::to_string( variables_->size() ) + " variables" );
  }
  for ( auto& v : values_ )
  {
    v = v != 0u;
  }
}

bool Assignment::value_of( std::string_view variable ) const
{
  const auto it = std::find( variables_->begin(), variables_->end(), variable );
  if ( it == variables_->end() )
  {
    throw InvalidArgument( "assignment has no variable '" + std::string( variable ) + "'" );
  }
  return values_[static_cast<std::size_t>( it - variables_->begin() )] != 0u;
}

Assignment Assignment::complement() const
{
  auto values = values_;
  for ( auto& v : values )
  {
    v = !v;
  }
  return Assignment( variables_, std::move( values ) );
}

std::size_t Assignment::count_value( bool a ) const noexcept
{
  return static_cast<std::size_t>( std::count( values_.begin(), values_.end(), static_cast<std::uint8_t>( a ) ) );
}

std::string Assignment::to_bits() const
{
  std::string s;
  s.reserve( values_.size() );
  for ( const auto v : values_ )
  {
    s.push_back( v ? '1' : '0' );
  }
  return s;
}

std::uint64_t Assignment::lex_index() const noexcept
{
  std::uint64_t index = 0;
  for ( const auto v : values_ )
  {
    index = ( index << 1 ) | v;
  }
  return index;
}

bool Assignment::leq( const Assignment& other ) const
{
  if ( other.size() != size() )
  {
    throw ArityError( "comparing assignments of different length" );
  }
  for ( std::size_t i = 0; i < size(); ++i )
  {
    if ( values_[i] > other.values_[i] )
    {
      return false;
    }
  }
  return true;
}

std::size_t count_value( const Assignment& assignment, bool a )
{
  return assignment.count_value( a );
}

Circuit::Circuit( Base base, std::vector<std::string> variables ) : base_( std::move( base ) )
{
  for ( auto& v : variables )
  {
    add_variable( std::move( v ) );
  }
}

std::size_t Circuit::add_variable( std::string name )
{
  if ( variable_index( name ) )
  {
    throw InvalidArgument( "duplicate variable '" + name + "'" );
  }
  // Copy on write: assignments handed out earlier keep the old list.
  auto vars = std::make_shared<std::vector<std::string>>( *variables_ );
  vars->push_back( std::move( name ) );
  variables_ = std::move( vars );
  gates_.push_back( Gate{ Gate::Kind::input, variables_->size() - 1u, 0u, {} } );
  input_gates_.push_back( gates_.size() - 1u );
  return gates_.size() - 1u;
}

std::size_t Circuit::apply( std::size_t function, std::vector<std::size_t> children )
{
  if ( function >= base_.size() )
  {
    throw InvalidArgument( "base function index " + std::to_string( function ) + " out of range" );
  }
  const auto arity = base_[function].table.arity();
  if ( children.size() != arity )
  {
    throw ArityError( "function " + base_[function].name + " has arity " + std::to_string( arity ) + " but got " +
                      std::to_string( children.size() ) + " arguments" );
  }
  for ( const auto c : children )
  {
    if ( c >= gates_.size() )
    {
      throw InvalidArgument( "child gate " + std::to_string( c ) + " does not exist yet" );
    }
  }
  gates_.push_back( Gate{ Gate::Kind::apply, 0u, function, std::move( children ) } );
  return gates_.size() - 1u;
}

std::size_t Circuit::apply( std::string_view function_name, std::vector<std::size_t> children )
{
  const auto f = base_.find( function_name );
  if ( !f )
  {
    throw InvalidArgument( "unknown base function '" + std::string( function_name ) + "'" );
  }
  return apply( *f, std::move( children ) );
}

std::size_t Circuit::ensure_function( const TruthTable& table, std::string_view preferred_name )
{
  return base_.ensure( table, preferred_name );
}

std::size_t Circuit::constant_gate( bool value )
{
  const auto f = ensure_function( fn::constant( value ), value ? "CONST1" : "CONST0" );
  return apply( f, {} );
}

void Circuit::set_output( std::size_t gate )
{
  if ( gate >= gates_.size() )
  {
    throw InvalidArgument( "output gate " + std::to_string( gate ) + " does not exist" );
  }
  output_ = gate;
}

std::size_t Circuit::output() const
{
  if ( !output_ )
  {
    throw InvalidArgument( "circuit has no output gate" );
  }
  return *output_;
}

std::optional<std::size_t> Circuit::variable_index( std::string_view name ) const
{
  const auto it = std::find( variables_->begin(), variables_->end(), name );
  if ( it == variables_->end() )
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>( it - variables_->begin() );
}

bool Circuit::evaluate( const Assignment& assignment ) const
{
  if ( assignment.variables() != *variables_ )
  {
    throw InvalidArgument( "assignment is not over the circuit's variables" );
  }
  return evaluate( assignment.values() );
}

bool Circuit::evaluate( std::span<const std::uint8_t> bits ) const
{
  if ( bits.size() != variables_->size() )
  {
    throw ArityError( "expected " + std::to_string( variables_->size() ) + " variable values, got " +
                      std::to_string( bits.size() ) );
  }
  const auto out = output();
  std::vector<std::uint8_t> value( out + 1u );
  for ( std::size_t g = 0; g <= out; ++g )
  {
    const auto& gate = gates_[g];
    if ( gate.kind == Gate::Kind::input )
    {
      value[g] = bits[gate.variable] != 0u;
      continue;
    }
    std::uint32_t index = 0;
    for ( std::size_t j = 0; j < gate.children.size(); ++j )
    {
      index |= static_cast<std::uint32_t>( value[gate.children[j]] ) << j;
    }
    value[g] = base_[gate.function].table.bit( index );
  }
  return value[out] != 0u;
}

Circuit Circuit::canonical() const
{
  Circuit out( base_, *variables_ );
  std::vector<std::size_t> map( gates_.size() );
  for ( std::size_t g = 0; g < gates_.size(); ++g )
  {
    const auto& gate = gates_[g];
    if ( gate.kind == Gate::Kind::input )
    {
      map[g] = gate.variable;
      continue;
    }
    std::vector<std::size_t> children;
    children.reserve( gate.children.size() );
    for ( const auto c : gate.children )
    {
      children.push_back( map[c] );
    }
    map[g] = out.apply( gate.function, std::move( children ) );
  }
  if ( output_ )
  {
    out.set_output( map[*output_] );
  }
  return out;
}

Assignment Circuit::make_assignment( std::vector<std::uint8_t> values ) const
{
  return Assignment( variables_, std::move( values ) );
}

Assignment Circuit::assignment_at( std::uint64_t index ) const
{
  const auto n = variables_->size();
  std::vector<std::uint8_t> values( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    values[i] = ( index >> ( n - 1u - i ) ) & 1u;
  }
  return make_assignment( std::move( values ) );
}

bool operator==( const Circuit& a, const Circuit& b )
{
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.base_ == cb.base_ && *ca.variables_ == *cb.variables_ && ca.gates_ == cb.gates_ && ca.output_ == cb.output_;
}

namespace
{

Circuit rebuild( const Circuit& source, const std::vector<std::string>& variables,
                 const std::function<std::size_t( Circuit&, std::size_t variable )>& input_source )
{
  const auto canon = source.canonical();
  Circuit out( canon.base(), variables );
  std::vector<std::size_t> map( canon.gates().size() );
  for ( std::size_t g = 0; g < canon.gates().size(); ++g )
  {
    const auto& gate = canon.gates()[g];
    if ( gate.kind == Gate::Kind::input )
    {
      map[g] = input_source( out, gate.variable );
      continue;
    }
    std::vector<std::size_t> children;
    for ( const auto c : gate.children )
    {
      children.push_back( map[c] );
    }
    map[g] = out.apply( gate.function, std::move( children ) );
  }
  out.set_output( map[canon.output()] );
  return out;
}

std::size_t require_variable( const Circuit& circuit, std::string_view variable )
{
  const auto index = circuit.variable_index( variable );
  if ( !index )
  {
    throw InvalidArgument( "circuit has no variable '" + std::string( variable ) + "'" );
  }
  return *index;
}

} // namespace

Circuit substitute( const Circuit& circuit, std::string_view variable, bool value )
{
  const auto x = require_variable( circuit, variable );
  auto variables = circuit.variables();
  variables.erase( variables.begin() + static_cast<std::ptrdiff_t>( x ) );
  std::optional<std::size_t> constant;
  return rebuild( circuit, variables, [&]( Circuit& out, std::size_t v ) {
    if ( v == x )
    {
      if ( !constant )
      {
        constant = out.constant_gate( value );
      }
      return *constant;
    }
    return out.input_gate( v < x ? v : v - 1u );
  } );
}

Circuit substitute_variable( const Circuit& circuit, std::string_view variable, std::string_view replacement )
{
  const auto x = require_variable( circuit, variable );
  if ( variable == replacement )
  {
    return circuit;
  }
  auto variables = circuit.variables();
  if ( const auto y = circuit.variable_index( replacement ) )
  {
    variables.erase( variables.begin() + static_cast<std::ptrdiff_t>( x ) );
    const auto target = *y < x ? *y : *y - 1u;
    return rebuild( circuit, variables, [&]( Circuit& out, std::size_t v ) {
      if ( v == x )
      {
        return out.input_gate( target );
      }
      return out.input_gate( v < x ? v : v - 1u );
    } );
  }
  variables[x] = std::string( replacement );
  return rebuild( circuit, variables, []( Circuit& out, std::size_t v ) { return out.input_gate( v ); } );
}

Circuit dual_circuit( const Circuit& circuit )
{
  std::vector<BaseFunction> functions;
  for ( const auto& f : circuit.base() )
  {
    functions.push_back( { f.name, dual( f.table ) } );
  }
  const Base base( std::move( functions ) );
  Circuit out( base );
  std::vector<std::size_t> map( circuit.gates().size() );
  const auto canon = circuit.canonical();
  for ( const auto& v : canon.variables() )
  {
    out.add_variable( v );
  }
  for ( std::size_t g = 0; g < canon.gates().size(); ++g )
  {
    const auto& gate = canon.gates()[g];
    map[g] = gate.kind == Gate::Kind::input ? gate.variable : [&] {
      std::vector<std::size_t> children;
      for ( const auto c : gate.children )
      {
        children.push_back( map[c] );
      }
      return out.apply( gate.function, std::move( children ) );
    }();
  }
  out.set_output( map[canon.output()] );
  return out;
}

Circuit with_variables( const Circuit& circuit, std::span<const std::string> variables )
{
  Circuit out = circuit;
  for ( const auto& v : variables )
  {
    if ( !out.variable_index( v ) )
    {
      out.add_variable( v );
    }
  }
  return out;
}

Circuit over_variables( const Circuit& c, std::span<const std::string> variables )
{
  Circuit out( c.base(), std::vector<std::string>( variables.begin(), variables.end() ) );
  std::vector<std::size_t> map( c.gates().size() );
  for ( std::size_t g = 0; g < c.gates().size(); ++g )
  {
    const auto& gate = c.gates()[g];
    if ( gate.kind == Gate::Kind::input )
    {
      const auto i = out.variable_index( c.variables()[gate.variable] );
      if ( !i )
      {
        throw InvalidArgument( "over_variables: missing variable " + c.variables()[gate.variable] );
      }
      map[g] = out.input_gate( *i );
      continue;
    }
    std::vector<std::size_t> children;
    children.reserve( gate.children.size() );
    for ( const auto ch : gate.children )
    {
      children.push_back( map[ch] );
    }
    map[g] = out.apply( gate.function, std::move( children ) );
  }
  out.set_output( map[c.output()] );
  return out;
}

unsigned brute_limit()
{
  constexpr unsigned fallback = 20;
  const char* env = std::getenv( "POSTLAB_BRUTE_LIMIT" );
  if ( env == nullptr )
  {
    return fallback;
  }
  unsigned value = 0;
  const std::string_view text( env );
  const auto [ptr, ec] = std::from_chars( text.data(), text.data() + text.size(), value );
  if ( ec != std::errc{} || ptr != text.data() + text.size() )
  {
    return fallback;
  }
  return std::min( value, 34u );
}

ModelSet::ModelSet( unsigned num_variables ) : n_( num_variables )
{
  words_.assign( num_variables <= 6u ? 1u : ( std::size_t{ 1 } << ( num_variables - 6u ) ), 0u );
}

std::uint64_t ModelSet::count() const noexcept
{
  std::uint64_t total = 0;
  for ( const auto w : words_ )
  {
    total += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return total;
}

std::optional<std::uint64_t> ModelSet::next( std::uint64_t from ) const noexcept
{
  if ( from >= universe() )
  {
    return std::nullopt;
  }
  auto word = from >> 6;
  auto bits = words_[word] & ( ~std::uint64_t{ 0 } << ( from & 63u ) );
  while ( true )
  {
    if ( bits != 0u )
    {
      const auto index = ( word << 6 ) + static_cast<std::uint64_t>( std::countr_zero( bits ) );
      return index < universe() ? std::optional<std::uint64_t>( index ) : std::nullopt;
    }
    if ( ++word >= words_.size() )
    {
      return std::nullopt;
    }
    bits = words_[word];
  }
}

namespace
{

constexpr std::uint64_t lane_patterns[6] = { 0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                             0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };

/// Evaluates 64 assignments at once; variable `i` reads bit `position[i]` of the assignment index.
class BlockEvaluator
{
public:
  BlockEvaluator( const Circuit& circuit, std::vector<unsigned> position )
      : circuit_( circuit.canonical() ), position_( std::move( position ) )
  {
    for ( const auto& f : circuit_.base() )
    {
      Terms t;
      const auto ones = f.table.count_ones();
      t.complement = ones * 2u > f.table.num_bits();
      for ( std::uint32_t i = 0; i < f.table.num_bits(); ++i )
      {
        if ( f.table.bit( i ) != t.complement )
        {
          t.minterms.push_back( i );
        }
      }
      terms_.push_back( std::move( t ) );
    }
    values_.resize( circuit_.gates().size() );
  }

  std::uint64_t block( std::uint64_t block_index )
  {
    const auto& gates = circuit_.gates();
    const auto out = circuit_.output();
    for ( std::size_t g = 0; g <= out; ++g )
    {
      const auto& gate = gates[g];
      if ( gate.kind == Gate::Kind::input )
      {
        const auto pos = position_[gate.variable];
        values_[g] = pos < 6u ? lane_patterns[pos] : ( ( ( block_index >> ( pos - 6u ) ) & 1u ) ? ~std::uint64_t{ 0 } : 0u );
        continue;
      }
      const auto& t = terms_[gate.function];
      std::uint64_t acc = 0;
      for ( const auto m : t.minterms )
      {
        std::uint64_t term = ~std::uint64_t{ 0 };
        for ( std::size_t j = 0; j < gate.children.size(); ++j )
        {
          const auto w = values_[gate.children[j]];
          term &= ( ( m >> j ) & 1u ) ? w : ~w;
        }
        acc |= term;
      }
      values_[g] = t.complement ? ~acc : acc;
    }
    return values_[out];
  }

private:
  struct Terms
  {
    bool complement = false;
    std::vector<std::uint32_t> minterms;
  };

  Circuit circuit_;
  std::vector<unsigned> position_;
  std::vector<Terms> terms_;
  std::vector<std::uint64_t> values_;
};

void check_limit( const Circuit& circuit )
{
  if ( circuit.num_variables() > brute_limit() )
  {
    throw LimitExceeded( "exhaustive scan over " + std::to_string( circuit.num_variables() ) +
                         " variables exceeds the limit of " + std::to_string( brute_limit() ) );
  }
}

} // namespace

ModelSet model_set( const Circuit& circuit )
{
  check_limit( circuit );
  const auto n = static_cast<unsigned>( circuit.num_variables() );
  std::vector<unsigned> position( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    position[i] = n - 1u - i;
  }
  BlockEvaluator eval( circuit, position );
  ModelSet models( n );
  const auto universe = std::uint64_t{ 1 } << n;
  const auto blocks = n <= 6u ? 1u : universe >> 6;
  const auto lane_mask = n >= 6u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << universe ) - 1u );
  for ( std::uint64_t b = 0; b < blocks; ++b )
  {
    const auto word = eval.block( b ) & lane_mask;
    for ( auto bits = word; bits != 0u; bits &= bits - 1u )
    {
      models.set( ( b << 6 ) + static_cast<std::uint64_t>( std::countr_zero( bits ) ) );
    }
  }
  return models;
}

std::optional<Assignment> sat_bruteforce( const Circuit& circuit )
{
  const auto models = model_set( circuit );
  if ( const auto first = models.next( 0 ) )
  {
    return circuit.assignment_at( *first );
  }
  return std::nullopt;
}

std::uint64_t count_sat( const Circuit& circuit )
{
  return model_set( circuit ).count();
}

std::vector<Assignment> all_sat( const Circuit& circuit )
{
  const auto models = model_set( circuit );
  std::vector<Assignment> out;
  for ( auto i = models.next( 0 ); i; i = models.next( *i + 1u ) )
  {
    out.push_back( circuit.assignment_at( *i ) );
  }
  return out;
}

TruthTable circuit_table( const Circuit& circuit )
{
  const auto n = static_cast<unsigned>( circuit.num_variables() );
  if ( n > TruthTable::max_arity )
  {
    throw ArityError( "circuit has more variables than a truth table can hold" );
  }
  std::vector<unsigned> position( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    position[i] = i;
  }
  BlockEvaluator eval( circuit, position );
  TruthTable t( n );
  const auto blocks = n <= 6u ? 1u : ( std::uint64_t{ 1 } << n ) >> 6;
  for ( std::uint64_t b = 0; b < blocks; ++b )
  {
    const auto word = eval.block( b );
    const auto lanes = std::min<std::uint64_t>( 64u, t.num_bits() );
    for ( std::uint64_t lane = 0; lane < lanes; ++lane )
    {
      t.set_bit( static_cast<std::uint32_t>( ( b << 6 ) + lane ), ( word >> lane ) & 1u );
    }
  }
  return t;
}

} // namespace postlab
