#include "postlab/synthesis.hpp"

#include "postlab/closure.hpp"
#include "postlab/clones.hpp"
#include "postlab/error.hpp"

#include <functional>
#include <unordered_map>

namespace postlab
{

namespace
{

Circuit synthesize_nonconstant( const TruthTable& target, const Base& base )
{
  const auto arity = target.arity();
  const auto tables = base.tables();
  const auto bits = detail::pack_table( target );
  const auto closure = detail::explore_closure( tables, arity, bits );
  if ( !closure.target_found )
  {
    throw NotInClone( "function " + target.to_literal() + " is not generated by the base" );
  }

  std::vector<std::string> names;
  for ( unsigned i = 0; i < arity; ++i )
  {
    names.push_back( "x" + std::to_string( i + 1u ) );
  }
  Circuit circuit( base, names );
  std::unordered_map<std::uint32_t, std::size_t> gate_of;
  std::function<std::size_t( std::uint32_t )> build = [&]( std::uint32_t table ) -> std::size_t {
    if ( const auto it = gate_of.find( table ); it != gate_of.end() )
    {
      return it->second;
    }
    const auto& step = closure.parents.at( table );
    std::size_t gate;
    if ( step.function == detail::ClosureStep::projection )
    {
      gate = circuit.input_gate( step.children.front() );
    }
    else
    {
      std::vector<std::size_t> children;
      for ( const auto child : step.children )
      {
        children.push_back( build( child ) );
      }
      gate = circuit.apply( step.function, std::move( children ) );
    }
    gate_of.emplace( table, gate );
    return gate;
  };
  circuit.set_output( build( bits ) );
  return circuit;
}

} // namespace

Circuit synthesize( const TruthTable& target, const Base& base )
{
  if ( target.arity() > synthesis_arity_cap )
  {
    throw ArityError( "synthesis is limited to arity " + std::to_string( synthesis_arity_cap ) );
  }
  const auto tables = base.tables();
  if ( !is_member( target, clone_of( tables ) ) )
  {
    throw NotInClone( "function " + target.to_literal() + " is not in the clone " + clone_of( tables ).to_string() );
  }
  if ( target.arity() == 0u )
  {
    if ( const auto f = base.find_table( target ) )
    {
      Circuit circuit( base );
      circuit.set_output( circuit.apply( *f, {} ) );
      return circuit;
    }
    return synthesize_nonconstant( TruthTable::from_bits( 1, target.bit( 0 ) ? 0b11u : 0b00u ), base );
  }
  return synthesize_nonconstant( target, base );
}

CircuitBuilder::CircuitBuilder( Base base, bool allow_extension )
    : circuit_( base ), allow_extension_( allow_extension ), base_tables_( base.tables() )
{
}

std::size_t CircuitBuilder::add_variable( std::string name )
{
  return circuit_.add_variable( std::move( name ) );
}

std::size_t CircuitBuilder::variable( std::string_view name ) const
{
  const auto index = circuit_.variable_index( name );
  if ( !index )
  {
    throw InvalidArgument( "builder has no variable '" + std::string( name ) + "'" );
  }
  return circuit_.input_gate( *index );
}

std::size_t CircuitBuilder::realize( const TruthTable& f, std::span<const std::size_t> args )
{
  if ( args.size() != f.arity() )
  {
    throw ArityError( "realize: " + std::to_string( args.size() ) + " arguments for arity " +
                      std::to_string( f.arity() ) );
  }
  if ( f.arity() == 0u )
  {
    return constant( f.bit( 0 ) );
  }
  if ( const auto direct = circuit_.base().find_table( f ) )
  {
    return circuit_.apply( *direct, { args.begin(), args.end() } );
  }
  if ( f.arity() > synthesis_arity_cap )
  {
    if ( !allow_extension_ )
    {
      throw ArityError( "function of arity " + std::to_string( f.arity() ) + " exceeds the synthesis cap" );
    }
    if ( !is_member( f, clone_of( base_tables_ ) ) )
    {
      throw NotInClone( "function " + f.to_literal() + " is not in the clone of the base" );
    }
    const auto index = circuit_.ensure_function( f, "F" + std::to_string( f.arity() ) );
    return circuit_.apply( index, { args.begin(), args.end() } );
  }
  auto it = cache_.find( f );
  if ( it == cache_.end() )
  {
    it = cache_.emplace( f, synthesize( f, circuit_.base() ) ).first;
  }
  return embed( it->second, args );
}

void CircuitBuilder::bind_constant( bool value, std::size_t gate )
{
  constant_binding_[value ? 1 : 0] = gate;
}

std::size_t CircuitBuilder::constant( bool value )
{
  if ( const auto bound = constant_binding_[value ? 1 : 0] )
  {
    return *bound;
  }
  if ( const auto direct = circuit_.base().find_table( fn::constant( value ) ) )
  {
    return circuit_.apply( *direct, {} );
  }
  if ( circuit_.num_variables() == 0u )
  {
    throw NotInClone( "constant needs a variable to be built from this base" );
  }
  const std::size_t first = circuit_.input_gate( 0 );
  return realize( TruthTable::from_bits( 1, value ? 0b11u : 0b00u ), { first } );
}

std::size_t CircuitBuilder::embed( const Circuit& other, std::span<const std::size_t> bindings )
{
  if ( bindings.size() != other.num_variables() )
  {
    throw ArityError( "embed: " + std::to_string( bindings.size() ) + " bindings for " +
                      std::to_string( other.num_variables() ) + " variables" );
  }
  std::vector<std::size_t> map( other.gates().size() );
  const auto out = other.output();
  for ( std::size_t g = 0; g <= out; ++g )
  {
    const auto& gate = other.gates()[g];
    if ( gate.kind == Gate::Kind::input )
    {
      map[g] = bindings[gate.variable];
      continue;
    }
    std::vector<std::size_t> children;
    for ( const auto c : gate.children )
    {
      children.push_back( map[c] );
    }
    map[g] = realize( other.base()[gate.function].table, children );
  }
  return map[out];
}

Circuit CircuitBuilder::finish( std::size_t output ) const
{
  Circuit out = circuit_;
  out.set_output( output );
  return out;
}

Circuit convert( const Circuit& circuit, const Base& target )
{
  const auto source_clone = clone_of( circuit.base().tables() );
  const auto target_clone = clone_of( target.tables() );
  if ( !includes( target_clone, source_clone ) )
  {
    throw NotInClone( "clone " + source_clone.to_string() + " is not contained in " + target_clone.to_string() );
  }
  CircuitBuilder builder( target, false );
  std::vector<std::size_t> bindings;
  for ( const auto& v : circuit.variables() )
  {
    bindings.push_back( builder.add_variable( v ) );
  }
  return builder.finish( builder.embed( circuit, bindings ) );
}

} // namespace postlab
