#include "postlab/gadgets.hpp"

#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/dsl.hpp"
#include "postlab/error.hpp"
#include "postlab/synthesis.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace postlab
{

namespace
{

using Names = std::vector<std::string>;

bool has_name( const Names& names, std::string_view n )
{
  return std::find( names.begin(), names.end(), n ) != names.end();
}

std::string take_fresh( Names& taken, const std::string& stem )
{
  auto name = stem;
  for ( unsigned i = 1; has_name( taken, name ); ++i )
  {
    name = stem + std::to_string( i );
  }
  taken.push_back( name );
  return name;
}

Names union_names( const Circuit& a, const Circuit& b )
{
  auto out = a.variables();
  for ( const auto& v : b.variables() )
  {
    if ( !has_name( out, v ) )
    {
      out.push_back( v );
    }
  }
  return out;
}

/// Base without 0-ary functions of the given value (all constants if value is empty).
Base without_constants( const Base& base, std::optional<bool> value )
{
  std::vector<BaseFunction> kept;
  for ( const auto& f : base )
  {
    if ( f.table.arity() == 0u && ( !value || f.table.bit( 0 ) == *value ) )
    {
      continue;
    }
    kept.push_back( f );
  }
  return Base( std::move( kept ) );
}

Base merged( const Base& a, const Base& b )
{
  Base out = a;
  for ( const auto& f : b )
  {
    if ( !out.find_table( f.table ) )
    {
      out.add( out.find( f.name ) ? out.unique_name( f.name ) : f.name, f.table );
    }
  }
  return out;
}

std::size_t splice( CircuitBuilder& b, const Circuit& c, const std::map<std::string, std::string>& rename = {} )
{
  std::vector<std::size_t> bindings;
  for ( const auto& v : c.variables() )
  {
    const auto it = rename.find( v );
    bindings.push_back( b.variable( it == rename.end() ? v : it->second ) );
  }
  return b.embed( c, bindings );
}

std::size_t conjoin( CircuitBuilder& b, std::span<const std::size_t> gates )
{
  auto acc = gates.front();
  for ( std::size_t i = 1; i < gates.size(); ++i )
  {
    acc = b.realize( fn::conjunction(), { acc, gates[i] } );
  }
  return acc;
}

/// x ∧ (y ∨ ¬z)
TruthTable guard_table()
{
  return fn::from_tuple_function( 3, []( auto a ) { return a[0] && ( a[1] || !a[2] ); } );
}

CloneName clone_of_base( const Base& base )
{
  const auto tables = base.tables();
  return clone_of( tables );
}

unsigned pick_threshold( const Base& base, std::optional<unsigned> k )
{
  if ( k )
  {
    if ( *k < 2u )
    {
      throw InvalidArgument( "threshold gadget needs k >= 2" );
    }
    return *k;
  }
  const auto clone = clone_of_base( base );
  const auto least = threshold_in_clone( clone );
  if ( !least )
  {
    throw NotInClone( "no threshold function in " + clone.to_string() );
  }
  return *least;
}

void require_monotone( const Circuit& c )
{
  const auto clone = clone_of_base( c.base() );
  if ( !includes( CloneName{ CloneFamily::M, 0 }, clone ) )
  {
    throw WrongClone( "gadget expects a monotone base, got " + clone.to_string() );
  }
}

std::string source_of( const Circuit& c )
{
  return print_circuit( c );
}

std::string source_of( const Circuit& c1, const Circuit& c2 )
{
  return "# first\n" + print_circuit( c1 ) + "# second\n" + print_circuit( c2 );
}

// Brute-force facts for the claim checks.

bool brute_sat( const Circuit& c )
{
  return model_set( c ).count() > 0u;
}

bool brute_sat_star( const Circuit& c )
{
  const auto ms = model_set( c );
  const auto count = ms.count();
  return count > 1u || ( count == 1u && !ms.contains( ms.universe() - 1u ) );
}

std::vector<bool> frozen_flags( const Circuit& c )
{
  const auto ms = model_set( c );
  const auto n = static_cast<unsigned>( c.num_variables() );
  const auto first = ms.next( 0 );
  std::vector<bool> flags( n, first.has_value() );
  if ( !first )
  {
    return flags;
  }
  for ( auto m = first; m; m = ms.next( *m + 1u ) )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      const auto shift = n - 1u - i;
      if ( ( ( *m >> shift ) & 1u ) != ( ( *first >> shift ) & 1u ) )
      {
        flags[i] = false;
      }
    }
    if ( *m + 1u >= ms.universe() )
    {
      break;
    }
  }
  return flags;
}

bool brute_efv( const Circuit& c )
{
  const auto flags = frozen_flags( c );
  return std::find( flags.begin(), flags.end(), true ) != flags.end();
}

bool brute_frozen( const Circuit& c, std::string_view name )
{
  const auto i = c.variable_index( name );
  return i && frozen_flags( c )[*i];
}

bool brute_equivalent( const Circuit& a, const Circuit& b )
{
  const auto vars = union_names( a, b );
  return model_set( over_variables( a, vars ) ) == model_set( over_variables( b, vars ) );
}

/// Every model has `name` at 1 (value true), or every non-model has it at 0 (value false).
bool pinned( const Circuit& c, std::string_view name, bool value )
{
  const auto ms = model_set( c );
  const auto n = static_cast<unsigned>( c.num_variables() );
  const auto shift = n - 1u - static_cast<unsigned>( *c.variable_index( name ) );
  for ( std::uint64_t i = 0; i < ms.universe(); ++i )
  {
    const bool bit = ( i >> shift ) & 1u;
    if ( value && ms.contains( i ) && !bit )
    {
      return false;
    }
    if ( !value && !ms.contains( i ) && bit )
    {
      return false;
    }
  }
  return true;
}

/// Some variable x with C ⊨ x, or x ⊨ C (checked on the models of C over its own variables).
bool implies_or_implied_by_variable( const Circuit& c )
{
  const auto ms = model_set( c );
  const auto n = static_cast<unsigned>( c.num_variables() );
  for ( unsigned i = 0; i < n; ++i )
  {
    const auto shift = n - 1u - i;
    bool c_implies = true;
    bool implied = true;
    for ( std::uint64_t a = 0; a < ms.universe(); ++a )
    {
      const bool bit = ( a >> shift ) & 1u;
      if ( ms.contains( a ) && !bit )
      {
        c_implies = false;
      }
      if ( !ms.contains( a ) && bit )
      {
        implied = false;
      }
    }
    if ( c_implies || implied )
    {
      return true;
    }
  }
  return false;
}

std::vector<std::pair<std::string, std::string>> dominant_pairs( const Circuit& c )
{
  std::vector<std::pair<std::string, std::string>> out;
  const auto& vs = c.variables();
  for ( std::size_t i = 0; i < vs.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < vs.size(); ++j )
    {
      if ( is_dominant_pair( c, vs[i], vs[j] ) )
      {
        out.emplace_back( vs[i], vs[j] );
      }
    }
  }
  return out;
}

/*! Monotone circuit rebuilt over {t_2} with ∧ as t_2(a, b, u), ∨ as
  t_2(a, b, v) and constants read as u (for 0) and v (for 1). */
std::size_t majority_copy( CircuitBuilder& b, const Circuit& c, std::size_t u, std::size_t v )
{
  static const Base with_constants( { { "t2", fn::threshold( 2 ) }, { "zero", fn::constant( false ) }, { "one", fn::constant( true ) } } );
  const auto t2 = fn::threshold( 2 );
  const auto conj = fn::conjunction();
  const auto disj = fn::disjunction();
  std::vector<std::size_t> map( c.gates().size() );
  for ( std::size_t g = 0; g < c.gates().size(); ++g )
  {
    const auto& gate = c.gates()[g];
    if ( gate.kind == Gate::Kind::input )
    {
      map[g] = b.variable( c.variables()[gate.variable] );
      continue;
    }
    const auto& f = c.base()[gate.function].table;
    std::vector<std::size_t> args;
    for ( const auto ch : gate.children )
    {
      args.push_back( map[ch] );
    }
    if ( f.arity() == 0u )
    {
      map[g] = f.bit( 0 ) ? v : u;
    }
    else if ( f == conj )
    {
      map[g] = b.realize( t2, { args[0], args[1], u } );
    }
    else if ( f == disj )
    {
      map[g] = b.realize( t2, { args[0], args[1], v } );
    }
    else
    {
      map[g] = b.embed( synthesize( f, with_constants ), args );
    }
  }
  return map[c.output()];
}

struct MajorityPair
{
  Circuit first;
  Circuit second;
  std::string u;
  std::string v;
};

MajorityPair majority_pair( const Circuit& c1, const Circuit& c2, bool iso_shape )
{
  require_monotone( c1 );
  require_monotone( c2 );
  auto vars = union_names( c1, c2 );
  const auto u = take_fresh( vars, "u" );
  const auto v = take_fresh( vars, "v" );
  const auto build = [&]( const Circuit& c ) {
    CircuitBuilder b( Base( { { "t2", fn::threshold( 2 ) } } ) );
    for ( const auto& name : vars )
    {
      b.add_variable( name );
    }
    const auto gu = b.variable( u );
    const auto gv = b.variable( v );
    b.bind_constant( false, gu );
    b.bind_constant( true, gv );
    const auto body = majority_copy( b, c, gu, gv );
    const auto out = iso_shape ? b.realize( fn::threshold( 2 ), { gu, body, gv } ) : b.realize( fn::threshold( 2 ), { gv, body, gu } );
    return b.finish( out );
  };
  return { build( c1 ), build( c2 ), u, v };
}

} // namespace

const Circuit& GadgetInstance::circuit( std::string_view name ) const
{
  for ( const auto& nc : circuits )
  {
    if ( nc.name == name )
    {
      return nc.circuit;
    }
  }
  throw InvalidArgument( "gadget " + gadget + " has no output named '" + std::string( name ) + "'" );
}

ThreeDnf ThreeDnf::parse( std::string_view text )
{
  ThreeDnf out;
  std::size_t pos = 0;
  const auto fail = [&]( const std::string& msg ) { throw ParseError( ParseErrorKind::syntax, 1, pos + 1, msg ); };
  const auto skip = [&] {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  };
  const auto literal = [&]() -> Literal {
    skip();
    bool positive = true;
    while ( pos < text.size() && ( text[pos] == '!' || text[pos] == '~' ) )
    {
      positive = !positive;
      ++pos;
      skip();
    }
    const auto start = pos;
    if ( pos >= text.size() || !( std::isalpha( static_cast<unsigned char>( text[pos] ) ) || text[pos] == '_' ) )
    {
      fail( "expected a variable" );
    }
    while ( pos < text.size() && ( std::isalnum( static_cast<unsigned char>( text[pos] ) ) || text[pos] == '_' ) )
    {
      ++pos;
    }
    const std::string name( text.substr( start, pos - start ) );
    auto it = std::find( out.variables.begin(), out.variables.end(), name );
    if ( it == out.variables.end() )
    {
      out.variables.push_back( name );
      it = out.variables.end() - 1;
    }
    return { static_cast<std::size_t>( it - out.variables.begin() ), positive };
  };

  while ( true )
  {
    std::vector<Literal> term{ literal() };
    skip();
    while ( pos < text.size() && text[pos] == '&' )
    {
      ++pos;
      term.push_back( literal() );
      skip();
    }
    if ( term.size() > 3u )
    {
      fail( "term with more than three literals" );
    }
    out.terms.push_back( std::move( term ) );
    if ( pos == text.size() )
    {
      break;
    }
    if ( text[pos] != '|' )
    {
      fail( std::string( "unexpected '" ) + text[pos] + "'" );
    }
    ++pos;
  }
  return out;
}

std::string ThreeDnf::to_string() const
{
  std::string s;
  for ( std::size_t t = 0; t < terms.size(); ++t )
  {
    if ( t > 0u )
    {
      s += " | ";
    }
    for ( std::size_t l = 0; l < terms[t].size(); ++l )
    {
      if ( l > 0u )
      {
        s += " & ";
      }
      if ( !terms[t][l].positive )
      {
        s += '!';
      }
      s += variables[terms[t][l].variable];
    }
  }
  return s;
}

bool ThreeDnf::evaluate( std::span<const std::uint8_t> bits ) const
{
  if ( bits.size() != variables.size() )
  {
    throw ArityError( "DNF over " + std::to_string( variables.size() ) + " variables evaluated at " + std::to_string( bits.size() ) + " bits" );
  }
  return std::any_of( terms.begin(), terms.end(), [&]( const auto& term ) {
    return std::all_of( term.begin(), term.end(), [&]( const Literal& l ) { return ( bits[l.variable] != 0u ) == l.positive; } );
  } );
}

bool ThreeDnf::is_tautology() const
{
  const auto n = variables.size();
  if ( n > brute_limit() )
  {
    throw LimitExceeded( "tautology check over " + std::to_string( n ) + " variables" );
  }
  std::vector<std::uint8_t> bits( n );
  for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << n ); ++i )
  {
    for ( std::size_t j = 0; j < n; ++j )
    {
      bits[j] = ( i >> j ) & 1u;
    }
    if ( !evaluate( bits ) )
    {
      return false;
    }
  }
  return true;
}

GadgetInstance taut_to_eq( const ThreeDnf& h )
{
  if ( h.terms.empty() )
  {
    throw InvalidArgument( "empty DNF" );
  }
  Base base( { { "and", fn::conjunction() }, { "or", fn::disjunction() } } );
  const auto and_f = *base.find( "and" );
  const auto or_f = *base.find( "or" );
  Names vars = h.variables;
  Names negs;
  for ( const auto& x : h.variables )
  {
    negs.push_back( take_fresh( vars, "n" + x ) );
  }

  const auto build = [&]( bool with_formula ) {
    Circuit c( base );
    std::vector<std::size_t> pos, neg;
    for ( const auto& x : h.variables )
    {
      pos.push_back( c.add_variable( x ) );
    }
    for ( const auto& y : negs )
    {
      neg.push_back( c.add_variable( y ) );
    }
    std::size_t acc = c.apply( or_f, { pos[0], neg[0] } );
    for ( std::size_t i = 1; i < pos.size(); ++i )
    {
      acc = c.apply( and_f, { acc, c.apply( or_f, { pos[i], neg[i] } ) } );
    }
    if ( with_formula )
    {
      std::size_t dnf = 0;
      for ( std::size_t t = 0; t < h.terms.size(); ++t )
      {
        const auto& term = h.terms[t];
        auto lit = [&]( const ThreeDnf::Literal& l ) { return l.positive ? pos[l.variable] : neg[l.variable]; };
        std::size_t g = lit( term[0] );
        for ( std::size_t l = 1; l < term.size(); ++l )
        {
          g = c.apply( and_f, { g, lit( term[l] ) } );
        }
        dnf = t == 0u ? g : c.apply( or_f, { dnf, g } );
      }
      acc = c.apply( and_f, { acc, dnf } );
    }
    c.set_output( acc );
    return c;
  };

  GadgetInstance out;
  out.gadget = "taut-to-eq";
  out.source = h.to_string();
  out.claim = "H is a tautology iff C1 == C2 iff C1 ~ C2; Sat(C2) is contained in Sat(C1), strictly when H is not a tautology";
  out.circuits = { { "C1", build( false ) }, { "C2", build( true ) } };
  out.check = [h, c1 = out.circuits[0].circuit, c2 = out.circuits[1].circuit] {
    const bool taut = h.is_tautology();
    const auto m1 = model_set( c1 );
    const auto m2 = model_set( c2 );
    bool subset = true;
    for ( std::size_t w = 0; w < m1.words().size(); ++w )
    {
      subset = subset && ( m2.words()[w] & ~m1.words()[w] ) == 0u;
    }
    const bool eq = m1 == m2;
    const bool iso = eq || ( m1.count() == m2.count() && isomorphic_search( c1, c2 ) );
    return subset && taut == eq && taut == iso && ( taut || m2.count() < m1.count() );
  };
  return out;
}

GadgetInstance eliminate_constant( const Circuit& c1, const Circuit& c2, bool value )
{
  const auto base = merged( without_constants( c1.base(), value ), without_constants( c2.base(), value ) );
  auto all = union_names( c1, c2 );
  const auto v = take_fresh( all, "v" );
  const auto build = [&]( const Circuit& c ) {
    CircuitBuilder b( base );
    for ( const auto& name : c.variables() )
    {
      b.add_variable( name );
    }
    const auto gv = b.add_variable( v );
    b.bind_constant( value, gv );
    const auto body = splice( b, c );
    const auto out = b.realize( value ? fn::conjunction() : fn::disjunction(), { body, gv } );
    return b.finish( out );
  };

  GadgetInstance out;
  out.gadget = "eliminate-constant";
  out.source = source_of( c1, c2 );
  out.claim = std::string( "C1 == C2 iff C1' == C2', C1 ~ C2 iff C1' ~ C2'; " ) +
              ( value ? "every model of C_i' sets " + v + " = 1" : "every non-model of C_i' sets " + v + " = 0" );
  out.circuits = { { "C1", build( c1 ) }, { "C2", build( c2 ) } };
  out.check = [c1, c2, value, v, d1 = out.circuits[0].circuit, d2 = out.circuits[1].circuit] {
    return brute_equivalent( c1, c2 ) == brute_equivalent( d1, d2 ) && isomorphic_search( c1, c2 ) == isomorphic_search( d1, d2 ) &&
           pinned( d1, v, value ) && pinned( d2, v, value );
  };
  return out;
}

GadgetInstance selfdual_eq_gadget( const Circuit& c1, const Circuit& c2 )
{
  auto pair = majority_pair( c1, c2, false );
  GadgetInstance out;
  out.gadget = "selfdual-eq";
  out.source = source_of( c1, c2 );
  out.claim = "C1 == C2 iff C1' == C2'; both outputs read " + pair.u + " when " + pair.u + " = " + pair.v;
  out.circuits = { { "C1", pair.first }, { "C2", pair.second } };
  out.check = [c1, c2, p = pair] {
    for ( const auto* d : { &p.first, &p.second } )
    {
      const auto ms = model_set( *d );
      const auto n = static_cast<unsigned>( d->num_variables() );
      const auto us = n - 1u - static_cast<unsigned>( *d->variable_index( p.u ) );
      const auto vs = n - 1u - static_cast<unsigned>( *d->variable_index( p.v ) );
      for ( std::uint64_t i = 0; i < ms.universe(); ++i )
      {
        const bool a = ( i >> us ) & 1u;
        if ( a == static_cast<bool>( ( i >> vs ) & 1u ) && ms.contains( i ) != a )
        {
          return false;
        }
      }
    }
    return brute_equivalent( c1, c2 ) == brute_equivalent( p.first, p.second );
  };
  return out;
}

GadgetInstance selfdual_iso_gadget( const Circuit& c1, const Circuit& c2 )
{
  auto pair = majority_pair( c1, c2, true );
  GadgetInstance out;
  out.gadget = "selfdual-iso";
  out.source = source_of( c1, c2 );
  out.claim = "#{models of C_i' with " + pair.u + " = 1, " + pair.v + " = 0} = 2^n - #Sat(C_i); if no C_i implies or is implied by a variable and " +
              "#Sat(C1) + #Sat(C2) < 2^n, then C1 ~ C2 iff C1' ~ C2' and {" + pair.u + ", " + pair.v + "} is the only dominant pair";
  out.circuits = { { "C1", pair.first }, { "C2", pair.second } };
  out.check = [c1, c2, p = pair] {
    const auto vars = union_names( c1, c2 );
    const auto a1 = over_variables( c1, vars );
    const auto a2 = over_variables( c2, vars );
    const auto universe = std::uint64_t{ 1 } << vars.size();
    for ( const auto& [a, d] : { std::pair{ &a1, &p.first }, std::pair{ &a2, &p.second } } )
    {
      const auto restricted = substitute( substitute( *d, p.u, true ), p.v, false );
      if ( count_sat( restricted ) != universe - count_sat( *a ) )
      {
        return false;
      }
    }
    const bool preconditions = !implies_or_implied_by_variable( a1 ) && !implies_or_implied_by_variable( a2 ) &&
                               count_sat( a1 ) + count_sat( a2 ) < universe;
    if ( !preconditions )
    {
      return true;
    }
    const std::vector<std::pair<std::string, std::string>> only{ { p.u, p.v } };
    return isomorphic_search( a1, a2 ) == isomorphic_search( p.first, p.second ) && dominant_pairs( p.first ) == only &&
           dominant_pairs( p.second ) == only;
  };
  return out;
}

GadgetInstance iso_restricted( const Circuit& c1, const Circuit& c2 )
{
  require_monotone( c1 );
  require_monotone( c2 );
  auto base = merged( c1.base(), c2.base() );
  base.ensure( fn::conjunction(), "and" );
  base.ensure( fn::disjunction(), "or" );
  auto vars = union_names( c1, c2 );
  const auto y = take_fresh( vars, "y" );
  const auto z = take_fresh( vars, "z" );
  const auto inner_vars = vars;
  const auto z1 = take_fresh( vars, "z1" );
  const auto z2 = take_fresh( vars, "z2" );

  const auto build = [&]( const Circuit& c, bool outer ) {
    CircuitBuilder b( base );
    for ( const auto& name : outer ? vars : inner_vars )
    {
      b.add_variable( name );
    }
    const auto body = splice( b, c );
    const std::size_t parts[] = { body, b.variable( y ), b.variable( z ) };
    auto g = conjoin( b, parts );
    if ( outer )
    {
      g = b.realize( fn::threshold( 2 ), { b.variable( z1 ), b.variable( z2 ), g } );
    }
    return b.finish( g );
  };

  GadgetInstance out;
  out.gadget = "iso-restricted";
  out.source = source_of( c1, c2 );
  out.claim = "C1 ~ C2 iff P1 ~ P2 iff C1' ~ C2' where P_i = C_i & " + y + " & " + z + "; #Sat(C_i') = 2 #Sat(P_i) + 2^m; {" + z1 + ", " + z2 +
              "} is dominant; #Sat(C1') + #Sat(C2') < 2^(m+2); for non-constant P_i no variable implies or is implied by C_i'";
  out.circuits = { { "P1", build( c1, false ) }, { "P2", build( c2, false ) }, { "C1", build( c1, true ) }, { "C2", build( c2, true ) } };
  out.check = [c1, c2, z1, z2, p1 = out.circuits[0].circuit, p2 = out.circuits[1].circuit, d1 = out.circuits[2].circuit,
               d2 = out.circuits[3].circuit] {
    const auto m = p1.num_variables();
    const auto pad = std::uint64_t{ 1 } << m;
    const auto vars = union_names( c1, c2 );
    const auto a1 = over_variables( c1, vars );
    const auto a2 = over_variables( c2, vars );
    const bool iso0 = isomorphic_search( a1, a2 );
    if ( iso0 != isomorphic_search( p1, p2 ) || iso0 != isomorphic_search( d1, d2 ) )
    {
      return false;
    }
    for ( const auto& [p, d] : { std::pair{ &p1, &d1 }, std::pair{ &p2, &d2 } } )
    {
      const auto cp = count_sat( *p );
      if ( count_sat( *d ) != 2u * cp + pad || !is_dominant_pair( *d, z1, z2 ) )
      {
        return false;
      }
      if ( cp != 0u && cp != pad && implies_or_implied_by_variable( *d ) )
      {
        return false;
      }
    }
    return count_sat( d1 ) + count_sat( d2 ) < ( pad << 2u );
  };
  return out;
}

GadgetInstance satstar_chain( const Circuit& c )
{
  auto base = without_constants( c.base(), false );
  Names vars = c.variables();
  const auto x = take_fresh( vars, "x" );
  CircuitBuilder b( base );
  for ( const auto& name : vars )
  {
    b.add_variable( name );
  }
  const auto gx = b.variable( x );
  b.bind_constant( false, gx );
  const auto body = splice( b, c );
  auto chain = body;
  for ( const auto& name : c.variables() )
  {
    chain = b.realize( guard_table(), { chain, b.variable( name ), gx } );
  }

  GadgetInstance out;
  out.gadget = "satstar-chain";
  out.source = source_of( c );
  out.claim = "C satisfiable iff C_hat has a model other than all-ones; C_hat == C' & AND_i (x_i | !" + x + ")";
  out.circuits = { { "C_prime", b.finish( body ) }, { "C_hat", b.finish( chain ) } };
  out.check = [c, x, prime = out.circuits[0].circuit, hat = out.circuits[1].circuit] {
    if ( brute_sat( c ) != brute_sat_star( hat ) )
    {
      return false;
    }
    const auto n = hat.num_variables();
    const auto xi = *hat.variable_index( x );
    for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << n ); ++i )
    {
      const auto a = hat.assignment_at( i );
      bool expected = prime.evaluate( a );
      for ( std::size_t j = 0; j < n; ++j )
      {
        if ( j != xi )
        {
          expected = expected && ( a[j] || !a[xi] );
        }
      }
      if ( hat.evaluate( a ) != expected )
      {
        return false;
      }
    }
    return true;
  };
  return out;
}

GadgetInstance unsat_to_frozen( const Circuit& c )
{
  Names vars = c.variables();
  const auto x = take_fresh( vars, "x" );
  CircuitBuilder b( without_constants( c.base(), false ) );
  for ( const auto& name : vars )
  {
    b.add_variable( name );
  }
  const auto gx = b.variable( x );
  b.bind_constant( false, gx );
  const auto out_gate = b.realize( fn::disjunction(), { splice( b, c ), gx } );

  GadgetInstance out;
  out.gadget = "unsat-to-frozen";
  out.source = source_of( c );
  out.claim = x + " is frozen in C' | " + x + " iff C is unsatisfiable; no other variable is frozen";
  out.circuits = { { "C_or", b.finish( out_gate ) } };
  out.check = [c, x, d = out.circuits[0].circuit] {
    const auto flags = frozen_flags( d );
    const auto xi = *d.variable_index( x );
    for ( std::size_t i = 0; i < flags.size(); ++i )
    {
      if ( i != xi && flags[i] )
      {
        return false;
      }
    }
    return flags[xi] == !brute_sat( c );
  };
  return out;
}

GadgetInstance eq_to_frozen( const Circuit& c1, const Circuit& c2 )
{
  const auto base = merged( c1.base(), c2.base() );
  auto vars = union_names( c1, c2 );
  const auto a1 = over_variables( c1, vars );
  const auto a2 = over_variables( c2, vars );
  const std::vector<std::uint8_t> zeros( vars.size(), 0u ), ones( vars.size(), 1u );
  const bool differ = a1.evaluate( zeros ) != a2.evaluate( zeros ) || a1.evaluate( ones ) != a2.evaluate( ones );

  auto taken = vars;
  const auto x = take_fresh( taken, "x" );
  CircuitBuilder b( base );
  std::size_t g = 0;
  if ( differ )
  {
    const auto y = take_fresh( taken, "y" );
    const auto z = take_fresh( taken, "z" );
    const auto gx = b.add_variable( x );
    const auto gy = b.add_variable( y );
    const auto gz = b.add_variable( z );
    g = b.realize( fn::threshold( 2 ), { gx, gy, gz } );
  }
  else
  {
    for ( const auto& name : vars )
    {
      b.add_variable( name );
    }
    const auto gx = b.add_variable( x );
    g = b.realize( fn::parity( 3 ), { gx, splice( b, c1 ), splice( b, c2 ) } );
  }

  GadgetInstance out;
  out.gadget = "eq-to-frozen";
  out.source = source_of( c1, c2 );
  out.claim = "C1 == C2 iff Phi has a frozen variable iff " + x + " is frozen in Phi";
  out.circuits = { { "Phi", b.finish( g ) } };
  out.check = [c1, c2, x, phi = out.circuits[0].circuit] {
    const bool eq = brute_equivalent( c1, c2 );
    return eq == brute_efv( phi ) && eq == brute_frozen( phi, x );
  };
  return out;
}

GadgetInstance satp_gadget( const Circuit& c1, const Circuit& c2, std::optional<unsigned> k )
{
  const auto base = merged( c1.base(), c2.base() );
  const auto kk = pick_threshold( base, k );
  Names taken = c1.variables();
  std::map<std::string, std::string> rename;
  for ( const auto& v : c2.variables() )
  {
    rename[v] = take_fresh( taken, v );
  }
  Names xs;
  for ( unsigned i = 1; i < kk; ++i )
  {
    xs.push_back( take_fresh( taken, "x" + std::to_string( i ) ) );
  }
  CircuitBuilder b( base );
  for ( const auto& name : taken )
  {
    b.add_variable( name );
  }
  std::vector<std::size_t> args{ splice( b, c1 ), splice( b, c2, rename ) };
  for ( const auto& name : xs )
  {
    args.push_back( b.variable( name ) );
  }
  const auto g = b.realize( fn::threshold( kk ), args );

  GadgetInstance out;
  out.gadget = "satp";
  out.source = source_of( c1, c2 );
  out.claim = "t_" + std::to_string( kk ) + "(C1, C2, x...) has a frozen variable iff exactly one of C1, C2 is satisfiable";
  out.circuits = { { "C", b.finish( g ) } };
  out.check = [c1, c2, d = out.circuits[0].circuit] { return brute_efv( d ) == ( brute_sat( c1 ) != brute_sat( c2 ) ); };
  return out;
}

GadgetInstance satstar_to_efv( const Circuit& c, std::optional<unsigned> k )
{
  if ( c.num_variables() == 0u )
  {
    throw InvalidArgument( "satstar-to-efv needs at least one variable" );
  }
  const auto kk = pick_threshold( c.base(), k );
  Names vars = c.variables();
  Names ys;
  for ( unsigned i = 1; i <= kk; ++i )
  {
    ys.push_back( take_fresh( vars, "y" + std::to_string( i ) ) );
  }
  CircuitBuilder b( c.base() );
  for ( const auto& name : vars )
  {
    b.add_variable( name );
  }
  std::vector<std::size_t> gy, gx;
  for ( const auto& name : ys )
  {
    gy.push_back( b.variable( name ) );
  }
  for ( const auto& name : c.variables() )
  {
    gx.push_back( b.variable( name ) );
  }
  std::vector<std::size_t> args{ splice( b, c ) };
  args.insert( args.end(), gy.begin(), gy.end() );
  const auto t = b.realize( fn::threshold( kk ), args );
  const auto g = b.realize( guard_table(), { t, conjoin( b, gy ), conjoin( b, gx ) } );

  GadgetInstance out;
  out.gadget = "satstar-to-efv";
  out.source = source_of( c );
  out.claim = "G has a frozen variable iff C has no model other than all-ones";
  out.circuits = { { "G", b.finish( g ) } };
  out.check = [c, d = out.circuits[0].circuit] { return brute_efv( d ) == !brute_sat_star( c ); };
  return out;
}

GadgetInstance audit_gadget( const Circuit& c, std::optional<unsigned> k )
{
  const auto kk = pick_threshold( c.base(), k );
  Names vars = c.variables();
  Names xs;
  for ( unsigned i = 1; i <= kk; ++i )
  {
    xs.push_back( take_fresh( vars, "x" + std::to_string( i ) ) );
  }
  CircuitBuilder b( c.base() );
  for ( const auto& name : vars )
  {
    b.add_variable( name );
  }
  std::vector<std::size_t> args{ splice( b, c ) };
  for ( const auto& name : xs )
  {
    args.push_back( b.variable( name ) );
  }
  const auto g = b.realize( fn::threshold( kk ), args );

  GadgetInstance out;
  out.gadget = "audit";
  out.source = source_of( c );
  out.claim = "C is unsatisfiable iff C' is unsatisfiable or has a frozen variable; a satisfiable C leaves nothing frozen";
  out.circuits = { { "C", b.finish( g ) } };
  out.check = [c, d = out.circuits[0].circuit] {
    const bool unsat = !brute_sat( c );
    const bool aud = !brute_sat( d ) || brute_efv( d );
    return unsat == aud && ( unsat || !brute_efv( d ) );
  };
  return out;
}

GadgetInstance usat_const_elim( const Circuit& c )
{
  Names vars = c.variables();
  const auto x = take_fresh( vars, "x" );
  CircuitBuilder b( without_constants( c.base(), true ) );
  for ( const auto& name : vars )
  {
    b.add_variable( name );
  }
  const auto gx = b.variable( x );
  b.bind_constant( true, gx );
  const auto g = b.realize( fn::conjunction(), { splice( b, c ), gx } );

  GadgetInstance out;
  out.gadget = "usat-const-elim";
  out.source = source_of( c );
  out.claim = "#Sat(C) = #Sat(C'' & " + x + ")";
  out.circuits = { { "C", b.finish( g ) } };
  out.check = [c, d = out.circuits[0].circuit] { return count_sat( c ) == count_sat( d ); };
  return out;
}

std::vector<std::string> gadget_names()
{
  return { "taut-to-eq", "eliminate-constant", "selfdual-eq", "selfdual-iso", "iso-restricted", "satstar-chain",
           "unsat-to-frozen", "eq-to-frozen", "satp", "satstar-to-efv", "audit", "usat-const-elim" };
}

} // namespace postlab
