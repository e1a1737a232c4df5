#include <doctest.h>

#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/dsl.hpp"
#include "postlab/error.hpp"
#include "postlab/gadgets.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace postlab;
using namespace postlab::testing;

namespace
{

constexpr unsigned instances = 100;
constexpr std::size_t variable_cap = 14;
constexpr const char* boolean_header = "base AND = x & y\nbase OR = x | y\nbase NOT = !x\nbase ZERO = 0\n";

Circuit parse( const std::string& text )
{
  return parse_circuit( text );
}

CloneName clone_of_circuit( const Circuit& c )
{
  const auto tables = c.base().tables();
  return clone_of( tables );
}

bool within( const Circuit& c, const char* clone )
{
  return includes( CloneName::parse( clone ), clone_of_circuit( c ) );
}

Base with_constant( const char* clone, bool value )
{
  auto base = standard_named_base( clone );
  base.ensure( fn::constant( value ), value ? "one" : "zero" );
  return base;
}

Circuit random_over( Rng& rng, const Base& base, unsigned max_n )
{
  const auto n = pick( rng, 1, max_n );
  return random_circuit( rng, base, n, pick( rng, 1, 3 * n + 2 ) );
}

/// Partner with a fair share of equal and isomorphic pairs.
Circuit partner( Rng& rng, const Base& base, const Circuit& c )
{
  return pick( rng, 0, 4 ) == 0 ? c : partner_circuit( rng, base, c );
}

void check_instance( const GadgetInstance& g )
{
  for ( const auto& nc : g.circuits )
  {
    REQUIRE( nc.circuit.num_variables() <= variable_cap );
  }
  INFO( g.gadget << "\n" << g.source );
  CHECK( g.verify() );
}

ThreeDnf random_dnf( Rng& rng )
{
  ThreeDnf h;
  const auto n = pick( rng, 1, 5 );
  for ( unsigned i = 1; i <= n; ++i )
  {
    h.variables.push_back( "x" + std::to_string( i ) );
  }
  const auto terms = pick( rng, 1, 6 );
  for ( unsigned t = 0; t < terms; ++t )
  {
    std::vector<ThreeDnf::Literal> term;
    const auto size = pick( rng, 1, 3 );
    for ( unsigned l = 0; l < size; ++l )
    {
      term.push_back( { pick( rng, 0, n - 1u ), coin( rng ) } );
    }
    h.terms.push_back( std::move( term ) );
  }
  return h;
}

} // namespace

TEST_CASE( "3-DNF parsing" )
{
  const auto h = ThreeDnf::parse( "x1 & !x2 & x3 | !x1" );
  CHECK( h.variables == std::vector<std::string>{ "x1", "x2", "x3" } );
  REQUIRE( h.terms.size() == 2u );
  CHECK( h.terms[0].size() == 3u );
  CHECK_FALSE( h.terms[1][0].positive );
  CHECK( h.to_string() == "x1 & !x2 & x3 | !x1" );
  CHECK( ThreeDnf::parse( h.to_string() ).to_string() == h.to_string() );
  CHECK( ThreeDnf::parse( "x | !x" ).is_tautology() );
  CHECK_FALSE( ThreeDnf::parse( "x & y" ).is_tautology() );
  CHECK_THROWS_AS( ThreeDnf::parse( "a & b & c & d" ), ParseError );
  CHECK_THROWS_AS( ThreeDnf::parse( "a | " ), ParseError );
  CHECK_THROWS_AS( ThreeDnf::parse( "a + b" ), ParseError );
}

TEST_CASE( "tautology gadget examples" )
{
  const auto yes = taut_to_eq( ThreeDnf::parse( "x | !x" ) );
  CHECK( yes.verify() );
  CHECK( oracle_equivalent( yes.circuit( "C1" ), yes.circuit( "C2" ) ) );
  CHECK( clone_of_circuit( yes.circuit( "C2" ) ) == CloneName::parse( "M2" ) );

  const auto no = taut_to_eq( ThreeDnf::parse( "x & y" ) );
  CHECK( no.verify() );
  CHECK_FALSE( oracle_equivalent( no.circuit( "C1" ), no.circuit( "C2" ) ) );
  CHECK( count_sat( no.circuit( "C2" ) ) < count_sat( no.circuit( "C1" ) ) );
  CHECK_THROWS_AS( no.circuit( "C3" ), InvalidArgument );
}

TEST_CASE( "tautology gadget: every 2-variable DNF with at most three terms" )
{
  // Terms are the nonempty subsets of {x, !x, y, !y} with at most three literals.
  std::vector<std::vector<ThreeDnf::Literal>> terms;
  for ( unsigned mask = 1; mask < 16u; ++mask )
  {
    if ( std::popcount( mask ) > 3 )
      continue;
    std::vector<ThreeDnf::Literal> term;
    for ( unsigned l = 0; l < 4u; ++l )
    {
      if ( ( mask >> l ) & 1u )
        term.push_back( { l / 2u, l % 2u == 0u } );
    }
    terms.push_back( term );
  }
  REQUIRE( terms.size() == 14u );
  unsigned checked = 0, tautologies = 0;
  const auto run = [&]( std::vector<std::vector<ThreeDnf::Literal>> chosen ) {
    ThreeDnf h{ { "x", "y" }, std::move( chosen ) };
    const auto g = taut_to_eq( h );
    const bool taut = h.is_tautology();
    tautologies += taut ? 1u : 0u;
    ++checked;
    CHECK( g.verify() );
    CHECK( taut == oracle_equivalent( g.circuit( "C1" ), g.circuit( "C2" ) ) );
    CHECK( taut == oracle_isomorphic( g.circuit( "C1" ), g.circuit( "C2" ) ) );
  };
  for ( const auto& a : terms )
  {
    run( { a } );
    for ( const auto& b : terms )
    {
      run( { a, b } );
      for ( const auto& c : terms )
        run( { a, b, c } );
    }
  }
  CHECK( checked == 14u + 14u * 14u + 14u * 14u * 14u );
  CHECK( tautologies > 0u );
}

TEST_CASE( "tautology gadget: seeded DNFs" )
{
  Rng rng( 0x7a07 );
  for ( unsigned i = 0; i < instances; ++i )
  {
    check_instance( taut_to_eq( random_dnf( rng ) ) );
  }
}

TEST_CASE( "constant elimination examples" )
{
  const auto a = parse( "base AND = x & y\nbase ONE = 1\ninput x1\ng1 = ONE()\ng2 = AND(x1, g1)\noutput g2\n" );
  const auto b = parse( "base AND = x & y\ninput x1\noutput x1\n" );
  const auto c = parse( "base AND = x & y\nbase ONE = 1\ninput x1\ng1 = ONE()\noutput g1\n" );
  const auto g = eliminate_constant( a, b );
  CHECK( g.verify() );
  CHECK( oracle_equivalent( g.circuit( "C1" ), g.circuit( "C2" ) ) );
  CHECK( oracle_frozen( g.circuit( "C1" ), { "v" } ) );
  const auto h = eliminate_constant( c, b );
  CHECK( h.verify() );
  CHECK_FALSE( oracle_equivalent( h.circuit( "C1" ), h.circuit( "C2" ) ) );
  for ( const auto& nc : h.circuits )
  {
    for ( const auto& f : nc.circuit.base() )
      CHECK( f.table.arity() > 0u );
  }
}

TEST_CASE( "constant elimination: seeded pairs, both directions" )
{
  Rng rng( 0xe11 );
  const char* with_and[] = { "M2", "E2", "S12", "R2", "BF" };
  const char* with_or[] = { "M2", "V2", "S02", "R2", "BF" };
  for ( unsigned i = 0; i < instances; ++i )
  {
    const bool value = i % 2u == 0u;
    const auto* clone = value ? with_and[pick( rng, 0, 4 )] : with_or[pick( rng, 0, 4 )];
    const auto base = with_constant( clone, value );
    const auto c1 = random_over( rng, base, 5 );
    const auto c2 = partner( rng, base, c1 );
    const auto g = eliminate_constant( c1, c2, value );
    check_instance( g );
    CHECK( within( g.circuit( "C1" ), clone ) );
  }
}

TEST_CASE( "self-dual equivalence gadget examples" )
{
  const auto a = parse( "base AND = x & y\nbase OR = x | y\ninput x\ninput y\ninput z\ng1 = OR(y, z)\ng2 = AND(x, g1)\noutput g2\n" );
  const auto b = parse( "base AND = x & y\nbase OR = x | y\ninput x\ninput y\ninput z\ng1 = AND(x, y)\ng2 = AND(x, z)\ng3 = OR(g1, g2)\noutput g3\n" );
  const auto c = parse( "base AND = x & y\ninput x\ninput y\ninput z\ng1 = AND(x, y)\noutput g1\n" );

  const auto eq = selfdual_eq_gadget( a, b );
  CHECK( eq.verify() );
  CHECK( oracle_equivalent( eq.circuit( "C1" ), eq.circuit( "C2" ) ) );
  CHECK( clone_of_circuit( eq.circuit( "C1" ) ) == CloneName::parse( "D2" ) );
  CHECK( eq.circuit( "C1" ).base().size() == 1u );

  // An inequivalence witness survives with u = 0, v = 1.
  const auto ne = selfdual_eq_gadget( a, c );
  CHECK( ne.verify() );
  const auto& d1 = ne.circuit( "C1" );
  const auto& d2 = ne.circuit( "C2" );
  CHECK_FALSE( oracle_equivalent( d1, d2 ) );
  const auto w = std::vector<std::uint8_t>{ 1, 0, 1, 0, 1 };
  REQUIRE( a.evaluate( std::span( w ).first( 3 ) ) != c.evaluate( std::span( w ).first( 3 ) ) );
  CHECK( d1.evaluate( w ) != d2.evaluate( w ) );

  const auto notm = parse( "base NAND = !(x & y)\ninput x\ninput y\ng = NAND(x, y)\noutput g\n" );
  CHECK_THROWS_AS( selfdual_eq_gadget( notm, notm ), WrongClone );
}

TEST_CASE( "self-dual gadgets: seeded monotone pairs" )
{
  Rng rng( 0x5d );
  auto base = standard_named_base( "M" );
  base.ensure( fn::threshold( 2 ), "maj" );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto c1 = random_over( rng, base, 5 );
    const auto c2 = partner( rng, base, c1 );
    const auto eq = selfdual_eq_gadget( c1, c2 );
    check_instance( eq );
    CHECK( clone_of_circuit( eq.circuit( "C2" ) ) == CloneName::parse( "D2" ) );
    const auto iso = selfdual_iso_gadget( c1, c2 );
    check_instance( iso );
    CHECK( clone_of_circuit( iso.circuit( "C1" ) ) == CloneName::parse( "D2" ) );
  }
}

TEST_CASE( "restricted isomorphism instances" )
{
  const auto a = parse( "base AND = x & y\nbase OR = x | y\ninput x\ninput y\ng = OR(x, y)\noutput g\n" );
  const auto b = parse( "base AND = x & y\ninput x\ninput y\ng = AND(x, y)\noutput g\n" );
  const auto same = iso_restricted( a, a );
  CHECK( same.verify() );
  CHECK( oracle_isomorphic( same.circuit( "C1" ), same.circuit( "C2" ) ) );
  const auto diff = iso_restricted( a, b );
  CHECK( diff.verify() );
  CHECK_FALSE( oracle_isomorphic( diff.circuit( "C1" ), diff.circuit( "C2" ) ) );

  Rng rng( 0x150 );
  const auto base = standard_named_base( "M2" );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto c1 = random_over( rng, base, 4 );
    const auto c2 = partner( rng, base, c1 );
    const auto g = iso_restricted( c1, c2 );
    check_instance( g );
    CHECK( within( g.circuit( "C1" ), "M2" ) );
  }
}

TEST_CASE( "SAT* chain gadget" )
{
  const auto s12 = with_constant( "S12", false );
  Circuit x1( s12, { "x1" } );
  x1.set_output( x1.input_gate( 0 ) );
  const auto sat = satstar_chain( x1 );
  CHECK( sat.verify() );
  CHECK( oracle_sat_star( sat.circuit( "C_hat" ) ) );

  Circuit zero( s12, { "x1" } );
  zero.set_output( zero.constant_gate( false ) );
  const auto unsat = satstar_chain( zero );
  CHECK( unsat.verify() );
  CHECK_FALSE( oracle_sat_star( unsat.circuit( "C_hat" ) ) );

  Rng rng( 0x512 );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto g = satstar_chain( random_over( rng, s12, 6 ) );
    check_instance( g );
    CHECK( within( g.circuit( "C_hat" ), "S12" ) );
  }
}

TEST_CASE( "unsatisfiability to frozen variable" )
{
  Base base( { { "h", fn::from_tuple_function( 3, []( auto a ) { return a[0] || ( a[1] && !a[2] ); } ) }, { "zero", fn::constant( false ) } } );

  Circuit zero( base, { "x1" } );
  zero.set_output( zero.constant_gate( false ) );
  const auto u = unsat_to_frozen( zero );
  CHECK( u.verify() );
  CHECK( oracle_frozen( u.circuit( "C_or" ), { "x" } ) );
  CHECK( clone_of_circuit( u.circuit( "C_or" ) ) == CloneName::parse( "S02" ) );

  Circuit x1( base, { "x1" } );
  x1.set_output( x1.input_gate( 0 ) );
  const auto s = unsat_to_frozen( x1 );
  CHECK( s.verify() );
  CHECK_FALSE( oracle_frozen( s.circuit( "C_or" ), { "x" } ) );

  Rng rng( 0xf0 );
  unsigned unsatisfiable = 0;
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto c = random_over( rng, base, 6 );
    unsatisfiable += oracle_sat( c ) ? 0u : 1u;
    const auto g = unsat_to_frozen( c );
    check_instance( g );
    CHECK( clone_of_circuit( g.circuit( "C_or" ) ) == CloneName::parse( "S02" ) );
  }
  CHECK( unsatisfiable > 0u );
}

TEST_CASE( "equivalence to frozen variable over D1" )
{
  const auto d1 = standard_named_base( "D1" );
  Circuit a( d1, { "x1", "x2", "x3" } );
  a.set_output( a.apply( 0, { 0, 1, 2 } ) );
  const auto same = eq_to_frozen( a, a );
  CHECK( same.verify() );
  CHECK( oracle_frozen( same.circuit( "Phi" ), { "x" } ) );

  Circuit proj( d1, { "x1", "x2", "x3" } );
  proj.set_output( proj.input_gate( 0 ) );
  const auto other = eq_to_frozen( a, proj );
  CHECK( other.verify() );

  Rng rng( 0xd1 );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto c1 = random_over( rng, d1, 5 );
    const auto c2 = partner( rng, d1, c1 );
    const auto g = eq_to_frozen( c1, c2 );
    check_instance( g );
    CHECK( within( g.circuit( "Phi" ), "D1" ) );
  }
}

TEST_CASE( "threshold gadgets over bases containing a threshold function" )
{
  const char* clones[] = { "BF", "M", "D", "S1^2", "S1^3", "S0^2", "S12^3", "S11^3", "S1^4" };
  Rng rng( 0x7c );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto* clone = clones[i % std::size( clones )];
    const auto base = standard_named_base( clone );
    const auto c1 = random_over( rng, base, 4 );
    const auto c2 = random_over( rng, base, 4 );
    const auto p = satp_gadget( c1, c2 );
    check_instance( p );
    CHECK( within( p.circuit( "C" ), clone ) );
    const auto a = audit_gadget( c1 );
    check_instance( a );
    CHECK( within( a.circuit( "C" ), clone ) );
  }
}

TEST_CASE( "threshold gadget examples" )
{
  const auto sat = parse( std::string( boolean_header ) + "input a\noutput a\n" );
  const auto unsat = parse( std::string( boolean_header ) + "input a\ng = ZERO()\noutput g\n" );
  const auto p = satp_gadget( sat, unsat, 2 );
  CHECK( p.verify() );
  CHECK( oracle_efv( p.circuit( "C" ) ) );
  CHECK_FALSE( oracle_efv( satp_gadget( sat, sat, 2 ).circuit( "C" ) ) );
  CHECK_FALSE( oracle_sat( satp_gadget( unsat, unsat, 2 ).circuit( "C" ) ) );
  CHECK( satp_gadget( sat, sat, 2 ).circuit( "C" ).num_variables() == 3u );

  const auto au = audit_gadget( unsat, 3 );
  CHECK( au.verify() );
  CHECK( oracle_frozen( au.circuit( "C" ), { "x1", "x2", "x3" } ) );
  const auto as = audit_gadget( sat, 3 );
  CHECK( as.verify() );
  CHECK_FALSE( oracle_efv( as.circuit( "C" ) ) );
  CHECK_THROWS_AS( audit_gadget( sat, 1 ), InvalidArgument );

  // I2 has no threshold function.
  Circuit id( Base( { { "id", fn::projection( 1, 0 ) } } ), { "a" } );
  id.set_output( id.input_gate( 0 ) );
  CHECK_THROWS_AS( audit_gadget( id ), NotInClone );
}

TEST_CASE( "SAT* to frozen variable" )
{
  const auto conj = parse( std::string( boolean_header ) + "input x1\ninput x2\ng = AND(x1, x2)\noutput g\n" );
  const auto g1 = satstar_to_efv( conj, 2 );
  CHECK( g1.verify() );
  CHECK( oracle_frozen( g1.circuit( "G" ), { "y1", "y2" } ) );

  const auto taut = parse( std::string( boolean_header ) + "input x1\ninput x2\ng = NOT(x1)\nh = OR(x1, g)\noutput h\n" );
  CHECK_FALSE( oracle_efv( satstar_to_efv( taut, 2 ).circuit( "G" ) ) );

  const char* clones[] = { "S12^2", "S12^3", "S1^3", "S12^4", "R2", "R1" };
  Rng rng( 0x5e );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto* clone = clones[i % std::size( clones )];
    const auto g = satstar_to_efv( random_over( rng, standard_named_base( clone ), 6 ) );
    check_instance( g );
    CHECK( within( g.circuit( "G" ), clone ) );
  }
}

TEST_CASE( "unique-SAT constant elimination" )
{
  const auto s1 = with_constant( "S1", true );
  Circuit one( s1, { "x1" } );
  one.set_output( one.input_gate( 0 ) );
  const auto g = usat_const_elim( one );
  CHECK( g.verify() );
  CHECK( count_sat( g.circuit( "C" ) ) == 1u );

  Rng rng( 0x115 );
  for ( unsigned i = 0; i < instances; ++i )
  {
    const auto c = random_over( rng, s1, 8 );
    const auto u = usat_const_elim( c );
    check_instance( u );
    CHECK( oracle_models( c ).size() == oracle_models( u.circuit( "C" ) ).size() );
    CHECK( within( u.circuit( "C" ), "S1" ) );
  }
}

TEST_CASE( "gadget names" )
{
  const auto names = gadget_names();
  CHECK( names.size() == 12u );
  CHECK( std::find( names.begin(), names.end(), "taut-to-eq" ) != names.end() );
}
