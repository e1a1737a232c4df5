// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "postlab/classify.hpp"
#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/dsl.hpp"
#include "postlab/enumerate.hpp"
#include "postlab/gadgets.hpp"
#include "support/gadget_suites.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

using namespace postlab;
using namespace postlab::testing;

namespace
{

// Pinned sizes and budgets.
constexpr unsigned oracle_bases = 200;
constexpr unsigned tractable_circuits = 500;
constexpr unsigned max_vars = 12;
constexpr unsigned selfdual_circuits = 200;
constexpr unsigned enum_circuits = 200;
constexpr unsigned gadget_instances = 100;
constexpr std::size_t gadget_vars = 14;
constexpr double budget_round_trip = 1.0;
constexpr double budget_oracle = 30.0;
constexpr double budget_tractable = 300.0;
constexpr double budget_gadgets = 300.0;

/// Every circuit seen by criteria 4 to 7, for the identity check.
std::vector<Circuit> touched;

struct Outcome
{
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail( const std::string& what )
  {
    pass = false;
    if ( failures.size() < 5u )
      failures.push_back( what );
  }
};

bool report( int id, const char* title, Outcome& o, double seconds, double budget )
{
  if ( budget > 0.0 && seconds > budget )
    o.fail( "time " + std::to_string( seconds ) + " s exceeds " + std::to_string( budget ) + " s" );
  std::printf( "%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), seconds );
  for ( const auto& f : o.failures )
    std::printf( "     %s\n", f.c_str() );
  return o.pass;
}

template<class F>
double timed( F&& f )
{
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

std::vector<TruthTable> compile( const std::vector<std::string_view>& formulas )
{
  std::vector<TruthTable> base;
  for ( const auto f : formulas )
    base.push_back( compile_formula( f ) );
  return base;
}

double round_trip( Outcome& o )
{
  return timed( [&] {
    unsigned n = 0;
    for ( const auto& c : all_clones( 4 ) )
    {
      ++n;
      const auto base = standard_base( c );
      if ( clone_of( base ) != c )
        o.fail( c.to_string() + " came back as " + clone_of( base ).to_string() );
    }
    o.detail << n << " clones, parametric families at degrees 2..4 and unbounded";
  } );
}

double oracle_agreement( Outcome& o )
{
  return timed( [&] {
    Rng rng( 0xc105e );
    unsigned checks = 0;
    for ( unsigned i = 0; i < oracle_bases; ++i )
    {
      const auto base = random_base( rng, 2, 3 );
      const auto clone = clone_of( base );
      const auto closure = closure_oracle( base, 2 );
      for ( std::uint32_t bits = 0; bits < 16u; ++bits )
      {
        const auto f = TruthTable::from_bits( 2, bits );
        ++checks;
        if ( ( closure.count( f ) > 0u ) != is_member( f, clone ) )
          o.fail( "base #" + std::to_string( i ) + " (" + clone.to_string() + "): " + f.to_literal() );
      }
    }
    o.detail << oracle_bases << " bases, " << checks << " membership checks";
  } );
}

double golden( Outcome& o )
{
  return timed( [&] {
    const auto& rows = golden_rows();
    for ( const auto& row : rows )
    {
      const auto base = compile( row.base );
      const auto v = classify( parse_problem( row.problem ), base );
      if ( v.clone.to_string() != row.clone || to_string( v.label ) != row.label )
        o.fail( std::string( row.clone ) + " " + std::string( row.problem ) + ": got " + v.clone.to_string() + " " + to_string( v.label ) );
    }
    if ( rows.size() < 25u )
      o.fail( "only " + std::to_string( rows.size() ) + " rows" );
    o.detail << rows.size() << " rows";
  } );
}

std::vector<std::string> pick_vars( Rng& rng, const Circuit& c )
{
  std::vector<std::string> vars;
  for ( const auto& v : c.variables() )
  {
    if ( pick( rng, 0, 2 ) == 0 )
      vars.push_back( v );
  }
  if ( vars.empty() )
    vars.push_back( c.variables()[pick( rng, 0, static_cast<unsigned>( c.num_variables() - 1u ) )] );
  return vars;
}

double tractable( Outcome& o )
{
  const char* clones[] = { "V", "E", "L", "M", "D", "S0^2", "S12" };
  const Problem problems[] = { Problem::SAT, Problem::SAT_STAR, Problem::EQ, Problem::ISO, Problem::FV, Problem::EFV, Problem::AUDIT, Problem::USAT };
  return timed( [&] {
    Rng rng( 0x7ac7 );
    unsigned cases = 0, runs = 0;
    for ( const auto p : problems )
    {
      std::vector<std::string> used;
      for ( const auto* name : clones )
      {
        const auto clone = CloneName::parse( name );
        if ( classify( p, clone ).label != ComplexityLabel::PolynomialTime )
          continue;
        used.push_back( name );
        ++cases;
        const auto base = standard_named_base( name );
        for ( unsigned i = 0; i < tractable_circuits; ++i )
        {
          const auto c = random_up_to( rng, base, max_vars );
          touched.push_back( c );
          ++runs;
          bool expected = false;
          Decision d;
          switch ( p )
          {
          case Problem::SAT: d = sat( c ), expected = oracle_sat( c ); break;
          case Problem::SAT_STAR: d = sat_star( c ), expected = oracle_sat_star( c ); break;
          case Problem::EQ:
          case Problem::ISO:
          {
            const auto c2 = partner_circuit( rng, base, c );
            touched.push_back( c2 );
            d = p == Problem::EQ ? equivalent( c, c2 ) : isomorphic( c, c2 );
            expected = p == Problem::EQ ? oracle_equivalent( c, c2 ) : oracle_isomorphic( c, c2 );
            break;
          }
          case Problem::FV:
          {
            const auto vars = pick_vars( rng, c );
            d = frozen( c, vars ), expected = oracle_frozen( c, vars );
            break;
          }
          case Problem::EFV: d = exists_frozen( c ), expected = oracle_efv( c ); break;
          case Problem::AUDIT: d = audit( c ), expected = oracle_audit( c ); break;
          case Problem::USAT: d = unique_sat( c ), expected = oracle_usat( c ); break;
          default: break;
          }
          if ( d.method == Method::BruteForce )
            o.fail( to_string( p ) + " over " + name + " fell back to brute force:\n" + print_circuit( c ) );
          if ( d.answer != expected )
            o.fail( to_string( p ) + " over " + name + " disagrees with brute force:\n" + print_circuit( c ) );
        }
      }
      o.detail << to_string( p ) << "{";
      for ( std::size_t k = 0; k < used.size(); ++k )
        o.detail << ( k ? "," : "" ) << used[k];
      o.detail << "} ";
    }
    o.detail << "= " << cases << " problem/clone pairs, " << runs << " circuits";
  } );
}

double selfdual_count( Outcome& o )
{
  return timed( [&] {
    Rng rng( 0x5e1fd );
    const auto base = standard_named_base( "D" );
    for ( unsigned i = 0; i < selfdual_circuits; ++i )
    {
      const auto c = random_up_to( rng, base, max_vars );
      touched.push_back( c );
      const auto n = c.num_variables();
      if ( oracle_models( c ).size() != ( std::size_t{ 1 } << ( n - 1u ) ) || count_sat( c ) != ( std::uint64_t{ 1 } << ( n - 1u ) ) )
        o.fail( "count differs from 2^(n-1):\n" + print_circuit( c ) );
    }
    o.detail << selfdual_circuits << " circuits";
  } );
}

double enumeration( Outcome& o )
{
  return timed( [&] {
    Rng rng( 0xe9 );
    std::uint64_t worst_bt = 0, worst_dp = 0;
    const auto run = [&]( EnumAlgorithm alg, const char* clones[2] ) {
      for ( unsigned i = 0; i < enum_circuits; ++i )
      {
        const auto c = random_up_to( rng, standard_named_base( clones[i % 2u] ), max_vars );
        touched.push_back( c );
        const auto n = c.num_variables();
        const auto report = alg == EnumAlgorithm::Backtrack ? enum_backtrack( c ) : enum_dual_pairing( c );
        std::vector<std::uint64_t> got;
        for ( const auto& a : report.solutions )
          got.push_back( a.lex_index() );
        const auto expected = oracle_models( c );
        auto sorted = got;
        std::sort( sorted.begin(), sorted.end() );
        const bool distinct = std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end();
        if ( sorted != expected || !distinct )
          o.fail( to_string( alg ) + ": solution set differs\n" + print_circuit( c ) );
        if ( alg == EnumAlgorithm::Backtrack && got != expected )
          o.fail( "Backtrack output not lexicographic\n" + print_circuit( c ) );
        const auto bound = alg == EnumAlgorithm::Backtrack ? 2u * ( n + 1u ) : 4u;
        const auto delay = report.stats.max_delay();
        ( alg == EnumAlgorithm::Backtrack ? worst_bt : worst_dp ) =
            std::max( alg == EnumAlgorithm::Backtrack ? worst_bt : worst_dp, delay );
        if ( delay > bound )
          o.fail( to_string( alg ) + ": delay " + std::to_string( delay ) + " > " + std::to_string( bound ) + "\n" + print_circuit( c ) );
      }
    };
    const char* lex[2] = { "M", "L" };
    const char* pairing[2] = { "D", "S0^2" };
    run( EnumAlgorithm::Backtrack, lex );
    run( EnumAlgorithm::DualPairing, pairing );
    o.detail << enum_circuits << " circuits each; Backtrack over M/L, worst delay " << worst_bt << "; DualPairing over D/S0^2, worst delay " << worst_dp;
  } );
}

double gadgets( Outcome& o )
{
  return timed( [&] {
    Rng rng( 0x9ad9e7 );
    unsigned total = 0;
    for ( const auto& suite : gadget_suites() )
    {
      for ( unsigned i = 0; i < gadget_instances; ++i )
      {
        const auto g = suite.make( rng, i );
        ++total;
        for ( const auto& nc : g.circuits )
        {
          touched.push_back( nc.circuit );
          if ( nc.circuit.num_variables() > gadget_vars )
            o.fail( suite.name + ": output over " + std::to_string( nc.circuit.num_variables() ) + " variables" );
        }
        if ( !g.verify() )
          o.fail( suite.name + " claim fails on:\n" + g.source );
      }
    }
    const auto dnfs = all_two_variable_dnfs();
    unsigned tautologies = 0;
    for ( const auto& h : dnfs )
    {
      const auto g = taut_to_eq( h );
      const bool taut = h.is_tautology();
      tautologies += taut ? 1u : 0u;
      const auto& c1 = g.circuit( "C1" );
      const auto& c2 = g.circuit( "C2" );
      touched.push_back( c2 );
      if ( !g.verify() || taut != oracle_equivalent( c1, c2 ) || taut != oracle_isomorphic( c1, c2 ) )
        o.fail( "3-TAUT gadget fails on " + h.to_string() );
    }
    o.detail << gadget_suites().size() << " gadgets x " << gadget_instances << " = " << total << " seeded instances; " << dnfs.size()
             << " two-variable DNFs exhaustively (" << tautologies << " tautologies)";
  } );
}

double identity( Outcome& o )
{
  return timed( [&] {
    for ( const auto& c : touched )
    {
      const bool efv = exists_frozen( c ).answer;
      const bool rhs = sat( c ).answer && audit( c ).answer;
      if ( efv != rhs || oracle_efv( c ) != ( oracle_sat( c ) && oracle_audit( c ) ) || efv != oracle_efv( c ) )
        o.fail( "EFV != SAT and AUDIT on:\n" + print_circuit( c ) );
    }
    o.detail << touched.size() << " circuits";
  } );
}

} // namespace

int main()
{
  bool all = true;
  {
    Outcome o;
    all &= report( 1, "clone round-trip", o, round_trip( o ), budget_round_trip );
  }
  {
    Outcome o;
    all &= report( 2, "closure oracle agreement at arity 2", o, oracle_agreement( o ), budget_oracle );
  }
  {
    Outcome o;
    all &= report( 3, "dichotomy table", o, golden( o ), 0.0 );
  }
  {
    Outcome o;
    all &= report( 4, "tractable paths equal brute force", o, tractable( o ), budget_tractable );
  }
  {
    Outcome o;
    all &= report( 5, "self-dual count law", o, selfdual_count( o ), 0.0 );
  }
  {
    Outcome o;
    all &= report( 6, "enumeration sets, order and delay", o, enumeration( o ), 0.0 );
  }
  {
    Outcome o;
    all &= report( 7, "gadget claims", o, gadgets( o ), budget_gadgets );
  }
  {
    Outcome o;
    all &= report( 8, "EFV == SAT && AUDIT", o, identity( o ), 0.0 );
  }
  std::cout << ( all ? "all criteria pass" : "some criteria fail" ) << std::endl;
  return all ? 0 : 1;
}
