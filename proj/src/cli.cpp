#include "postlab/cli.hpp"

#include "postlab/classify.hpp"
#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/dsl.hpp"
#include "postlab/enumerate.hpp"
#include "postlab/error.hpp"
#include "postlab/gadgets.hpp"
#include "postlab/synthesis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace postlab::cli
{

namespace
{

using nlohmann::json;

/// Bad invocation detected after CLI11 parsing (wrong file count, unreadable file, ...).
class UsageError : public Error
{
public:
  using Error::Error;
};

/// Requested operation is not available for the circuit's clone; reported as a limit.
class Unavailable : public Error
{
public:
  using Error::Error;
};

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw UsageError( "cannot read " + path );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Circuit load_circuit( const std::string& path )
{
  const auto text = read_file( path );
  try
  {
    return parse_circuit( text );
  }
  catch ( const ParseError& e )
  {
    throw ParseError( e.kind(), e.line(), e.column(), path + ": " + e.what() );
  }
}

CloneName clone_of_circuits( std::initializer_list<const Circuit*> circuits )
{
  std::vector<TruthTable> tables;
  for ( const auto* c : circuits )
  {
    for ( const auto& f : c->base() )
    {
      tables.push_back( f.table );
    }
  }
  return clone_of( tables );
}

std::vector<std::string> split_list( const std::string& list )
{
  std::vector<std::string> out;
  std::stringstream ss( list );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    const auto b = item.find_first_not_of( " \t" );
    if ( b != std::string::npos )
    {
      out.push_back( item.substr( b, item.find_last_not_of( " \t" ) - b + 1 ) );
    }
  }
  return out;
}

json verdict_json( const ComplexityVerdict& v )
{
  return { { "problem", to_string( v.problem ) }, { "clone", v.clone.to_string() }, { "label", to_string( v.label ) }, { "trace", v.trace } };
}

struct Options
{
  bool plain = false;
  bool exit_status = false;

  std::string problem;
  std::vector<std::string> files;
  std::string vars;
  std::string assignment;

  std::string order = "any";
  bool stats = false;

  std::string gadget;
  std::optional<unsigned> k;
  int value = 1;
  bool check = false;

  bool dot = false;
  unsigned max_n = 3;

  std::string target;
};

void need_files( const Options& o, std::size_t count, const std::string& what )
{
  if ( o.files.size() != count )
  {
    throw UsageError( what + " expects " + std::to_string( count ) + " circuit file" + ( count == 1u ? "" : "s" ) + ", got " +
                      std::to_string( o.files.size() ) );
  }
}

int emit( const Options& o, std::ostream& out, const json& j, const std::string& plain_text )
{
  if ( o.plain )
  {
    out << plain_text;
  }
  else
  {
    out << j.dump() << '\n';
  }
  return exit_ok;
}

int cmd_clone_of( const Options& o, std::ostream& out )
{
  const auto c = load_circuit( o.files.at( 0 ) );
  const auto clone = clone_of_circuits( { &c } ).to_string();
  return emit( o, out, { { "clone", clone } }, clone + "\n" );
}

int cmd_classify( const Options& o, std::ostream& out )
{
  const auto c = load_circuit( o.files.at( 0 ) );
  const auto tables = c.base().tables();
  const auto v = classify( parse_problem( o.problem ), tables );
  return emit( o, out, verdict_json( v ), to_string( v.label ) + "\n" + v.trace + "\n" );
}

/// Circuit value: C at the assignment given by --assignment in variable order.
int solve_value( const Options& o, std::ostream& out, const Circuit& c, const CloneName& clone )
{
  const auto& bits = o.assignment;
  if ( bits.size() != c.num_variables() || bits.find_first_not_of( "01" ) != std::string::npos )
  {
    throw UsageError( "solve --problem VAL needs --assignment with one 0/1 digit per variable (" + std::to_string( c.num_variables() ) + ")" );
  }
  std::vector<std::uint8_t> values;
  for ( const auto ch : bits )
  {
    values.push_back( ch == '1' ? 1u : 0u );
  }
  const bool answer = c.evaluate( values );
  json j = { { "problem", "VAL" },
             { "clone", clone.to_string() },
             { "answer", answer },
             { "method", "Evaluation" },
             { "label", to_string( classify( Problem::VAL, clone ).label ) },
             { "witness", json::array( { bits } ) },
             { "order", c.variables() },
             { "frozen", json::array() } };
  emit( o, out, j, std::string( answer ? "yes" : "no" ) + "\n" );
  return ( o.exit_status && !answer ) ? exit_no : exit_ok;
}

int cmd_solve( const Options& o, std::ostream& out )
{
  const auto problem = parse_problem( o.problem );
  const bool pair = problem == Problem::EQ || problem == Problem::ISO;
  need_files( o, pair ? 2u : 1u, "solve --problem " + to_string( problem ) );
  const auto c1 = load_circuit( o.files[0] );
  const auto c2 = pair ? load_circuit( o.files[1] ) : Circuit();
  const auto clone = pair ? clone_of_circuits( { &c1, &c2 } ) : clone_of_circuits( { &c1 } );

  if ( problem == Problem::VAL )
  {
    return solve_value( o, out, c1, clone );
  }

  Decision d;
  switch ( problem )
  {
  case Problem::SAT: d = sat( c1 ); break;
  case Problem::SAT_STAR: d = sat_star( c1 ); break;
  case Problem::VAL: break;
  case Problem::EQ: d = equivalent( c1, c2 ); break;
  case Problem::ISO: d = isomorphic( c1, c2 ); break;
  case Problem::FV:
  {
    const auto vars = split_list( o.vars );
    if ( vars.empty() )
    {
      throw UsageError( "solve --problem FV needs --vars" );
    }
    d = frozen( c1, vars );
    break;
  }
  case Problem::EFV: d = exists_frozen( c1 ); break;
  case Problem::AUDIT: d = audit( c1 ); break;
  case Problem::USAT: d = unique_sat( c1 ); break;
  case Problem::ENUM:
  case Problem::ENUM_LEX: throw UsageError( "enumeration problems are served by the enum command" );
  }

  json witness = json::array();
  std::vector<std::string> order;
  std::string plain = std::string( d.answer ? "yes" : "no" ) + "\n";
  for ( const auto& w : d.witness )
  {
    witness.push_back( w.to_bits() );
    order = w.variables();
    plain += w.to_bits() + "\n";
  }
  json j = { { "problem", to_string( problem ) },
             { "clone", clone.to_string() },
             { "answer", d.answer },
             { "method", to_string( d.method ) },
             { "label", to_string( classify( problem, clone ).label ) },
             { "witness", witness },
             { "order", order },
             { "frozen", d.variables } };
  emit( o, out, j, plain );
  return ( o.exit_status && !d.answer ) ? exit_no : exit_ok;
}

int cmd_enum( const Options& o, std::ostream& out )
{
  const auto c = load_circuit( o.files.at( 0 ) );
  const auto clone = clone_of_circuits( { &c } );
  const auto in = [&]( CloneFamily f ) { return includes( CloneName{ f, 0 }, clone ); };
  const bool lex_ok = in( CloneFamily::M ) || in( CloneFamily::L );

  std::vector<Assignment> solutions;
  EnumerationStats stats;
  const SolutionSink sink = [&]( const Assignment& a ) { solutions.push_back( a ); };
  if ( o.order == "lex" )
  {
    if ( !lex_ok )
    {
      const auto v = classify( Problem::ENUM_LEX, clone );
      throw Unavailable( "lexicographic enumeration is not offered for clone " + clone.to_string() + " (" + to_string( v.label ) + "; " + v.trace +
                         ")" );
    }
    stats = enum_backtrack( c, sink );
  }
  else if ( lex_ok )
  {
    stats = enum_backtrack( c, sink );
  }
  else if ( in( CloneFamily::D ) || includes( CloneName{ CloneFamily::S0, 2 }, clone ) )
  {
    stats = enum_dual_pairing( c, sink );
  }
  else
  {
    stats = enum_bruteforce( c, sink );
  }

  json list = json::array();
  std::string plain;
  for ( const auto& a : solutions )
  {
    list.push_back( a.to_bits() );
    plain += a.to_bits() + "\n";
  }
  json j = { { "clone", clone.to_string() }, { "algorithm", to_string( stats.algorithm ) }, { "order", c.variables() }, { "solutions", list } };
  if ( o.stats )
  {
    j["stats"] = { { "solutions", stats.solutions() }, { "max_delay", stats.max_delay() }, { "delays", stats.delays } };
    plain += "# algorithm " + to_string( stats.algorithm ) + ", max delay " + std::to_string( stats.max_delay() ) + "\n";
  }
  return emit( o, out, j, plain );
}

GadgetInstance build_gadget( const Options& o )
{
  const auto& name = o.gadget;
  const auto one = [&] {
    need_files( o, 1, "gadget " + name );
    return load_circuit( o.files[0] );
  };
  const auto two = [&] {
    need_files( o, 2, "gadget " + name );
    return std::pair{ load_circuit( o.files[0] ), load_circuit( o.files[1] ) };
  };
  if ( name == "taut-to-eq" )
  {
    need_files( o, 1, "gadget " + name );
    return taut_to_eq( ThreeDnf::parse( read_file( o.files[0] ) ) );
  }
  if ( name == "eliminate-constant" )
  {
    const auto [a, b] = two();
    return eliminate_constant( a, b, o.value != 0 );
  }
  if ( name == "selfdual-eq" )
  {
    const auto [a, b] = two();
    return selfdual_eq_gadget( a, b );
  }
  if ( name == "selfdual-iso" )
  {
    const auto [a, b] = two();
    return selfdual_iso_gadget( a, b );
  }
  if ( name == "iso-restricted" )
  {
    const auto [a, b] = two();
    return iso_restricted( a, b );
  }
  if ( name == "eq-to-frozen" )
  {
    const auto [a, b] = two();
    return eq_to_frozen( a, b );
  }
  if ( name == "satp" )
  {
    const auto [a, b] = two();
    return satp_gadget( a, b, o.k );
  }
  if ( name == "satstar-chain" )
    return satstar_chain( one() );
  if ( name == "unsat-to-frozen" )
    return unsat_to_frozen( one() );
  if ( name == "satstar-to-efv" )
    return satstar_to_efv( one(), o.k );
  if ( name == "audit" )
    return audit_gadget( one(), o.k );
  if ( name == "usat-const-elim" )
    return usat_const_elim( one() );
  throw UsageError( "unknown gadget '" + name + "'" );
}

int cmd_gadget( const Options& o, std::ostream& out )
{
  const auto g = build_gadget( o );
  json circuits = json::array();
  std::string plain = "# claim: " + g.claim + "\n";
  for ( const auto& nc : g.circuits )
  {
    const auto text = print_circuit( nc.circuit );
    circuits.push_back( { { "name", nc.name }, { "variables", nc.circuit.num_variables() }, { "text", text } } );
    plain += "# " + nc.name + "\n" + text;
  }
  json j = { { "gadget", g.gadget }, { "claim", g.claim }, { "source", g.source }, { "circuits", circuits } };
  bool verified = true;
  if ( o.check )
  {
    verified = g.verify();
    j["verified"] = verified;
    plain += std::string( "# verified: " ) + ( verified ? "yes" : "no" ) + "\n";
  }
  emit( o, out, j, plain );
  return ( o.exit_status && !verified ) ? exit_no : exit_ok;
}

int cmd_lattice( const Options& o, std::ostream& out )
{
  if ( o.dot )
  {
    out << lattice_dot( o.max_n );
    return exit_ok;
  }
  json names = json::array();
  std::string plain;
  for ( const auto& c : all_clones( o.max_n ) )
  {
    names.push_back( c.to_string() );
    plain += c.to_string() + "\n";
  }
  return emit( o, out, { { "clones", names } }, plain );
}

int cmd_convert( const Options& o, std::ostream& out )
{
  const auto c = load_circuit( o.files.at( 0 ) );
  const auto target = parse_base( read_file( o.target ) );
  const auto converted = convert( c, target );
  const auto text = print_circuit( converted );
  return emit( o, out, { { "clone", clone_of_circuits( { &converted } ).to_string() }, { "circuit", text } }, text );
}

} // namespace

int run( std::span<const std::string> args, std::ostream& out, std::ostream& err )
{
  Options o;
  CLI::App app{ "Clone identification, complexity classification and solving for Boolean circuits over restricted bases", "postlab" };
  app.require_subcommand( 1 );
  app.fallthrough();
  app.add_flag( "--plain", o.plain, "Plain text instead of JSON" );
  app.add_flag( "--exit-status", o.exit_status, "Exit 1 when a decision answers no" );

  auto* clone_cmd = app.add_subcommand( "clone-of", "Clone generated by the circuit's base" );
  clone_cmd->add_option( "FILE", o.files, "Circuit file" )->required()->expected( 1 );

  auto* classify_cmd = app.add_subcommand( "classify", "Complexity of a problem for the circuit's base" );
  classify_cmd->add_option( "--problem,-p", o.problem, "SAT, SAT*, VAL, EQ, ISO, FV, EFV, AUDIT, USAT, ENUM, ENUM_LEX" )->required();
  classify_cmd->add_option( "FILE", o.files, "Circuit file" )->required()->expected( 1 );

  auto* solve_cmd = app.add_subcommand( "solve", "Decide a problem on the circuit (two files for EQ and ISO)" );
  solve_cmd->add_option( "--problem,-p", o.problem, "Problem name" )->required();
  solve_cmd->add_option( "--vars", o.vars, "Comma-separated variables for FV" );
  solve_cmd->add_option( "--assignment", o.assignment, "Bits in variable order for VAL" );
  solve_cmd->add_option( "FILES", o.files, "Circuit files" )->required();

  auto* enum_cmd = app.add_subcommand( "enum", "List all models" );
  enum_cmd->add_option( "--order", o.order, "lex or any" )->check( CLI::IsMember( { "lex", "any" } ) );
  enum_cmd->add_flag( "--stats", o.stats, "Report per-solution delays" );
  enum_cmd->add_option( "FILE", o.files, "Circuit file" )->required()->expected( 1 );

  auto* gadget_cmd = app.add_subcommand( "gadget", "Build a reduction gadget from source instances" );
  gadget_cmd->add_option( "NAME", o.gadget, "Gadget name" )->required()->check( CLI::IsMember( gadget_names() ) );
  gadget_cmd->add_option( "ARGS", o.files, "Source files: circuits, or a DNF file for taut-to-eq" );
  gadget_cmd->add_option( "--k", o.k, "Threshold for satp, satstar-to-efv and audit" );
  gadget_cmd->add_option( "--value", o.value, "Constant replaced by eliminate-constant" )->check( CLI::Range( 0, 1 ) );
  gadget_cmd->add_flag( "--check", o.check, "Verify the claim by brute force" );

  auto* lattice_cmd = app.add_subcommand( "lattice", "Clone list, or the covering graph with --dot" );
  lattice_cmd->add_flag( "--dot", o.dot, "DOT digraph" );
  lattice_cmd->add_option( "--max-n", o.max_n, "Largest degree of the parametric families" )->check( CLI::Range( 2u, 15u ) );

  auto* convert_cmd = app.add_subcommand( "convert", "Rewrite a circuit over another base" );
  convert_cmd->add_option( "--to", o.target, "File with base lines" )->required();
  convert_cmd->add_option( "FILE", o.files, "Circuit file" )->required()->expected( 1 );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( clone_cmd->parsed() )
      return cmd_clone_of( o, out );
    if ( classify_cmd->parsed() )
      return cmd_classify( o, out );
    if ( solve_cmd->parsed() )
      return cmd_solve( o, out );
    if ( enum_cmd->parsed() )
      return cmd_enum( o, out );
    if ( gadget_cmd->parsed() )
      return cmd_gadget( o, out );
    if ( lattice_cmd->parsed() )
      return cmd_lattice( o, out );
    if ( convert_cmd->parsed() )
      return cmd_convert( o, out );
  }
  catch ( const LimitExceeded& e )
  {
    err << "postlab: " << e.what() << '\n';
    return exit_limit;
  }
  catch ( const Unavailable& e )
  {
    err << "postlab: " << e.what() << '\n';
    return exit_limit;
  }
  catch ( const std::exception& e )
  {
    err << "postlab: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace postlab::cli
