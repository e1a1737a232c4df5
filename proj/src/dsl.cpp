#include "postlab/dsl.hpp"

#include "postlab/error.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace postlab
{

namespace
{

bool is_ident_start( char c )
{
  return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
}

bool is_ident_char( char c )
{
  return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
}

const std::set<std::string_view> keywords{ "base", "input", "output" };

/// Position within one source line; columns count code points from 1.
class Cursor
{
public:
  Cursor( std::string_view text, std::size_t line ) : text_( text ), line_( line ) {}

  std::size_t line() const noexcept { return line_; }

  std::size_t column() const noexcept { return column_at( pos_ ); }

  std::size_t column_at( std::size_t pos ) const noexcept
  {
    std::size_t col = 1;
    for ( std::size_t i = 0; i < pos && i < text_.size(); ++i )
    {
      if ( ( static_cast<unsigned char>( text_[i] ) & 0xC0u ) != 0x80u )
      {
        ++col;
      }
    }
    return col;
  }

  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool at_end()
  {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool accept( std::string_view token )
  {
    skip_ws();
    if ( text_.substr( pos_ ).starts_with( token ) )
    {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect( std::string_view token )
  {
    if ( !accept( token ) )
    {
      fail( ParseErrorKind::syntax, "expected '" + std::string( token ) + "'" );
    }
  }

  std::optional<std::string> identifier()
  {
    skip_ws();
    if ( pos_ >= text_.size() || !is_ident_start( text_[pos_] ) )
    {
      return std::nullopt;
    }
    const auto start = pos_;
    while ( pos_ < text_.size() && is_ident_char( text_[pos_] ) )
    {
      ++pos_;
    }
    return std::string( text_.substr( start, pos_ - start ) );
  }

  std::string expect_identifier( std::string_view what )
  {
    auto id = identifier();
    if ( !id )
    {
      fail( ParseErrorKind::syntax, "expected " + std::string( what ) );
    }
    return *id;
  }

  std::size_t position() const noexcept { return pos_; }
  void set_position( std::size_t pos ) noexcept { pos_ = pos; }
  std::string_view rest() const noexcept { return text_.substr( pos_ ); }

  [[noreturn]] void fail( ParseErrorKind kind, const std::string& message ) const { fail_at( pos_, kind, message ); }

  [[noreturn]] void fail_at( std::size_t pos, ParseErrorKind kind, const std::string& message ) const
  {
    throw ParseError( kind, line_, column_at( pos ), message );
  }

  void expect_end()
  {
    if ( !at_end() )
    {
      fail( ParseErrorKind::syntax, "unexpected trailing text" );
    }
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

/// Recursive descent over formulas; each subformula is an 8-bit mask over the (x, y, z) assignments.
class FormulaParser
{
public:
  explicit FormulaParser( Cursor& cursor ) : cur_( cursor ) {}

  TruthTable parse()
  {
    const auto mask = equivalence();
    const auto arity = highest_;
    const auto bits = std::size_t{ 1 } << arity;
    return TruthTable::from_bits( arity, mask & ( bits == 8u ? 0xFFu : ( ( 1u << bits ) - 1u ) ) );
  }

private:
  std::uint32_t equivalence()
  {
    auto lhs = implication();
    while ( cur_.accept( "↔" ) || cur_.accept( "<->" ) )
    {
      lhs = ~( lhs ^ implication() ) & 0xFFu;
    }
    return lhs;
  }

  std::uint32_t implication()
  {
    const auto lhs = disjunction();
    if ( cur_.accept( "→" ) || cur_.accept( "->" ) )
    {
      return ( ~lhs | implication() ) & 0xFFu;
    }
    return lhs;
  }

  std::uint32_t disjunction()
  {
    auto lhs = exclusive();
    while ( cur_.accept( "∨" ) || cur_.accept( "|" ) )
    {
      lhs |= exclusive();
    }
    return lhs;
  }

  std::uint32_t exclusive()
  {
    auto lhs = conjunction();
    while ( cur_.accept( "⊕" ) || cur_.accept( "^" ) )
    {
      lhs ^= conjunction();
    }
    return lhs;
  }

  std::uint32_t conjunction()
  {
    auto lhs = negation();
    while ( cur_.accept( "∧" ) || cur_.accept( "&" ) )
    {
      lhs &= negation();
    }
    return lhs;
  }

  std::uint32_t negation()
  {
    if ( cur_.accept( "¬" ) || cur_.accept( "!" ) || cur_.accept( "~" ) )
    {
      return ~negation() & 0xFFu;
    }
    return atom();
  }

  std::uint32_t atom()
  {
    if ( cur_.accept( "(" ) )
    {
      const auto inner = equivalence();
      cur_.expect( ")" );
      return inner;
    }
    if ( cur_.accept( "0" ) )
    {
      return 0u;
    }
    if ( cur_.accept( "1" ) )
    {
      return 0xFFu;
    }
    const auto start = cur_.position();
    const auto id = cur_.identifier();
    if ( id == "x" )
    {
      highest_ = std::max( highest_, 1u );
      return 0xAAu;
    }
    if ( id == "y" )
    {
      highest_ = std::max( highest_, 2u );
      return 0xCCu;
    }
    if ( id == "z" )
    {
      highest_ = std::max( highest_, 3u );
      return 0xF0u;
    }
    if ( id )
    {
      cur_.fail_at( start, ParseErrorKind::syntax, "formula variables are x, y and z, not '" + *id + "'" );
    }
    cur_.fail( ParseErrorKind::syntax, "expected a formula operand" );
  }

  Cursor& cur_;
  unsigned highest_ = 0;
};

struct Line
{
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines( std::string_view text )
{
  std::vector<Line> lines;
  std::size_t number = 1;
  while ( true )
  {
    const auto nl = text.find( '\n' );
    auto line = text.substr( 0, nl );
    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    if ( !line.empty() && line.back() == '\r' )
    {
      line.remove_suffix( 1 );
    }
    lines.push_back( { number, line } );
    if ( nl == std::string_view::npos )
    {
      break;
    }
    text.remove_prefix( nl + 1 );
    ++number;
  }
  return lines;
}

bool blank( std::string_view line )
{
  for ( const auto c : line )
  {
    if ( !std::isspace( static_cast<unsigned char>( c ) ) )
    {
      return false;
    }
  }
  return true;
}

TruthTable parse_function_body( Cursor& cur )
{
  cur.skip_ws();
  const auto rest = cur.rest();
  if ( rest.starts_with( "tt" ) && ( rest.size() == 2u || !is_ident_char( rest[2] ) ) )
  {
    const auto start = cur.position();
    try
    {
      auto table = TruthTable::parse_literal( rest );
      cur.set_position( start + rest.size() );
      return table;
    }
    catch ( const ArityError& e )
    {
      cur.fail_at( start, ParseErrorKind::arity_mismatch, e.what() );
    }
    catch ( const Error& e )
    {
      cur.fail_at( start, ParseErrorKind::syntax, e.what() );
    }
  }
  FormulaParser parser( cur );
  auto table = parser.parse();
  cur.expect_end();
  return table;
}

/// `base NAME = body` with the keyword already consumed.
BaseFunction parse_base_line( Cursor& cur )
{
  auto name = cur.expect_identifier( "a base function name" );
  cur.expect( "=" );
  return { std::move( name ), parse_function_body( cur ) };
}

} // namespace

TruthTable compile_formula( std::string_view formula )
{
  Cursor cur( formula, 1 );
  return parse_function_body( cur );
}

Base parse_base( std::string_view text )
{
  Base base;
  for ( const auto& line : split_lines( text ) )
  {
    if ( blank( line.text ) )
    {
      continue;
    }
    Cursor cur( line.text, line.number );
    const auto start = ( cur.skip_ws(), cur.position() );
    if ( cur.identifier() != "base" )
    {
      cur.fail_at( start, ParseErrorKind::syntax, "expected a 'base' line" );
    }
    const auto name_pos = ( cur.skip_ws(), cur.position() );
    auto f = parse_base_line( cur );
    if ( base.find( f.name ) )
    {
      cur.fail_at( name_pos, ParseErrorKind::duplicate_definition, "base function '" + f.name + "' defined twice" );
    }
    base.add( std::move( f.name ), std::move( f.table ) );
  }
  return base;
}

Circuit parse_circuit( std::string_view text )
{
  const auto lines = split_lines( text );

  // Names defined anywhere in the file, to tell forward references from undeclared names.
  std::set<std::string> later_names;
  for ( const auto& line : lines )
  {
    Cursor cur( line.text, line.number );
    auto first = cur.identifier();
    if ( !first )
    {
      continue;
    }
    if ( *first == "base" )
    {
      if ( auto name = cur.identifier() )
      {
        later_names.insert( *name );
      }
    }
    else if ( *first == "input" )
    {
      while ( auto name = cur.identifier() )
      {
        later_names.insert( *name );
      }
    }
    else if ( *first != "output" )
    {
      later_names.insert( *first );
    }
  }

  Circuit circuit;
  std::map<std::string, std::size_t, std::less<>> gate_of_name;
  std::optional<std::pair<std::string, std::pair<std::size_t, std::size_t>>> output_ref;  // name, (line, column)

  auto undefined = [&]( Cursor& cur, std::size_t pos, const std::string& name, std::string_view what ) {
    if ( later_names.contains( name ) )
    {
      cur.fail_at( pos, ParseErrorKind::forward_reference,
                   std::string( what ) + " '" + name + "' is used before its definition" );
    }
    cur.fail_at( pos, ParseErrorKind::undeclared_identifier, "undeclared " + std::string( what ) + " '" + name + "'" );
  };
  auto check_fresh = [&]( Cursor& cur, std::size_t pos, const std::string& name ) {
    if ( keywords.contains( name ) )
    {
      cur.fail_at( pos, ParseErrorKind::syntax, "'" + name + "' is a reserved word" );
    }
    if ( gate_of_name.contains( name ) )
    {
      cur.fail_at( pos, ParseErrorKind::duplicate_definition, "'" + name + "' is already defined" );
    }
  };

  for ( const auto& line : lines )
  {
    if ( blank( line.text ) )
    {
      continue;
    }
    Cursor cur( line.text, line.number );
    cur.skip_ws();
    const auto start = cur.position();
    const auto first = cur.identifier();
    if ( !first )
    {
      cur.fail( ParseErrorKind::syntax, "expected 'base', 'input', 'output' or a gate definition" );
    }
    if ( *first == "base" )
    {
      const auto name_pos = ( cur.skip_ws(), cur.position() );
      auto f = parse_base_line( cur );
      if ( circuit.base().find( f.name ) )
      {
        cur.fail_at( name_pos, ParseErrorKind::duplicate_definition, "base function '" + f.name + "' defined twice" );
      }
      circuit.add_function( std::move( f.name ), std::move( f.table ) );
      continue;
    }
    if ( *first == "input" )
    {
      bool any = false;
      while ( true )
      {
        cur.skip_ws();
        const auto pos = cur.position();
        auto name = cur.identifier();
        if ( !name )
        {
          break;
        }
        any = true;
        check_fresh( cur, pos, *name );
        gate_of_name.emplace( *name, circuit.add_variable( *name ) );
        cur.accept( "," );
      }
      if ( !any )
      {
        cur.fail( ParseErrorKind::syntax, "expected variable names after 'input'" );
      }
      cur.expect_end();
      continue;
    }
    if ( *first == "output" )
    {
      cur.skip_ws();
      const auto pos = cur.position();
      if ( output_ref )
      {
        cur.fail_at( start, ParseErrorKind::duplicate_definition, "more than one output line" );
      }
      auto name = cur.expect_identifier( "an output gate" );
      cur.expect_end();
      output_ref = { name, { line.number, cur.column_at( pos ) } };
      continue;
    }

    // Gate definition.
    const auto& name = *first;
    check_fresh( cur, start, name );
    cur.expect( "=" );
    cur.skip_ws();
    const auto fn_pos = cur.position();
    const auto fn_name = cur.expect_identifier( "a base function name" );
    const auto function = circuit.base().find( fn_name );
    if ( !function )
    {
      undefined( cur, fn_pos, fn_name, "base function" );
    }
    cur.expect( "(" );
    std::vector<std::size_t> children;
    if ( !cur.accept( ")" ) )
    {
      while ( true )
      {
        cur.skip_ws();
        const auto arg_pos = cur.position();
        const auto arg = cur.expect_identifier( "a gate or variable name" );
        const auto it = gate_of_name.find( arg );
        if ( it == gate_of_name.end() )
        {
          if ( arg == name )
          {
            cur.fail_at( arg_pos, ParseErrorKind::forward_reference, "gate '" + name + "' refers to itself" );
          }
          undefined( cur, arg_pos, arg, "name" );
        }
        children.push_back( it->second );
        if ( cur.accept( ")" ) )
        {
          break;
        }
        cur.expect( "," );
      }
    }
    cur.expect_end();
    const auto arity = circuit.base()[*function].table.arity();
    if ( children.size() != arity )
    {
      cur.fail_at( fn_pos, ParseErrorKind::arity_mismatch,
                   "'" + fn_name + "' takes " + std::to_string( arity ) + " arguments, got " +
                       std::to_string( children.size() ) );
    }
    gate_of_name.emplace( name, circuit.apply( *function, std::move( children ) ) );
  }

  if ( !output_ref )
  {
    throw ParseError( ParseErrorKind::missing_output, lines.size(), 1, "no 'output' line" );
  }
  const auto it = gate_of_name.find( output_ref->first );
  if ( it == gate_of_name.end() )
  {
    throw ParseError( ParseErrorKind::undeclared_identifier, output_ref->second.first, output_ref->second.second,
                      "output refers to undeclared name '" + output_ref->first + "'" );
  }
  circuit.set_output( it->second );
  return circuit;
}

std::string print_circuit( const Circuit& circuit )
{
  const auto canon = circuit.canonical();
  std::set<std::string> taken( canon.variables().begin(), canon.variables().end() );
  for ( const auto& f : canon.base() )
  {
    taken.insert( f.name );
  }
  std::string prefix = "g";
  auto clashes = [&] {
    for ( std::size_t g = 0; g < canon.gates().size(); ++g )
    {
      if ( taken.contains( prefix + std::to_string( g ) ) )
      {
        return true;
      }
    }
    return false;
  };
  while ( clashes() )
  {
    prefix = "_" + prefix;
  }
  auto gate_name = [&]( std::size_t g ) {
    const auto& gate = canon.gates()[g];
    return gate.kind == Gate::Kind::input ? canon.variables()[gate.variable] : prefix + std::to_string( g );
  };

  std::ostringstream out;
  for ( const auto& f : canon.base() )
  {
    out << "base " << f.name << " = " << f.table.to_literal() << "\n";
  }
  if ( canon.num_variables() > 0u )
  {
    out << "input";
    for ( const auto& v : canon.variables() )
    {
      out << " " << v;
    }
    out << "\n";
  }
  for ( std::size_t g = 0; g < canon.gates().size(); ++g )
  {
    const auto& gate = canon.gates()[g];
    if ( gate.kind == Gate::Kind::input )
    {
      continue;
    }
    out << gate_name( g ) << " = " << canon.base()[gate.function].name << "(";
    for ( std::size_t j = 0; j < gate.children.size(); ++j )
    {
      out << ( j ? ", " : "" ) << gate_name( gate.children[j] );
    }
    out << ")\n";
  }
  out << "output " << gate_name( canon.output() ) << "\n";
  return out.str();
}

} // namespace postlab
