#include "postlab/clones.hpp"

#include "postlab/closure.hpp"
#include "postlab/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

namespace postlab
{

namespace
{

enum Requirement : unsigned
{
  need_r0 = 1u << 0,
  need_r1 = 1u << 1,
  need_monotone = 1u << 2,
  need_self_dual = 1u << 3,
  need_affine = 1u << 4,
  need_or_shape = 1u << 5,
  need_and_shape = 1u << 6,
  need_unary_shape = 1u << 7,
  need_projection_shape = 1u << 8,
  need_sep0 = 1u << 9,
  need_sep1 = 1u << 10
};

constexpr unsigned need_r2 = need_r0 | need_r1;

struct FamilyRow
{
  CloneFamily family;
  std::string_view name;
  unsigned requirements;
};

// Membership predicates per row of the clone table; the degree of the
// separating families is supplied by the clone name.
constexpr std::array<FamilyRow, 38> family_rows{ {
    { CloneFamily::BF, "BF", 0u },
    { CloneFamily::R0, "R0", need_r0 },
    { CloneFamily::R1, "R1", need_r1 },
    { CloneFamily::R2, "R2", need_r2 },
    { CloneFamily::M, "M", need_monotone },
    { CloneFamily::M0, "M0", need_monotone | need_r0 },
    { CloneFamily::M1, "M1", need_monotone | need_r1 },
    { CloneFamily::M2, "M2", need_monotone | need_r2 },
    { CloneFamily::S0, "S0", need_sep0 },
    { CloneFamily::S02, "S02", need_sep0 | need_r2 },
    { CloneFamily::S01, "S01", need_sep0 | need_monotone },
    { CloneFamily::S00, "S00", need_sep0 | need_r2 | need_monotone },
    { CloneFamily::S1, "S1", need_sep1 },
    { CloneFamily::S12, "S12", need_sep1 | need_r2 },
    { CloneFamily::S11, "S11", need_sep1 | need_monotone },
    { CloneFamily::S10, "S10", need_sep1 | need_r2 | need_monotone },
    { CloneFamily::D, "D", need_self_dual },
    { CloneFamily::D1, "D1", need_self_dual | need_r2 },
    { CloneFamily::D2, "D2", need_self_dual | need_monotone },
    { CloneFamily::L, "L", need_affine },
    { CloneFamily::L0, "L0", need_affine | need_r0 },
    { CloneFamily::L1, "L1", need_affine | need_r1 },
    { CloneFamily::L2, "L2", need_affine | need_r2 },
    { CloneFamily::L3, "L3", need_affine | need_self_dual },
    { CloneFamily::V, "V", need_or_shape },
    { CloneFamily::V0, "V0", need_or_shape | need_r0 },
    { CloneFamily::V1, "V1", need_or_shape | need_r1 },
    { CloneFamily::V2, "V2", need_or_shape | need_r2 },
    { CloneFamily::E, "E", need_and_shape },
    { CloneFamily::E0, "E0", need_and_shape | need_r0 },
    { CloneFamily::E1, "E1", need_and_shape | need_r1 },
    { CloneFamily::E2, "E2", need_and_shape | need_r2 },
    { CloneFamily::N, "N", need_unary_shape },
    { CloneFamily::N2, "N2", need_unary_shape | need_self_dual },
    { CloneFamily::I, "I", need_projection_shape },
    { CloneFamily::I0, "I0", need_projection_shape | need_r0 },
    { CloneFamily::I1, "I1", need_projection_shape | need_r1 },
    { CloneFamily::I2, "I2", need_projection_shape | need_r2 },
} };

const FamilyRow& row_of( CloneFamily family )
{
  return family_rows[static_cast<std::size_t>( family )];
}

bool is_parametric( CloneFamily family )
{
  return ( row_of( family ).requirements & ( need_sep0 | need_sep1 ) ) != 0u;
}

/// Largest family degree with a representable standard base (t_n has arity n+1).
constexpr unsigned max_family_degree = TruthTable::max_arity - 1u;

bool separation_meets( const SeparationDegree& sep, unsigned degree )
{
  return degree == 0u ? sep.kind() == SeparationDegree::Kind::full : sep.at_least( degree );
}

PropertySignature meet( PropertySignature a, const PropertySignature& b )
{
  a.r0 = a.r0 && b.r0;
  a.r1 = a.r1 && b.r1;
  a.monotone = a.monotone && b.monotone;
  a.self_dual = a.self_dual && b.self_dual;
  a.affine = a.affine && b.affine;
  a.sep0 = std::min( a.sep0, b.sep0 );
  a.sep1 = std::min( a.sep1, b.sep1 );
  a.or_shape = a.or_shape && b.or_shape;
  a.and_shape = a.and_shape && b.and_shape;
  a.unary_shape = a.unary_shape && b.unary_shape;
  a.projection_shape = a.projection_shape && b.projection_shape;
  return a;
}

TruthTable formula3( const std::function<bool( bool, bool, bool )>& f )
{
  return TruthTable::from_index_function( 3, [&]( std::uint32_t i ) { return f( i & 1u, ( i >> 1 ) & 1u, ( i >> 2 ) & 1u ); } );
}

TruthTable formula2( const std::function<bool( bool, bool )>& f )
{
  return TruthTable::from_index_function( 2, [&]( std::uint32_t i ) { return f( i & 1u, ( i >> 1 ) & 1u ); } );
}

const PropertySignature& cached_base_signature( const CloneName& clone )
{
  static std::mutex mutex;
  static std::map<CloneName, PropertySignature> cache;
  std::lock_guard lock( mutex );
  auto it = cache.find( clone );
  if ( it == cache.end() )
  {
    const auto base = standard_base( clone );
    it = cache.emplace( clone, signature_of( base ) ).first;
  }
  return it->second;
}

} // namespace

CloneName CloneName::parse( std::string_view text )
{
  std::string_view head = text;
  std::string_view degree_text;
  if ( const auto caret = text.find( '^' ); caret != std::string_view::npos )
  {
    head = text.substr( 0, caret );
    degree_text = text.substr( caret + 1 );
  }
  for ( const auto& row : family_rows )
  {
    if ( row.name != head )
    {
      continue;
    }
    CloneName name{ row.family, 0u };
    if ( text.find( '^' ) == std::string_view::npos )
    {
      return name;
    }
    if ( !is_parametric( row.family ) )
    {
      throw InvalidArgument( "clone " + std::string( head ) + " takes no degree" );
    }
    if ( degree_text == "inf" )
    {
      return name;
    }
    unsigned degree = 0;
    const auto [ptr, ec] = std::from_chars( degree_text.data(), degree_text.data() + degree_text.size(), degree );
    if ( ec != std::errc{} || ptr != degree_text.data() + degree_text.size() || degree < 2u || degree > max_family_degree )
    {
      throw InvalidArgument( "clone degree must be an integer in 2.." + std::to_string( max_family_degree ) + ": '" +
                             std::string( text ) + "'" );
    }
    name.degree = degree;
    return name;
  }
  throw InvalidArgument( "unknown clone name '" + std::string( text ) + "'" );
}

std::string CloneName::to_string() const
{
  std::string s( row_of( family ).name );
  if ( degree != 0u )
  {
    s += "^" + std::to_string( degree );
  }
  return s;
}

bool CloneName::is_parametric_family() const noexcept
{
  return is_parametric( family );
}

PropertySignature signature_of( const TruthTable& f )
{
  PropertySignature s;
  s.r0 = is_reproducing( f, false );
  s.r1 = is_reproducing( f, true );
  s.monotone = is_monotone( f );
  s.self_dual = is_self_dual( f );
  s.affine = is_affine( f );
  s.sep0 = separation_degree( f, false );
  s.sep1 = separation_degree( f, true );
  const auto shape = shape_predicates( f );
  s.or_shape = shape.is_or_function;
  s.and_shape = shape.is_and_function;
  const bool constant = shape.is_constant_0 || shape.is_constant_1;
  s.unary_shape = constant || shape.essentially_unary_projection || shape.essentially_unary_negation;
  s.projection_shape = constant || shape.essentially_unary_projection;
  return s;
}

PropertySignature signature_of( std::span<const TruthTable> base )
{
  PropertySignature s;
  for ( const auto& f : base )
  {
    s = meet( s, signature_of( f ) );
  }
  return s;
}

bool satisfies( const PropertySignature& sig, const CloneName& clone )
{
  const auto req = row_of( clone.family ).requirements;
  const auto holds = [&]( unsigned flag, bool value ) { return !( req & flag ) || value; };
  return holds( need_r0, sig.r0 ) && holds( need_r1, sig.r1 ) && holds( need_monotone, sig.monotone ) &&
         holds( need_self_dual, sig.self_dual ) && holds( need_affine, sig.affine ) &&
         holds( need_or_shape, sig.or_shape ) && holds( need_and_shape, sig.and_shape ) &&
         holds( need_unary_shape, sig.unary_shape ) && holds( need_projection_shape, sig.projection_shape ) &&
         holds( need_sep0, separation_meets( sig.sep0, clone.degree ) ) &&
         holds( need_sep1, separation_meets( sig.sep1, clone.degree ) );
}

bool is_member( const TruthTable& f, const CloneName& clone )
{
  return satisfies( signature_of( f ), clone );
}

bool includes( const CloneName& outer, const CloneName& inner )
{
  return satisfies( cached_base_signature( inner ), outer );
}

CloneName clone_of( std::span<const TruthTable> base )
{
  const auto sig = signature_of( base );
  std::vector<CloneName> candidates;
  for ( const auto& row : family_rows )
  {
    CloneName name{ row.family, 0u };
    if ( row.requirements & ( need_sep0 | need_sep1 ) )
    {
      const auto& sep = ( row.requirements & need_sep0 ) ? sig.sep0 : sig.sep1;
      if ( sep.kind() == SeparationDegree::Kind::not_separating )
      {
        continue;
      }
      name.degree = sep.kind() == SeparationDegree::Kind::full ? 0u : sep.k();
    }
    if ( satisfies( sig, name ) )
    {
      candidates.push_back( name );
    }
  }
  for ( const auto& c : candidates )
  {
    if ( std::all_of( candidates.begin(), candidates.end(), [&]( const CloneName& o ) { return includes( o, c ); } ) )
    {
      return c;
    }
  }
  throw std::logic_error( "clone_of: no least clone among the candidates" );
}

std::vector<TruthTable> standard_base( const CloneName& clone )
{
  using namespace fn;
  if ( clone.degree > max_family_degree || ( clone.degree == 1u ) || ( clone.degree != 0u && !clone.is_parametric_family() ) )
  {
    throw InvalidArgument( "no standard base for " + clone.to_string() );
  }
  const auto n = clone.degree;
  const auto c0 = constant( false );
  const auto c1 = constant( true );
  const auto and2 = conjunction();
  const auto or2 = disjunction();
  const auto xnor = formula2( []( bool x, bool y ) { return x == y; } );
  const auto and_not = formula2( []( bool x, bool y ) { return x && !y; } );
  const auto or_and = formula3( []( bool x, bool y, bool z ) { return x || ( y && z ); } );
  const auto and_or = formula3( []( bool x, bool y, bool z ) { return x && ( y || z ); } );
  auto thr = [&] { return threshold( n ); };
  auto dual_thr = [&] { return dual( threshold( n ) ); };

  switch ( clone.family )
  {
  case CloneFamily::BF:
    return { and2, negation() };
  case CloneFamily::R0:
    return { and2, parity() };
  case CloneFamily::R1:
    return { or2, formula2( []( bool x, bool y ) { return !( x != y ); } ) };
  case CloneFamily::R2:
    return { or2, formula3( []( bool x, bool y, bool z ) { return x && ( y == z ); } ) };
  case CloneFamily::M:
    return { and2, or2, c0, c1 };
  case CloneFamily::M1:
    return { and2, or2, c1 };
  case CloneFamily::M0:
    return { and2, or2, c0 };
  case CloneFamily::M2:
    return { and2, or2 };
  case CloneFamily::S0:
    if ( n == 0u )
      return { implication() };
    return { implication(), dual_thr() };
  case CloneFamily::S1:
    if ( n == 0u )
      return { and_not };
    return { and_not, thr() };
  case CloneFamily::S02:
  {
    const auto g = formula3( []( bool x, bool y, bool z ) { return x || ( y && !z ); } );
    if ( n == 0u )
      return { g };
    return { g, dual_thr() };
  }
  case CloneFamily::S01:
    if ( n == 0u )
      return { or_and, c1 };
    return { dual_thr(), c1 };
  case CloneFamily::S00:
    if ( n == 0u )
      return { or_and };
    return { or_and, dual_thr() };
  case CloneFamily::S12:
  {
    const auto g = formula3( []( bool x, bool y, bool z ) { return x && ( y || !z ); } );
    if ( n == 0u )
      return { g };
    return { g, thr() };
  }
  case CloneFamily::S11:
    if ( n == 0u )
      return { and_or, c0 };
    return { thr(), c0 };
  case CloneFamily::S10:
    if ( n == 0u )
      return { and_or };
    return { and_or, thr() };
  case CloneFamily::D:
    return { formula3( []( bool x, bool y, bool z ) { return ( x && !y ) || ( x && !z ) || ( !y && !z ); } ) };
  case CloneFamily::D1:
    return { formula3( []( bool x, bool y, bool z ) { return ( x && y ) || ( x && !z ) || ( y && !z ); } ) };
  case CloneFamily::D2:
    return { threshold( 2 ) };
  case CloneFamily::L:
    return { parity(), c1 };
  case CloneFamily::L0:
    return { parity() };
  case CloneFamily::L1:
    return { xnor };
  case CloneFamily::L2:
    return { parity( 3 ) };
  case CloneFamily::L3:
    return { formula3( []( bool x, bool y, bool z ) { return !( ( x != y ) != z ); } ) };
  case CloneFamily::V:
    return { or2, c0, c1 };
  case CloneFamily::V0:
    return { or2, c0 };
  case CloneFamily::V1:
    return { or2, c1 };
  case CloneFamily::V2:
    return { or2 };
  case CloneFamily::E:
    return { and2, c0, c1 };
  case CloneFamily::E0:
    return { and2, c0 };
  case CloneFamily::E1:
    return { and2, c1 };
  case CloneFamily::E2:
    return { and2 };
  case CloneFamily::N:
    return { negation(), c1 };
  case CloneFamily::N2:
    return { negation() };
  case CloneFamily::I:
    return { projection( 1, 0 ), c0, c1 };
  case CloneFamily::I0:
    return { projection( 1, 0 ), c0 };
  case CloneFamily::I1:
    return { projection( 1, 0 ), c1 };
  case CloneFamily::I2:
    return { projection( 1, 0 ) };
  }
  throw std::logic_error( "standard_base: unhandled family" );
}

CloneName join_with_constant( const CloneName& clone, bool c )
{
  auto base = standard_base( clone );
  base.push_back( fn::constant( c ) );
  return clone_of( base );
}

CloneName dual_clone( const CloneName& clone )
{
  auto base = standard_base( clone );
  for ( auto& f : base )
  {
    f = dual( f );
  }
  return clone_of( base );
}

std::optional<unsigned> threshold_in_clone( const CloneName& clone )
{
  for ( unsigned k = 2; k <= max_family_degree; ++k )
  {
    if ( is_member( fn::threshold( k ), clone ) )
    {
      return k;
    }
  }
  return std::nullopt;
}

std::set<TruthTable> closure_oracle( std::span<const TruthTable> base, unsigned arity )
{
  if ( arity > 4u )
  {
    throw InvalidArgument( "closure_oracle supports arity <= 4" );
  }
  const auto result = detail::explore_closure( base, arity );
  std::set<TruthTable> members;
  for ( const auto bits : result.members )
  {
    members.insert( detail::unpack_table( arity, bits ) );
  }
  return members;
}

std::vector<CloneName> all_clones( unsigned max_degree )
{
  max_degree = std::min( max_degree, max_family_degree );
  std::vector<CloneName> names;
  for ( const auto& row : family_rows )
  {
    if ( is_parametric( row.family ) )
    {
      for ( unsigned n = 2; n <= max_degree; ++n )
      {
        names.push_back( { row.family, n } );
      }
    }
    names.push_back( { row.family, 0u } );
  }
  return names;
}

std::string lattice_dot( unsigned max_degree )
{
  const auto names = all_clones( max_degree );
  const auto count = names.size();
  std::vector<std::vector<bool>> below( count, std::vector<bool>( count, false ) );
  for ( std::size_t i = 0; i < count; ++i )
  {
    for ( std::size_t j = 0; j < count; ++j )
    {
      below[i][j] = i != j && includes( names[j], names[i] );
    }
  }
  std::ostringstream out;
  out << "digraph clones {\n  rankdir=BT;\n";
  for ( const auto& n : names )
  {
    out << "  \"" << n.to_string() << "\";\n";
  }
  for ( std::size_t i = 0; i < count; ++i )
  {
    for ( std::size_t j = 0; j < count; ++j )
    {
      if ( !below[i][j] )
      {
        continue;
      }
      bool covering = true;
      for ( std::size_t k = 0; k < count && covering; ++k )
      {
        covering = !( below[i][k] && below[k][j] );
      }
      if ( covering )
      {
        out << "  \"" << names[i].to_string() << "\" -> \"" << names[j].to_string() << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace detail
{

std::uint32_t pack_table( const TruthTable& t )
{
  if ( t.arity() > 5u )
  {
    throw ArityError( "pack_table supports arity <= 5" );
  }
  return static_cast<std::uint32_t>( t.low_word() );
}

TruthTable unpack_table( unsigned arity, std::uint32_t bits )
{
  return TruthTable::from_bits( arity, bits );
}

ClosureResult explore_closure( std::span<const TruthTable> base, unsigned arity, std::optional<std::uint32_t> target )
{
  if ( arity > 4u )
  {
    throw InvalidArgument( "closure computation supports arity <= 4" );
  }
  ClosureResult result;
  result.arity = arity;
  const unsigned points = 1u << arity;
  const std::uint32_t full = points == 32u ? ~std::uint32_t{ 0 } : ( ( std::uint32_t{ 1 } << points ) - 1u );
  const std::uint64_t universe = std::uint64_t{ 1 } << points;

  auto add = [&]( std::uint32_t table, ClosureStep step ) {
    if ( result.parents.emplace( table, std::move( step ) ).second )
    {
      result.members.push_back( table );
      if ( target && *target == table )
      {
        result.target_found = true;
      }
    }
  };

  for ( unsigned i = 0; i < arity; ++i )
  {
    std::uint32_t table = 0;
    for ( unsigned p = 0; p < points; ++p )
    {
      table |= ( ( p >> i ) & 1u ) << p;
    }
    add( table, ClosureStep{ ClosureStep::projection, { i } } );
  }
  for ( std::size_t f = 0; f < base.size(); ++f )
  {
    if ( base[f].arity() == 0u )
    {
      add( base[f].bit( 0 ) ? full : 0u, ClosureStep{ f, {} } );
    }
  }

  std::uint64_t work = 0;
  std::size_t frontier_begin = 0;
  std::vector<std::size_t> tuple;
  while ( !result.target_found && frontier_begin < result.members.size() && result.members.size() < universe )
  {
    const std::size_t end = result.members.size();
    for ( std::size_t f = 0; f < base.size() && !result.target_found; ++f )
    {
      const auto& fn = base[f];
      const unsigned m = fn.arity();
      if ( m == 0u )
      {
        continue;
      }
      // Tuples whose first frontier member sits at position `lead`.
      for ( unsigned lead = 0; lead < m && !result.target_found; ++lead )
      {
        if ( lead > 0u && frontier_begin == 0u )
        {
          break;
        }
        tuple.assign( m, 0u );
        tuple[lead] = frontier_begin;
        const auto lower = [&]( unsigned pos ) { return pos == lead ? frontier_begin : std::size_t{ 0 }; };
        const auto upper = [&]( unsigned pos ) { return pos < lead ? frontier_begin : end; };
        bool done = false;
        while ( !done && !result.target_found )
        {
          if ( ++work > closure_work_limit )
          {
            throw LimitExceeded( "closure computation exceeded its work budget" );
          }
          std::uint32_t table = 0;
          for ( unsigned p = 0; p < points; ++p )
          {
            std::uint32_t index = 0;
            for ( unsigned j = 0; j < m; ++j )
            {
              index |= ( ( result.members[tuple[j]] >> p ) & 1u ) << j;
            }
            table |= static_cast<std::uint32_t>( fn.bit( index ) ) << p;
          }
          if ( !result.parents.contains( table ) )
          {
            ClosureStep step{ f, {} };
            step.children.reserve( m );
            for ( unsigned j = 0; j < m; ++j )
            {
              step.children.push_back( result.members[tuple[j]] );
            }
            add( table, std::move( step ) );
          }
          unsigned pos = 0;
          for ( ; pos < m; ++pos )
          {
            if ( ++tuple[pos] < upper( pos ) )
            {
              break;
            }
            tuple[pos] = lower( pos );
          }
          done = pos == m;
        }
      }
    }
    frontier_begin = end;
  }
  return result;
}

} // namespace detail

} // namespace postlab
