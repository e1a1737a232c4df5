#include "postlab/decide.hpp"

#include "postlab/error.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <numeric>

namespace postlab
{

namespace
{

using Bits = std::vector<std::uint8_t>;

const CloneName clone_V{ CloneFamily::V, 0 };
const CloneName clone_E{ CloneFamily::E, 0 };
const CloneName clone_L{ CloneFamily::L, 0 };
const CloneName clone_M{ CloneFamily::M, 0 };
const CloneName clone_D{ CloneFamily::D, 0 };
const CloneName clone_R1{ CloneFamily::R1, 0 };
const CloneName clone_S1{ CloneFamily::S1, 0 };
const CloneName clone_S0_2{ CloneFamily::S0, 2 };

CloneName circuit_clone( const Circuit& c )
{
  return clone_of( c.base().tables() );
}

bool within( const CloneName& inner, const CloneName& outer )
{
  return includes( outer, inner );
}

Bits constant_bits( std::size_t n, bool v )
{
  return Bits( n, v ? 1u : 0u );
}

Bits unit( std::size_t n, std::size_t i )
{
  auto b = constant_bits( n, false );
  b[i] = 1u;
  return b;
}

Bits single_zero( std::size_t n, std::size_t i )
{
  auto b = constant_bits( n, true );
  b[i] = 0u;
  return b;
}

Decision decided( bool answer, Method method )
{
  Decision d;
  d.answer = answer;
  d.method = method;
  return d;
}

std::vector<std::string> union_variables( const Circuit& a, const Circuit& b )
{
  auto vars = a.variables();
  for ( const auto& v : b.variables() )
  {
    if ( std::find( vars.begin(), vars.end(), v ) == vars.end() )
    {
      vars.push_back( v );
    }
  }
  return vars;
}

/// Coefficients of `form` (over `c`'s variables) re-indexed by `vars`; absent variables get 0.
NormalForm aligned_form( const Circuit& c, NormalForm::Kind kind, const std::vector<std::string>& vars )
{
  const auto own = normal_form( c, kind );
  NormalForm out{ own.kind, own.a0, Bits( vars.size(), 0u ) };
  for ( std::size_t i = 0; i < vars.size(); ++i )
  {
    if ( const auto j = c.variable_index( vars[i] ) )
    {
      out.coeffs[i] = own.coeffs[*j];
    }
  }
  return out;
}

std::optional<NormalForm::Kind> form_kind_for( const CloneName& clone )
{
  if ( within( clone, clone_V ) )
    return NormalForm::Kind::OrForm;
  if ( within( clone, clone_E ) )
    return NormalForm::Kind::AndForm;
  if ( within( clone, clone_L ) )
    return NormalForm::Kind::XorForm;
  return std::nullopt;
}

CloneName joint_clone( const Circuit& a, const Circuit& b )
{
  auto tables = a.base().tables();
  const auto more = b.base().tables();
  tables.insert( tables.end(), more.begin(), more.end() );
  return clone_of( tables );
}

/// Model of a satisfiable affine form with some coefficient or a0 set.
Bits affine_model( const NormalForm& f )
{
  const auto n = f.coeffs.size();
  if ( f.a0 )
  {
    return constant_bits( n, false );
  }
  const auto j = static_cast<std::size_t>( std::find( f.coeffs.begin(), f.coeffs.end(), 1u ) - f.coeffs.begin() );
  return unit( n, j );
}

bool affine_satisfiable( const NormalForm& f )
{
  return f.a0 || f.weight() > 0u;
}

struct BruteFacts
{
  ModelSet models;
  std::optional<std::uint64_t> first;
  /// Per variable: value in the first model, and whether some model disagrees (index of one).
  std::vector<std::optional<std::uint64_t>> disagreeing;
};

BruteFacts brute_facts( const Circuit& c )
{
  BruteFacts facts{ model_set( c ), std::nullopt, {} };
  const auto n = c.num_variables();
  facts.first = facts.models.next( 0 );
  facts.disagreeing.assign( n, std::nullopt );
  if ( !facts.first )
  {
    return facts;
  }
  const auto f = *facts.first;
  std::size_t open = n;
  for ( auto m = facts.models.next( f ); m && open > 0u; m = facts.models.next( *m + 1u ) )
  {
    const auto diff = *m ^ f;
    for ( std::size_t i = 0; i < n; ++i )
    {
      if ( !facts.disagreeing[i] && ( ( diff >> ( n - 1u - i ) ) & 1u ) )
      {
        facts.disagreeing[i] = *m;
        --open;
      }
    }
  }
  return facts;
}

void add_witness( Decision& d, const Circuit& c, const Bits& bits )
{
  d.witness.push_back( c.make_assignment( bits ) );
}

std::vector<std::size_t> resolve_variables( const Circuit& c, std::span<const std::string> names, bool& all_known )
{
  std::vector<std::size_t> out;
  all_known = true;
  for ( const auto& name : names )
  {
    if ( const auto i = c.variable_index( name ) )
    {
      out.push_back( *i );
    }
    else
    {
      all_known = false;
    }
  }
  return out;
}

} // namespace

bool NormalForm::evaluate( std::span<const std::uint8_t> bits ) const
{
  if ( bits.size() != coeffs.size() )
  {
    throw ArityError( "normal form over " + std::to_string( coeffs.size() ) + " variables evaluated at " +
                      std::to_string( bits.size() ) + " bits" );
  }
  switch ( kind )
  {
  case Kind::OrForm:
  {
    bool v = a0;
    for ( std::size_t i = 0; i < bits.size(); ++i )
      v = v || ( coeffs[i] && bits[i] );
    return v;
  }
  case Kind::AndForm:
  {
    bool v = a0;
    for ( std::size_t i = 0; i < bits.size(); ++i )
      v = v && ( !coeffs[i] || bits[i] );
    return v;
  }
  case Kind::XorForm:
  {
    bool v = a0;
    for ( std::size_t i = 0; i < bits.size(); ++i )
      v = v != ( coeffs[i] && bits[i] );
    return v;
  }
  }
  return false;
}

std::size_t NormalForm::weight() const
{
  return static_cast<std::size_t>( std::count( coeffs.begin(), coeffs.end(), 1u ) );
}

bool NormalForm::absorbing() const
{
  return ( kind == Kind::OrForm && a0 ) || ( kind == Kind::AndForm && !a0 );
}

std::string to_string( NormalForm::Kind kind )
{
  switch ( kind )
  {
  case NormalForm::Kind::OrForm: return "OrForm";
  case NormalForm::Kind::AndForm: return "AndForm";
  case NormalForm::Kind::XorForm: return "XorForm";
  }
  return "?";
}

std::string to_string( Method method )
{
  switch ( method )
  {
  case Method::NormalForm: return "NormalForm";
  case Method::MonotoneProbe: return "MonotoneProbe";
  case Method::SelfDualCount: return "SelfDualCount";
  case Method::ComplementPairs: return "ComplementPairs";
  case Method::ReproducingCheck: return "ReproducingCheck";
  case Method::SeparationProperty: return "SeparationProperty";
  case Method::CanonicalForm: return "CanonicalForm";
  case Method::BruteForce: return "BruteForce";
  }
  return "?";
}

NormalForm normal_form( const Circuit& c )
{
  const auto kind = form_kind_for( circuit_clone( c ) );
  if ( !kind )
  {
    throw WrongClone( "normal forms exist only for circuits in V, E or L, not " + circuit_clone( c ).to_string() );
  }
  return normal_form( c, *kind );
}

NormalForm normal_form( const Circuit& c, NormalForm::Kind kind )
{
  const auto clone = circuit_clone( c );
  const auto& needed = kind == NormalForm::Kind::OrForm ? clone_V : kind == NormalForm::Kind::AndForm ? clone_E : clone_L;
  if ( !within( clone, needed ) )
  {
    throw WrongClone( to_string( kind ) + " needs a circuit in " + needed.to_string() + ", got " + clone.to_string() );
  }
  const auto n = c.num_variables();
  NormalForm f{ kind, false, Bits( n, 0u ) };
  switch ( kind )
  {
  case NormalForm::Kind::OrForm:
    f.a0 = c.evaluate( constant_bits( n, false ) );
    for ( std::size_t i = 0; i < n; ++i )
      f.coeffs[i] = f.a0 || c.evaluate( unit( n, i ) );
    break;
  case NormalForm::Kind::AndForm:
    f.a0 = c.evaluate( constant_bits( n, true ) );
    for ( std::size_t i = 0; i < n; ++i )
      f.coeffs[i] = !f.a0 || !c.evaluate( single_zero( n, i ) );
    break;
  case NormalForm::Kind::XorForm:
    f.a0 = c.evaluate( constant_bits( n, false ) );
    for ( std::size_t i = 0; i < n; ++i )
      f.coeffs[i] = c.evaluate( unit( n, i ) ) != f.a0;
    break;
  }
  return f;
}

Decision equivalent( const Circuit& c1, const Circuit& c2 )
{
  const auto vars = union_variables( c1, c2 );
  const auto n = vars.size();
  const auto a1 = over_variables( c1, vars );
  const auto a2 = over_variables( c2, vars );
  if ( const auto kind = form_kind_for( joint_clone( c1, c2 ) ) )
  {
    const auto f1 = aligned_form( c1, *kind, vars );
    const auto f2 = aligned_form( c2, *kind, vars );
    bool same;
    if ( *kind == NormalForm::Kind::XorForm )
      same = f1.a0 == f2.a0 && f1.coeffs == f2.coeffs;
    else
      same = f1.absorbing() == f2.absorbing() && ( f1.absorbing() || f1.coeffs == f2.coeffs );
    Decision d = decided( same, Method::NormalForm );
    if ( !same )
    {
      // Forms that differ already differ on one of these probes.
      std::vector<Bits> probes{ constant_bits( n, false ), constant_bits( n, true ) };
      for ( std::size_t i = 0; i < n; ++i )
      {
        probes.push_back( unit( n, i ) );
        probes.push_back( single_zero( n, i ) );
      }
      for ( const auto& p : probes )
      {
        if ( f1.evaluate( p ) != f2.evaluate( p ) )
        {
          add_witness( d, a1, p );
          break;
        }
      }
    }
    return d;
  }
  const auto m1 = model_set( a1 );
  const auto m2 = model_set( a2 );
  Decision d = decided( m1 == m2, Method::BruteForce );
  if ( !d.answer )
  {
    const auto w1 = m1.words();
    const auto w2 = m2.words();
    for ( std::size_t w = 0; w < w1.size(); ++w )
    {
      if ( const auto x = w1[w] ^ w2[w] )
      {
        d.witness.push_back( a1.assignment_at( w * 64u + static_cast<unsigned>( std::countr_zero( x ) ) ) );
        break;
      }
    }
  }
  return d;
}

std::vector<std::uint64_t> iso_canonical_form( const ModelSet& models )
{
  const auto n = models.num_variables();
  const auto universe = models.universe();
  std::vector<std::uint64_t> model_list;
  for ( auto m = models.next( 0 ); m; m = models.next( *m + 1u ) )
  {
    model_list.push_back( *m );
  }

  std::vector<std::uint64_t> profile( n, 0u );
  for ( const auto m : model_list )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      profile[i] += ( m >> ( n - 1u - i ) ) & 1u;
    }
  }
  std::vector<unsigned> order( n );
  std::iota( order.begin(), order.end(), 0u );
  std::stable_sort( order.begin(), order.end(), [&]( unsigned a, unsigned b ) { return profile[a] < profile[b]; } );

  // Groups of equal profile, as [begin, end) ranges of `order`.
  std::vector<std::pair<unsigned, unsigned>> groups;
  std::uint64_t candidates = 1;
  for ( unsigned i = 0; i < n; )
  {
    unsigned j = i;
    while ( j < n && profile[order[j]] == profile[order[i]] )
    {
      ++j;
      candidates *= j - i;
      if ( candidates > iso_permutation_limit )
      {
        throw LimitExceeded( "isomorphism fallback: more than " + std::to_string( iso_permutation_limit ) +
                             " profile-respecting orders" );
      }
    }
    groups.emplace_back( i, j );
    i = j;
  }

  const unsigned chunks = ( n + 7u ) / 8u;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> current( ( universe + 63u ) / 64u );
  std::vector<std::uint64_t> lookup( chunks * 256u );
  while ( true )
  {
    // order[j] is the old variable placed at new position j.
    std::vector<unsigned> new_position( n );
    for ( unsigned j = 0; j < n; ++j )
    {
      new_position[order[j]] = j;
    }
    for ( unsigned c = 0; c < chunks; ++c )
    {
      for ( unsigned byte = 0; byte < 256u; ++byte )
      {
        std::uint64_t v = 0;
        for ( unsigned b = 0; b < 8u; ++b )
        {
          const unsigned old_bit = c * 8u + b;
          if ( old_bit < n && ( ( byte >> b ) & 1u ) )
          {
            const unsigned old_var = n - 1u - old_bit;
            v |= std::uint64_t{ 1 } << ( n - 1u - new_position[old_var] );
          }
        }
        lookup[c * 256u + byte] = v;
      }
    }
    std::fill( current.begin(), current.end(), 0u );
    for ( const auto m : model_list )
    {
      std::uint64_t idx = 0;
      for ( unsigned c = 0; c < chunks; ++c )
      {
        idx |= lookup[c * 256u + ( ( m >> ( 8u * c ) ) & 0xffu )];
      }
      current[idx >> 6] |= std::uint64_t{ 1 } << ( idx & 63u );
    }
    if ( best.empty() || std::lexicographical_compare( current.rbegin(), current.rend(), best.rbegin(), best.rend() ) )
    {
      best = current;
    }

    // Next order: odometer over the groups.
    std::size_t g = 0;
    for ( ; g < groups.size(); ++g )
    {
      const auto [b, e] = groups[g];
      if ( std::next_permutation( order.begin() + b, order.begin() + e ) )
      {
        break;
      }
    }
    if ( g == groups.size() )
    {
      break;
    }
  }
  if ( best.empty() )
  {
    best = current;
  }
  return best;
}

Decision isomorphic( const Circuit& c1, const Circuit& c2 )
{
  const auto vars = union_variables( c1, c2 );
  if ( const auto kind = form_kind_for( joint_clone( c1, c2 ) ) )
  {
    const auto f1 = aligned_form( c1, *kind, vars );
    const auto f2 = aligned_form( c2, *kind, vars );
    bool iso;
    if ( *kind == NormalForm::Kind::XorForm )
      iso = f1.a0 == f2.a0 && f1.weight() == f2.weight();
    else
      iso = f1.absorbing() == f2.absorbing() && ( f1.absorbing() || f1.weight() == f2.weight() );
    return decided( iso, Method::NormalForm );
  }
  const auto m1 = model_set( over_variables( c1, vars ) );
  const auto m2 = model_set( over_variables( c2, vars ) );
  if ( m1.count() != m2.count() )
  {
    return decided( false, Method::CanonicalForm );
  }
  return decided( iso_canonical_form( m1 ) == iso_canonical_form( m2 ), Method::CanonicalForm );
}

bool isomorphic_search( const Circuit& c1, const Circuit& c2 )
{
  const auto vars = union_variables( c1, c2 );
  const auto n = static_cast<unsigned>( vars.size() );
  const auto s1 = model_set( over_variables( c1, vars ) );
  const auto s2 = model_set( over_variables( c2, vars ) );
  if ( s1.count() != s2.count() )
  {
    return false;
  }
  std::vector<std::uint64_t> m1, m2;
  for ( auto m = s1.next( 0 ); m; m = s1.next( *m + 1u ) )
    m1.push_back( *m );
  for ( auto m = s2.next( 0 ); m; m = s2.next( *m + 1u ) )
    m2.push_back( *m );

  // Prefix counts of c2 per depth, fixed.  pi[j] is the variable of c1 read at position j of c2.
  std::vector<std::vector<std::uint32_t>> target( n + 1u );
  for ( unsigned k = 0; k <= n; ++k )
  {
    target[k].assign( std::size_t{ 1 } << k, 0u );
    for ( const auto m : m2 )
      ++target[k][m >> ( n - k )];
  }
  std::vector<std::uint64_t> prefix( m1.size(), 0u );
  std::vector<bool> used( n, false );
  std::vector<std::uint32_t> counts;
  const std::function<bool( unsigned )> search = [&]( unsigned k ) -> bool {
    if ( k == n )
      return true;
    for ( unsigned v = 0; v < n; ++v )
    {
      if ( used[v] )
        continue;
      counts.assign( std::size_t{ 1 } << ( k + 1u ), 0u );
      for ( std::size_t i = 0; i < m1.size(); ++i )
        ++counts[( prefix[i] << 1u ) | ( ( m1[i] >> ( n - 1u - v ) ) & 1u )];
      if ( counts != target[k + 1u] )
        continue;
      for ( std::size_t i = 0; i < m1.size(); ++i )
        prefix[i] = ( prefix[i] << 1u ) | ( ( m1[i] >> ( n - 1u - v ) ) & 1u );
      used[v] = true;
      if ( search( k + 1u ) )
        return true;
      used[v] = false;
      for ( auto& p : prefix )
        p >>= 1u;
    }
    return false;
  };
  return search( 0 );
}

Decision sat( const Circuit& c )
{
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  if ( within( clone, clone_R1 ) )
  {
    Decision d = decided( true, Method::ReproducingCheck );
    add_witness( d, c, constant_bits( n, true ) );
    return d;
  }
  // S0^k lies inside R1, so only D is left among the complement-pair clones.
  if ( within( clone, clone_D ) )
  {
    // One of 0^n and 1^n is a model.
    Decision d = decided( true, Method::SelfDualCount );
    add_witness( d, c, constant_bits( n, !c.evaluate( constant_bits( n, false ) ) ) );
    return d;
  }
  if ( within( clone, clone_M ) )
  {
    Decision d = decided( c.evaluate( constant_bits( n, true ) ), Method::MonotoneProbe );
    if ( d.answer )
      add_witness( d, c, constant_bits( n, true ) );
    return d;
  }
  if ( within( clone, clone_L ) )
  {
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    Decision d = decided( affine_satisfiable( f ), Method::NormalForm );
    if ( d.answer )
      add_witness( d, c, affine_model( f ) );
    return d;
  }
  const auto model = sat_bruteforce( c );
  Decision d = decided( model.has_value(), Method::BruteForce );
  if ( model )
    d.witness.push_back( *model );
  return d;
}

Decision sat_star( const Circuit& c )
{
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  const auto ones = constant_bits( n, true );
  if ( within( clone, clone_M ) )
  {
    Decision d = decided( false, Method::MonotoneProbe );
    for ( std::size_t i = 0; i < n && !d.answer; ++i )
    {
      if ( c.evaluate( single_zero( n, i ) ) )
      {
        d.answer = true;
        add_witness( d, c, single_zero( n, i ) );
      }
    }
    return d;
  }
  if ( within( clone, clone_L ) )
  {
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    Decision d = decided( false, Method::NormalForm );
    std::vector<Bits> candidates{ constant_bits( n, false ) };
    if ( f.weight() > 0u )
      candidates.push_back( affine_model( NormalForm{ f.kind, false, f.coeffs } ) );
    for ( const auto& b : candidates )
    {
      if ( b != ones && f.evaluate( b ) )
      {
        d.answer = true;
        add_witness( d, c, b );
        break;
      }
    }
    return d;
  }
  const bool self_dual = within( clone, clone_D );
  if ( n == 1u && ( self_dual || within( clone, clone_S0_2 ) ) )
  {
    // One variable: 0 is the only candidate.
    Decision d = decided( false, self_dual ? Method::SelfDualCount : Method::ComplementPairs );
    const auto zeros = constant_bits( n, false );
    if ( c.evaluate( zeros ) )
    {
      d.answer = true;
      add_witness( d, c, zeros );
    }
    return d;
  }
  if ( n >= 2u && ( self_dual || within( clone, clone_S0_2 ) ) )
  {
    // Each complementary pair holds a model; the pairs {0^n,1^n} and {e_1, ~e_1} leave a model besides 1^n.
    Decision d = decided( true, self_dual ? Method::SelfDualCount : Method::ComplementPairs );
    const auto zeros = constant_bits( n, false );
    if ( c.evaluate( zeros ) )
    {
      add_witness( d, c, zeros );
    }
    else
    {
      const auto e = unit( n, 0 );
      add_witness( d, c, c.evaluate( e ) ? e : single_zero( n, 0 ) );
    }
    return d;
  }
  const auto models = model_set( c );
  Decision d = decided( false, Method::BruteForce );
  const auto m = models.next( 0 );
  if ( m && *m + 1u != models.universe() )
  {
    d.answer = true;
    d.witness.push_back( c.assignment_at( *m ) );
  }
  return d;
}

Decision frozen( const Circuit& c, std::span<const std::string> variables )
{
  if ( variables.empty() )
  {
    throw InvalidArgument( "frozen: empty variable set" );
  }
  bool all_known = true;
  const auto targets = resolve_variables( c, variables, all_known );
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  const auto ones = constant_bits( n, true );
  if ( within( clone, clone_M ) )
  {
    Decision d = decided( false, Method::MonotoneProbe );
    if ( !c.evaluate( ones ) )
      return d;
    for ( const auto i : targets )
    {
      if ( c.evaluate( single_zero( n, i ) ) )
      {
        add_witness( d, c, ones );
        add_witness( d, c, single_zero( n, i ) );
        return d;
      }
    }
    d.answer = all_known;
    if ( d.answer )
      add_witness( d, c, ones );
    return d;
  }
  if ( within( clone, clone_L ) )
  {
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    Decision d = decided( false, Method::NormalForm );
    if ( !affine_satisfiable( f ) )
      return d;
    const auto model = affine_model( f );
    for ( const auto i : targets )
    {
      if ( f.coeffs[i] && f.weight() == 1u )
        continue;
      // Flip x_i, and a second coefficient variable if x_i has coefficient 1.
      auto other = model;
      other[i] ^= 1u;
      if ( f.coeffs[i] )
      {
        for ( std::size_t k = 0; k < n; ++k )
        {
          if ( k != i && f.coeffs[k] )
          {
            other[k] ^= 1u;
            break;
          }
        }
      }
      add_witness( d, c, model );
      add_witness( d, c, other );
      return d;
    }
    d.answer = all_known;
    if ( d.answer )
      add_witness( d, c, model );
    return d;
  }
  const auto facts = brute_facts( c );
  Decision d = decided( false, Method::BruteForce );
  if ( !facts.first )
    return d;
  for ( const auto i : targets )
  {
    if ( facts.disagreeing[i] )
    {
      d.witness.push_back( c.assignment_at( *facts.first ) );
      d.witness.push_back( c.assignment_at( *facts.disagreeing[i] ) );
      return d;
    }
  }
  d.answer = all_known;
  if ( d.answer )
    d.witness.push_back( c.assignment_at( *facts.first ) );
  return d;
}

Decision exists_frozen( const Circuit& c )
{
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  const auto ones = constant_bits( n, true );
  if ( within( clone, clone_L ) )
  {
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    Decision d = decided( f.weight() == 1u, Method::NormalForm );
    if ( d.answer )
    {
      const auto j = static_cast<std::size_t>( std::find( f.coeffs.begin(), f.coeffs.end(), 1u ) - f.coeffs.begin() );
      d.variables.push_back( c.variables()[j] );
      add_witness( d, c, affine_model( f ) );
    }
    return d;
  }
  if ( within( clone, clone_M ) )
  {
    Decision d = decided( false, Method::MonotoneProbe );
    if ( !c.evaluate( ones ) )
      return d;
    for ( std::size_t i = 0; i < n; ++i )
    {
      if ( !c.evaluate( single_zero( n, i ) ) )
        d.variables.push_back( c.variables()[i] );
    }
    d.answer = !d.variables.empty();
    if ( d.answer )
      add_witness( d, c, ones );
    return d;
  }
  if ( within( clone, clone_S1 ) )
  {
    // Every model shares a coordinate set to 1, so a frozen variable exists iff C is satisfiable.
    if ( within( clone, clone_R1 ) )
    {
      Decision d = decided( true, Method::SeparationProperty );
      add_witness( d, c, ones );
      return d;
    }
    const auto model = sat_bruteforce( c );
    Decision d = decided( model.has_value(), Method::SeparationProperty );
    if ( model )
      d.witness.push_back( *model );
    return d;
  }
  const auto facts = brute_facts( c );
  Decision d = decided( false, Method::BruteForce );
  if ( !facts.first )
    return d;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( !facts.disagreeing[i] )
      d.variables.push_back( c.variables()[i] );
  }
  d.answer = !d.variables.empty();
  d.witness.push_back( c.assignment_at( *facts.first ) );
  return d;
}

Decision audit( const Circuit& c )
{
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  if ( within( clone, clone_M ) )
  {
    if ( !c.evaluate( constant_bits( n, true ) ) )
      return decided( true, Method::MonotoneProbe );
    auto d = exists_frozen( c );
    return d;
  }
  if ( within( clone, clone_L ) )
  {
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    if ( !affine_satisfiable( f ) )
      return decided( true, Method::NormalForm );
    return exists_frozen( c );
  }
  if ( within( clone, clone_S1 ) )
  {
    return decided( true, Method::SeparationProperty );
  }
  const auto facts = brute_facts( c );
  Decision d = decided( !facts.first.has_value(), Method::BruteForce );
  if ( facts.first )
  {
    for ( std::size_t i = 0; i < n; ++i )
    {
      if ( !facts.disagreeing[i] )
        d.variables.push_back( c.variables()[i] );
    }
    d.answer = !d.variables.empty();
  }
  return d;
}

Decision unique_sat( const Circuit& c )
{
  const auto clone = circuit_clone( c );
  const auto n = c.num_variables();
  const auto ones = constant_bits( n, true );
  if ( within( clone, clone_M ) )
  {
    Decision d = decided( c.evaluate( ones ), Method::MonotoneProbe );
    for ( std::size_t i = 0; i < n && d.answer; ++i )
    {
      if ( c.evaluate( single_zero( n, i ) ) )
        d.answer = false;
    }
    if ( d.answer )
      add_witness( d, c, ones );
    return d;
  }
  if ( within( clone, clone_L ) )
  {
    // Model counts of affine forms are 0, 2^(n-1) or 2^n.
    const auto f = normal_form( c, NormalForm::Kind::XorForm );
    Decision d = decided( f.weight() == 0u ? ( f.a0 && n == 0u ) : n == 1u, Method::NormalForm );
    if ( d.answer )
      add_witness( d, c, affine_model( f ) );
    return d;
  }
  const bool self_dual = within( clone, clone_D );
  if ( n >= 2u && ( self_dual || within( clone, clone_S0_2 ) ) )
  {
    return decided( false, self_dual ? Method::SelfDualCount : Method::ComplementPairs );
  }
  if ( n == 1u && ( self_dual || within( clone, clone_S0_2 ) ) )
  {
    // 2^(n-1) = 1 model when self-dual; otherwise look at both points.
    const auto zero = constant_bits( 1, false );
    const bool at0 = c.evaluate( zero );
    const bool at1 = c.evaluate( ones );
    Decision d = decided( at0 != at1, self_dual ? Method::SelfDualCount : Method::ComplementPairs );
    if ( d.answer )
      add_witness( d, c, at0 ? zero : ones );
    return d;
  }
  const auto models = model_set( c );
  Decision d = decided( models.count() == 1u, Method::BruteForce );
  if ( d.answer )
    d.witness.push_back( c.assignment_at( *models.next( 0 ) ) );
  return d;
}

bool is_dominant_pair( const Circuit& c, std::string_view s, std::string_view t )
{
  const auto si = c.variable_index( s );
  const auto ti = c.variable_index( t );
  if ( !si || !ti )
  {
    throw InvalidArgument( "dominant pair: unknown variable" );
  }
  if ( *si == *ti )
  {
    throw InvalidArgument( "dominant pair needs two distinct variables" );
  }
  const auto models = model_set( c );
  const auto n = static_cast<unsigned>( c.num_variables() );
  const auto sb = n - 1u - static_cast<unsigned>( *si );
  const auto tb = n - 1u - static_cast<unsigned>( *ti );
  for ( std::uint64_t i = 0; i < models.universe(); ++i )
  {
    const bool a = ( i >> sb ) & 1u;
    if ( a == ( ( i >> tb ) & 1u ) && models.contains( i ) != a )
    {
      return false;
    }
  }
  return true;
}

PrefixSat::PrefixSat( const Circuit& c ) : circuit_( &c )
{
  const auto clone = circuit_clone( c );
  if ( within( clone, clone_M ) )
  {
    monotone_ = true;
  }
  else if ( within( clone, clone_L ) )
  {
    form_ = normal_form( c, NormalForm::Kind::XorForm );
  }
  else
  {
    throw WrongClone( "prefix satisfiability needs a circuit in M or L, got " + clone.to_string() );
  }
}

bool PrefixSat::satisfiable( std::span<const std::uint8_t> prefix ) const
{
  const auto n = circuit_->num_variables();
  if ( prefix.size() > n )
  {
    throw ArityError( "prefix longer than the variable list" );
  }
  if ( monotone_ )
  {
    auto bits = constant_bits( n, true );
    std::copy( prefix.begin(), prefix.end(), bits.begin() );
    return circuit_->evaluate( bits );
  }
  bool value = form_.a0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( !form_.coeffs[i] )
      continue;
    if ( i >= prefix.size() )
      return true;
    value = value != ( prefix[i] != 0u );
  }
  return value;
}

} // namespace postlab
