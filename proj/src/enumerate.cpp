#include "postlab/enumerate.hpp"

#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/error.hpp"

#include <algorithm>

namespace postlab
{

namespace
{

/// Counts oracle calls and closes a delay entry at every output.
class DelayMeter
{
public:
  DelayMeter( EnumAlgorithm algorithm, const SolutionSink& sink ) : sink_( sink ) { stats_.algorithm = algorithm; }

  void call( std::uint64_t k = 1 ) { current_ += k; }

  void emit( const Assignment& a )
  {
    stats_.delays.push_back( current_ );
    current_ = 0;
    sink_( a );
  }

  EnumerationStats finish()
  {
    stats_.delays.push_back( current_ );
    return std::move( stats_ );
  }

private:
  const SolutionSink& sink_;
  EnumerationStats stats_;
  std::uint64_t current_ = 0;
};

EnumerationReport collect( EnumerationStats ( *run )( const Circuit&, const SolutionSink& ), const Circuit& c )
{
  EnumerationReport report;
  report.stats = run( c, [&]( const Assignment& a ) { report.solutions.push_back( a ); } );
  return report;
}

} // namespace

std::string to_string( EnumAlgorithm algorithm )
{
  switch ( algorithm )
  {
  case EnumAlgorithm::Backtrack: return "Backtrack";
  case EnumAlgorithm::DualPairing: return "DualPairing";
  case EnumAlgorithm::BruteForce: return "BruteForce";
  }
  return "?";
}

std::uint64_t EnumerationStats::max_delay() const
{
  return delays.empty() ? 0u : *std::max_element( delays.begin(), delays.end() );
}

EnumerationStats enum_backtrack( const Circuit& c, const SolutionSink& sink )
{
  const PrefixSat oracle( c );
  const auto n = c.num_variables();
  DelayMeter meter( EnumAlgorithm::Backtrack, sink );
  std::vector<std::uint8_t> prefix;
  prefix.reserve( n );

  meter.call();
  if ( !oracle.satisfiable( prefix ) )
  {
    return meter.finish();
  }
  // Invariant: the current prefix is satisfiable.  Descend taking the 0-branch
  // when it is satisfiable; otherwise the 1-branch is, without a test.
  while ( true )
  {
    while ( prefix.size() < n )
    {
      prefix.push_back( 0u );
      meter.call();
      if ( !oracle.satisfiable( prefix ) )
      {
        prefix.back() = 1u;
      }
    }
    meter.emit( c.make_assignment( prefix ) );

    // Climb to the deepest 0-choice whose 1-sibling is satisfiable.
    bool found = false;
    while ( !prefix.empty() && !found )
    {
      if ( prefix.back() == 0u )
      {
        prefix.back() = 1u;
        meter.call();
        if ( oracle.satisfiable( prefix ) )
        {
          found = true;
          break;
        }
      }
      prefix.pop_back();
    }
    if ( !found )
    {
      return meter.finish();
    }
  }
}

EnumerationStats enum_dual_pairing( const Circuit& c, const SolutionSink& sink )
{
  const auto clone = clone_of( c.base().tables() );
  if ( !includes( CloneName{ CloneFamily::D, 0 }, clone ) && !includes( CloneName{ CloneFamily::S0, 2 }, clone ) )
  {
    throw WrongClone( "dual pairing needs a circuit in D or S0^2, got " + clone.to_string() );
  }
  const auto n = c.num_variables();
  DelayMeter meter( EnumAlgorithm::DualPairing, sink );
  if ( n == 0u )
  {
    meter.call();
    const auto empty = c.make_assignment( {} );
    if ( c.evaluate( empty ) )
    {
      meter.emit( empty );
    }
    return meter.finish();
  }
  if ( n > 63u )
  {
    throw LimitExceeded( "dual pairing supports at most 63 variables" );
  }
  const std::uint64_t half = std::uint64_t{ 1 } << ( n - 1u );
  for ( std::uint64_t i = 0; i < half; ++i )
  {
    const auto a = c.assignment_at( i );
    const auto b = a.complement();
    meter.call( 2 );
    const bool sa = c.evaluate( a );
    const bool sb = c.evaluate( b );
    if ( sa )
      meter.emit( a );
    if ( sb )
      meter.emit( b );
  }
  return meter.finish();
}

EnumerationStats enum_bruteforce( const Circuit& c, const SolutionSink& sink )
{
  const auto models = model_set( c );
  DelayMeter meter( EnumAlgorithm::BruteForce, sink );
  std::uint64_t scanned = 0;
  for ( auto m = models.next( 0 ); m; m = models.next( *m + 1u ) )
  {
    meter.call( *m + 1u - scanned );
    scanned = *m + 1u;
    meter.emit( c.assignment_at( *m ) );
  }
  meter.call( models.universe() - scanned );
  return meter.finish();
}

EnumerationReport enum_backtrack( const Circuit& c )
{
  return collect( &enum_backtrack, c );
}

EnumerationReport enum_dual_pairing( const Circuit& c )
{
  return collect( &enum_dual_pairing, c );
}

EnumerationReport enum_bruteforce( const Circuit& c )
{
  return collect( &enum_bruteforce, c );
}

} // namespace postlab
