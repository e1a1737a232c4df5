#include "postlab/classify.hpp"
#include "postlab/clones.hpp"
#include "postlab/decide.hpp"
#include "postlab/dsl.hpp"
#include "postlab/enumerate.hpp"
#include "postlab/error.hpp"
#include "postlab/gadgets.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace postlab;

namespace
{

CloneName circuit_clone( const Circuit& c )
{
  const auto tables = c.base().tables();
  return clone_of( tables );
}

py::dict decision_dict( const Decision& d )
{
  py::dict out;
  out["answer"] = d.answer;
  out["method"] = to_string( d.method );
  py::list witness;
  for ( const auto& w : d.witness )
  {
    witness.append( w.to_bits() );
  }
  out["witness"] = witness;
  out["frozen"] = d.variables;
  return out;
}

py::dict report_dict( const EnumerationReport& r )
{
  py::dict out;
  py::list solutions;
  for ( const auto& a : r.solutions )
  {
    solutions.append( a.to_bits() );
  }
  out["algorithm"] = to_string( r.stats.algorithm );
  out["solutions"] = solutions;
  out["delays"] = r.stats.delays;
  out["max_delay"] = r.stats.max_delay();
  return out;
}

EnumerationReport enumerate( const Circuit& c, const std::string& algorithm )
{
  if ( algorithm == "backtrack" )
    return enum_backtrack( c );
  if ( algorithm == "dual-pairing" )
    return enum_dual_pairing( c );
  if ( algorithm == "brute-force" )
    return enum_bruteforce( c );
  if ( algorithm != "auto" )
    throw InvalidArgument( "unknown algorithm '" + algorithm + "'" );
  const auto clone = circuit_clone( c );
  const auto in = [&]( CloneFamily f, unsigned degree = 0 ) { return includes( CloneName{ f, degree }, clone ); };
  if ( in( CloneFamily::M ) || in( CloneFamily::L ) )
    return enum_backtrack( c );
  if ( in( CloneFamily::D ) || in( CloneFamily::S0, 2 ) )
    return enum_dual_pairing( c );
  return enum_bruteforce( c );
}

} // namespace

PYBIND11_MODULE( _postlab, m )
{
  m.doc() = "Clone identification, complexity classification and solving for Boolean circuits over restricted bases";

  py::register_exception<ParseError>( m, "ParseError", PyExc_ValueError );
  py::register_exception<LimitExceeded>( m, "LimitExceeded", PyExc_RuntimeError );
  py::register_exception<WrongClone>( m, "WrongClone", PyExc_ValueError );
  py::register_exception<NotInClone>( m, "NotInClone", PyExc_ValueError );
  py::register_exception<InvalidArgument>( m, "InvalidArgument", PyExc_ValueError );
  py::register_exception<ArityError>( m, "ArityError", PyExc_ValueError );

  py::class_<Circuit>( m, "Circuit" )
      .def_static( "parse", []( const std::string& text ) { return parse_circuit( text ); }, py::arg( "text" ) )
      .def_property_readonly( "variables", &Circuit::variables )
      .def_property_readonly( "num_variables", &Circuit::num_variables )
      .def_property_readonly( "clone", []( const Circuit& c ) { return circuit_clone( c ).to_string(); } )
      .def( "evaluate",
            []( const Circuit& c, const std::vector<int>& bits ) {
              std::vector<std::uint8_t> b( bits.begin(), bits.end() );
              return c.evaluate( b );
            } )
      .def( "count_sat", []( const Circuit& c ) { return count_sat( c ); } )
      .def( "to_text", []( const Circuit& c ) { return print_circuit( c ); } )
      .def( "__eq__", []( const Circuit& a, const Circuit& b ) { return a == b; } )
      .def( "__repr__", []( const Circuit& c ) {
        return "<Circuit over " + circuit_clone( c ).to_string() + " with " + std::to_string( c.num_variables() ) + " variables>";
      } );

  m.def( "parse_circuit", []( const std::string& text ) { return parse_circuit( text ); }, py::arg( "text" ) );

  m.def(
      "clone_of",
      []( const std::vector<std::string>& formulas ) {
        std::vector<TruthTable> base;
        for ( const auto& f : formulas )
        {
          base.push_back( f.rfind( "tt ", 0 ) == 0 ? TruthTable::parse_literal( f ) : compile_formula( f ) );
        }
        return clone_of( base ).to_string();
      },
      py::arg( "base" ), "Clone generated by formulas over x, y, z or `tt` literals." );

  m.def(
      "classify",
      []( const std::string& problem, const Circuit& c ) {
        const auto tables = c.base().tables();
        const auto v = classify( parse_problem( problem ), tables );
        py::dict out;
        out["problem"] = to_string( v.problem );
        out["clone"] = v.clone.to_string();
        out["label"] = to_string( v.label );
        out["trace"] = v.trace;
        return out;
      },
      py::arg( "problem" ), py::arg( "circuit" ) );

  m.def( "sat", []( const Circuit& c ) { return decision_dict( sat( c ) ); } );
  m.def( "sat_star", []( const Circuit& c ) { return decision_dict( sat_star( c ) ); } );
  m.def( "equivalent", []( const Circuit& a, const Circuit& b ) { return decision_dict( equivalent( a, b ) ); } );
  m.def( "isomorphic", []( const Circuit& a, const Circuit& b ) { return decision_dict( isomorphic( a, b ) ); } );
  m.def(
      "frozen", []( const Circuit& c, const std::vector<std::string>& vars ) { return decision_dict( frozen( c, vars ) ); }, py::arg( "circuit" ),
      py::arg( "variables" ) );
  m.def( "exists_frozen", []( const Circuit& c ) { return decision_dict( exists_frozen( c ) ); } );
  m.def( "audit", []( const Circuit& c ) { return decision_dict( audit( c ) ); } );
  m.def( "unique_sat", []( const Circuit& c ) { return decision_dict( unique_sat( c ) ); } );

  m.def(
      "enumerate", []( const Circuit& c, const std::string& algorithm ) { return report_dict( enumerate( c, algorithm ) ); }, py::arg( "circuit" ),
      py::arg( "algorithm" ) = "auto", "algorithm: auto, backtrack, dual-pairing or brute-force." );

  py::class_<GadgetInstance>( m, "GadgetInstance" )
      .def_readonly( "gadget", &GadgetInstance::gadget )
      .def_readonly( "claim", &GadgetInstance::claim )
      .def_readonly( "source", &GadgetInstance::source )
      .def_property_readonly( "circuits",
                              []( const GadgetInstance& g ) {
                                py::dict out;
                                for ( const auto& nc : g.circuits )
                                {
                                  out[py::str( nc.name )] = nc.circuit;
                                }
                                return out;
                              } )
      .def( "verify", &GadgetInstance::verify );

  m.def( "gadget_names", &gadget_names );
  m.def( "taut_to_eq", []( const std::string& dnf ) { return taut_to_eq( ThreeDnf::parse( dnf ) ); } );
  m.def( "eliminate_constant", &eliminate_constant, py::arg( "c1" ), py::arg( "c2" ), py::arg( "value" ) = true );
  m.def( "selfdual_eq_gadget", &selfdual_eq_gadget );
  m.def( "selfdual_iso_gadget", &selfdual_iso_gadget );
  m.def( "iso_restricted", &iso_restricted );
  m.def( "satstar_chain", &satstar_chain );
  m.def( "unsat_to_frozen", &unsat_to_frozen );
  m.def( "eq_to_frozen", &eq_to_frozen );
  m.def( "satp_gadget", &satp_gadget, py::arg( "c1" ), py::arg( "c2" ), py::arg( "k" ) = py::none() );
  m.def( "satstar_to_efv", &satstar_to_efv, py::arg( "circuit" ), py::arg( "k" ) = py::none() );
  m.def( "audit_gadget", &audit_gadget, py::arg( "circuit" ), py::arg( "k" ) = py::none() );
  m.def( "usat_const_elim", &usat_const_elim );

  m.def( "lattice_dot", &lattice_dot, py::arg( "max_degree" ) = 3 );
  m.def( "all_clones", []( unsigned max_degree ) {
    std::vector<std::string> out;
    for ( const auto& c : all_clones( max_degree ) )
      out.push_back( c.to_string() );
    return out;
  }, py::arg( "max_degree" ) = 3 );
}
