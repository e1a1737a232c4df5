#pragma once

#include "postlab/boolfn.hpp"
#include "postlab/circuit.hpp"

#include <string>
#include <string_view>

namespace postlab
{

/*! \brief Reads a circuit in the line-oriented `.bc` format.

  \verbatim
  # comment
  base AND = tt 2 0b1000
  base G = x & (y | !z)
  input x1 x2
  g1 = AND(x1, x2)
  output g1
  \endverbatim

  Formulas range over x, y, z (arity = highest variable used) with the
  operators ¬ ∧ ∨ ⊕ → ↔ or their ASCII forms ! & | ^ -> <->, the constants 0
  and 1, and parentheses.  Throws ParseError with line and column.
*/
Circuit parse_circuit( std::string_view text );

/// Reads only the `base` lines of a file; every other non-comment line is a syntax error.
Base parse_base( std::string_view text );

/// Inverse of parse_circuit up to gate naming; parse_circuit(print_circuit(c)) == c.
std::string print_circuit( const Circuit& circuit );

/// Table of a formula over x, y, z.
TruthTable compile_formula( std::string_view formula );

} // namespace postlab
