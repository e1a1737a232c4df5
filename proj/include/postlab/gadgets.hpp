#pragma once

#include "postlab/circuit.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postlab
{

/// DNF with 1..3 literals per term, e.g. `x1 & !x2 & x3 | !x1`.
struct ThreeDnf
{
  struct Literal
  {
    std::size_t variable = 0;
    bool positive = true;
  };

  /// In order of first appearance.
  std::vector<std::string> variables;
  std::vector<std::vector<Literal>> terms;

  /// Throws ParseError (line 1) on malformed text or a term with more than three literals.
  static ThreeDnf parse( std::string_view text );
  std::string to_string() const;
  bool evaluate( std::span<const std::uint8_t> bits ) const;
  bool is_tautology() const;
};

struct NamedCircuit
{
  std::string name;
  Circuit circuit;
};

/*! \brief Output of a reduction gadget together with its claimed property.

  `check` decides the claim by brute force on the stored source instance
  and output circuits; it throws LimitExceeded beyond brute_limit().
*/
struct GadgetInstance
{
  std::string gadget;
  std::string source;
  std::string claim;
  std::vector<NamedCircuit> circuits;
  std::function<bool()> check;

  bool verify() const { return check(); }
  const Circuit& circuit( std::string_view name ) const;
};

/// C1 = ⋀(x_i ∨ y_i) and C2 = C1 ∧ C over {∧,∨}, where C is H with ¬x_i read as y_i.
GadgetInstance taut_to_eq( const ThreeDnf& h );

/*! Replaces the constant `value` in both circuits by a fresh variable v and
  outputs C[value/v] ∧ v (for 1) or C[value/v] ∨ v (for 0) over the
  remaining base functions. */
GadgetInstance eliminate_constant( const Circuit& c1, const Circuit& c2, bool value = true );

/// Monotone pair to pure {t_2}-circuits t_2(v, C[0/u, 1/v], u).
GadgetInstance selfdual_eq_gadget( const Circuit& c1, const Circuit& c2 );

/// Monotone pair to the same construction with t_2(u, C[0/u, 1/v], v), for the isomorphism argument.
GadgetInstance selfdual_iso_gadget( const Circuit& c1, const Circuit& c2 );

/// Pads both monotone circuits to a common variable set, conjoins y ∧ z, then applies t_2(z1, z2, ·).
GadgetInstance iso_restricted( const Circuit& c1, const Circuit& c2 );

/// Constant 0 to fresh x, then the chain g(...g(C', x_1, x)..., x_n, x) with g = x ∧ (y ∨ ¬z).
GadgetInstance satstar_chain( const Circuit& c );

/// Constant 0 to fresh x, output C' ∨ x.
GadgetInstance unsat_to_frozen( const Circuit& c );

/// t_2(x, y, z) if the circuits differ at 0^n or 1^n, else x ⊕ C1 ⊕ C2; both over the D1 base of the inputs.
GadgetInstance eq_to_frozen( const Circuit& c1, const Circuit& c2 );

/// t_k(C1, C2, x_1, ..., x_{k-1}); k defaults to the least threshold in the clone of the merged base.
GadgetInstance satp_gadget( const Circuit& c1, const Circuit& c2, std::optional<unsigned> k = std::nullopt );

/// G = t_k(C, y_1..y_k) ∧ ((⋀ y_i) ∨ ¬(⋀ x_j)).
GadgetInstance satstar_to_efv( const Circuit& c, std::optional<unsigned> k = std::nullopt );

/// t_k(C, x_1, ..., x_k) with fresh x_i.
GadgetInstance audit_gadget( const Circuit& c, std::optional<unsigned> k = std::nullopt );

/// Constant 1 to fresh x, output C'' ∧ x.
GadgetInstance usat_const_elim( const Circuit& c );

/// Names accepted by make_gadget-style front ends, in declaration order.
std::vector<std::string> gadget_names();

} // namespace postlab
