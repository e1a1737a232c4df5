#pragma once

#include "postlab/boolfn.hpp"

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postlab
{

/// Row families of Post's lattice; the S-families carry a degree parameter.
enum class CloneFamily
{
  BF,
  R0,
  R1,
  R2,
  M,
  M0,
  M1,
  M2,
  S0,
  S02,
  S01,
  S00,
  S1,
  S12,
  S11,
  S10,
  D,
  D1,
  D2,
  L,
  L0,
  L1,
  L2,
  L3,
  V,
  V0,
  V1,
  V2,
  E,
  E0,
  E1,
  E2,
  N,
  N2,
  I,
  I0,
  I1,
  I2
};

/*! \brief A node of Post's lattice.

  For the eight S-families, `degree == 0` denotes the unbounded member
  (written `S0`, `S12`, ...) and `degree >= 2` the member `S0^n` etc.  All
  other families have `degree == 0`.
*/
struct CloneName
{
  CloneFamily family = CloneFamily::I2;
  unsigned degree = 0;

  static CloneName parse( std::string_view text );
  std::string to_string() const;
  bool is_parametric_family() const noexcept;

  friend auto operator<=>( const CloneName&, const CloneName& ) = default;
};

/// Componentwise conjunction (minimum for the separation degrees) of the property predicates over a base.
struct PropertySignature
{
  bool r0 = true;
  bool r1 = true;
  bool monotone = true;
  bool self_dual = true;
  bool affine = true;
  SeparationDegree sep0 = SeparationDegree::full();
  SeparationDegree sep1 = SeparationDegree::full();
  bool or_shape = true;
  bool and_shape = true;
  bool unary_shape = true;
  bool projection_shape = true;

  friend bool operator==( const PropertySignature&, const PropertySignature& ) = default;
};

PropertySignature signature_of( const TruthTable& f );
PropertySignature signature_of( std::span<const TruthTable> base );

/// True iff every function with this signature lies in the clone.
bool satisfies( const PropertySignature& sig, const CloneName& clone );
bool is_member( const TruthTable& f, const CloneName& clone );

/// The clone generated by a base; the empty base yields I2.
CloneName clone_of( std::span<const TruthTable> base );

/// True iff `inner` is a subclone of `outer`.
bool includes( const CloneName& outer, const CloneName& inner );

/// First base listed for the clone in the standard table.
std::vector<TruthTable> standard_base( const CloneName& clone );

CloneName join_with_constant( const CloneName& clone, bool c );
CloneName dual_clone( const CloneName& clone );

/// Least k >= 2 with the threshold function t_k in the clone, if any.
std::optional<unsigned> threshold_in_clone( const CloneName& clone );

/// Exact set of n-ary members of [base] (n <= 4) by fixpoint iteration.
std::set<TruthTable> closure_oracle( std::span<const TruthTable> base, unsigned arity );

/// Every clone name, parametric families instantiated at degrees 2..max_degree plus the unbounded member.
std::vector<CloneName> all_clones( unsigned max_degree );

/// DOT digraph of the covering relation (edges point from the smaller clone to the larger one).
std::string lattice_dot( unsigned max_degree = 3 );

} // namespace postlab
