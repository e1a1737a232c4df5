#pragma once

#include "postlab/circuit.hpp"
#include "postlab/clones.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postlab
{

/*! \brief Explicit form of a circuit in V, E or L.

  OrForm:  a0 ∨ ⋁ (a_i ∧ x_i)
  AndForm: a0 ∧ ⋀ (¬a_i ∨ x_i), so a_i = 1 means x_i is a conjunct
  XorForm: a0 ⊕ ⊕ (a_i ∧ x_i)

  Coefficients follow the circuit's variable list.
*/
struct NormalForm
{
  enum class Kind
  {
    OrForm,
    AndForm,
    XorForm
  };

  Kind kind = Kind::OrForm;
  bool a0 = false;
  std::vector<std::uint8_t> coeffs;

  bool evaluate( std::span<const std::uint8_t> bits ) const;
  std::size_t weight() const;
  /// OrForm with a0 = 1 or AndForm with a0 = 0: the coefficients do not matter.
  bool absorbing() const;
};

std::string to_string( NormalForm::Kind kind );

enum class Method
{
  NormalForm,
  MonotoneProbe,
  SelfDualCount,
  ComplementPairs,
  ReproducingCheck,
  SeparationProperty,
  CanonicalForm,
  BruteForce
};

std::string to_string( Method method );

/*! Result of a decision procedure.

  `witness` holds a model for positive satisfiability-type answers, the
  unique model for USAT, and two models that disagree on a variable when a
  frozen-variable question is answered "no" for a satisfiable circuit.
  `variables` lists the frozen variables found, where applicable.
*/
struct Decision
{
  bool answer = false;
  std::vector<Assignment> witness;
  std::vector<std::string> variables;
  Method method = Method::BruteForce;
};

/// Form chosen by the clone: V gives OrForm, else E gives AndForm, else L gives XorForm; WrongClone otherwise.
NormalForm normal_form( const Circuit& c );
NormalForm normal_form( const Circuit& c, NormalForm::Kind kind );

/// Variables are aligned by name over the union of both lists; missing ones are fictive.
Decision equivalent( const Circuit& c1, const Circuit& c2 );
/// Exists a permutation of the union variables mapping one circuit onto the other.
Decision isomorphic( const Circuit& c1, const Circuit& c2 );

Decision sat( const Circuit& c );
/// A model other than the all-ones assignment.
Decision sat_star( const Circuit& c );
/// Satisfiable and every listed variable takes one value in all models; names outside the list are never frozen.
Decision frozen( const Circuit& c, std::span<const std::string> variables );
Decision exists_frozen( const Circuit& c );
/// Unsatisfiable or has a frozen variable.
Decision audit( const Circuit& c );
Decision unique_sat( const Circuit& c );

/// Every assignment with s = t = α satisfies the circuit iff α = 1.
bool is_dominant_pair( const Circuit& c, std::string_view s, std::string_view t );

/*! \brief Satisfiability of C[x_1/b_1, ..., x_k/b_k] for circuits in M or L.

  Equivalent to running the tractable SAT test on the restricted circuit
  over the constant-extended base, without materializing it.  Each call is
  one oracle call for delay accounting.
*/
class PrefixSat
{
public:
  /// Throws WrongClone unless the circuit's clone lies in M or L.
  explicit PrefixSat( const Circuit& c );

  bool satisfiable( std::span<const std::uint8_t> prefix ) const;

private:
  const Circuit* circuit_;
  bool monotone_ = false;
  NormalForm form_;
};

/// Brute-force canonical form used by the isomorphism fallback: least model bitset over profile-respecting orders.
std::vector<std::uint64_t> iso_canonical_form( const ModelSet& models );

/*! Exact isomorphism by permutation search over the union variables, pruned
  by cofactor counts (after fixing the images of k positions, the model
  counts of every k-bit prefix must agree).  No order limit; brute-force
  scale only.  Used to verify gadget claims.
*/
bool isomorphic_search( const Circuit& c1, const Circuit& c2 );

/// Number of candidate orders the isomorphism fallback accepts.
inline constexpr std::uint64_t iso_permutation_limit = 40320;

} // namespace postlab
