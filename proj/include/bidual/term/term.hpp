#pragma once

// Immutable expression trees over a Banach algebra E and its bidual E**.
//
// Leaves are atoms (algebra or bidual elements, possibly starred) and the
// unit. Products carry one of three operations: the first Arens product
// (Box), the second Arens product (Loz), or the unambiguous product used
// whenever at most one factor involves a bidual element (Flat). Functional
// applications and pairings are scalar-valued.

#include "bidual/term/scalar.hpp"

#include <compare>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bidual {

enum class Level { Algebra, Bidual };

enum class ProductOp { Box, Loz, Flat };

/// Raised for ill-formed terms, e.g. a Flat product joining two bidual blocks.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Atom {
  std::string name;
  Level level = Level::Bidual;
  bool starred = false;

  Atom toggled() const { return {name, level, !starred}; }
  friend bool operator==(const Atom&, const Atom&) = default;
};

class Term;
struct TermNode;

class Term {
 public:
  enum class Kind { Unit, Atom, Pairing, Func, Product, Star, Sum };

  /// The unit 1 of E.
  Term();

  Kind kind() const;

  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_product() const { return kind() == Kind::Product; }
  bool is_sum() const { return kind() == Kind::Sum; }
  /// The empty sum.
  bool is_zero() const;
  /// Func and Pairing nodes denote complex numbers rather than elements.
  bool is_scalar_valued() const { return kind() == Kind::Func || kind() == Kind::Pairing; }

  // Accessors; each throws std::logic_error when the kind does not match.
  const Atom& atom() const;
  ProductOp op() const;
  const std::vector<Term>& factors() const;
  const std::vector<std::pair<Scalar, Term>>& addends() const;
  const Term& star_arg() const;
  const std::string& functional() const;  // Func and Pairing
  const Term& func_arg() const;
  const Atom& paired_atom() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;

  friend Term make_node(TermNode node);
};

struct ProductData {
  ProductOp op;
  std::vector<Term> factors;
};

struct SumData {
  std::vector<std::pair<Scalar, Term>> addends;
};

struct StarData {
  Term arg;
};

struct FuncData {
  std::string name;
  Term arg;
};

struct PairingData {
  Atom atom;
  std::string functional;
};

struct UnitData {};

struct TermNode {
  std::variant<UnitData, Atom, PairingData, FuncData, ProductData, StarData, SumData> data;
};

// Constructors. Products flatten directly nested factors carrying the same
// operation; a product of one factor is that factor.
Term unit();
Term atom(std::string name, Level level = Level::Bidual, bool starred = false);
Term atom(const Atom& a);
Term product(ProductOp op, std::vector<Term> factors);
Term box(std::vector<Term> factors);
Term loz(std::vector<Term> factors);
Term flat(std::vector<Term> factors);
Term sum(std::vector<std::pair<Scalar, Term>> addends);
Term zero();
Term scaled(const Scalar& c, const Term& t);
Term plus(const Term& a, const Term& b);
Term minus(const Term& a, const Term& b);
Term star(const Term& t);
Term func(std::string name, const Term& arg);
Term pairing(const Atom& a, std::string functional);

/// True when a vector-valued occurrence of a bidual atom appears in t
/// (atoms inside functionals and pairings do not count).
bool bears_bidual(const Term& t);

/// Throws StructuralError unless every Flat product joins at most one
/// bidual-bearing factor and Box/Loz factors are vector-valued.
void check_well_formed(const Term& t);

/// Formal involution: scalars conjugated, products reversed with Box and Loz
/// swapped, stars toggled on atoms. Functional symbols are hermitian, so the
/// conjugate of phi(x) is phi(x*).
Term involute(const Term& t);

/// Simultaneous substitution of atoms by name. A starred atom is replaced by
/// the involution of its binding; a pairing <x,phi> becomes phi(binding).
/// Throws StructuralError if the result is not well formed.
Term substitute(const Term& t, const std::map<std::string, Term>& bindings);

/// Outermost Func and Pairing nodes in traversal order, duplicates removed.
std::vector<Term> functional_nodes(const Term& t);

}  // namespace bidual
