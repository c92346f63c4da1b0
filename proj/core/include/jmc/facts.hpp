#pragma once

// Citation-carrying fact catalog.
//
// Composition-series statements that the calculator treats as inputs (never
// derives) live in a plain-text catalog, one record per citation.  Records
// are symbolic: labels may mention free variables constrained by `where`
// clauses, and are matched against concrete labels by unification.
//
// Record format (line oriented; '#' starts a comment):
//
//   fact <id>
//     kind rg|mult|contains|subrep|mu_lower|mu_zero|filtration|bound
//     vars a,b,c
//     where 1/2<=a, a<b, b<c
//     host <label-expr>
//     term <coeff> <label-expr>                     (rg/mult/contains/subrep/filtration/bound)
//     term <coeff> <gl-expr> (x) <label-expr>       (mu_lower/mu_zero)
//     note <free text>                              (optional)
//     cite "<verbatim source quote>"                (required)
//   end
//
// Kinds and their meaning in the Grothendieck group:
//   rg         host's full list of irreducible factors with multiplicities
//   mult       [host : term-label] equals the stated coefficient exactly
//   contains   host >= sum of the stated terms (lower bounds only)
//   subrep     the single term embeds in host (implies contains with coeff 1)
//   mu_lower   mu*(host) >= coeff * (gl ⊗ label)
//   mu_zero    the coefficient of (gl ⊗ label) in mu*(host) is exactly 0
//   filtration host carries a filtration with the listed subquotients in order
//   bound      host <= sum of the stated terms (upper bounds; terms may be
//              reducible induced labels, each of the host's rank and support)
//
// Loading validates every record over the default parameter grid: rank and
// absolute-support conservation for each term against its host, and presence
// of a citation.  A record that fails validation aborts the load.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jmc/atoms.hpp"
#include "jmc/gl.hpp"
#include "jmc/parser.hpp"

namespace jmc {

enum class FactKind { rg, mult, contains, subrep, mu_lower, mu_zero, filtration, bound };

std::string fact_kind_str(FactKind k);

/// Comparison between two half-integer expressions gating a fact's domain.
struct FactConstraint {
  enum class Op { lt, le, eq, ne };
  HalfExpr lhs;
  Op op = Op::le;
  HalfExpr rhs;

  bool holds(const Env& env) const;
  std::string str() const;
};

/// One expansion term of a fact.
struct FactTerm {
  long long coeff = 1;
  bool has_gl = false;           ///< true for mu_lower / mu_zero terms
  std::vector<SegExpr> gl;       ///< GL product; empty means the unit "1"
  LabelExpr label;
};

struct Fact {
  std::string id;
  FactKind kind = FactKind::rg;
  std::vector<std::string> vars;
  std::vector<FactConstraint> constraints;
  LabelExpr host;
  std::vector<FactTerm> terms;
  std::string note;
  std::string cite;

  /// All declared constraints hold under `env`.
  bool constraints_hold(const Env& env) const;
};

/// Raised on catalog syntax or validation errors.
class FactError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Instantiates a label expression to a canonical classical part.
ClassPart instantiate_label(const LabelExpr& e, const Env& env);

/// Same, but returns nullopt when the instantiation is domain-invalid.
std::optional<ClassPart> try_instantiate_label(const LabelExpr& e, const Env& env);

/// Instantiates a GL product to a standard module (empty product = unit).
GLStandard instantiate_gl(const std::vector<SegExpr>& gl, const Env& env);

class FactCatalog {
public:
  /// The catalog embedded in the library.
  static const FactCatalog& builtin();

  /// Parses and validates catalog text.  Throws FactError.
  static FactCatalog parse(std::string_view text, std::string_view origin = "catalog");

  /// Reads and parses a catalog file.  Throws FactError.
  static FactCatalog load_file(const std::string& path);

  const std::vector<Fact>& facts() const { return facts_; }
  const Fact* find(std::string_view id) const;

  /// A fact whose instantiated host equals a concrete classical part.
  struct Match {
    const Fact* fact = nullptr;
    Env env;
  };

  /// All facts of `kind` whose host unifies with `host` (canonical equality),
  /// with constraints satisfied.  Deterministic order (catalog order).
  std::vector<Match> match_host(FactKind kind, const ClassPart& host) const;

  /// Instantiated terms of a matched fact: (coeff, optional GL part, label).
  struct InstTerm {
    long long coeff = 0;
    std::optional<GLStandard> gl;
    ClassPart label;
  };
  static std::vector<InstTerm> instantiate_terms(const Match& m);

private:
  void validate() const;

  std::vector<Fact> facts_;
};

}  // namespace jmc
