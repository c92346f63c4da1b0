#pragma once

// Textual expression layer.
//
// Grammar (whitespace between tokens is ignored):
//
//   label   := atom | factors " |x " atom
//   factors := factor (" x " factor)*
//   factor  := "d(" half "," half ")"
//   half    := ["-"] (variable | number) [("+"|"-") number]
//   number  := int ["/2"]
//   atom    := "sigma"
//            | "sigma_a{" half "}"
//            | "tau{" ["a="] half "," sign "}"
//            | "ds{" ["b="] half "," ["c="] half "," sign "}"
//            | "ds3{" ["a="] half "," ["b="] half "," ["c="] half "," tag "}"
//            | "T{" half "," half "," sign "}"
//            | "L(" factors " ; " atom ")"
//   sign    := "+" | "-"
//   tag     := "+" | "-bca" | "-abc"
//
// A variable is a single lowercase letter.  Expressions parse into a small
// symbolic AST (HalfExpr / SegExpr / AtomExpr / LabelExpr) that evaluates
// against an environment binding variables to half-integers.  The concrete
// entry point parse_expression() accepts no free variables.
//
// Two error channels: SyntaxError (malformed text, carries a byte offset)
// and SemanticError (well-formed text denoting no valid object: empty or
// non-integral segments, atom domain violations, unbound variables).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jmc/atoms.hpp"
#include "jmc/half_int.hpp"
#include "jmc/segment.hpp"

namespace jmc {

/// Binding of free variables to half-integer values.
using Env = std::map<std::string, HalfInt>;

/// Malformed input text; position() is the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Well-formed text denoting no valid object (domain violation, unbound
/// variable, empty or non-integral segment, ...).
class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Linear half-integer expression: an optional +/- variable plus a constant.
struct HalfExpr {
  int var_coeff = 0;   ///< 0 (constant), +1 or -1
  std::string var;     ///< variable name, meaningful iff var_coeff != 0
  HalfInt offset{};

  static HalfExpr constant(HalfInt v);
  static HalfExpr variable(std::string name, int coeff = 1, HalfInt off = HalfInt{});

  bool is_constant() const { return var_coeff == 0; }
  /// Value under `env`; SemanticError if the variable is unbound.
  HalfInt eval(const Env& env) const;
  std::string str() const;
  auto operator<=>(const HalfExpr&) const = default;
};

/// One "d(lo,hi)" factor with symbolic endpoints.
struct SegExpr {
  HalfExpr lo, hi;
  /// Nonempty concrete segment; SemanticError if [lo,hi] is no valid segment.
  Segment eval(const Env& env) const;
  std::string str() const;
  auto operator<=>(const SegExpr&) const = default;
};

/// Symbolic classical atom.
struct AtomExpr {
  enum class Kind { cusp, sigma_one, tau_aa, signed_pair, ds3, temp, lang };

  Kind kind = Kind::cusp;
  /// sigma_one: {c}; tau_aa: {a}; signed_pair: {c,d}; ds3: {a,b,c}; temp: {a,c}.
  std::vector<HalfExpr> params;
  Sign sign = Sign::plus;        ///< tau_aa, signed_pair, temp
  DS3Tag tag = DS3Tag::plus;     ///< ds3
  std::vector<SegExpr> lang_segs;          ///< lang only
  std::shared_ptr<AtomExpr> lang_inner;    ///< lang only; must be tempered

  static AtomExpr cusp();
  static AtomExpr sigma_one(HalfExpr c);
  static AtomExpr tau_aa(HalfExpr a, Sign s);
  static AtomExpr signed_pair(HalfExpr c, HalfExpr d, Sign s);
  static AtomExpr ds3(HalfExpr a, HalfExpr b, HalfExpr c, DS3Tag t);
  static AtomExpr temp(HalfExpr a, HalfExpr c, Sign s);
  static AtomExpr lang(std::vector<SegExpr> segs, AtomExpr inner);

  /// Concrete atom; SemanticError on domain violations.  Single-interval
  /// Langlands data over the cuspidal base collapse to their canonical form.
  ClassAtom eval(const Env& env) const;
  std::string str() const;
  bool operator==(const AtomExpr& o) const;
};

/// Symbolic induced label: zero or more GL factors over a classical atom.
struct LabelExpr {
  std::vector<SegExpr> segs;
  AtomExpr atom;

  /// Concrete label, segments in written order (no canonicalization).
  InducedLabel eval(const Env& env) const;
  std::string str() const;
  bool operator==(const LabelExpr& o) const;
};

/// Parses a label expression; free variables allowed.  SyntaxError only.
LabelExpr parse_label_expr(std::string_view text);

/// Parses a pure GL product: "1" or "d(..) x d(..) x ...".  SyntaxError only.
std::vector<SegExpr> parse_gl_expr(std::string_view text);

/// Parses a half-integer expression on its own.  SyntaxError only.
HalfExpr parse_half_expr(std::string_view text);

/// Names of the free variables of an expression, in first-use order.
std::vector<std::string> free_variables(const LabelExpr& e);

/// Concrete entry point: parses `text`, requires it variable-free, and
/// evaluates it.  The result is in canonical form (segments dualized to
/// non-negative center and sorted).  SyntaxError / SemanticError as above.
InducedLabel parse_expression(std::string_view text);

/// Same, but collapses a segment-free label to its bare atom, so the result
/// compares equal to any other canonically built ClassPart.
ClassPart parse_class_part(std::string_view text);

}  // namespace jmc
