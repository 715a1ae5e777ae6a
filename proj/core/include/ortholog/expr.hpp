#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ortholog/downset.hpp"
#include "ortholog/universal.hpp"

namespace ortholog {

// Expression syntax tree. See docs/grammar.md for the concrete syntax.
struct Expr {
  enum class Kind {
    Tuple,      // (a,1)
    Label,      // a, for one-factor logics
    Top,
    Bottom,
    Star,       // star(x)
    Closure,    // closure(x)
    Join,       // x | y  or  join{...}
    Meet,       // x & y  or  meet{...}
    Coproduct,  // coproduct{...}
  };

  Kind kind = Kind::Top;
  // Tuple components, or the single label.
  std::vector<std::string> labels;
  std::vector<Expr> children;
  // Join / Meet written with | or & (always two children).
  bool infix = false;
  int line = 1;
  int col = 1;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.labels == b.labels && a.children == b.children && a.infix == b.infix;
  }
};

// Throws SyntaxError with the 1-based line and column of the offending
// token.
Expr parse_expr(std::string_view src);

// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

// Throws UnknownLabel, and NotInCarrier when a coproduct operand is not
// **-closed.
DownSet eval_expr(const Expr& e, const UniversalLogic& u);

}  // namespace ortholog
