// The pi1lab scripting language: one statement per line, '#' starts a comment.
//
//   space Y1 = Y(32) width=pow10
//   loop f  = alpha.updown
//   loop f4 = C(4).once
//   loop w  = word g2 g3^-1
//   loop c  = concat(f, f4)
//   loop p  = points [(0,0,0), (1/2,0,1), (1,0,0)]
//   probe classify f4
//   render f, f4 -> scene.svg
//
// Each `space` line opens a section; loop names are visible only inside the
// section that binds them. Rationals are written num/den, never as decimals.

#pragma once

#include "pi1lab/geometry.hpp"
#include "pi1lab/spaces.hpp"
#include "pi1lab/words.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pi1lab::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct SpaceDecl {
  std::string name;
  SpaceKind kind = SpaceKind::compact_y;
  int max_hint = 2;
  std::string width = "default";

  friend bool operator==(const SpaceDecl&, const SpaceDecl&) = default;
};

struct LoopExpr {
  enum class Kind { alpha_updown, circle_once, circle_inv, concat, word, points };

  Kind kind = Kind::alpha_updown;
  int circle = 0;                  // circle_once, circle_inv
  std::vector<std::string> names;  // concat
  Word word;                       // word
  std::vector<Breakpoint> points;  // points

  friend bool operator==(const LoopExpr&, const LoopExpr&) = default;
};

struct LoopDecl {
  std::string name;
  LoopExpr expr;

  friend bool operator==(const LoopDecl&, const LoopDecl&) = default;
};

/// A loop name, a non-negative integer, or a rational.
using ProbeArg = std::variant<std::string, long, Rational>;

struct ProbeStmt {
  std::string kind;
  std::vector<ProbeArg> args;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ProbeStmt&, const ProbeStmt&) = default;
};

struct RenderStmt {
  std::vector<std::string> names;
  std::string path;

  friend bool operator==(const RenderStmt&, const RenderStmt&) = default;
};

struct Statement {
  std::variant<SpaceDecl, LoopDecl, ProbeStmt, RenderStmt> node;
  int line = 0;  // not part of equality

  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Script {
  std::vector<Statement> statements;

  friend bool operator==(const Script&, const Script&) = default;
};

/// Probe kinds and their argument lists, for help texts.
struct ProbeSignature {
  std::string_view kind;
  std::string_view usage;
};
const std::vector<ProbeSignature>& probe_signatures();

/// Throws ParseError with the position of the first problem: syntax errors,
/// unbound names, invalid circle indices and probes needing another space.
Script parse(std::string_view text);

/// Parses the right-hand side of a `loop` line against a given space; names
/// are never bound in this context.
LoopExpr parse_loop_literal(std::string_view text, const SpaceDecl& space);

std::string print(const LoopExpr& expr);
std::string print(const Statement& statement);
/// Canonical text; parse(print(s)) == s.
std::string print(const Script& script);

}  // namespace pi1lab::dsl
