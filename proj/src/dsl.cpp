#include "pi1lab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace pi1lab::dsl {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      message_(message) {}

const std::vector<ProbeSignature>& probe_signatures() {
  static const std::vector<ProbeSignature> table{
      {"classify", "classify <loop>"},
      {"dist", "dist <loop> <loop>"},
      {"disjointness", "disjointness <up_to>"},
      {"hausdorff", "hausdorff <up_to>"},
      {"nondiscrete", "nondiscrete <n_max> <epsilon>"},
      {"discrete", "discrete <loop> <trials> <magnitude> [seed=S]"},
      {"slsc", "slsc <radius> <samples> [seed=S]"},
      {"slsc_nondiscrete", "slsc_nondiscrete <radius> <samples> <n_max> <epsilon> [seed=S]"},
      {"isomorphism", "isomorphism <words> <max_length> <max_generator> [seed=S]"},
  };
  return table;
}

namespace {

enum class ArgType { name, integer, rational };

struct ProbeRule {
  std::vector<ArgType> args;
  bool seeded = false;
  bool needs_y = false;
  bool needs_x = false;
};

const std::map<std::string, ProbeRule, std::less<>>& probe_rules() {
  using A = ArgType;
  static const std::map<std::string, ProbeRule, std::less<>> rules{
      {"classify", {{A::name}}},
      {"dist", {{A::name, A::name}}},
      {"disjointness", {{A::integer}}},
      {"hausdorff", {{A::integer}, false, true}},
      {"nondiscrete", {{A::integer, A::rational}, false, true}},
      {"discrete", {{A::name, A::integer, A::rational}, true, false, true}},
      {"slsc", {{A::rational, A::integer}, true, true}},
      {"slsc_nondiscrete", {{A::rational, A::integer, A::integer, A::rational}, true, true}},
      {"isomorphism", {{A::integer, A::integer, A::integer}, true, true}},
  };
  return rules;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Cursor over one source line (comment already stripped).
class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw ParseError(line_, static_cast<int>(at) + 1, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void jump(std::size_t p) { pos_ = p; }

  std::string describe_next() {
    skip_ws();
    if (pos_ >= text_.size()) {
      return "end of line";
    }
    std::size_t end = pos_ + 1;
    if (is_ident_char(text_[pos_])) {
      while (end < text_.size() && is_ident_char(text_[end])) {
        ++end;
      }
    }
    return "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) {
      return false;
    }
    // Keywords must not run into a longer identifier.
    if (is_ident_char(token.back()) && pos_ + token.size() < text_.size() &&
        is_ident_char(text_[pos_ + token.size()])) {
      return false;
    }
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    const std::size_t at = (skip_ws(), pos_);
    if (!accept(token)) {
      fail(at, "expected '" + std::string(token) + "', found " + describe_next());
    }
  }

  std::string identifier(std::string_view what) {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
      fail(pos_, "expected " + std::string(what) + ", found " + describe_next());
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // A maximal run of characters that are not whitespace and not in `stops`.
  std::string_view word(std::string_view stops = "") {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) == 0 &&
           stops.find(text_[pos_]) == std::string_view::npos) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  Rational rational(std::string_view what) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view token = word(",()[]");
    if (token.empty()) {
      fail(start, "expected " + std::string(what) + ", found " + describe_next());
    }
    try {
      return parse_rational(token);
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
  }

  long integer(std::string_view what) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view token = word("()[],");
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
      if (token.find('.') != std::string_view::npos) {
        fail(start, "decimal literal '" + std::string(token) + "' is not accepted; " + std::string(what) +
                        " must be a whole number");
      }
      fail(start, "expected " + std::string(what) + " (a non-negative integer), found " +
                      (token.empty() ? describe_next() : "'" + std::string(token) + "'"));
    }
    if (token.size() > 9) {
      fail(start, std::string(what) + " " + std::string(token) + " is too large");
    }
    return std::stol(std::string(token));
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

struct Section {
  SpaceDecl space;
  std::set<std::string> loops;
};

void check_circle(LineParser& p, std::size_t at, long n, const SpaceDecl& space) {
  if (n < kFirstGenerator) {
    p.fail(at, "circle index must be ≥ 2, got " + std::to_string(n));
  }
  if (n > space.max_hint) {
    p.fail(at, "circle index " + std::to_string(n) + " exceeds the max hint " + std::to_string(space.max_hint) +
                   " of space " + space.name);
  }
}

Word parse_word_text(LineParser& p, std::size_t at, std::string_view text, const SpaceDecl& space) {
  Word w;
  try {
    w = Word::parse(text);
  } catch (const std::invalid_argument& e) {
    p.fail(at, e.what());
  }
  for (const Syllable& s : w.syllables()) {
    check_circle(p, at, s.generator, space);
  }
  return w;
}

LoopExpr parse_loop_expr(LineParser& p, const Section& section, bool names_allowed) {
  LoopExpr e;
  const SpaceDecl& space = section.space;
  p.skip_ws();
  const std::size_t start = p.pos();
  if (p.accept("alpha")) {
    p.expect(".");
    p.expect("updown");
    if (space.kind != SpaceKind::compact_y) {
      p.fail(start, "alpha.updown needs a Y space; alpha is not part of " + space.name);
    }
    e.kind = LoopExpr::Kind::alpha_updown;
    return e;
  }
  if (p.accept("C")) {
    p.expect("(");
    p.skip_ws();
    const std::size_t at = p.pos();
    const std::string_view sign = p.rest().substr(0, 1);
    if (sign == "-") {
      p.word("()");
      p.fail(at, "circle index must be ≥ 2");
    }
    const long n = p.integer("circle index");
    p.expect(")");
    p.expect(".");
    const std::size_t which = (p.skip_ws(), p.pos());
    if (p.accept("once")) {
      e.kind = LoopExpr::Kind::circle_once;
    } else if (p.accept("inv")) {
      e.kind = LoopExpr::Kind::circle_inv;
    } else {
      p.fail(which, "expected 'once' or 'inv', found " + p.describe_next());
    }
    check_circle(p, at, n, space);
    e.circle = static_cast<int>(n);
    return e;
  }
  if (p.accept("concat")) {
    e.kind = LoopExpr::Kind::concat;
    p.expect("(");
    do {
      const std::size_t at = (p.skip_ws(), p.pos());
      std::string name = p.identifier("a loop name");
      if (!names_allowed || section.loops.count(name) == 0) {
        p.fail(at, "unbound name '" + name + "'");
      }
      e.names.push_back(std::move(name));
    } while (p.accept(","));
    p.expect(")");
    return e;
  }
  if (p.accept("word")) {
    e.kind = LoopExpr::Kind::word;
    p.skip_ws();
    if (p.accept("(")) {
      const std::size_t at = (p.skip_ws(), p.pos());
      const std::string_view rest = p.rest();
      const std::size_t close = rest.find(')');
      if (close == std::string_view::npos) {
        p.fail(at, "missing ')' after word letters");
      }
      e.word = parse_word_text(p, at, rest.substr(0, close), space);
      p.jump(at + close + 1);
    } else {
      const std::size_t at = p.pos();
      e.word = parse_word_text(p, at, p.rest(), space);
      p.jump(at + p.rest().size());
    }
    return e;
  }
  if (p.accept("points")) {
    e.kind = LoopExpr::Kind::points;
    p.expect("[");
    do {
      const std::size_t at = (p.skip_ws(), p.pos());
      p.expect("(");
      Rational t = p.rational("parameter t");
      p.expect(",");
      Rational x = p.rational("coordinate x");
      p.expect(",");
      Rational y = p.rational("coordinate y");
      p.expect(")");
      if (!e.points.empty() && !(e.points.back().t < t)) {
        p.fail(at, "breakpoint parameters must increase strictly");
      }
      e.points.push_back({std::move(t), {std::move(x), std::move(y)}});
    } while (p.accept(","));
    p.expect("]");
    if (e.points.size() < 2 || e.points.front().t != 0 || e.points.back().t != 1) {
      p.fail(start, "a points literal needs at least two breakpoints, from t = 0 to t = 1");
    }
    return e;
  }
  p.fail(start, "expected a loop (alpha.updown, C(n).once, C(n).inv, concat(...), word ..., points [...]), found " +
                    p.describe_next());
}

SpaceDecl parse_space(LineParser& p) {
  SpaceDecl s;
  s.name = p.identifier("a space name");
  p.expect("=");
  const std::size_t at = (p.skip_ws(), p.pos());
  if (p.accept("X")) {
    s.kind = SpaceKind::bouquet_x;
  } else if (p.accept("Y")) {
    s.kind = SpaceKind::compact_y;
  } else {
    p.fail(at, "expected X(n) or Y(n), found " + p.describe_next());
  }
  p.expect("(");
  const std::size_t hint_at = (p.skip_ws(), p.pos());
  const long hint = p.integer("max hint");
  if (hint < 2) {
    p.fail(hint_at, "max hint must be ≥ 2");
  }
  s.max_hint = static_cast<int>(hint);
  p.expect(")");
  if (p.accept("width")) {
    p.expect("=");
    const std::size_t wat = (p.skip_ws(), p.pos());
    s.width = p.identifier("a width profile");
    try {
      (void)WidthProfile::by_name(s.width);
    } catch (const std::invalid_argument& e) {
      p.fail(wat, e.what());
    }
  }
  return s;
}

ProbeStmt parse_probe(LineParser& p, const Section* section) {
  ProbeStmt probe;
  const std::size_t at = (p.skip_ws(), p.pos());
  probe.kind = p.identifier("a probe kind");
  const auto& rules = probe_rules();
  const auto rule = rules.find(probe.kind);
  if (rule == rules.end()) {
    std::string kinds;
    for (const auto& s : probe_signatures()) {
      kinds += (kinds.empty() ? "" : ", ") + std::string(s.kind);
    }
    p.fail(at, "unknown probe '" + probe.kind + "' (known: " + kinds + ")");
  }
  if (section == nullptr) {
    p.fail(at, "no active space; declare one with 'space <name> = X(n)' or 'Y(n)'");
  }
  if (rule->second.needs_y && section->space.kind != SpaceKind::compact_y) {
    p.fail(at, "probe " + probe.kind + " needs a Y space");
  }
  if (rule->second.needs_x && section->space.kind != SpaceKind::bouquet_x) {
    p.fail(at, "probe " + probe.kind + " needs an X space");
  }
  for (ArgType type : rule->second.args) {
    const std::size_t arg_at = (p.skip_ws(), p.pos());
    if (p.at_end() || p.rest().substr(0, 5) == "seed=") {
      std::string usage;
      for (const auto& s : probe_signatures()) {
        if (s.kind == probe.kind) {
          usage = std::string(s.usage);
        }
      }
      p.fail(arg_at, "too few arguments; usage: probe " + usage);
    }
    switch (type) {
      case ArgType::name: {
        std::string name = p.identifier("a loop name");
        if (section->loops.count(name) == 0) {
          p.fail(arg_at, "unbound name '" + name + "'");
        }
        probe.args.emplace_back(std::move(name));
        break;
      }
      case ArgType::integer:
        probe.args.emplace_back(p.integer("argument"));
        break;
      case ArgType::rational:
        probe.args.emplace_back(p.rational("argument"));
        break;
    }
  }
  const std::size_t seed_at = (p.skip_ws(), p.pos());
  if (p.accept("seed")) {
    if (!rule->second.seeded) {
      p.fail(seed_at, "probe " + probe.kind + " takes no seed");
    }
    p.expect("=");
    const std::size_t value_at = (p.skip_ws(), p.pos());
    const std::string_view digits = p.word();
    std::uint64_t seed = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
      p.fail(value_at, "seed must be an integer in [0, 2^64)");
    }
    probe.seed = seed;
  }
  return probe;
}

RenderStmt parse_render(LineParser& p, const Section* section) {
  RenderStmt r;
  const std::size_t at = (p.skip_ws(), p.pos());
  if (section == nullptr) {
    p.fail(at, "no active space; declare one with 'space <name> = X(n)' or 'Y(n)'");
  }
  if (!p.accept("->")) {
    do {
      const std::size_t name_at = (p.skip_ws(), p.pos());
      std::string name = p.identifier("a loop name or '->'");
      if (section->loops.count(name) == 0) {
        p.fail(name_at, "unbound name '" + name + "'");
      }
      r.names.push_back(std::move(name));
    } while (p.accept(","));
    p.expect("->");
  }
  const std::size_t path_at = (p.skip_ws(), p.pos());
  r.path = std::string(p.word());
  if (r.path.empty()) {
    p.fail(path_at, "expected an output file after '->'");
  }
  return r;
}

std::string_view strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Script parse(std::string_view text) {
  Script script;
  std::optional<Section> section;
  std::set<std::string> space_names;
  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view raw = text.substr(begin, end - begin);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    ++line_no;
    begin = end + 1;

    LineParser p(strip_comment(raw), line_no);
    if (p.at_end()) {
      continue;
    }
    const std::size_t at = p.pos();
    Statement st;
    st.line = line_no;
    if (p.accept("space")) {
      const std::size_t name_at = (p.skip_ws(), p.pos());
      SpaceDecl s = parse_space(p);
      if (!space_names.insert(s.name).second) {
        p.fail(name_at, "space '" + s.name + "' is already declared");
      }
      section = Section{s, {}};
      st.node = std::move(s);
    } else if (p.accept("loop")) {
      if (!section) {
        p.fail(at, "no active space; declare one with 'space <name> = X(n)' or 'Y(n)'");
      }
      const std::size_t name_at = (p.skip_ws(), p.pos());
      LoopDecl d;
      d.name = p.identifier("a loop name");
      if (section->loops.count(d.name) != 0) {
        p.fail(name_at, "name '" + d.name + "' is already bound in space " + section->space.name);
      }
      p.expect("=");
      d.expr = parse_loop_expr(p, *section, true);
      section->loops.insert(d.name);
      st.node = std::move(d);
    } else if (p.accept("probe")) {
      st.node = parse_probe(p, section ? &*section : nullptr);
    } else if (p.accept("render")) {
      st.node = parse_render(p, section ? &*section : nullptr);
    } else {
      p.fail(at, "expected 'space', 'loop', 'probe' or 'render', found " + p.describe_next());
    }
    if (!p.at_end()) {
      p.fail(p.pos(), "unexpected " + p.describe_next() + " at end of statement");
    }
    script.statements.push_back(std::move(st));
  }
  return script;
}

LoopExpr parse_loop_literal(std::string_view text, const SpaceDecl& space) {
  LineParser p(text, 1);
  const Section section{space, {}};
  LoopExpr e = parse_loop_expr(p, section, false);
  if (!p.at_end()) {
    p.fail(p.pos(), "unexpected " + p.describe_next() + " after the loop literal");
  }
  return e;
}

std::string print(const LoopExpr& e) {
  switch (e.kind) {
    case LoopExpr::Kind::alpha_updown:
      return "alpha.updown";
    case LoopExpr::Kind::circle_once:
      return "C(" + std::to_string(e.circle) + ").once";
    case LoopExpr::Kind::circle_inv:
      return "C(" + std::to_string(e.circle) + ").inv";
    case LoopExpr::Kind::concat: {
      std::string out = "concat(";
      for (std::size_t i = 0; i < e.names.size(); ++i) {
        out += (i == 0 ? "" : ", ") + e.names[i];
      }
      return out + ")";
    }
    case LoopExpr::Kind::word:
      return "word(" + e.word.to_string() + ")";
    case LoopExpr::Kind::points: {
      std::string out = "points [";
      for (std::size_t i = 0; i < e.points.size(); ++i) {
        const Breakpoint& b = e.points[i];
        out += (i == 0 ? "(" : ", (") + to_string(b.t) + "," + to_string(b.point.x) + "," +
               to_string(b.point.y) + ")";
      }
      return out + "]";
    }
  }
  return {};
}

namespace {

struct StatementPrinter {
  std::string operator()(const SpaceDecl& s) const {
    return "space " + s.name + " = " + to_string(s.kind) + "(" + std::to_string(s.max_hint) + ") width=" + s.width;
  }
  std::string operator()(const LoopDecl& d) const { return "loop " + d.name + " = " + print(d.expr); }
  std::string operator()(const ProbeStmt& probe) const {
    std::string out = "probe " + probe.kind;
    for (const ProbeArg& arg : probe.args) {
      out += " ";
      if (const auto* name = std::get_if<std::string>(&arg)) {
        out += *name;
      } else if (const auto* n = std::get_if<long>(&arg)) {
        out += std::to_string(*n);
      } else {
        out += to_string(std::get<Rational>(arg));
      }
    }
    if (probe.seed) {
      out += " seed=" + std::to_string(*probe.seed);
    }
    return out;
  }
  std::string operator()(const RenderStmt& r) const {
    std::string out = "render ";
    for (std::size_t i = 0; i < r.names.size(); ++i) {
      out += r.names[i] + (i + 1 == r.names.size() ? " " : ", ");
    }
    return out + "-> " + r.path;
  }
};

}  // namespace

std::string print(const Statement& statement) {
  return std::visit(StatementPrinter{}, statement.node);
}

std::string print(const Script& script) {
  std::string out;
  for (const Statement& st : script.statements) {
    out += print(st) + "\n";
  }
  return out;
}

}  // namespace pi1lab::dsl
