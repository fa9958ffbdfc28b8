#include "gentop/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace gentop {

FormulaPtr Formula::make(Conn k, std::string n, FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(k, std::move(n), std::move(l), std::move(r)));
}

FormulaPtr Formula::var(std::string name) {
  return make(Conn::Var, std::move(name), nullptr, nullptr);
}
FormulaPtr Formula::bottom() { return make(Conn::Bottom, "", nullptr, nullptr); }
FormulaPtr Formula::top() { return make(Conn::Top, "", nullptr, nullptr); }
FormulaPtr Formula::negate(FormulaPtr f) {
  return make(Conn::Not, "", std::move(f), nullptr);
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return make(Conn::And, "", std::move(a), std::move(b));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return make(Conn::Or, "", std::move(a), std::move(b));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return make(Conn::Implies, "", std::move(a), std::move(b));
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return make(Conn::Iff, "", std::move(a), std::move(b));
}
FormulaPtr Formula::box(FormulaPtr f) {
  return make(Conn::Box, "", std::move(f), nullptr);
}
FormulaPtr Formula::diamond(FormulaPtr f) {
  return make(Conn::Diamond, "", std::move(f), nullptr);
}
FormulaPtr Formula::bullet(FormulaPtr f) {
  return make(Conn::Bullet, "", std::move(f), nullptr);
}
FormulaPtr Formula::black_box(FormulaPtr f) {
  return make(Conn::BlackBox, "", std::move(f), nullptr);
}
FormulaPtr Formula::black_diamond(FormulaPtr f) {
  return make(Conn::BlackDiamond, "", std::move(f), nullptr);
}

namespace {

bool is_unary(Conn k) {
  switch (k) {
    case Conn::Not:
    case Conn::Box:
    case Conn::Diamond:
    case Conn::Bullet:
    case Conn::BlackBox:
    case Conn::BlackDiamond:
      return true;
    default:
      return false;
  }
}

int precedence(Conn k) {
  switch (k) {
    case Conn::Iff:
      return 1;
    case Conn::Implies:
      return 2;
    case Conn::Or:
      return 3;
    case Conn::And:
      return 4;
    default:
      return is_unary(k) ? 5 : 6;
  }
}

const char* unary_token(Conn k) {
  switch (k) {
    case Conn::Not:
      return "~";
    case Conn::Box:
      return "[]";
    case Conn::Diamond:
      return "<>";
    case Conn::Bullet:
      return "*";
    case Conn::BlackBox:
      return "[b]";
    case Conn::BlackDiamond:
      return "<b>";
    default:
      return "";
  }
}

void print(std::ostream& out, const FormulaPtr& f, int min_prec) {
  int p = precedence(f->kind);
  bool parens = p < min_prec;
  if (parens) out << '(';
  switch (f->kind) {
    case Conn::Var:
      out << f->name;
      break;
    case Conn::Bottom:
      out << "false";
      break;
    case Conn::Top:
      out << "true";
      break;
    case Conn::And:
      print(out, f->left, 4);
      out << " & ";
      print(out, f->right, 5);
      break;
    case Conn::Or:
      print(out, f->left, 3);
      out << " | ";
      print(out, f->right, 4);
      break;
    case Conn::Implies:
      print(out, f->left, 3);
      out << " -> ";
      print(out, f->right, 2);
      break;
    case Conn::Iff:
      print(out, f->left, 1);
      out << " <-> ";
      print(out, f->right, 2);
      break;
    default:
      out << unary_token(f->kind);
      print(out, f->left, 5);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string to_text(const FormulaPtr& f) {
  std::ostringstream out;
  print(out, f, 0);
  return out.str();
}

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,
  Diamond,
  Bullet,
  BlackBox,
  BlackDiamond,
  False,
  True,
  Var,
};

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string var;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw FormulaParseError(msg, at);
  }

  char peek(std::size_t off = 0) const {
    return pos + off < text.size() ? text[pos + off] : '\0';
  }

  void advance() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case '~': tok = Tok::Not; ++pos; return;
      case '&': tok = Tok::And; ++pos; return;
      case '|': tok = Tok::Or; ++pos; return;
      case '*': tok = Tok::Bullet; ++pos; return;
      case '-':
        if (peek(1) == '>') { tok = Tok::Implies; pos += 2; return; }
        fail("expected '->'", pos);
      case '<':
        if (peek(1) == '-' && peek(2) == '>') { tok = Tok::Iff; pos += 3; return; }
        if (peek(1) == '>') { tok = Tok::Diamond; pos += 2; return; }
        if (peek(1) == 'b' && peek(2) == '>') {
          tok = Tok::BlackDiamond;
          pos += 3;
          return;
        }
        fail("expected '<>', '<b>' or '<->'", pos);
      case '[':
        if (peek(1) == ']') { tok = Tok::Box; pos += 2; return; }
        if (peek(1) == 'b' && peek(2) == ']') {
          tok = Tok::BlackBox;
          pos += 3;
          return;
        }
        fail("expected '[]' or '[b]'", pos);
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      var = text.substr(start, pos - start);
      if (var == "false") tok = Tok::False;
      else if (var == "true") tok = Tok::True;
      else tok = Tok::Var;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& t) : lex(t) {}

  FormulaPtr parse_iff() {
    FormulaPtr l = parse_implies();
    while (lex.tok == Tok::Iff) {
      lex.advance();
      l = Formula::iff(std::move(l), parse_implies());
    }
    return l;
  }

  FormulaPtr parse_implies() {
    FormulaPtr l = parse_or();
    if (lex.tok == Tok::Implies) {
      lex.advance();
      return Formula::implies(std::move(l), parse_implies());
    }
    return l;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (lex.tok == Tok::Or) {
      lex.advance();
      l = Formula::disj(std::move(l), parse_and());
    }
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    while (lex.tok == Tok::And) {
      lex.advance();
      l = Formula::conj(std::move(l), parse_unary());
    }
    return l;
  }

  FormulaPtr parse_unary() {
    switch (lex.tok) {
      case Tok::Not:
        lex.advance();
        return Formula::negate(parse_unary());
      case Tok::Box:
        lex.advance();
        return Formula::box(parse_unary());
      case Tok::Diamond:
        lex.advance();
        return Formula::diamond(parse_unary());
      case Tok::Bullet:
        lex.advance();
        return Formula::bullet(parse_unary());
      case Tok::BlackBox:
        lex.advance();
        return Formula::black_box(parse_unary());
      case Tok::BlackDiamond:
        lex.advance();
        return Formula::black_diamond(parse_unary());
      default:
        return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    switch (lex.tok) {
      case Tok::False:
        lex.advance();
        return Formula::bottom();
      case Tok::True:
        lex.advance();
        return Formula::top();
      case Tok::Var: {
        FormulaPtr f = Formula::var(lex.var);
        lex.advance();
        return f;
      }
      case Tok::LParen: {
        lex.advance();
        FormulaPtr f = parse_iff();
        if (lex.tok != Tok::RParen) lex.fail("expected ')'", lex.tok_pos);
        lex.advance();
        return f;
      }
      default:
        lex.fail("expected a formula", lex.tok_pos);
    }
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.parse_iff();
  if (p.lex.tok != Tok::End)
    p.lex.fail("unexpected trailing input", p.lex.tok_pos);
  return f;
}

FormulaPtr expanded(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Var:
    case Conn::Bottom:
      return f;
    case Conn::Top:
      return Formula::negate(Formula::bottom());
    case Conn::Not:
      return Formula::negate(expanded(f->left));
    case Conn::And:
      return Formula::conj(expanded(f->left), expanded(f->right));
    case Conn::Or:
      return Formula::disj(expanded(f->left), expanded(f->right));
    case Conn::Implies:
      return Formula::implies(expanded(f->left), expanded(f->right));
    case Conn::Iff: {
      FormulaPtr a = expanded(f->left);
      FormulaPtr b = expanded(f->right);
      return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
    }
    case Conn::Box:
      return Formula::box(expanded(f->left));
    case Conn::Diamond:
      return Formula::negate(
          Formula::box(Formula::negate(expanded(f->left))));
    case Conn::Bullet:
      return Formula::bullet(expanded(f->left));
    case Conn::BlackBox:
      return Formula::black_box(expanded(f->left));
    case Conn::BlackDiamond:
      return Formula::negate(
          Formula::black_box(Formula::negate(expanded(f->left))));
  }
  return f;  // unreachable
}

namespace {

bool struct_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Conn::Var) return a->name == b->name;
  if (a->left && !struct_eq(a->left, b->left)) return false;
  if (a->right && !struct_eq(a->right, b->right)) return false;
  return true;
}

}  // namespace

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return struct_eq(expanded(a), expanded(b));
}

int modal_depth(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Var:
    case Conn::Bottom:
    case Conn::Top:
      return 0;
    case Conn::Not:
      return modal_depth(f->left);
    case Conn::And:
    case Conn::Or:
    case Conn::Implies:
    case Conn::Iff:
      return std::max(modal_depth(f->left), modal_depth(f->right));
    default:
      return 1 + modal_depth(f->left);
  }
}

namespace {

void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->kind == Conn::Var) {
    out.insert(f->name);
    return;
  }
  if (f->left) collect_vars(f->left, out);
  if (f->right) collect_vars(f->right, out);
}

}  // namespace

std::vector<std::string> variables_of(const FormulaPtr& f) {
  std::set<std::string> vars;
  collect_vars(f, vars);
  return {vars.begin(), vars.end()};
}

namespace {

FormulaPtr rebuild(Conn k, FormulaPtr l, FormulaPtr r) {
  switch (k) {
    case Conn::Not:
      return Formula::negate(std::move(l));
    case Conn::And:
      return Formula::conj(std::move(l), std::move(r));
    case Conn::Or:
      return Formula::disj(std::move(l), std::move(r));
    case Conn::Implies:
      return Formula::implies(std::move(l), std::move(r));
    case Conn::Iff:
      return Formula::iff(std::move(l), std::move(r));
    case Conn::Box:
      return Formula::box(std::move(l));
    case Conn::Diamond:
      return Formula::diamond(std::move(l));
    case Conn::Bullet:
      return Formula::bullet(std::move(l));
    case Conn::BlackBox:
      return Formula::black_box(std::move(l));
    case Conn::BlackDiamond:
      return Formula::black_diamond(std::move(l));
    default:
      throw std::invalid_argument("rebuild: leaf connective");
  }
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& subst) {
  switch (f->kind) {
    case Conn::Var: {
      auto it = subst.find(f->name);
      return it == subst.end() ? f : it->second;
    }
    case Conn::Bottom:
    case Conn::Top:
      return f;
    default: {
      FormulaPtr l = substitute(f->left, subst);
      FormulaPtr r = f->right ? substitute(f->right, subst) : nullptr;
      return rebuild(f->kind, std::move(l), std::move(r));
    }
  }
}

FormulaPtr swap_modality(const FormulaPtr& f, Conn from, Conn to) {
  // Operate on the expanded form so abbreviations built on `from`
  // (e.g. <> on top of []) are carried over as well.
  FormulaPtr e = expanded(f);
  struct Walk {
    Conn from, to;
    FormulaPtr run(const FormulaPtr& g) {
      if (g->kind == Conn::Var || g->kind == Conn::Bottom ||
          g->kind == Conn::Top)
        return g;
      FormulaPtr l = run(g->left);
      FormulaPtr r = g->right ? run(g->right) : nullptr;
      Conn k = g->kind == from ? to : g->kind;
      return rebuild(k, std::move(l), std::move(r));
    }
  };
  return Walk{from, to}.run(e);
}

namespace {

AxiomSchema make_schema(SchemaId id) {
  FormulaPtr phi = Formula::var("phi");
  FormulaPtr psi = Formula::var("psi");
  auto one = std::vector<std::string>{"phi"};
  auto two = std::vector<std::string>{"phi", "psi"};
  switch (id) {
    case SchemaId::M:
      return {id,
              Formula::implies(Formula::box(Formula::conj(phi, psi)),
                               Formula::conj(Formula::box(phi),
                                             Formula::box(psi))),
              two};
    case SchemaId::C:
      return {id,
              Formula::implies(
                  Formula::conj(Formula::box(phi), Formula::box(psi)),
                  Formula::box(Formula::conj(phi, psi))),
              two};
    case SchemaId::T:
      return {id, Formula::implies(Formula::box(phi), phi), one};
    case SchemaId::D:
      return {id,
              Formula::implies(Formula::box(phi),
                               Formula::negate(
                                   Formula::box(Formula::negate(phi)))),
              one};
    case SchemaId::K:
      return {id,
              Formula::implies(Formula::box(Formula::implies(phi, psi)),
                               Formula::implies(Formula::box(phi),
                                                Formula::box(psi))),
              two};
    case SchemaId::Four:
      return {id,
              Formula::implies(Formula::box(phi),
                               Formula::box(Formula::box(phi))),
              one};
    case SchemaId::N:
      return {id, Formula::box(Formula::top()), {}};
    case SchemaId::BulletT:
      return {id, Formula::implies(Formula::bullet(phi), phi), one};
    case SchemaId::GJ:
      return {id, Formula::implies(Formula::box(phi), Formula::black_box(phi)),
              one};
    case SchemaId::BlackM:
      return {id,
              Formula::implies(
                  Formula::black_box(Formula::conj(phi, psi)),
                  Formula::conj(Formula::black_box(phi),
                                Formula::black_box(psi))),
              two};
  }
  throw std::invalid_argument("unknown schema");
}

}  // namespace

const AxiomSchema& axiom_schema(SchemaId id) {
  static const std::array<AxiomSchema, 10> table = {
      make_schema(SchemaId::M),       make_schema(SchemaId::C),
      make_schema(SchemaId::T),       make_schema(SchemaId::D),
      make_schema(SchemaId::K),       make_schema(SchemaId::Four),
      make_schema(SchemaId::N),       make_schema(SchemaId::BulletT),
      make_schema(SchemaId::GJ),      make_schema(SchemaId::BlackM)};
  return table[static_cast<std::size_t>(id)];
}

std::string schema_name(SchemaId id) {
  switch (id) {
    case SchemaId::M: return "M";
    case SchemaId::C: return "C";
    case SchemaId::T: return "T";
    case SchemaId::D: return "D";
    case SchemaId::K: return "K";
    case SchemaId::Four: return "4";
    case SchemaId::N: return "N";
    case SchemaId::BulletT: return "bullet-T";
    case SchemaId::GJ: return "GJ";
    case SchemaId::BlackM: return "M-black";
  }
  return "?";
}

std::optional<SchemaId> schema_from_name(const std::string& name) {
  static const std::map<std::string, SchemaId> table = {
      {"M", SchemaId::M},        {"C", SchemaId::C},
      {"T", SchemaId::T},        {"D", SchemaId::D},
      {"K", SchemaId::K},        {"4", SchemaId::Four},
      {"N", SchemaId::N},        {"bullet-T", SchemaId::BulletT},
      {"GJ", SchemaId::GJ},      {"M-black", SchemaId::BlackM}};
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FormulaPtr instantiate(const AxiomSchema& schema,
                       const std::map<std::string, FormulaPtr>& subst) {
  for (const auto& mv : schema.metavars)
    if (!subst.count(mv))
      throw std::invalid_argument("instantiate: unbound metavariable '" + mv +
                                  "'");
  return substitute(schema.schema_template, subst);
}

FormulaEnumerator::FormulaEnumerator(std::vector<std::string> vars,
                                     int max_nodes, unsigned ops)
    : vars_(std::move(vars)), max_nodes_(max_nodes), ops_(ops) {
  if (max_nodes_ < 1)
    throw std::invalid_argument("FormulaEnumerator: max_nodes must be >= 1");
}

const std::vector<FormulaPtr>& FormulaEnumerator::level(int size) {
  while (static_cast<int>(levels_.size()) < size) {
    int s = static_cast<int>(levels_.size()) + 1;
    std::vector<FormulaPtr> out;
    if (s == 1) {
      for (const auto& v : vars_) out.push_back(Formula::var(v));
      out.push_back(Formula::bottom());
    } else {
      for (const auto& g : level(s - 1)) out.push_back(Formula::negate(g));
      if (ops_ & kOpBox)
        for (const auto& g : level(s - 1)) out.push_back(Formula::box(g));
      if (ops_ & kOpBullet)
        for (const auto& g : level(s - 1)) out.push_back(Formula::bullet(g));
      if (ops_ & kOpBlackBox)
        for (const auto& g : level(s - 1))
          out.push_back(Formula::black_box(g));
      for (int i = 1; i <= s - 2; ++i)
        for (const auto& a : level(i))
          for (const auto& b : level(s - 1 - i))
            out.push_back(Formula::conj(a, b));
    }
    levels_.push_back(std::move(out));
  }
  return levels_[static_cast<std::size_t>(size - 1)];
}

std::optional<FormulaPtr> FormulaEnumerator::next() {
  while (current_size_ <= max_nodes_) {
    const auto& lvl = level(current_size_);
    if (index_ < lvl.size()) return lvl[index_++];
    ++current_size_;
    index_ = 0;
  }
  return std::nullopt;
}

std::vector<FormulaPtr> enumerate_all(const std::vector<std::string>& vars,
                                      int max_nodes, unsigned ops) {
  FormulaEnumerator e(vars, max_nodes, ops);
  std::vector<FormulaPtr> out;
  while (auto f = e.next()) out.push_back(*f);
  return out;
}

bool is_mod_shape(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Box:
      return true;
    case Conn::And:
    case Conn::Or:
    case Conn::Implies:
      return is_mod_shape(f->left) && is_mod_shape(f->right);
    default:
      return false;
  }
}

}  // namespace gentop
