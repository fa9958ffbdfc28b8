#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentop {

enum class Conn {
  Var,
  Bottom,
  Top,
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
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Top, Diamond, BlackDiamond and Iff are
// abbreviations (¬⊥, ¬□¬, ¬■¬ and the two-way implication); they are
// kept as written but every consumer treats them exactly like their
// expansions.
class Formula {
 public:
  Conn kind;
  std::string name;  // variable name, Var only
  FormulaPtr left;
  FormulaPtr right;  // binary connectives only

  static FormulaPtr var(std::string name);
  static FormulaPtr bottom();
  static FormulaPtr top();
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr box(FormulaPtr f);
  static FormulaPtr diamond(FormulaPtr f);
  static FormulaPtr bullet(FormulaPtr f);
  static FormulaPtr black_box(FormulaPtr f);
  static FormulaPtr black_diamond(FormulaPtr f);

 private:
  Formula(Conn k, std::string n, FormulaPtr l, FormulaPtr r)
      : kind(k), name(std::move(n)), left(std::move(l)),
        right(std::move(r)) {}
  static FormulaPtr make(Conn k, std::string n, FormulaPtr l, FormulaPtr r);
};

struct FormulaParseError : std::runtime_error {
  std::size_t position;
  FormulaParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

// Raised when a formula uses a modality the target model kind does not
// interpret (e.g. ■ on a plain GTF-model).
struct UnsupportedOperator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ASCII grammar: ~ & | -> <-> [] <> * [b] <b> false true, variables
// /[a-z][a-z0-9_]*/, unary operators bind tightest, -> right-associative.
FormulaPtr parse_formula(const std::string& text);
std::string to_text(const FormulaPtr& f);

// Rewrites Top/Diamond/BlackDiamond/Iff into the core connectives.
FormulaPtr expanded(const FormulaPtr& f);

// Structural equality modulo abbreviation expansion.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

int modal_depth(const FormulaPtr& f);
std::vector<std::string> variables_of(const FormulaPtr& f);

// Uniform substitution of variables by formulas.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& subst);

// Swaps one modality for another throughout (used by the translation
// between bullet-read and box-read models).
FormulaPtr swap_modality(const FormulaPtr& f, Conn from, Conn to);

enum class SchemaId { M, C, T, D, K, Four, N, BulletT, GJ, BlackM };

struct AxiomSchema {
  SchemaId id;
  FormulaPtr schema_template;        // over metavariables "phi", "psi"
  std::vector<std::string> metavars;
};

const AxiomSchema& axiom_schema(SchemaId id);
std::string schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(const std::string& name);

// Uniform instantiation; throws std::invalid_argument when a
// metavariable of the schema is unbound.
FormulaPtr instantiate(const AxiomSchema& schema,
                       const std::map<std::string, FormulaPtr>& subst);

// Modal operators admitted by an enumeration.
enum ModalOps : unsigned {
  kOpBox = 1u,
  kOpBullet = 2u,
  kOpBlackBox = 4u,
  kOpAllModal = kOpBox | kOpBullet | kOpBlackBox,
};

// Exhaustive, duplicate-free enumeration of formulas over the adequate
// basis {Var, ⊥, ¬, ∧} plus the selected modal operators, by AST node
// count. Deterministic order; one consumer per instance.
class FormulaEnumerator {
 public:
  FormulaEnumerator(std::vector<std::string> vars, int max_nodes,
                    unsigned ops = kOpAllModal);

  std::optional<FormulaPtr> next();

 private:
  const std::vector<FormulaPtr>& level(int size);

  std::vector<std::string> vars_;
  int max_nodes_;
  unsigned ops_;
  std::vector<std::vector<FormulaPtr>> levels_;  // levels_[s-1] = size s
  int current_size_ = 1;
  std::size_t index_ = 0;
};

std::vector<FormulaPtr> enumerate_all(const std::vector<std::string>& vars,
                                      int max_nodes,
                                      unsigned ops = kOpAllModal);

// The fragment of formulas whose atoms are all box-rooted: □γ is in
// the fragment, and conjunctions of fragment members are too (over the
// enumeration basis ∧ is the only binary connective).
bool is_mod_shape(const FormulaPtr& f);

}  // namespace gentop
