#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sort.hpp"

namespace relcat {

/// Relation-term AST. Identifiers are resolved late: a Name node is a law
/// variable, a let-binding, or a model relation depending on the evaluation
/// environment. Structural constants carry the sort expressions they were
/// written with.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind {
    Name,                    // variable / given / let / model relation
    Id, Bot, Top,            // I[A], bot[A,B], top[A,B]
    Pi, Rho,                 // pi[A,B], rho[A,B]
    Eps, NeEps,              // eps[A], neps[A]
    Assoc, Swap,             // assoc[A,B,C], swap[A,B]
    Meet, Join, Impl, Comp,  // binary infixes
    Conv, Star, Dom,         // unary functions
    LRes, RRes, Syq,         // binary functions
    Ubd, Lbd, Lub, Glb,      // binary functions
    Fork, Pair, Tensor,      // binary functions over registered products
  };

  Kind kind;
  std::string name;          // Name
  std::vector<TermPtr> args;
  std::vector<Sort> sorts;   // constants only

  static TermPtr mk(Kind k, std::vector<TermPtr> args = {}, std::vector<Sort> sorts = {});
  static TermPtr mkName(std::string n);
};

/// Canonical text with minimal parentheses (binding, tightest first:
/// composition ';', meet '&', join '|', impl '->'). parse(print(t)) == t.
std::string printTerm(const TermPtr& t);

/// Parses a relation term. Throws SyntaxError with line/column information.
TermPtr parseTerm(const std::string& text);

/// Structural equality of ASTs.
bool termEq(const TermPtr& a, const TermPtr& b);

// -- laws ----------------------------------------------------------------------

struct Hyp {
  enum class Kind { Pred, Incl, Eq };
  Kind kind = Kind::Pred;
  std::string pred;           // Pred: predicate name from the fixed vocabulary
  std::vector<TermPtr> args;  // Pred arguments
  TermPtr lhs, rhs;           // Incl / Eq
};

struct Clause {
  enum class Kind { Incl, Eq, IffIncl };
  Kind kind = Kind::Incl;
  std::vector<Hyp> guards;  // clause-local side conditions
  TermPtr lhs, rhs;         // Incl/Eq; first inclusion of IffIncl
  TermPtr lhs2, rhs2;       // second inclusion of IffIncl
};

struct VarDecl {
  std::string name;
  Sort src, tgt;
};

/// A checkable conditional law: quantified relation variables, model-supplied
/// constants, shared definitions, hypotheses, and conjunctive conclusion
/// clauses.
struct Law {
  std::string id;
  std::string anchor;  // what the statement is, for the laws listing
  std::string notes;
  bool expectFail = false;
  bool crispOnly = false;
  std::string fixtureModel;  // designated model for expected-fail laws

  std::vector<VarDecl> vars;    // quantified
  std::vector<VarDecl> givens;  // resolved from the model
  std::vector<std::pair<std::string, TermPtr>> lets;
  std::vector<Hyp> hyps;
  std::vector<Clause> clauses;
};

std::string printLaw(const Law& law);
/// Parses one or more law blocks (directives are line-based).
std::vector<Law> parseLaws(const std::string& text);
Law parseLaw(const std::string& text);

Sort parseSort(const std::string& text);

/// Names of the fixed hypothesis-predicate vocabulary.
const std::vector<std::string>& predicateNames();
bool isPredicateName(const std::string& name);

}  // namespace relcat
