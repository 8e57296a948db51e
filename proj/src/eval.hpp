#pragma once

#include <map>

#include "model.hpp"
#include "term.hpp"

namespace relcat {

/// Sort assignments for the free names of a term (law variables, givens,
/// lets, or model relations).
struct TypeEnv {
  std::map<std::string, std::pair<Sort, Sort>> names;
};

/// Sorts every node and returns the root sort pair. Composition requires
/// target = source, residuals follow the hom-set typing, and structural
/// constants report the witnesses they rely on into `needs` (for later
/// registration). Throws SortMismatch with both offending sorts, or
/// UnknownIdentifier.
std::pair<Sort, Sort> typecheck(const TermPtr& t, const TypeEnv& env,
                                std::vector<Sort>* needs = nullptr);

void typecheckHyp(const Hyp& h, const TypeEnv& env, std::vector<Sort>* needs = nullptr);
void typecheckClause(const Clause& c, const TypeEnv& env, std::vector<Sort>* needs = nullptr);

/// Type environment exposing every model relation whose endpoint names are
/// sort expressions (standalone term evaluation resolves free names this way).
TypeEnv typeEnvFromModel(const Model& m);

/// Evaluation environment: a model for constants/witnesses plus an optional
/// variable binding consulted before model relations.
struct EvalEnv {
  const Model& model;
  const std::map<std::string, Rel>* binding = nullptr;
};

/// Compositional, pure evaluation of a sorted term to an exact matrix.
Rel evaluate(const TermPtr& t, const EvalEnv& env);

/// Hypothesis predicates (the fixed vocabulary) on evaluated arguments.
bool evalPredicate(const std::string& pred, const std::vector<Rel>& args);
bool evalHyp(const Hyp& h, const EvalEnv& env);
/// A clause holds when some guard fails (it is skipped) or its statement is true.
bool evalClause(const Clause& c, const EvalEnv& env);

}  // namespace relcat
