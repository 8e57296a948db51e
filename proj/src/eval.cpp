#include "eval.hpp"

namespace relcat {

namespace {

using Kind = Term::Kind;

[[noreturn]] void sortMismatch(const std::string& what, const Sort& a, const Sort& b) {
  fail(Errc::SortMismatch, what + ": '" + a.str() + "' vs '" + b.str() + "'");
}

void needSort(std::vector<Sort>* needs, Sort s) {
  if (needs) needs->push_back(std::move(s));
}

}  // namespace

std::pair<Sort, Sort> typecheck(const TermPtr& t, const TypeEnv& env, std::vector<Sort>* needs) {
  switch (t->kind) {
    case Kind::Name: {
      auto it = env.names.find(t->name);
      if (it == env.names.end())
        fail(Errc::UnknownIdentifier, "'" + t->name + "' is not declared");
      return it->second;
    }
    case Kind::Id: return {t->sorts[0], t->sorts[0]};
    case Kind::Bot:
    case Kind::Top: return {t->sorts[0], t->sorts[1]};
    case Kind::Pi:
      needSort(needs, Sort::prod(t->sorts[0], t->sorts[1]));
      return {Sort::prod(t->sorts[0], t->sorts[1]), t->sorts[0]};
    case Kind::Rho:
      needSort(needs, Sort::prod(t->sorts[0], t->sorts[1]));
      return {Sort::prod(t->sorts[0], t->sorts[1]), t->sorts[1]};
    case Kind::Eps:
      needSort(needs, Sort::pow(t->sorts[0]));
      return {t->sorts[0], Sort::pow(t->sorts[0])};
    case Kind::NeEps:
      needSort(needs, Sort::nepow(t->sorts[0]));
      return {t->sorts[0], Sort::nepow(t->sorts[0])};
    case Kind::Swap:
      needSort(needs, Sort::prod(t->sorts[0], t->sorts[1]));
      needSort(needs, Sort::prod(t->sorts[1], t->sorts[0]));
      return {Sort::prod(t->sorts[0], t->sorts[1]), Sort::prod(t->sorts[1], t->sorts[0])};
    case Kind::Assoc: {
      const Sort &a = t->sorts[0], &b = t->sorts[1], &c = t->sorts[2];
      needSort(needs, Sort::prod(a, Sort::prod(b, c)));
      needSort(needs, Sort::prod(Sort::prod(a, b), c));
      return {Sort::prod(a, Sort::prod(b, c)), Sort::prod(Sort::prod(a, b), c)};
    }
    case Kind::Meet:
    case Kind::Join:
    case Kind::Impl: {
      auto l = typecheck(t->args[0], env, needs);
      auto r = typecheck(t->args[1], env, needs);
      if (l != r) sortMismatch("lattice operation needs equal sorts", l.first, r.first);
      return l;
    }
    case Kind::Comp: {
      auto l = typecheck(t->args[0], env, needs);
      auto r = typecheck(t->args[1], env, needs);
      if (l.second != r.first) sortMismatch("composition needs target = source", l.second, r.first);
      return {l.first, r.second};
    }
    case Kind::Conv: {
      auto a = typecheck(t->args[0], env, needs);
      return {a.second, a.first};
    }
    case Kind::Star: return typecheck(t->args[0], env, needs);
    case Kind::Dom: {
      auto a = typecheck(t->args[0], env, needs);
      return {a.first, a.first};
    }
    case Kind::LRes:
    case Kind::Syq: {
      auto q = typecheck(t->args[0], env, needs);
      auto r = typecheck(t->args[1], env, needs);
      if (q.first != r.first) sortMismatch("residual needs common sources", q.first, r.first);
      return {q.second, r.second};
    }
    case Kind::RRes: {
      auto s = typecheck(t->args[0], env, needs);
      auto r = typecheck(t->args[1], env, needs);
      if (s.second != r.second) sortMismatch("residual needs common targets", s.second, r.second);
      return {s.first, r.first};
    }
    case Kind::Ubd:
    case Kind::Lbd:
    case Kind::Lub:
    case Kind::Glb: {
      auto e = typecheck(t->args[0], env, needs);
      auto x = typecheck(t->args[1], env, needs);
      if (e.first != e.second) sortMismatch("bound operation needs a square ordering", e.first, e.second);
      if (x.second != e.first) sortMismatch("bound operation needs x : B -> A", x.second, e.first);
      return x;
    }
    case Kind::Fork: {
      auto q = typecheck(t->args[0], env, needs);
      auto r = typecheck(t->args[1], env, needs);
      if (q.first != r.first) sortMismatch("fork needs a common source", q.first, r.first);
      needSort(needs, Sort::prod(q.second, r.second));
      return {q.first, Sort::prod(q.second, r.second)};
    }
    case Kind::Pair: {
      auto q = typecheck(t->args[0], env, needs);
      auto s = typecheck(t->args[1], env, needs);
      if (q.second != s.second) sortMismatch("pair needs a common target", q.second, s.second);
      needSort(needs, Sort::prod(q.first, s.first));
      return {Sort::prod(q.first, s.first), q.second};
    }
    case Kind::Tensor: {
      auto q = typecheck(t->args[0], env, needs);
      auto u = typecheck(t->args[1], env, needs);
      needSort(needs, Sort::prod(q.first, u.first));
      needSort(needs, Sort::prod(q.second, u.second));
      return {Sort::prod(q.first, u.first), Sort::prod(q.second, u.second)};
    }
  }
  fail(Errc::Internal, "unhandled term kind");
}

void typecheckHyp(const Hyp& h, const TypeEnv& env, std::vector<Sort>* needs) {
  if (h.kind == Hyp::Kind::Pred) {
    size_t arity = h.pred == "complemented" ? 2 : 1;
    if (h.args.size() != arity)
      fail(Errc::SortMismatch, "predicate '" + h.pred + "' takes " + std::to_string(arity) +
                                   " argument(s)");
    std::vector<std::pair<Sort, Sort>> sorts;
    for (const auto& a : h.args) sorts.push_back(typecheck(a, env, needs));
    static const std::vector<std::string> squareOnly = {
        "transitive", "dense",         "asymmetric",        "strict_order",
        "reflexive",  "antisymmetric", "linear_strict_order", "ordering",
        "partial_identity", "symmetric"};
    if (std::find(squareOnly.begin(), squareOnly.end(), h.pred) != squareOnly.end() &&
        sorts[0].first != sorts[0].second)
      sortMismatch("predicate '" + h.pred + "' needs a square relation", sorts[0].first,
                   sorts[0].second);
    if (h.pred == "complemented" && sorts[0] != sorts[1])
      sortMismatch("complemented pair needs equal sorts", sorts[0].first, sorts[1].first);
    return;
  }
  auto l = typecheck(h.lhs, env, needs);
  auto r = typecheck(h.rhs, env, needs);
  if (l != r) sortMismatch("hypothesis compares different sorts", l.first, r.first);
}

void typecheckClause(const Clause& c, const TypeEnv& env, std::vector<Sort>* needs) {
  for (const auto& g : c.guards) typecheckHyp(g, env, needs);
  auto l = typecheck(c.lhs, env, needs);
  auto r = typecheck(c.rhs, env, needs);
  if (l != r) sortMismatch("conclusion compares different sorts", l.first, r.first);
  if (c.kind == Clause::Kind::IffIncl) {
    auto l2 = typecheck(c.lhs2, env, needs);
    auto r2 = typecheck(c.rhs2, env, needs);
    if (l2 != r2) sortMismatch("conclusion compares different sorts", l2.first, r2.first);
  }
}

TypeEnv typeEnvFromModel(const Model& m) {
  TypeEnv env;
  for (const auto& [name, r] : m.relations()) {
    try {
      env.names[name] = {parseSort(r.source()->name), parseSort(r.target()->name)};
    } catch (const Error&) {
      // endpoint object is not expressible as a sort; skip the relation
    }
  }
  return env;
}

Rel evaluate(const TermPtr& t, const EvalEnv& env) {
  const Model& m = env.model;
  const AlgebraPtr& alg = m.algebra();
  auto obj = [&](const Sort& s) { return m.resolveSortConst(s); };
  auto product = [&](const ObjPtr& a, const ObjPtr& b) -> const ProductWitness& {
    const ProductWitness* w = m.lookupProduct(a, b);
    if (!w)
      fail(Errc::MissingProduct,
           "no product witness registered for " + a->name + " x " + b->name);
    return *w;
  };

  switch (t->kind) {
    case Kind::Name: {
      if (env.binding) {
        auto it = env.binding->find(t->name);
        if (it != env.binding->end()) return it->second;
      }
      if (const Rel* r = m.tryRelation(t->name)) return *r;
      fail(Errc::UnknownIdentifier, "'" + t->name + "' names no bound variable or model relation");
    }
    case Kind::Id: return identity(alg, obj(t->sorts[0]));
    case Kind::Bot: return bottomRel(alg, obj(t->sorts[0]), obj(t->sorts[1]));
    case Kind::Top: return topRel(alg, obj(t->sorts[0]), obj(t->sorts[1]));
    case Kind::Pi: return product(obj(t->sorts[0]), obj(t->sorts[1])).pi;
    case Kind::Rho: return product(obj(t->sorts[0]), obj(t->sorts[1])).rho;
    case Kind::Eps: {
      const PowerWitness* w = m.lookupPower(obj(t->sorts[0]));
      if (!w) fail(Errc::MissingWitness, "no power witness for " + t->sorts[0].str());
      return w->eps;
    }
    case Kind::NeEps: {
      const NePowerWitness* w = m.lookupNePower(obj(t->sorts[0]));
      if (!w) fail(Errc::MissingWitness, "no non-empty power witness for " + t->sorts[0].str());
      return w->eps;
    }
    case Kind::Swap:
      return swapMap(product(obj(t->sorts[0]), obj(t->sorts[1])),
                     product(obj(t->sorts[1]), obj(t->sorts[0])));
    case Kind::Assoc: {
      ObjPtr a = obj(t->sorts[0]), b = obj(t->sorts[1]), c = obj(t->sorts[2]);
      const ProductWitness& ab = product(a, b);
      const ProductWitness& bc = product(b, c);
      return assocMap(ab, bc, product(a, bc.prodObj), product(ab.prodObj, c));
    }
    case Kind::Meet: return meet(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Join: return join(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Impl: return implRel(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Comp: return compose(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Conv: return converse(evaluate(t->args[0], env));
    case Kind::Star: return star(evaluate(t->args[0], env));
    case Kind::Dom: return dom(evaluate(t->args[0], env));
    case Kind::LRes: return lres(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::RRes: return rres(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Syq: return syq(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Ubd: return ubd(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Lbd: return lbd(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Lub: return lub(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Glb: return glb(evaluate(t->args[0], env), evaluate(t->args[1], env));
    case Kind::Fork: {
      Rel q = evaluate(t->args[0], env), r = evaluate(t->args[1], env);
      return fork(q, r, product(q.target(), r.target()));
    }
    case Kind::Pair: {
      Rel q = evaluate(t->args[0], env), s = evaluate(t->args[1], env);
      return pairRel(q, s, product(q.source(), s.source()));
    }
    case Kind::Tensor: {
      Rel q = evaluate(t->args[0], env), u = evaluate(t->args[1], env);
      return tensor(q, u, product(q.source(), u.source()), product(q.target(), u.target()));
    }
  }
  fail(Errc::Internal, "unhandled term kind");
}

bool evalPredicate(const std::string& pred, const std::vector<Rel>& args) {
  const Rel& q = args[0];
  if (pred == "univalent") return isUnivalent(q);
  if (pred == "total") return isTotal(q);
  if (pred == "injective") return isInjective(q);
  if (pred == "surjective") return isSurjective(q);
  if (pred == "map") return isMap(q);
  if (pred == "bijection") return isBijection(q);
  if (pred == "point") return q.source()->size() == 1 && isMap(q);
  if (pred == "transitive") return isTransitive(q);
  if (pred == "dense") return isDense(q);
  if (pred == "asymmetric") return isAsymmetric(q);
  if (pred == "strict_order") return isStrictOrder(q);
  if (pred == "linear_strict_order") return isLinearStrictOrder(q);
  if (pred == "reflexive") return isReflexive(q);
  if (pred == "antisymmetric") return isAntisymmetric(q);
  if (pred == "ordering") return isOrdering(q);
  if (pred == "partial_identity") return isPartialIdentity(q);
  if (pred == "regular") return isRegular(q);
  if (pred == "crisp") return q.isCrisp();
  if (pred == "symmetric") return isSymmetric(q);
  if (pred == "complemented") return isComplementedPair(q, args[1]);
  fail(Errc::UnknownIdentifier, "unknown predicate '" + pred + "'");
}

bool evalHyp(const Hyp& h, const EvalEnv& env) {
  if (h.kind == Hyp::Kind::Pred) {
    std::vector<Rel> args;
    args.reserve(h.args.size());
    for (const auto& a : h.args) args.push_back(evaluate(a, env));
    return evalPredicate(h.pred, args);
  }
  Rel l = evaluate(h.lhs, env);
  Rel r = evaluate(h.rhs, env);
  return h.kind == Hyp::Kind::Incl ? incl(l, r) : l == r;
}

bool evalClause(const Clause& c, const EvalEnv& env) {
  for (const auto& g : c.guards)
    if (!evalHyp(g, env)) return true;  // side condition not met; nothing to check
  switch (c.kind) {
    case Clause::Kind::Incl: return incl(evaluate(c.lhs, env), evaluate(c.rhs, env));
    case Clause::Kind::Eq: return evaluate(c.lhs, env) == evaluate(c.rhs, env);
    case Clause::Kind::IffIncl:
      return incl(evaluate(c.lhs, env), evaluate(c.rhs, env)) ==
             incl(evaluate(c.lhs2, env), evaluate(c.rhs2, env));
  }
  fail(Errc::Internal, "unhandled clause kind");
}

}  // namespace relcat
