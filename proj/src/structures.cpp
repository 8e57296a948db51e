#include "structures.hpp"

#include <algorithm>
#include <random>

namespace relcat {

namespace {

std::string factorName(const std::string& n) {
  return n.find('*') == std::string::npos ? n : "(" + n + ")";
}

std::string prodObjName(const ObjPtr& a, const ObjPtr& b) {
  return factorName(a->name) + "*" + factorName(b->name);
}

uint64_t ipow(uint64_t b, uint64_t e, uint64_t cap) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    if (r > cap / (b ? b : 1)) return cap + 1;
    r *= b;
  }
  return r;
}

}  // namespace

ObjPtr unitObj() {
  static const ObjPtr u = makeObj("1", std::vector<std::string>{"*"});
  return u;
}

bool isUnit(const AlgebraPtr& alg, const ObjPtr& u, const std::vector<ObjPtr>& registered) {
  if (identity(alg, u) != topRel(alg, u, u)) return false;
  for (const auto& b : registered)
    if (!isTotal(topRel(alg, b, u))) return false;
  return true;
}

ProductWitness productObject(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b) {
  std::vector<std::string> carrier;
  carrier.reserve(static_cast<size_t>(a->size()) * b->size());
  for (const auto& x : a->carrier)
    for (const auto& y : b->carrier) carrier.push_back("(" + x + "," + y + ")");
  ObjPtr p = makeObj(prodObjName(a, b), std::move(carrier));

  Rel pi(alg, p, a), rho(alg, p, b);
  for (int i = 0; i < a->size(); ++i)
    for (int j = 0; j < b->size(); ++j) {
      pi.set(i * b->size() + j, i, alg->top());
      rho.set(i * b->size() + j, j, alg->top());
    }

  ProductWitness w{a, b, p, pi, rho};
  if (!incl(compose(converse(w.pi), w.pi), identity(alg, a)) ||
      !incl(compose(converse(w.rho), w.rho), identity(alg, b)) ||
      meet(compose(w.pi, converse(w.pi)), compose(w.rho, converse(w.rho))) != identity(alg, p) ||
      compose(converse(w.pi), w.rho) != topRel(alg, a, b))
    fail(Errc::AxiomViolation, "projections of " + p->name + " violate a product axiom");
  return w;
}

Rel fork(const Rel& q, const Rel& r, const ProductWitness& w) {
  if (!sameObj(q.target(), w.left) || !sameObj(r.target(), w.right))
    fail(Errc::TypeMismatch, "fork arguments do not match product " + w.prodObj->name);
  if (!sameObj(q.source(), r.source())) fail(Errc::TypeMismatch, "fork needs a common source");
  return meet(compose(q, converse(w.pi)), compose(r, converse(w.rho)));
}

Rel pairRel(const Rel& q, const Rel& s, const ProductWitness& w) {
  if (!sameObj(q.source(), w.left) || !sameObj(s.source(), w.right))
    fail(Errc::TypeMismatch, "pair arguments do not match product " + w.prodObj->name);
  if (!sameObj(q.target(), s.target())) fail(Errc::TypeMismatch, "pair needs a common target");
  return meet(compose(w.pi, q), compose(w.rho, s));
}

Rel tensor(const Rel& q, const Rel& t, const ProductWitness& src, const ProductWitness& tgt) {
  if (!sameObj(q.source(), src.left) || !sameObj(t.source(), src.right) ||
      !sameObj(q.target(), tgt.left) || !sameObj(t.target(), tgt.right))
    fail(Errc::TypeMismatch, "tensor arguments do not match the given products");
  return meet(compose(compose(src.pi, q), converse(tgt.pi)),
              compose(compose(src.rho, t), converse(tgt.rho)));
}

Rel swapMap(const ProductWitness& ab, const ProductWitness& ba) {
  if (!sameObj(ab.left, ba.right) || !sameObj(ab.right, ba.left))
    fail(Errc::TypeMismatch, "swap needs products A*B and B*A");
  Rel s = meet(compose(ab.pi, converse(ba.rho)), compose(ab.rho, converse(ba.pi)));

  // independent route: the expected permutation (a,b) |-> (b,a)
  const AlgebraPtr& alg = s.algebra();
  Rel expected(alg, ab.prodObj, ba.prodObj);
  int na = ab.left->size(), nb = ab.right->size();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) expected.set(i * nb + j, j * na + i, alg->top());
  if (s != expected) fail(Errc::AxiomViolation, "swap formula disagrees with the pair permutation");
  return s;
}

Rel assocMap(const ProductWitness& ab, const ProductWitness& bc, const ProductWitness& a_bc,
             const ProductWitness& ab_c) {
  if (!sameObj(a_bc.right, bc.prodObj) || !sameObj(ab_c.left, ab.prodObj) ||
      !sameObj(a_bc.left, ab.left) || !sameObj(bc.left, ab.right) ||
      !sameObj(bc.right, ab_c.right))
    fail(Errc::TypeMismatch, "assoc needs products A*B, B*C, A*(B*C) and (A*B)*C");

  Rel t1 = compose(compose(a_bc.pi, converse(ab.pi)), converse(ab_c.pi));
  Rel t2 = compose(compose(compose(a_bc.rho, bc.pi), converse(ab.rho)), converse(ab_c.pi));
  Rel t3 = compose(compose(a_bc.rho, bc.rho), converse(ab_c.rho));
  Rel a = meet(meet(t1, t2), t3);

  const AlgebraPtr& alg = a.algebra();
  int na = ab.left->size(), nb = ab.right->size(), nc = bc.right->size();
  Rel expected(alg, a_bc.prodObj, ab_c.prodObj);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nc; ++k)
        expected.set(i * (nb * nc) + j * nc + k, (i * nb + j) * nc + k, alg->top());
  if (a != expected) fail(Errc::AxiomViolation, "assoc formula disagrees with the pair permutation");
  return a;
}

namespace {

// Functions carrier(A) -> L in lexicographic order of value tuples. Names are
// plain concatenations when every element name is one character (so Boolean
// subsets read "01", "10", ...), joined with ':' otherwise.
struct FunctionSpace {
  std::vector<std::vector<int>> tuples;
  std::vector<std::string> names;
};

FunctionSpace enumerateFunctions(const HeytingAlgebra& alg, int arity, uint64_t bound) {
  uint64_t count = ipow(alg.size(), arity, bound);
  if (count > bound)
    fail(Errc::PowerTooLarge, "function space exceeds the configured bound of " +
                                  std::to_string(bound));
  bool shortNames = true;
  for (const auto& n : alg.names())
    if (n.size() != 1) shortNames = false;

  FunctionSpace fs;
  std::vector<int> tuple(arity, 0);
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t rem = k;
    for (int a = arity - 1; a >= 0; --a) {
      tuple[a] = static_cast<int>(rem % alg.size());
      rem /= alg.size();
    }
    std::string name;
    for (int a = 0; a < arity; ++a) {
      if (a && !shortNames) name += ':';
      name += alg.name(tuple[a]);
    }
    fs.tuples.push_back(tuple);
    fs.names.push_back(std::move(name));
  }
  return fs;
}

// All Q : A -> 1 and Q : A -> A, exhaustively when each family stays within
// 4096 matrices, otherwise a seeded sample of `samples` per family.
template <typename Fn>
std::string sweepQ(const AlgebraPtr& alg, const ObjPtr& a, int samples, uint64_t seed, Fn&& check) {
  bool exhaustive = true;
  std::mt19937_64 rng(seed);
  for (const ObjPtr& b : {unitObj(), a}) {
    uint64_t entries = static_cast<uint64_t>(a->size()) * b->size();
    uint64_t count = ipow(alg->size(), entries, 4096);
    if (count <= 4096) {
      std::vector<int> digits(entries, 0);
      for (uint64_t k = 0; k < count; ++k) {
        uint64_t rem = k;
        for (int d = static_cast<int>(entries) - 1; d >= 0; --d) {
          digits[d] = static_cast<int>(rem % alg->size());
          rem /= alg->size();
        }
        check(Rel(alg, a, b, digits));
      }
    } else {
      exhaustive = false;
      std::vector<int> digits(entries);
      for (int s = 0; s < samples; ++s) {
        for (auto& d : digits) d = static_cast<int>(rng() % alg->size());
        check(Rel(alg, a, b, digits));
      }
    }
  }
  return exhaustive ? "exhaustive" : "random(" + std::to_string(samples) + "," + std::to_string(seed) + ")";
}

}  // namespace

PowerWitness powerObject(const AlgebraPtr& alg, const ObjPtr& a, int bound, int samples,
                         uint64_t seed) {
  FunctionSpace fs = enumerateFunctions(*alg, a->size(), bound);
  ObjPtr p = makeObj("P(" + a->name + ")", std::move(fs.names));
  Rel eps(alg, a, p);
  for (int f = 0; f < p->size(); ++f)
    for (int x = 0; x < a->size(); ++x) eps.set(x, f, fs.tuples[f][x]);

  PowerWitness w{a, p, eps, false, false, ""};
  w.syqIdentity = syq(eps, eps) == identity(alg, p);
  bool total = true;
  w.regime = sweepQ(alg, a, samples, seed, [&](const Rel& q) {
    if (total && !isTotal(syq(q, eps))) total = false;
  });
  w.totality = total;
  return w;
}

NePowerWitness nonEmptyPower(const AlgebraPtr& alg, const ObjPtr& a, int bound, int samples,
                             uint64_t seed) {
  FunctionSpace fs = enumerateFunctions(*alg, a->size(), bound);
  std::vector<std::vector<int>> tuples;
  std::vector<std::string> names;
  for (size_t f = 0; f < fs.tuples.size(); ++f) {
    int j = alg->bot();
    for (int v : fs.tuples[f]) j = alg->join(j, v);
    if (j == alg->top()) {
      tuples.push_back(fs.tuples[f]);
      names.push_back(fs.names[f]);
    }
  }
  if (tuples.empty()) fail(Errc::Internal, "non-empty power carrier is empty");
  ObjPtr p = makeObj("N(" + a->name + ")", std::move(names));
  Rel eps(alg, a, p);
  for (int f = 0; f < p->size(); ++f)
    for (int x = 0; x < a->size(); ++x) eps.set(x, f, tuples[f][x]);

  NePowerWitness w{a, p, eps, false, false, ""};
  w.syqIdentity = syq(eps, eps) == identity(alg, p);
  bool domOk = true;
  w.regime = sweepQ(alg, a, samples, seed, [&](const Rel& q) {
    if (domOk && dom(syq(q, eps)) != dom(converse(q))) domOk = false;
  });
  w.domCondition = domOk;
  return w;
}

Splitting split(const Rel& x) {
  if (!sameObj(x.source(), x.target()))
    fail(Errc::TypeMismatch, "split needs a square relation");
  if (!x.isCrisp())
    fail(Errc::NotCrisp, "split is only constructed for crisp partial equivalences");
  if (!isSymmetric(x) || !isTransitive(x))
    fail(Errc::NotPER, "split needs a symmetric transitive relation");

  const AlgebraPtr& alg = x.algebra();
  const ObjPtr& a = x.source();
  const int top = alg->top();
  const int n = a->size();

  std::vector<int> classOf(n, -1);
  std::vector<std::string> classNames;
  std::vector<int> representative;
  for (int i = 0; i < n; ++i) {
    if (x.at(i, i) != top) continue;  // outside the domain
    bool fresh = true;
    for (size_t c = 0; c < representative.size(); ++c)
      if (x.at(representative[c], i) == top) {
        classOf[i] = static_cast<int>(c);
        fresh = false;
        break;
      }
    if (fresh) {
      classOf[i] = static_cast<int>(representative.size());
      representative.push_back(i);
      classNames.push_back("[" + a->carrier[i] + "]");
    }
  }
  if (classNames.empty())
    fail(Errc::NotPER, "relation has an empty domain; the class object would be empty");

  ObjPtr classes = makeObj("split(" + a->name + ")", std::move(classNames));
  Rel r(alg, classes, a);
  for (int i = 0; i < n; ++i)
    if (classOf[i] >= 0) r.set(classOf[i], i, top);

  if (compose(r, converse(r)) != identity(alg, classes) || compose(converse(r), r) != x)
    fail(Errc::NotPER, "defining equations of the splitting do not hold");
  return Splitting{classes, r};
}

NePowerWitness nePowerViaSplit(const PowerWitness& pw, int samples, uint64_t seed) {
  Splitting s = split(dom(converse(pw.eps)));
  Rel eps = compose(pw.eps, converse(s.r));
  const AlgebraPtr& alg = eps.algebra();

  NePowerWitness w{pw.base, s.classes, eps, false, false, ""};
  w.syqIdentity = syq(eps, eps) == identity(alg, s.classes);
  bool domOk = true;
  w.regime = sweepQ(alg, pw.base, samples, seed, [&](const Rel& q) {
    if (domOk && dom(syq(q, eps)) != dom(converse(q))) domOk = false;
  });
  w.domCondition = domOk;
  return w;
}

bool StructureReport::allPass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

const CheckItem* StructureReport::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

GroupCandidate makeGroupCandidate(const AlgebraPtr& alg, const ObjPtr& a, const Rel& e,
                                  const Rel& f, const Rel& n) {
  ProductWitness wAA = productObject(alg, a, a);
  if (!sameObj(f.source(), wAA.prodObj) || !sameObj(f.target(), a))
    fail(Errc::TypeMismatch, "group operation must be " + wAA.prodObj->name + " -> " + a->name);
  if (!sameObj(e.source(), unitObj()) || !sameObj(e.target(), a))
    fail(Errc::TypeMismatch, "neutral element must be 1 -> " + a->name);
  if (!sameObj(n.source(), a) || !sameObj(n.target(), a))
    fail(Errc::TypeMismatch, "inverse must be " + a->name + " -> " + a->name);
  ProductWitness wA_AA = productObject(alg, a, wAA.prodObj);
  ProductWitness wAA_A = productObject(alg, wAA.prodObj, a);
  return GroupCandidate{a, e, f, n, wAA, wA_AA, wAA_A};
}

GroupCandidate cyclicGroup(const AlgebraPtr& boolAlg, int n) {
  if (n < 1) fail(Errc::InvalidSize, "cyclic group needs n >= 1");
  ObjPtr a = makeObj("A", n);
  const int top = boolAlg->top();
  Rel e(boolAlg, unitObj(), a);
  e.set(0, 0, top);
  ProductWitness wAA = productObject(boolAlg, a, a);
  Rel f(boolAlg, wAA.prodObj, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.set(i * n + j, (i + j) % n, top);
  Rel inv(boolAlg, a, a);
  for (int i = 0; i < n; ++i) inv.set(i, (n - i) % n, top);
  return makeGroupCandidate(boolAlg, a, e, f, inv);
}

StructureReport groupCheck(const GroupCandidate& g) {
  const AlgebraPtr& alg = g.f.algebra();
  const ObjPtr& a = g.a;
  Rel idA = identity(alg, a);
  Rel idAA = identity(alg, g.wAA.prodObj);
  Rel topA1 = topRel(alg, a, unitObj());
  Rel unitE = compose(topA1, g.e);  // A -> A, constant at the neutral element
  Rel assocM = assocMap(g.wAA, g.wAA, g.wA_AA, g.wAA_A);
  Rel swapM = swapMap(g.wAA, g.wAA);

  StructureReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
  };

  add("e_point", isMap(g.e));
  add("f_map", isMap(g.f));
  add("n_map", isMap(g.n));

  Rel lhs1 = compose(tensor(idA, g.f, g.wA_AA, g.wAA), g.f);
  Rel rhs1 = compose(compose(assocM, tensor(g.f, idA, g.wAA_A, g.wAA)), g.f);
  add("axiom1_associative", lhs1 == rhs1);
  add("axiom2_neutral", compose(fork(idA, unitE, g.wAA), g.f) == idA);
  add("axiom3_inverse", compose(fork(idA, g.n, g.wAA), g.f) == unitE);
  add("axiom4_commutative", compose(swapM, g.f) == g.f);

  add("consequence1",
      compose(compose(converse(assocM), tensor(idA, g.f, g.wA_AA, g.wAA)), g.f) ==
          compose(tensor(g.f, idA, g.wAA_A, g.wAA), g.f));
  add("consequence2a", compose(fork(unitE, idA, g.wAA), g.f) == idA);
  add("consequence2b", compose(fork(g.n, idA, g.wAA), g.f) == unitE);

  if (a->size() <= 3) {
    // all pairs of maps g,h : A -> A with (g <| h);f = T;e must satisfy g;n = h
    std::vector<Rel> maps;
    const int nA = a->size();
    std::vector<int> pick(nA, 0);
    bool done = false;
    while (!done) {
      Rel m(alg, a, a);
      for (int i = 0; i < nA; ++i) m.set(i, pick[i], alg->top());
      maps.push_back(m);
      int d = nA - 1;
      while (d >= 0 && ++pick[d] == nA) pick[d--] = 0;
      done = d < 0;
    }
    bool ok = true;
    std::string detail;
    for (const Rel& gm : maps)
      for (const Rel& hm : maps)
        if (compose(fork(gm, hm, g.wAA), g.f) == unitE && compose(gm, g.n) != hm) {
          ok = false;
          detail = "counterexample pair found";
        }
    add("consequence3", ok, detail.empty() ? "all map pairs checked" : detail);
  } else {
    add("consequence3", true, "skipped: carrier larger than 3");
  }

  add("consequence4", compose(compose(tensor(g.n, g.n, g.wAA, g.wAA), g.f), g.n) == g.f);
  return rep;
}

RnoCandidate makeRnoCandidate(const AlgebraPtr& alg, const ObjPtr& r, const Rel& i, const Rel& c,
                              const Rel& add, int powerBound) {
  ProductWitness wRR = productObject(alg, r, r);
  if (!sameObj(add.source(), wRR.prodObj) || !sameObj(add.target(), r))
    fail(Errc::TypeMismatch, "addition must be " + wRR.prodObj->name + " -> " + r->name);
  if (!sameObj(i.source(), unitObj()) || !sameObj(i.target(), r))
    fail(Errc::TypeMismatch, "the unit point must be 1 -> " + r->name);
  if (!sameObj(c.source(), r) || !sameObj(c.target(), r))
    fail(Errc::TypeMismatch, "the order must be square on " + r->name);
  ProductWitness wR_RR = productObject(alg, r, wRR.prodObj);
  ProductWitness wRR_R = productObject(alg, wRR.prodObj, r);
  NePowerWitness nep = nonEmptyPower(alg, r, powerBound);
  return RnoCandidate{r, i, c, add, wRR, wR_RR, wRR_R, nep};
}

bool RnoReport::axiomPass(int k) const {
  const CheckItem* item = axioms.find("axiom" + std::to_string(k));
  return item && item->pass;
}

std::vector<int> RnoReport::failingAxioms() const {
  std::vector<int> out;
  for (int k = 0; k <= 9; ++k)
    if (!axiomPass(k)) out.push_back(k);
  return out;
}

RnoReport rnoCheck(const RnoCandidate& c) {
  const AlgebraPtr& alg = c.add.algebra();
  const ObjPtr& r = c.r;
  Rel idR = identity(alg, r);
  Rel idRR = identity(alg, c.wRR.prodObj);
  Rel botRR = bottomRel(alg, r, r);
  Rel topRR = topRel(alg, r, r);
  Rel e = join(c.c, idR);
  Rel assocM = assocMap(c.wRR, c.wRR, c.wR_RR, c.wRR_R);
  Rel swapM = swapMap(c.wRR, c.wRR);

  RnoReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.axioms.items.push_back({std::move(name), pass, std::move(detail)});
  };

  add("axiom0", isMap(c.add), "addition is a map");
  add("axiom1", join(join(idR, c.c), converse(c.c)) == topRR, "order is linear");
  add("axiom2", meet(c.c, converse(c.c)) == botRR, "order is asymmetric");
  add("axiom3", incl(c.c, compose(c.c, c.c)), "order is dense");
  {
    const Rel& eps = c.nep.eps;
    Rel lhs = lres(eps, rres(c.c, converse(eps)));
    Rel rhs = compose(lres(eps, e), converse(lres(eps, converse(e))));
    add("axiom4", incl(lhs, rhs), "bounded gaps have an element in between");
  }
  {
    Rel lhs = compose(tensor(idR, c.add, c.wR_RR, c.wRR), c.add);
    Rel rhs = compose(
        compose(compose(tensor(idR, swapM, c.wR_RR, c.wR_RR), assocM),
                tensor(c.add, idR, c.wRR_R, c.wRR)),
        c.add);
    add("axiom5", lhs == rhs, "rebracketing law for addition");
  }
  add("axiom6", compose(converse(c.wRR.pi), c.add) == topRR, "every difference exists");
  {
    Rel lhs = compose(compose(c.add, c.c), converse(c.add));
    Rel rhs = join(compose(compose(c.wRR.pi, c.c), converse(c.wRR.pi)),
                   compose(compose(c.wRR.rho, c.c), converse(c.wRR.rho)));
    add("axiom7", incl(lhs, rhs), "sum order reflects to a component");
  }
  add("axiom8", isMap(c.i), "the unit is a point");
  {
    Rel rhs = compose(compose(compose(c.i, fork(idR, idR, c.wRR)), c.add), converse(c.c));
    add("axiom9", incl(c.i, rhs), "the unit is below its double");
  }

  // derived constructions, each gated on the axioms it needs
  if (rep.axiomPass(0)) {
    Rel zero = compose(compose(topRel(alg, unitObj(), r), meet(converse(c.add), converse(c.wRR.pi))),
                       c.wRR.rho);
    rep.zero = zero;
    Rel bigZ = compose(topRel(alg, r, unitObj()), zero);
    rep.notes.push_back("auxiliary Z in the negation construction is top[R,1];zero");
    Rel neg = compose(converse(c.wRR.pi), meet(compose(c.add, converse(bigZ)), c.wRR.rho));
    rep.neg = neg;
    if (rep.axiomPass(8)) {
      Rel topR1 = topRel(alg, r, unitObj());
      rep.succ = compose(fork(idR, compose(topR1, c.i), c.wRR), c.add);
      rep.prec = compose(fork(idR, compose(compose(topR1, c.i), neg), c.wRR), c.add);
    }
  }

  bool allAxioms = rep.failingAxioms().empty();
  if (allAxioms && rep.zero && rep.neg) {
    auto addc = [&](std::string name, bool pass, std::string detail = "") {
      rep.conditional.items.push_back({std::move(name), pass, std::move(detail)});
    };
    Rel unitE = compose(topRel(alg, r, unitObj()), *rep.zero);
    addc("additive_group_associative",
         compose(tensor(idR, c.add, c.wR_RR, c.wRR), c.add) ==
             compose(compose(assocM, tensor(c.add, idR, c.wRR_R, c.wRR)), c.add));
    addc("additive_group_neutral", compose(fork(idR, unitE, c.wRR), c.add) == idR);
    addc("additive_group_inverse", compose(fork(idR, *rep.neg, c.wRR), c.add) == unitE);
    addc("additive_group_commutative", compose(swapM, c.add) == c.add);
    addc("order_transitive", isTransitive(c.c));
    addc("order_dense_linear", isDense(c.c) && isLinearStrictOrder(c.c));
    addc("add_strictly_monotone_left",
         incl(compose(tensor(c.c, idR, c.wRR, c.wRR), c.add), compose(c.add, c.c)));
    addc("add_strictly_monotone_right",
         incl(compose(tensor(idR, c.c, c.wRR, c.wRR), c.add), compose(c.add, c.c)));
    addc("add_strictly_monotone",
         incl(compose(tensor(c.c, c.c, c.wRR, c.wRR), c.add), compose(c.add, c.c)));
    addc("add_monotone", incl(compose(tensor(e, e, c.wRR, c.wRR), c.add), compose(c.add, e)));
    if (rep.succ && rep.prec) {
      addc("succ_strictly_below", incl(*rep.succ, c.c));
      addc("prec_strictly_above", incl(*rep.prec, converse(c.c)));
      addc("succ_prec_inverse", converse(*rep.succ) == *rep.prec);
      addc("order_total_surjective", isTotal(c.c) && isSurjective(c.c));
    }
  } else if (!allAxioms) {
    std::string which;
    for (int k : rep.failingAxioms()) which += (which.empty() ? "" : ",") + std::to_string(k);
    rep.notes.push_back("conditional consequence checks skipped; failing axioms: " + which);
  }
  return rep;
}

}  // namespace relcat
