#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rel.hpp"

namespace relcat {

// -- unit ---------------------------------------------------------------------

/// One-element object named "1".
ObjPtr unitObj();
/// Checks both defining conditions: I_u = T_uu and T_{B,u} total for every
/// registered object B.
bool isUnit(const AlgebraPtr& alg, const ObjPtr& u, const std::vector<ObjPtr>& registered);

// -- relational product --------------------------------------------------------

/// Pair object with crisp projections. The carrier is ordered
/// lexicographically by factor carriers; all four axioms are verified at
/// construction (AxiomViolation guards refactoring).
struct ProductWitness {
  ObjPtr left, right;
  ObjPtr prodObj;
  Rel pi;   // prodObj -> left
  Rel rho;  // prodObj -> right
};

ProductWitness productObject(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b);

/// q : C -> A, r : C -> B  =>  C -> A x B  (q;piT meet r;rhoT).
Rel fork(const Rel& q, const Rel& r, const ProductWitness& w);
/// q : A -> E, s : B -> E  =>  A x B -> E  (pi;q meet rho;s).
Rel pairRel(const Rel& q, const Rel& s, const ProductWitness& w);
/// q : A -> A2, t : B -> B2  =>  A x B -> A2 x B2.
Rel tensor(const Rel& q, const Rel& t, const ProductWitness& src, const ProductWitness& tgt);

/// A x B -> B x A, from the defining formula, asserted equal to the expected
/// permutation matrix.
Rel swapMap(const ProductWitness& ab, const ProductWitness& ba);
/// A x (B x C) -> (A x B) x C, from the defining formula, asserted equal to
/// the expected permutation matrix.
Rel assocMap(const ProductWitness& ab, const ProductWitness& bc, const ProductWitness& a_bc,
             const ProductWitness& ab_c);

// -- relational power ----------------------------------------------------------

/// Carrier of all L-valued characteristic functions of A, enumerated in
/// lexicographic order of value tuples (first carrier member most
/// significant); eps(a,f) = f(a). The defining conditions are checked at
/// construction and recorded per condition: they hold whenever L is Boolean
/// but can fail for richer truth-value algebras, so this is a candidate plus
/// checker, not a guaranteed construction.
struct PowerWitness {
  ObjPtr base;
  ObjPtr powObj;
  Rel eps;  // base -> powObj
  bool syqIdentity = false;
  bool totality = false;
  std::string regime;  // "exhaustive" or "random(n,seed)"
};

/// Throws PowerTooLarge when |L|^|A| exceeds `bound`.
PowerWitness powerObject(const AlgebraPtr& alg, const ObjPtr& a, int bound = 256,
                         int samples = 500, uint64_t seed = 1);

/// Same idea for the non-empty power: carrier of all f with join of values =
/// top, with the domain condition dom(syq(Q,eps)) = dom(QT) checked per Q.
struct NePowerWitness {
  ObjPtr base;
  ObjPtr nepowObj;
  Rel eps;
  bool syqIdentity = false;
  bool domCondition = false;
  std::string regime;
};

NePowerWitness nonEmptyPower(const AlgebraPtr& alg, const ObjPtr& a, int bound = 256,
                             int samples = 500, uint64_t seed = 1);

// -- splitting -----------------------------------------------------------------

/// Splitting of a crisp partial equivalence: object of equivalence classes
/// with r relating each class to its members; r;rT = I and rT;r = x by
/// construction, re-verified before returning. Throws NotPER for
/// non-symmetric/non-transitive input and NotCrisp for entries outside
/// {bot, top}.
struct Splitting {
  ObjPtr classes;
  Rel r;  // classes -> carrier of x
};

Splitting split(const Rel& x);

/// The splitting route to a non-empty power: split dom(epsT) of a power
/// witness and take eps;iT.
NePowerWitness nePowerViaSplit(const PowerWitness& pw, int samples = 500, uint64_t seed = 1);

// -- structure checkers ----------------------------------------------------------

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  bool allPass() const;
  const CheckItem* find(const std::string& name) const;
};

/// Candidate abelian group: e a point, f a binary operation on A via the
/// registered pair object, n the inverse map.
struct GroupCandidate {
  ObjPtr a;
  Rel e;  // 1 -> A
  Rel f;  // A x A -> A; source must be wAA.prodObj
  Rel n;  // A -> A
  ProductWitness wAA, wA_AA, wAA_A;
};

GroupCandidate makeGroupCandidate(const AlgebraPtr& alg, const ObjPtr& a, const Rel& e,
                                  const Rel& f, const Rel& n);

/// Relational encoding of the cyclic group Z_n over the Boolean algebra.
GroupCandidate cyclicGroup(const AlgebraPtr& boolAlg, int n);

/// Per-axiom report: four definition axioms, map checks, and the derived
/// consequences (items named axiom1..axiom4, e_point, f_map, n_map,
/// consequence1, consequence2a/2b, consequence3, consequence4).
StructureReport groupCheck(const GroupCandidate& g);

/// Candidate carrier for the ordered additive structure: point i, strict
/// order c, addition map over the registered pair object, plus the non-empty
/// power needed by the bound axiom.
struct RnoCandidate {
  ObjPtr r;
  Rel i;    // 1 -> R
  Rel c;    // R -> R
  Rel add;  // R x R -> R
  ProductWitness wRR, wR_RR, wRR_R;
  NePowerWitness nep;
};

RnoCandidate makeRnoCandidate(const AlgebraPtr& alg, const ObjPtr& r, const Rel& i, const Rel& c,
                              const Rel& add, int powerBound = 256);

/// Axioms 0..9 (items axiom0..axiom9), derived constructions when their
/// prerequisites hold, and the conditional consequence checks (additive group,
/// dense linear order, monotonicity, shift/successor facts) that are only run
/// when all ten axioms pass.
struct RnoReport {
  StructureReport axioms;
  std::optional<Rel> zero, neg, succ, prec;
  StructureReport conditional;
  std::vector<std::string> notes;

  bool axiomPass(int k) const;
  std::vector<int> failingAxioms() const;
};

RnoReport rnoCheck(const RnoCandidate& c);

}  // namespace relcat
