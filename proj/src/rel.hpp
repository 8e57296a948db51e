#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace relcat {

/// A named finite carrier set (an object of the category).
struct Obj {
  std::string name;
  std::vector<std::string> carrier;

  Obj(std::string n, std::vector<std::string> c);

  int size() const { return static_cast<int>(carrier.size()); }
  int indexOf(std::string_view member) const;  // throws UnknownElement

  bool operator==(const Obj& o) const { return name == o.name && carrier == o.carrier; }
};

using ObjPtr = std::shared_ptr<const Obj>;

ObjPtr makeObj(std::string name, std::vector<std::string> carrier);
/// Auto-named carrier {name0, .., name(n-1)}.
ObjPtr makeObj(std::string name, int n);

inline bool sameObj(const ObjPtr& a, const ObjPtr& b) { return a == b || *a == *b; }

/// An L-valued relation between two objects, stored as a dense row-major
/// matrix of lattice element indices. Rels are immutable values; every
/// operation returns a fresh matrix. Binary operations check that both sides
/// live over the same algebra (AlgebraMismatch) and have compatible sorts
/// (TypeMismatch).
class Rel {
public:
  Rel(AlgebraPtr alg, ObjPtr src, ObjPtr tgt);  // all-bottom
  Rel(AlgebraPtr alg, ObjPtr src, ObjPtr tgt, std::vector<int> entries);

  const AlgebraPtr& algebra() const { return alg_; }
  const ObjPtr& source() const { return src_; }
  const ObjPtr& target() const { return tgt_; }
  int rows() const { return src_->size(); }
  int cols() const { return tgt_->size(); }

  int at(int i, int j) const { return e_[i * cols() + j]; }
  void set(int i, int j, int v) { e_[i * cols() + j] = v; }
  const std::vector<int>& entries() const { return e_; }

  bool sameSort(const Rel& o) const { return sameObj(src_, o.src_) && sameObj(tgt_, o.tgt_); }

  /// Every entry is bottom or top.
  bool isCrisp() const;

  /// Rows in the layout used throughout the literature on these matrices,
  /// e.g. "(0 u)"; rows separated by newlines.
  std::string pretty() const;
  /// Matrix as rows of element names.
  std::vector<std::vector<std::string>> namedRows() const;

  bool operator==(const Rel& o) const;
  bool operator!=(const Rel& o) const { return !(*this == o); }

private:
  AlgebraPtr alg_;
  ObjPtr src_, tgt_;
  std::vector<int> e_;
};

// -- constants ---------------------------------------------------------------

Rel identity(const AlgebraPtr& alg, const ObjPtr& a);
Rel bottomRel(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b);
Rel topRel(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b);

// -- lattice structure, pointwise --------------------------------------------

Rel meet(const Rel& q, const Rel& r);
Rel join(const Rel& q, const Rel& r);
Rel implRel(const Rel& q, const Rel& r);
/// Pseudo-complement: q -> bottom, pointwise.
Rel star(const Rel& q);

/// Entrywise lattice-order inclusion.
bool incl(const Rel& q, const Rel& r);

// -- composition, converse, residuals ----------------------------------------

Rel converse(const Rel& q);
/// Sup-of-meets matrix product; target(q) must equal source(r).
Rel compose(const Rel& q, const Rel& r);
/// Left residual q\r: greatest x with q;x <= r. Sources must agree.
Rel lres(const Rel& q, const Rel& r);
/// Right residual s/r: greatest x with x;r <= s. Targets must agree.
Rel rres(const Rel& s, const Rel& r);
/// Symmetric quotient ((q\r) meet (qT/rT)): greatest x with q;x <= r and r;xT <= q.
Rel syq(const Rel& q, const Rel& r);
/// Partial identity on the source: I meet r;rT.
Rel dom(const Rel& r);

// -- order-theoretic bounds ---------------------------------------------------

/// Upper bounds of images: ubd_E(x) = xT \ e, for e square on A and x : B -> A.
Rel ubd(const Rel& e, const Rel& x);
Rel lbd(const Rel& e, const Rel& x);
Rel lub(const Rel& e, const Rel& x);
Rel glb(const Rel& e, const Rel& x);

// -- predicates ---------------------------------------------------------------
// Order predicates require a square relation and throw TypeMismatch otherwise.

bool isUnivalent(const Rel& q);
bool isTotal(const Rel& q);
bool isInjective(const Rel& q);
bool isSurjective(const Rel& q);
bool isMap(const Rel& q);
bool isBijection(const Rel& q);
bool isTransitive(const Rel& c);
bool isDense(const Rel& c);
bool isAsymmetric(const Rel& c);
bool isStrictOrder(const Rel& c);
bool isLinearStrictOrder(const Rel& c);
bool isReflexive(const Rel& e);
bool isAntisymmetric(const Rel& e);
bool isOrdering(const Rel& e);  // reflexive + transitive + antisymmetric
bool isPartialIdentity(const Rel& i);
bool isRegular(const Rel& q);
bool isComplementedPair(const Rel& q, const Rel& r);
bool isSymmetric(const Rel& x);

}  // namespace relcat
