#include "rel.hpp"

#include <set>

namespace relcat {

Obj::Obj(std::string n, std::vector<std::string> c) : name(std::move(n)), carrier(std::move(c)) {
  if (carrier.empty()) fail(Errc::InvalidSize, "object '" + name + "' has an empty carrier");
  std::set<std::string> seen;
  for (const auto& m : carrier)
    if (!seen.insert(m).second)
      fail(Errc::DuplicateElement, "object '" + name + "' repeats member '" + m + "'");
}

int Obj::indexOf(std::string_view member) const {
  for (int i = 0; i < size(); ++i)
    if (carrier[i] == member) return i;
  fail(Errc::UnknownElement, "object '" + name + "' has no member '" + std::string(member) + "'");
}

ObjPtr makeObj(std::string name, std::vector<std::string> carrier) {
  return std::make_shared<const Obj>(std::move(name), std::move(carrier));
}

ObjPtr makeObj(std::string name, int n) {
  std::vector<std::string> carrier;
  carrier.reserve(n);
  for (int i = 0; i < n; ++i) carrier.push_back(name + std::to_string(i));
  return makeObj(std::move(name), std::move(carrier));
}

Rel::Rel(AlgebraPtr alg, ObjPtr src, ObjPtr tgt)
    : alg_(std::move(alg)), src_(std::move(src)), tgt_(std::move(tgt)) {
  e_.assign(static_cast<size_t>(rows()) * cols(), alg_->bot());
}

Rel::Rel(AlgebraPtr alg, ObjPtr src, ObjPtr tgt, std::vector<int> entries)
    : alg_(std::move(alg)), src_(std::move(src)), tgt_(std::move(tgt)), e_(std::move(entries)) {
  if (e_.size() != static_cast<size_t>(rows()) * cols())
    fail(Errc::TypeMismatch, "entry table does not match " + std::to_string(rows()) + "x" +
                                 std::to_string(cols()) + " for " + src_->name + " -> " + tgt_->name);
  for (int v : e_)
    if (v < 0 || v >= alg_->size()) fail(Errc::UnknownElement, "entry index out of range");
}

bool Rel::isCrisp() const {
  for (int v : e_)
    if (v != alg_->bot() && v != alg_->top()) return false;
  return true;
}

std::string Rel::pretty() const {
  std::string out;
  for (int i = 0; i < rows(); ++i) {
    out += '(';
    for (int j = 0; j < cols(); ++j) {
      if (j) out += ' ';
      out += alg_->name(at(i, j));
    }
    out += ')';
    if (i + 1 < rows()) out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> Rel::namedRows() const {
  std::vector<std::vector<std::string>> rowsOut;
  rowsOut.reserve(rows());
  for (int i = 0; i < rows(); ++i) {
    std::vector<std::string> r;
    r.reserve(cols());
    for (int j = 0; j < cols(); ++j) r.push_back(alg_->name(at(i, j)));
    rowsOut.push_back(std::move(r));
  }
  return rowsOut;
}

bool Rel::operator==(const Rel& o) const {
  return sameSort(o) && *alg_ == *o.alg_ && e_ == o.e_;
}

namespace {

void checkAlgebra(const Rel& q, const Rel& r) {
  if (q.algebra() != r.algebra() && *q.algebra() != *r.algebra())
    fail(Errc::AlgebraMismatch, "relations live over different truth-value algebras");
}

void checkSameSort(const Rel& q, const Rel& r, const char* op) {
  checkAlgebra(q, r);
  if (!q.sameSort(r))
    fail(Errc::TypeMismatch, std::string(op) + " needs matching sorts, got " + q.source()->name +
                                 " -> " + q.target()->name + " and " + r.source()->name + " -> " +
                                 r.target()->name);
}

void checkSquare(const Rel& q, const char* what) {
  if (!sameObj(q.source(), q.target()))
    fail(Errc::TypeMismatch, std::string(what) + " needs a square relation, got " +
                                 q.source()->name + " -> " + q.target()->name);
}

}  // namespace

Rel identity(const AlgebraPtr& alg, const ObjPtr& a) {
  Rel r(alg, a, a);
  for (int i = 0; i < a->size(); ++i) r.set(i, i, alg->top());
  return r;
}

Rel bottomRel(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b) { return Rel(alg, a, b); }

Rel topRel(const AlgebraPtr& alg, const ObjPtr& a, const ObjPtr& b) {
  Rel r(alg, a, b);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r.set(i, j, alg->top());
  return r;
}

Rel meet(const Rel& q, const Rel& r) {
  checkSameSort(q, r, "meet");
  Rel out(q.algebra(), q.source(), q.target());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) out.set(i, j, q.algebra()->meet(q.at(i, j), r.at(i, j)));
  return out;
}

Rel join(const Rel& q, const Rel& r) {
  checkSameSort(q, r, "join");
  Rel out(q.algebra(), q.source(), q.target());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) out.set(i, j, q.algebra()->join(q.at(i, j), r.at(i, j)));
  return out;
}

Rel implRel(const Rel& q, const Rel& r) {
  checkSameSort(q, r, "impl");
  Rel out(q.algebra(), q.source(), q.target());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) out.set(i, j, q.algebra()->impl(q.at(i, j), r.at(i, j)));
  return out;
}

Rel star(const Rel& q) {
  Rel out(q.algebra(), q.source(), q.target());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) out.set(i, j, q.algebra()->neg(q.at(i, j)));
  return out;
}

bool incl(const Rel& q, const Rel& r) {
  checkSameSort(q, r, "incl");
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j)
      if (!q.algebra()->leq(q.at(i, j), r.at(i, j))) return false;
  return true;
}

Rel converse(const Rel& q) {
  Rel out(q.algebra(), q.target(), q.source());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) out.set(j, i, q.at(i, j));
  return out;
}

Rel compose(const Rel& q, const Rel& r) {
  checkAlgebra(q, r);
  if (!sameObj(q.target(), r.source()))
    fail(Errc::TypeMismatch, "compose needs target = source, got " + q.target()->name + " vs " +
                                 r.source()->name);
  const auto& L = *q.algebra();
  Rel out(q.algebra(), q.source(), r.target());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      int acc = L.bot();
      for (int k = 0; k < q.cols(); ++k) acc = L.join(acc, L.meet(q.at(i, k), r.at(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

Rel lres(const Rel& q, const Rel& r) {
  checkAlgebra(q, r);
  if (!sameObj(q.source(), r.source()))
    fail(Errc::TypeMismatch, "left residual needs common sources, got " + q.source()->name +
                                 " vs " + r.source()->name);
  const auto& L = *q.algebra();
  Rel out(q.algebra(), q.target(), r.target());
  for (int b = 0; b < q.cols(); ++b)
    for (int c = 0; c < r.cols(); ++c) {
      int acc = L.top();
      for (int a = 0; a < q.rows(); ++a) acc = L.meet(acc, L.impl(q.at(a, b), r.at(a, c)));
      out.set(b, c, acc);
    }
  return out;
}

Rel rres(const Rel& s, const Rel& r) {
  checkAlgebra(s, r);
  if (!sameObj(s.target(), r.target()))
    fail(Errc::TypeMismatch, "right residual needs common targets, got " + s.target()->name +
                                 " vs " + r.target()->name);
  const auto& L = *s.algebra();
  Rel out(s.algebra(), s.source(), r.source());
  for (int a = 0; a < s.rows(); ++a)
    for (int b = 0; b < r.rows(); ++b) {
      int acc = L.top();
      for (int c = 0; c < s.cols(); ++c) acc = L.meet(acc, L.impl(r.at(b, c), s.at(a, c)));
      out.set(a, b, acc);
    }
  return out;
}

Rel syq(const Rel& q, const Rel& r) {
  checkAlgebra(q, r);
  if (!sameObj(q.source(), r.source()))
    fail(Errc::TypeMismatch, "symmetric quotient needs common sources, got " + q.source()->name +
                                 " vs " + r.source()->name);
  const auto& L = *q.algebra();
  Rel out(q.algebra(), q.target(), r.target());
  for (int b = 0; b < q.cols(); ++b)
    for (int c = 0; c < r.cols(); ++c) {
      int acc = L.top();
      for (int a = 0; a < q.rows(); ++a) {
        acc = L.meet(acc, L.impl(q.at(a, b), r.at(a, c)));
        acc = L.meet(acc, L.impl(r.at(a, c), q.at(a, b)));
      }
      out.set(b, c, acc);
    }
  return out;
}

Rel dom(const Rel& r) { return meet(identity(r.algebra(), r.source()), compose(r, converse(r))); }

Rel ubd(const Rel& e, const Rel& x) {
  checkSquare(e, "ubd ordering");
  if (!sameObj(x.target(), e.source()))
    fail(Errc::TypeMismatch, "ubd needs x : B -> A with e square on A");
  return lres(converse(x), e);
}

Rel lbd(const Rel& e, const Rel& x) {
  checkSquare(e, "lbd ordering");
  if (!sameObj(x.target(), e.source()))
    fail(Errc::TypeMismatch, "lbd needs x : B -> A with e square on A");
  return lres(converse(x), converse(e));
}

Rel lub(const Rel& e, const Rel& x) {
  Rel u = ubd(e, x);
  return meet(u, lbd(e, u));
}

Rel glb(const Rel& e, const Rel& x) {
  Rel l = lbd(e, x);
  return meet(l, ubd(e, l));
}

bool isUnivalent(const Rel& q) {
  return incl(compose(converse(q), q), identity(q.algebra(), q.target()));
}

bool isTotal(const Rel& q) {
  return incl(identity(q.algebra(), q.source()), compose(q, converse(q)));
}

bool isInjective(const Rel& q) { return isUnivalent(converse(q)); }
bool isSurjective(const Rel& q) { return isTotal(converse(q)); }
bool isMap(const Rel& q) { return isTotal(q) && isUnivalent(q); }
bool isBijection(const Rel& q) { return isMap(q) && isInjective(q) && isSurjective(q); }

bool isTransitive(const Rel& c) {
  checkSquare(c, "transitive");
  return incl(compose(c, c), c);
}

bool isDense(const Rel& c) {
  checkSquare(c, "dense");
  return incl(c, compose(c, c));
}

bool isAsymmetric(const Rel& c) {
  checkSquare(c, "asymmetric");
  return meet(c, converse(c)) == bottomRel(c.algebra(), c.source(), c.target());
}

bool isStrictOrder(const Rel& c) { return isTransitive(c) && isAsymmetric(c); }

bool isLinearStrictOrder(const Rel& c) {
  if (!isStrictOrder(c)) return false;
  Rel all = join(join(identity(c.algebra(), c.source()), c), converse(c));
  return all == topRel(c.algebra(), c.source(), c.target());
}

bool isReflexive(const Rel& e) {
  checkSquare(e, "reflexive");
  return incl(identity(e.algebra(), e.source()), e);
}

bool isAntisymmetric(const Rel& e) {
  checkSquare(e, "antisymmetric");
  return incl(meet(e, converse(e)), identity(e.algebra(), e.source()));
}

bool isOrdering(const Rel& e) { return isReflexive(e) && isTransitive(e) && isAntisymmetric(e); }

bool isPartialIdentity(const Rel& i) {
  checkSquare(i, "partial identity");
  return incl(i, identity(i.algebra(), i.source()));
}

bool isRegular(const Rel& q) { return star(star(q)) == q; }

bool isComplementedPair(const Rel& q, const Rel& r) {
  checkSameSort(q, r, "complemented pair");
  return meet(q, r) == bottomRel(q.algebra(), q.source(), q.target()) &&
         join(q, r) == topRel(q.algebra(), q.source(), q.target());
}

bool isSymmetric(const Rel& x) {
  checkSquare(x, "symmetric");
  return x == converse(x);
}

}  // namespace relcat
