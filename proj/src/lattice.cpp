#include "lattice.hpp"

#include <algorithm>
#include <set>

namespace relcat {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotPER: return "NotPER";
    case Errc::NotCrisp: return "NotCrisp";
    case Errc::PowerTooLarge: return "PowerTooLarge";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::MissingProduct: return "MissingProduct";
    case Errc::MissingWitness: return "MissingWitness";
    case Errc::MissingStructure: return "MissingStructure";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::SortMismatch: return "SortMismatch";
    case Errc::ExhaustionCapExceeded: return "ExhaustionCapExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int HeytingAlgebra::index(std::string_view name) const {
  int i = tryIndex(name);
  if (i < 0) fail(Errc::UnknownElement, "no lattice element named '" + std::string(name) + "'");
  return i;
}

int HeytingAlgebra::tryIndex(std::string_view name) const noexcept {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool HeytingAlgebra::operator==(const HeytingAlgebra& o) const {
  return names_ == o.names_ && leq_ == o.leq_;
}

HeytingAlgebra HeytingAlgebra::fromOrder(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& cover) {
  if (elements.empty()) fail(Errc::InvalidSize, "element list is empty");
  HeytingAlgebra h;
  h.names_ = elements;
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second) fail(Errc::DuplicateElement, "element '" + e + "' listed twice");
  }
  const int n = h.size();
  h.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) h.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : cover) h.leq_[h.index(lo) * n + h.index(hi)] = 1;
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (h.leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (h.leq_[k * n + j]) h.leq_[i * n + j] = 1;
  h.completeFromOrder();
  return h;
}

HeytingAlgebra HeytingAlgebra::chain(int n) {
  if (n < 1) fail(Errc::InvalidSize, "chain needs at least one element");
  HeytingAlgebra h;
  h.names_.reserve(n);
  for (int i = 0; i < n; ++i) h.names_.push_back(std::to_string(i));
  h.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) h.leq_[i * n + j] = 1;
  h.completeFromOrder();
  return h;
}

HeytingAlgebra HeytingAlgebra::product(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  HeytingAlgebra h;
  const int na = a.size(), nb = b.size(), n = na * nb;
  h.names_.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) h.names_.push_back(a.name(i) + "." + b.name(j));
  h.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.leq_[i * n + j] = a.leq(i / nb, j / nb) && b.leq(i % nb, j % nb);
  h.completeFromOrder();
  return h;
}

void HeytingAlgebra::completeFromOrder() {
  const int n = size();
  auto le = [&](int x, int y) { return leq_[x * n + y] != 0; };

  // partial order: reflexivity/transitivity hold by closure; check antisymmetry
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        fail(Errc::NotALattice, "order has a cycle through '" + names_[x] + "' and '" + names_[y] + "'");

  meet_.assign(static_cast<size_t>(n) * n, -1);
  join_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int inf = -1, sup = -1;
      for (int z = 0; z < n; ++z) {
        if (le(z, x) && le(z, y)) {
          bool greatest = true;
          for (int w = 0; w < n; ++w)
            if (le(w, x) && le(w, y) && !le(w, z)) { greatest = false; break; }
          if (greatest) inf = z;
        }
        if (le(x, z) && le(y, z)) {
          bool least = true;
          for (int w = 0; w < n; ++w)
            if (le(x, w) && le(y, w) && !le(z, w)) { least = false; break; }
          if (least) sup = z;
        }
      }
      if (inf < 0)
        fail(Errc::NotALattice, "'" + names_[x] + "' and '" + names_[y] + "' have no infimum");
      if (sup < 0)
        fail(Errc::NotALattice, "'" + names_[x] + "' and '" + names_[y] + "' have no supremum");
      meet_[x * n + y] = inf;
      join_[x * n + y] = sup;
    }

  bot_ = top_ = 0;
  for (int x = 1; x < n; ++x) {
    bot_ = meet_[bot_ * n + x];
    top_ = join_[top_ * n + x];
  }
  for (int x = 0; x < n; ++x)
    if (!le(bot_, x) || !le(x, top_)) fail(Errc::NotALattice, "order is not bounded");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet_[x * n + join_[y * n + z]] !=
            join_[meet_[x * n + y] * n + meet_[x * n + z]])
          fail(Errc::NotDistributive,
               "meet does not distribute over join at (" + names_[x] + "," + names_[y] + "," +
                   names_[z] + ")");

  // impl(x,y) = join of all z with z meet x <= y; then verify residuation.
  impl_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int r = bot_;
      for (int z = 0; z < n; ++z)
        if (le(meet_[z * n + x], y)) r = join_[r * n + z];
      impl_[x * n + y] = r;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (le(meet_[x * n + z], y) != le(z, impl_[x * n + y]))
          fail(Errc::Internal, "residuation law failed after construction");
}

HeytingAlgebra parseLatticeBuilder(std::string_view text) {
  // strip surrounding whitespace
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail(Errc::SyntaxError, "empty lattice builder");
  text = text.substr(b, e - b + 1);

  if (text == "bool") return HeytingAlgebra::boolean();
  if (text.rfind("chain:", 0) == 0) {
    int n = 0;
    for (char c : text.substr(6)) {
      if (c < '0' || c > '9') fail(Errc::SyntaxError, "bad chain size in '" + std::string(text) + "'");
      n = n * 10 + (c - '0');
      if (n > 64) fail(Errc::InvalidSize, "chain too large");
    }
    return HeytingAlgebra::chain(n);
  }
  if (text.rfind("prod(", 0) == 0 && text.back() == ')') {
    std::string_view inner = text.substr(5, text.size() - 6);
    // split at the top-level comma
    int depth = 0;
    for (size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) {
        HeytingAlgebra a = parseLatticeBuilder(inner.substr(0, i));
        HeytingAlgebra b = parseLatticeBuilder(inner.substr(i + 1));
        return HeytingAlgebra::product(a, b);
      }
    }
    fail(Errc::SyntaxError, "prod(...) needs two arguments");
  }
  fail(Errc::SyntaxError, "unknown lattice builder '" + std::string(text) + "'");
}

}  // namespace relcat
