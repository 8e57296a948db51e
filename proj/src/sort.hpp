#pragma once

#include <memory>
#include <string>

#include "error.hpp"

namespace relcat {

/// Object sort expression: a base name, the unit, a binary product, or a
/// (non-empty) power. Mirrors the hom-set typing of the term language.
struct Sort {
  enum class Kind { Base, Unit, Prod, Pow, NePow };

  Kind kind = Kind::Base;
  std::string name;                     // Base
  std::shared_ptr<const Sort> left;     // Prod left, Pow/NePow argument
  std::shared_ptr<const Sort> right;    // Prod right

  static Sort base(std::string n) {
    Sort s;
    s.kind = Kind::Base;
    s.name = std::move(n);
    return s;
  }
  static Sort unit() {
    Sort s;
    s.kind = Kind::Unit;
    return s;
  }
  static Sort prod(Sort a, Sort b) {
    Sort s;
    s.kind = Kind::Prod;
    s.left = std::make_shared<const Sort>(std::move(a));
    s.right = std::make_shared<const Sort>(std::move(b));
    return s;
  }
  static Sort pow(Sort a) {
    Sort s;
    s.kind = Kind::Pow;
    s.left = std::make_shared<const Sort>(std::move(a));
    return s;
  }
  static Sort nepow(Sort a) {
    Sort s;
    s.kind = Kind::NePow;
    s.left = std::make_shared<const Sort>(std::move(a));
    return s;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Base: return name;
      case Kind::Unit: return "1";
      case Kind::Prod: {
        auto wrap = [](const Sort& s) {
          return s.kind == Kind::Prod ? "(" + s.str() + ")" : s.str();
        };
        return wrap(*left) + "*" + wrap(*right);
      }
      case Kind::Pow: return "P(" + left->str() + ")";
      case Kind::NePow: return "N(" + left->str() + ")";
    }
    return "?";
  }

  bool operator==(const Sort& o) const { return str() == o.str(); }
  bool operator!=(const Sort& o) const { return !(*this == o); }
};

}  // namespace relcat
