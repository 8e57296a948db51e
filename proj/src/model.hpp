#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sort.hpp"
#include "structures.hpp"

namespace relcat {

/// A finite model: one truth-value algebra, named objects, named relations,
/// and registered structural witnesses (products, powers, non-empty powers)
/// plus optional group / ordered-additive-structure candidates.
///
/// Witness registration (`require*`) is get-or-create and mutating; drivers
/// register everything a run needs up front, after which evaluation only uses
/// the const `lookup*` accessors and the model can be shared across workers.
class Model {
public:
  Model(std::string name, HeytingAlgebra algebra, std::string latticeSpec = "");

  static Model fromJson(const nlohmann::json& j, const std::string& fallbackName = "model");
  static Model fromJsonText(const std::string& text, const std::string& fallbackName = "model");
  static Model fromFile(const std::string& path);
  nlohmann::json toJson() const;

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const ObjPtr& unit() const { return unit_; }

  ObjPtr addObject(const std::string& name, std::vector<std::string> carrier);
  ObjPtr addObject(const std::string& name, int size);
  ObjPtr tryObject(const std::string& name) const;
  ObjPtr object(const std::string& name) const;  // throws MissingWitness
  /// All registered objects including the unit (not derived pair/power objects).
  std::vector<ObjPtr> objects() const;

  void addRelation(const std::string& name, Rel r);
  const Rel* tryRelation(const std::string& name) const;
  const Rel& relation(const std::string& name) const;  // throws UnknownIdentifier
  const std::map<std::string, Rel>& relations() const { return rels_; }

  const ProductWitness& requireProduct(const ObjPtr& a, const ObjPtr& b);
  const ProductWitness* lookupProduct(const ObjPtr& a, const ObjPtr& b) const;
  const PowerWitness& requirePower(const ObjPtr& a);
  const PowerWitness* lookupPower(const ObjPtr& a) const;
  const NePowerWitness& requireNePower(const ObjPtr& a);
  const NePowerWitness* lookupNePower(const ObjPtr& a) const;

  /// Resolves a sort expression to a concrete object. The mutating overload
  /// registers missing witnesses on the way; the const overload throws
  /// MissingProduct / MissingWitness instead.
  ObjPtr resolveSort(const Sort& s);
  ObjPtr resolveSortConst(const Sort& s) const;

  std::optional<GroupCandidate> groupCandidate() const;
  std::optional<RnoCandidate> rnoCandidate() const;

  int powerBound = 256;

private:
  std::string name_;
  std::string latticeSpec_;  // builder shorthand when the model was built from one
  AlgebraPtr alg_;
  ObjPtr unit_;
  std::vector<ObjPtr> objs_;
  std::map<std::string, Rel> rels_;
  std::map<std::string, ProductWitness> products_;  // keyed by "A|B"
  std::map<std::string, PowerWitness> powers_;      // keyed by base object name
  std::map<std::string, NePowerWitness> nepowers_;
  // candidate sections as loaded, resolved lazily
  std::map<std::string, std::string> groupSpec_;  // object/e/f/n -> names
  std::map<std::string, std::string> rnoSpec_;    // object/i/C/add -> names
  friend nlohmann::json modelToJsonImpl(const Model&);
};

/// Relation literal {"from":..,"to":..,"matrix":[[..]]} against a model's
/// objects (from/to accept sort expressions).
Rel relFromJson(Model& m, const nlohmann::json& j);
nlohmann::json relToJson(const Rel& r);

/// Names of the embedded example models ("paper3chain", "bool2", ...).
std::vector<std::string> builtinModelNames();
Model builtinModel(const std::string& name);
/// Writes every embedded model as <name>.json under dir; returns the paths.
std::vector<std::string> writeExampleModels(const std::string& dir);

}  // namespace relcat
