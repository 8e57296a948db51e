#include "model.hpp"

#include <filesystem>
#include <fstream>

#include "term.hpp"

namespace relcat {

using nlohmann::json;

Model::Model(std::string name, HeytingAlgebra algebra, std::string latticeSpec)
    : name_(std::move(name)),
      latticeSpec_(std::move(latticeSpec)),
      alg_(std::make_shared<const HeytingAlgebra>(std::move(algebra))),
      unit_(unitObj()) {
  objs_.push_back(unit_);
}

ObjPtr Model::addObject(const std::string& name, std::vector<std::string> carrier) {
  if (tryObject(name)) fail(Errc::DuplicateElement, "object '" + name + "' already registered");
  ObjPtr o = makeObj(name, std::move(carrier));
  objs_.push_back(o);
  return o;
}

ObjPtr Model::addObject(const std::string& name, int size) {
  std::vector<std::string> carrier;
  for (int i = 0; i < size; ++i) carrier.push_back(name + std::to_string(i));
  return addObject(name, std::move(carrier));
}

ObjPtr Model::tryObject(const std::string& name) const {
  for (const auto& o : objs_)
    if (o->name == name) return o;
  return nullptr;
}

ObjPtr Model::object(const std::string& name) const {
  ObjPtr o = tryObject(name);
  if (!o) fail(Errc::MissingWitness, "model '" + name_ + "' has no object '" + name + "'");
  return o;
}

std::vector<ObjPtr> Model::objects() const { return objs_; }

void Model::addRelation(const std::string& name, Rel r) {
  if (rels_.count(name)) fail(Errc::DuplicateElement, "relation '" + name + "' already registered");
  rels_.emplace(name, std::move(r));
}

const Rel* Model::tryRelation(const std::string& name) const {
  auto it = rels_.find(name);
  return it == rels_.end() ? nullptr : &it->second;
}

const Rel& Model::relation(const std::string& name) const {
  const Rel* r = tryRelation(name);
  if (!r) fail(Errc::UnknownIdentifier, "model '" + name_ + "' has no relation '" + name + "'");
  return *r;
}

namespace {
std::string pairKey(const ObjPtr& a, const ObjPtr& b) { return a->name + "|" + b->name; }
}  // namespace

const ProductWitness& Model::requireProduct(const ObjPtr& a, const ObjPtr& b) {
  auto it = products_.find(pairKey(a, b));
  if (it != products_.end()) return it->second;
  return products_.emplace(pairKey(a, b), productObject(alg_, a, b)).first->second;
}

const ProductWitness* Model::lookupProduct(const ObjPtr& a, const ObjPtr& b) const {
  auto it = products_.find(pairKey(a, b));
  return it == products_.end() ? nullptr : &it->second;
}

const PowerWitness& Model::requirePower(const ObjPtr& a) {
  auto it = powers_.find(a->name);
  if (it != powers_.end()) return it->second;
  return powers_.emplace(a->name, powerObject(alg_, a, powerBound)).first->second;
}

const PowerWitness* Model::lookupPower(const ObjPtr& a) const {
  auto it = powers_.find(a->name);
  return it == powers_.end() ? nullptr : &it->second;
}

const NePowerWitness& Model::requireNePower(const ObjPtr& a) {
  auto it = nepowers_.find(a->name);
  if (it != nepowers_.end()) return it->second;
  return nepowers_.emplace(a->name, nonEmptyPower(alg_, a, powerBound)).first->second;
}

const NePowerWitness* Model::lookupNePower(const ObjPtr& a) const {
  auto it = nepowers_.find(a->name);
  return it == nepowers_.end() ? nullptr : &it->second;
}

ObjPtr Model::resolveSort(const Sort& s) {
  switch (s.kind) {
    case Sort::Kind::Base: return object(s.name);
    case Sort::Kind::Unit: return unit_;
    case Sort::Kind::Prod:
      return requireProduct(resolveSort(*s.left), resolveSort(*s.right)).prodObj;
    case Sort::Kind::Pow: return requirePower(resolveSort(*s.left)).powObj;
    case Sort::Kind::NePow: return requireNePower(resolveSort(*s.left)).nepowObj;
  }
  fail(Errc::Internal, "bad sort");
}

ObjPtr Model::resolveSortConst(const Sort& s) const {
  switch (s.kind) {
    case Sort::Kind::Base: return object(s.name);
    case Sort::Kind::Unit: return unit_;
    case Sort::Kind::Prod: {
      const ProductWitness* w = lookupProduct(resolveSortConst(*s.left), resolveSortConst(*s.right));
      if (!w) fail(Errc::MissingProduct, "no product witness registered for " + s.str());
      return w->prodObj;
    }
    case Sort::Kind::Pow: {
      const PowerWitness* w = lookupPower(resolveSortConst(*s.left));
      if (!w) fail(Errc::MissingWitness, "no power witness registered for " + s.str());
      return w->powObj;
    }
    case Sort::Kind::NePow: {
      const NePowerWitness* w = lookupNePower(resolveSortConst(*s.left));
      if (!w) fail(Errc::MissingWitness, "no non-empty power witness registered for " + s.str());
      return w->nepowObj;
    }
  }
  fail(Errc::Internal, "bad sort");
}

std::optional<GroupCandidate> Model::groupCandidate() const {
  if (groupSpec_.empty()) return std::nullopt;
  ObjPtr a = object(groupSpec_.at("object"));
  const ProductWitness* waa = lookupProduct(a, a);
  if (!waa) fail(Errc::MissingProduct, "group candidate needs the pair witness for " + a->name);
  const ProductWitness* wa_aa = lookupProduct(a, waa->prodObj);
  const ProductWitness* waa_a = lookupProduct(waa->prodObj, a);
  if (!wa_aa || !waa_a)
    fail(Errc::MissingProduct, "group candidate needs nested pair witnesses registered");
  return GroupCandidate{a,
                        relation(groupSpec_.at("e")),
                        relation(groupSpec_.at("f")),
                        relation(groupSpec_.at("n")),
                        *waa,
                        *wa_aa,
                        *waa_a};
}

std::optional<RnoCandidate> Model::rnoCandidate() const {
  if (rnoSpec_.empty()) return std::nullopt;
  ObjPtr r = object(rnoSpec_.at("object"));
  const ProductWitness* wrr = lookupProduct(r, r);
  if (!wrr) fail(Errc::MissingProduct, "candidate needs the pair witness for its carrier");
  const ProductWitness* wr_rr = lookupProduct(r, wrr->prodObj);
  const ProductWitness* wrr_r = lookupProduct(wrr->prodObj, r);
  const NePowerWitness* nep = lookupNePower(r);
  if (!wr_rr || !wrr_r) fail(Errc::MissingProduct, "candidate needs nested pair witnesses");
  if (!nep) fail(Errc::MissingStructure, "candidate needs the non-empty power of its carrier");
  return RnoCandidate{r,           relation(rnoSpec_.at("i")), relation(rnoSpec_.at("C")),
                      relation(rnoSpec_.at("add")), *wrr, *wr_rr, *wrr_r, *nep};
}

Rel relFromJson(Model& m, const json& j) {
  if (!j.is_object() || !j.contains("from") || !j.contains("to") || !j.contains("matrix"))
    fail(Errc::SyntaxError, "relation literal needs from/to/matrix");
  ObjPtr src = m.resolveSort(parseSort(j.at("from").get<std::string>()));
  ObjPtr tgt = m.resolveSort(parseSort(j.at("to").get<std::string>()));
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != src->size())
    fail(Errc::TypeMismatch, "matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                 std::to_string(src->size()));
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(src->size()) * tgt->size());
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != tgt->size())
      fail(Errc::TypeMismatch, "matrix row has wrong width");
    for (const auto& cell : row) entries.push_back(m.algebra()->index(cell.get<std::string>()));
  }
  return Rel(m.algebra(), src, tgt, std::move(entries));
}

json relToJson(const Rel& r) {
  json j;
  j["from"] = r.source()->name;
  j["to"] = r.target()->name;
  j["matrix"] = r.namedRows();
  return j;
}

Model Model::fromJsonText(const std::string& text, const std::string& fallbackName) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::SyntaxError, std::string("bad JSON: ") + e.what());
  }
  return fromJson(j, fallbackName);
}

Model Model::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fromJsonText(text, std::filesystem::path(path).stem().string());
}

Model Model::fromJson(const json& j, const std::string& fallbackName) {
  if (!j.is_object()) fail(Errc::SyntaxError, "model file must be a JSON object");
  static const std::vector<std::string> known = {"name",     "lattice", "objects",  "relations",
                                                 "products", "powers",  "nepowers", "group",
                                                 "rno",      "power_bound"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      fail(Errc::SyntaxError, "unknown model key '" + it.key() + "'");
  if (!j.contains("lattice")) fail(Errc::SyntaxError, "model needs a lattice");

  std::string spec;
  HeytingAlgebra alg = [&] {
    const auto& lj = j.at("lattice");
    if (lj.is_string()) {
      spec = lj.get<std::string>();
      return parseLatticeBuilder(spec);
    }
    if (!lj.is_object() || !lj.contains("elements") || !lj.contains("cover"))
      fail(Errc::SyntaxError, "inline lattice needs elements and cover");
    std::vector<std::string> elements = lj.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> cover;
    for (const auto& pair : lj.at("cover")) {
      if (!pair.is_array() || pair.size() != 2) fail(Errc::SyntaxError, "cover entries are pairs");
      cover.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return HeytingAlgebra::fromOrder(elements, cover);
  }();

  Model m(j.value("name", fallbackName), std::move(alg), spec);
  if (j.contains("power_bound")) m.powerBound = j.at("power_bound").get<int>();

  if (j.contains("objects"))
    for (auto it = j.at("objects").begin(); it != j.at("objects").end(); ++it) {
      if (it.value().is_number_integer())
        m.addObject(it.key(), it.value().get<int>());
      else
        m.addObject(it.key(), it.value().get<std::vector<std::string>>());
    }

  if (j.contains("products"))
    for (const auto& p : j.at("products")) {
      if (!p.is_array() || p.size() != 2) fail(Errc::SyntaxError, "product entries are pairs");
      m.requireProduct(m.resolveSort(parseSort(p[0].get<std::string>())),
                       m.resolveSort(parseSort(p[1].get<std::string>())));
    }
  if (j.contains("powers"))
    for (const auto& p : j.at("powers")) m.requirePower(m.resolveSort(parseSort(p.get<std::string>())));
  if (j.contains("nepowers"))
    for (const auto& p : j.at("nepowers"))
      m.requireNePower(m.resolveSort(parseSort(p.get<std::string>())));

  if (j.contains("relations"))
    for (auto it = j.at("relations").begin(); it != j.at("relations").end(); ++it)
      m.addRelation(it.key(), relFromJson(m, it.value()));

  auto loadSpec = [&](const char* key, std::vector<std::string> fields,
                      std::map<std::string, std::string>& out) {
    if (!j.contains(key)) return;
    for (const auto& f : fields) {
      if (!j.at(key).contains(f))
        fail(Errc::SyntaxError, std::string(key) + " section needs '" + f + "'");
      out[f] = j.at(key).at(f).get<std::string>();
    }
  };
  loadSpec("group", {"object", "e", "f", "n"}, m.groupSpec_);
  loadSpec("rno", {"object", "i", "C", "add"}, m.rnoSpec_);

  // candidates need their witnesses; register them now
  if (!m.groupSpec_.empty()) {
    ObjPtr a = m.object(m.groupSpec_.at("object"));
    const ObjPtr& aa = m.requireProduct(a, a).prodObj;
    m.requireProduct(a, aa);
    m.requireProduct(aa, a);
  }
  if (!m.rnoSpec_.empty()) {
    ObjPtr r = m.object(m.rnoSpec_.at("object"));
    const ObjPtr& rr = m.requireProduct(r, r).prodObj;
    m.requireProduct(r, rr);
    m.requireProduct(rr, r);
    m.requireNePower(r);
  }
  return m;
}

namespace {

// covering relation: y covers x iff x < y with nothing strictly between
json latticeToJson(const HeytingAlgebra& a) {
  json cover = json::array();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < a.size() && covered; ++z)
        if (z != x && z != y && a.leq(x, z) && a.leq(z, y)) covered = false;
      if (covered) cover.push_back(json::array({a.name(x), a.name(y)}));
    }
  return json{{"elements", a.names()}, {"cover", cover}};
}

}  // namespace

json Model::toJson() const {
  json j;
  j["name"] = name_;
  if (!latticeSpec_.empty())
    j["lattice"] = latticeSpec_;
  else
    j["lattice"] = latticeToJson(*alg_);
  json objs = json::object();
  for (const auto& o : objs_)
    if (o != unit_) objs[o->name] = o->carrier;
  j["objects"] = objs;
  if (!rels_.empty()) {
    json rels = json::object();
    for (const auto& [name, r] : rels_) rels[name] = relToJson(r);
    j["relations"] = rels;
  }
  json prods = json::array();
  for (const auto& [key, w] : products_) {
    (void)w;
    auto bar = key.find('|');
    prods.push_back(json::array({key.substr(0, bar), key.substr(bar + 1)}));
  }
  if (!prods.empty()) j["products"] = prods;
  json pows = json::array();
  for (const auto& [key, w] : powers_) {
    (void)w;
    pows.push_back(key);
  }
  if (!pows.empty()) j["powers"] = pows;
  json neps = json::array();
  for (const auto& [key, w] : nepowers_) {
    (void)w;
    neps.push_back(key);
  }
  if (!neps.empty()) j["nepowers"] = neps;
  if (!groupSpec_.empty()) j["group"] = groupSpec_;
  if (!rnoSpec_.empty()) j["rno"] = rnoSpec_;
  return j;
}

nlohmann::json modelToJsonImpl(const Model& m) { return m.toJson(); }

// -- embedded example models -----------------------------------------------------

namespace {

json paper3chainJson() {
  return json{
      {"name", "paper3chain"},
      {"lattice", {{"elements", {"0", "u", "1"}}, {"cover", {{"0", "u"}, {"u", "1"}}}}},
      {"objects", {{"A", {"a"}}, {"B", {"b0", "b1"}}}},
      {"relations",
       {{"C", {{"from", "B"}, {"to", "B"}, {"matrix", {{"0", "1"}, {"0", "0"}}}}},
        {"X", {{"from", "A"}, {"to", "B"}, {"matrix", {{"0", "u"}}}}},
        {"E", {{"from", "B"}, {"to", "B"}, {"matrix", {{"1", "1"}, {"0", "1"}}}}}}}};
}

json bool2Json() {
  return json{{"name", "bool2"},
              {"lattice", "bool"},
              {"objects", {{"A", 2}, {"B", 2}, {"C", 2}, {"D", 2}}}};
}

json chain3freeJson() {
  return json{{"name", "chain3free"},
              {"lattice", "chain:3"},
              {"objects", {{"A", 1}, {"B", 2}}}};
}

json z3groupJson() {
  json f = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      json row = json::array({"0", "0", "0"});
      row[(i + j) % 3] = "1";
      f.push_back(row);
    }
  return json{{"name", "z3group"},
              {"lattice", "bool"},
              {"objects", {{"A", 3}}},
              {"products", {{"A", "A"}, {"A", "A*A"}, {"A*A", "A"}}},
              {"relations",
               {{"e", {{"from", "1"}, {"to", "A"}, {"matrix", {{"1", "0", "0"}}}}},
                {"f", {{"from", "A*A"}, {"to", "A"}, {"matrix", f}}},
                {"n",
                 {{"from", "A"},
                  {"to", "A"},
                  {"matrix", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}}}}}}},
              {"group", {{"object", "A"}, {"e", "e"}, {"f", "f"}, {"n", "n"}}}};
}

json rno1Json() {
  return json{{"name", "rno1"},
              {"lattice", "bool"},
              {"objects", {{"R", {"r0"}}}},
              {"products", {{"R", "R"}, {"R", "R*R"}, {"R*R", "R"}}},
              {"nepowers", {"R"}},
              {"relations",
               {{"i", {{"from", "1"}, {"to", "R"}, {"matrix", {{"1"}}}}},
                {"C", {{"from", "R"}, {"to", "R"}, {"matrix", {{"0"}}}}},
                {"add", {{"from", "R*R"}, {"to", "R"}, {"matrix", {{"1"}}}}}}},
              {"rno", {{"object", "R"}, {"i", "i"}, {"C", "C"}, {"add", "add"}}}};
}

json rno2Json() {
  // two-element chain with saturating addition
  return json{{"name", "rno2"},
              {"lattice", "bool"},
              {"objects", {{"R", {"r0", "r1"}}}},
              {"products", {{"R", "R"}, {"R", "R*R"}, {"R*R", "R"}}},
              {"nepowers", {"R"}},
              {"relations",
               {{"i", {{"from", "1"}, {"to", "R"}, {"matrix", {{"0", "1"}}}}},
                {"C", {{"from", "R"}, {"to", "R"}, {"matrix", {{"0", "1"}, {"0", "0"}}}}},
                {"add",
                 {{"from", "R*R"},
                  {"to", "R"},
                  {"matrix", {{"1", "0"}, {"0", "1"}, {"0", "1"}, {"0", "1"}}}}}}},
              {"rno", {{"object", "R"}, {"i", "i"}, {"C", "C"}, {"add", "add"}}}};
}

const std::map<std::string, json (*)()>& builtinTable() {
  static const std::map<std::string, json (*)()> table = {
      {"paper3chain", paper3chainJson}, {"bool2", bool2Json}, {"chain3free", chain3freeJson},
      {"z3group", z3groupJson},         {"rno1", rno1Json},   {"rno2", rno2Json},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtinModelNames() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : builtinTable()) {
    (void)fn;
    names.push_back(name);
  }
  return names;
}

Model builtinModel(const std::string& name) {
  auto it = builtinTable().find(name);
  if (it == builtinTable().end())
    fail(Errc::UnknownIdentifier, "no embedded model named '" + name + "'");
  return Model::fromJson(it->second());
}

std::vector<std::string> writeExampleModels(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (const auto& [name, fn] : builtinTable()) {
    std::string path = (std::filesystem::path(dir) / (name + ".json")).string();
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    out << fn().dump(2) << "\n";
    paths.push_back(path);
  }
  return paths;
}

}  // namespace relcat
