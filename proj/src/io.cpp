#include "hall/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hall/error.hpp"

namespace hall::io {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

template <class Int>
Int parse_int(const std::string& s, const char* what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(std::string(what) + ": '" + s + "' is not an integer");
  }
  return v;
}

std::string label(IsoClassId id) { return "c" + std::to_string(id.value); }
std::string label(const DerivedClass& x) { return x.to_string(); }
json key(IsoClassId id) { return id.value; }
json key(const DerivedClass& x) { return derived_class_to_json(x); }

template <class Basis>
json table_json(const StructureTable<Basis>& table) {
  json products = json::array();
  for (const auto& [pair, e] : table.entries()) {
    json terms = json::array();
    for (const auto& [z, c] : e.terms()) {
      terms.push_back({{"z", key(z)}, {"coeff_num", c.get_num().get_str()}, {"coeff_den", c.get_den().get_str()}});
    }
    products.push_back({{"x", key(pair.first)}, {"y", key(pair.second)}, {"terms", terms}});
  }
  return {{"schema", 1}, {"products", products}};
}

template <class Basis>
std::string table_csv(const StructureTable<Basis>& table) {
  std::string out = "x,y,z,coeff\n";
  for (const auto& [pair, e] : table.entries())
    for (const auto& [z, c] : e.terms())
      out += label(pair.first) + "," + label(pair.second) + "," + label(z) + "," + format_rational(c) + "\n";
  return out;
}

template <class Basis>
std::string table_text(const StructureTable<Basis>& table) {
  std::string out;
  for (const auto& [pair, e] : table.entries()) {
    out += "[" + label(pair.first) + "] * [" + label(pair.second) + "] =";
    if (e.is_zero()) out += " 0";
    bool first = true;
    for (const auto& [z, c] : e.terms()) {
      out += (first ? " " : " + ") + format_rational(c) + " [" + label(z) + "]";
      first = false;
    }
    out += "\n";
  }
  return out;
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  return doc.at(name);
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void require_schema(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("expected a JSON object");
  if (doc.contains("schema") && doc.at("schema") != 1) throw InvalidInput("unsupported schema version");
}

QuiverPtr quiver_from_json(const json& doc) {
  return guarded("quiver", [&] {
    require_schema(doc);
    const auto& v = field(doc, "vertices");
    if (!v.is_number_integer() || v.get<long>() <= 0) throw InvalidInput("quiver: 'vertices' must be a positive integer");
    const auto n = v.get<std::size_t>();
    std::vector<Arrow> arrows;
    for (const auto& a : field(doc, "arrows")) {
      const auto src = field(a, "src").get<long>();
      const auto dst = field(a, "dst").get<long>();
      if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= n || static_cast<std::size_t>(dst) >= n) {
        throw InvalidInput("quiver: arrow endpoint out of range");
      }
      arrows.push_back({static_cast<std::size_t>(src), static_cast<std::size_t>(dst)});
    }
    return std::make_shared<const Quiver>(n, std::move(arrows));
  });
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"src", a.src}, {"dst", a.dst}});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

DimVector parse_dims(const std::string& text) {
  DimVector out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int<std::size_t>(part, "dimension vector"));
  if (out.empty()) throw InvalidInput("empty dimension vector");
  return out;
}

Window parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidInput("window must be 'lo,hi'");
  Window w{parse_int<int>(parts[0], "window"), parse_int<int>(parts[1], "window")};
  if (w.lo > w.hi) throw InvalidInput("window has lo > hi");
  return w;
}

json catalog_to_json(const Catalog& cat) {
  json classes = json::array();
  for (const auto& e : cat.entries()) {
    classes.push_back({{"id", e.id.value},
                       {"dim_vector", e.representative.dims()},
                       {"aut_order", cat.aut_order(e.id)},
                       {"indecomposable", e.indecomposable}});
  }
  return {{"schema", 1},
          {"p", cat.modulus()},
          {"bound", cat.bound()},
          {"quiver", quiver_to_json(*cat.quiver())},
          {"classes", classes}};
}

json derived_class_to_json(const DerivedClass& x) {
  json out = json::array();
  for (const auto& t : x.terms()) out.push_back({{"class_id", t.id.value}, {"degree", t.degree}});
  return out;
}

json table_to_json(const StructureTable<IsoClassId>& table) { return table_json(table); }
json table_to_json(const StructureTable<DerivedClass>& table) { return table_json(table); }
std::string table_to_csv(const StructureTable<IsoClassId>& table) { return table_csv(table); }
std::string table_to_csv(const StructureTable<DerivedClass>& table) { return table_csv(table); }
std::string table_to_text(const StructureTable<IsoClassId>& table) { return table_text(table); }
std::string table_to_text(const StructureTable<DerivedClass>& table) { return table_text(table); }

lf::LFType type_from_json(const json& doc) {
  return guarded("type", [&] {
    std::vector<lf::Component> comps;
    for (const auto& c : field(doc, "components")) {
      lf::Component comp{field(c, "id").get<std::string>(), {}};
      for (const auto& o : field(c, "orders")) {
        if (!o.is_number_integer() || o.get<long long>() <= 0) {
          throw InvalidInput("component '" + comp.id + "' has a non-positive order");
        }
        comp.orders.push_back(o.get<std::uint64_t>());
      }
      comps.push_back(std::move(comp));
    }
    return lf::LFType(std::move(comps));
  });
}

json type_to_json(const lf::LFType& t) {
  json comps = json::array();
  for (const auto& c : t.components()) comps.push_back({{"id", c.id}, {"orders", c.orders}});
  return {{"components", comps}};
}

lf::ProperMapData map_from_json(const json& doc) {
  return guarded("proper map", [&] {
    require_schema(doc);
    lf::ProperMapData m;
    m.source = std::make_shared<const lf::LFType>(type_from_json(field(doc, "source")));
    m.target = std::make_shared<const lf::LFType>(type_from_json(field(doc, "target")));
    m.component_map = field(doc, "component_map").get<std::map<std::string, std::string>>();
    for (const auto& [y, f] : field(doc, "fibers").items()) {
      m.fibers[y] = lf::Fiber{type_from_json(f), field(f, "incl").get<std::map<std::string, std::string>>()};
    }
    m.validate();
    return m;
  });
}

json map_to_json(const lf::ProperMapData& m) {
  json fibers = json::object();
  for (const auto& [y, f] : m.fibers) {
    auto j = type_to_json(f.type);
    j["incl"] = f.incl;
    fibers[y] = std::move(j);
  }
  return {{"schema", 1},
          {"source", type_to_json(*m.source)},
          {"target", type_to_json(*m.target)},
          {"component_map", m.component_map},
          {"fibers", fibers}};
}

lf::FiniteSupportFn fn_from_json(const json& doc, lf::TypePtr base) {
  return guarded("function", [&] {
    require_schema(doc);
    lf::FiniteSupportFn f(std::move(base));
    for (const auto& [id, v] : field(doc, "values").items()) f.set(id, parse_rational(v.get<std::string>()));
    return f;
  });
}

json fn_to_json(const lf::FiniteSupportFn& f) {
  json values = json::object();
  for (const auto& [id, v] : f.values()) values[id] = format_rational(v);
  return {{"schema", 1}, {"values", values}};
}

lf::BaseChangeSquare square_from_json(const json& doc) {
  return guarded("base-change square", [&] {
    require_schema(doc);
    return lf::BaseChangeSquare{
        map_from_json(field(doc, "f")), map_from_json(field(doc, "u")), map_from_json(field(doc, "g")),
        map_from_json(field(doc, "v")),
        field(doc, "witness").get<std::map<std::string, std::map<std::string, std::string>>>()};
  });
}

json square_to_json(const lf::BaseChangeSquare& sq) {
  return {{"schema", 1},
          {"f", map_to_json(sq.f)},
          {"u", map_to_json(sq.u)},
          {"g", map_to_json(sq.g)},
          {"v", map_to_json(sq.v)},
          {"witness", sq.witness}};
}

}  // namespace hall::io
