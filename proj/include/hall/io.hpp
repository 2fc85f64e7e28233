#pragma once

#include <string>

#include "json.hpp"

#include "hall/algebra.hpp"
#include "hall/catalog.hpp"
#include "hall/complex.hpp"
#include "hall/lf_calculus.hpp"

/// JSON and CSV formats. Every document carries "schema": 1; rationals are
/// "num/den" strings. Readers throw InvalidInput on any schema violation.
namespace hall::io {

using json = nlohmann::json;

json read_json_file(const std::string& path);
/// Accepts a missing "schema" field; any other value than 1 is rejected.
void require_schema(const json& doc);

/// {"vertices": n, "arrows": [{"src": i, "dst": j}, ...]}
QuiverPtr quiver_from_json(const json& doc);
json quiver_to_json(const Quiver& q);

/// "1,2" -> {1, 2}.
DimVector parse_dims(const std::string& text);
/// "-1,1" -> Window{-1, 1}.
Window parse_window(const std::string& text);

/// {schema, p, bound, quiver, classes: [{id, dim_vector, aut_order, indecomposable}]}
json catalog_to_json(const Catalog& cat);

/// [{class_id, degree}, ...]
json derived_class_to_json(const DerivedClass& x);

/// {schema, products: [{x, y, terms: [{z, coeff_num, coeff_den}]}]}
json table_to_json(const StructureTable<IsoClassId>& table);
json table_to_json(const StructureTable<DerivedClass>& table);
/// Header x,y,z,coeff; one row per nonzero structure constant.
std::string table_to_csv(const StructureTable<IsoClassId>& table);
std::string table_to_csv(const StructureTable<DerivedClass>& table);
std::string table_to_text(const StructureTable<IsoClassId>& table);
std::string table_to_text(const StructureTable<DerivedClass>& table);

/// {"components": [{"id": ..., "orders": [...]}]}
lf::LFType type_from_json(const json& doc);
json type_to_json(const lf::LFType& t);
/// {source, target, component_map: {x: y}, fibers: {y: {components, incl: {c: x}}}}
lf::ProperMapData map_from_json(const json& doc);
json map_to_json(const lf::ProperMapData& m);
/// {"values": {id: "num/den"}}
lf::FiniteSupportFn fn_from_json(const json& doc, lf::TypePtr base);
json fn_to_json(const lf::FiniteSupportFn& f);
/// {f, u, g, v, witness: {y': {c': c}}}
lf::BaseChangeSquare square_from_json(const json& doc);
json square_to_json(const lf::BaseChangeSquare& sq);

}  // namespace hall::io
