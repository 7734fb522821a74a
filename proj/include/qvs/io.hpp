#pragma once

#include <string>

#include "qvs/monadicity.hpp"

namespace qvs {

/// Strict JSON loaders. Every document names its schema, unknown fields are
/// rejected, and every diagnostic carries the dotted path of the offending
/// field. Element references resolve by name, or by position for integers.

/// Parses a file; parse errors keep the position annotation from the parser.
json parse_json_file(const std::string& path);

/// "quantale/1". Builtin shorthand {"builtin": "chain_lukasiewicz", "n": 3}
/// (boolean2 takes no n) or the full table form {"carrier": [names...],
/// "chain": true | "order_pairs": [[i,j]...], "mul": [[...]], "unit": u,
/// "involution": [...]}. order_pairs are closed reflexively and
/// transitively; the involution defaults to the identity.
FiniteQuantale load_quantale(const json& doc, const std::string& where);

struct LoadedQSet {
  std::shared_ptr<const FiniteQuantale> base;
  std::shared_ptr<const Quantaloid> world;
  QCategory cat;
};

/// "qset/1": {"quantale": <path or inline object>, "elements": [names],
/// "alpha": [[value refs]]}. Extents are the diagonal entries; each must be
/// hermitian, and every entry must live in its hom-set.
LoadedQSet load_qset(const json& doc, const std::string& where);

/// A bare {"x": "y", ...} object or a path to a "map/1" document. Total on
/// src, values in dst.
std::vector<int> load_map(const json& j, const TypedSet& src, const TypedSet& dst,
                          const std::string& where);

struct LoadedInstance {
  std::shared_ptr<const FiniteQuantale> base;
  std::shared_ptr<const Quantaloid> world;
  SplitFork fork;
  std::vector<Cocone> cocones;
};

/// "monadicity/1": {"builtin": name} for the worked forks, or the full form
/// {"quantale": ..., "categories": {"X","Y","Z"}, "fork": {"f","g","t","h",
/// "s"}, "cocones": [{"name","category","map"}...]}. Categories are given as
/// {"elements": [names], "types": [hermitian refs], "alpha": [[refs]]}.
LoadedInstance load_instance(const json& doc, const std::string& where);

} // namespace qvs
