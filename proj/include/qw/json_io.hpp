#ifndef QW_JSON_IO_HPP
#define QW_JSON_IO_HPP

#include <json.hpp>

#include "qw/clword.hpp"
#include "qw/filling.hpp"
#include "qw/gt.hpp"
#include "qw/partition.hpp"
#include "qw/qxpoly.hpp"

namespace qw {

using json = nlohmann::json;

/// Malformed-input errors carry this type so the CLI can map them to exit
/// code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const ColumnComposition& c);
ColumnComposition column_composition_from_json(const json& j);

/// {"n":..., "rows":[[...],...]} for partition shapes, {"n":...,
/// "columns":[[...],...]} otherwise; both accepted on input.
json to_json(const Filling& f);
Filling filling_from_json(const json& j);

json to_json(const GTPattern& t);
GTPattern gt_from_json(const json& j);

json to_json(const POP& p);
POP pop_from_json(const json& j);

/// List of {"q":int, "x":[int,...], "t":int (when nonzero), "c":"decimal"}.
json to_json(const QXPoly& p);
QXPoly qxpoly_from_json(const json& j, int nvars);

json to_json(const CLWord& w);

/// "x1^2 + (1+q) x1 x2 + x2^2": terms grouped by x-monomial, q-coefficient in
/// parentheses when not a single term.
std::string polynomial_text(const QXPoly& p);

}  // namespace qw

#endif
