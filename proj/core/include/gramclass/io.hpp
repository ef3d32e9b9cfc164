#pragma once

#include <string>

#include <json.hpp>

#include "gramclass/congruence.hpp"
#include "gramclass/quiver.hpp"
#include "gramclass/unitform.hpp"

namespace gramclass {

using Json = nlohmann::ordered_json;

// Either a quiver or a unit form, depending on the file contents.
struct Input {
  bool is_quiver = false;
  Quiver quiver;
  UnitForm form;
};

// JSON files are detected by their keys: {"vertices", "arrows"} for quivers,
// {"n", "upper"} for forms. Text files: a quiver starts with "m n" followed
// by one "s t" line per arrow; a matrix starts with "rows cols" followed by
// rows. Malformed input raises ParseError with line/column information;
// well-formed input violating a structural invariant raises InvariantError
// naming the invariant.
Quiver load_quiver(const std::string& path);
UnitForm load_form(const std::string& path);
IntMatrix load_matrix(const std::string& path);
Input load_input(const std::string& path);

Json to_json(const Quiver& q);
Json to_json(const UnitForm& q);
Json to_json(const IntMatrix& M);
Json to_json(const Partition& p);

Quiver quiver_from_json(const Json& j);
UnitForm form_from_json(const Json& j);

IntMatrix matrix_from_json(const Json& j);

// JSON number when the value fits in 64 bits, decimal string otherwise.
Json json_int(const Int& x);

// "rows cols" header line followed by one space-separated line per row.
std::string matrix_to_text(const IntMatrix& M);

void save_json(const Json& j, const std::string& path);
void save_text(const std::string& text, const std::string& path);

}  // namespace gramclass
