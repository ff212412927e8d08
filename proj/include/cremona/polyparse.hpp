#pragma once
// Textual grammar: integer/rational coefficients, symbols x,y,z,t,
// operators + - * / ^ and parentheses.  Map files carry an optional
// "field:" or "torus:" header and a "map P2 [...]" / "map A2 [...]" line.

#include <string>
#include <vector>

#include "cremona/affine.hpp"
#include "cremona/torus.hpp"

namespace cremona {

Scalar parse_scalar(const std::string& s, const FieldPtr& f = nullptr);
HomPoly parse_hompoly(const std::string& s, const FieldPtr& f = nullptr);
Poly2 parse_poly2(const std::string& s, const FieldPtr& f = nullptr);
RatFunc parse_ratfunc(const std::string& s, const FieldPtr& f = nullptr);

// "t^4+1" -> field context
FieldPtr parse_field_poly(const std::string& s);

struct MapSource {
  FieldPtr field;
  TorusGroupPtr torus;
  bool projective = true;
  std::vector<std::string> entries;
};
// the full map-file grammar (headers plus one map line)
MapSource parse_map_source(const std::string& text);

// "N=5, free=2"
TorusGroupPtr parse_torus_header(const std::string& s);
// "(e0; e1,e2)"
TorusElem parse_torus_elem(const std::string& s, const TorusGroupPtr& g);

}  // namespace cremona
