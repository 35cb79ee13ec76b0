#pragma once

// JSON views of library values. Rationals are strings ("-1/2") so that no
// precision is lost; big floats are decimal strings.

#include "json.hpp"
#include "sah/cover.hpp"
#include "sah/flag_complex.hpp"
#include "sah/polytope.hpp"
#include "sah/spherical.hpp"

namespace sah {

using Json = nlohmann::ordered_json;

// "(1,0);(1,-1/2)" -> two vectors of one common length.
std::vector<Vec> parse_vectors(const std::string& text);

Json to_json(const Rat& q);
Json to_json(const Vec& v);
Json to_json(const std::vector<Vec>& vs);
Json to_json(const Space& s);
Json to_json(const Generator& g);
Json to_json(const Element& e);
Json to_json(const Tensor& t);
Json to_json(const CoverReport& r);
Json to_json(const HopfReport& r);
Json to_json(const LocateResult& r);
Json to_json(const HomologyGroup& h);
Json to_json(const Chain& c);
Json to_json(const Angle& a, int digits = 40);
Json to_json(const DehnTensor& t, int digits = 40);
Json to_json(const RelationSearch& s);
Json to_json(const CocommReport& r, int digits = 40);

}  // namespace sah
