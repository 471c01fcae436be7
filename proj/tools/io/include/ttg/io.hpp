#pragma once

#include <string>

#include "json.hpp"
#include "ttg/complex.hpp"
#include "ttg/endo.hpp"
#include "ttg/error.hpp"
#include "ttg/morphism.hpp"
#include "ttg/presheaf.hpp"
#include "ttg/spectrum.hpp"
#include "ttg/support.hpp"
#include "ttg/verify.hpp"

namespace ttg::io {

using json = nlohmann::ordered_json;

/// Malformed JSON input: wrong kinds, missing fields, bad encodings.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Parses text as JSON, reporting the failure as a ParseError.
json parse(const std::string& text, const std::string& what);
/// Reads and parses a file.
json load(const std::string& path);

Ring ring_from_json(const json& j);
/// The canonical descriptor of the flattened ring.
json ring_to_json(const Ring& r);
/// Z, Z12, Z/12, Z[1/6], F2[t], or a descriptor file / inline JSON.
Ring ring_from_argument(const std::string& arg);

BaseElem base_from_json(const BaseRing& b, const json& j);
json base_to_json(const BaseRing& b, const BaseElem& a);
Scalar scalar_from_json(const Component& c, const json& j);
json scalar_to_json(const Component& c, const Scalar& s);
/// One encoding for single-component rings, an array (possibly nested
/// following the factors) for several components.
Element element_from_json(const Ring& r, const json& j);
json element_to_json(const Ring& r, const Element& a);

Complex complex_from_json(const json& j);
json complex_to_json(const Complex& p);

Support support_from_json(const Ring& r, const json& j);
json support_to_json(const Support& y);
PointDescriptor point_from_json(const Ring& r, const json& j);
json point_to_json(const Ring& r, const PointDescriptor& x);

/// {"complement": support}.
OpenSet open_from_json(const Ring& r, const json& j);
json open_to_json(const OpenSet& v);

RingMap ring_map_from_json(const json& j);
json ring_map_to_json(const RingMap& f);

json module_to_json(const Ring& r, const ModuleClass& m);

json spectrum_to_json(const SpectrumModel& s);
json reconstruction_to_json(const RingedSpaceModel& m);
json report_to_json(const VerificationReport& r);

}  // namespace ttg::io
