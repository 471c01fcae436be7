#include "ttg/dot.hpp"

namespace ttg {

namespace {

std::string node_label(const Ring& ring, const PointDescriptor& x) {
  std::string s = x.is_generic() ? std::string("η")
                                 : "(" + ring.component(x.component).base_ring().to_string(*x.prime) + ")";
  if (ring.is_product()) s += "@" + std::to_string(x.component);
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const SpectrumModel& s) {
  std::string out = "digraph spc {\n";
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += "  p" + std::to_string(i) + " [label=\"" + escape(node_label(s.ring(), pts[i].descriptor)) + "\"];\n";
  for (const auto& [i, j] : s.covering_relations()) out += "  p" + std::to_string(i) + " -> p" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ttg
