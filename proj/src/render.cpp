#include "coxkl/render.hpp"

#include "coxkl/error.hpp"

#include <map>
#include <sstream>

namespace coxkl {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw UsageError("invalid integer literal '" + s + "'");
    return Integer(s);
  }
  throw UsageError("expected an integer, got " + j.dump());
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return {{"basis", basis_name(p.basis())}, {"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw UsageError("polynomial JSON needs a \"coeffs\" array");
  Basis b = Basis::PowerQ;
  if (j.contains("basis")) {
    const auto name = j["basis"].get<std::string>();
    if (name == "q-1")
      b = Basis::ShiftedQ1;
    else if (name != "q")
      throw UsageError("unknown basis '" + name + "'");
  }
  std::vector<Integer> c;
  for (const auto& x : j["coeffs"]) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c), b);
}

json interval_to_json(const GroupContext& ctx, const IntervalData& d) {
  json members = json::array(), edges = json::array(), nbhd = json::array();
  for (ElementId v : d.members)
    members.push_back({{"word", ctx.format_element(v)}, {"length", ctx.length(v)}});
  for (const auto& e : d.edges)
    edges.push_back({{"from", ctx.format_element(e.from)},
                     {"to", ctx.format_element(e.to)},
                     {"len", ctx.length(e.to) - ctx.length(e.from)}});
  for (ElementId v : d.nbhd) nbhd.push_back(ctx.format_element(v));
  return {{"group", ctx.name()},
          {"bottom", ctx.format_element(d.bottom)},
          {"top", ctx.format_element(d.top)},
          {"length", ctx.length(d.top) - ctx.length(d.bottom)},
          {"vertices", d.members.size()},
          {"edge_count", d.edges.size()},
          {"members", members},
          {"edges", edges},
          {"abs_len", d.abs_len},
          {"nbhd", nbhd},
          {"defect", d.defect}};
}

std::string interval_to_dot(const GroupContext& ctx, const IntervalData& d) {
  std::ostringstream os;
  os << "// " << d.members.size() << " vertices, " << d.edges.size() << " edges\n";
  os << "digraph \"" << ctx.name() << " [" << ctx.format_element(d.bottom) << ", "
     << ctx.format_element(d.top) << "]\" {\n";
  os << "  rankdir=BT;\n";
  std::map<int, std::vector<ElementId>> ranks;
  for (ElementId v : d.members) ranks[ctx.length(v)].push_back(v);
  for (const auto& [len, vs] : ranks) {
    os << "  { rank=same;";
    for (ElementId v : vs) os << " v" << v << " [label=\"" << ctx.format_element(v) << "\"];";
    os << " }\n";
  }
  for (const auto& e : d.edges)
    os << "  v" << e.from << " -> v" << e.to
       << " [len=" << ctx.length(e.to) - ctx.length(e.from) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxkl
