#include "coxkl/render.hpp"

#include <istream>
#include <ostream>

namespace coxkl {

using nlohmann::json;

std::size_t save_cache(std::ostream& os, const KLContext& kl) {
  const GroupContext& ctx = kl.group();
  std::size_t written = 0;
  for (PolyKind k : {PolyKind::R, PolyKind::Rtilde, PolyKind::KL}) {
    const PolyTable& t = kl.table(k);
    for (ElementId w = 0; w < ctx.size(); ++w) {
      if (!t.column_done(w)) continue;
      const std::string ww = ctx.format_element(w);
      for (ElementId u = 0; u < ctx.size(); ++u) {
        const IntPoly& p = t.at(u, w);
        if (p.is_zero()) continue;
        json rec = {{"kind", kind_name(k)},
                    {"group", ctx.name()},
                    {"u", ctx.format_element(u)},
                    {"w", ww},
                    {"coeffs", poly_to_json(p)["coeffs"]}};
        os << rec.dump() << '\n';
        ++written;
      }
    }
  }
  return written;
}

CacheLoadStats load_cache(std::istream& is, KLContext& kl) {
  const GroupContext& ctx = kl.group();
  CacheLoadStats stats;
  for (std::string line; std::getline(is, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json rec = json::parse(line);
      if (rec.at("group").get<std::string>() != ctx.name()) {
        ++stats.foreign;
        continue;
      }
      const PolyKind k = parse_kind(rec.at("kind").get<std::string>());
      const ElementId u = ctx.parse_element(rec.at("u").get<std::string>());
      const ElementId w = ctx.parse_element(rec.at("w").get<std::string>());
      IntPoly p = poly_from_json({{"basis", "q"}, {"coeffs", rec.at("coeffs")}});
      if (kl.seed(k, u, w, std::move(p)))
        ++stats.accepted;
      else
        ++stats.rejected;
    } catch (const std::exception&) {
      ++stats.rejected;
    }
  }
  return stats;
}

}  // namespace coxkl
