#include "pcurv/json_io.hpp"

#include <json.hpp>

#include "pcurv/error.hpp"

namespace pcurv {

using nlohmann::json;

std::string to_json(const BivarPoly& c) {
  const bool x = c.frame() == CentralFrame::X;
  json j;
  j["p"] = c.field().p();
  j["frame"] = x ? "x" : "theta";
  j["U"] = x ? "x^p" : "t^p-t";
  j["V"] = "d^p";
  j["v_min"] = c.v_low();
  json rows = json::array();
  if (!c.is_zero())
    for (long v = c.v_low(); v <= c.v_degree(); ++v) rows.push_back(c.row(v).coeffs());
  j["coeffs"] = rows;
  return j.dump();
}

BivarPoly bivar_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  try {
    const Field f(j.at("p").get<u64>());
    const std::string frame = j.at("frame").get<std::string>();
    if (frame != "x" && frame != "theta") throw ParseError("unknown frame '" + frame + "'", 0);
    BivarPoly c(f, frame == "x" ? CentralFrame::X : CentralFrame::Theta);
    const long v0 = j.at("v_min").get<long>();
    const auto& rows = j.at("coeffs");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<u64> row;
      for (const auto& e : rows[k]) {
        const u64 a = e.get<u64>();
        if (a >= f.p()) throw ParseError("coefficient out of range", 0);
        row.push_back(a);
      }
      c.add_term(v0 + static_cast<long>(k), Poly(f, std::move(row)));
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed xi JSON: ") + e.what(), 0);
  }
}

}  // namespace pcurv
