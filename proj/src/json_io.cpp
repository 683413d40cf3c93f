#include "sqdiff/json_io.hpp"

#include <string>

#include "sqdiff/errors.hpp"

namespace sqdiff::json {

namespace {

const std::string& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw Error(ErrorKind::Parse, key, std::string("missing string field '") + key + "'");
  return j.at(key).get_ref<const std::string&>();
}

Integer int_field(const Json& j, const char* key) { return Integer::parse(field(j, key)); }

Rational rat_field(const Json& j, const char* key) {
  const std::string& text = field(j, key);
  Rational r = Rational::parse(text);
  if (r.to_string() != text) throw Error(ErrorKind::Parse, key, "rational '" + text + "' is not in canonical num/den form");
  return r;
}

}  // namespace

Json to_json(const EulerTriple& e) {
  return Json{{"x", e.x().to_string()}, {"y", e.y().to_string()}, {"z", e.z().to_string()},
              {"t", e.t().to_string()}, {"u", e.u().to_string()}, {"v", e.v().to_string()}};
}

Json to_json(const HyperbolicTriple& h) {
  return Json{{"a", h.a.to_string()}, {"b", h.b.to_string()}, {"c", h.c.to_string()}};
}

Json to_json(const Cuboid& c) {
  return Json{{"edge_t", c.edge_t.to_string()},   {"edge_v", c.edge_v.to_string()},
              {"edge_z", c.edge_z.to_string()},   {"face_tv", c.face_tv.to_string()},
              {"face_vz", c.face_vz.to_string()}, {"body", c.body.to_string()}};
}

Json to_json(const SumDiffTriple& sd) {
  return Json{{"A", sd.A.to_string()}, {"B", sd.B.to_string()}, {"C", sd.C.to_string()}};
}

Json to_json(const SectionParams& sp) {
  return Json{{"m", sp.m.to_string()}, {"a", sp.a.to_string()}, {"s", sp.s.to_string()}, {"p", sp.p.to_string()},
              {"q", sp.q.to_string()}, {"f", sp.f.to_string()}, {"g", sp.g.to_string()}, {"w", sp.w.to_string()}};
}

Json to_json(const SixTuple& st) {
  return Json{{"x", st.x.to_string()}, {"y", st.y.to_string()}, {"z", st.z.to_string()},
              {"t", st.t.to_string()}, {"u", st.u.to_string()}, {"v", st.v.to_string()}};
}

Json to_json(const QuarticPoint& p) {
  if (p.at_infinity) return Json{{"infinity", p.branch == InfinityBranch::Plus ? "plus" : "minus"}};
  return Json{{"s", p.s.to_string()}, {"w", p.w.to_string()}};
}

Json to_json(const SolutionRecord& r) {
  Json j = to_json(r.triple);
  j["m"] = r.m.to_string();
  return j;
}

Json to_json(const Checkpoint& cp) {
  return Json{{"block_end", cp.block_end.to_string()}, {"count", cp.count.to_string()}, {"config_hash", cp.config_hash}};
}

EulerTriple euler_from_json(const Json& j) {
  EulerTriple e = verify_euler(int_field(j, "x"), int_field(j, "y"), int_field(j, "z"));
  if (e.x() != int_field(j, "x") || e.y() != int_field(j, "y") || e.z() != int_field(j, "z"))
    throw Error(ErrorKind::Parse, "order", "triple is not in canonical x > y > z order");
  if (e.certificate() != SquareCertificate{int_field(j, "t"), int_field(j, "u"), int_field(j, "v")})
    throw Error(ErrorKind::Parse, "certificate", "certificate does not match the triple");
  return e;
}

HyperbolicTriple hyperbolic_from_json(const Json& j) {
  return {rat_field(j, "a"), rat_field(j, "b"), rat_field(j, "c")};
}

Cuboid cuboid_from_json(const Json& j) {
  return {int_field(j, "edge_t"), int_field(j, "edge_v"), int_field(j, "edge_z"),
          int_field(j, "face_tv"), int_field(j, "face_vz"), int_field(j, "body")};
}

SumDiffTriple sumdiff_from_json(const Json& j) { return {int_field(j, "A"), int_field(j, "B"), int_field(j, "C")}; }

SectionParams params_from_json(const Json& j) {
  return {rat_field(j, "m"), rat_field(j, "a"), rat_field(j, "s"), rat_field(j, "p"),
          rat_field(j, "q"), rat_field(j, "f"), rat_field(j, "g"), rat_field(j, "w")};
}

SixTuple sixtuple_from_json(const Json& j) {
  return {int_field(j, "x"), int_field(j, "y"), int_field(j, "z"), int_field(j, "t"), int_field(j, "u"), int_field(j, "v")};
}

QuarticPoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("infinity")) {
    const std::string& b = field(j, "infinity");
    if (b != "plus" && b != "minus") throw Error(ErrorKind::Parse, "infinity", "branch must be plus or minus");
    return QuarticPoint::infinity(b == "plus" ? InfinityBranch::Plus : InfinityBranch::Minus);
  }
  return QuarticPoint::affine(rat_field(j, "s"), rat_field(j, "w"));
}

SolutionRecord record_from_json(const Json& j) {
  SolutionRecord r{euler_from_json(j), rat_field(j, "m")};
  if (r.m != make_record(r.triple).m) throw Error(ErrorKind::Parse, "m", "fiber parameter does not match the triple");
  return r;
}

Checkpoint checkpoint_from_json(const Json& j) {
  return {int_field(j, "block_end"), int_field(j, "count"), field(j, "config_hash")};
}

}  // namespace sqdiff::json
