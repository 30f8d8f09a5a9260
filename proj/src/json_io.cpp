#include "credal/json_io.hpp"

#include <fstream>

#include "credal/error.hpp"

namespace credal {

namespace {

[[noreturn]] void bad_input(const std::string& what) { fail(ErrorCode::InvalidArgument, what); }

std::string require_string(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) bad_input(std::string("missing string field '") + field + "'");
  return j[field].get<std::string>();
}

Ambient resolve_ambient(const Json& j, const std::optional<Ambient>& fallback) {
  if (j.is_object() && j.contains("ambient")) return ambient_from_json(j["ambient"]);
  if (fallback) return *fallback;
  return Ambient::full_line();
}

}  // namespace

Json ambient_to_json(const Ambient& ambient) {
  Json j;
  switch (ambient.kind()) {
    case AmbientKind::FullLine:
      j["kind"] = "line";
      return j;
    case AmbientKind::OpenInterval:
      j["kind"] = "open";
      break;
    case AmbientKind::ClosedInterval:
      j["kind"] = "closed";
      break;
  }
  j["a"] = format_extended(ambient.lo());
  j["b"] = format_extended(ambient.hi());
  return j;
}

Ambient ambient_from_json(const Json& j) {
  if (!j.is_object()) bad_input("ambient must be an object");
  std::string kind = require_string(j, "kind");
  if (kind == "line") return Ambient::full_line();
  ExtendedRational a = parse_extended(require_string(j, "a"));
  ExtendedRational b = parse_extended(require_string(j, "b"));
  if (kind == "open") return Ambient::open(a, b);
  if (kind == "closed") {
    if (!a.finite() || !b.finite()) bad_input("closed ambient needs finite endpoints");
    return Ambient::closed(a.value(), b.value());
  }
  bad_input("unknown ambient kind '" + kind + "'");
}

Json set_to_json(const ElementarySet& set) {
  Json j;
  j["ambient"] = ambient_to_json(set.ambient());
  Json intervals = Json::array();
  for (const Interval& iv : set.intervals())
    intervals.push_back(Json::array({format_extended(iv.lo), format_extended(iv.hi)}));
  j["intervals"] = intervals;
  return j;
}

ElementarySet set_from_json(const Json& j, const std::optional<Ambient>& fallback) {
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
    bad_input("set needs an 'intervals' array");
  Ambient ambient = resolve_ambient(j, fallback);
  std::vector<Interval> raw;
  for (const Json& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2) bad_input("each interval is a [lo, hi] pair");
    raw.push_back(Interval{parse_extended(pair[0].get<std::string>()), parse_extended(pair[1].get<std::string>())});
  }
  return regularize(std::move(raw), ambient);
}

Json piecewise_to_json(const PiecewiseAffine& g) {
  Json j;
  Json xs = Json::array(), ys = Json::array();
  for (const Rational& x : g.breakpoints()) xs.push_back(format_rational(x));
  for (const Rational& y : g.values()) ys.push_back(format_rational(y));
  j["breakpoints"] = xs;
  j["values"] = ys;
  j["ambient"] = ambient_to_json(g.ambient());
  return j;
}

PiecewiseAffine piecewise_from_json(const Json& j, const std::optional<Ambient>& fallback) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    bad_input("function needs 'breakpoints' and 'values'");
  Ambient ambient = resolve_ambient(j, fallback);
  std::vector<Rational> xs, ys;
  for (const Json& x : j["breakpoints"]) xs.push_back(parse_rational(x.get<std::string>()));
  for (const Json& y : j["values"]) ys.push_back(parse_rational(y.get<std::string>()));
  return PiecewiseAffine::make(std::move(xs), std::move(ys), ambient);
}

namespace {

const char* side_name(Side side) { return side == Side::Left ? "left" : "right"; }

Side side_from_name(const std::string& name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  bad_input("side must be 'left' or 'right'");
}

const char* end_name(EndKind end) {
  switch (end) {
    case EndKind::NegInf:
      return "neg_inf";
    case EndKind::PosInf:
      return "pos_inf";
    case EndKind::AmbientLeft:
      return "ambient_left";
    case EndKind::AmbientRight:
      return "ambient_right";
  }
  return "?";
}

EndKind end_from_name(const std::string& name) {
  if (name == "neg_inf") return EndKind::NegInf;
  if (name == "pos_inf") return EndKind::PosInf;
  if (name == "ambient_left") return EndKind::AmbientLeft;
  if (name == "ambient_right") return EndKind::AmbientRight;
  bad_input("unknown end '" + name + "'");
}

}  // namespace

Json credence_to_json(const Credence& mu) {
  Json j;
  if (mu.is_lebesgue()) {
    j["rule"] = "lebesgue";
  } else if (mu.is_point_mass()) {
    j["rule"] = "point_mass";
    j["x"] = format_rational(mu.as_point_mass().x);
    j["side"] = side_name(mu.as_point_mass().side);
  } else if (mu.is_end_mass()) {
    j["rule"] = "end_mass";
    j["end"] = end_name(mu.as_end_mass().end);
  } else if (mu.is_atom_table()) {
    j["rule"] = "atom_table";
    Json gens = Json::array(), weights = Json::array();
    for (const ElementarySet& atom : mu.as_atom_table().algebra->atoms()) gens.push_back(set_to_json(atom));
    for (const Rational& w : mu.as_atom_table().weights) weights.push_back(format_rational(w));
    j["atoms"] = gens;
    j["weights"] = weights;
  } else if (mu.is_mixture()) {
    j["rule"] = "mixture";
    Json parts = Json::array();
    for (const auto& [w, part] : mu.as_mixture().parts) {
      Json entry;
      entry["w"] = format_rational(w);
      entry["of"] = credence_to_json(part);
      parts.push_back(entry);
    }
    j["parts"] = parts;
  } else {
    j["rule"] = "image";
    j["map"] = map_to_json(*mu.as_image().map);
    j["of"] = credence_to_json(*mu.as_image().base);
  }
  j["ambient"] = ambient_to_json(mu.ambient());
  return j;
}

Credence credence_from_json(const Json& j, const std::optional<Ambient>& fallback) {
  if (!j.is_object()) bad_input("credence must be an object");
  std::string rule = require_string(j, "rule");
  Ambient ambient = resolve_ambient(j, fallback);
  if (rule == "lebesgue") return Credence::lebesgue(ambient);
  if (rule == "point_mass")
    return Credence::point_mass(ambient, parse_rational(require_string(j, "x")),
                                side_from_name(require_string(j, "side")));
  if (rule == "end_mass") return Credence::end_mass(ambient, end_from_name(require_string(j, "end")));
  if (rule == "atom_table") {
    if (!j.contains("atoms") || !j.contains("weights")) bad_input("atom table needs 'atoms' and 'weights'");
    std::vector<ElementarySet> gens;
    for (const Json& g : j["atoms"]) gens.push_back(set_from_json(g, ambient));
    auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::generate(gens, ambient));
    std::vector<Rational> weights;
    for (const Json& w : j["weights"]) weights.push_back(parse_rational(w.get<std::string>()));
    return Credence::atom_table(std::move(algebra), std::move(weights));
  }
  if (rule == "mixture") {
    if (!j.contains("parts") || !j["parts"].is_array()) bad_input("mixture needs 'parts'");
    std::vector<std::pair<Rational, Credence>> parts;
    for (const Json& entry : j["parts"]) {
      parts.emplace_back(parse_rational(require_string(entry, "w")),
                         credence_from_json(entry["of"], ambient));
    }
    return Credence::mixture(std::move(parts));
  }
  if (rule == "image") {
    MonotoneAffineMap map = map_from_json(j["map"]);
    Credence base = credence_from_json(j["of"], map.domain());
    return Credence::image(std::make_shared<MonotoneAffineMap>(std::move(map)), std::move(base));
  }
  bad_input("unknown credence rule '" + rule + "'");
}

Json map_to_json(const MonotoneAffineMap& phi) {
  Json j;
  Json xs = Json::array(), ys = Json::array();
  for (const Rational& x : phi.breakpoints()) xs.push_back(format_rational(x));
  for (const Rational& y : phi.values()) ys.push_back(format_rational(y));
  j["breakpoints"] = xs;
  j["values"] = ys;
  j["domain"] = ambient_to_json(phi.domain());
  j["codomain"] = ambient_to_json(phi.codomain());
  return j;
}

MonotoneAffineMap map_from_json(const Json& j, const std::optional<Ambient>& fallback_domain) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values") || !j.contains("codomain"))
    bad_input("map needs 'breakpoints', 'values' and 'codomain'");
  Ambient domain = j.contains("domain")
                       ? ambient_from_json(j["domain"])
                       : (fallback_domain ? *fallback_domain : Ambient::full_line());
  Ambient codomain = ambient_from_json(j["codomain"]);
  std::vector<Rational> xs, ys;
  for (const Json& x : j["breakpoints"]) xs.push_back(parse_rational(x.get<std::string>()));
  for (const Json& y : j["values"]) ys.push_back(parse_rational(y.get<std::string>()));
  return MonotoneAffineMap::make(std::move(xs), std::move(ys), domain, codomain);
}

Json decomposition_to_json(const LiminalDecomposition& dec) {
  Json j;
  j["lebesgue_weight"] = format_rational(dec.borel.lebesgue_weight);
  Json atoms = Json::array();
  for (std::size_t i = 0; i < dec.borel.atoms.size(); ++i) {
    Json atom;
    atom["x"] = format_rational(dec.borel.atoms[i].x);
    atom["mass"] = format_rational(dec.borel.atoms[i].mass);
    atom["left"] = format_rational(dec.rule.shares[i].left);
    atom["right"] = format_rational(dec.rule.shares[i].right);
    atoms.push_back(atom);
  }
  j["atoms"] = atoms;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidArgument, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

Json load_json_arg(const std::string& arg) {
  std::string trimmed = arg;
  auto first = trimmed.find_first_not_of(" \t\n");
  if (first != std::string::npos && (trimmed[first] == '{' || trimmed[first] == '[')) {
    try {
      return Json::parse(trimmed);
    } catch (const std::exception& e) {
      fail(ErrorCode::InvalidArgument, std::string("bad inline JSON: ") + e.what());
    }
  }
  return load_json_file(arg);
}

}  // namespace credal
