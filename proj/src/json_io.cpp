#include "sinecone/json_io.hpp"

#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::ParseError, std::string("field '") + what + "' must be an integer or a \"p/q\" string");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json quad_to_json(const QuadReal& x) {
  return Json{{"a", rational_string(x.a())}, {"b", rational_string(x.b())}, {"s", x.s().get_str()}};
}

QuadReal quad_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return QuadReal(rational_from_json(j, "value"));
  if (!j.is_object()) fail(ErrorKind::ParseError, "quadratic number must be an integer, string or object");
  Rational a = rational_from_json(require(j, "a"), "a");
  Rational b = j.contains("b") ? rational_from_json(j.at("b"), "b") : Rational(0);
  Rational s = j.contains("s") ? rational_from_json(j.at("s"), "s") : Rational(1);
  if (s.get_den() != 1 || s < 0) fail(ErrorKind::ParseError, "radicand 's' must be a nonnegative integer");
  return make_quad(a, b, s);
}

QuadReal parse_quad(std::string_view text) {
  std::string t(text);
  auto first = t.find_first_not_of(" \t");
  if (first != std::string::npos && t[first] == '{') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, std::string("invalid JSON number: ") + e.what());
    }
    return quad_from_json(j);
  }
  return QuadReal(parse_rational(t));
}

Json spectrum_to_json(const Spectrum& s, bool with_origins) {
  Json lines = Json::array();
  for (const auto& line : s.lines) {
    Json l{{"value", quad_to_json(line.value)}, {"mult", line.multiplicity}};
    if (with_origins && !line.origins.empty()) {
      Json os = Json::array();
      for (const auto& o : line.origins) {
        os.push_back(Json{{"block", block_name(o.block)}, {"i", o.i}, {"j", o.j}, {"mult", o.mult}});
      }
      l["origins"] = std::move(os);
    }
    lines.push_back(std::move(l));
  }
  return lines;
}

Spectrum spectrum_from_json(const Json& lines, const QuadReal& cutoff) {
  if (!lines.is_array()) fail(ErrorKind::ParseError, "spectrum must be an array of lines");
  std::vector<RawLine> raw;
  int idx = 0;
  for (const auto& l : lines) {
    QuadReal v = quad_from_json(require(l, "value"));
    const Json& m = require(l, "mult");
    if (!m.is_number_integer() || m.get<long long>() <= 0) {
      fail(ErrorKind::InvariantViolation, "multiplicity must be a positive integer");
    }
    if (v > cutoff) {
      fail(ErrorKind::InvariantViolation, "line " + v.str() + " exceeds the declared cutoff " + cutoff.str());
    }
    Mult mult = m.get<long long>();
    if (l.contains("origins")) {
      Mult total = 0;
      for (const auto& o : l.at("origins")) {
        auto blk = block_from_name(require(o, "block").get<std::string>());
        if (!blk) fail(ErrorKind::ParseError, "unknown origin block");
        Origin org{*blk, require(o, "i").get<int>(), require(o, "j").get<int>(), require(o, "mult").get<Mult>()};
        raw.push_back({v, org.mult, org});
        total += org.mult;
      }
      if (total != mult) fail(ErrorKind::InvariantViolation, "origin multiplicities do not add up");
    } else {
      raw.push_back({v, mult, Origin{Block::Input, idx, 0, mult}});
    }
    ++idx;
  }
  return merge(std::move(raw), cutoff);
}

Json geometric_to_json(const GeometricSpectrum& gs) {
  Json j;
  j["n"] = gs.n;
  j["normalized"] = gs.normalized;
  if (gs.override_hypotheses) j["override"] = true;
  j["cutoff"] = quad_to_json(gs.spec0.cutoff);
  Json cutoffs = Json::object();
  j["spec0"] = spectrum_to_json(gs.spec0);
  if (gs.spec1D) {
    j["spec1D"] = spectrum_to_json(*gs.spec1D);
    cutoffs["spec1D"] = quad_to_json(gs.spec1D->cutoff);
  }
  if (gs.specE_TT) {
    j["specE_TT"] = spectrum_to_json(*gs.specE_TT);
    cutoffs["specE_TT"] = quad_to_json(gs.specE_TT->cutoff);
  }
  if (!cutoffs.empty()) j["cutoffs"] = std::move(cutoffs);
  return j;
}

GeometricSpectrum geometric_from_json(const Json& j) {
  try {
    GeometricSpectrum gs;
    const Json& n = require(j, "n");
    if (!n.is_number_integer()) fail(ErrorKind::ParseError, "'n' must be an integer");
    gs.n = n.get<int>();
    gs.normalized = j.value("normalized", true);
    gs.override_hypotheses = j.value("override", false);
    QuadReal cutoff = quad_from_json(require(j, "cutoff"));
    auto cutoff_for = [&](const char* key) {
      if (j.contains("cutoffs") && j.at("cutoffs").contains(key)) return quad_from_json(j.at("cutoffs").at(key));
      return cutoff;
    };
    gs.spec0 = spectrum_from_json(require(j, "spec0"), cutoff_for("spec0"));
    if (j.contains("spec1D")) gs.spec1D = spectrum_from_json(j.at("spec1D"), cutoff_for("spec1D"));
    if (j.contains("specE_TT")) gs.specE_TT = spectrum_from_json(j.at("specE_TT"), cutoff_for("specE_TT"));
    return gs;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed spectrum file: ") + e.what());
  }
}

}  // namespace sinecone
