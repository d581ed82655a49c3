#include "padictheta/json_io.hpp"

#include <sstream>

namespace padictheta {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error("expected an integer");
}

Json to_json(const PAdicInt& a) {
  return Json{{"residue", a.residue().get_str()}, {"p", a.ctx()->p()}, {"M", a.ctx()->M()}};
}

Json to_json(const Signature& sig) {
  Json out = Json::array();
  for (const auto& pl : sig.places()) out.push_back({pl.plus, pl.minus});
  return out;
}

Json to_json(const Weight& kappa) {
  Json out = Json::array();
  for (const auto& row : kappa.entries()) out.push_back(row);
  return out;
}

Json to_json(const PartitionedSignature& part) {
  Json out = Json::array();
  for (const auto& s : part.parts()) out.push_back(to_json(s));
  return out;
}

Json to_json(const VarLabel& l, bool with_block) {
  if (with_block) return {l.block, l.place, l.i, l.j};
  return {l.place, l.i, l.j};
}

Json to_json(const std::map<LabelTuple, Integer>& form) {
  Json terms = Json::array();
  for (const auto& [tuple, c] : form) {
    Json t = Json::array();
    for (const auto& l : tuple) t.push_back(to_json(l));
    terms.push_back({{"tuple", t}, {"coeff", integer_json(c)}});
  }
  return terms;
}

Json to_json(const SymmetrizedFunctional& f) {
  return Json{{"depth", f.depth()}, {"terms", to_json(f.terms())}};
}

Json to_json(const ShiftedSeries& s, bool partitioned) {
  Json vars = Json::array();
  for (const auto& l : s.vars()->labels()) vars.push_back(to_json(l, partitioned));
  Json terms = Json::array();
  for (const auto& [alpha, c] : s.terms()) terms.push_back({{"alpha", alpha}, {"coeff", to_json(c)}});
  return Json{{"basis", "shifted"},
              {"space", partitioned ? "partitioned" : "ambient"},
              {"p", s.ctx()->p()},
              {"M", s.ctx()->M()},
              {"cap", s.cap()},
              {"truncated", s.truncated()},
              {"vars", vars},
              {"terms", terms}};
}

namespace {

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

std::string ratio_string(const Rational& r) { return r.get_str(); }

}  // namespace

Json to_json(const PhiEquivalenceReport& r) {
  Json out{{"status", r.status},
           {"grid_size", r.grid_size},
           {"nonzero_points", r.nonzero_points},
           {"ratio", r.ratio ? Json(ratio_string(*r.ratio)) : Json(nullptr)},
           {"minor_formula_factorials", integer_json(r.factorials)}};
  if (r.witness) {
    out["witness"] = {{"alpha", integers_json(*r.witness)},
                      {"oracle", integer_json(r.oracle_value)},
                      {"minor", integer_json(r.minor_value)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const CongruenceReport& r) {
  Json out{{"status", r.status},
           {"hypotheses_met", r.hypotheses_met},
           {"label", r.hypotheses_met ? "theorem" : "hypotheses not met - informational"},
           {"p", r.p},
           {"m", r.m},
           {"modulus", integer_json(RingCtx::make(r.p, r.m + 1)->modulus())},
           {"grid_size", r.grid_size},
           {"subsampled", r.subsampled}};
  if (r.witness) {
    out["witness"] = {{"alpha", integers_json(*r.witness)},
                      {"phi", integer_json(r.value)},
                      {"phi_prime", integer_json(r.value_prime)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const HermitianExponent& h) {
  Json out = Json::array();
  for (const auto& row : h.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back({integer_json(e.x), integer_json(e.y)});
    out.push_back(r);
  }
  return out;
}

Json to_json(const QExpansion& q) {
  Json entries = Json::array();
  for (const auto& [alpha, c] : q.coeffs) entries.push_back({{"alpha", to_json(alpha)}, {"coeff", to_json(c)}});
  return entries;
}

Json to_json(const KummerReport& r) {
  Json out{{"status", r.status}, {"m", r.m}, {"samples", r.samples}, {"coefficients", r.coefficients}};
  if (r.premise_witness) {
    out["witness"] = {{"sample_index", *r.premise_witness}, {"combination", integer_json(r.combination)}};
  } else if (r.witness) {
    out["witness"] = {{"alpha", to_json(*r.witness)}, {"combination", integer_json(r.combination)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Signature signature_from_json(const Json& j) {
  std::vector<PlaceSignature> places;
  for (const auto& pl : j) places.push_back({pl.at(0).get<unsigned>(), pl.at(1).get<unsigned>()});
  return Signature(std::move(places));
}

Weight weight_from_json(const Signature& sig, const Json& j) {
  return Weight(sig, j.get<std::vector<std::vector<long>>>());
}

ShiftedSeries series_from_json(const Json& j, const RingCtxPtr& ctx, const VarsPtr& vars) {
  if (j.value("basis", "shifted") != "shifted") throw Error("only shifted-basis series are accepted");
  if (j.contains("vars")) {
    const auto& given = j.at("vars");
    if (given.size() != vars->size()) throw Error("series variables do not match the signature");
    for (std::size_t k = 0; k < vars->size(); ++k) {
      const auto& l = vars->at(k);
      const bool with_block = given[k].size() == 4;
      if (given[k] != to_json(l, with_block)) throw Error("series variables do not match the signature");
    }
  }
  ShiftedSeries s(vars, ctx, j.value("cap", kDefaultDegreeCap));
  for (const auto& t : j.at("terms")) {
    const auto alpha = t.at("alpha").get<MultiIndex>();
    const auto& c = t.at("coeff");
    s.add_term(alpha, c.is_object() ? Integer(c.at("residue").get<std::string>()) : integer_from_json(c));
  }
  return s;
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw Error("malformed integer list '" + text + "'");
    }
    if (used != item.size()) throw Error("malformed integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

Signature parse_signature(const std::string& text) {
  std::vector<PlaceSignature> places;
  for (const auto& item : split(text, ';')) {
    const auto v = parse_int_list(item);
    if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw Error("a place signature is written a+,a-");
    places.push_back({static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1])});
  }
  return Signature(std::move(places));
}

Weight parse_weight(const Signature& sig, const std::string& text) {
  std::vector<std::vector<long>> entries;
  for (const auto& item : split(text, ';')) entries.push_back(parse_int_list(item));
  return Weight(sig, std::move(entries));
}

PartitionedSignature parse_partition(const Signature& sig, const std::string& text) {
  std::vector<Signature> parts;
  for (const auto& item : split(text, '/')) parts.push_back(parse_signature(item));
  return PartitionedSignature(sig, std::move(parts));
}

}  // namespace padictheta
