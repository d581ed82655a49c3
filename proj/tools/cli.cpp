#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "padictheta/family.hpp"
#include "padictheta/json_io.hpp"
#include "padictheta/pullback.hpp"

namespace padictheta::cli {

namespace {

struct Options {
  unsigned long p = 5;
  unsigned M = 0;
  unsigned m = 1;
  std::string sig;
  std::string kappa;
  std::string kappa_prime;
  std::string lambda;
  std::string part;
  std::string alpha;
  std::string series;
  std::string witness = "builtin";
  std::string via = "eigen";
  std::string psi;
  std::string chi_u = "0,0";
  std::string format = "json";
  std::string out;
  unsigned grid_bound = 0;
  std::uint64_t grid_cap = kDefaultGridCap;
  std::uint64_t seed = 0;
  unsigned cap = kDefaultDegreeCap;
  long k = 0;
  long nu = 0;
  unsigned n = 1;
  unsigned bound = 5;
  unsigned samples = 200;
  unsigned long d = 0;
  int level = -1;
  std::vector<std::string> terms;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

unsigned default_M(const Options& o, unsigned fallback) { return o.M ? o.M : fallback; }

std::vector<Integer> parse_alpha(const std::string& text, std::size_t expected) {
  std::vector<Integer> out;
  for (long v : parse_int_list(text)) {
    if (v < 0) throw Error("exponents must be nonnegative");
    out.emplace_back(v);
  }
  if (out.size() != expected) {
    throw Error("alpha needs " + std::to_string(expected) + " entries, one per variable");
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

ShiftedSeries load_series(const Options& o, const VarsPtr& vars, const RingCtxPtr& ctx) {
  if (o.witness == "builtin") return builtin_witness(vars, ctx, o.cap);
  return series_from_json(read_json_file(o.witness), ctx, vars);
}

Json base_config(const Options& o, const std::string& command) {
  return Json{{"command", command}};
}

Outcome cmd_lcan(const Options& o) {
  const Signature sig = parse_signature(o.sig);
  const Weight kappa = parse_weight(sig, o.kappa);
  const SymmetrizedFunctional f = lcan_expand(kappa);
  Json config = base_config(o, "lcan");
  config["sig"] = to_json(sig);
  config["kappa"] = to_json(kappa);
  Json rep{{"config", config},
           {"depth", f.depth()},
           {"symmetric", is_symmetric(kappa)},
           {"functional", to_json(f)},
           {"operator_form", to_json(f.operator_form())},
           {"column_group_order", integer_json(f.column_group_order())},
           {"primitive_form", to_json(f.primitive_form())},
           {"coefficients_are_units", f.coefficients_are_units()}};
  return {rep, f.coefficients_are_units() ? kExitOk : kExitCounterexample};
}

Outcome cmd_phi(const Options& o) {
  const Signature sig = parse_signature(o.sig);
  const Weight kappa = parse_weight(sig, o.kappa);
  const std::size_t nvars = VariableSet::for_signature(sig).size();
  Json config = base_config(o, "phi");
  config["sig"] = to_json(sig);
  config["kappa"] = to_json(kappa);
  if (!o.alpha.empty()) {
    const auto alpha = parse_alpha(o.alpha, nvars);
    config["alpha"] = parse_int_list(o.alpha);
    Json rep{{"config", config},
             {"status", "ok"},
             {"oracle", integer_json(phi_oracle(kappa, alpha))},
             {"minor", integer_json(phi_kappa_minor(kappa, alpha))}};
    return {rep, kExitOk};
  }
  const unsigned bound = o.grid_bound ? o.grid_bound : is_sum_symmetric(kappa).depth + 1;
  config["grid_bound"] = bound;
  config["grid_cap"] = o.grid_cap;
  config["seed"] = o.seed;
  const AlphaGrid grid = AlphaGrid::uniform(nvars, bound, o.grid_cap, o.seed);
  const PhiEquivalenceReport r = phi_equivalence_report(kappa, grid);
  Json rep = to_json(r);
  rep = [&] { Json r2{{"config", config}}; r2.update(rep); return r2; }();
  return {rep, r.status == "counterexample" ? kExitCounterexample : kExitOk};
}

Outcome cmd_theta_apply(const Options& o) {
  const Signature sig = parse_signature(o.sig);
  const Weight kappa = parse_weight(sig, o.kappa);
  const RingCtxPtr ctx = RingCtx::make(o.p, default_M(o, 4), sig.n());
  const auto vars = std::make_shared<const VariableSet>(VariableSet::for_signature(sig));
  Json config = base_config(o, "theta-apply");
  config["p"] = o.p;
  config["M"] = ctx->M();
  config["sig"] = to_json(sig);
  config["kappa"] = to_json(kappa);
  config["via"] = o.via;
  ShiftedSeries input(vars, ctx, o.cap);
  if (!o.alpha.empty()) {
    const auto alpha = parse_alpha(o.alpha, vars->size());
    MultiIndex a;
    for (const auto& v : alpha) a.push_back(static_cast<unsigned>(v.get_ui()));
    input.add_term(a, Integer(1));
    config["alpha"] = parse_int_list(o.alpha);
  } else if (!o.series.empty()) {
    input = series_from_json(read_json_file(o.series), ctx, vars);
    config["series"] = o.series;
  } else {
    throw Error("theta-apply needs --alpha or --series");
  }
  ShiftedSeries output = input;
  if (o.level >= 0) {
    config["level"] = o.level;
    output = theta_chi_apply(input, PAdicCharacterApprox{kappa, static_cast<unsigned>(o.level), {}, true});
  } else if (o.via == "words") {
    output = theta_kappa_apply_words(input, kappa);
  } else if (o.via == "eigen") {
    output = theta_kappa_apply(input, kappa);
  } else {
    throw Error("--via must be eigen or words");
  }
  return {Json{{"config", config}, {"status", "ok"}, {"input", to_json(input)}, {"output", to_json(output)}}, kExitOk};
}

Outcome cmd_congruence(const Options& o) {
  const Signature sig = parse_signature(o.sig);
  const Weight kappa = parse_weight(sig, o.kappa);
  const Weight kappa_prime = parse_weight(sig, o.kappa_prime);
  RingCtx::make(o.p, o.m + 1, sig.n());
  const std::size_t nvars = VariableSet::for_signature(sig).size();
  const unsigned bound = o.grid_bound ? o.grid_bound : static_cast<unsigned>(o.p * o.p);
  Json config = base_config(o, "congruence");
  config["p"] = o.p;
  config["m"] = o.m;
  config["sig"] = to_json(sig);
  config["kappa"] = to_json(kappa);
  config["kappa_prime"] = to_json(kappa_prime);
  config["grid_bound"] = bound;
  config["grid_cap"] = o.grid_cap;
  config["seed"] = o.seed;
  const AlphaGrid grid = AlphaGrid::uniform(nvars, bound, o.grid_cap, o.seed);
  const CongruenceReport r = congruence_sweep(kappa, kappa_prime, o.p, o.m, grid);
  Json rep = Json{{"config", config}};
  rep.update(to_json(r));
  return {rep, r.status == "counterexample" ? kExitCounterexample : kExitOk};
}

Json commutation_json(const CommutationReport& r) {
  return Json{{"hypotheses_met", r.hypotheses_met},
              {"label", r.hypotheses_met ? "theorem" : "hypotheses not met - informational"},
              {"commutes", r.commutes},
              {"status", r.commutes ? "ok" : "counterexample"},
              {"lhs", to_json(r.lhs, true)},
              {"rhs", to_json(r.rhs, true)},
              {"defect", to_json(r.lhs - r.rhs, true)}};
}

Outcome cmd_restrict(const Options& o, bool weyl) {
  const Signature sig = parse_signature(o.sig);
  const PartitionedSignature part = parse_partition(sig, o.part);
  const Weight lambda = parse_weight(sig, o.lambda);
  const RingCtxPtr ctx = RingCtx::make(o.p, default_M(o, 4), sig.n());
  const auto vars = std::make_shared<const VariableSet>(VariableSet::for_signature(sig));
  const ShiftedSeries s = load_series(o, vars, ctx);
  Json config = base_config(o, weyl ? "weyl-extend" : "restrict");
  config["p"] = o.p;
  config["M"] = ctx->M();
  config["sig"] = to_json(sig);
  config["part"] = to_json(part);
  config["lambda"] = to_json(lambda);
  config["witness"] = o.witness;
  Json rep{{"config", config}, {"witness_series", to_json(s)}};
  bool commutes = false;
  if (weyl) {
    const WeylReport r = extend_via_weyl(lambda, part, s);
    rep["dominant"] = to_json(r.dominant);
    Json order = Json::array();
    for (auto b : r.sigma.order) order.push_back(b + 1);
    rep["sigma"] = {{"block_order", order}, {"index_map", r.sigma.index_map}};
    rep.update(commutation_json(r.check));
    commutes = r.check.commutes;
  } else {
    const CommutationReport r = check_pure_commutation(lambda, part, s);
    rep.update(commutation_json(r));
    commutes = r.commutes;
  }
  return {rep, commutes ? kExitOk : kExitCounterexample};
}

UnitCharacter parse_unit_character(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw Error("chi_u is written j_sigma,j_sigmabar");
  return {static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1])};
}

std::vector<unsigned> parse_psi(const std::string& text, unsigned n) {
  if (text.empty()) return std::vector<unsigned>(n, 0);
  std::vector<unsigned> out;
  for (long v : parse_int_list(text)) {
    if (v < 0) throw Error("psi powers must be nonnegative");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.size() != n) throw Error("psi needs n entries");
  return out;
}

Signature square_signature(unsigned n) { return Signature({{n, n}}); }

Weight parse_square_weight(const std::string& text, unsigned n) {
  if (text.empty()) return Weight::zero(square_signature(n));
  return parse_weight(square_signature(n), text);
}

ToyCMContext make_toy(const Options& o, const RingCtxPtr& ctx) {
  return ToyCMContext::make(ctx, o.d ? std::optional<unsigned long>(o.d) : std::nullopt);
}

Json toy_json(const ToyCMContext& toy, unsigned bound) {
  return Json{{"d", toy.d()},
              {"sqrt_minus_d", toy.sqrt_minus_d().residue().get_str()},
              {"lattice", "entries in Z[sqrt(-d)] with coordinates of height <= " + std::to_string(bound)}};
}

Outcome cmd_family(const Options& o) {
  const RingCtxPtr ctx = RingCtx::make(o.p, default_M(o, 3), 2 * o.n);
  const ToyCMContext toy = make_toy(o, ctx);
  const Weight kappa = parse_square_weight(o.kappa, o.n);
  const MomentCharacter chr{o.k, o.nu, parse_psi(o.psi, o.n), parse_unit_character(o.chi_u)};
  std::optional<PartitionedSignature> part;
  if (!o.part.empty()) part = parse_partition(square_signature(o.n), o.part);
  const QExpansion q = measure_moment(chr, kappa, o.bound, toy, part);
  Json config = base_config(o, "family");
  config["p"] = o.p;
  config["M"] = ctx->M();
  config["n"] = o.n;
  config["bound"] = o.bound;
  config["part"] = part ? to_json(*part) : Json(nullptr);
  Json rep{{"config", config},
           {"status", "ok"},
           {"toy", toy_json(toy, o.bound)},
           {"char", {{"k", chr.k}, {"nu", chr.nu}, {"psi", chr.psi}, {"chi_u", {chr.chi_u.j_sigma, chr.chi_u.j_sigmabar}}}},
           {"kappa", to_json(kappa)},
           {"entries", to_json(q)}};
  return {rep, kExitOk};
}

KummerTerm parse_term(const std::string& text, unsigned n) {
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("term fields are written key=value: '" + item + "'");
    fields[item.substr(0, eq)] = item.substr(eq + 1);
  }
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = fields.find(key);
    return it == fields.end() ? fallback : it->second;
  };
  for (const auto& [key, value] : fields) {
    if (key != "k" && key != "nu" && key != "kappa" && key != "psi" && key != "chi" && key != "b") {
      throw Error("unknown term field '" + key + "'");
    }
  }
  const auto k = parse_int_list(get("k", "0"));
  const auto nu = parse_int_list(get("nu", "0"));
  const auto b = parse_int_list(get("b", "1"));
  return KummerTerm{MomentCharacter{k.at(0), nu.at(0), parse_psi(get("psi", ""), n), parse_unit_character(get("chi", "0,0"))},
                    parse_square_weight(get("kappa", ""), n), Integer(b.at(0))};
}

Outcome cmd_certify(const Options& o) {
  const RingCtxPtr ctx = RingCtx::make(o.p, default_M(o, 3), 2 * o.n);
  const ToyCMContext toy = make_toy(o, ctx);
  if (o.terms.empty()) throw Error("certify needs at least one --term");
  std::vector<KummerTerm> tests;
  Json terms = Json::array();
  for (const auto& t : o.terms) {
    tests.push_back(parse_term(t, o.n));
    const auto& kt = tests.back();
    terms.push_back({{"k", kt.chr.k},
                     {"nu", kt.chr.nu},
                     {"psi", kt.chr.psi},
                     {"chi_u", {kt.chr.chi_u.j_sigma, kt.chr.chi_u.j_sigmabar}},
                     {"kappa", to_json(kt.kappa)},
                     {"b", integer_json(kt.b)}});
  }
  std::optional<PartitionedSignature> part;
  if (!o.part.empty()) part = parse_partition(square_signature(o.n), o.part);
  const auto sample = random_sample(toy, o.n, o.samples, o.seed);
  const KummerReport r = kummer_certify(tests, o.m, sample, toy, o.bound, part);
  Json config = base_config(o, "certify");
  config["p"] = o.p;
  config["M"] = ctx->M();
  config["m"] = o.m;
  config["n"] = o.n;
  config["bound"] = o.bound;
  config["samples"] = o.samples;
  config["seed"] = o.seed;
  config["part"] = part ? to_json(*part) : Json(nullptr);
  config["terms"] = terms;
  Json rep{{"config", config}, {"toy", toy_json(toy, o.bound)}};
  rep.update(to_json(r));
  return {rep, r.status == "counterexample" ? kExitCounterexample : kExitOk};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", os);
  } else {
    os << csv_field(path) << ',' << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render(const Json& report, const std::string& format, const std::string& command) {
  std::ostringstream os;
  if (format == "json") {
    os << report.dump(2) << '\n';
  } else if (command == "family") {
    os << "alpha,coeff\n";
    for (const auto& e : report.at("entries")) os << csv_field(e.at("alpha").dump()) << ',' << e.at("coeff").at("residue").get<std::string>() << '\n';
  } else if (command == "lcan") {
    os << "tuple,coeff\n";
    for (const auto& t : report.at("functional").at("terms")) os << csv_field(t.at("tuple").dump()) << ',' << t.at("coeff").dump() << '\n';
  } else {
    os << "key,value\n";
    flatten(report, "", os);
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic theta operators on Serre-Tate expansions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write the report to this file instead of standard output");
  };
  auto ring = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Prime p");
    sub->add_option("--M", o.M, "Working precision exponent");
  };

  auto* lcan = app.add_subcommand("lcan", "Expand the canonical functional of a weight");
  lcan->add_option("--sig", o.sig, "Signature, places separated by ';'")->required();
  lcan->add_option("--kappa", o.kappa, "Weight entries, places separated by ';'")->required();
  common(lcan);

  auto* phi = app.add_subcommand("phi", "Compare the eigenvalue polynomial with the minor formula");
  phi->add_option("--sig", o.sig, "Signature")->required();
  phi->add_option("--kappa", o.kappa, "Weight")->required();
  phi->add_option("--alpha", o.alpha, "Evaluate at one exponent vector");
  phi->add_option("--grid-bound", o.grid_bound, "Grid [0, B) per variable; default depth + 1");
  phi->add_option("--grid-cap", o.grid_cap, "Subsample larger grids to this many points");
  phi->add_option("--seed", o.seed, "Subsampling seed");
  common(phi);

  auto* theta = app.add_subcommand("theta-apply", "Apply theta^kappa to a series");
  ring(theta);
  theta->add_option("--sig", o.sig, "Signature")->required();
  theta->add_option("--kappa", o.kappa, "Weight")->required();
  theta->add_option("--alpha", o.alpha, "Single term (1+t)^alpha");
  theta->add_option("--series", o.series, "Series JSON file");
  theta->add_option("--via", o.via, "eigen or words")->check(CLI::IsMember({"eigen", "words"}));
  theta->add_option("--level", o.level, "Apply the character of level m modulo p^(m+1)");
  theta->add_option("--cap", o.cap, "Degree cap");
  common(theta);

  auto* cong = app.add_subcommand("congruence", "Check theta^kappa = theta^kappa' mod p^(m+1)");
  cong->add_option("--p", o.p, "Prime p");
  cong->add_option("--m", o.m, "Congruence level m");
  cong->add_option("--sig", o.sig, "Signature")->required();
  cong->add_option("--kappa", o.kappa, "First weight")->required();
  cong->add_option("--kappa-prime", o.kappa_prime, "Second weight")->required();
  cong->add_option("--grid-bound", o.grid_bound, "Grid [0, B) per variable; default p^2");
  cong->add_option("--grid-cap", o.grid_cap, "Subsample larger grids to this many points");
  cong->add_option("--seed", o.seed, "Subsampling seed");
  common(cong);

  CLI::App* restricts[2];
  const char* names[2] = {"restrict", "weyl-extend"};
  const char* helps[2] = {"Check res o theta = theta' o res", "Check the Weyl-conjugated restriction identity"};
  for (int w = 0; w < 2; ++w) {
    auto* sub = app.add_subcommand(names[w], helps[w]);
    ring(sub);
    sub->add_option("--sig", o.sig, "Ambient signature")->required();
    sub->add_option("--part", o.part, "Partition, parts separated by '/'")->required();
    sub->add_option("--lambda", o.lambda, "Weight on the ambient signature")->required();
    sub->add_option("--witness", o.witness, "builtin or a series JSON file");
    sub->add_option("--cap", o.cap, "Degree cap");
    common(sub);
    restricts[w] = sub;
  }

  auto* family = app.add_subcommand("family", "Moment table of the toy Eisenstein family");
  ring(family);
  family->add_option("--n", o.n, "Size of the Hermitian exponents (1 or 2)");
  family->add_option("--k", o.k, "Scalar weight k >= n")->required();
  family->add_option("--nu", o.nu, "Twist nu");
  family->add_option("--kappa", o.kappa, "Symmetric weight on (n, n)");
  family->add_option("--psi", o.psi, "Teichmueller powers of psi");
  family->add_option("--chi-u", o.chi_u, "Teichmueller powers j_sigma,j_sigmabar of chi_u");
  family->add_option("--bound", o.bound, "Height cap");
  family->add_option("--part", o.part, "Restrict along this partition of (n, n)");
  family->add_option("--d", o.d, "Use K = Q(sqrt(-d))");
  common(family);

  auto* certify = app.add_subcommand("certify", "Kummer congruence certification of moments");
  ring(certify);
  certify->add_option("--m", o.m, "Congruence modulus exponent");
  certify->add_option("--n", o.n, "Size of the Hermitian exponents (1 or 2)");
  certify->add_option("--bound", o.bound, "Height cap");
  certify->add_option("--samples", o.samples, "Character-side sample points");
  certify->add_option("--seed", o.seed, "Sampling seed");
  certify->add_option("--part", o.part, "Restrict along this partition of (n, n)");
  certify->add_option("--d", o.d, "Use K = Q(sqrt(-d))");
  certify->add_option("--term", o.terms, "k=..;nu=..;kappa=..;psi=..;chi=..;b=..")->required();
  common(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome result;
    std::string command;
    if (*lcan) {
      command = "lcan";
      result = cmd_lcan(o);
    } else if (*phi) {
      command = "phi";
      result = cmd_phi(o);
    } else if (*theta) {
      command = "theta-apply";
      result = cmd_theta_apply(o);
    } else if (*cong) {
      command = "congruence";
      result = cmd_congruence(o);
    } else if (*restricts[0]) {
      command = "restrict";
      result = cmd_restrict(o, false);
    } else if (*restricts[1]) {
      command = "weyl-extend";
      result = cmd_restrict(o, true);
    } else if (*family) {
      command = "family";
      result = cmd_family(o);
    } else {
      command = "certify";
      result = cmd_certify(o);
    }
    const std::string text = render(result.report, o.format, command);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw Error("cannot write " + o.out);
      f << text;
    }
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace padictheta::cli
