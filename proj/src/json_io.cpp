#include "octaboson/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "octaboson/errors.hpp"

namespace octaboson {

Json to_json(const Partition& lambda) { return Json(lambda.vector()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", std::vector<int>(e.begin(), e.begin() + static_cast<long>(p.nvars()))},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  const auto nvars = j.at("nvars").get<std::size_t>();
  if (nvars > kMaxVars) throw DomainError("laurent JSON: too many variables");
  LaurentPoly p(nvars);
  for (const auto& term : j.at("terms")) {
    const auto exp = term.at("exp").get<std::vector<int>>();
    if (exp.size() != nvars) throw DomainError("laurent JSON: exponent length differs from nvars");
    Rational c(mpz_class(term.at("num").get<std::string>()), mpz_class(term.at("den").get<std::string>()));
    c.canonicalize();
    p.add_term(make_exponent(exp), c);
  }
  return p;
}

Json to_json(const OrthogonalityTable& table) {
  Json pairs = Json::array();
  for (const auto& pair : table.pairs) {
    pairs.push_back(Json{{"lambda", to_json(pair.lambda)},
                         {"mu", to_json(pair.mu)},
                         {"value", Json{{"re", pair.value.real()}, {"im", pair.value.imag()}}},
                         {"expected", to_string(pair.expected)},
                         {"absErr", pair.abs_err}});
  }
  return Json{{"n", table.n}, {"M", table.points_per_dim}, {"pairs", std::move(pairs)}};
}

Json to_json(const ParamSet& params) {
  Json t = Json::array();
  for (const auto& tr : params.couplings()) t.push_back(to_string(tr));
  return Json{{"q", to_string(params.q())}, {"t", t}, {"profile", to_string(params.profile())}};
}

ParamSet params_from_json(const Json& j) {
  const auto t = j.at("t").get<std::vector<std::string>>();
  if (t.size() != 4) throw DomainError("params JSON needs four couplings");
  std::array<Rational, 4> couplings;
  for (std::size_t r = 0; r < 4; ++r) couplings[r] = parse_rational(t[r]);
  const Profile profile = j.contains("profile") ? parse_profile(j.at("profile").get<std::string>()) : Profile::four;
  return ParamSet(parse_rational(j.at("q").get<std::string>()), couplings, profile);
}

Json to_json(const VerificationReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json entry{{"label", c.label}, {"residual", c.residual}, {"pass", c.pass}};
    if (c.expected_failure) entry["expectedFailure"] = true;
    cases.push_back(std::move(entry));
  }
  Json out{{"relation", report.relation}, {"n", report.n},          {"maxPart", report.max_part},
           {"mode", report.mode},         {"maxResidual", report.max_residual}};
  if (report.mode == "float") out["tolerance"] = report.tolerance;
  out["pass"] = report.pass;
  out["cases"] = std::move(cases);
  return out;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "label,residual,pass,expected_failure\n";
  for (const auto& c : report.cases) {
    os << csv_field(c.label) << ',' << csv_field(c.residual) << ',' << (c.pass ? "true" : "false") << ','
       << (c.expected_failure ? "true" : "false") << '\n';
  }
  return os.str();
}

Json to_json(const HLPolynomial& hl) {
  std::vector<Partition> order;
  for (const auto& [mu, c] : hl.expansion) order.push_back(mu);
  std::stable_sort(order.begin(), order.end(),
                   [](const Partition& a, const Partition& b) { return a.degree() < b.degree(); });
  Json expansion = Json::array();
  for (const auto& mu : order) expansion.push_back(Json{{"mu", to_json(mu)}, {"coeff", to_string(hl.expansion.at(mu))}});
  return Json{{"lambda", to_json(hl.lambda)},
              {"profile", to_string(hl.params.profile())},
              {"expansion", std::move(expansion)},
              {"norm", to_string(hl.norm)}};
}

Json wave_function_json(std::span<const double> xi,
                        const std::vector<std::pair<Partition, std::complex<double>>>& values) {
  Json entries = Json::array();
  for (const auto& [lambda, v] : values) entries.push_back(Json{{"lambda", to_json(lambda)}, {"re", v.real()}, {"im", v.imag()}});
  return Json{{"xi", std::vector<double>(xi.begin(), xi.end())}, {"values", std::move(entries)}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace octaboson
