#include "duadic/report.hpp"

#include <numeric>

#include "duadic/error.hpp"

namespace duadic {

json element_json(const FieldSpec& field, Elem a) {
  if (field.is_prime_field()) return a;
  return field.format(a);
}

Elem element_from_json(const FieldSpec& field, const json& j) {
  if (j.is_number_integer()) {
    if (!field.is_prime_field()) throw Error(ErrorKind::Usage, "elements of non-prime fields are coordinate strings");
    return field.from_int(j.get<std::int64_t>());
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw Error(ErrorKind::Usage, "field element must be an integer or a coordinate string");
}

namespace {

json setting_fields(const CodeSetting& st) {
  return {{"q", st.q()}, {"n", st.n()}, {"r", st.r()}, {"lambda", element_json(st.field(), st.lambda())}};
}

json distance_json(const Distance& d) {
  if (d.infinite) return "infinite";
  return d.value;
}

std::vector<std::uint64_t> read_residues(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::Usage, std::string("certificate lacks \"") + key + "\"");
  const auto& a = j.at(key);
  if (!a.is_array()) throw Error(ErrorKind::Usage, std::string("\"") + key + "\" must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : a) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) {
      throw Error(ErrorKind::Usage, std::string("\"") + key + "\" holds a non-residue");
    }
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

std::int64_t read_int(const json& j, const char* key, std::optional<std::int64_t> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw Error(ErrorKind::Usage, std::string("certificate lacks \"") + key + "\"");
  }
  if (!j.at(key).is_number_integer()) throw Error(ErrorKind::Usage, std::string("\"") + key + "\" must be an integer");
  return j.at(key).get<std::int64_t>();
}

}  // namespace

json code_report(const ConstaCode& code, const std::optional<Distance>& distance) {
  json j = setting_fields(code.setting());
  j["t"] = code.t();
  j["check_set"] = code.check.elems;
  j["generator_poly"] = code.generator.to_string();
  j["check_poly"] = code.check_poly.to_string();
  j["dimension"] = code.dimension();
  if (distance) j["min_distance"] = distance_json(*distance);
  return j;
}

json certificate(const Splitting& sp, const VerificationReport& report) {
  json j = setting_fields(*sp.setting);
  j["t"] = sp.t;
  j["s"] = sp.s;
  j["kind"] = std::string(to_string(sp.kind));
  j["P"] = sp.P.elems;
  j["sP"] = sp.sP.elems;
  j["P0"] = p0_set(sp.setting, static_cast<std::int64_t>(sp.t)).elems;
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  return j;
}

json verdict_json(const CodeSetting& setting, const ExistenceVerdict& verdict, bool with_witness) {
  json j = setting_fields(setting);
  j["exists"] = verdict.exists;
  j["reason"] = std::string(to_string(verdict.reason));
  j["type1"] = exists_type1(setting);
  j["n_r"] = setting.n_r();
  j["n_r_prime"] = setting.n_r_prime();
  if (with_witness) {
    j["witness"] = verdict.witness ? certificate(*verdict.witness, verify_splitting(*verdict.witness)) : json(nullptr);
  }
  return j;
}

CertificateCheck verify_certificate(const json& cert) {
  if (!cert.is_object()) throw Error(ErrorKind::Usage, "certificate must be a JSON object");
  const auto q = read_int(cert, "q");
  const auto n = read_int(cert, "n");
  if (q < 2 || n < 1) throw Error(ErrorKind::Usage, "certificate has invalid q or n");
  auto field = make_field_of_order(static_cast<std::uint64_t>(q));
  if (!cert.contains("lambda")) throw Error(ErrorKind::Usage, "certificate lacks \"lambda\"");
  const Elem lambda = element_from_json(*field, cert.at("lambda"));
  auto setting = CodeSetting::make(field, static_cast<std::uint64_t>(n), lambda);
  const auto t = read_int(cert, "t", 1);
  const auto s = read_int(cert, "s");
  if (!cert.contains("kind") || !cert.at("kind").is_string()) throw Error(ErrorKind::Usage, "certificate lacks \"kind\"");
  const auto kind = parse_splitting_kind(cert.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorKind::Usage, "kind must be TypeI or TypeII");
  auto P = read_residues(cert, "P");
  auto sP = read_residues(cert, "sP");

  VerificationReport head;
  if (cert.contains("r")) head.checks.push_back({"r-matches", read_int(cert, "r") == static_cast<std::int64_t>(setting->r())});
  const bool t_unit = std::gcd(reduce(t, setting->nr()), setting->nr()) == 1;
  if (cert.contains("P0") && t_unit) {
    head.checks.push_back({"P0-matches", read_residues(cert, "P0") == p0_set(setting, t).elems});
  }
  auto body = verify_splitting_data(setting, t, s, *kind, P, sP);
  head.checks.insert(head.checks.end(), body.checks.begin(), body.checks.end());

  json j = setting_fields(*setting);
  j["t"] = reduce(t, setting->nr());
  j["s"] = reduce(s, setting->nr());
  j["kind"] = std::string(to_string(*kind));
  j["P"] = P;
  j["sP"] = sP;
  j["P0"] = t_unit ? json(p0_set(setting, t).elems) : json(nullptr);
  json checks = json::array();
  for (const auto& c : head.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  j["valid"] = head.ok();
  return {setting, head, j};
}

json mds_report(std::uint64_t q, const std::optional<std::string>& lambda_text) {
  const auto plan = grs_plan(q);
  auto field = make_field_of_order(q);
  const Elem lambda = lambda_text ? field->parse(*lambda_text) : canonical_lambda(*field, plan.r);
  const auto pair = grs_code_pair(plan, field, lambda);
  const std::size_t k = pair.first.dimension();
  const std::uint64_t d_expected = (q + 5) / 2;

  bool exact = true;
  std::uint64_t messages = 1;
  for (std::size_t i = 0; i < k && exact; ++i) {
    messages *= q;
    exact = messages <= kMaxMessages;
  }
  json codes = json::array();
  std::uint64_t d = 0;
  for (const auto* code : {&pair.first, &pair.second}) {
    const Distance dist = exact ? min_distance(*code) : bch_bound(*code);
    codes.push_back(code_report(*code, exact ? std::optional<Distance>(dist) : std::nullopt));
    d = d == 0 ? dist.value : std::min(d, dist.value);
  }
  json j = setting_fields(pair.first.setting());
  j["s"] = plan.s;
  j["z"] = plan.z;
  j["codes"] = codes;
  j["d_expected"] = d_expected;
  // Singleton caps d at n - k + 1, so a lower bound reaching it settles the question.
  j["mds"] = d == pair.first.n() - k + 1;
  if (exact) {
    j["d_found"] = d;
  } else {
    j["d_lower_bound"] = d;
    j["distance"] = "unverified";
  }
  j["splitting_verified"] = verify_splitting(pair.splitting).ok();
  j["grs_oracle"] = grs_oracle_check(plan, pair.first.setting());
  return j;
}

}  // namespace duadic
