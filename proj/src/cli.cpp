#include "duadic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "duadic/error.hpp"
#include "duadic/report.hpp"

namespace duadic::cli {

namespace {

struct Params {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::string lambda;
  std::int64_t t = 1;
  std::optional<std::int64_t> code_t;
  std::string P;
  std::optional<std::string> sP;
  std::optional<std::int64_t> s;
  std::string kind = "TypeII";
  std::string file;
  bool distance = false;
};

std::vector<std::uint64_t> parse_residues(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') throw Error(ErrorKind::Usage, "bad residue '" + token + "'");
    out.push_back(v);
  }
  return out;
}

SettingPtr setting_from(const Params& p) {
  auto field = make_field_of_order(p.q);
  return CodeSetting::make(field, p.n, field->parse(p.lambda));
}

// Least unit mod nr congruent to u mod r.
std::int64_t unit_lift(const CodeSetting& st, std::uint64_t u) {
  for (std::uint64_t x = u % st.r(); x < st.nr(); x += st.r()) {
    if (std::gcd(x, st.nr()) == 1) return static_cast<std::int64_t>(x);
  }
  throw Error(ErrorKind::NonUnit, "no unit in the residue class " + std::to_string(u) + " mod r");
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_exists(const Params& p, std::ostream& out) {
  auto st = setting_from(p);
  const auto v = exists_type2(st);
  print(out, verdict_json(*st, v));
  return v.exists ? kOk : kFalse;
}

int cmd_split(const Params& p, std::ostream& out) {
  auto st = setting_from(p);
  const auto v = exists_type2(st);
  if (!v.exists) {
    print(out, verdict_json(*st, v));
    return kFalse;
  }
  const auto sp = construct_type2(st, p.t);
  const auto report = verify_splitting(sp);
  print(out, certificate(sp, report));
  return report.ok() ? kOk : kFalse;
}

int cmd_verify(const Params& p, std::istream& in, std::ostream& out) {
  json cert;
  if (p.q != 0) {
    if (!p.s) throw Error(ErrorKind::Usage, "--s is required when the certificate is given by flags");
    auto st = setting_from(p);
    cert = {{"q", p.q}, {"n", p.n}, {"lambda", element_json(st->field(), st->lambda())}, {"t", p.t}, {"s", *p.s},
            {"kind", p.kind}, {"P", parse_residues(p.P)}};
    if (p.sP) {
      cert["sP"] = parse_residues(*p.sP);
    } else {
      std::vector<std::uint64_t> image;
      for (const auto x : parse_residues(p.P)) image.push_back(mul_mod(x % st->nr(), reduce(*p.s, st->nr()), st->nr()));
      std::sort(image.begin(), image.end());
      cert["sP"] = image;
    }
  } else if (!p.file.empty()) {
    std::ifstream f(p.file);
    if (!f) throw Error(ErrorKind::Usage, "cannot open " + p.file);
    cert = json::parse(f);
  } else {
    cert = json::parse(in);
  }
  const auto checked = verify_certificate(cert);
  print(out, checked.recomputed);
  return checked.report.ok() ? kOk : kFalse;
}

ConstaCode code_from(const Params& p) {
  auto st = setting_from(p);
  return code_from_check_set(IndexSet::make(st, p.t, parse_residues(p.P)));
}

std::optional<Distance> distance_if(const Params& p, const ConstaCode& c) {
  if (!p.distance) return std::nullopt;
  return min_distance(c);
}

int cmd_code(const Params& p, std::ostream& out) {
  const auto c = code_from(p);
  print(out, code_report(c, distance_if(p, c)));
  return kOk;
}

int cmd_dual(const Params& p, std::ostream& out) {
  const auto d = dual(code_from(p));
  print(out, code_report(d, distance_if(p, d)));
  return kOk;
}

int cmd_iso(const Params& p, std::ostream& out) {
  auto st = setting_from(p);
  const auto elems = parse_residues(p.P);
  std::int64_t u = 1;
  if (p.code_t) {
    u = *p.code_t;
  } else if (!elems.empty()) {
    u = unit_lift(*st, elems.front());
  }
  const auto code = code_from_check_set(IndexSet::make(st, u, elems));
  const bool iso = is_iso_orthogonal(code, p.t);
  json j = code_report(code);
  j["iso_t"] = reduce(p.t, st->nr());
  j["iso_orthogonal"] = iso;
  print(out, j);
  return iso ? kOk : kFalse;
}

int cmd_mds(const Params& p, std::ostream& out) {
  const auto j = mds_report(p.q, p.lambda.empty() ? std::nullopt : std::optional<std::string>(p.lambda));
  print(out, j);
  return j.at("mds").get<bool>() ? kOk : kFalse;
}

int cmd_atlas(const Params& p, std::ostream& out) {
  for (std::uint64_t q = 2; q <= p.q; ++q) {
    if (!prime_power(q)) continue;
    auto field = make_field_of_order(q);
    for (std::uint64_t n = 1; n <= p.n; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (const Elem lambda : field->elements()) {
        if (lambda == 0) continue;
        auto st = CodeSetting::make(field, n, lambda);
        out << verdict_json(*st, exists_type2(st), false).dump() << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duadic constacyclic codes over finite fields", "duadic"};
  app.require_subcommand(1);
  Params p;

  auto setting_opts = [&p](CLI::App* sub, bool lambda_required = true) {
    sub->add_option("--q", p.q, "field order (prime power)")->required();
    sub->add_option("--n", p.n, "code length, coprime to q")->required();
    auto* l = sub->add_option("--lambda", p.lambda, "integer for prime fields, else \"c0 c1 ...\"");
    if (lambda_required) l->required();
  };

  auto* exists = app.add_subcommand("exists", "decide whether a Type-II splitting exists");
  setting_opts(exists);

  auto* split = app.add_subcommand("split", "construct and certify a Type-II splitting");
  setting_opts(split);
  split->add_option("--t", p.t, "split P_{n,lambda^t}");

  auto* verify = app.add_subcommand("verify", "re-check a splitting certificate");
  verify->add_option("--file", p.file, "certificate file (default: standard input)");
  verify->add_option("--q", p.q, "field order");
  verify->add_option("--n", p.n, "code length");
  verify->add_option("--lambda", p.lambda, "lambda");
  verify->add_option("--t", p.t, "algebra exponent");
  verify->add_option("--s", p.s, "multiplier");
  verify->add_option("--P", p.P, "comma-separated residues");
  verify->add_option("--sP", p.sP, "comma-separated residues (default s*P)");
  verify->add_option("--kind", p.kind, "TypeI or TypeII");

  auto* code = app.add_subcommand("code", "report the code with check set P");
  setting_opts(code);
  code->add_option("--t", p.t, "algebra exponent");
  code->add_option("--P", p.P, "comma-separated check set")->required();
  code->add_flag("--distance", p.distance, "compute the exact minimum distance");

  auto* dual_cmd = app.add_subcommand("dual", "report the Euclidean dual of the code with check set P");
  setting_opts(dual_cmd);
  dual_cmd->add_option("--t", p.t, "algebra exponent");
  dual_cmd->add_option("--P", p.P, "comma-separated check set")->required();
  dual_cmd->add_flag("--distance", p.distance, "compute the exact minimum distance");

  auto* iso = app.add_subcommand("iso", "test whether phi_t(C_P) lies in the dual of C_P");
  setting_opts(iso);
  iso->add_option("--t", p.t, "isometry exponent")->required();
  iso->add_option("--P", p.P, "comma-separated check set")->required();
  iso->add_option("--code-t", p.code_t, "algebra of the code (default: inferred from P)");

  auto* mds = app.add_subcommand("mds", "the length q+1 MDS construction");
  mds->add_option("--q", p.q, "field order with 4 | q-1")->required();
  mds->add_option("--lambda", p.lambda, "lambda of order 2^{nu2(q-1)} (default: least such)");

  auto* atlas = app.add_subcommand("atlas", "existence verdicts for all q <= Q, n <= N and every lambda");
  atlas->add_option("--q", p.q, "largest field order")->required();
  atlas->add_option("--n", p.n, "largest length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::ostringstream buffer;
    int code_out = kUsage;
    if (exists->parsed()) code_out = cmd_exists(p, buffer);
    if (split->parsed()) code_out = cmd_split(p, buffer);
    if (verify->parsed()) code_out = cmd_verify(p, in, buffer);
    if (code->parsed()) code_out = cmd_code(p, buffer);
    if (dual_cmd->parsed()) code_out = cmd_dual(p, buffer);
    if (iso->parsed()) code_out = cmd_iso(p, buffer);
    if (mds->parsed()) code_out = cmd_mds(p, buffer);
    if (atlas->parsed()) code_out = cmd_atlas(p, buffer);
    out << buffer.str();
    return code_out;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: malformed certificate: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace duadic::cli
