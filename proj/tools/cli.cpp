#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsplit/constructor.hpp"
#include "tsplit/errors.hpp"
#include "tsplit/hypersurface_io.hpp"
#include "tsplit/kernel.hpp"

namespace tsplit::cli {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_on(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string balanced_word(bool b) { return b ? "balanced" : "not balanced"; }

std::string text_splitting(const std::vector<int>& parts) { return SplittingType(parts).to_string(); }

template <class K>
std::vector<std::string> row_forms(const GradedSheafMap<K>& m) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.entry(0, j).to_string());
  return out;
}

}  // namespace

std::string ComputeReport::to_text() const {
  std::string out;
  out += "params: d=" + std::to_string(d) + " e=" + std::to_string(e) + " n=" + std::to_string(n) + " field=" + field + "\n";
  for (const auto& line : F) out += "F: " + line + "\n";
  out += "psi: " + join(psi, ", ") + "\n";
  out += "delta: " + join(delta, ", ") + "\n";
  out += "T_splitting: " + text_splitting(T_splitting) + "\n";
  out += "N_splitting: " + text_splitting(N_splitting) + "\n";
  out += "balanced: T=" + balanced_word(T_balanced) + ", N=" + balanced_word(N_balanced) + "\n";
  out += "interpolation: " + std::to_string(interpolation) + "\n";
  out += "expected: " + std::to_string(expected) + "\n";
  out += "provenance: " + verdict + " " + (verdict == "ExactSplitting" ? SplittingType(predicted).to_json() : "-") + " " +
         tag + "\n";
  std::vector<std::string> certs;
  for (const auto& [k, v] : certificates) certs.push_back(k + "=" + yes_no(v));
  out += "certificates: " + join(certs, " ") + "\n";
  return out;
}

ComputeReport ComputeReport::from_text(const std::string& text) {
  ComputeReport r;
  for (const auto& line : split_lines(text)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("bad report line '" + line + "'");
    std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "params") {
      std::istringstream in(value);
      std::string tok;
      while (in >> tok) {
        auto eq = tok.find('=');
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "d") r.d = std::stoi(v);
        else if (k == "e") r.e = std::stoi(v);
        else if (k == "n") r.n = std::stoi(v);
        else if (k == "field") r.field = v;
      }
    } else if (key == "F") {
      r.F.push_back(value);
    } else if (key == "psi") {
      r.psi = split_on(value, ", ");
    } else if (key == "delta") {
      r.delta = split_on(value, ", ");
    } else if (key == "T_splitting") {
      r.T_splitting = SplittingType::parse(value).parts();
    } else if (key == "N_splitting") {
      r.N_splitting = SplittingType::parse(value).parts();
    } else if (key == "balanced") {
      r.T_balanced = value.find("T=balanced") != std::string::npos;
      r.N_balanced = value.find("N=balanced") != std::string::npos;
    } else if (key == "interpolation") {
      r.interpolation = std::stoll(value);
    } else if (key == "expected") {
      r.expected = std::stoll(value);
    } else if (key == "provenance") {
      std::istringstream in(value);
      std::string split;
      in >> r.verdict >> split >> r.tag;
      if (split != "-") r.predicted = SplittingType::parse(split).parts();
    } else if (key == "certificates") {
      std::istringstream in(value);
      std::string tok;
      while (in >> tok) {
        auto eq = tok.find('=');
        r.certificates[tok.substr(0, eq)] = tok.substr(eq + 1) == "yes";
      }
    }
  }
  return r;
}

std::string ComputeReport::to_json() const {
  json j;
  j["params"] = {{"d", d}, {"e", e}, {"n", n}, {"field", field}};
  j["F"] = F;
  j["psi"] = psi;
  j["delta"] = delta;
  j["T_splitting"] = T_splitting;
  j["N_splitting"] = N_splitting;
  j["balanced"] = {{"T", T_balanced}, {"N", N_balanced}};
  j["interpolation"] = interpolation;
  j["expected"] = expected;
  j["provenance"] = {{"verdict", verdict}, {"splitting", verdict == "ExactSplitting" ? json(predicted) : json(nullptr)},
                     {"tag", tag}};
  j["certificates"] = json::object();
  for (const auto& [k, v] : certificates) j["certificates"][k] = v;
  return j.dump(2) + "\n";
}

ComputeReport ComputeReport::from_json(const std::string& text) {
  try {
    auto j = json::parse(text);
    ComputeReport r;
    r.d = j.at("params").at("d");
    r.e = j.at("params").at("e");
    r.n = j.at("params").at("n");
    r.field = j.at("params").at("field");
    r.F = j.at("F").get<std::vector<std::string>>();
    r.psi = j.at("psi").get<std::vector<std::string>>();
    r.delta = j.at("delta").get<std::vector<std::string>>();
    r.T_splitting = j.at("T_splitting").get<std::vector<int>>();
    r.N_splitting = j.at("N_splitting").get<std::vector<int>>();
    r.T_balanced = j.at("balanced").at("T");
    r.N_balanced = j.at("balanced").at("N");
    r.interpolation = j.at("interpolation");
    r.expected = j.at("expected");
    r.verdict = j.at("provenance").at("verdict");
    if (!j.at("provenance").at("splitting").is_null())
      r.predicted = j.at("provenance").at("splitting").get<std::vector<int>>();
    r.tag = j.at("provenance").at("tag");
    for (const auto& [k, v] : j.at("certificates").items()) r.certificates[k] = v.get<bool>();
    return r;
  } catch (const json::exception& err) {
    throw ParseError(std::string("bad report JSON: ") + err.what());
  }
}

namespace {

struct InputOptions {
  std::optional<int> d, e, n;
  std::string poly_path;
  std::string field;
};

struct ResolvedInput {
  CurveContext ctx;
  std::optional<HypersurfaceFile> file;
};

ResolvedInput resolve_input(const InputOptions& opt) {
  std::optional<HypersurfaceFile> file;
  if (!opt.poly_path.empty()) file = read_hypersurface_file(opt.poly_path);
  auto pick = [&](const char* name, const std::optional<int>& flag, const std::optional<int>& from_file) {
    if (flag && from_file && *flag != *from_file)
      throw PreconditionError(std::string("--") + name + " = " + std::to_string(*flag) + " disagrees with the file's " +
                              name + " = " + std::to_string(*from_file));
    if (flag) return *flag;
    if (from_file) return *from_file;
    throw PreconditionError(std::string("missing --") + name);
  };
  int d = pick("d", opt.d, file ? file->d : std::nullopt);
  int e = pick("e", opt.e, file ? file->e : std::nullopt);
  int n = pick("n", opt.n, file ? file->n : std::nullopt);
  FieldSpec field = FieldSpec::rational();
  if (!opt.field.empty()) field = FieldSpec::parse(opt.field);
  else if (file && file->field) field = *file->field;
  return {CurveContext::make(d, e, n, field), std::move(file)};
}

template <class K>
IdealCombination<K> load_hypersurface(const ResolvedInput& in, const K& field) {
  if (in.file) {
    auto f = build_ideal_combination(*in.file, in.ctx, field);
    f.validate();
    return f;
  }
  return generate_example(in.ctx, field);
}

template <class K>
ComputeReport compute_report(const IdealCombination<K>& f) {
  const auto& ctx = f.context;
  ComputeReport r;
  r.d = ctx.d;
  r.e = ctx.e;
  r.n = ctx.n;
  r.field = ctx.field.to_string();
  r.F = split_lines(f.to_string());
  auto psi = build_psi(f);
  auto delta = build_delta(f);
  r.psi = row_forms(psi);
  r.delta = row_forms(delta);
  auto t = splitting_of_kernel(delta);
  auto nb = splitting_of_kernel(psi);
  r.T_splitting = t.parts();
  r.N_splitting = nb.parts();
  r.T_balanced = is_balanced(t);
  r.N_balanced = is_balanced(nb);
  r.interpolation = t.rank() ? interpolation_count(t) : 0;
  r.expected = expected_max(ctx.d, ctx.e, ctx.n);
  auto p = predicted_splitting(ctx.d, ctx.e, ctx.n);
  r.verdict = p.verdict_name();
  if (p.splitting) r.predicted = p.splitting->parts();
  r.tag = p.provenance;

  auto k = kernel_matrix(delta);
  r.certificates["smooth_along_curve"] = check_smooth_along_curve(f);
  r.certificates["delta_surjective"] = full_rank_everywhere(delta);
  r.certificates["kernel_compose_zero"] = compose(delta, k).is_zero();
  r.certificates["kernel_full_rank"] = full_rank_everywhere(k);
  r.certificates["kernel_matches_scan"] = SplittingType(k.source().twists) == t;
  r.certificates["tangent_line_in_kernel"] = compose(delta, build_df(ctx, f.field)).is_zero();
  if (auto b = p.balanced()) r.certificates["agrees_with_catalog"] = p.splitting ? *p.splitting == t : *b == is_balanced(t);
  return r;
}

void emit(std::ostream& out, bool as_json, const std::string& text, const json& j) {
  if (as_json) out << j.dump(2) << "\n";
  else out << text;
}

// ---------------------------------------------------------------- verify

struct CaseOutcome {
  bool ok = false;
  bool certification_failure = false;
  std::string detail;
  std::string splitting;
  std::string steps;
};

template <class K>
CaseOutcome run_case(int d, int e, int n, const FieldSpec& spec, const K& field) {
  CaseOutcome out;
  try {
    auto ctx = CurveContext::make(d, e, n, spec);
    std::vector<ExtensionStrategy> steps;
    auto f = generate_example(ctx, field, &steps);
    auto t = splitting_of_kernel(build_delta(f));
    auto p = predicted_splitting(d, e, n);
    out.splitting = t.to_string();
    std::vector<std::string> names;
    for (auto s : steps) names.push_back(strategy_name(s));
    out.steps = names.empty() ? "-" : join(names, ",");
    std::vector<std::string> problems;
    if (!p.splitting || *p.splitting != t)
      problems.push_back("expected " + (p.splitting ? p.splitting->to_string() : p.verdict_name()) + ", got " +
                         t.to_string());
    if (d == 2) {
      auto nb = splitting_of_kernel(build_psi(f));
      if (!is_balanced(nb)) problems.push_back("normal bundle " + nb.to_string() + " is not balanced");
    }
    if (d == 3 || d == 4) {
      std::vector<ExtensionStrategy> want;
      for (int m = e + 1; m <= n; ++m) want.push_back(induction_strategy(d, e, m));
      if (want != steps) problems.push_back("extension steps " + out.steps + " differ from the induction schedule");
    }
    if (!check_smooth_along_curve(f)) problems.push_back("F is singular along the curve");
    out.ok = problems.empty();
    out.detail = join(problems, "; ");
  } catch (const CertificationError& err) {
    out.certification_failure = true;
    out.detail = std::string("certification failure: ") + err.what();
  } catch (const std::exception& err) {
    out.detail = std::string("error: ") + err.what();
  }
  return out;
}

struct VerifyCase {
  int d, e, n;
  std::string tag;
  CaseOutcome result;
  std::string note;
};

int cmd_verify(const std::string& theorem, int d_general, std::optional<int> max_n_opt, int min_n,
               const std::string& field_text, int jobs, bool as_json, std::ostream& out) {
  int d = 0, e_floor = 0, max_n = 0;
  if (theorem == "quadrics") d = 2, e_floor = 2, max_n = 10;
  else if (theorem == "cubics") d = 3, e_floor = 3, max_n = 9;
  else if (theorem == "quartics") d = 4, e_floor = 4, max_n = 9;
  else if (theorem == "general") d = d_general, e_floor = 2 * d_general - 2, max_n = 11;
  else throw PreconditionError("unknown theorem '" + theorem + "' (quadrics|cubics|quartics|general)");
  if (d < 2) throw PreconditionError("--d must be at least 2");
  if (theorem == "general" && d < 5) throw PreconditionError("verify --theorem general needs --d >= 5");
  if (max_n_opt) max_n = *max_n_opt;
  if (jobs < 1) throw PreconditionError("--jobs must be positive");
  FieldSpec spec = FieldSpec::parse(field_text);

  std::vector<VerifyCase> cases;
  for (int e = e_floor; e <= max_n; ++e)
    for (int n = std::max({e, 3, min_n}); n <= max_n; ++n) {
      if (theorem == "general" && n != e) continue;
      spec.check_curve_degree(e);
      cases.push_back({d, e, n, predicted_splitting(d, e, n).provenance, {}, {}});
    }
  if (cases.empty()) throw PreconditionError("empty parameter range");

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto& c = cases[i];
      c.result = with_field(spec, [&](const auto& field) { return run_case(c.d, c.e, c.n, spec, field); });
      if (!c.result.ok && spec.kind == FieldSpec::Kind::Prime) {
        auto backstop = run_case(c.d, c.e, c.n, FieldSpec::rational(), RationalField());
        c.note = spec.to_string() + " failed (" + c.result.detail + "); rational rerun " + (backstop.ok ? "passed" : "failed");
        if (backstop.ok) c.result = backstop;
        else c.result.detail = backstop.detail;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::min<int>(jobs, static_cast<int>(cases.size())); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, std::pair<int, int>> by_tag;
  bool all_ok = true, cert_failure = false;
  for (const auto& c : cases) {
    auto& [passed, total] = by_tag[c.tag];
    ++total;
    if (c.result.ok) ++passed;
    all_ok = all_ok && c.result.ok;
    cert_failure = cert_failure || c.result.certification_failure;
  }

  if (as_json) {
    json j;
    j["theorem"] = theorem;
    j["field"] = spec.to_string();
    j["cases"] = json::array();
    for (const auto& c : cases) {
      json cj = {{"d", c.d}, {"e", c.e}, {"n", c.n}, {"T_splitting", c.result.splitting}, {"tag", c.tag},
                 {"steps", c.result.steps}, {"ok", c.result.ok}};
      if (!c.result.detail.empty()) cj["detail"] = c.result.detail;
      if (!c.note.empty()) cj["note"] = c.note;
      j["cases"].push_back(cj);
    }
    j["summary"] = json::object();
    for (const auto& [tag, pt] : by_tag) j["summary"][tag] = {{"passed", pt.first}, {"total", pt.second}};
    j["passed"] = all_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "verify " << theorem << " over " << spec.to_string() << "\n";
    for (const auto& c : cases) {
      out << "d=" << c.d << " e=" << c.e << " n=" << c.n << "  T=" << (c.result.splitting.empty() ? "?" : c.result.splitting)
          << "  steps=" << (c.result.steps.empty() ? "-" : c.result.steps) << "  " << c.tag << "  "
          << (c.result.ok ? "ok" : "MISMATCH: " + c.result.detail);
      if (!c.note.empty()) out << "  [" << c.note << "]";
      out << "\n";
    }
    out << "summary:\n";
    for (const auto& [tag, pt] : by_tag) out << "  " << tag << "  " << pt.first << "/" << pt.second << "\n";
    out << "result: " << (all_ok ? "PASS" : "FAIL") << " (" << cases.size() << " cases)\n";
  }
  if (cert_failure && !all_ok) return kCertificationFailure;
  return all_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- extend

template <class K>
int run_extend(const ResolvedInput& in, const K& field, const std::string& target_text, const std::string& out_path,
               bool as_json, std::ostream& out) {
  auto f = load_hypersurface(in, field);
  const auto& ctx = f.context;
  SplittingType target;
  if (!target_text.empty()) {
    target = SplittingType::parse(target_text);
  } else {
    auto p = predicted_splitting(ctx.d, ctx.e, ctx.n + 1);
    if (!p.splitting) throw PreconditionError("no exact prediction at n+1; pass --target");
    target = *p.splitting;
  }
  auto step = extend_dimension(f, target);
  std::map<std::string, bool> certs;
  certs["N1_J_equals_K"] = compose(step.N1, step.J) == step.K_in;
  certs["N2_J_zero"] = compose(step.N2, step.J).is_zero();
  certs["N_full_rank"] = full_rank_everywhere(step.N);
  certs["delta_N_zero"] = compose(step.delta_out, step.N).is_zero();
  certs["N_source_is_target"] = SplittingType(step.N.source().twists) == target;
  certs["kernel_scan_is_target"] = splitting_of_kernel(step.delta_out) == target;
  certs["output_smooth_along_curve"] = check_smooth_along_curve(step.output_F);

  std::string output_file = format_hypersurface(step.output_F);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw PreconditionError("cannot write '" + out_path + "'");
    file << output_file;
  }

  std::string text;
  text += "input:\n" + format_hypersurface(step.input_F);
  text += "strategy: " + strategy_name(step.strategy) + "\n";
  text += "target: " + target.to_string() + "\n";
  text += "K: " + step.K_in.to_string();
  text += "J: " + step.J.to_string();
  text += "N1: " + step.N1.to_string();
  text += "N2: " + step.N2.to_string();
  text += "N: " + step.N.to_string();
  text += "delta_out: " + step.delta_out.to_string();
  text += "g: " + step.g.to_string() + "\n";
  text += "output:\n" + output_file;
  std::string cert_line;
  for (const auto& [k, v] : certs) cert_line += (cert_line.empty() ? "" : " ") + k + "=" + yes_no(v);
  text += "certificates: " + cert_line + "\n";

  json j;
  j["input"] = format_hypersurface(step.input_F);
  j["strategy"] = strategy_name(step.strategy);
  j["target"] = target.parts();
  j["K"] = json::parse(sheaf_map_to_json(step.K_in));
  j["J"] = json::parse(sheaf_map_to_json(step.J));
  j["N1"] = json::parse(sheaf_map_to_json(step.N1));
  j["N2"] = json::parse(sheaf_map_to_json(step.N2));
  j["N"] = json::parse(sheaf_map_to_json(step.N));
  j["delta_out"] = json::parse(sheaf_map_to_json(step.delta_out));
  j["g"] = step.g.to_string();
  j["output"] = output_file;
  j["certificates"] = certs;
  emit(out, as_json, text, j);
  bool all = std::all_of(certs.begin(), certs.end(), [](const auto& kv) { return kv.second; });
  return all ? kOk : kCertificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splitting types of restricted tangent bundles along rational normal curves", "tsplit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  InputOptions input;
  auto add_input = [&](CLI::App* sub, bool with_poly) {
    sub->add_option("--d", input.d, "Hypersurface degree");
    sub->add_option("--e", input.e, "Curve degree");
    sub->add_option("--n", input.n, "Ambient dimension");
    sub->add_option("--field", input.field, "rational or prime:<p>");
    if (with_poly) sub->add_option("--poly", input.poly_path, "Hypersurface file");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "Splittings of T_X|_C and N_C/X for one hypersurface");
  add_input(compute, true);

  auto* verify = app.add_subcommand("verify", "Check a theorem's splitting table over a parameter sweep");
  std::string theorem;
  std::optional<int> max_n;
  int min_n = 3, general_d = 5, jobs = 1;
  std::string verify_field = "prime:32003";
  verify->add_option("--theorem", theorem, "quadrics|cubics|quartics|general")->required();
  verify->add_option("--max-n", max_n, "Largest ambient dimension");
  verify->add_option("--min-n", min_n, "Smallest ambient dimension");
  verify->add_option("--d", general_d, "Degree for --theorem general");
  verify->add_option("--field", verify_field, "rational or prime:<p>");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* extend = app.add_subcommand("extend", "One dimension-extension step n -> n+1");
  add_input(extend, true);
  std::string target_text, out_path;
  extend->add_option("--target", target_text, "Target splitting at n+1 (default: catalog)");
  extend->add_option("--out", out_path, "Write the extended hypersurface file here");

  std::string first, second;
  auto* glue = app.add_subcommand("glue", "Gluing bound of two splitting types");
  glue->add_option("a", first)->required();
  glue->add_option("b", second)->required();
  glue->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* dominates = app.add_subcommand("dominates", "Whether the first splitting type specializes to the second");
  dominates->add_option("general", first)->required();
  dominates->add_option("special", second)->required();
  dominates->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* interp = app.add_subcommand("interp", "Interpolation count of a splitting type");
  interp->add_option("splitting", first)->required();
  add_input(interp, false);

  auto* predict = app.add_subcommand("predict", "Catalog prediction for (d,e,n)");
  add_input(predict, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }
  const bool as_json = format == "json";

  try {
    if (*compute) {
      auto in = resolve_input(input);
      auto report = with_field(in.ctx.field, [&](const auto& field) { return compute_report(load_hypersurface(in, field)); });
      out << (as_json ? report.to_json() : report.to_text());
      bool certified = report.certificates["kernel_compose_zero"] && report.certificates["kernel_full_rank"] &&
                       report.certificates["kernel_matches_scan"];
      return certified ? kOk : kCertificationFailure;
    }
    if (*verify) return cmd_verify(theorem, general_d, max_n, min_n, verify_field, jobs, as_json, out);
    if (*extend) {
      auto in = resolve_input(input);
      return with_field(in.ctx.field, [&](const auto& field) { return run_extend(in, field, target_text, out_path, as_json, out); });
    }
    if (*glue) {
      auto g = glue_bound(SplittingType::parse(first), SplittingType::parse(second));
      emit(out, as_json, g.to_json() + "\n" + g.to_string() + "\nprovenance: lemma:gluing\n",
           {{"result", g.parts()}, {"text", g.to_string()}, {"balanced", is_balanced(g)}, {"provenance", "lemma:gluing"}});
      return kOk;
    }
    if (*dominates) {
      std::string reason;
      bool r = specializes_to(SplittingType::parse(first), SplittingType::parse(second), &reason);
      std::string text = std::string(r ? "true" : "false") + "\n";
      if (!r) text += "reason: " + reason + "\n";
      text += "provenance: lemma:specialization\n";
      json j = {{"result", r}, {"provenance", "lemma:specialization"}};
      if (!r) j["reason"] = reason;
      emit(out, as_json, text, j);
      return kOk;
    }
    if (*interp) {
      auto s = SplittingType::parse(first);
      int count = interpolation_count(s);
      std::string text = "interpolation: " + std::to_string(count) + "\n";
      json j = {{"splitting", s.parts()}, {"interpolation", count}};
      if (input.d || input.e || input.n) {
        if (!(input.d && input.e && input.n)) throw PreconditionError("interp needs all of --d --e --n or none");
        long long expect = expected_max(*input.d, *input.e, *input.n);
        text += "expected: " + std::to_string(expect) + "\n";
        j["expected"] = expect;
      }
      text += "balanced: " + yes_no(is_balanced(s)) + "\nprovenance: interpolation-count\n";
      j["balanced"] = is_balanced(s);
      j["provenance"] = "interpolation-count";
      emit(out, as_json, text, j);
      return kOk;
    }
    if (*predict) {
      if (!(input.d && input.e && input.n)) throw PreconditionError("predict needs --d --e --n");
      auto p = predicted_splitting(*input.d, *input.e, *input.n);
      std::string text = "verdict: " + p.verdict_name() + "\n";
      if (p.splitting) text += "splitting: " + p.splitting->to_string() + "\njson: " + p.splitting->to_json() + "\n";
      auto b = p.balanced();
      text += "balanced: " + std::string(b ? yes_no(*b) : "unknown") + "\n";
      text += "tag: " + p.provenance + "\n";
      json j = {{"verdict", p.verdict_name()},
                {"splitting", p.splitting ? json(p.splitting->parts()) : json(nullptr)},
                {"balanced", b ? json(*b) : json(nullptr)},
                {"tag", p.provenance}};
      emit(out, as_json, text, j);
      return kOk;
    }
  } catch (const CertificationError& e) {
    err << "certification failure: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCertificationFailure;
  }
  return kUserError;
}

}  // namespace tsplit::cli
