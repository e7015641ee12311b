#include "cli.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyban/polyban.hpp"

namespace polyban::cli {

namespace fs = std::filesystem;

namespace {

struct Settings {
  std::string manifest;
  std::string workspace;
  std::optional<std::size_t> dim_cap;
  std::optional<std::size_t> denom_cap;

  io::Context context;
  std::size_t denominators = 2;

  // Manifest values first, then flags on top.
  void resolve() {
    if (!manifest.empty()) {
      const fs::path path(manifest);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(io::read_text(path));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("manifest: ") + e.what());
      }
      if (j.contains("workspace")) {
        fs::path w(j["workspace"].get<std::string>());
        context.workspace = w.is_absolute() ? w : path.parent_path() / w;
      }
      if (j.contains("dim_cap")) context.dim_cap = read_cap(j["dim_cap"], "dim_cap");
      if (j.contains("denom_cap")) denominators = read_cap(j["denom_cap"], "denom_cap");
    }
    if (!workspace.empty()) context.workspace = fs::path(workspace);
    if (!context.workspace) context.workspace = io::workspace_from_env();
    if (dim_cap) context.dim_cap = *dim_cap;
    if (denom_cap) denominators = *denom_cap;
    if (context.dim_cap == 0 || denominators == 0) throw Error(ErrorCode::ParseError, "caps must be positive");
  }

  static std::size_t read_cap(const nlohmann::json& v, const char* name) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      throw Error(ErrorCode::ParseError, std::string("manifest field ") + name + " must be a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
  }
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  template <typename T>
  Report& line(const std::string& key, const T& value) {
    out_ << key << " = " << value << "\n";
    return *this;
  }
  Report& flag(const std::string& key, bool value) { return line(key, value ? "true" : "false"); }

 private:
  std::ostream& out_;
};

fs::path input(const std::string& ref, const Settings& s) {
  const fs::path p(ref);
  if (p.is_absolute() || fs::exists(p) || !s.context.workspace) return p;
  return *s.context.workspace / p;
}

PolyhedralSpace load_space(const std::string& ref, const Settings& s) {
  return io::resolve_space(ref, fs::current_path(), s.context);
}

LinearMap load_map(const std::string& ref, const Settings& s) { return io::read_map(input(ref, s), s.context); }

Rational parse_eps(const std::string& text) {
  Rational eps = Rational::parse(text);
  if (eps < Rational(0)) throw Error(ErrorCode::PreconditionViolated, "eps must be nonnegative");
  return eps;
}

std::string slack_line(const Slack& s) { return to_string(s); }

// ---------------------------------------------------------------- commands

void space_check(const std::string& file, const Settings& s, std::ostream& out) {
  const PolyhedralSpace K = load_space(file, s);
  Report r(out);
  r.line("dim", K.dim()).line("vertices", K.vertices().size());
  for (const auto& v : K.vertices()) r.line("vertex", to_string(v));
  r.line("facets", K.facets().size());
  for (const auto& f : K.facets()) r.line("facet", to_string(f));
}

void map_norm(const std::string& file, const Settings& s, std::ostream& out) {
  const LinearMap f = load_map(file, s);
  Report(out).line("norm", f.operator_norm());
}

void map_defect(const std::string& file, const Settings& s, std::ostream& out) {
  const LinearMap f = load_map(file, s);
  const IsometryDefect& d = f.isometry_defect();
  Report(out)
      .line("norm", f.operator_norm())
      .line("upper", d.upper)
      .line("lower", d.lower)
      .line("max", d.max())
      .flag("isometry", d.is_isometry());
}

void pushout_cmd(const std::string& f_file, const std::string& g_file, const std::string& eps_text,
                 const std::string& out_dir, const Settings& s, std::ostream& out) {
  const LinearMap f = load_map(f_file, s);
  const LinearMap g = load_map(g_file, s);
  const EpsPushout P = eps_pushout(f, g, parse_eps(eps_text), s.context.dim_cap);
  Report r(out);
  r.line("eps", P.eps)
      .line("dim", P.apex.dim())
      .line("relation_dim", P.relation_basis.size())
      .line("vertices", P.apex.vertices().size())
      .line("facets", P.apex.facets().size())
      .line("leg_B", P.leg_from_B.matrix().str())
      .line("leg_C", P.leg_from_C.matrix().str());
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    io::write_space(dir / "apex.json", P.apex);
    io::write_map(dir / "leg_B.map", P.leg_from_B);
    io::write_map(dir / "leg_C.map", P.leg_from_C);
    r.line("apex_file", (dir / "apex.json").string())
        .line("leg_B_file", (dir / "leg_B.map").string())
        .line("leg_C_file", (dir / "leg_C.map").string());
  }
}

void chain_factor(const std::string& manifest, const std::string& f_file, const std::string& eps_text,
                  const Settings& s, std::ostream& out) {
  const Chain ch = io::read_chain(input(manifest, s), s.context);
  const LinearMap f = load_map(f_file, s);
  const Rational eps = parse_eps(eps_text);
  if (eps.is_zero()) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
  const StageFactorization fac = factor_through_stage(ch, f, eps);
  Report r(out);
  r.line("stages", ch.length()).line("stage", fac.stage).line("distance", fac.distance);
  for (std::size_t i = 0; i < fac.stage_optima.size(); ++i) r.line("optimum[" + std::to_string(i) + "]", fac.stage_optima[i]);
  r.line("g", fac.g.matrix().str());
}

void ideal_check(const std::string& file, const std::string& witness, const Settings& s, std::ostream& out) {
  const Embedding e(load_map(file, s));
  const DefectReport d = ideal_defect(e);
  Report r(out);
  r.line("defect", d.value)
      .line("extension_norm", d.witness->operator_norm())
      .flag("ideal", d.value.is_zero())
      .line("witness_matrix", d.witness->matrix().str());
  if (!witness.empty()) {
    io::write_map(witness, *d.witness);
    r.line("witness", witness);
  }
}

void retract_check(const std::string& file, const Settings& s, std::ostream& out) {
  const LinearMap f = load_map(file, s);
  const DefectReport d = retraction_defect(f);
  Report(out).line("defect", d.value).flag("split", d.value.is_zero()).line("retraction", d.witness->matrix().str());
}

void uext_verify(const std::string& emb_file, const std::string& t_file, const std::string& inclusion,
                 const std::string& eps_text, const Settings& s, std::ostream& out) {
  const Embedding e(load_map(emb_file, s));
  const LinearMap t = load_map(t_file, s);
  const LinearMap b = inclusion.empty() ? LinearMap::identity(t.domain()) : load_map(inclusion, s);
  const UExtensionCheck c = verify_u_extension_candidate(e, b, t, parse_eps(eps_text));
  Report(out)
      .flag("fixes_intersection", c.fixes_intersection)
      .line("upper", c.defect.upper)
      .line("lower", c.defect.lower)
      .flag("strong_isometry", c.strong_isometry)
      .flag("accepted", c.accepted());
}

PPFormula load_formula(const std::string& ref, bool inline_text, const Settings& s,
                       std::optional<std::size_t> free_count = std::nullopt) {
  return parse_formula(inline_text ? ref : io::read_text(input(ref, s)), free_count);
}

void logic_slack(const std::string& space, const std::string& formula, bool inline_text, const std::string& assign,
                 const Settings& s, std::ostream& out) {
  const PolyhedralSpace K = load_space(space, s);
  const std::vector<RatVec> a = io::parse_vector_list(assign);
  const PPFormula phi = load_formula(formula, inline_text, s, a.size());
  const Slack sl = satisfaction_slack(K, phi, a);
  Report(out).line("formula", to_string(phi)).line("slack", slack_line(sl)).flag("satisfied", sl.satisfied());
}

void logic_transfer(const std::string& emb, const std::string& formula, bool inline_text, const std::string& assign,
                    const Settings& s, std::ostream& out) {
  const Embedding e(load_map(emb, s));
  std::vector<Vector> a;
  for (auto& v : io::parse_vector_list(assign)) {
    // Vectors of the ambient dimension are read in L and pulled back.
    const PolyhedralSpace& home = v.size() == e.sub().dim() ? e.sub() : e.ambient();
    a.emplace_back(home, std::move(v));
  }
  const PPFormula phi = load_formula(formula, inline_text, s, a.size());
  const TransferResult t = transfer_check(e, phi, a);
  Report(out)
      .line("slack_K", slack_line(t.in_sub))
      .line("slack_L", slack_line(t.in_ambient))
      .flag("agree", t.in_sub.satisfied() == t.in_ambient.satisfied());
}

void logic_distinguish(const std::string& emb, const Settings& s, std::ostream& out) {
  const Embedding e(load_map(emb, s));
  const Distinguisher d = distinguishing_formula(e);
  std::vector<Vector> a;
  for (const auto& v : d.assignment) a.emplace_back(e.sub(), v);
  const TransferResult t = transfer_check(e, d.formula, a);
  std::ostringstream assign;
  for (std::size_t i = 0; i < d.assignment.size(); ++i) {
    if (i) assign << ";";
    for (std::size_t k = 0; k < d.assignment[i].size(); ++k) assign << (k ? "," : "") << d.assignment[i][k];
  }
  Report(out)
      .line("formula", to_string(d.formula))
      .line("assignment", assign.str())
      .line("slack_K", slack_line(t.in_sub))
      .line("slack_L", slack_line(t.in_ambient))
      .line("gap", t.in_sub.value - t.in_ambient.value);
}

void inj_defect(const std::string& h_file, const std::string& space, const Settings& s, std::ostream& out) {
  const LinearMap h = load_map(h_file, s);
  const PolyhedralSpace K = load_space(space, s);
  const DefectReport d = injectivity_defect(h, K, s.context.dim_cap);
  Report(out)
      .line("defect", d.value)
      .flag("injective", d.value.is_zero())
      .line("probe", d.probe->matrix().str())
      .line("witness", d.witness->matrix().str());
}

void lind_report(const std::string& space, const std::string& catalog, const Settings& s, std::ostream& out) {
  const PolyhedralSpace K = load_space(space, s);
  const MorphismCatalog cat = io::read_catalog(input(catalog, s), s.context);
  const LindenstraussReport rep = lindenstrauss_report(K, cat, s.context.dim_cap);
  Report r(out);
  r.line("isometries", rep.entries.size());
  std::string first_bad;
  for (const auto& e : rep.entries) {
    r.line("defect[" + e.name + "]", e.report.value);
    if (first_bad.empty() && !e.report.value.is_zero()) first_bad = e.name;
  }
  r.line("result", first_bad.empty() ? std::string("no counterexample in catalog") : "counterexample " + first_bad);
}

void gurarii_cmd(const std::string& seed, const std::string& catalog, std::size_t rounds, const std::string& out_dir,
                 const Settings& s, std::ostream& out) {
  const PolyhedralSpace K0 = load_space(seed, s);
  const MorphismCatalog cat = io::read_catalog(input(catalog, s), s.context);
  const GurariiLog log = gurarii_build(K0, cat, {rounds, s.denominators, s.context.dim_cap});
  std::ostringstream text;
  Report r(text);
  r.line("rounds", log.rounds.size()).flag("truncated", log.truncated);
  if (log.truncated) r.line("stop_reason", log.stop_reason);
  for (const auto& rd : log.rounds) {
    const std::string p = "round[" + std::to_string(rd.round) + "].";
    r.line(p + "h", rd.h_name)
        .line(p + "f", rd.f.matrix().str())
        .line(p + "dim", rd.dim)
        .line(p + "link_defect", "(" + rd.link_defect.upper.str() + ", " + rd.link_defect.lower.str() + ")");
    std::ostringstream res;
    for (std::size_t i = 0; i < rd.residuals.size(); ++i) res << (i ? ", " : "") << rd.residuals[i];
    r.line(p + "residuals", "[" + res.str() + "]");
  }
  out << text.str();
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    for (std::size_t i = 0; i < log.stages.size(); ++i) io::write_space(dir / ("stage_" + std::to_string(i) + ".json"), log.stages[i]);
    for (std::size_t i = 0; i < log.links.size(); ++i) io::write_map(dir / ("link_" + std::to_string(i) + ".map"), log.links[i]);
    io::write_text(dir / "log.txt", text.str());
    out << "out = " << dir.string() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with polyhedral Banach spaces", "polyban"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--manifest", s.manifest, "JSON manifest with workspace, dim_cap, denom_cap");
  app.add_option("--workspace", s.workspace, "Root for relative file references");
  app.add_option("--dim-cap", s.dim_cap, "Largest ambient dimension for polytope computations");
  app.add_option("--denom-cap", s.denom_cap, "Denominator cap for generated requests");

  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  std::string a1, a2, a3, eps = "0", out_dir, witness, assign, inclusion;
  bool inline_text = false;
  std::size_t rounds = 1;

  {
    CLI::App* c = group("space", "Space files")->add_subcommand("check", "Validate a space and print both descriptions");
    c->add_option("file", a1)->required();
    actions.emplace_back(c, [&] { space_check(a1, s, out); });
  }
  {
    CLI::App* g = group("map", "Linear maps");
    CLI::App* n = g->add_subcommand("norm", "Operator norm");
    n->add_option("file", a1)->required();
    actions.emplace_back(n, [&] { map_norm(a1, s, out); });
    CLI::App* d = g->add_subcommand("defect", "Isometry defect (upper, lower)");
    d->add_option("file", a1)->required();
    actions.emplace_back(d, [&] { map_defect(a1, s, out); });
  }
  {
    CLI::App* c = app.add_subcommand("pushout", "eps-pushout of f: A -> B and g: A -> C");
    c->add_option("f", a1)->required();
    c->add_option("g", a2)->required();
    c->add_option("--eps", eps, "Rational eps >= 0");
    c->add_option("--out", out_dir, "Directory for apex and leg files");
    actions.emplace_back(c, [&] { pushout_cmd(a1, a2, eps, out_dir, s, out); });
  }
  {
    CLI::App* c = group("chain", "Finite chains")->add_subcommand("factor", "Least stage through which f factors up to eps");
    c->add_option("manifest", a1)->required();
    c->add_option("f", a2)->required();
    c->add_option("--eps", eps, "Rational eps > 0")->required();
    actions.emplace_back(c, [&] { chain_factor(a1, a2, eps, s, out); });
  }
  {
    CLI::App* c = group("ideal", "Ideals")->add_subcommand("check", "Ideal defect of an isometric embedding");
    c->add_option("file", a1)->required();
    c->add_option("--witness", witness, "Write the optimal extension operator here");
    actions.emplace_back(c, [&] { ideal_check(a1, witness, s, out); });
  }
  {
    CLI::App* c = group("retract", "Retractions")->add_subcommand("check", "Distance from a split monomorphism");
    c->add_option("file", a1)->required();
    actions.emplace_back(c, [&] { retract_check(a1, s, out); });
  }
  {
    CLI::App* c = group("uext", "u-extensions")->add_subcommand("verify", "Check a candidate extension operator t: B -> K");
    c->add_option("embedding", a1)->required();
    c->add_option("t", a2)->required();
    c->add_option("--eps", eps, "Rational eps >= 0")->required();
    c->add_option("--inclusion", inclusion, "Embedding B -> L (default: B = L)");
    actions.emplace_back(c, [&] { uext_verify(a1, a2, inclusion, eps, s, out); });
  }
  {
    CLI::App* g = group("logic", "Positive-primitive formulas");
    CLI::App* sl = g->add_subcommand("slack", "Satisfaction slack in a space");
    sl->add_option("space", a1)->required();
    sl->add_option("formula", a2, "Formula file (or text with --inline)")->required();
    sl->add_option("--assign", assign, "Vectors as 'a,b;c,d'");
    sl->add_flag("--inline", inline_text, "Treat the formula argument as formula text");
    actions.emplace_back(sl, [&] { logic_slack(a1, a2, inline_text, assign, s, out); });
    CLI::App* tr = g->add_subcommand("transfer", "Slacks in K and in L");
    tr->add_option("embedding", a1)->required();
    tr->add_option("formula", a2)->required();
    tr->add_option("--assign", assign, "Vectors in K (or in L, pulled back)");
    tr->add_flag("--inline", inline_text, "Treat the formula argument as formula text");
    actions.emplace_back(tr, [&] { logic_transfer(a1, a2, inline_text, assign, s, out); });
    CLI::App* di = g->add_subcommand("distinguish", "Formula separating a non-ideal K from L");
    di->add_option("embedding", a1)->required();
    actions.emplace_back(di, [&] { logic_distinguish(a1, s, out); });
  }
  {
    CLI::App* c = group("inj", "Approximate injectivity")->add_subcommand("defect", "Injectivity defect of K against h");
    c->add_option("isometry", a1)->required();
    c->add_option("space", a2)->required();
    actions.emplace_back(c, [&] { inj_defect(a1, a2, s, out); });
  }
  {
    CLI::App* c = group("lind", "Lindenstrauss reports")->add_subcommand("report", "Injectivity against a catalog of isometries");
    c->add_option("space", a1)->required();
    c->add_option("catalog", a2)->required();
    actions.emplace_back(c, [&] { lind_report(a1, a2, s, out); });
  }
  {
    CLI::App* c = group("gurarii", "Iterated amalgamation")->add_subcommand("build", "Pushout chain over catalog requests");
    c->add_option("seed", a1)->required();
    c->add_option("catalog", a2)->required();
    c->add_option("--rounds", rounds, "Number of rounds");
    c->add_option("--out", out_dir, "Directory for stages, links and the log");
    actions.emplace_back(c, [&] { gurarii_cmd(a1, a2, rounds, out_dir, s, out); });
  }
  bool selftest_ok = true;
  {
    CLI::App* c = app.add_subcommand("selftest", "Run the bundled invariant checks");
    actions.emplace_back(c, [&] { selftest_ok = selftest(out); });
  }

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
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    s.resolve();
    for (auto& [cmd, action] : actions) {
      if (cmd->parsed()) {
        action();
        return selftest_ok ? kOk : kInputError;
      }
    }
    err << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_input_error(e.code()) ? kInputError : kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace polyban::cli
