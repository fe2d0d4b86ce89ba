#include "omc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "omc/arrangement.hpp"
#include "omc/committees.hpp"
#include "omc/error.hpp"
#include "omc/farey.hpp"
#include "omc/schemes.hpp"
#include "omc/topes.hpp"

namespace omc {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Domain, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int exit_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return kExitUsage;
    case ErrorKind::Invariant: return kExitInvariant;
    case ErrorKind::Hypothesis: return kExitHypothesis;
    case ErrorKind::ResourceGuard: return kExitResourceGuard;
  }
  return kExitUsage;
}

int exit_status(const Report& r) {
  switch (r.verdict()) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Fail: return kExitCheckFailed;
    case Verdict::SkippedHypothesis: return kExitHypothesis;
  }
  return kExitCheckFailed;
}

Json strings(const std::vector<SignVector>& topes) {
  Json a = Json::array();
  for (const auto& v : topes) a.push_back(v.str());
  return a;
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"v", 1},
          {"title", r.title()},
          {"verdict", to_string(r.verdict())},
          {"reason", r.skip_reason()},
          {"checks", std::move(checks)}};
}

int emit_report(const Context& ctx, const Report& r) {
  if (ctx.json)
    ctx.out << report_json(r).dump() << "\n";
  else
    ctx.out << r;
  return exit_status(r);
}

// ---- farey ---------------------------------------------------------------

struct FareyArgs {
  std::string kind = "boolean";
  int n = -1;
  int m = -1;
  std::string frac;
  int m_max = 16;
};

FareySeq generate(const FareyArgs& a) {
  require(a.n >= 1, ErrorKind::Domain, "--n must be >= 1");
  if (a.kind == "standard") return farey_sequence(a.n);
  require(a.m >= 0, ErrorKind::Domain, "--m is required for kind " + a.kind);
  if (a.kind == "boolean") return farey_boolean(a.n, a.m);
  return farey_numerator_bounded(a.n, a.m);
}

int farey_gen(const Context& ctx, const FareyArgs& a) {
  const FareySeq seq = generate(a);
  if (ctx.json) {
    Json fr = Json::array();
    for (const auto& f : seq) fr.push_back(f.str());
    Json j = {{"v", 1}, {"kind", a.kind}, {"n", a.n}};
    if (a.kind != "standard") j["m"] = a.m;
    j["fractions"] = std::move(fr);
    ctx.out << j.dump() << "\n";
  } else {
    for (const auto& f : seq) ctx.out << f << "\n";
  }
  return kExitOk;
}

int farey_neighbors(const Context& ctx, const FareyArgs& a) {
  require(a.m >= 0, ErrorKind::Domain, "--m must be >= 0");
  const int n = a.n < 0 ? 2 * a.m : a.n;
  const Fraction f = Fraction::parse(a.frac);
  const Fraction pred = neighbor_general(n, a.m, f, Direction::Pred);
  const Fraction succ = neighbor_general(n, a.m, f, Direction::Succ);
  if (ctx.json)
    ctx.out << Json{{"v", 1}, {"n", n}, {"m", a.m}, {"frac", f.str()}, {"pred", pred.str()}, {"succ", succ.str()}}.dump()
            << "\n";
  else
    ctx.out << "pred " << pred << ", succ " << succ << "\n";
  return kExitOk;
}

int farey_maps(const Context& ctx, const FareyArgs& a) {
  require(a.m >= 1, ErrorKind::Domain, "--m must be >= 1");
  const FareySeq seq = farey_boolean(2 * a.m, a.m);
  Json tables = Json::object();
  for (Side side : {Side::Left, Side::Right}) {
    const auto half = seq.halfsequence(side == Side::Right);
    for (Orientation o : {Orientation::Preserving, Orientation::Reversing}) {
      const std::string name = std::string(side == Side::Left ? "left" : "right") + " " +
                               (o == Orientation::Preserving ? "preserving" : "reversing");
      Json rows = Json::array();
      if (!ctx.json) ctx.out << name << "\n";
      for (const auto& f : half) {
        const Fraction g = map_half_to_farey(f, side, o);
        if (ctx.json)
          rows.push_back({f.str(), g.str()});
        else
          ctx.out << "  " << f << " -> " << g << "\n";
      }
      tables[name] = std::move(rows);
    }
  }
  if (ctx.json) ctx.out << Json{{"v", 1}, {"m", a.m}, {"maps", std::move(tables)}}.dump() << "\n";
  return kExitOk;
}

Report farey_suite(int m_max) {
  require(m_max >= 2, ErrorKind::Domain, "--m-max must be >= 2");
  Report all("farey");
  for (int m = 2; m <= m_max; ++m) all.merge(verify_boolean_farey(m));
  return all;
}

int farey_verify(const Context& ctx, const FareyArgs& a) {
  const Report r = farey_suite(a.m_max);
  if (ctx.json) return emit_report(ctx, r);
  if (r.passed()) {
    ctx.out << "OK\n";
    return kExitOk;
  }
  return emit_report(ctx, r);
}

// ---- om ------------------------------------------------------------------

int print_topes(const Context& ctx, const ToposSystem& sys) {
  if (ctx.json)
    ctx.out << Json{{"v", 1}, {"t", sys.ground_size()}, {"topes", strings(sys.topes())}}.dump() << "\n";
  else
    ctx.out << serialize_topes(sys);
  return kExitOk;
}

int om_validate(const Context& ctx, const ToposSystem& sys) {
  if (ctx.json)
    ctx.out << Json{{"v", 1}, {"valid", true}, {"t", sys.ground_size()}, {"topes", sys.size()}}.dump() << "\n";
  else
    ctx.out << "valid t=" << sys.ground_size() << " |T|=" << sys.size() << "\n";
  return kExitOk;
}

int om_info(const Context& ctx, const ToposSystem& sys) {
  std::vector<std::size_t> sizes;
  for (std::size_t e = 1; e <= sys.ground_size(); ++e) sizes.push_back(positive_halfspace(sys, e).size());
  if (ctx.json) {
    ctx.out << Json{{"v", 1},
                    {"t", sys.ground_size()},
                    {"topes", sys.size()},
                    {"acyclic", is_acyclic(sys)},
                    {"halfspaces", sizes}}
                   .dump()
            << "\n";
    return kExitOk;
  }
  ctx.out << "t=" << sys.ground_size() << " |T|=" << sys.size() << " acyclic=" << (is_acyclic(sys) ? "true" : "false")
          << "\n";
  ctx.out << "halfspaces";
  for (auto s : sizes) ctx.out << " " << s;
  ctx.out << "\n";
  return kExitOk;
}

// ---- committees -----------------------------------------------------------

int print_family(const Context& ctx, const CommitteeFamily& family) {
  if (ctx.json) {
    Json layers = Json::object();
    for (const auto& [k, layer] : family.layers) {
      Json rows = Json::array();
      for (const auto& c : layer) rows.push_back(strings(c.members()));
      layers[std::to_string(k)] = std::move(rows);
    }
    ctx.out << Json{{"v", 1}, {"layers", std::move(layers)}}.dump() << "\n";
  } else {
    for (const auto& [k, layer] : family.layers)
      for (const auto& c : layer) ctx.out << c.str() << "\n";
  }
  return kExitOk;
}

CommitteeFamily without_empty_layers(CommitteeFamily f) {
  std::erase_if(f.layers, [](const auto& kv) { return kv.second.empty(); });
  return f;
}

// ---- schemes --------------------------------------------------------------

struct SchemeArgs {
  std::string kind = "johnson";
  int n = -1;
  int m = -1;
  int d = -1;
  int k = 0;
  int i = 0;
  int j = 0;
};

SchemeKind scheme_kind(const SchemeArgs& a) {
  if (a.kind == "johnson") return SchemeKind::johnson(a.n, a.d);
  if (a.kind == "crosspolytope") return SchemeKind::crosspolytope(a.m, a.d < 0 ? a.m : a.d);
  return SchemeKind::hamming(a.m);
}

int scheme_params(const Context& ctx, const SchemeArgs& a) {
  const SchemeKind kind = scheme_kind(a);
  const int D = kind.diameter();
  Json valencies = Json::array();
  Json intersections = Json::array();
  std::ostringstream text;
  text << kind.label() << "\n";
  if (kind.family == SchemeFamily::Crosspolytope) text << "whitney " << crosspolytope_whitney(kind.n, kind.d) << "\n";
  text << "valency";
  for (int i = 0; i <= D; ++i) {
    BigCount v;
    switch (kind.family) {
      case SchemeFamily::Johnson: v = johnson_valency(kind.n, kind.d, i); break;
      case SchemeFamily::Crosspolytope: v = crosspolytope_valency(kind.n, kind.d, i); break;
      case SchemeFamily::Hamming: v = hamming_p(kind.n, i, i, 0); break;
    }
    text << " " << v;
    valencies.push_back(v.str());
  }
  text << "\n";
  // Intersection numbers are only asserted for Johnson and Hamming.
  if (kind.family != SchemeFamily::Crosspolytope) {
    for (int k = 0; k <= D; ++k) {
      text << "p^" << k << "\n";
      Json matrix = Json::array();
      for (int i = 0; i <= D; ++i) {
        Json row = Json::array();
        text << " ";
        for (int j = 0; j <= D; ++j) {
          const BigCount p = kind.family == SchemeFamily::Johnson ? johnson_p(kind.n, kind.d, i, j, k)
                                                                 : hamming_p(kind.n, i, j, k);
          text << " " << p;
          row.push_back(p.str());
        }
        text << "\n";
        matrix.push_back(std::move(row));
      }
      intersections.push_back(std::move(matrix));
    }
  }
  if (ctx.json) {
    Json j = {{"v", 1}, {"scheme", kind.label()}};
    if (kind.family == SchemeFamily::Crosspolytope) j["whitney"] = crosspolytope_whitney(kind.n, kind.d).str();
    j["valencies"] = std::move(valencies);
    if (kind.family != SchemeFamily::Crosspolytope) j["p"] = std::move(intersections);
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << text.str();
  }
  return kExitOk;
}

int scheme_oracle_cmd(const Context& ctx, const SchemeArgs& a) {
  const SchemeKind kind = scheme_kind(a);
  const std::uint64_t count = scheme_oracle(kind, a.k, a.i, a.j, ctx.force);
  if (ctx.json)
    ctx.out << Json{{"v", 1}, {"scheme", kind.label()}, {"k", a.k}, {"i", a.i}, {"j", a.j}, {"count", count}}.dump()
            << "\n";
  else
    ctx.out << count << "\n";
  return kExitOk;
}

void share_flags(CLI::App* app) {
  app->fallthrough();
  for (auto* sub : app->get_subcommands({})) share_flags(sub);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean Farey sequences, tope committees and association-scheme parameters", "omc"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Structured JSON output on stdout");
  app.add_flag("--force", ctx.force, "Disable resource guards");

  // farey
  FareyArgs fa;
  auto* farey = app.add_subcommand("farey", "Farey sequences and their Boolean subsequences");
  farey->require_subcommand(1);
  auto* gen = farey->add_subcommand("gen", "Print a sequence, one fraction per line");
  gen->add_option("--kind", fa.kind, "standard | boolean | numbound")
      ->check(CLI::IsMember({"standard", "boolean", "numbound"}))
      ->capture_default_str();
  gen->add_option("--n", fa.n, "Maximal denominator")->required();
  gen->add_option("--m", fa.m, "Numerator bound (boolean, numbound)");
  auto* neighbors = farey->add_subcommand("neighbors", "Predecessor and successor in F(B(n),m)");
  neighbors->add_option("--m", fa.m)->required();
  neighbors->add_option("--n", fa.n, "Defaults to 2m");
  neighbors->add_option("--frac", fa.frac, "h/k")->required();
  auto* maps = farey->add_subcommand("maps", "Bijections between the halves of F(B(2m),m) and F_m");
  maps->add_option("--m", fa.m)->required();
  auto* fverify = farey->add_subcommand("verify", "Run the Farey suite for 2 <= m <= m-max");
  fverify->add_option("--m-max", fa.m_max)->capture_default_str();

  // om
  std::string topes_path;
  auto* om = app.add_subcommand("om", "Tope sets of simple oriented matroids");
  om->require_subcommand(1);
  auto* from_arr = om->add_subcommand("from-arrangement", "Topes of a central arrangement file");
  from_arr->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* validate = om->add_subcommand("validate", "Check a topes file");
  validate->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* info = om->add_subcommand("info", "Ground size, tope count, acyclicity and halfspace sizes");
  info->add_option("file", topes_path)->required()->check(CLI::ExistingFile);

  // committees
  std::size_t layer = 0;
  bool no_opposites = false;
  auto* committees = app.add_subcommand("committees", "Tope committees of a topes file");
  committees->require_subcommand(1);
  auto* enumerate = committees->add_subcommand("enumerate", "Committees of one size");
  enumerate->add_option("--layer", layer)->required();
  enumerate->add_flag("--no-opposites", no_opposites, "Skip subsets containing an opposite pair");
  enumerate->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* minimal = committees->add_subcommand("minimal", "Inclusion-minimal committees");
  minimal->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* all = committees->add_subcommand("all", "Every committee, by size");
  all->add_flag("--no-opposites", no_opposites, "Skip subsets containing an opposite pair");
  all->add_option("file", topes_path)->required()->check(CLI::ExistingFile);

  // schemes
  SchemeArgs sa;
  auto* schemes = app.add_subcommand("schemes", "Johnson, crosspolytope-layer and Hamming parameters");
  schemes->require_subcommand(1);
  const auto add_scheme_options = [&](CLI::App* sub) {
    sub->add_option("--kind", sa.kind, "johnson | crosspolytope | hamming")
        ->check(CLI::IsMember({"johnson", "crosspolytope", "hamming"}))
        ->capture_default_str();
    sub->add_option("--n", sa.n, "Johnson ground size");
    sub->add_option("--m", sa.m, "Crosspolytope or Hamming dimension");
    sub->add_option("--d", sa.d, "Johnson subset size or crosspolytope layer (defaults to m)");
  };
  auto* params = schemes->add_subcommand("params", "Valencies and intersection numbers from the closed forms");
  add_scheme_options(params);
  auto* oracle = schemes->add_subcommand("oracle", "Exhaustive count of z with dist(z,x)=i, dist(z,y)=j");
  add_scheme_options(oracle);
  oracle->add_option("--k", sa.k)->required();
  oracle->add_option("--i", sa.i)->required();
  oracle->add_option("--j", sa.j)->required();

  // verify
  int max_n = 10, max_m = 6;
  auto* verify = app.add_subcommand("verify", "Verification suites; one PASS/FAIL line per check");
  verify->require_subcommand(1);
  auto* v_layers = verify->add_subcommand("layers", "Layer and fraction decompositions of the committees");
  v_layers->alias("prop8");
  v_layers->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* v_free = verify->add_subcommand("opposite-free", "Decompositions of the opposite-free committees");
  v_free->alias("thm9");
  v_free->add_option("file", topes_path)->required()->check(CLI::ExistingFile);
  auto* v_schemes = verify->add_subcommand("schemes", "Closed forms against exhaustive oracles");
  v_schemes->add_option("--max-n", max_n, "Largest Johnson n")->capture_default_str();
  v_schemes->add_option("--max-m", max_m, "Largest crosspolytope and Hamming m")->capture_default_str();
  auto* v_all = verify->add_subcommand("all", "Farey suite (m <= 16) and scheme suite");

  share_flags(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (ctx.force) err << "warning: --force disables resource guards\n";

  try {
    if (*gen) return farey_gen(ctx, fa);
    if (*neighbors) return farey_neighbors(ctx, fa);
    if (*maps) return farey_maps(ctx, fa);
    if (*fverify) return farey_verify(ctx, fa);

    if (*from_arr) return print_topes(ctx, from_central_arrangement(parse_arrangement(read_file(topes_path)), ctx.force));
    if (*validate) return om_validate(ctx, parse_topes(read_file(topes_path)));
    if (*info) return om_info(ctx, parse_topes(read_file(topes_path)));

    if (*enumerate) {
      const ToposSystem sys = parse_topes(read_file(topes_path));
      CommitteeFamily family;
      family.no_opposites = no_opposites;
      family.layers[layer] = enumerate_layer(sys, layer, {.no_opposites = no_opposites, .force = ctx.force});
      return print_family(ctx, family);
    }
    if (*minimal) return print_family(ctx, without_empty_layers(minimal_committees(parse_topes(read_file(topes_path)), ctx.force)));
    if (*all)
      return print_family(ctx, without_empty_layers(enumerate_all(parse_topes(read_file(topes_path)),
                                                                  {.no_opposites = no_opposites, .force = ctx.force})));

    if (*params) return scheme_params(ctx, sa);
    if (*oracle) return scheme_oracle_cmd(ctx, sa);

    if (*v_layers) return emit_report(ctx, verify_layer_decomposition(parse_topes(read_file(topes_path)), ctx.force));
    if (*v_free)
      return emit_report(ctx, verify_opposite_free_decomposition(parse_topes(read_file(topes_path)), ctx.force));
    if (*v_schemes) return emit_report(ctx, verify_schemes(max_n, max_m, ctx.force));
    if (*v_all) {
      Report r("all");
      r.merge(farey_suite(16));
      r.merge(verify_schemes(10, 6, ctx.force));
      return emit_report(ctx, r);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.kind());
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace omc
