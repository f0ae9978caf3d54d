#include <chrono>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "shq/cli.hpp"

namespace shq::cli {

namespace {

Json conflict_json(const std::optional<Conflict>& c) {
  if (!c) return nullptr;
  return {{"element", c->element}, {"first_value", c->first_value}, {"second_value", c->second_value}};
}

Json table(std::vector<std::string> columns, Json rows) {
  return {{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

ReportEntry no_witness(const std::string& subject, const std::string& check, const NoWitness& nw) {
  ReportEntry e{subject, check, "no-witness", nw.reason};
  if (nw.conflict) e.certificates["conflict"] = conflict_json(nw.conflict);
  return e;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.max_order && *cfg.max_order <= 0) throw UsageError("--max-order must be positive");
    if (cfg.cap && *cfg.cap == 0) throw UsageError("--cap must be positive");
    env_ = load_model(cfg.inputs);
    exec_ = cfg.serial ? Exec::serial : Exec::parallel;
  }

  Report run() {
    report_.command = cfg_.what.empty() ? cfg_.command : cfg_.command + " " + cfg_.what;
    report_.parameters = parameters();
    if (cfg_.command == "check") {
      check();
    } else if (cfg_.command == "construct") {
      construct();
    } else if (cfg_.command == "verify") {
      verify();
    } else if (cfg_.command == "scan") {
      scan();
    } else if (cfg_.command == "search-counterexample") {
      search();
    } else {
      throw UsageError("unknown command '" + cfg_.command + "'");
    }
    return std::move(report_);
  }

 private:
  Json parameters() const {
    Json p = Json::object();
    auto opt = [&](const char* key, const auto& v) {
      if (v) p[key] = *v;
    };
    opt("lemma", cfg_.lemma);
    opt("graph", cfg_.graph);
    opt("span", cfg_.span);
    opt("pair", cfg_.pair);
    if (!cfg_.maps.empty()) p["maps"] = cfg_.maps;
    opt("variety", cfg_.variety);
    opt("max_order", cfg_.max_order);
    opt("cap", cfg_.cap);
    if (!cfg_.inputs.empty()) {
      Json in = Json::array();
      for (const auto& path : cfg_.inputs) in.push_back(path.generic_string());
      p["inputs"] = std::move(in);
    }
    if (cfg_.allow_non_normal) p["allow_non_normal"] = true;
    if (cfg_.audit) p["audit"] = true;
    return p;
  }

  void add(ReportEntry e) {
    if (e.verdict == "fail") report_.exit_code = 1;
    report_.verdicts.push_back(std::move(e));
  }

  // -------------------------------------------------------------------------
  // Name resolution: the model first, then the built-in fixtures.

  ReflexiveGraph graph(const std::string& name) const {
    if (auto it = env_.graphs.find(name); it != env_.graphs.end()) return it->second;
    if (auto g = catalog::named_graph(name)) return *g;
    throw UsageError("unknown graph '" + name + "'");
  }

  Span span(const std::string& name) const {
    if (auto it = env_.spans.find(name); it != env_.spans.end()) return it->second;
    if (auto it = env_.graphs.find(name); it != env_.graphs.end()) return span_of(it->second);
    if (auto s = catalog::named_span(name)) return *s;
    throw UsageError("unknown span '" + name + "'");
  }

  catalog::RelationPair pair(const std::string& name) const {
    if (auto it = env_.relpairs.find(name); it != env_.relpairs.end()) return it->second;
    if (auto it = env_.graphs.find(name); it != env_.graphs.end()) {
      return {name, kernel_pair(it->second.d), kernel_pair(it->second.c)};
    }
    if (auto p = catalog::named_relpair(name)) return *p;
    if (auto g = catalog::named_graph(name)) return {name, kernel_pair(g->d), kernel_pair(g->c)};
    throw UsageError("unknown relation pair '" + name + "'");
  }

  Homomorphism hom(const std::string& name) const {
    if (auto it = env_.homs.find(name); it != env_.homs.end()) return it->second;
    throw UsageError("unknown hom '" + name + "'");
  }

  std::vector<Homomorphism> maps(std::size_t n, const char* shape) const {
    if (cfg_.maps.size() != n) {
      throw UsageError(std::string("--maps expects ") + std::to_string(n) + " homs: " + shape);
    }
    std::vector<Homomorphism> out;
    for (const auto& m : cfg_.maps) out.push_back(hom(m));
    return out;
  }

  const std::string& need(const std::optional<std::string>& v, const char* flag) const {
    if (!v) throw UsageError(report_.command + " needs " + flag);
    return *v;
  }

  // -------------------------------------------------------------------------
  // check

  void check() {
    const std::string& w = cfg_.what;
    if (w == "huq") return check_huq();
    if (w == "smith") return check_smith();
    if (w == "star") return check_star();
    if (w == "peiffer") return check_peiffer();
    if (w == "groupoid") return check_groupoid();
    throw UsageError("check: unknown structure '" + w + "' (huq, smith, star, peiffer, groupoid)");
  }

  void check_huq() {
    std::string subject;
    std::optional<Homomorphism> k, l;
    if (cfg_.graph) {
      ReflexiveGraph g = graph(*cfg_.graph);
      GraphKernels K = validate_reflexive_graph(g);
      subject = g.name;
      k = K.k;
      l = K.l;
    } else if (cfg_.pair) {
      catalog::RelationPair rp = pair(*cfg_.pair);
      subject = rp.name;
      k = normalisation(rp.R);
      l = normalisation(rp.S);
    } else {
      if (cfg_.maps.empty()) throw UsageError("check huq needs --graph, --pair or --maps k,l");
      auto m = maps(2, "k l");
      subject = cfg_.maps[0] + "," + cfg_.maps[1];
      k = m[0];
      l = m[1];
    }
    auto res = huq_commutes(*k, *l, cfg_.allow_non_normal);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(subject, "huq", *nw));
    const HuqWitness& hw = std::get<HuqWitness>(res);
    ReportEntry e{subject, "huq", "witness", "phi <1,0> = k, phi <0,1> = l"};
    e.certificates["phi"] = hw.phi.map();
    Json rows = Json::array();
    for (int p = 0; p < hw.product.object->order(); ++p) {
      auto [x, y] = hw.product.elements[p];
      rows.push_back({hw.k(x), hw.l(y), hw.phi(p)});
    }
    e.certificates["table"] = table({"k(x)", "l(y)", "phi(x,y)"}, std::move(rows));
    add(std::move(e));
  }

  void check_smith() {
    catalog::RelationPair rp = cfg_.pair ? pair(*cfg_.pair) : pair(need(cfg_.graph, "--pair or --graph"));
    auto res = smith_commutes(rp.R, rp.S);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(rp.name, "smith", *nw));
    const SmithConnector& sc = std::get<SmithConnector>(res);
    ReportEntry e{rp.name, "smith", "witness", "theta(a,b,b) = a, theta(b,b,g) = g"};
    e.certificates["theta"] = sc.theta.map();
    Json rows = Json::array();
    for (int p = 0; p < sc.RS.object()->order(); ++p) {
      auto t = sc.triple(p);
      rows.push_back({t[0], t[1], t[2], sc.theta(p)});
    }
    e.certificates["table"] = table({"a", "b", "g", "theta"}, std::move(rows));
    add(std::move(e));
  }

  void check_star() {
    ReflexiveGraph g = graph(need(cfg_.graph, "--graph"));
    GraphKernels K = validate_reflexive_graph(g);
    auto res = star_multiplication(g);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(g.name, "star", *nw));
    const StarMult& sm = std::get<StarMult>(res);
    ReportEntry e{g.name, "star", "witness", "sigma(x, 0) = x, sigma(e h x, x) = x"};
    e.certificates["sigma"] = sm.sigma.map();
    Json rows = Json::array();
    for (int p = 0; p < sm.domain.object()->order(); ++p) {
      auto [a, x] = sm.domain.pairs.elements[p];
      rows.push_back({a, K.k(x), K.k(sm.sigma(p))});
    }
    e.certificates["table"] = table({"a", "k(x)", "k(sigma)"}, std::move(rows));
    FibrationSquares sq = fibration_squares(g, sm);
    e.certificates["cofibration_pullback"] = sq.cofibration.is_pullback;
    if (sq.fibration) e.certificates["fibration_pullback"] = sq.fibration->is_pullback;
    add(std::move(e));
  }

  void check_peiffer() {
    ReflexiveGraph g = graph(need(cfg_.graph, "--graph"));
    GraphKernels K = validate_reflexive_graph(g);
    auto res = peiffer_structure(g);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(g.name, "peiffer", *nw));
    const PeifferStruct& ps = std::get<PeifferStruct>(res);
    ReportEntry e{g.name, "peiffer", "witness", "omega <1,0> = k, omega <1,1> = e h"};
    e.certificates["omega"] = ps.omega.map();
    Json rows = Json::array();
    for (int p = 0; p < ps.XX.object->order(); ++p) {
      auto [x, y] = ps.XX.elements[p];
      rows.push_back({K.k(x), K.k(y), ps.omega(p)});
    }
    e.certificates["table"] = table({"k(x)", "k(y)", "omega"}, std::move(rows));
    add(std::move(e));
  }

  void check_groupoid() {
    ReflexiveGraph g = graph(need(cfg_.graph, "--graph"));
    auto res = groupoid_composition(g);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(g.name, "groupoid", *nw));
    const GroupoidComp& gc = std::get<GroupoidComp>(res);
    ReportEntry e{g.name, "groupoid", "witness", "units, associativity and inverses checked"};
    e.certificates["m"] = gc.m.map();
    e.certificates["inverse"] = gc.inverse;
    e.certificates["connector_route_ran"] = gc.connector_route_ran;
    e.certificates["routes_agree"] = gc.routes_agree;
    Json rows = Json::array();
    for (int p = 0; p < gc.composable.object()->order(); ++p) {
      auto [a, b] = gc.composable.pairs.elements[p];
      rows.push_back({a, b, gc.m(p)});
    }
    e.certificates["table"] = table({"a", "b", "a.b"}, std::move(rows));
    add(std::move(e));
  }

  // -------------------------------------------------------------------------
  // construct

  void construct() {
    const std::string& w = cfg_.what;
    if (w == "kernel-iso") return construct_kernel_iso();
    if (w == "rxs-graph") return construct_rxs();
    if (w == "pregroupoid") return construct_pregroupoid();
    throw UsageError("construct: unknown construction '" + w + "' (kernel-iso, rxs-graph, pregroupoid)");
  }

  static Json square_json(const PullbackCertificate& c) {
    Json j;
    j["is_pullback"] = c.is_pullback;
    j["criterion"] = to_string(c.criterion);
    if (c.kernel_map_iso) j["kernel_map_iso"] = *c.kernel_map_iso;
    return j;
  }

  void construct_kernel_iso() {
    ReflexiveGraph g = graph(need(cfg_.graph, "--graph"));
    GraphKernels K = validate_reflexive_graph(g);
    auto huq = huq_commutes(K.k, K.l);
    if (auto* nw = std::get_if<NoWitness>(&huq)) {
      return add({g.name, "kernel-iso", "precondition-unmet", "ker d and ker c do not commute: " + nw->reason});
    }
    KernelIso ki = kernel_isomorphism(g, std::get<HuqWitness>(huq));
    ReportEntry e{g.name, "kernel-iso", "pass", "j i = 1, i j = 1, both squares pullbacks"};
    e.certificates["i"] = ki.i.map();
    e.certificates["j"] = ki.j.map();
    e.certificates["square_x"] = square_json(ki.square_x);
    e.certificates["square_y"] = square_json(ki.square_y);
    Json rows = Json::array();
    for (int x = 0; x < K.X->order(); ++x) rows.push_back({K.k(x), K.l(ki.i(x))});
    e.certificates["table"] = table({"k(x)", "l(i x)"}, std::move(rows));
    add(std::move(e));
  }

  std::optional<HuqWitness> span_witness(const Span& sp, ReportEntry& e) {
    KernelData kd = kernel(sp.d);
    KernelData kc = kernel(sp.c);
    auto huq = huq_commutes(kd.inclusion, kc.inclusion);
    if (auto* nw = std::get_if<NoWitness>(&huq)) {
      e.verdict = "precondition-unmet";
      e.detail = "ker d and ker c do not commute: " + nw->reason;
      return std::nullopt;
    }
    return std::get<HuqWitness>(huq);
  }

  void construct_rxs() {
    Span sp = span(need(cfg_.span, "--span"));
    ReportEntry e{sp.name, "rxs-graph", "pass", ""};
    auto phi = span_witness(sp, e);
    if (!phi) return add(std::move(e));
    RxsGraph rx = build_rxs_graph(sp, *phi);
    e.detail = "reflexive graph on R[d] x R[c] with a Huq witness";
    e.certificates["triples"] = rx.triples.object()->order();
    e.certificates["d"] = rx.graph.d.map();
    e.certificates["c"] = rx.graph.c.map();
    e.certificates["e"] = rx.graph.e.map();
    e.certificates["phi"] = rx.witness.phi.map();
    add(std::move(e));
  }

  void construct_pregroupoid() {
    Span sp = span(need(cfg_.span, "--span"));
    ReportEntry e{sp.name, "pregroupoid", "pass", ""};
    auto phi = span_witness(sp, e);
    if (!phi) return add(std::move(e));
    auto res = pregroupoid_from_span(sp, *phi);
    if (auto* nw = std::get_if<NoWitness>(&res)) return add(no_witness(sp.name, "pregroupoid", *nw));
    const Pregroupoid& pg = std::get<Pregroupoid>(res);
    if (!pg.agrees_with_smith) {
      e.verdict = "fail";
      e.detail = "theta differs from the Smith connector";
    } else {
      e.detail = "theta equals the Smith connector";
    }
    e.certificates["theta"] = pg.connector.theta.map();
    Json rows = Json::array();
    for (int p = 0; p < pg.connector.RS.object()->order(); ++p) {
      auto t = pg.connector.triple(p);
      rows.push_back({t[0], t[1], t[2], pg.connector.theta(p)});
    }
    e.certificates["table"] = table({"a", "b", "g", "theta"}, std::move(rows));
    add(std::move(e));
  }

  // -------------------------------------------------------------------------
  // verify

  LemmaInstance instance(LemmaId id) const {
    switch (id) {
      case LemmaId::T1_3:
        return span(cfg_.span ? *cfg_.span : need(cfg_.graph, "--span or --graph"));
      case LemmaId::BG3_2:
        return pair(cfg_.pair ? *cfg_.pair : need(cfg_.graph, "--pair or --graph"));
      case LemmaId::L1_1: {
        auto m = maps(5, "f s f' a b");
        return KernelSquare{join(), m[0], m[1], m[2], m[3], m[4]};
      }
      case LemmaId::SSFL: {
        auto m = maps(6, "f s f' s' a b");
        return SsflDiagram{join(), m[0], m[1], m[2], m[3], m[4], m[5]};
      }
      case LemmaId::SA6: {
        auto m = maps(2, "m p");
        return DirectImage{join(), m[0], m[1]};
      }
      case LemmaId::L2_4: {
        auto m = maps(1, "g");
        for (const auto& [name, prod] : env_.products) {
          if (prod.object == m[0].dom() && same_algebra(prod.left, prod.right)) {
            return ProductMap{join(), prod, m[0]};
          }
        }
        throw UsageError("L2.4: the domain of '" + cfg_.maps[0] + "' is not a declared product X x X");
      }
      default:
        return graph(need(cfg_.graph, "--graph"));
    }
  }

  std::string join() const {
    std::string s;
    for (const auto& m : cfg_.maps) s += (s.empty() ? "" : ",") + m;
    return s;
  }

  void verify() {
    const std::string& text = need(cfg_.lemma, "--lemma");
    auto id = parse_lemma(text);
    if (!id) throw UsageError("unknown lemma '" + text + "'");
    std::vector<VerificationReport> reports;
    const bool single = cfg_.graph || cfg_.span || cfg_.pair || !cfg_.maps.empty();
    if (single) {
      reports.push_back(verify_lemma(*id, instance(*id)));
    } else {
      InstanceBounds b;
      if (cfg_.variety) b.variety = *cfg_.variety;
      if (cfg_.max_order) b.max_order = *cfg_.max_order;
      if (cfg_.cap) b.cap = *cfg_.cap;
      reports = run_lemma_suite(*id, b, exec_).reports;
    }
    std::size_t passed = 0, failed = 0, unmet = 0;
    for (auto& r : reports) {
      switch (r.verdict) {
        case Verdict::pass: ++passed; break;
        case Verdict::fail: ++failed; break;
        case Verdict::precondition_unmet: ++unmet; break;
      }
      add({r.instance, to_string(r.lemma), to_string(r.verdict), r.detail, std::move(r.certificates)});
    }
    report_.summary["instances"] = reports.size();
    report_.summary["pass"] = passed;
    report_.summary["fail"] = failed;
    report_.summary["precondition-unmet"] = unmet;
  }

  // -------------------------------------------------------------------------
  // scan

  void scan() {
    ScanOptions o;
    if (cfg_.variety) o.variety = *cfg_.variety;
    if (cfg_.max_order) o.max_order = *cfg_.max_order;
    if (cfg_.cap) o.cap = *cfg_.cap;
    o.exec = exec_;
    if (cfg_.audit) o.audit = AuditOptions{};
    ScanReport rep = scan_equivalence(o);

    std::map<std::string, std::vector<const Discrepancy*>> by_graph;
    for (const auto& d : rep.discrepancies) by_graph[d.graph].push_back(&d);
    for (const auto& row : rep.rows) {
      ReportEntry e{row.graph, "equivalence", "consistent", ""};
      auto it = by_graph.find(row.graph);
      if (it != by_graph.end()) {
        e.verdict = "discrepancy";
        for (const auto* d : it->second) e.detail += (e.detail.empty() ? "" : "; ") + d->kind + ": " + d->detail;
      }
      e.certificates = {{"star", row.star},           {"peiffer", row.peiffer},
                        {"huq", row.huq},             {"smith", row.smith},
                        {"groupoid", row.groupoid},   {"huq_normalisations", row.huq_normalisations}};
      if (!row.groupoid_note.empty()) e.certificates["groupoid_note"] = row.groupoid_note;
      report_.verdicts.push_back(std::move(e));
    }

    Json& s = report_.summary;
    s["variety"] = rep.variety;
    s["algebras"] = rep.algebras;
    s["pairs_examined"] = rep.pairs_examined;
    s["cap_hit"] = rep.cap_hit;
    s["rows"] = rep.rows.size();
    s["star"] = rep.count(&ScanRow::star);
    s["peiffer"] = rep.count(&ScanRow::peiffer);
    s["huq"] = rep.count(&ScanRow::huq);
    s["smith"] = rep.count(&ScanRow::smith);
    s["groupoid"] = rep.count(&ScanRow::groupoid);
    Json disc = Json::array();
    for (const auto& d : rep.discrepancies) disc.push_back(d.graph + " " + d.kind + ": " + d.detail);
    s["discrepancies"] = std::move(disc);
    s["sm_failures"] = rep.sm_failures;
    if (rep.audit) {
      const AuditTotals& a = *rep.audit;
      s["audit"] = {{"searches", a.searches},
                    {"constrained_checked", a.constrained_checked},
                    {"constrained_disagreements", a.constrained_disagreements},
                    {"successful", a.successful},
                    {"uniqueness_checked", a.uniqueness_checked},
                    {"uniqueness_skipped", a.uniqueness_skipped},
                    {"uniqueness_violations", a.uniqueness_violations},
                    {"problems", a.problems}};
    }
    const bool audit_bad = rep.audit && !rep.audit->problems.empty();
    if (!rep.discrepancies.empty() || !rep.sm_failures.empty() || audit_bad) report_.exit_code = 1;
  }

  // -------------------------------------------------------------------------
  // search-counterexample

  void search() {
    CounterexampleOptions o;
    if (cfg_.variety) o.variety = *cfg_.variety;
    if (cfg_.max_order) o.max_order = *cfg_.max_order;
    if (cfg_.cap) o.cap = *cfg_.cap;
    o.exec = exec_;
    CounterexampleResult res = search_counterexample(o);

    Json& s = report_.summary;
    s["variety"] = res.variety;
    s["algebras"] = res.algebras;
    s["pairs"] = res.pairs;
    s["graphs"] = res.graphs;
    s["huq_commuting"] = res.huq_commuting;
    s["cap_hit"] = res.cap_hit;
    if (!res.hit) {
      add({"-", "counterexample", "exhausted",
           res.cap_hit ? "cap reached before the bounds were exhausted" : "no star-multiplicative non-groupoid"});
      return;
    }
    ReportEntry e{res.hit->graph.name, "counterexample", "found", "", res.hit->certificates};
    e.certificates["revalidated"] = res.revalidated;
    if (!res.revalidated) {
      e.verdict = "fail";
      e.detail = "candidate failed oracle re-validation";
    } else if (res.variety == "group") {
      e.verdict = "fail";
      e.detail = "groups cannot contain a counterexample";
    } else {
      e.detail = "Huq-commuting kernels whose kernel pairs have no Smith connector";
    }
    add(std::move(e));
  }

  const RunConfig& cfg_;
  Model env_;
  Exec exec_ = Exec::parallel;
  Report report_;
};

}  // namespace

Report execute(const RunConfig& config) { return Runner(config).run(); }

RunResult run(const RunConfig& config) {
  RunResult res;
  const auto start = std::chrono::steady_clock::now();
  try {
    Report r = execute(config);
    res.exit_code = r.exit_code;
    if (config.format == Format::structured) {
      res.out = render_structured(r);
    } else {
      std::ostringstream os;
      os << render_text(r);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      os << "time: " << std::fixed << std::setprecision(3) << dt.count() << " s\n";
      res.out = os.str();
    }
  } catch (const InternalInconsistency& e) {
    res.exit_code = 1;
    res.err = std::string("inconsistency: ") + e.what() + "\n";
  } catch (const Error& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

RunResult run_args(const std::vector<std::string>& args) {
  CLI::App app{"Finite-algebra checks for internal graphs, groupoids and commutators", "shq"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> inputs;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", inputs, "model file (repeatable)");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--serial", cfg.serial, "disable OpenMP");
  };
  auto instance_flags = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "reflexive graph name");
    sub->add_option("--span", cfg.span, "span name");
    sub->add_option("--pair", cfg.pair, "relation pair name");
    sub->add_option("--maps", cfg.maps, "hom names")->delimiter(',');
  };
  auto bounds = [&](CLI::App* sub) {
    sub->add_option("--variety", cfg.variety, "group or digroup");
    sub->add_option("--max-order", cfg.max_order, "largest algebra order");
    sub->add_option("--cap", cfg.cap, "instance cap");
  };

  auto* check = app.add_subcommand("check", "search for a structure on one instance");
  check->add_option("structure", cfg.what, "huq, smith, star, peiffer or groupoid")->required();
  check->add_flag("--allow-non-normal", cfg.allow_non_normal, "accept non-normal monomorphisms in huq");
  common(check);
  instance_flags(check);

  auto* construct = app.add_subcommand("construct", "build a derived object from one instance");
  construct->add_option("construction", cfg.what, "kernel-iso, rxs-graph or pregroupoid")->required();
  common(construct);
  instance_flags(construct);

  auto* verify = app.add_subcommand("verify", "check a lemma on one instance or on catalog instances");
  verify->add_option("--lemma", cfg.lemma, "lemma id")->required();
  common(verify);
  instance_flags(verify);
  bounds(verify);

  auto* scan = app.add_subcommand("scan", "census of reflexive graphs over a catalog");
  scan->add_flag("--audit", cfg.audit, "cross-check every search against the enumeration oracle");
  common(scan);
  bounds(scan);

  auto* search = app.add_subcommand("search-counterexample", "look for a star-multiplicative non-groupoid");
  common(search);
  bounds(search);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  RunResult res;
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    res.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "structured" ? Format::structured : Format::text;
  for (const auto& p : inputs) cfg.inputs.emplace_back(p);
  return run(cfg);
}

}  // namespace shq::cli
