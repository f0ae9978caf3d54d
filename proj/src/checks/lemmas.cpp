#include <algorithm>
#include <set>

#include "shq/checks.hpp"

namespace shq {

namespace {

struct LemmaName {
  LemmaId id;
  const char* text;
};

constexpr LemmaName kLemmaNames[] = {
    {LemmaId::L1_1, "L1.1"}, {LemmaId::L1_2, "L1.2"}, {LemmaId::P2_2, "P2.2"},
    {LemmaId::L2_3, "L2.3"}, {LemmaId::L2_4, "L2.4"}, {LemmaId::L2_5, "L2.5"},
    {LemmaId::L2_6, "L2.6"}, {LemmaId::P2_7, "P2.7"}, {LemmaId::T1_3, "T1.3"},
    {LemmaId::T2_8, "T2.8"}, {LemmaId::SSFL, "SSFL"}, {LemmaId::SA6, "SA6"},
    {LemmaId::BG3_2, "BG3.2"},
};

Json map_json(const Homomorphism& h) { return Json(h.map()); }

}  // namespace

const char* to_string(LemmaId id) {
  for (const auto& n : kLemmaNames) {
    if (n.id == id) return n.text;
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(const std::string& s) {
  for (const auto& n : kLemmaNames) {
    if (s == n.text) return n.id;
  }
  return std::nullopt;
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> v;
    for (const auto& n : kLemmaNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::precondition_unmet: return "precondition-unmet";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::precondition_unmet}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

std::string instance_name(const LemmaInstance& inst) {
  return std::visit([](const auto& x) { return x.name; }, inst);
}

// ---------------------------------------------------------------------------

namespace {

using Report = VerificationReport;

void unmet(Report& r, std::string why) {
  r.verdict = Verdict::precondition_unmet;
  r.detail = std::move(why);
}

void fail(Report& r, std::string why) {
  r.verdict = Verdict::fail;
  r.detail = std::move(why);
}

void pass(Report& r, std::string what = {}) {
  r.verdict = Verdict::pass;
  r.detail = std::move(what);
}

Json pullback_json(const PullbackCertificate& c) {
  Json j;
  j["is_pullback"] = c.is_pullback;
  if (c.missed) j["missed"] = *c.missed;
  if (c.collision) j["collision"] = {c.collision->first, c.collision->second};
  j["criterion"] = to_string(c.criterion);
  if (c.kernel_map_iso) j["kernel_map_iso"] = *c.kernel_map_iso;
  return j;
}

bool is_split(const Homomorphism& f, const Homomorphism& s) {
  return same_algebra(f.dom(), s.cod()) && same_algebra(f.cod(), s.dom()) &&
         compose(f, s) == identity(f.cod());
}

void verify_l11(Report& r, const KernelSquare& q) {
  if (!is_split(q.f, q.s)) return unmet(r, "s is not a section of f");
  if (!same_algebra(q.a.cod(), q.fp.dom()) || !same_algebra(q.b.cod(), q.fp.cod()) ||
      !same_algebra(q.a.dom(), q.f.dom()) || !same_algebra(q.b.dom(), q.f.cod())) {
    throw PreconditionError("L1.1: the maps do not form a square");
  }
  if (!(compose(q.b, q.f) == compose(q.fp, q.a))) return unmet(r, "b f != f' a");
  PullbackCertificate cert = is_pullback_square({q.f, q.a, q.b, q.fp, q.s});
  r.certificates = pullback_json(cert);
  if (*cert.kernel_map_iso != cert.is_pullback) {
    return fail(r, std::string("kernel map is ") + (*cert.kernel_map_iso ? "" : "not ") +
                       "an isomorphism but the square is " + (cert.is_pullback ? "" : "not ") +
                       "a pullback");
  }
  pass(r, cert.is_pullback ? "pullback, kernel map iso" : "not a pullback, kernel map not iso");
}

void verify_l12(Report& r, const ReflexiveGraph& g) {
  GraphKernels K = validate_reflexive_graph(g);
  auto huq = huq_commutes(K.k, K.l);
  if (!found(huq)) return unmet(r, "ker d and ker c do not commute");
  KernelIso iso = kernel_isomorphism(g, std::get<HuqWitness>(huq));
  const bool eqs = compose(iso.j, iso.i) == identity(K.X) && compose(iso.i, iso.j) == identity(K.Y) &&
                   compose(K.h, iso.j) == compose(g.d, K.l) &&
                   K.h == compose(g.d, compose(K.l, iso.i));
  r.certificates["i"] = map_json(iso.i);
  r.certificates["j"] = map_json(iso.j);
  r.certificates["square_x"] = pullback_json(iso.square_x);
  r.certificates["square_y"] = pullback_json(iso.square_y);
  if (!eqs) return fail(r, "i and j fail the four equations");
  if (!iso.square_x.is_pullback || !iso.square_y.is_pullback) return fail(r, "square is not a pullback");
  pass(r, "both squares are pullbacks; X and Y isomorphic");
}

void verify_p22(Report& r, const ReflexiveGraph& g) {
  auto star = star_multiplication(g);
  auto peiffer = peiffer_structure(g);
  r.certificates["star"] = found(star);
  r.certificates["peiffer"] = found(peiffer);
  if (found(star) != found(peiffer)) return fail(r, "exactly one of the two structures exists");
  if (!found(star)) return pass(r, "neither structure exists");
  const auto& s = std::get<StarMult>(star);
  const auto& w = std::get<PeifferStruct>(peiffer);
  auto w2 = std::get<PeifferStruct>(convert_structure(g, s, StructureKind::peiffer));
  auto s2 = std::get<StarMult>(convert_structure(g, w, StructureKind::star));
  r.certificates["sigma"] = map_json(s.sigma);
  r.certificates["omega"] = map_json(w.omega);
  if (w2.omega.map() != w.omega.map()) return fail(r, "pi0 <sigma, pi1>^-1 differs from omega");
  if (s2.sigma.map() != s.sigma.map()) return fail(r, "pi0 <omega, pi1>^-1 differs from sigma");
  pass(r, "both structures exist and convert into each other");
}

std::optional<PeifferStruct> peiffer_or_unmet(Report& r, const ReflexiveGraph& g) {
  auto p = peiffer_structure(g);
  if (!found(p)) {
    unmet(r, "graph is not Peiffer");
    return std::nullopt;
  }
  return std::get<PeifferStruct>(std::move(p));
}

void verify_l23(Report& r, const ReflexiveGraph& g) {
  auto w = peiffer_or_unmet(r, g);
  if (!w) return;
  GraphKernels K = validate_reflexive_graph(g);
  const Product& xx = w->XX;
  if (!(compose(g.d, w->omega) == compose(K.h, xx.proj_right()))) {
    return fail(r, "d omega != h pi1");
  }
  if (!(compose(g.c, w->omega) == compose(K.h, xx.proj_left()))) {
    return fail(r, "c omega != h pi0");
  }
  PullbackCertificate cert = is_pullback_square({xx.proj_right(), w->omega, K.h, g.d, xx.inj_right()});
  r.certificates["square_d"] = pullback_json(cert);
  if (!cert.is_pullback) return fail(r, "the square d omega = h pi1 is not a pullback");
  pass(r, "both squares commute; d omega = h pi1 is a pullback");
}

void verify_l24(Report& r, const ProductMap& pm) {
  const Product& xx = pm.XX;
  if (!same_algebra(pm.g.dom(), xx.object) || !same_algebra(xx.left, xx.right)) {
    throw PreconditionError("L2.4: map is not defined on X x X");
  }
  if (!compose(pm.g, xx.inj_right()).is_zero()) return unmet(r, "g <0, 1> != 0");
  Homomorphism g0 = compose(pm.g, xx.inj_left());
  r.certificates["g0"] = map_json(g0);
  for (int p = 0; p < xx.object->order(); ++p) {
    if (pm.g(p) != g0(xx.elements[p].first)) {
      r.certificates["element"] = p;
      return fail(r, "g differs from g0 pi0 at element " + std::to_string(p));
    }
  }
  if (!(compose(pm.g, xx.pair(identity(xx.left), identity(xx.left))) == g0)) {
    return fail(r, "g <1, 1> != g0");
  }
  pass(r, "g = g0 pi0");
}

void verify_l25(Report& r, const ReflexiveGraph& g) {
  auto w = peiffer_or_unmet(r, g);
  if (!w) return;
  Homomorphism u0 = compose(w->omega, w->XX.inj_right());
  if (!compose(g.c, u0).is_zero()) return fail(r, "c omega <0, 1> != 0");
  Cokernel q = cokernel(u0);
  Congruence kc = kernel_congruence(g.c);
  r.certificates["cokernel_blocks"] = q.congruence.num_blocks();
  r.certificates["c_blocks"] = kc.num_blocks();
  if (!g.c.is_surjective()) return fail(r, "c is not surjective");
  for (int x = 0; x < g.C1->order(); ++x) {
    if (q.congruence.block[x] != kc.block[x]) {
      r.certificates["element"] = x;
      return fail(r, "cokernel and c separate element " + std::to_string(x) + " differently");
    }
  }
  pass(r, "c is the cokernel of omega <0, 1>");
}

void verify_l26(Report& r, const ReflexiveGraph& g) {
  auto w = peiffer_or_unmet(r, g);
  if (!w) return;
  GraphKernels K = validate_reflexive_graph(g);
  const Product& xx = w->XX;
  if (!(compose(g.c, w->omega) == compose(K.h, xx.proj_left()))) {
    return fail(r, "c omega != h pi0");
  }
  PullbackCertificate cert = is_pullback_square({xx.proj_left(), w->omega, K.h, g.c, xx.inj_left()});
  r.certificates["square_c"] = pullback_json(cert);
  if (!cert.is_pullback) return fail(r, "the square c omega = h pi0 is not a pullback");
  pass(r, "the square c omega = h pi0 is a pullback");
}

void verify_p27(Report& r, const ReflexiveGraph& g) {
  GraphKernels K = validate_reflexive_graph(g);
  auto star = star_multiplication(g);
  auto peiffer = peiffer_structure(g);
  auto huq = huq_commutes(K.k, K.l);
  r.certificates["star"] = found(star);
  r.certificates["peiffer"] = found(peiffer);
  r.certificates["huq"] = found(huq);
  if (found(star) != found(peiffer) || found(peiffer) != found(huq)) {
    return fail(r, "the three structures do not agree");
  }
  if (!found(huq)) return pass(r, "no structure exists");
  const auto& w = std::get<PeifferStruct>(peiffer);
  const auto& phi = std::get<HuqWitness>(huq);
  auto w2 = std::get<PeifferStruct>(convert_structure(g, phi, StructureKind::peiffer));
  auto phi2 = std::get<HuqWitness>(convert_structure(g, w, StructureKind::huq));
  if (w2.omega.map() != w.omega.map()) return fail(r, "phi (1 x i) differs from omega");
  if (phi2.phi.map() != phi.phi.map()) return fail(r, "omega (1 x u) differs from phi");
  r.certificates["phi"] = map_json(phi.phi);
  pass(r, "all three structures exist and convert into each other");
}

void verify_t13(Report& r, const Span& sp) {
  KernelData kd = kernel(sp.d);
  KernelData kc = kernel(sp.c);
  auto huq = huq_commutes(kd.inclusion, kc.inclusion);
  if (!found(huq)) return unmet(r, "ker d and ker c do not commute");
  auto pg = pregroupoid_from_span(sp, std::get<HuqWitness>(huq));
  auto sm = smith_commutes(kernel_pair(sp.d), kernel_pair(sp.c));
  r.certificates["pregroupoid"] = found(pg);
  r.certificates["smith"] = found(sm);
  if (found(pg) != found(sm)) return fail(r, "pregroupoid and Smith connector disagree on existence");
  if (!found(pg)) return pass(r, "the triples graph is not a groupoid and R[d], R[c] do not commute");
  const Pregroupoid& p = std::get<Pregroupoid>(pg);
  const SmithConnector& t = p.connector;
  for (int x = 0; x < t.RS.object()->order(); ++x) {
    auto [a, b, c] = t.triple(x);
    if ((b == c && t.theta(x) != a) || (a == b && t.theta(x) != c)) {
      r.certificates["triple"] = {a, b, c};
      return fail(r, "theta fails a Mal'tsev identity");
    }
  }
  r.certificates["triples"] = t.RS.object()->order();
  if (!p.agrees_with_smith) return fail(r, "theta differs from the Smith connector");
  pass(r, "pregroupoid theta equals the Smith connector");
}

void verify_t28(Report& r, const ReflexiveGraph& g) {
  auto star = star_multiplication(g);
  if (!found(star)) return unmet(r, "graph is not star-multiplicative");
  auto gr = groupoid_composition(g);
  r.certificates["groupoid"] = found(gr);
  if (found(gr)) return pass(r, "star-multiplicative graph is a groupoid");
  auto sm = smith_commutes(kernel_pair(g.d), kernel_pair(g.c));
  r.certificates["reason"] = std::get<NoWitness>(gr).reason;
  if (found(sm)) return fail(r, "R[d], R[c] commute but the graph is not a groupoid");
  pass(r, "star-multiplicative non-groupoid: ker d, ker c commute, R[d], R[c] do not");
}

void verify_ssfl(Report& r, const SsflDiagram& q) {
  if (!is_split(q.f, q.s) || !is_split(q.fp, q.sp)) return unmet(r, "rows are not split");
  if (!same_algebra(q.a.dom(), q.f.dom()) || !same_algebra(q.a.cod(), q.fp.dom()) ||
      !same_algebra(q.b.dom(), q.f.cod()) || !same_algebra(q.b.cod(), q.fp.cod())) {
    throw PreconditionError("SSFL: the maps do not form a diagram");
  }
  if (!(compose(q.fp, q.a) == compose(q.b, q.f)) || !(compose(q.a, q.s) == compose(q.sp, q.b))) {
    return unmet(r, "diagram does not commute");
  }
  KernelData k = kernel(q.f);
  KernelData kp = kernel(q.fp);
  std::vector<int> pos(q.fp.dom()->order(), -1);
  for (int y = 0; y < kp.object->order(); ++y) pos[kp.inclusion(y)] = y;
  std::vector<int> kappa(k.object->order());
  for (int x = 0; x < k.object->order(); ++x) kappa[x] = pos[q.a(k.inclusion(x))];
  Homomorphism kmap(k.object, kp.object, kappa, Provenance::induced);
  r.certificates["kernel_map"] = map_json(kmap);
  if (!kmap.is_bijective() || !q.b.is_bijective()) return unmet(r, "k or b is not an isomorphism");
  if (!q.a.is_bijective()) return fail(r, "a is not an isomorphism");
  pass(r, "a is an isomorphism");
}

void verify_sa6(Report& r, const DirectImage& q) {
  if (!same_algebra(q.m.cod(), q.p.dom())) throw PreconditionError("SA6: m and p are not composable");
  if (!q.m.is_injective() || !is_normal_mono(q.m)) return unmet(r, "m is not a normal monomorphism");
  if (!q.p.is_surjective()) return unmet(r, "p is not surjective");
  Factorization f = image_factorize(compose(q.p, q.m));
  r.certificates["image"] = image_set(f.mono);
  if (!is_normal_mono(f.mono)) return fail(r, "Im(p m) is not normal");
  pass(r, "Im(p m) is normal");
}

void verify_bg32(Report& r, const catalog::RelationPair& rp) {
  auto sm = smith_commutes(rp.R, rp.S);
  if (!found(sm)) return unmet(r, "R and S do not commute");
  auto huq = huq_commutes(normalisation(rp.R), normalisation(rp.S));
  r.certificates["huq"] = found(huq);
  if (!found(huq)) return fail(r, "normalisations do not commute");
  pass(r, "normalisations commute");
}

template <class T>
const T& shape(LemmaId id, const LemmaInstance& inst) {
  if (auto* p = std::get_if<T>(&inst)) return *p;
  throw PreconditionError(std::string(to_string(id)) + ": instance '" + instance_name(inst) +
                          "' has the wrong shape");
}

}  // namespace

VerificationReport verify_lemma(LemmaId id, const LemmaInstance& inst) {
  Report r;
  r.lemma = id;
  r.instance = instance_name(inst);
  try {
    switch (id) {
      case LemmaId::L1_1: verify_l11(r, shape<KernelSquare>(id, inst)); break;
      case LemmaId::L1_2: verify_l12(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::P2_2: verify_p22(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::L2_3: verify_l23(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::L2_4: verify_l24(r, shape<ProductMap>(id, inst)); break;
      case LemmaId::L2_5: verify_l25(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::L2_6: verify_l26(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::P2_7: verify_p27(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::T1_3: verify_t13(r, shape<Span>(id, inst)); break;
      case LemmaId::T2_8: verify_t28(r, shape<ReflexiveGraph>(id, inst)); break;
      case LemmaId::SSFL: verify_ssfl(r, shape<SsflDiagram>(id, inst)); break;
      case LemmaId::SA6: verify_sa6(r, shape<DirectImage>(id, inst)); break;
      case LemmaId::BG3_2: verify_bg32(r, shape<catalog::RelationPair>(id, inst)); break;
    }
  } catch (const InternalInconsistency& e) {
    fail(r, e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Instances

namespace {

std::vector<Homomorphism> surjections(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<Homomorphism> out;
  for (auto& h : enumerate_homs(a, b)) {
    if (h.is_surjective()) out.push_back(std::move(h));
  }
  return out;
}

// Order of C1 x_C0 C1 for the graph built from the span.
std::size_t rxs_composable_order(const Span& sp) {
  const int n = sp.C1->order();
  std::vector<std::size_t> nd(sp.C0->order(), 0), nc(sp.C0p->order(), 0);
  for (int x = 0; x < n; ++x) {
    ++nd[sp.d(x)];
    ++nc[sp.c(x)];
  }
  std::vector<std::size_t> by_dom(n, 0), by_cod(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (sp.d(a) == sp.d(b)) by_dom[a] += nc[sp.c(b)];
      if (sp.c(a) == sp.c(b)) by_cod[a] += nd[sp.d(b)];
    }
  }
  std::size_t total = 0;
  for (int a = 0; a < n; ++a) total += by_dom[a] * by_cod[a];
  return total;
}

void push_capped(std::vector<LemmaInstance>& out, std::size_t cap, LemmaInstance inst) {
  if (out.size() < cap) out.push_back(std::move(inst));
}

std::vector<LemmaInstance> graph_instances(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  auto census = catalog::enumerate_graphs(algebras, b.cap);
  std::vector<LemmaInstance> out;
  for (auto& g : census.graphs) out.emplace_back(std::move(g));
  return out;
}

std::vector<LemmaInstance> span_instances(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  std::vector<LemmaInstance> out;
  const GroupoidOptions limits;
  for (const auto& c1 : algebras) {
    std::vector<Homomorphism> legs;
    for (const auto& c0 : algebras) {
      if (c0->order() > c1->order()) continue;
      for (auto& h : surjections(c1, c0)) legs.push_back(std::move(h));
    }
    int index = 0;
    for (const auto& d : legs) {
      for (const auto& c : legs) {
        Span sp{c1->name() + ":" + std::to_string(index++), c1, d.cod(), c.cod(), d, c};
        if (rxs_composable_order(sp) > limits.max_composable_order) continue;
        push_capped(out, b.cap, std::move(sp));
        if (out.size() >= b.cap) return out;
      }
    }
  }
  return out;
}

std::vector<LemmaInstance> relpair_instances(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  std::vector<LemmaInstance> out;
  for (const auto& a : algebras) {
    std::vector<Homomorphism> quotients;
    std::set<std::vector<int>> seen;
    for (const auto& t : algebras) {
      if (t->order() > a->order()) continue;
      for (auto& h : surjections(a, t)) {
        if (seen.insert(kernel_congruence(h).block).second) quotients.push_back(std::move(h));
      }
    }
    for (std::size_t i = 0; i < quotients.size(); ++i) {
      for (std::size_t j = 0; j < quotients.size(); ++j) {
        push_capped(out, b.cap,
                    catalog::RelationPair{a->name() + ":R" + std::to_string(i) + "S" + std::to_string(j),
                                          kernel_pair(quotients[i]), kernel_pair(quotients[j])});
      }
    }
    if (out.size() >= b.cap) break;
  }
  return out;
}

std::vector<LemmaInstance> product_map_instances(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  std::vector<LemmaInstance> out;
  for (const auto& x : algebras) {
    if (x->order() > 4) continue;
    Product xx = product(x, x);
    for (const auto& a : algebras) {
      int index = 0;
      for (auto& g : enumerate_homs(xx.object, a)) {
        push_capped(out, b.cap,
                    ProductMap{x->name() + "^2>" + a->name() + "#" + std::to_string(index++), xx,
                               std::move(g)});
      }
    }
  }
  return out;
}

// Split epimorphisms (d, e) from the graph census, one per distinct pair.
std::vector<std::pair<Homomorphism, Homomorphism>> split_epis(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  auto census = catalog::enumerate_graphs(algebras, b.cap);
  std::vector<std::pair<Homomorphism, Homomorphism>> out;
  std::set<std::pair<std::string, std::vector<int>>> seen;
  for (const auto& g : census.graphs) {
    std::vector<int> key = g.d.map();
    key.insert(key.end(), g.e.map().begin(), g.e.map().end());
    if (seen.insert({g.C1->name() + ">" + g.C0->name(), key}).second) out.emplace_back(g.d, g.e);
  }
  return out;
}

std::vector<LemmaInstance> square_instances(const InstanceBounds& b, bool ssfl) {
  auto splits = split_epis(b);
  std::vector<LemmaInstance> out;
  for (std::size_t t = 0; t < splits.size(); ++t) {
    const auto& [f, s] = splits[t];
    if (f.dom()->order() > 8) continue;
    for (std::size_t u = 0; u < splits.size(); ++u) {
      const auto& [fp, sp] = splits[u];
      // Diagrams whose outer maps cannot be isomorphisms only ever give
      // precondition-unmet verdicts; leave them out of the SSFL pool.
      if (ssfl && (f.dom()->order() != fp.dom()->order() || f.cod()->order() != fp.cod()->order())) {
        continue;
      }
      auto as = enumerate_homs(f.dom(), fp.dom());
      auto bs = enumerate_homs(f.cod(), fp.cod());
      for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
          const auto& a = as[i];
          const auto& bb = bs[j];
          if (!(compose(fp, a) == compose(bb, f))) continue;
          std::string name = "split" + std::to_string(t) + ">split" + std::to_string(u) + ":a" +
                             std::to_string(i) + "b" + std::to_string(j);
          if (ssfl) {
            if (!bb.is_bijective() || !(compose(a, s) == compose(sp, bb))) continue;
            push_capped(out, b.cap, SsflDiagram{name, f, s, fp, sp, a, bb});
          } else {
            push_capped(out, b.cap, KernelSquare{name, f, s, fp, a, bb});
          }
          if (out.size() >= b.cap) return out;
        }
      }
    }
  }
  return out;
}

std::vector<LemmaInstance> direct_image_instances(const InstanceBounds& b) {
  auto algebras = catalog::variety_catalog(b.variety, b.max_order);
  std::vector<LemmaInstance> out;
  for (const auto& a : algebras) {
    // Subalgebras generated by one element, plus all kernels.
    std::set<std::vector<int>> subs;
    for (int x = 0; x < a->order(); ++x) {
      int seed[] = {x};
      subs.insert(generated_closure(*a, seed));
    }
    for (const auto& t : algebras) {
      if (t->order() > a->order()) continue;
      for (const auto& h : enumerate_homs(a, t)) subs.insert(image_set(kernel(h).inclusion));
    }
    std::vector<Homomorphism> ps;
    for (const auto& t : algebras) {
      if (t->order() > a->order()) continue;
      for (auto& h : surjections(a, t)) ps.push_back(std::move(h));
    }
    int si = 0;
    for (const auto& elems : subs) {
      Subalgebra m = subalgebra(a, elems, a->name() + "<" + std::to_string(si));
      for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        push_capped(out, b.cap,
                    DirectImage{a->name() + ":m" + std::to_string(si) + "p" + std::to_string(pi),
                                m.inclusion, ps[pi]});
      }
      ++si;
    }
    if (out.size() >= b.cap) break;
  }
  return out;
}

}  // namespace

std::vector<LemmaInstance> lemma_instances(LemmaId id, const InstanceBounds& b) {
  switch (id) {
    case LemmaId::L1_1: return square_instances(b, false);
    case LemmaId::SSFL: return square_instances(b, true);
    case LemmaId::L2_4: return product_map_instances(b);
    case LemmaId::T1_3: return span_instances(b);
    case LemmaId::BG3_2: return relpair_instances(b);
    case LemmaId::SA6: return direct_image_instances(b);
    default: return graph_instances(b);
  }
}

LemmaSuite run_lemma_suite(LemmaId id, const InstanceBounds& bounds, Exec exec) {
  auto instances = lemma_instances(id, bounds);
  LemmaSuite suite;
  suite.lemma = id;
  suite.reports = parallel_map<VerificationReport>(
      exec, instances.size(), [&](std::size_t i) { return verify_lemma(id, instances[i]); });
  for (const auto& r : suite.reports) {
    switch (r.verdict) {
      case Verdict::pass: ++suite.passed; break;
      case Verdict::fail: ++suite.failed; break;
      case Verdict::precondition_unmet: ++suite.unmet; break;
    }
  }
  return suite;
}

}  // namespace shq
