#include "shq/internal.hpp"

namespace shq {

const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::star: return "star";
    case StructureKind::peiffer: return "peiffer";
    case StructureKind::huq: return "huq";
  }
  return "?";
}

namespace {

Homomorphism invert_pairing(const Homomorphism& pairing, const std::string& what) {
  if (!pairing.is_bijective()) {
    throw InternalInconsistency(what + " is not invertible");
  }
  return inverse(pairing);
}

PeifferStruct star_to_peiffer(const GraphKernels& K, const StarMult& s) {
  const Pullback& P = s.domain;
  Product xx = product(K.X, K.X);
  Homomorphism pairing = xx.pair(s.sigma, P.proj_g());
  Homomorphism omega = compose(P.proj_f(), invert_pairing(pairing, "<sigma, pi1>"));
  return PeifferStruct{std::move(xx), std::move(omega)};
}

StarMult peiffer_to_star(const ReflexiveGraph& g, const GraphKernels& K, const PeifferStruct& w) {
  Pullback P = star_domain(g, K);
  std::optional<Homomorphism> pairing;
  try {
    pairing = P.pair(w.omega, w.XX.proj_right());
  } catch (const PreconditionError&) {
    throw InternalInconsistency("<omega, pi1> does not land in C1 x_C0 X");
  }
  Homomorphism sigma = compose(w.XX.proj_left(), invert_pairing(*pairing, "<omega, pi1>"));
  return StarMult{std::move(P), std::move(sigma)};
}

PeifferStruct huq_to_peiffer(const ReflexiveGraph& g, const GraphKernels& K, const HuqWitness& w) {
  KernelIso iso = kernel_isomorphism(g, w);
  Product xx = product(K.X, K.X);
  Homomorphism one_i = w.product.pair(xx.proj_left(), compose(iso.i, xx.proj_right()));
  return PeifferStruct{std::move(xx), compose(w.phi, one_i)};
}

HuqWitness peiffer_to_huq(const ReflexiveGraph& g, const GraphKernels& K, const PeifferStruct& w) {
  Homomorphism u0 = compose(w.omega, w.XX.inj_right());
  if (!u0.is_injective() || !compose(g.c, u0).is_zero() || !is_normal_mono(u0) ||
      image_set(u0) != image_set(K.l)) {
    throw InternalInconsistency("omega <0, 1> is not a kernel of c");
  }
  std::vector<int> pos(g.C1->order(), -1);
  for (int x = 0; x < K.X->order(); ++x) pos[u0(x)] = x;
  std::vector<int> u(K.Y->order());
  for (int y = 0; y < K.Y->order(); ++y) u[y] = pos[K.l(y)];
  Homomorphism uh(K.Y, K.X, std::move(u), Provenance::induced);

  Product xy = product(K.X, K.Y);
  Homomorphism one_u = w.XX.pair(xy.proj_left(), compose(uh, xy.proj_right()));
  Homomorphism phi = compose(w.omega, one_u);
  if (!(compose(phi, xy.inj_left()) == K.k) || !(compose(phi, xy.inj_right()) == K.l)) {
    throw InternalInconsistency("omega (1 x u) is not a Huq witness");
  }
  return HuqWitness{std::move(xy), K.k, K.l, std::move(phi)};
}

}  // namespace

GraphStructure convert_structure(const ReflexiveGraph& g, const GraphStructure& w,
                                 StructureKind target) {
  GraphKernels K = validate_reflexive_graph(g);
  // Everything goes through the Peiffer form.
  PeifferStruct omega = std::visit(
      [&](const auto& s) -> PeifferStruct {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StarMult>) {
          return star_to_peiffer(K, s);
        } else if constexpr (std::is_same_v<T, HuqWitness>) {
          return huq_to_peiffer(g, K, s);
        } else {
          return s;
        }
      },
      w);
  switch (target) {
    case StructureKind::star: return peiffer_to_star(g, K, omega);
    case StructureKind::huq: return peiffer_to_huq(g, K, omega);
    case StructureKind::peiffer: break;
  }
  return omega;
}

}  // namespace shq
