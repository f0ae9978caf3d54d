#include <algorithm>

#include "shq/catops.hpp"
#include "shq/detail/tuples.hpp"

namespace shq {

KernelData kernel(const Homomorphism& f) {
  std::vector<int> elems;
  for (int x = 0; x < f.dom()->order(); ++x) {
    if (f(x) == 0) elems.push_back(x);
  }
  auto sub = subalgebra(f.dom(), std::move(elems), "K[" + f.dom()->name() + "]",
                        Provenance::kernel_inclusion);
  return {std::move(sub.object), std::move(sub.inclusion)};
}

namespace {

EquivalenceRelation relation_from_pairs(const AlgebraPtr& a,
                                        std::vector<std::pair<int, int>> pairs,
                                        const std::string& name) {
  PairAlgebra total = pair_subalgebra(a, a, std::move(pairs), name);
  std::vector<int> diag(a->order());
  for (int x = 0; x < a->order(); ++x) diag[x] = total.index(x, x);
  if (std::find(diag.begin(), diag.end(), -1) != diag.end()) {
    throw InternalInconsistency("relation '" + name + "' is not reflexive");
  }
  Homomorphism r0 = total.proj_left();
  Homomorphism r1 = total.proj_right();
  Homomorphism delta(a, total.object, std::move(diag), Provenance::diagonal);
  return EquivalenceRelation{a, std::move(total), std::move(r0), std::move(r1), std::move(delta)};
}

}  // namespace

EquivalenceRelation kernel_pair(const Homomorphism& f) {
  const int n = f.dom()->order();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (f(a) == f(b)) pairs.emplace_back(a, b);
    }
  }
  return relation_from_pairs(f.dom(), std::move(pairs), "R[" + f.dom()->name() + "]");
}

EquivalenceRelation relation_from_congruence(const Congruence& theta) {
  const int n = theta.base->order();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (theta.related(a, b)) pairs.emplace_back(a, b);
    }
  }
  return relation_from_pairs(theta.base, std::move(pairs), "R(" + theta.base->name() + ")");
}

Homomorphism normalisation(const EquivalenceRelation& r) {
  KernelData k = kernel(r.r0);
  return compose(r.r1, k.inclusion);
}

Pullback pullback(const Homomorphism& f, const Homomorphism& g) {
  if (!same_algebra(f.cod(), g.cod())) {
    throw PreconditionError("pullback: legs have different codomains ('" + f.cod()->name() +
                            "' and '" + g.cod()->name() + "')");
  }
  std::vector<std::vector<int>> fiber(f.cod()->order());
  for (int y = 0; y < g.dom()->order(); ++y) fiber[g(y)].push_back(y);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < f.dom()->order(); ++x) {
    for (int y : fiber[f(x)]) pairs.emplace_back(x, y);
  }
  PairAlgebra pa = pair_subalgebra(f.dom(), g.dom(), std::move(pairs),
                                   "(" + f.dom()->name() + " x_" + f.cod()->name() + " " +
                                       g.dom()->name() + ")");
  return Pullback{std::move(pa), f, g};
}

Factorization image_factorize(const Homomorphism& f) {
  std::vector<int> img = image_set(f);
  std::vector<int> pos(f.cod()->order(), -1);
  for (std::size_t i = 0; i < img.size(); ++i) pos[img[i]] = static_cast<int>(i);
  auto sub = subalgebra(f.cod(), img, "I[" + f.dom()->name() + "]");
  std::vector<int> epi(f.dom()->order());
  for (int x = 0; x < f.dom()->order(); ++x) epi[x] = pos[f(x)];
  Homomorphism e(f.dom(), sub.object, std::move(epi), Provenance::induced);
  return {std::move(e), std::move(sub.inclusion)};
}

Cokernel cokernel(const Homomorphism& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int v : image_set(f)) {
    if (v != 0) pairs.emplace_back(v, 0);
  }
  Congruence theta = congruence_generated(f.cod(), pairs);
  Quotient q = quotient(f.cod(), theta);
  return {std::move(theta), std::move(q.object), std::move(q.map)};
}

bool is_normal_mono(const Homomorphism& m) {
  if (!m.is_injective()) throw PreconditionError("is_normal_mono: map is not injective");
  Cokernel q = cokernel(m);
  std::vector<int> ker;
  for (int x = 0; x < m.cod()->order(); ++x) {
    if (q.map(x) == 0) ker.push_back(x);
  }
  return ker == image_set(m);
}

// ---------------------------------------------------------------------------

const char* to_string(KernelCriterion c) {
  switch (c) {
    case KernelCriterion::not_applicable: return "not-applicable";
    case KernelCriterion::split_epi: return "split-epi";
    case KernelCriterion::regular_epi: return "regular-epi";
  }
  return "?";
}

PullbackCertificate is_pullback_square(const CommutativeSquare& sq) {
  if (!same_algebra(sq.top.dom(), sq.left.dom()) || !same_algebra(sq.top.cod(), sq.right.dom()) ||
      !same_algebra(sq.left.cod(), sq.bottom.dom()) ||
      !same_algebra(sq.right.cod(), sq.bottom.cod())) {
    throw PreconditionError("square: morphisms do not form a square");
  }
  if (compose(sq.bottom, sq.left).map() != compose(sq.right, sq.top).map()) {
    throw PreconditionError("square does not commute");
  }
  Pullback canonical = pullback(sq.bottom, sq.right);
  Homomorphism comparison = canonical.pair(sq.left, sq.top);
  PullbackCertificate cert{false, std::move(canonical), std::move(comparison), std::nullopt,
                           std::nullopt, KernelCriterion::not_applicable, std::nullopt};

  const int n = cert.canonical.object()->order();
  std::vector<int> preimage(n, -1);
  for (int x = 0; x < sq.top.dom()->order(); ++x) {
    int p = cert.comparison(x);
    if (preimage[p] >= 0) {
      if (!cert.collision) cert.collision = std::make_pair(preimage[p], x);
    } else {
      preimage[p] = x;
    }
  }
  for (int p = 0; p < n; ++p) {
    if (preimage[p] < 0) {
      cert.missed = p;
      break;
    }
  }
  cert.is_pullback = !cert.missed && !cert.collision;

  if (sq.top_section) {
    if (compose(sq.top, *sq.top_section) != identity(sq.top.cod())) {
      throw PreconditionError("square: the given section does not split the top arrow");
    }
    cert.criterion = KernelCriterion::split_epi;
  } else if (sq.top.is_surjective()) {
    cert.criterion = KernelCriterion::regular_epi;
  }
  if (cert.criterion != KernelCriterion::not_applicable) {
    std::vector<int> hit(sq.bottom.dom()->order(), 0);
    bool injective = true;
    for (int x = 0; x < sq.top.dom()->order(); ++x) {
      if (sq.top(x) != 0) continue;
      int y = sq.left(x);
      if (hit[y]) injective = false;
      hit[y] = 1;
    }
    bool surjective = true;
    for (int y = 0; y < sq.bottom.dom()->order(); ++y) {
      if (sq.bottom(y) == 0 && !hit[y]) surjective = false;
    }
    cert.kernel_map_iso = injective && surjective;
    cert.criteria_agree = *cert.kernel_map_iso == cert.is_pullback;
  }
  return cert;
}

Homomorphism PullbackCertificate::mediate(const Homomorphism& u, const Homomorphism& v) const {
  if (!is_pullback) throw PreconditionError("mediate: square is not a pullback");
  Homomorphism into_canonical = canonical.pair(u, v);
  std::vector<int> back(canonical.object()->order(), -1);
  for (std::size_t x = 0; x < comparison.map().size(); ++x) back[comparison.map()[x]] = static_cast<int>(x);
  std::vector<int> map(u.dom()->order());
  for (int t = 0; t < u.dom()->order(); ++t) map[t] = back[into_canonical(t)];
  return Homomorphism(u.dom(), comparison.dom(), std::move(map), Provenance::induced);
}

// ---------------------------------------------------------------------------

namespace {

void check_cone(std::span<const ConeLeg> cone) {
  if (cone.empty()) throw PreconditionError("forced_extension: empty cone");
  const auto& apex = cone[0].into_apex.cod();
  const auto& target = cone[0].value.cod();
  if (!apex->signature().compatible(target->signature())) {
    throw SignatureMismatch("forced_extension: apex and target have different signatures");
  }
  for (const auto& leg : cone) {
    if (!same_algebra(leg.into_apex.cod(), apex)) {
      throw PreconditionError("forced_extension: legs land in different apexes");
    }
    if (!same_algebra(leg.value.cod(), target)) {
      throw PreconditionError("forced_extension: values land in different targets");
    }
    if (!same_algebra(leg.into_apex.dom(), leg.value.dom())) {
      throw PreconditionError("forced_extension: leg and value have different domains");
    }
  }
}

}  // namespace

std::variant<std::vector<int>, Conflict> cone_constraints(std::span<const ConeLeg> cone) {
  check_cone(cone);
  std::vector<int> constraint(cone[0].into_apex.cod()->order(), kFree);
  std::optional<Conflict> conflict;
  for (const auto& leg : cone) {
    for (int x = 0; x < leg.into_apex.dom()->order(); ++x) {
      int p = leg.into_apex(x);
      int v = leg.value(x);
      if (constraint[p] == kFree) {
        constraint[p] = v;
      } else if (constraint[p] != v && (!conflict || p < conflict->element)) {
        conflict = Conflict{p, constraint[p], v};
      }
    }
  }
  if (conflict) return *conflict;
  return constraint;
}

Extension forced_extension(std::span<const ConeLeg> cone) {
  check_cone(cone);
  const FiniteAlgebra& apex = *cone[0].into_apex.cod();
  const FiniteAlgebra& target = *cone[0].value.cod();
  const auto& ops = apex.signature().ops();

  std::vector<int> value(apex.order(), -1);
  std::vector<int> queue;
  std::optional<Conflict> conflict;
  auto assign = [&](int p, int v) {
    if (value[p] < 0) {
      value[p] = v;
      queue.push_back(p);
    } else if (value[p] != v && (!conflict || p < conflict->element)) {
      conflict = Conflict{p, value[p], v};
    }
  };

  for (std::size_t op = 0; op < ops.size(); ++op) {
    if (ops[op].arity == 0) {
      assign(apex.table(static_cast<int>(op))[0], target.table(static_cast<int>(op))[0]);
    }
  }
  for (const auto& leg : cone) {
    for (int x = 0; x < leg.into_apex.dom()->order(); ++x) assign(leg.into_apex(x), leg.value(x));
  }

  std::vector<int> seen;
  std::vector<int> images;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    seen.push_back(queue[head]);
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const int arity = ops[op].arity;
      if (arity == 0) continue;
      images.resize(arity);
      if (arity == 2) {
        const int newest = seen.back();
        const int vn = value[newest];
        for (int s : seen) {
          assign(apex.apply2(static_cast<int>(op), newest, s),
                 target.apply2(static_cast<int>(op), vn, value[s]));
          if (s != newest) {
            assign(apex.apply2(static_cast<int>(op), s, newest),
                   target.apply2(static_cast<int>(op), value[s], vn));
          }
        }
        continue;
      }
      detail::for_each_tuple_with_newest(seen, arity, [&](std::span<const int> args) {
        for (int i = 0; i < arity; ++i) images[i] = value[args[i]];
        assign(apex.apply(static_cast<int>(op), args), target.apply(static_cast<int>(op), images));
      });
    }
  }

  if (conflict) return *conflict;
  if (static_cast<int>(queue.size()) < apex.order()) {
    std::sort(queue.begin(), queue.end());
    return NotGenerating{std::move(queue)};
  }
  return Homomorphism(cone[0].into_apex.cod(), cone[0].value.cod(), std::move(value),
                      Provenance::witness);
}

}  // namespace shq
