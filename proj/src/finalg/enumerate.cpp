#include <algorithm>

#include "shq/detail/tuples.hpp"
#include "shq/finalg.hpp"

namespace shq {

namespace {

// The domain is built up level by level: level 0 is the closure of the
// constants, level j adds generator j-1 and everything it newly generates.
// Each element records how it was first produced, and each level records
// every operation instance whose arguments lie in the closure so far and
// involve one of the level's new elements. A candidate map is then the
// straight-line evaluation of those derivations, and it is a homomorphism on
// the subalgebra reached so far iff all recorded instances commute.
struct Plan {
  struct Derivation {
    int element;
    int op;  // -1 for a generator
    std::vector<int> args;
  };
  struct Level {
    int generator = -1;
    std::vector<Derivation> derived;
    std::vector<int> checks;  // flattened: op, result, args...
  };
  std::vector<Level> levels;
};

Plan make_plan(const FiniteAlgebra& a) {
  const auto& ops = a.signature().ops();
  const std::vector<int> gens = greedy_generators(a);
  Plan plan;
  std::vector<char> in(a.order(), 0);
  std::vector<int> seen;
  std::vector<int> queue;

  auto close = [&](Plan::Level& level) {
    std::size_t head = 0;
    while (head < queue.size()) {
      seen.push_back(queue[head++]);
      for (std::size_t op = 0; op < ops.size(); ++op) {
        detail::for_each_tuple_with_newest(seen, ops[op].arity, [&](std::span<const int> args) {
          int r = a.apply(static_cast<int>(op), args);
          level.checks.push_back(static_cast<int>(op));
          level.checks.push_back(r);
          level.checks.insert(level.checks.end(), args.begin(), args.end());
          if (!in[r]) {
            in[r] = 1;
            queue.push_back(r);
            level.derived.push_back({r, static_cast<int>(op), {args.begin(), args.end()}});
          }
        });
      }
    }
    queue.clear();
  };

  Plan::Level base;
  for (std::size_t op = 0; op < ops.size(); ++op) {
    if (ops[op].arity != 0) continue;
    int r = a.table(static_cast<int>(op))[0];
    base.checks.insert(base.checks.end(), {static_cast<int>(op), r});
    if (!in[r]) {
      in[r] = 1;
      queue.push_back(r);
      base.derived.push_back({r, static_cast<int>(op), {}});
    }
  }
  close(base);
  plan.levels.push_back(std::move(base));

  for (int g : gens) {
    Plan::Level level;
    level.generator = g;
    in[g] = 1;
    queue.push_back(g);
    level.derived.push_back({g, -1, {}});
    close(level);
    plan.levels.push_back(std::move(level));
  }
  return plan;
}

class Enumerator {
 public:
  Enumerator(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const int> constraints,
             std::size_t limit)
      : a_(a), b_(b), constraints_(constraints), limit_(limit), plan_(make_plan(a)),
        image_(a.order(), -1) {}

  std::vector<std::vector<int>> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  bool constrained_ok(int x) const {
    return constraints_.empty() || constraints_[x] == kFree || constraints_[x] == image_[x];
  }

  bool evaluate_level(const Plan::Level& level) {
    std::vector<int> args;
    for (const auto& d : level.derived) {
      if (d.op >= 0) {
        args.resize(d.args.size());
        for (std::size_t i = 0; i < args.size(); ++i) args[i] = image_[d.args[i]];
        image_[d.element] = b_.apply(d.op, args);
      }
      if (!constrained_ok(d.element)) return false;
    }
    const auto& ops = a_.signature().ops();
    const auto& c = level.checks;
    std::size_t i = 0;
    while (i < c.size()) {
      int op = c[i];
      int result = c[i + 1];
      int arity = ops[op].arity;
      args.resize(arity);
      for (int k = 0; k < arity; ++k) args[k] = image_[c[i + 2 + k]];
      if (b_.apply(op, args) != image_[result]) return false;
      i += 2 + arity;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (found_.size() >= limit_) return;
    if (depth == plan_.levels.size()) {
      found_.push_back(image_);
      return;
    }
    const auto& level = plan_.levels[depth];
    if (level.generator < 0) {
      if (evaluate_level(level)) descend(depth + 1);
      return;
    }
    int g = level.generator;
    int lo = 0;
    int hi = b_.order();
    if (!constraints_.empty() && constraints_[g] != kFree) {
      lo = constraints_[g];
      hi = lo + 1;
    }
    for (int v = lo; v < hi; ++v) {
      image_[g] = v;
      if (evaluate_level(level)) descend(depth + 1);
      if (found_.size() >= limit_) return;
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  std::span<const int> constraints_;
  std::size_t limit_;
  Plan plan_;
  std::vector<int> image_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b,
                                         std::span<const int> constraints, std::size_t limit) {
  if (!a->signature().compatible(b->signature())) {
    throw SignatureMismatch("enumerate_homs: '" + a->name() + "' and '" + b->name() +
                            "' have different signatures");
  }
  if (!constraints.empty() && static_cast<int>(constraints.size()) != a->order()) {
    throw PreconditionError("enumerate_homs: constraint vector has the wrong length");
  }
  for (int c : constraints) {
    if (c != kFree && (c < 0 || c >= b->order())) {
      throw PreconditionError("enumerate_homs: constraint value outside the codomain");
    }
  }
  auto maps = Enumerator(*a, *b, constraints, limit).run();
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(a, b, std::move(m));
  return out;
}

}  // namespace shq
