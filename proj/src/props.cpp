#include "hml/props.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "hml/translate.hpp"

namespace hml {

namespace {

void require_sort(LogicId logic, const Formula& a) {
  bool ok = is_hierarchical(logic) ? a.is_hierarchical() : a.is_unimodal();
  if (!ok)
    throw SortError("formula " + to_string(a) + " does not belong to the language of " +
                    std::string(logic_name(logic)));
}

// Climbs single-premise structural rules to the first logical rule.
const Derivation* first_logical(const Derivation* d) {
  while (is_structural(d->rule())) d = d->premise().get();
  return d;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [0, k) by rejection, so the mapping is fixed across platforms.
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do x = gen_();
    while (x >= limit);
    return x % k;
  }

 private:
  std::mt19937_64 gen_;
};

Formula leaf(Rng& rng) {
  switch (rng.below(5)) {
    case 0:
      return Formula::atom("p");
    case 1:
      return Formula::atom("q");
    case 2:
      return Formula::atom("r");
    case 3:
      return Formula::bot();
    default:
      return Formula::top();
  }
}

// cap: largest index allowed for boxes in this subtree (-1: none).
Formula generate(Rng& rng, int depth, int cap) {
  if (depth <= 1) return leaf(rng);
  std::uint64_t roll = rng.below(10);
  if (roll < 4) {
    switch (rng.below(4)) {
      case 0:
        return Formula::neg(generate(rng, depth - 1, cap));
      case 1:
        return Formula::conj(generate(rng, depth - 1, cap), generate(rng, depth - 1, cap));
      case 2:
        return Formula::disj(generate(rng, depth - 1, cap), generate(rng, depth - 1, cap));
      default:
        return Formula::imp(generate(rng, depth - 1, cap), generate(rng, depth - 1, cap));
    }
  }
  if (roll < 7 && cap >= 0) {
    Formula c = generate(rng, depth - 1, cap - 1);
    int lo = c.rank() + 1;
    int n = rng.below(2) == 0 ? lo : lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - lo + 1)));
    return Formula::box(n, c);
  }
  return leaf(rng);
}

}  // namespace

Verdict decide(LogicId logic, const Formula& a, const SearchOptions& opt) {
  if (logic == LogicId::KD45h || logic == LogicId::S5h)
    throw Unsupported("no decision procedure for " + std::string(logic_name(logic)));
  if (logic == LogicId::GLh) return gl_h_decide(a, opt);
  require_sort(logic, a);
  Verdict v;
  v.logic = logic;
  if (auto d = prove_formula(logic, a, opt)) {
    v.provable = true;
    v.derivation = *d;
  }
  return v;
}

Verdict gl_h_decide(const Formula& a, const SearchOptions& opt) {
  require_sort(LogicId::GLh, a);
  Verdict v;
  v.logic = LogicId::GLh;
  if (auto d = prove_formula(LogicId::GL, forgetful_f(a).first, opt)) {
    v.provable = true;
    v.derivation = *d;
  }
  return v;
}

const char* split_name(Split s) {
  switch (s) {
    case Split::Left:
      return "left";
    case Split::Right:
      return "right";
    case Split::NotTheorem:
      return "not-theorem";
  }
  return "?";
}

Split disjunction_split(LogicId logic, int n, const Formula& a, int m, const Formula& b, const SearchOptions& opt) {
  Formula left = Formula::box(n, a);
  Formula right = Formula::box(m, b);
  LogicId calc = logic;
  Formula x = left, y = right;
  switch (logic) {
    case LogicId::K4h:
    case LogicId::KD4h:
    case LogicId::S4h:
      break;
    case LogicId::GLh:
      calc = LogicId::GL;
      x = forgetful_f(left).first;
      y = forgetful_f(right).first;
      break;
    default:
      throw Unsupported("disjunction splitting is provided for k4h, kd4h, s4h and glh");
  }
  auto d = prove(calc, Sequent{{}, {x, y}}, opt);
  if (!d) return Split::NotTheorem;

  const Derivation* top = first_logical(d->get());
  if (!is_right_modal(top->rule()) || top->conclusion().right.size() != 1)
    throw std::logic_error("disjunction split: first logical rule is " + std::string(rule_name(top->rule())));
  Split side = top->principal() == x ? Split::Left : Split::Right;
  const Formula& body = side == Split::Left ? a : b;
  if (!decide(logic, body, opt).provable)
    throw std::logic_error("disjunction split: selected disjunct body " + to_string(body) + " is not a theorem");
  return side;
}

std::vector<Formula> gen_corpus(std::uint64_t seed, std::size_t count, int max_depth, int max_index) {
  Rng rng(seed);
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate(rng, max_depth, max_index));
  return out;
}

}  // namespace hml
