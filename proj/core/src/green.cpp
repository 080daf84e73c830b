#include "wiremono/green.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace wiremono {

namespace {

void require_signed_pair(const TwistedElement& x, const TwistedElement& y, const char* what) {
  if (!(x.kind() == y.kind())) {
    throw std::invalid_argument(std::string(what) + ": kinds differ");
  }
  if (!x.kind().signed_twist()) {
    throw std::invalid_argument(std::string(what) + " is only defined for pbt kinds");
  }
}

void require_signed(const TwistedElement& x, const char* what) {
  if (!x.kind().signed_twist()) {
    throw std::invalid_argument(std::string(what) + " is only defined for pbt kinds");
  }
}

}  // namespace

bool l_related(const TwistedElement& x, const TwistedElement& y) {
  require_signed_pair(x, y, "l_related");
  return wire_profile(x.matching()).right_arcs == wire_profile(y.matching()).right_arcs;
}

bool r_related(const TwistedElement& x, const TwistedElement& y) {
  require_signed_pair(x, y, "r_related");
  return wire_profile(x.matching()).left_arcs == wire_profile(y.matching()).left_arcs;
}

bool h_related(const TwistedElement& x, const TwistedElement& y) {
  require_signed_pair(x, y, "h_related");
  const WireProfile px = wire_profile(x.matching());
  const WireProfile py = wire_profile(y.matching());
  return px.left_arcs == py.left_arcs && px.right_arcs == py.right_arcs;
}

bool j_related(const TwistedElement& x, const TwistedElement& y) {
  require_signed_pair(x, y, "j_related");
  return x.matching().through_count() == y.matching().through_count();
}

int j_class_count(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  return (n + 2) / 2;
}

TwistedElement regular_witness(const TwistedElement& x) {
  require_signed(x, "regular_witness");
  const Matching& pi = x.matching();
  const long long m = (pi.n() - pi.through_count()) / 2;
  return TwistedElement(x.kind(), pi.star(), -2 * m - x.twist());
}

namespace {

// Idempotent power of a diagram in the finite Brauer monoid (circles
// discarded): find the cycle of the power sequence, then the exponent that
// is a multiple of the period and at least the preperiod.
Matching idempotent_power(const Matching& pi) {
  std::unordered_map<Matching, int, MatchingHash> seen;
  std::vector<Matching> powers;
  Matching x = pi;
  for (;;) {
    auto [it, fresh] = seen.emplace(x, static_cast<int>(powers.size()));
    if (!fresh) {
      const int mu = it->second;                                // preperiod
      const int lambda = static_cast<int>(powers.size()) - mu;  // period
      // powers[k] holds pi^{k+1}; the idempotent power has k+1 a multiple of
      // the period and k at least the preperiod
      int k = lambda - 1;
      while (k < mu) k += lambda;
      return powers[static_cast<size_t>(k)];
    }
    powers.push_back(x);
    x = brauer_multiply(x, pi).diagram;
  }
}

}  // namespace

std::optional<SubgroupDescriptor> find_idempotent_in_h_class(const TwistedElement& x) {
  require_signed(x, "find_idempotent_in_h_class");
  const Matching& pi = x.matching();
  const Matching eps = idempotent_power(pi);
  const WireProfile pe = wire_profile(eps);
  const WireProfile pp = wire_profile(pi);
  if (pe.left_arcs != pp.left_arcs || pe.right_arcs != pp.right_arcs) {
    return std::nullopt;  // the H-class of x contains no idempotent
  }
  const long long s_offset = -static_cast<long long>(brauer_multiply(eps, eps).circles);
  std::vector<int> free_left;
  std::vector<int> wire_right;
  for (int p = 0; p < eps.n(); ++p) {
    if (eps.partner(p) >= eps.n()) {
      free_left.push_back(p);
      wire_right.push_back(eps.partner(p));
    }
  }
  return SubgroupDescriptor{TwistedElement(x.kind(), eps, s_offset), eps.through_count(), s_offset,
                            std::move(free_left), std::move(wire_right)};
}

SubgroupCoordinates subgroup_coordinates(const SubgroupDescriptor& desc, const TwistedElement& x) {
  if (!h_related(x, desc.idempotent)) {
    throw std::invalid_argument("element is not in the subgroup's H-class");
  }
  const Matching& sigma = x.matching();
  std::vector<int> right_label(static_cast<size_t>(2 * sigma.n()), -1);
  for (size_t b = 0; b < desc.wire_right.size(); ++b) {
    right_label[static_cast<size_t>(desc.wire_right[b])] = static_cast<int>(b);
  }
  std::vector<int> images(static_cast<size_t>(desc.k));
  for (size_t a = 0; a < desc.free_left.size(); ++a) {
    images[a] = right_label[static_cast<size_t>(sigma.partner(desc.free_left[a]))];
  }
  return SubgroupCoordinates{Perm(std::move(images)), x.twist() - desc.s_offset};
}

TwistedElement subgroup_element(const SubgroupDescriptor& desc, const SubgroupCoordinates& coords) {
  if (coords.perm.degree() != desc.k) {
    throw std::invalid_argument("permutation degree does not match the subgroup rank");
  }
  const Matching& eps = desc.idempotent.matching();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(eps.n()));
  for (int p = 0; p < 2 * eps.n(); ++p) {
    const int q = eps.partner(p);
    if (q > p && ((p < eps.n()) == (q < eps.n()))) pairs.emplace_back(p, q);  // keep the arcs
  }
  for (int a = 0; a < desc.k; ++a) {
    pairs.emplace_back(desc.free_left[static_cast<size_t>(a)],
                       desc.wire_right[static_cast<size_t>(coords.perm(a))]);
  }
  return TwistedElement(desc.idempotent.kind(), Matching::from_pairs(eps.n(), pairs),
                        coords.z + desc.s_offset);
}

TwistedElement subgroup_inverse(const SubgroupDescriptor& desc, const TwistedElement& x) {
  SubgroupCoordinates coords = subgroup_coordinates(desc, x);
  return subgroup_element(desc, SubgroupCoordinates{coords.perm.inverse(), -coords.z});
}

namespace {

unsigned long long double_factorial_odd(int n) {
  unsigned long long v = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) v *= static_cast<unsigned long long>(k);
  return v;
}

std::vector<int> classes_from_mutual(const std::vector<std::vector<char>>& leq) {
  const size_t count = leq.size();
  std::vector<int> cls(count, -1);
  int next = 0;
  for (size_t a = 0; a < count; ++a) {
    if (cls[a] != -1) continue;
    cls[a] = next;
    for (size_t b = a + 1; b < count; ++b) {
      if (cls[b] == -1 && leq[a][b] && leq[b][a]) cls[b] = next;
    }
    ++next;
  }
  return cls;
}

}  // namespace

GreenOracle::GreenOracle(int n) : n_(n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("the brute-force oracle is limited to ranks 1..4");
  }
  // closure of the generator diagrams under right multiplication
  std::vector<Matching> gens;
  gens.push_back(Matching::identity(n));
  const MonoidKind kind = twisted_brauer(n);
  for (int i = 1; i < n; ++i) {
    gens.push_back(TwistedElement::generator(kind, GeneratorSymbol::t(i)).matching());
    gens.push_back(TwistedElement::generator(kind, GeneratorSymbol::h(i)).matching());
  }
  std::unordered_map<Matching, int, MatchingHash> index;
  std::vector<Matching> todo;
  auto visit = [&](const Matching& m) {
    if (index.emplace(m, static_cast<int>(elements_.size())).second) {
      elements_.push_back(m);
      todo.push_back(m);
    }
  };
  visit(Matching::identity(n));
  while (!todo.empty()) {
    Matching m = std::move(todo.back());
    todo.pop_back();
    for (const Matching& g : gens) visit(brauer_multiply(m, g).diagram);
  }
  if (elements_.size() != double_factorial_odd(n)) {
    throw std::logic_error("generator closure missed some diagrams");
  }

  const size_t count = elements_.size();
  // one-sided divisibility: a <=_L b iff a = s b for some s
  std::vector<std::vector<char>> leq_l(count, std::vector<char>(count, 0));
  std::vector<std::vector<char>> leq_r(count, std::vector<char>(count, 0));
  for (size_t b = 0; b < count; ++b) {
    for (size_t s = 0; s < count; ++s) {
      leq_l[static_cast<size_t>(index.at(brauer_multiply(elements_[s], elements_[b]).diagram))][b] = 1;
      leq_r[static_cast<size_t>(index.at(brauer_multiply(elements_[b], elements_[s]).diagram))][b] = 1;
    }
  }
  // two-sided: a <=_J b iff a = s b t; collect left multiples of every right multiple
  std::vector<std::vector<char>> leq_j(count, std::vector<char>(count, 0));
  for (size_t b = 0; b < count; ++b) {
    for (size_t a = 0; a < count; ++a) {
      if (!leq_r[a][b]) continue;
      for (size_t c = 0; c < count; ++c) {
        if (leq_l[c][a]) leq_j[c][b] = 1;
      }
    }
  }
  l_class_ = classes_from_mutual(leq_l);
  r_class_ = classes_from_mutual(leq_r);
  j_class_ = classes_from_mutual(leq_j);
}

int GreenOracle::index_of(const Matching& m) const {
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == m) return static_cast<int>(i);
  }
  throw std::invalid_argument("diagram has the wrong rank for this oracle");
}

bool GreenOracle::l_related(int a, int b) const {
  return l_class_[static_cast<size_t>(a)] == l_class_[static_cast<size_t>(b)];
}
bool GreenOracle::r_related(int a, int b) const {
  return r_class_[static_cast<size_t>(a)] == r_class_[static_cast<size_t>(b)];
}
bool GreenOracle::h_related(int a, int b) const { return l_related(a, b) && r_related(a, b); }
bool GreenOracle::j_related(int a, int b) const {
  return j_class_[static_cast<size_t>(a)] == j_class_[static_cast<size_t>(b)];
}

int GreenOracle::j_class_count() const {
  return *std::max_element(j_class_.begin(), j_class_.end()) + 1;
}

std::vector<int> GreenOracle::j_class_sizes() const {
  std::vector<int> sizes(static_cast<size_t>(j_class_count()), 0);
  for (int c : j_class_) ++sizes[static_cast<size_t>(c)];
  return sizes;
}

StabilityReport stability_check(MonoidKind kind, int samples, uint64_t seed) {
  if (!kind.signed_twist()) {
    throw std::invalid_argument("stability_check is only defined for pbt kinds");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(0, 24);
  StabilityReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    TwistedElement a = random_element(kind, length(rng), rng);
    TwistedElement b = random_element(kind, length(rng), rng);
    TwistedElement ab = multiply(a, b);
    TwistedElement ba = multiply(b, a);
    if (j_related(a, ab) && !r_related(a, ab)) {
      report.violations.push_back(StabilityViolation{a, b, false});
    }
    if (j_related(a, ba) && !l_related(a, ba)) {
      report.violations.push_back(StabilityViolation{a, b, true});
    }
  }
  return report;
}

}  // namespace wiremono
