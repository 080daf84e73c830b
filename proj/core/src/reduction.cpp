#include "wiremono/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wiremono {

size_t word_length_cap() {
  static const size_t cap = [] {
    if (const char* env = std::getenv("WIREMONO_MAX_WORD_LEN")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return static_cast<size_t>(10'000'000);
  }();
  return cap;
}

namespace {

size_t effective_cap(size_t cap) { return cap == 0 ? word_length_cap() : cap; }

[[noreturn]] void cap_error(const char* what, unsigned long long length, size_t cap) {
  throw std::length_error(std::string(what) + " would have " + std::to_string(length) +
                          " letters, cap is " + std::to_string(cap));
}

void push_reduced(std::vector<int>& stack, int letter) {
  if (!stack.empty() && stack.back() == -letter) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

}  // namespace

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.size());
  for (int letter : w.letters) {
    if (letter == 0) throw std::invalid_argument("group words may not contain 0");
    push_reduced(out.letters, letter);
  }
  return out;
}

GroupWord group_inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

GroupWord group_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (int letter : b.letters) push_reduced(out.letters, letter);
  return out;
}

std::string format_group_word(const GroupWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    const int letter = w.letters[i];
    const int id = letter > 0 ? letter : -letter;
    if (id >= 1 && static_cast<size_t>(id) <= names.size() && !names[static_cast<size_t>(id - 1)].empty()) {
      os << names[static_cast<size_t>(id - 1)];
    } else {
      os << 'x' << id;
    }
    if (letter < 0) os << "^-1";
  }
  return os.str();
}

namespace {

GroupWord substitute_letters(std::span<const int> letters, std::span<const GroupWord> images,
                             size_t cap) {
  GroupWord out;
  for (int letter : letters) {
    const int id = letter > 0 ? letter : -letter;
    if (id < 1 || static_cast<size_t>(id) > images.size()) {
      throw std::invalid_argument("no image for letter " + std::to_string(id));
    }
    const GroupWord& img = images[static_cast<size_t>(id - 1)];
    if (out.size() + img.size() > cap) cap_error("substituted word", out.size() + img.size(), cap);
    if (letter > 0) {
      for (int v : img.letters) push_reduced(out.letters, v);
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) {
        push_reduced(out.letters, -*it);
      }
    }
  }
  return out;
}

}  // namespace

GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images, size_t cap) {
  return substitute_letters(w.letters, images, effective_cap(cap));
}

GroupWord substitute(const Word& w, std::span<const GroupWord> images, size_t cap) {
  return substitute_letters(w.letters, images, effective_cap(cap));
}

std::vector<Word> seed_words(int m) {
  if (m < 1) throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    Word w;
    for (int j = 1; j <= m; ++j) {
      w.letters.push_back(j);
      if (j == i && i < m) w.letters.push_back(j);  // the squared letter
    }
    w.letters.push_back(1);
    out.push_back(std::move(w));
  }
  return out;
}

unsigned long long phi_power_length(int m, int k, int i) {
  if (m < 1 || k < 0 || i < 1 || i > m) throw std::invalid_argument("bad phi power arguments");
  std::vector<unsigned long long> len(static_cast<size_t>(m), 1);  // k = 0: single letters
  const std::vector<Word> seeds = seed_words(m);
  for (int step = 0; step < k; ++step) {
    std::vector<unsigned long long> next(static_cast<size_t>(m), 0);
    for (int w = 0; w < m; ++w) {
      unsigned long long total = 0;
      for (int letter : seeds[static_cast<size_t>(w)].letters) {
        const unsigned long long piece = len[static_cast<size_t>(letter - 1)];
        if (total + piece < total) throw std::overflow_error("phi power length overflow");
        total += piece;
      }
      next[static_cast<size_t>(w)] = total;
    }
    len = std::move(next);
  }
  return len[static_cast<size_t>(i - 1)];
}

std::vector<Word> phi_power_all(int m, int k, size_t cap) {
  if (m < 1 || k < 0) throw std::invalid_argument("bad phi power arguments");
  cap = effective_cap(cap);
  for (int i = 1; i <= m; ++i) {
    unsigned long long length = 0;
    try {
      length = phi_power_length(m, k, i);
    } catch (const std::overflow_error&) {
      throw std::length_error("phi power length does not fit in 64 bits, cap is " +
                              std::to_string(cap));
    }
    if (length > cap) cap_error("phi power", length, cap);
  }
  std::vector<Word> cur(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) cur[static_cast<size_t>(i)].letters = {i + 1};
  const std::vector<Word> seeds = seed_words(m);
  for (int step = 0; step < k; ++step) {
    std::vector<Word> next(static_cast<size_t>(m));
    for (int w = 0; w < m; ++w) {
      Word& out = next[static_cast<size_t>(w)];
      size_t total = 0;
      for (int letter : seeds[static_cast<size_t>(w)].letters) {
        total += cur[static_cast<size_t>(letter - 1)].size();
      }
      out.letters.reserve(total);
      for (int letter : seeds[static_cast<size_t>(w)].letters) {
        const Word& piece = cur[static_cast<size_t>(letter - 1)];
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Word phi_power(int m, int k, int i, size_t cap) {
  if (i < 1 || i > m) throw std::invalid_argument("letter index out of range");
  return phi_power_all(m, k, cap)[static_cast<size_t>(i - 1)];
}

ReductionPlan ReductionPlan::make(int m, int n) {
  if (m < 1) throw std::invalid_argument("alphabet size must be at least 1");
  ReductionPlan plan;
  plan.m = m;
  plan.n = n;
  plan.j_classes = j_class_count(n);
  plan.exponent = 2 * plan.j_classes;
  return plan;
}

Identity build_reduced_identity(const Identity& id, int n, size_t cap) {
  cap = effective_cap(cap);
  const std::vector<int> alphabet = id.alphabet();
  const int m = static_cast<int>(alphabet.size());
  for (int i = 0; i < m; ++i) {
    if (alphabet[static_cast<size_t>(i)] != i + 1) {
      throw std::invalid_argument("identity letters must be numbered 1..m contiguously");
    }
  }
  const ReductionPlan plan = ReductionPlan::make(m, n);
  const std::vector<Word> images = phi_power_all(m, plan.exponent, cap);

  auto substitute_word = [&](const Word& w) {
    unsigned long long total = 0;
    for (int letter : w.letters) total += images[static_cast<size_t>(letter - 1)].size();
    if (total > cap) cap_error("reduced identity side", total, cap);
    Word out;
    out.letters.reserve(static_cast<size_t>(total));
    for (int letter : w.letters) {
      const Word& piece = images[static_cast<size_t>(letter - 1)];
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return out;
  };

  Identity out;
  out.names = id.names;
  out.lhs = substitute_word(id.lhs);
  out.rhs = substitute_word(id.rhs);

  // the advertised size bound
  unsigned long long bound = std::max(id.lhs.size(), id.rhs.size());
  for (int e = 0; e < plan.exponent; ++e) bound *= static_cast<unsigned long long>(m + 2);
  if (out.lhs.size() > bound || out.rhs.size() > bound) {
    throw std::logic_error("reduced identity exceeded its size bound");
  }
  return out;
}

std::vector<GroupWord> phi_inverse_basis(int m) {
  if (m < 2) {
    throw std::invalid_argument(
        "the seed substitution is only invertible for alphabets of size >= 2");
  }
  std::vector<GroupWord> basis;
  basis.reserve(static_cast<size_t>(m));
  GroupWord prefix;  // reduced product of the images found so far
  for (int i = 1; i <= m; ++i) {
    GroupWord image;
    if (i == 1) {
      image = free_reduce(GroupWord{{1, -m}});
    } else if (i < m) {
      // conjugate of x_i x_m^-1 by the prefix product
      GroupWord core{{i, -m}};
      image = group_concat(group_concat(group_inverse(prefix), core), prefix);
    } else {
      GroupWord tail = group_inverse(basis[0]);
      image = group_concat(group_concat(group_inverse(prefix), GroupWord{{m}}), tail);
    }
    prefix = group_concat(prefix, image);
    basis.push_back(std::move(image));
  }
  return basis;
}

GroupWord phi_group(int m, const GroupWord& w, size_t cap) {
  const std::vector<Word> seeds = seed_words(m);
  std::vector<GroupWord> images;
  images.reserve(static_cast<size_t>(m));
  for (const Word& seed : seeds) images.push_back(GroupWord{seed.letters});
  return substitute(w, images, cap);
}

GroupWord phi_inverse(int m, const GroupWord& w, size_t cap) {
  return substitute(w, phi_inverse_basis(m), cap);
}

std::vector<GroupWord> phi_inverse_words(int m, int n, size_t cap) {
  cap = effective_cap(cap);
  const ReductionPlan plan = ReductionPlan::make(m, n);
  const std::vector<GroupWord> basis = phi_inverse_basis(m);
  std::vector<GroupWord> words = basis;
  for (int step = 1; step < plan.exponent; ++step) {
    std::vector<GroupWord> next;
    next.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      next.push_back(substitute(basis[static_cast<size_t>(i)], words, cap));
    }
    words = std::move(next);
  }

  // certify: feeding the seed images back in must return the single letters
  std::vector<GroupWord> seed_images;
  for (const Word& seed : seed_words(m)) seed_images.push_back(GroupWord{seed.letters});
  for (int i = 0; i < m; ++i) {
    GroupWord check = words[static_cast<size_t>(i)];
    for (int step = 0; step < plan.exponent; ++step) check = substitute(check, seed_images, cap);
    if (!(check == GroupWord{{i + 1}})) {
      throw std::logic_error("inverse image failed its round-trip certification");
    }
  }
  return words;
}

TrapResult subgroup_trap(MonoidKind kind, const Substitution& sub, int m) {
  if (!kind.signed_twist()) {
    throw std::invalid_argument("subgroup trapping is stated for pbt kinds");
  }
  const ReductionPlan plan = ReductionPlan::make(m, kind.n);
  const std::vector<Word> words = phi_power_all(m, plan.exponent);

  std::vector<TwistedElement> members;
  members.reserve(static_cast<size_t>(m));
  for (const Word& w : words) members.push_back(evaluate(w, sub));

  auto fail = [&](const char* what) {
    std::ostringstream os;
    os << "subgroup trap violated (" << what << ") for m=" << m << ", kind " << kind.str()
       << "; substitution:";
    for (const auto& [letter, value] : sub) os << " x" << letter << "->" << format_element(value);
    throw std::logic_error(os.str());
  };

  for (size_t i = 1; i < members.size(); ++i) {
    if (!h_related(members[0], members[i])) fail("values not H-related");
  }
  if (!h_related(members[0], multiply(members[0], members[0]))) fail("square left the H-class");

  std::optional<SubgroupDescriptor> desc = find_idempotent_in_h_class(members[0]);
  if (!desc) fail("H-class has no idempotent");
  return TrapResult{std::move(*desc), std::move(members)};
}

Substitution lift_counterexample(int n, const Identity& id, const std::vector<Perm>& witness) {
  const std::vector<int> alphabet = id.alphabet();
  const int m = static_cast<int>(alphabet.size());
  for (int i = 0; i < m; ++i) {
    if (alphabet[static_cast<size_t>(i)] != i + 1) {
      throw std::invalid_argument("identity letters must be numbered 1..m contiguously");
    }
  }
  if (static_cast<int>(witness.size()) != m) {
    throw std::invalid_argument("witness must assign one permutation per letter");
  }
  PermSubstitution perm_sub;
  for (int i = 0; i < m; ++i) {
    if (witness[static_cast<size_t>(i)].degree() != n) {
      throw std::invalid_argument("witness permutations must have degree n");
    }
    perm_sub[i + 1] = witness[static_cast<size_t>(i)];
  }
  if (evaluate(id.lhs, perm_sub) == evaluate(id.rhs, perm_sub)) {
    throw std::invalid_argument("witness does not separate the identity in the symmetric group");
  }

  const std::vector<GroupWord> inverse_words = phi_inverse_words(m, n);

  // evaluate the inverse words at the witness inside the group of units of
  // the signed monoid; everything stays at circle count 0
  const MonoidKind signed_kind = pm_twisted_brauer(n);
  const SubgroupDescriptor units =
      find_idempotent_in_h_class(TwistedElement::identity(signed_kind)).value();
  std::vector<TwistedElement> unit_values;
  unit_values.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    unit_values.push_back(
        TwistedElement(signed_kind, witness[static_cast<size_t>(i)].to_matching(), 0));
  }

  const MonoidKind target = twisted_brauer(n);
  Substitution lifted;
  for (int i = 0; i < m; ++i) {
    TwistedElement acc = units.idempotent;  // (identity diagram; 0)
    for (int letter : inverse_words[static_cast<size_t>(i)].letters) {
      const TwistedElement& h = unit_values[static_cast<size_t>(letter > 0 ? letter - 1 : -letter - 1)];
      acc = multiply(acc, letter > 0 ? h : subgroup_inverse(units, h));
    }
    if (acc.twist() != 0 || acc.matching().through_count() != n) {
      throw std::logic_error("lifted value left the group of units");
    }
    lifted.emplace(i + 1, TwistedElement(target, acc.matching(), 0));
  }
  return lifted;
}

}  // namespace wiremono
