#include "wiremono/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wiremono {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("image table is not a permutation");
    }
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm Perm::identity(int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<int> im(static_cast<size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::then(const Perm& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[static_cast<size_t>(i)] = other(images_[static_cast<size_t>(i)]);
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::from_cycles(int k, std::string_view text) {
  std::vector<int> im(static_cast<size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("bad character in cycle notation");
      }
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > k) throw std::invalid_argument("cycle point out of range");
      cycle.push_back(v - 1);
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (im[static_cast<size_t>(from)] != from && cycle.size() > 1) {
        throw std::invalid_argument("point repeated across cycles");
      }
      if (cycle.size() > 1) im[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  return Perm(std::move(im));
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      first = false;
      os << j + 1;
      seen[static_cast<size_t>(j)] = 1;
      j = images_[static_cast<size_t>(j)];
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Matching Perm::to_matching() const {
  const int n = degree();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + images_[static_cast<size_t>(i)]);
  return Matching::from_pairs(n, pairs);
}

Perm Perm::of_matching(const Matching& m) {
  const int n = m.n();
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int q = m.partner(i);
    if (q < n) throw std::invalid_argument("matching is not a permutation diagram");
    im[static_cast<size_t>(i)] = q - n;
  }
  return Perm(std::move(im));
}

std::vector<Perm> Perm::all(int k) {
  std::vector<int> im(static_cast<size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace wiremono
