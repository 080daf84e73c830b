#ifndef WIREMONO_PERM_HPP_
#define WIREMONO_PERM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wiremono/diagram.hpp"

namespace wiremono {

/// Permutation of {0, ..., k-1} stored as an image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int k);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }

  // left-to-right composition: (a.then(b))(i) = b(a(i))
  Perm then(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& other) const { return images_ < other.images_; }

  // cycle notation on 1-based points, e.g. "(1 2)(3 4 5)"; "()" is the identity
  static Perm from_cycles(int k, std::string_view text);
  std::string cycles() const;

  // the permutation diagram: wire {i, sigma(i)'} for every i
  Matching to_matching() const;
  static Perm of_matching(const Matching& m);  // requires a permutation diagram

  static std::vector<Perm> all(int k);

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

}  // namespace wiremono

#endif  // WIREMONO_PERM_HPP_
