#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace parabolic {

// A bijection of {0, ..., n-1}. Acting on per-point data it pushes the value
// stored at point i to point p(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  template <class T>
  std::vector<T> push(const std::vector<T>& data) const {
    std::vector<T> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out[images_[i]] = data[i];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace parabolic
