#include "parabolic/permutation.hpp"

#include "parabolic/errors.hpp"

namespace parabolic {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw DomainError("permutation", "images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("shape", "permutations act on different point sets");
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(b(i));
  return Permutation(std::move(out));
}

}  // namespace parabolic
