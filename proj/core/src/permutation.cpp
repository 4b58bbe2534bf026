#include "sgcanon/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace sgcanon {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    const int image = images_[static_cast<std::size_t>(v - 1)];
    if (image < 1 || image > n) {
      throw Error("permutation image " + std::to_string(image) + " of vertex " +
                  std::to_string(v) + " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(image - 1)]) {
      throw Error("permutation maps two vertices to " + std::to_string(image));
    }
    seen[static_cast<std::size_t>(image - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error("permutation size must be non-negative");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::operator()(int v) const {
  if (v < 1 || v > size()) {
    throw Error("vertex " + std::to_string(v) + " is outside 1.." +
                std::to_string(size()));
  }
  return images_[static_cast<std::size_t>(v - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int v = 1; v <= size(); ++v) {
    images[static_cast<std::size_t>(images_[static_cast<std::size_t>(v - 1)] -
                                    1)] = v;
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw Error("cannot compose permutations of sizes " +
                std::to_string(outer.size()) + " and " +
                std::to_string(inner.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int v = 1; v <= inner.size(); ++v) {
    images[static_cast<std::size_t>(v - 1)] = outer(inner(v));
  }
  return Permutation(std::move(images));
}

}  // namespace sgcanon
