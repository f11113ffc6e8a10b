#pragma once

#include <vector>

#include "mutflow/errors.hpp"
#include "mutflow/intmatrix.hpp"

namespace mutflow {

// Permutation of {0,..,n-1} stored as an image array: i -> image[i].
// External formats use 1-based image arrays; conversion happens at the edges.
class Permutation {
 public:
  explicit Permutation(int n) : image_(n) {
    for (int i = 0; i < n; ++i) image_[i] = i;
  }
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) { validate(); }

  static Permutation from_one_based(const std::vector<int>& img1) {
    std::vector<int> img(img1.size());
    for (std::size_t i = 0; i < img1.size(); ++i) img[i] = img1[i] - 1;
    return Permutation(std::move(img));
  }
  std::vector<int> to_one_based() const {
    std::vector<int> img1(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) img1[i] = image_[i] + 1;
    return img1;
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  // P[i][j] = 1 iff i = sigma(j); the sigma-action on coordinate vectors,
  // v'_i = v_{sigma^{-1}(i)}, is v' = P v.
  IntMatrix matrix() const {
    IntMatrix p(size());
    for (int j = 0; j < size(); ++j) p.at(image_[j], j) = 1;
    return p;
  }

  // v'_i = v_{sigma^{-1}(i)}, i.e. v'_{sigma(j)} = v_j.
  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != size()) throw DimensionMismatch("permutation size mismatch");
    std::vector<T> out(v.size());
    for (int j = 0; j < size(); ++j) out[image_[j]] = v[j];
    return out;
  }

  bool operator==(const Permutation& o) const = default;

 private:
  void validate() const {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v < 0 || v >= size() || seen[v]) throw InvalidArgument("invalid permutation image array");
      seen[v] = 1;
    }
  }

  std::vector<int> image_;
};

}  // namespace mutflow
