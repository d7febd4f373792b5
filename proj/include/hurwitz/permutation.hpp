#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Permutation of {0, ..., d-1} as an image table.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  int& at(int x) { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  // (*this . other)(x) = this[other[x]] — other acts first.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int cycle_count() const;  // fixed points included
  std::vector<std::vector<int>> cycles() const;
  std::vector<long> cycle_type() const;  // sorted descending

  // cycles listed in order; unlisted elements are fixed
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace hurwitz
