#include "hurwitz/permutation.hpp"

#include <algorithm>

namespace hurwitz {

Permutation::Permutation(int degree) : img_(degree) {
  for (int i = 0; i < degree; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw DomainError("image table is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw DomainError("degree mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[i] = img_[other.img_[i]];
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int x = i; !seen[x]; x = img_[x]) seen[x] = true;
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int x = i; !seen[x]; x = img_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<long> Permutation::cycle_type() const {
  std::vector<long> type;
  for (const auto& c : cycles()) type.push_back(static_cast<long>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i)
      p.img_[c[i]] = c[(i + 1) % c.size()];
  }
  // validate
  return Permutation(p.img_);
}

}  // namespace hurwitz
