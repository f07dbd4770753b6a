#include "selt/partition.hpp"

#include <functional>
#include <sstream>

#include "selt/error.hpp"

namespace selt {

std::ostream& operator<<(std::ostream& os, const Box& b) {
  return os << '(' << b.row << ',' << b.col << ')';
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw InvalidArgument("strict partition parts must be positive: " + to_string());
    }
    if (i > 0 && parts_[i] >= parts_[i - 1]) {
      throw InvalidArgument("strict partition parts must strictly decrease: " + to_string());
    }
    size_ += parts_[i];
  }
}

std::vector<Box> StrictPartition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<size_t>(size_));
  for (int i = 1; i <= length(); ++i) {
    for (int j = i; j <= i + part(i) - 1; ++j) out.push_back({i, j});
  }
  return out;
}

std::string StrictPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

void StrictPartition::remove_last_box(int row) {
  if (row < 1 || row > length()) {
    throw InvalidArgument("no row " + std::to_string(row) + " in " + to_string());
  }
  auto& p = parts_[static_cast<size_t>(row - 1)];
  if (row < length() && p - 1 <= parts_[static_cast<size_t>(row)]) {
    throw InvalidArgument("removing the last box of row " + std::to_string(row) +
                          " breaks strictness of " + to_string());
  }
  --p;
  --size_;
  if (p == 0) parts_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const StrictPartition& p) {
  return os << p.to_string();
}

StrictPartition rho(int n) {
  if (n < 0) throw InvalidArgument("rho(n) requires n >= 0");
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return StrictPartition(std::move(parts));
}

StrictPartition rho_nm(int n, int m) {
  if (n < 0 || m < 0 || m > n) {
    throw InvalidArgument("rho_{n,m} requires 0 <= m <= n, got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
  }
  std::vector<int> parts;
  for (int k = 0; k < m; ++k) parts.push_back(n - k);
  return StrictPartition(std::move(parts));
}

bool contains(const StrictPartition& inner, const StrictPartition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_)) {
    throw ContainmentError(inner_.to_string() + " is not contained in " + outer_.to_string());
  }
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  for (const Box& b : outer_.boxes()) {
    if (!inner_.has_box(b)) out.push_back(b);
  }
  return out;
}

std::vector<int> SkewShape::diagonal_edges() const {
  std::vector<int> out;
  for (int i = 1; i <= outer_.length(); ++i) out.push_back(i);
  return out;
}

SkewShape skew(const StrictPartition& nu, const StrictPartition& lambda) {
  return SkewShape(nu, lambda);
}

std::vector<Box> inner_corners(const SkewShape& shape) {
  const StrictPartition& lam = shape.inner();
  std::vector<Box> out;
  for (int i = 1; i <= lam.length(); ++i) {
    // Row i's last box is a corner unless row i+1 reaches under it.
    const int below = lam.part(i + 1);
    if (below == 0 || below < lam.part(i) - 1) out.push_back({i, i + lam.part(i) - 1});
  }
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p - 1);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(size, size);
  return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int max_size) {
  std::vector<StrictPartition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto part = strict_partitions_of(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<StrictPartition> strict_partitions_in_rho(int n) {
  std::vector<StrictPartition> out;
  for (const auto& p : strict_partitions_up_to(n * (n + 1) / 2)) {
    if (p.part(1) <= n) out.push_back(p);
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace selt
