#include "springer_kit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace springer_kit {

Integer Partition::rank() const {
  Integer total = 0;
  for (Integer part : parts_) total = checked_add(total, part);
  return total;
}

Integer Partition::multiplicity(Integer value) const {
  return std::count(parts_.begin(), parts_.end(), value);
}

Partition validate_partition(std::span<const Integer> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      throw Error(ErrorCode::NonPositivePart,
                  "part " + std::to_string(parts[i]) + " at index " +
                      std::to_string(i) + " is not positive");
    }
    if (i > 0 && parts[i - 1] < parts[i]) {
      throw Error(
          ErrorCode::NotSorted,
          "parts must be weakly decreasing (index " + std::to_string(i) + ")");
    }
  }
  return Partition(std::vector<Integer>(parts.begin(), parts.end()));
}

namespace {

std::string join_parts(const std::vector<Integer>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ']';
  return out;
}

}  // namespace

std::string to_string(const Partition& p) { return join_parts(p.parts()); }

Integer Bipartition::rank() const {
  return checked_add(first.rank(), second.rank());
}

std::string to_string(const Bipartition& bp) {
  return "[" + to_string(bp.first) + "," + to_string(bp.second) + "]";
}

std::vector<Partition> enumerate_partitions(Integer n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<Integer> current;
  std::function<void(Integer, Integer)> fill = [&](Integer remaining,
                                                   Integer largest) {
    if (remaining == 0) {
      out.push_back(validate_partition(current));
      return;
    }
    for (Integer part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      fill(remaining - part, part);
      current.pop_back();
    }
  };
  fill(n, n);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(Integer n) {
  std::vector<Bipartition> out;
  for (Integer k = n; k >= 0; --k) {
    const auto firsts = enumerate_partitions(k);
    const auto seconds = enumerate_partitions(n - k);
    for (const auto& alpha : firsts) {
      for (const auto& beta : seconds) out.push_back({alpha, beta});
    }
  }
  return out;
}

bool is_symplectic_class(const Partition& p) {
  if (p.rank() % 2 != 0) return false;
  const auto& parts = p.parts();
  // Parts are sorted, so equal values form contiguous runs.
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 != 0 && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

SymplecticClassLabel::SymplecticClassLabel(Partition p)
    : partition_(std::move(p)) {
  if (!is_symplectic_class(partition_)) {
    throw Error(ErrorCode::NotSymplectic,
                to_string(partition_) + " does not label a symplectic class");
  }
  half_rank_ = partition_.rank() / 2;
}

std::vector<SymplecticClassLabel> enumerate_symplectic_classes(Integer n,
                                                               Integer bound) {
  if (n < 0 || n > bound) {
    throw Error(ErrorCode::BoundExceeded, "n = " + std::to_string(n) +
                                              " outside [0, " +
                                              std::to_string(bound) + "]");
  }
  std::vector<SymplecticClassLabel> out;
  std::vector<Integer> current;
  // Choose part values from the top down, each with a multiplicity; odd
  // values only take even multiplicities. Larger multiplicities first keeps
  // the output in decreasing lexicographic order.
  std::function<void(Integer, Integer)> fill = [&](Integer remaining,
                                                   Integer largest) {
    if (remaining == 0) {
      out.emplace_back(validate_partition(current));
      return;
    }
    for (Integer value = std::min(remaining, largest); value >= 1; --value) {
      const Integer step = value % 2 == 0 ? 1 : 2;
      Integer mult = remaining / value;
      if (mult % step != 0) --mult;
      for (; mult >= step; mult -= step) {
        current.insert(current.end(), static_cast<std::size_t>(mult), value);
        fill(remaining - mult * value, value - 1);
        current.resize(current.size() - static_cast<std::size_t>(mult));
      }
    }
  };
  fill(2 * n, 2 * n);
  return out;
}

ComponentData n_delta(const SymplecticClassLabel& label) {
  ComponentData out;
  const auto& parts = label.partition().parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == 0) {
      ++out.n_u;
      if ((j - i) % 2 != 0) out.delta_u = 1;
    }
    i = j;
  }
  return out;
}

Integer component_group_exponent(const SymplecticClassLabel& label) {
  const auto data = n_delta(label);
  return data.n_u - data.delta_u;
}

std::uint64_t component_group_order(const SymplecticClassLabel& label) {
  return checked_pow2(component_group_exponent(label));
}

Partition doubled(const Partition& mu) {
  std::vector<Integer> parts;
  parts.reserve(mu.length());
  for (Integer part : mu.parts()) parts.push_back(checked_mul(part, 2));
  return validate_partition(parts);
}

}  // namespace springer_kit
