#include "springer_kit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace springer_kit {

namespace {

void require_weyl_rank(int n) {
  if (n < 0 || n > kMaxWeylRank) {
    throw Error(ErrorCode::BoundExceeded,
                "rank " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxWeylRank) + "]");
  }
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  require_weyl_rank(n);
  SignedPermutation w;
  w.rank_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) w.images_[i] = static_cast<std::int8_t>(i + 1);
  return w;
}

SignedPermutation SignedPermutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require_weyl_rank(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  SignedPermutation w;
  w.rank_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int target = std::abs(images[i]);
    if (target < 1 || target > n || seen[target]) {
      throw Error(ErrorCode::WrongParameters,
                  "images do not form a signed permutation");
    }
    seen[target] = true;
    w.images_[i] = static_cast<std::int8_t>(images[i]);
  }
  return w;
}

std::vector<int> SignedPermutation::images() const {
  return {images_.begin(), images_.begin() + rank_};
}

SignedPermutation SignedPermutation::operator*(
    const SignedPermutation& rhs) const {
  SignedPermutation out;
  out.rank_ = rank_;
  for (int i = 0; i < rank_; ++i) {
    out.images_[i] = static_cast<std::int8_t>((*this)(rhs.images_[i]));
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.rank_ = rank_;
  for (int i = 0; i < rank_; ++i) {
    const int target = images_[i];
    // w(i+1) = target  =>  w^-1(|target|) = sign(target) (i+1)
    out.images_[std::abs(target) - 1] =
        static_cast<std::int8_t>(target > 0 ? i + 1 : -(i + 1));
  }
  return out;
}

std::uint32_t SignedPermutation::key() const noexcept {
  std::uint32_t out = static_cast<std::uint32_t>(rank_);
  for (int i = 0; i < rank_; ++i) {
    out = (out << 4) | static_cast<std::uint32_t>(images_[i] + 8);
  }
  return out;
}

SignedPermutation reflection(const Root& alpha) {
  const int n = static_cast<int>(alpha.coefficients.size());
  std::vector<int> support;
  for (int k = 0; k < n; ++k) {
    if (alpha.coefficients[k] != 0) support.push_back(k);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  if (support.size() == 1) {
    images[support[0]] = -images[support[0]];
  } else if (support.size() == 2) {
    const int i = support[0];
    const int j = support[1];
    // e_i - e_j swaps the coordinates; e_i + e_j swaps and negates.
    const int sign = alpha.coefficients[i] * alpha.coefficients[j] < 0 ? 1 : -1;
    images[i] = sign * (j + 1);
    images[j] = sign * (i + 1);
  } else {
    throw Error(ErrorCode::WrongParameters, "not a root of B_n");
  }
  return SignedPermutation::from_images(images);
}

Subgroup::Subgroup(std::vector<SignedPermutation> elements)
    : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i].key(), i);
  }
}

bool Subgroup::contains(const SignedPermutation& w) const {
  return index_.contains(w.key());
}

std::ptrdiff_t Subgroup::index_of(const SignedPermutation& w) const {
  const auto it = index_.find(w.key());
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

Subgroup generate_subgroup(int n,
                           std::span<const SignedPermutation> generators) {
  std::vector<SignedPermutation> elements{SignedPermutation::identity(n)};
  std::unordered_map<std::uint32_t, std::size_t> seen{
      {elements.front().key(), 0}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      SignedPermutation product = elements[next] * g;
      if (seen.emplace(product.key(), elements.size()).second) {
        elements.push_back(product);
      }
    }
  }
  return Subgroup(std::move(elements));
}

bool is_normal_subgroup(
    const Subgroup& group, const Subgroup& subgroup,
    std::span<const SignedPermutation> subgroup_generators) {
  for (const auto& g : group.elements()) {
    const SignedPermutation g_inv = g.inverse();
    for (const auto& h : subgroup_generators) {
      if (!subgroup.contains(g * h * g_inv)) return false;
    }
  }
  return true;
}

WeylGroupB::WeylGroupB(int n) : rank_(n) {
  require_weyl_rank(n);
  std::vector<SignedPermutation> elements;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> images(perm.size());
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) {
        images[i] = (mask >> i) & 1u ? -perm[i] : perm[i];
      }
      elements.push_back(SignedPermutation::from_images(images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  group_ = Subgroup(std::move(elements));

  auto unit = [n](int i, int sign) {
    Root root{std::vector<int>(static_cast<std::size_t>(n), 0)};
    root.coefficients[i] = sign;
    return root;
  };
  for (int i = 0; i < n; ++i) {
    for (int sign : {1, -1}) roots_.push_back(unit(i, sign));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Root root = unit(i, si);
          root.coefficients[j] = sj;
          roots_.push_back(std::move(root));
        }
      }
    }
  }
  for (const auto& root : roots_) {
    // Positive: first non-zero coefficient is +1.
    const auto first =
        std::find_if(root.coefficients.begin(), root.coefficients.end(),
                     [](int c) { return c != 0; });
    if (*first == 1) reflections_.push_back(reflection(root));
  }
}

WeylGroupB weyl_group(int n) { return WeylGroupB(n); }

InvolutionDatum make_involution(int a, int b) {
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::WrongParameters, "a and b must be non-negative");
  }
  InvolutionDatum s{a + b, a, b, {}};
  s.sign_vector.assign(static_cast<std::size_t>(a), 1);
  s.sign_vector.insert(s.sign_vector.end(), static_cast<std::size_t>(b), -1);
  return s;
}

std::vector<InvolutionDatum> enumerate_quasi_isolated(int n) {
  if (n < 0) {
    throw Error(ErrorCode::WrongParameters, "rank must be non-negative");
  }
  std::vector<InvolutionDatum> out;
  for (int b = 0; b <= n; ++b) out.push_back(make_involution(n - b, b));
  return out;
}

int evaluate_root(const Root& alpha, const InvolutionDatum& s) {
  int value = 1;
  for (std::size_t k = 0; k < alpha.coefficients.size(); ++k) {
    if (alpha.coefficients[k] != 0) value *= s.sign_vector.at(k);
  }
  return value;
}

CentralizerWeyl centralizer_weyl(const InvolutionDatum& s) {
  const WeylGroupB weyl(s.n);
  // w . s has coordinate s_k at position |w(k)|; for +-1 entries the sign of
  // w(k) is irrelevant.
  std::vector<SignedPermutation> stabilizer;
  for (const auto& w : weyl.group().elements()) {
    bool fixes = true;
    for (int k = 1; k <= s.n && fixes; ++k) {
      fixes = s.sign_vector[std::abs(w(k)) - 1] == s.sign_vector[k - 1];
    }
    if (fixes) stabilizer.push_back(w);
  }

  std::vector<SignedPermutation> generators;
  for (const auto& root : weyl.roots()) {
    const auto first =
        std::find_if(root.coefficients.begin(), root.coefficients.end(),
                     [](int c) { return c != 0; });
    if (*first == 1 && evaluate_root(root, s) == 1) {
      generators.push_back(reflection(root));
    }
  }
  Subgroup connected = generate_subgroup(s.n, generators);
  return {Subgroup(std::move(stabilizer)), std::move(connected),
          std::move(generators)};
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  const int order = static_cast<int>(table_.size());
  auto invalid = [](const std::string& why) {
    return Error(ErrorCode::WrongParameters, "not a group table: " + why);
  };
  if (order == 0) throw invalid("empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != order) throw invalid("not square");
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    for (int v : row) {
      if (v < 0 || v >= order || seen[v])
        throw invalid("row not a permutation");
      seen[v] = true;
    }
  }
  for (int x = 0; x < order; ++x) {
    if (table_[0][x] != x || table_[x][0] != x) throw invalid("0 not identity");
  }
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      for (int z = 0; z < order; ++z) {
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) {
          throw invalid("not associative");
        }
      }
    }
  }
  inverses_.resize(static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) {
    const auto& row = table_[x];
    inverses_[x] =
        static_cast<int>(std::find(row.begin(), row.end(), 0) - row.begin());
  }
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw Error(ErrorCode::WrongParameters, "order must be >= 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) table[x][y] = (x + y) % order;
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& lhs,
                                        const FiniteGroup& rhs) {
  const int p = lhs.order();
  const int q = rhs.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(p * q),
                                      std::vector<int>(p * q));
  for (int x = 0; x < p * q; ++x) {
    for (int y = 0; y < p * q; ++y) {
      table[x][y] = lhs.multiply(x / q, y / q) * q + rhs.multiply(x % q, y % q);
    }
  }
  return FiniteGroup(std::move(table));
}

ComponentGroup component_group_A(const InvolutionDatum& s) {
  const CentralizerWeyl cw = centralizer_weyl(s);
  if (!is_normal_subgroup(cw.centralizer, cw.connected,
                          cw.connected_generators)) {
    throw Error(ErrorCode::WrongParameters,
                "connected centralizer is not normal");
  }
  for (const auto& h : cw.connected.elements()) {
    if (!cw.centralizer.contains(h)) {
      throw Error(ErrorCode::WrongParameters,
                  "connected centralizer is not contained in the centralizer");
    }
  }

  // Coset label of every element of W(s), by index in cw.centralizer.
  std::vector<int> label(cw.centralizer.order(), -1);
  std::vector<SignedPermutation> representatives;
  for (std::size_t i = 0; i < cw.centralizer.order(); ++i) {
    if (label[i] >= 0) continue;
    const auto& g = cw.centralizer.elements()[i];
    const int coset = static_cast<int>(representatives.size());
    representatives.push_back(g);
    for (const auto& h : cw.connected.elements()) {
      label[cw.centralizer.index_of(g * h)] = coset;
    }
  }

  const int order = static_cast<int>(representatives.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const auto product = representatives[x] * representatives[y];
      table[x][y] = label[cw.centralizer.index_of(product)];
    }
  }
  return {FiniteGroup(std::move(table)), std::move(representatives)};
}

std::vector<int> trivial_action(const FiniteGroup& group) {
  std::vector<int> out(static_cast<std::size_t>(group.order()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> h1_orbits(const FiniteGroup& group,
                           std::span<const int> action) {
  const int order = group.order();
  if (static_cast<int>(action.size()) != order) {
    throw Error(ErrorCode::WrongParameters, "action has the wrong size");
  }
  std::vector<bool> hit(static_cast<std::size_t>(order), false);
  for (int v : action) {
    if (v < 0 || v >= order || hit[v]) {
      throw Error(ErrorCode::WrongParameters, "action is not a bijection");
    }
    hit[v] = true;
  }
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (action[group.multiply(x, y)] !=
          group.multiply(action[x], action[y])) {
        throw Error(ErrorCode::WrongParameters, "action is not a homomorphism");
      }
    }
  }

  std::vector<int> representatives;
  std::vector<bool> visited(static_cast<std::size_t>(order), false);
  for (int z = 0; z < order; ++z) {
    if (visited[z]) continue;
    representatives.push_back(z);
    for (int x = 0; x < order; ++x) {
      visited[group.multiply(group.multiply(group.inverse(x), z), action[x])] =
          true;
    }
  }
  return representatives;
}

std::vector<SeriesLabel> series_labels(int n) {
  require_weyl_rank(n);
  std::vector<SeriesLabel> out;
  for (const auto& s : enumerate_quasi_isolated(n)) {
    const ComponentGroup a = component_group_A(s);
    for (int cls : h1_orbits(a.group, trivial_action(a.group))) {
      out.push_back({s, a.group.order(), cls});
    }
  }
  return out;
}

HarishChandraDatum harish_chandra_levi(int n, int e) {
  if (n < 0 || e < 0 ||
      static_cast<long long>(e) * (e + 1) > static_cast<long long>(n)) {
    throw Error(ErrorCode::RankExceeded,
                "need 0 <= e(e+1) <= n (n = " + std::to_string(n) +
                    ", e = " + std::to_string(e) + ")");
  }
  const int k = e * (e + 1);
  return {n, e, k, n - k, k, n - k};
}

}  // namespace springer_kit
