#include "sl3/trace_finite.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sl3 {

FiniteGroupModel::FiniteGroupModel(std::string name, std::vector<std::string> labels, std::vector<int> table,
                                   std::vector<int> subgroup, std::map<std::string, int> named)
    : name_(std::move(name)),
      n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      subgroup_(std::move(subgroup)),
      named_(std::move(named)) {
  if (n_ == 0 || table_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("FiniteGroupModel: table size does not match element count");
  for (int v : table_)
    if (v < 0 || v >= n_) throw std::invalid_argument("FiniteGroupModel: table entry out of range");
  std::sort(subgroup_.begin(), subgroup_.end());
  in_sub_.assign(n_, 0);
  for (int g : subgroup_) {
    if (g < 0 || g >= n_) throw std::invalid_argument("FiniteGroupModel: subgroup element out of range");
    in_sub_[g] = 1;
  }

  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::logic_error("FiniteGroupModel: no identity element");
  inverse_.assign(n_, -1);
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h)
      if (mul(g, h) == identity_) {
        inverse_[g] = h;
        break;
      }
  for (int g = 0; g < n_; ++g)
    if (inverse_[g] < 0) throw std::logic_error("FiniteGroupModel: element without inverse");

  coset_of_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    if (coset_of_[x] >= 0) continue;
    const int idx = static_cast<int>(coset_reps_.size());
    coset_reps_.push_back(x);
    for (int g : subgroup_) coset_of_[mul(g, x)] = idx;
  }
}

std::vector<std::vector<int>> FiniteGroupModel::conjugacy_classes() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::vector<int> cls;
    for (int x = 0; x < n_; ++x) {
      const int c = conj(x, g);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

void FiniteGroupModel::check_axioms() const {
  auto assoc = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::logic_error("FiniteGroupModel " + name_ + ": multiplication is not associative");
  };
  if (n_ <= 60) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  for (int g = 0; g < n_; ++g)
    if (mul(g, inv(g)) != identity_ || mul(inv(g), g) != identity_)
      throw std::logic_error("FiniteGroupModel " + name_ + ": bad inverse");
  if (!in_subgroup(identity_)) throw std::logic_error("FiniteGroupModel " + name_ + ": subgroup lacks identity");
  for (int a : subgroup_) {
    if (!in_subgroup(inv(a))) throw std::logic_error("FiniteGroupModel " + name_ + ": subgroup not closed");
    for (int b : subgroup_)
      if (!in_subgroup(mul(a, b))) throw std::logic_error("FiniteGroupModel " + name_ + ": subgroup not closed");
  }
}

namespace {

template <class E, class Product, class InSub, class Label>
FiniteGroupModel build(std::string name, const std::vector<E>& elems, Product product, InSub in_sub, Label label,
                       const std::map<std::string, E>& named = {}) {
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const E& e) {
    const auto it = std::find(elems.begin(), elems.end(), e);
    if (it == elems.end()) throw std::logic_error("finite model: product left the element list");
    return static_cast<int>(it - elems.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index_of(product(elems[a], elems[b]));
  std::vector<int> sub;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    if (in_sub(elems[i])) sub.push_back(i);
    labels.push_back(label(elems[i]));
  }
  std::map<std::string, int> named_idx;
  for (const auto& [k, e] : named) named_idx[k] = index_of(e);
  return FiniteGroupModel(std::move(name), std::move(labels), std::move(table), std::move(sub),
                          std::move(named_idx));
}

template <std::size_t N>
std::vector<std::array<int, N>> permutations() {
  std::array<int, N> p{};
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::array<int, N>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <std::size_t N>
std::array<int, N> compose(const std::array<int, N>& p, const std::array<int, N>& q) {
  std::array<int, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = p[q[i]];
  return r;
}

template <std::size_t N>
bool is_even(const std::array<int, N>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

template <std::size_t N>
std::string perm_label(const std::array<int, N>& p) {
  std::string s = "[";
  for (int v : p) s += std::to_string(v);
  return s + "]";
}

FiniteGroupModel model_s3_a3() {
  using P = std::array<int, 3>;
  return build<P>("s3-a3", permutations<3>(), compose<3>, is_even<3>, perm_label<3>,
                  {{"transposition", P{1, 0, 2}}, {"three-cycle", P{1, 2, 0}}});
}

FiniteGroupModel model_s4_s3() {
  using P = std::array<int, 4>;
  return build<P>("s4-s3", permutations<4>(), compose<4>, [](const P& p) { return p[3] == 3; }, perm_label<4>,
                  {{"transposition", P{1, 0, 2, 3}}, {"three-cycle", P{1, 2, 0, 3}}, {"four-cycle", P{1, 2, 3, 0}}});
}

FiniteGroupModel model_sl2f3_borel() {
  using M = std::array<int, 4>;  // (a, b, c, d) mod 3
  std::vector<M> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
  const auto product = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3, (x[2] * y[0] + x[3] * y[2]) % 3,
             (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  const auto label = [](const M& m) {
    return "[" + std::to_string(m[0]) + std::to_string(m[1]) + ";" + std::to_string(m[2]) + std::to_string(m[3]) + "]";
  };
  return build<M>("sl2f3-borel", elems, product, [](const M& m) { return m[2] == 0; }, label,
                  {{"minus-identity", M{2, 0, 0, 2}}, {"unipotent", M{1, 1, 0, 1}}});
}

FiniteGroupModel model_z12_z4() {
  std::vector<int> elems(12);
  std::iota(elems.begin(), elems.end(), 0);
  return build<int>("z12-z4", elems, [](int a, int b) { return (a + b) % 12; },
                    [](int a) { return a % 3 == 0; }, [](int a) { return std::to_string(a); },
                    {{"generator", 1}});
}

}  // namespace

std::vector<std::string> finite_model_names() { return {"s3-a3", "s4-s3", "sl2f3-borel", "z12-z4"}; }

FiniteGroupModel finite_model(const std::string& name) {
  if (name == "s3-a3") return model_s3_a3();
  if (name == "s4-s3") return model_s4_s3();
  if (name == "sl2f3-borel") return model_sl2f3_borel();
  if (name == "z12-z4") return model_z12_z4();
  throw std::invalid_argument("unknown finite model: " + name);
}

std::vector<std::int64_t> finite_function(const FiniteGroupModel& model, const std::string& spec) {
  const int n = model.order();
  std::vector<std::int64_t> f(n, 0);
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("finite_function: bad number in " + spec);
    return v;
  };

  if (kind == "identity" && arg.empty()) {
    f[model.identity()] = 1;
  } else if (kind == "indicator") {
    const long long i = parse_int(arg);
    if (i < 0 || i >= n) throw std::invalid_argument("finite_function: index out of range in " + spec);
    f[i] = 1;
  } else if (kind == "constant") {
    std::fill(f.begin(), f.end(), parse_int(arg));
  } else if (kind == "class") {
    const auto classes = model.conjugacy_classes();
    const auto named = model.named_elements().find(arg);
    std::vector<int> cls;
    if (named != model.named_elements().end()) {
      for (const auto& c : classes)
        if (std::binary_search(c.begin(), c.end(), named->second)) cls = c;
    } else {
      const long long k = parse_int(arg);
      if (k < 0 || k >= static_cast<long long>(classes.size()))
        throw std::invalid_argument("finite_function: class index out of range in " + spec);
      cls = classes[k];
    }
    for (int g : cls) f[g] = 1;
  } else if (kind == "random") {
    std::mt19937_64 rng(static_cast<std::uint64_t>(parse_int(arg)));
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto& v : f) v = d(rng);
  } else {
    throw std::invalid_argument("finite_function: unknown function spec " + spec);
  }
  return f;
}

template <class S>
S regular_kernel_trace(const FiniteGroupModel& model, const std::vector<S>& f) {
  S total{};
  for (int x : model.coset_representatives())
    for (int gamma : model.subgroup()) total += f[model.conj(x, gamma)];
  return total;
}

template <class S>
S geometric_side(const FiniteGroupModel& model, const std::vector<S>& f, std::uint64_t representative_seed,
                 std::vector<GeometricTerm>* terms) {
  const int n = model.order();
  std::vector<int> sub_order = model.subgroup();
  std::vector<int> group_order(n);
  std::iota(group_order.begin(), group_order.end(), 0);
  if (representative_seed != 0) {
    std::mt19937_64 rng(representative_seed);
    std::shuffle(sub_order.begin(), sub_order.end(), rng);
    std::shuffle(group_order.begin(), group_order.end(), rng);
  }

  S total{};
  std::vector<char> seen(n, 0);
  for (int gamma : sub_order) {
    if (seen[gamma]) continue;
    int class_size = 0;
    for (int d : model.subgroup()) {
      const int c = model.conj(d, gamma);
      if (!seen[c]) {
        seen[c] = 1;
        ++class_size;
      }
    }
    std::vector<int> centralizer;
    int gamma_centralizer = 0;
    for (int g = 0; g < n; ++g)
      if (model.mul(g, gamma) == model.mul(gamma, g)) {
        centralizer.push_back(g);
        if (model.in_subgroup(g)) ++gamma_centralizer;
      }
    const int group_centralizer = static_cast<int>(centralizer.size());
    const int volume = group_centralizer / gamma_centralizer;

    // Right cosets G_gamma y, one representative each.
    std::vector<char> covered(n, 0);
    S orbit{};
    for (int y : group_order) {
      if (covered[y]) continue;
      for (int c : centralizer) covered[model.mul(c, y)] = 1;
      orbit += f[model.conj(y, gamma)];
    }
    total += static_cast<S>(volume) * orbit;
    if (terms) terms->push_back({gamma, class_size, gamma_centralizer, group_centralizer, volume});
  }
  return total;
}

template <class S>
std::vector<S> spectral_matrix(const FiniteGroupModel& model, const std::vector<S>& f) {
  const auto& reps = model.coset_representatives();
  const std::size_t m = reps.size();
  std::vector<S> mat(m * m, S{});
  for (std::size_t i = 0; i < m; ++i)
    for (int g = 0; g < model.order(); ++g) mat[i * m + model.coset_of(model.mul(reps[i], g))] += f[g];
  return mat;
}

template <class S>
S spectral_side(const FiniteGroupModel& model, const std::vector<S>& f) {
  const std::vector<S> mat = spectral_matrix(model, f);
  const std::size_t m = model.coset_representatives().size();
  S tr{};
  for (std::size_t i = 0; i < m; ++i) tr += mat[i * m + i];
  return tr;
}

template std::int64_t regular_kernel_trace(const FiniteGroupModel&, const std::vector<std::int64_t>&);
template double regular_kernel_trace(const FiniteGroupModel&, const std::vector<double>&);
template std::int64_t geometric_side(const FiniteGroupModel&, const std::vector<std::int64_t>&, std::uint64_t,
                                     std::vector<GeometricTerm>*);
template double geometric_side(const FiniteGroupModel&, const std::vector<double>&, std::uint64_t,
                               std::vector<GeometricTerm>*);
template std::vector<std::int64_t> spectral_matrix(const FiniteGroupModel&, const std::vector<std::int64_t>&);
template std::vector<double> spectral_matrix(const FiniteGroupModel&, const std::vector<double>&);
template std::int64_t spectral_side(const FiniteGroupModel&, const std::vector<std::int64_t>&);
template double spectral_side(const FiniteGroupModel&, const std::vector<double>&);

}  // namespace sl3
