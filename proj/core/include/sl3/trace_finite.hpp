#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sl3 {

/// A finite group G0 given by its multiplication table, with a subgroup Gamma0.
/// Element 0 need not be the identity; `identity` records it.
class FiniteGroupModel {
 public:
  FiniteGroupModel(std::string name, std::vector<std::string> labels, std::vector<int> table,
                   std::vector<int> subgroup, std::map<std::string, int> named = {});

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int x, int g) const { return mul(inv(x), mul(g, x)); }  // x^-1 g x
  const std::vector<int>& subgroup() const { return subgroup_; }
  bool in_subgroup(int g) const { return in_sub_[g] != 0; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::map<std::string, int>& named_elements() const { return named_; }

  /// Right cosets Gamma0 x: one representative each (smallest index) and the
  /// coset index of every element.
  const std::vector<int>& coset_representatives() const { return coset_reps_; }
  int coset_of(int g) const { return coset_of_[g]; }

  /// G0-conjugacy classes, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// Checks associativity (exhaustive up to order 60, 20000 seeded triples
  /// above), identity, inverses, and that Gamma0 is a subgroup. Throws
  /// std::logic_error on failure.
  void check_axioms() const;

 private:
  std::string name_;
  int n_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> subgroup_;
  std::vector<char> in_sub_;
  std::vector<int> inverse_;
  int identity_ = -1;
  std::map<std::string, int> named_;
  std::vector<int> coset_reps_;
  std::vector<int> coset_of_;
};

/// Battery: "s3-a3", "s4-s3", "sl2f3-borel", "z12-z4".
std::vector<std::string> finite_model_names();
FiniteGroupModel finite_model(const std::string& name);

/// "identity", "indicator:<i>", "constant:<c>", "class:<k>" (k-th conjugacy
/// class or a named element such as "transposition"), "random:<seed>"
/// (integers in [-5, 5]). Throws std::invalid_argument on anything else.
std::vector<std::int64_t> finite_function(const FiniteGroupModel& model, const std::string& spec);

// The three sides below are instantiated for std::int64_t (exact) and double.

/// sum over representatives x of Gamma0\G0 of sum_{gamma in Gamma0} f(x^-1 gamma x).
template <class S>
S regular_kernel_trace(const FiniteGroupModel& model, const std::vector<S>& f);

struct GeometricTerm {
  int representative = 0;
  int class_size = 0;              // size of the Gamma0-conjugacy class
  int gamma_centralizer = 0;       // |Gamma0_gamma|
  int group_centralizer = 0;       // |G0_gamma|
  int volume = 0;                  // |Gamma0_gamma \ G0_gamma|
};

/// sum over Gamma0-classes {gamma} of |Gamma0_gamma\G0_gamma| * sum_{x in G0_gamma\G0} f(x^-1 gamma x).
/// `representative_seed` != 0 shuffles which element of each class and coset is used.
template <class S>
S geometric_side(const FiniteGroupModel& model, const std::vector<S>& f,
                 std::uint64_t representative_seed = 0, std::vector<GeometricTerm>* terms = nullptr);

/// Matrix of R(f) phi(x) = sum_g f(g) phi(x g) on functions on Gamma0\G0, row-major.
template <class S>
std::vector<S> spectral_matrix(const FiniteGroupModel& model, const std::vector<S>& f);

template <class S>
S spectral_side(const FiniteGroupModel& model, const std::vector<S>& f);

}  // namespace sl3
