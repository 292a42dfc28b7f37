#pragma once

// Gabber-Galil style lower bound for the bottom of the combinatorial
// spectrum of a Cayley graph, driven by a finite cone-type automaton.

#include <string>
#include <vector>

#include "json.hpp"

namespace windtree {

struct AutomatonType {
  std::vector<int> successors;  // successor types, one per s in S+(g)
  int predecessors = 0;         // #S-(g)
  friend bool operator==(const AutomatonType&, const AutomatonType&) = default;
};

// Successor multisets are kept sorted, so == compares multisets.
class TypeAutomaton {
 public:
  // root = -1 for an automaton without a distinguished root type.
  TypeAutomaton(int generator_count, int root, std::vector<AutomatonType> types);

  // Types 0..3 of G = <u, tu^3> with S = {u, tu^3, and inverses}.
  static TypeAutomaton builtin();
  // Regular tree of degree k: the root has k successors of type 1, and type 1
  // has k-1 successors of type 1 and one predecessor.
  static TypeAutomaton regular_tree(int degree);

  static TypeAutomaton from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int generator_count() const { return generator_count_; }
  int root() const { return root_; }
  const std::vector<AutomatonType>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }

  // Types that carry a valuation coordinate: every type with predecessors.
  std::vector<int> valued_types() const;

  friend bool operator==(const TypeAutomaton&, const TypeAutomaton&) = default;

 private:
  int generator_count_;
  int root_;
  std::vector<AutomatonType> types_;
};

// Positive weight per valued type, in the order of valued_types().
class Valuation {
 public:
  explicit Valuation(std::vector<double> c);  // throws NonPositiveValuation
  const std::vector<double>& values() const { return c_; }
  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }

 private:
  std::vector<double> c_;
};

// f_k(c) = sum over successor types t of c_t + #S-(k) / c_k, for every type.
std::vector<double> f_values(const TypeAutomaton& aut, const Valuation& c);

// #S - max_k f_k(c). A valid lower bound for mu_0 for every positive c.
double gg_lower_bound(const TypeAutomaton& aut, const Valuation& c);

struct GgOptimum {
  Valuation c;
  double value;   // max_k f_k(c), re-evaluated at c
  double bound;   // gg_lower_bound(aut, c)
  bool diverged;  // no start improved on its seed; c is the best grid point
};

// Deterministic multi-start minimization of max_k f_k over positive c.
GgOptimum optimize(const TypeAutomaton& aut, double tol);

// k - 2 sqrt(k - 1): the bottom of the spectrum of the k-regular tree.
double upper_bound(int generator_count);

}  // namespace windtree
