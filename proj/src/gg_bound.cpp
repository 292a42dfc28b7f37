#include "windtree/gg_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include "windtree/errors.hpp"

namespace windtree {

namespace {

constexpr double kGridLow = 0.05;
constexpr double kGridHigh = 20.0;
constexpr int kGridPointsPerAxis = 9;
constexpr std::size_t kRefinedSeeds = 8;
constexpr int kMaxIterations = 5000;
constexpr int kRestarts = 6;

// Map type index -> position in the valuation, or -1.
std::vector<int> valuation_index(const TypeAutomaton& aut) {
  std::vector<int> pos(aut.size(), -1);
  int next = 0;
  for (int t : aut.valued_types()) pos[static_cast<std::size_t>(t)] = next++;
  return pos;
}

double max_f(const TypeAutomaton& aut, const std::vector<int>& pos, const double* c) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < aut.size(); ++k) {
    const AutomatonType& type = aut.types()[k];
    double f = 0.0;
    for (int t : type.successors) f += c[pos[static_cast<std::size_t>(t)]];
    if (type.predecessors > 0) f += type.predecessors / c[pos[k]];
    worst = std::max(worst, f);
  }
  return worst;
}

struct Objective {
  const TypeAutomaton* aut;
  const std::vector<int>* pos;
  std::vector<double> scratch;
};

// Minimized in log coordinates so that every iterate stays positive.
double objective(const gsl_vector* x, void* params) {
  auto* obj = static_cast<Objective*>(params);
  for (std::size_t i = 0; i < obj->scratch.size(); ++i) obj->scratch[i] = std::exp(gsl_vector_get(x, i));
  return max_f(*obj->aut, *obj->pos, obj->scratch.data());
}

struct Candidate {
  std::vector<double> log_c;
  double value;
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.value != y.value) return x.value < y.value;
  return x.log_c < y.log_c;
}

struct GslVectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

Candidate nelder_mead(Objective& obj, const Candidate& seed, double tol) {
  const std::size_t dim = seed.log_c.size();
  gsl_multimin_function fn{&objective, dim, &obj};
  std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_vector, GslVectorDeleter> step(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> nm(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));

  Candidate best = seed;
  double step_size = 0.5;
  for (int restart = 0; restart < kRestarts; ++restart) {
    for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x.get(), i, best.log_c[i]);
    gsl_vector_set_all(step.get(), step_size);
    gsl_multimin_fminimizer_set(nm.get(), &fn, x.get(), step.get());
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      if (gsl_multimin_fminimizer_iterate(nm.get()) != GSL_SUCCESS) break;
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(nm.get()), tol) == GSL_SUCCESS) break;
    }
    Candidate found{std::vector<double>(dim), nm->fval};
    for (std::size_t i = 0; i < dim; ++i) found.log_c[i] = gsl_vector_get(nm->x, i);
    if (!better(found, best)) break;
    best = std::move(found);
    step_size *= 0.25;
  }
  return best;
}

}  // namespace

TypeAutomaton::TypeAutomaton(int generator_count, int root, std::vector<AutomatonType> types)
    : generator_count_(generator_count), root_(root), types_(std::move(types)) {
  if (generator_count_ < 1) throw InvalidArgument("automaton needs at least one generator");
  if (root_ < -1 || root_ >= static_cast<int>(types_.size())) {
    throw InvalidArgument("automaton root index out of range");
  }
  for (std::size_t k = 0; k < types_.size(); ++k) {
    AutomatonType& t = types_[k];
    std::sort(t.successors.begin(), t.successors.end());
    const std::string where = "automaton type " + std::to_string(k);
    if (t.predecessors < 0) throw InvalidArgument(where + ": negative predecessor count");
    for (int s : t.successors) {
      if (s < 0 || s >= static_cast<int>(types_.size())) {
        throw InvalidArgument(where + ": successor index out of range");
      }
    }
    const auto degree = static_cast<int>(t.successors.size()) + t.predecessors;
    if (static_cast<int>(k) == root_) {
      if (t.predecessors != 0 || degree != generator_count_) {
        throw InvalidArgument(where + ": root must have #S successors and no predecessors");
      }
    } else if (degree != generator_count_) {
      throw InvalidArgument(where + ": #S+ + #S- != #S");
    }
  }
  for (const AutomatonType& t : types_) {
    for (int s : t.successors) {
      if (types_[static_cast<std::size_t>(s)].predecessors == 0) {
        throw InvalidArgument("successor type " + std::to_string(s) + " has no predecessors");
      }
    }
  }
}

TypeAutomaton TypeAutomaton::builtin() {
  return TypeAutomaton(4, 0,
                       {AutomatonType{{1, 1, 1, 1}, 0}, AutomatonType{{1, 1, 2}, 1},
                        AutomatonType{{1, 1, 3}, 1}, AutomatonType{{1, 1}, 2}});
}

TypeAutomaton TypeAutomaton::regular_tree(int degree) {
  if (degree < 2) throw InvalidArgument("regular tree degree must be at least 2");
  const auto k = static_cast<std::size_t>(degree);
  return TypeAutomaton(degree, 0,
                       {AutomatonType{std::vector<int>(k, 1), 0},
                        AutomatonType{std::vector<int>(k - 1, 1), 1}});
}

TypeAutomaton TypeAutomaton::from_json(const nlohmann::json& j) {
  try {
    std::vector<AutomatonType> types;
    for (const auto& t : j.at("types")) {
      types.push_back(AutomatonType{t.at("successors").get<std::vector<int>>(),
                                    t.at("predecessors").get<int>()});
    }
    const int root = j.contains("root") && !j.at("root").is_null() ? j.at("root").get<int>() : -1;
    return TypeAutomaton(j.at("generator_count").get<int>(), root, std::move(types));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed automaton JSON: ") + e.what());
  }
}

nlohmann::json TypeAutomaton::to_json() const {
  nlohmann::json types = nlohmann::json::array();
  for (const AutomatonType& t : types_) {
    types.push_back({{"successors", t.successors}, {"predecessors", t.predecessors}});
  }
  return {{"generator_count", generator_count_}, {"root", root_}, {"types", types}};
}

std::vector<int> TypeAutomaton::valued_types() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < types_.size(); ++k) {
    if (types_[k].predecessors > 0) out.push_back(static_cast<int>(k));
  }
  return out;
}

Valuation::Valuation(std::vector<double> c) : c_(std::move(c)) {
  for (double x : c_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw NonPositiveValuation("valuation entries must be positive and finite");
    }
  }
}

std::vector<double> f_values(const TypeAutomaton& aut, const Valuation& c) {
  const auto pos = valuation_index(aut);
  if (c.size() != aut.valued_types().size()) {
    throw InvalidArgument("valuation has " + std::to_string(c.size()) + " entries, automaton needs " +
                          std::to_string(aut.valued_types().size()));
  }
  std::vector<double> f(aut.size(), 0.0);
  for (std::size_t k = 0; k < aut.size(); ++k) {
    const AutomatonType& type = aut.types()[k];
    for (int t : type.successors) f[k] += c[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])];
    if (type.predecessors > 0) f[k] += type.predecessors / c[static_cast<std::size_t>(pos[k])];
  }
  return f;
}

double gg_lower_bound(const TypeAutomaton& aut, const Valuation& c) {
  const auto f = f_values(aut, c);
  return aut.generator_count() - *std::max_element(f.begin(), f.end());
}

GgOptimum optimize(const TypeAutomaton& aut, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("optimizer tolerance must be positive");
  const auto pos = valuation_index(aut);
  const std::size_t dim = aut.valued_types().size();
  if (dim == 0) throw InvalidArgument("automaton has no valued types");
  Objective obj{&aut, &pos, std::vector<double>(dim)};

  // Logarithmic grid over (kGridLow, kGridHigh)^dim, interior points only.
  const double lo = std::log(kGridLow);
  const double hi = std::log(kGridHigh);
  std::vector<double> axis;
  for (int i = 1; i <= kGridPointsPerAxis; ++i) {
    axis.push_back(lo + (hi - lo) * i / (kGridPointsPerAxis + 1));
  }
  std::vector<Candidate> grid;
  std::vector<std::size_t> digits(dim, 0);
  std::vector<double> c(dim);
  while (true) {
    Candidate cand{std::vector<double>(dim), 0.0};
    for (std::size_t i = 0; i < dim; ++i) {
      cand.log_c[i] = axis[digits[i]];
      c[i] = std::exp(cand.log_c[i]);
    }
    cand.value = max_f(aut, pos, c.data());
    grid.push_back(std::move(cand));
    std::size_t i = 0;
    while (i < dim && ++digits[i] == axis.size()) digits[i++] = 0;
    if (i == dim) break;
  }
  std::sort(grid.begin(), grid.end(), better);

  const std::size_t starts = std::min(kRefinedSeeds, grid.size());
  Candidate best = grid.front();
  bool improved_any = false;
  for (std::size_t s = 0; s < starts; ++s) {
    Candidate local = nelder_mead(obj, grid[s], tol);
    if (better(local, grid[s])) improved_any = true;
    if (better(local, best)) best = std::move(local);
  }
  if (!improved_any) best = grid.front();

  std::vector<double> c_best(dim);
  for (std::size_t i = 0; i < dim; ++i) c_best[i] = std::exp(best.log_c[i]);
  Valuation val(std::move(c_best));
  const auto f = f_values(aut, val);
  const double value = *std::max_element(f.begin(), f.end());
  return GgOptimum{val, value, aut.generator_count() - value, !improved_any};
}

double upper_bound(int generator_count) {
  if (generator_count < 2) throw InvalidArgument("upper bound needs at least two generators");
  return generator_count - 2.0 * std::sqrt(generator_count - 1.0);
}

}  // namespace windtree
