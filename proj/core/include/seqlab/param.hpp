#ifndef SEQLAB_PARAM_HPP
#define SEQLAB_PARAM_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "seqlab/matrix.hpp"
#include "seqlab/rng.hpp"

namespace seqlab {

// A learnable tensor plus its gradient accumulator. Gradient accumulation
// is single-writer; values are shareable for concurrent reads.
struct Param {
  std::string name;
  Matrix value;
  Matrix grad;

  Param(std::string n, std::size_t rows, std::size_t cols)
      : name(std::move(n)), value(rows, cols), grad(rows, cols) {}

  void zero_grad() { grad.set_zero(); }

  // Glorot-uniform fill: +/- sqrt(6 / (fan_in + fan_out)).
  void init_glorot(Rng& rng);
};

// Owns every Param of a model; addresses are stable for the lifetime of
// the store, so layers keep raw pointers into it.
class ParamStore {
 public:
  Param& create(std::string name, std::size_t rows, std::size_t cols);

  Param* find(const std::string& name);
  const Param* find(const std::string& name) const;

  std::vector<Param*> all();
  std::vector<const Param*> all() const;

  void zero_grads();
  std::size_t count() const { return params_.size(); }

 private:
  std::vector<std::unique_ptr<Param>> params_;
};

double global_grad_norm(std::span<Param* const> params);

// Scales every gradient by threshold / norm when the global L2 norm
// exceeds the threshold; no-op otherwise. threshold must be positive.
void clip_global_norm(std::span<Param* const> params, double threshold);

}  // namespace seqlab

#endif  // SEQLAB_PARAM_HPP
