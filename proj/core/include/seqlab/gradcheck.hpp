#ifndef SEQLAB_GRADCHECK_HPP
#define SEQLAB_GRADCHECK_HPP

#include <functional>
#include <span>
#include <string>

#include "seqlab/param.hpp"

namespace seqlab {

struct GradCheckReport {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  std::size_t checked = 0;
};

// Compares the analytic gradients stored in params[*]->grad against
// central differences (f(x+eps) - f(x-eps)) / 2eps of the scalar loss f.
//
// Protocol: the caller runs its backward pass first so that each grad
// holds the analytic gradient at the current parameter values; f must
// evaluate the loss at the current values without touching grads.
// f is probed twice up front and rejected (NumericError) if the two
// evaluations are not bitwise identical. eps must lie in [1e-6, 1e-4].
GradCheckReport grad_check(const std::function<double()>& f,
                           std::span<Param* const> params, double eps);

}  // namespace seqlab

#endif  // SEQLAB_GRADCHECK_HPP
