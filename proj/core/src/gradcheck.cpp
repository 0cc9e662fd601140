#include "seqlab/gradcheck.hpp"

#include <cmath>

#include "seqlab/errors.hpp"

namespace seqlab {

GradCheckReport grad_check(const std::function<double()>& f,
                           std::span<Param* const> params, double eps) {
  if (!(eps >= 1e-6 && eps <= 1e-4)) {
    throw ConfigError("grad_check: eps must lie in [1e-6, 1e-4]");
  }
  double probe1 = f();
  double probe2 = f();
  if (!(probe1 == probe2)) {
    throw NumericError("grad_check: loss function is not deterministic");
  }

  GradCheckReport report;
  for (Param* p : params) {
    for (std::size_t i = 0; i < p->value.size(); ++i) {
      double saved = p->value.data()[i];
      p->value.data()[i] = saved + eps;
      double up = f();
      p->value.data()[i] = saved - eps;
      double down = f();
      p->value.data()[i] = saved;

      double numeric = (up - down) / (2.0 * eps);
      double analytic = p->grad.data()[i];
      double abs_err = std::fabs(analytic - numeric);
      double denom = std::max(std::fabs(analytic) + std::fabs(numeric), 1e-8);
      double rel_err = abs_err / denom;
      if (rel_err > report.max_rel_error) {
        report.max_rel_error = rel_err;
        report.worst_param = p->name;
        report.worst_index = i;
      }
      report.max_abs_error = std::max(report.max_abs_error, abs_err);
      ++report.checked;
    }
  }
  return report;
}

}  // namespace seqlab
