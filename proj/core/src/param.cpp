#include "seqlab/param.hpp"

#include <cmath>

#include "seqlab/errors.hpp"

namespace seqlab {

void Param::init_glorot(Rng& rng) {
  double fan_in = static_cast<double>(value.cols());
  double fan_out = static_cast<double>(value.rows());
  double bound = std::sqrt(6.0 / (fan_in + fan_out));
  for (std::size_t i = 0; i < value.size(); ++i) {
    value.data()[i] = rng.uniform(-bound, bound);
  }
}

Param& ParamStore::create(std::string name, std::size_t rows, std::size_t cols) {
  if (find(name) != nullptr) {
    throw ConfigError("ParamStore: duplicate parameter name '" + name + "'");
  }
  params_.push_back(std::make_unique<Param>(std::move(name), rows, cols));
  return *params_.back();
}

Param* ParamStore::find(const std::string& name) {
  for (auto& p : params_) {
    if (p->name == name) return p.get();
  }
  return nullptr;
}

const Param* ParamStore::find(const std::string& name) const {
  for (auto& p : params_) {
    if (p->name == name) return p.get();
  }
  return nullptr;
}

std::vector<Param*> ParamStore::all() {
  std::vector<Param*> out;
  out.reserve(params_.size());
  for (auto& p : params_) out.push_back(p.get());
  return out;
}

std::vector<const Param*> ParamStore::all() const {
  std::vector<const Param*> out;
  out.reserve(params_.size());
  for (auto& p : params_) out.push_back(p.get());
  return out;
}

void ParamStore::zero_grads() {
  for (auto& p : params_) p->zero_grad();
}

double global_grad_norm(std::span<Param* const> params) {
  double sq = 0.0;
  for (const Param* p : params) {
    for (std::size_t i = 0; i < p->grad.size(); ++i) {
      double g = p->grad.data()[i];
      sq += g * g;
    }
  }
  return std::sqrt(sq);
}

void clip_global_norm(std::span<Param* const> params, double threshold) {
  if (threshold <= 0.0) {
    throw ConfigError("clip_global_norm: threshold must be positive");
  }
  double norm = global_grad_norm(params);
  if (norm <= threshold) return;
  double factor = threshold / norm;
  for (Param* p : params) {
    for (std::size_t i = 0; i < p->grad.size(); ++i) {
      p->grad.data()[i] *= factor;
    }
  }
}

}  // namespace seqlab
