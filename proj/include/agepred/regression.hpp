#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "agepred/error.hpp"
#include "agepred/features.hpp"
#include "agepred/rng.hpp"
#include "agepred/util.hpp"

namespace agepred {

struct LassoModel {
  std::vector<std::pair<int, double>> weights;  // sorted by id, nonzero only
  double intercept = 0.0;
  double reg_param = 0.0;
  double learning_rate = 0.0;
};

struct SgdConfig {
  int epochs = 100;
  std::vector<double> learning_rate_grid = {0.5,    0.25,    0.125,
                                            0.0625, 0.03125, 0.015625};
  std::vector<double> reg_param_grid = {0.5,    0.25,    0.125,
                                        0.0625, 0.03125, 0.015625};
  std::uint64_t seed = 0;
  double validation_fraction = 0.1;
  int threads = 1;
};

struct SgdEpochStat {
  int epoch = 0;
  double objective = 0.0;  // (1/2N) sum r^2 + alpha * ||w||_1, full data
};

inline double soft_threshold(double w, double t) {
  if (w > t) return w - t;
  if (w < -t) return w + t;
  return 0.0;
}

inline double predict_raw(const LassoModel& model, const FeatureVector& fv) {
  double y = model.intercept;
  std::size_t i = 0, j = 0;
  const auto& w = model.weights;
  const auto& x = fv.entries;
  while (i < w.size() && j < x.size()) {
    if (w[i].first < x[j].first) {
      ++i;
    } else if (w[i].first > x[j].first) {
      ++j;
    } else {
      y += w[i].second * x[j].second;
      ++i;
      ++j;
    }
  }
  return y;
}

// Predictions are clamped to plausible author ages.
inline double predict_age(const LassoModel& model, const FeatureVector& fv) {
  return std::clamp(predict_raw(model, fv), 10.0, 100.0);
}

// Minimizes (1/2N) sum_d (y_d - w.x_d - b)^2 + alpha ||w||_1 by per-example
// gradient steps followed by a soft-threshold proximal step of lr_t * alpha
// (intercept unregularized). The step size decays as lr / sqrt(step).
//
// Shrinkage on untouched coordinates is deferred: consecutive soft-threshold
// steps compose additively, so each weight absorbs its accumulated threshold
// the next time its feature appears. Results are identical to shrinking every
// weight every step.
inline LassoModel train_lasso_sgd(std::span<const AgedVector> data, double lr,
                                  double alpha, const SgdConfig& config,
                                  std::vector<SgdEpochStat>* log = nullptr) {
  if (data.empty()) throw ValidationError("train_lasso_sgd: no data");
  if (!(lr > 0.0)) throw ValidationError("train_lasso_sgd: lr must be > 0");
  if (alpha < 0.0) {
    throw ValidationError("train_lasso_sgd: alpha must be >= 0");
  }
  if (config.epochs < 1) {
    throw ValidationError("train_lasso_sgd: epochs must be >= 1");
  }
  for (const auto& doc : data) {
    if (!(doc.age >= 5.0 && doc.age <= 120.0)) {
      throw ValidationError("train_lasso_sgd: age out of range [5,120]: " +
                            std::to_string(doc.age));
    }
  }

  int max_id = -1;
  for (const auto& doc : data) {
    if (!doc.fv.entries.empty()) {
      max_id = std::max(max_id, doc.fv.entries.back().first);
    }
  }
  const std::size_t n_feat = static_cast<std::size_t>(max_id + 1);
  const std::size_t n = data.size();

  std::vector<double> w(n_feat, 0.0);
  std::vector<double> shrink_seen(n_feat, 0.0);
  double shrink_total = 0.0;
  double b = 0.0;
  std::int64_t step = 0;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto effective_weight = [&](std::size_t f) {
    return soft_threshold(w[f], shrink_total - shrink_seen[f]);
  };

  if (log) log->clear();
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    DetRng rng(mix_seed(config.seed, static_cast<std::uint64_t>(epoch)));
    rng.shuffle(order);
    for (std::size_t pick : order) {
      ++step;
      const double lr_t = lr / std::sqrt(static_cast<double>(step));
      const auto& entries = data[pick].fv.entries;
      // Bring touched coordinates current before the gradient step.
      for (const auto& [id, x] : entries) {
        const auto f = static_cast<std::size_t>(id);
        w[f] = soft_threshold(w[f], shrink_total - shrink_seen[f]);
      }
      double yhat = b;
      for (const auto& [id, x] : entries) {
        yhat += w[static_cast<std::size_t>(id)] * x;
      }
      const double r = data[pick].age - yhat;
      if (!std::isfinite(r)) {
        throw NumericError("train_lasso_sgd: non-finite loss at epoch " +
                           std::to_string(epoch));
      }
      for (const auto& [id, x] : entries) {
        w[static_cast<std::size_t>(id)] += lr_t * r * x;
      }
      b += lr_t * r;
      const double t = lr_t * alpha;
      shrink_total += t;
      for (const auto& [id, x] : entries) {
        const auto f = static_cast<std::size_t>(id);
        w[f] = soft_threshold(w[f], t);
        shrink_seen[f] = shrink_total;
      }
    }
    if (log) {
      double sq = 0.0;
      for (const auto& doc : data) {
        double yhat = b;
        for (const auto& [id, x] : doc.fv.entries) {
          yhat += effective_weight(static_cast<std::size_t>(id)) * x;
        }
        const double r = doc.age - yhat;
        sq += r * r;
      }
      double l1 = 0.0;
      for (std::size_t f = 0; f < n_feat; ++f) {
        l1 += std::abs(effective_weight(f));
      }
      log->push_back(
          {epoch, sq / (2.0 * static_cast<double>(n)) + alpha * l1});
    }
  }

  LassoModel model;
  model.intercept = b;
  model.reg_param = alpha;
  model.learning_rate = lr;
  if (!std::isfinite(b)) {
    throw NumericError("train_lasso_sgd: non-finite intercept after training");
  }
  for (std::size_t f = 0; f < n_feat; ++f) {
    const double v = effective_weight(f);
    if (!std::isfinite(v)) {
      throw NumericError("train_lasso_sgd: non-finite weight after training");
    }
    if (v != 0.0) model.weights.emplace_back(static_cast<int>(f), v);
  }
  return model;
}

// Grid search over the learning-rate/regularization grids: each cell trains
// on an internal split and is scored by validation MAE; ties prefer larger
// alpha (sparser model), then smaller learning rate. The winner is refit on
// the full data.
inline LassoModel tune(std::span<const AgedVector> data,
                       const SgdConfig& config) {
  if (config.learning_rate_grid.empty() || config.reg_param_grid.empty()) {
    throw ValidationError("tune: hyperparameter grids must be non-empty");
  }
  if (!(config.validation_fraction > 0.0 &&
        config.validation_fraction < 1.0)) {
    throw ValidationError("tune: validation_fraction must be in (0,1)");
  }
  const std::size_t n = data.size();
  auto n_val = static_cast<std::size_t>(std::llround(
      config.validation_fraction * static_cast<double>(n)));
  n_val = std::max<std::size_t>(n_val, 1);
  if (n < 2 || n - n_val < 1) {
    throw ValidationError("tune: not enough data for a validation split");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  DetRng rng(mix_seed(config.seed, 0x7A11));
  rng.shuffle(order);
  std::vector<AgedVector> holdout, fit;
  holdout.reserve(n_val);
  fit.reserve(n - n_val);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_val ? holdout : fit).push_back(data[order[i]]);
  }

  struct Cell {
    double lr = 0.0;
    double alpha = 0.0;
    double mae = 0.0;
  };
  const std::size_t n_cells =
      config.learning_rate_grid.size() * config.reg_param_grid.size();
  std::vector<Cell> cells(n_cells);
  run_indexed(n_cells, config.threads, [&](std::size_t cell) {
    const std::size_t li = cell / config.reg_param_grid.size();
    const std::size_t ai = cell % config.reg_param_grid.size();
    SgdConfig cell_config = config;
    cell_config.seed = mix_seed(config.seed, 1000 + cell);
    LassoModel m = train_lasso_sgd(fit, config.learning_rate_grid[li],
                                   config.reg_param_grid[ai], cell_config);
    double abs_sum = 0.0;
    for (const auto& doc : holdout) {
      abs_sum += std::abs(doc.age - predict_age(m, doc.fv));
    }
    cells[cell] = {config.learning_rate_grid[li], config.reg_param_grid[ai],
                   abs_sum / static_cast<double>(holdout.size())};
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < n_cells; ++i) {
    const Cell& c = cells[i];
    const Cell& b = cells[best];
    if (c.mae < b.mae || (c.mae == b.mae && c.alpha > b.alpha) ||
        (c.mae == b.mae && c.alpha == b.alpha && c.lr < b.lr)) {
      best = i;
    }
  }

  SgdConfig refit_config = config;
  refit_config.seed = mix_seed(config.seed, 0xF17);
  return train_lasso_sgd(data, cells[best].lr, cells[best].alpha,
                         refit_config);
}

}  // namespace agepred
