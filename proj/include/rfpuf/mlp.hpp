#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "rfpuf/features.hpp"

namespace rfpuf {

// Feed-forward classifier: tanh hidden layers, softmax output.
struct MlpModel {
  std::vector<Eigen::MatrixXd> weights;  // layer l maps (in) -> (out) rows
  std::vector<Eigen::VectorXd> biases;
  std::uint64_t init_seed = 0;

  int n_in() const { return static_cast<int>(weights.front().cols()); }
  int n_classes() const { return static_cast<int>(weights.back().rows()); }
};

struct TrainConfig {
  std::vector<int> hidden_sizes{50};
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 0.05;
  double lr_decay = 0.98;  // multiplicative, per epoch
  std::uint64_t seed = 0;
  bool shuffle = true;

  void validate() const;
};

struct TrainReport {
  std::vector<double> train_loss;    // per epoch, mean cross-entropy
  std::vector<double> val_accuracy;  // per epoch; NaN when no validation set
  double wall_seconds = 0.0;
};

// Glorot-uniform weights, zero biases, deterministic in seed.
MlpModel init_mlp(int n_in, const std::vector<int>& hidden_sizes,
                  int n_classes, std::uint64_t seed);

// Class probabilities for one feature vector (numerically stable softmax).
Eigen::VectorXd forward(const MlpModel& model, const Eigen::VectorXd& input);

// Mini-batch SGD on mean cross-entropy with per-epoch learning-rate decay.
// Aborts with a diagnostic if the loss goes non-finite.
std::pair<MlpModel, TrainReport> train(MlpModel model, const Dataset& data,
                                       const TrainConfig& cfg,
                                       const Dataset* validation = nullptr);

// Argmax of forward(); ties break toward the lowest class index.
int predict(const MlpModel& model, const Eigen::VectorXd& input);

// Max relative error between backprop and central finite differences over
// every parameter, on the cross-entropy of one labeled sample.
double gradient_check(const MlpModel& model, const Eigen::VectorXd& input,
                      int label, double step = 1e-5);

// Versioned little-endian binary format; round-trips bit-exactly.
void save_model(const MlpModel& model, const std::filesystem::path& path);
MlpModel load_model(const std::filesystem::path& path);

}  // namespace rfpuf
