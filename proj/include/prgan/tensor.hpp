// Dense float32 arrays with shape, the value type everything else computes on.
#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prgan {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition check that throws prgan::Error with a streamed message.
#define PRGAN_CHECK(cond, msg)                          \
  do {                                                  \
    if (!(cond)) {                                      \
      std::ostringstream oss_;                          \
      oss_ << msg;                                      \
      throw ::prgan::Error(oss_.str());                 \
    }                                                   \
  } while (0)

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    int64_t n = 1;
    for (int64_t e : shape_) {
      PRGAN_CHECK(e > 0, "tensor extent must be positive, got " << e);
      n *= e;
    }
    data_.assign(static_cast<size_t>(n), 0.0f);
  }

  static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int64_t> shape, float v) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), v);
    return t;
  }

  static Tensor scalar(float v) { return full({1}, v); }

  static Tensor from_values(std::vector<int64_t> shape, std::vector<float> values) {
    Tensor t;
    t.shape_ = std::move(shape);
    int64_t n = 1;
    for (int64_t e : t.shape_) n *= e;
    PRGAN_CHECK(n == static_cast<int64_t>(values.size()),
                "value count " << values.size() << " does not match shape " << shape_string(t.shape_));
    t.data_ = std::move(values);
    return t;
  }

  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  int rank() const { return static_cast<int>(shape_.size()); }
  int64_t extent(int axis) const { return shape_.at(static_cast<size_t>(axis)); }
  const std::vector<int64_t>& shape() const { return shape_; }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool all_finite() const {
    for (float v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  double sum64() const {
    double s = 0.0;
    for (float v : data_) s += v;
    return s;
  }

  static std::string shape_string(const std::vector<int64_t>& shape) {
    std::ostringstream oss;
    oss << "[";
    for (size_t i = 0; i < shape.size(); ++i) oss << (i ? "x" : "") << shape[i];
    oss << "]";
    return oss.str();
  }
  std::string shape_str() const { return shape_string(shape_); }

 private:
  std::vector<int64_t> shape_;
  std::vector<float> data_;
};

inline void fill_normal(Tensor& t, std::mt19937& rng, float stddev) {
  std::normal_distribution<float> dist(0.0f, stddev);
  for (int64_t i = 0; i < t.size(); ++i) t[i] = dist(rng);
}

inline void fill_uniform(Tensor& t, std::mt19937& rng, float lo, float hi) {
  std::uniform_real_distribution<float> dist(lo, hi);
  for (int64_t i = 0; i < t.size(); ++i) t[i] = dist(rng);
}

// Stable per-stream seeding: mixes a base seed with a stream id (splitmix64).
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace prgan
