#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmk {

using Shape = std::vector<int64_t>;

std::string shape_str(const Shape& s);

/// Dense row-major tensor of doubles. Grids use (C, H, W, D) order with the
/// depth index fastest-varying.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double v);
  static Tensor scalar(double v);

  const Shape& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // 4-d accessors for (C,H,W,D) grids.
  double& at(int64_t c, int64_t h, int64_t w, int64_t d) {
    return data_[static_cast<size_t>(offset(c, h, w, d))];
  }
  double at(int64_t c, int64_t h, int64_t w, int64_t d) const {
    return data_[static_cast<size_t>(offset(c, h, w, d))];
  }
  int64_t offset(int64_t c, int64_t h, int64_t w, int64_t d) const {
    return ((c * shape_[1] + h) * shape_[2] + w) * shape_[3] + d;
  }

  double item() const;

  void fill(double v);
  void add_(const Tensor& other);            // elementwise +=
  void axpy_(double alpha, const Tensor& o); // this += alpha * o
  void scale_(double alpha);

  double min() const;
  double max() const;
  double sum() const;
  bool all_finite() const;

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Hard-label voxel grid (H, W, D), one byte per voxel.
struct ByteTensor {
  Shape shape;
  std::vector<uint8_t> data;

  ByteTensor() = default;
  explicit ByteTensor(Shape s);

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  int64_t dim(int i) const { return shape[static_cast<size_t>(i)]; }
  uint8_t& at(int64_t h, int64_t w, int64_t d) {
    return data[static_cast<size_t>((h * shape[1] + w) * shape[2] + d)];
  }
  uint8_t at(int64_t h, int64_t w, int64_t d) const {
    return data[static_cast<size_t>((h * shape[1] + w) * shape[2] + d)];
  }
};

int64_t shape_numel(const Shape& s);

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace cmk
