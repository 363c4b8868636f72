#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace stereoconf {

/// Dense row-major tensor of up to 4 dimensions. The last dimension varies
/// fastest; images are H x W x C, cost volumes H x W x D, batched network
/// activations N x H x W x C.
template <typename T>
struct Tensor {
    std::vector<int> shape;
    std::vector<T> data;

    Tensor() = default;

    static Tensor zeros(std::vector<int> dims) {
        Tensor t;
        t.shape = std::move(dims);
        t.data.assign(t.count(), T(0));
        return t;
    }

    static Tensor full(std::vector<int> dims, T v) {
        Tensor t = zeros(std::move(dims));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }

    std::size_t count() const {
        std::size_t n = 1;
        for (int d : shape) {
            if (d < 0) throw std::invalid_argument("tensor: negative dimension");
            n *= static_cast<std::size_t>(d);
        }
        return n;
    }

    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    T& operator[](std::size_t i) { return data[i]; }
    const T& operator[](std::size_t i) const { return data[i]; }

    // 2-d (H, W)
    T& at(int y, int x) { return data[static_cast<std::size_t>(y) * dim(1) + x]; }
    const T& at(int y, int x) const { return data[static_cast<std::size_t>(y) * dim(1) + x]; }

    // 3-d (H, W, C)
    T& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * dim(1) + x) * dim(2) + c];
    }
    const T& at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * dim(1) + x) * dim(2) + c];
    }

    // 4-d (N, H, W, C)
    T& at(int n, int y, int x, int c) {
        return data[((static_cast<std::size_t>(n) * dim(1) + y) * dim(2) + x) * dim(3) + c];
    }
    const T& at(int n, int y, int x, int c) const {
        return data[((static_cast<std::size_t>(n) * dim(1) + y) * dim(2) + x) * dim(3) + c];
    }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> out;
        out.shape = shape;
        out.data.resize(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }

    std::string shape_str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(shape[i]);
        }
        return s + ")";
    }
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace stereoconf
