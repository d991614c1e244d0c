#pragma once

// Fixed-order truncated Taylor series over long double. Enough arithmetic to
// differentiate the closed-form solutions analytically: the solution samplers
// expand cosh/sinh/cos/sin of linear arguments and divide series.

#include "vmkdv/errors.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace vmkdv {

class TaylorSeries {
  public:
    /// Series with the given number of coefficients (order + 1 of them).
    explicit TaylorSeries(std::size_t size) : c_(size, 0.0L) {}

    static TaylorSeries constant(long double v, std::size_t size) {
        TaylorSeries s(size);
        s.c_[0] = v;
        return s;
    }

    std::size_t size() const { return c_.size(); }
    long double operator[](std::size_t k) const { return c_[k]; }
    long double& operator[](std::size_t k) { return c_[k]; }

    /// k-th derivative value at the expansion point: k! * c_k.
    long double derivative(std::size_t k) const {
        long double f = 1.0L;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long double>(i);
        return f * c_[k];
    }

    friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
        TaylorSeries out(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
        return out;
    }
    friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
        TaylorSeries out(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
        return out;
    }
    friend TaylorSeries operator*(long double s, const TaylorSeries& a) {
        TaylorSeries out(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) out.c_[k] = s * a.c_[k];
        return out;
    }
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
        TaylorSeries out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; i + j < a.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        return out;
    }

    /// Reciprocal series; requires a nonzero constant term.
    TaylorSeries reciprocal() const {
        if (c_[0] == 0.0L) throw Error("TaylorSeries: reciprocal of series with zero constant");
        TaylorSeries out(size());
        out.c_[0] = 1.0L / c_[0];
        for (std::size_t k = 1; k < size(); ++k) {
            long double acc = 0.0L;
            for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
            out.c_[k] = -acc / c_[0];
        }
        return out;
    }

    friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
        return a * b.reciprocal();
    }

  private:
    std::vector<long double> c_;
};

/// cosh(a + b s) and sinh(a + b s) expanded to the given size.
TaylorSeries taylor_cosh(long double a, long double b, std::size_t size);
TaylorSeries taylor_sinh(long double a, long double b, std::size_t size);
/// cos(a + b s) and sin(a + b s).
TaylorSeries taylor_cos(long double a, long double b, std::size_t size);
TaylorSeries taylor_sin(long double a, long double b, std::size_t size);

} // namespace vmkdv
