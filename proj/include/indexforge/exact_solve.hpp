#pragma once

// Fraction-free (Bareiss) elimination on dense Eigen matrices over an exact scalar.

#include "indexforge/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <stdexcept>

namespace indexforge {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Determinant by Bareiss elimination. Every intermediate division is exact for integer
/// input, so for integral matrices no fractions appear.
template <typename Scalar>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const Eigen::Index n = a.rows();
    Scalar sign(1);
    Scalar previous(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == Scalar(0)) {
                ++swap;
            }
            if (swap == n) {
                return Scalar(0);
            }
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
            a(i, k) = Scalar(0);
        }
        previous = a(k, k);
    }
    return n == 0 ? Scalar(1) : Scalar(sign * a(n - 1, n - 1));
}

/// Solves a x = b exactly by fraction-free elimination on the augmented matrix followed by
/// back substitution. Returns std::nullopt when a is singular.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>
bareiss_solve(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
              Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n) {
        throw std::invalid_argument("bareiss_solve needs a square system");
    }
    Scalar previous(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == Scalar(0)) {
                ++swap;
            }
            if (swap == n) {
                return std::nullopt;
            }
            a.row(k).swap(a.row(swap));
            std::swap(b(k), b(swap));
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
            b(i) = (b(i) * a(k, k) - a(i, k) * b(k)) / previous;
            a(i, k) = Scalar(0);
        }
        previous = a(k, k);
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        Scalar acc = b(i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            acc -= a(i, j) * x(j);
        }
        x(i) = acc / a(i, i);
    }
    return x;
}

}  // namespace indexforge
