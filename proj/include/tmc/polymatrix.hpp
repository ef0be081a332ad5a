// Square matrices of integer polynomials in k: products, powers, evaluation.
#pragma once

#include <vector>

#include "tmc/intpoly.hpp"

namespace tmc {

class PolyMatrix {
  public:
    PolyMatrix() = default;
    explicit PolyMatrix(int size) : m_(size, std::vector<IntPoly>(size)) {}
    explicit PolyMatrix(std::vector<std::vector<IntPoly>> rows);

    static PolyMatrix identity(int size);

    int size() const { return static_cast<int>(m_.size()); }
    IntPoly& at(int i, int j) { return m_[i][j]; }
    const IntPoly& at(int i, int j) const { return m_[i][j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix power(int n) const;
    bool operator==(const PolyMatrix& o) const { return m_ == o.m_; }

    std::vector<std::vector<Int>> eval(const Int& k) const;
    std::vector<IntPoly> row_sums() const;

  private:
    std::vector<std::vector<IntPoly>> m_;
};

}  // namespace tmc
