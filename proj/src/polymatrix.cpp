// Polynomial matrix products, powers by repeated multiplication, evaluation.
#include "tmc/polymatrix.hpp"

#include "tmc/errors.hpp"

namespace tmc {

PolyMatrix::PolyMatrix(std::vector<std::vector<IntPoly>> rows) : m_(std::move(rows)) {
    for (const auto& r : m_)
        if (r.size() != m_.size()) throw InternalError("PolyMatrix must be square");
}

PolyMatrix PolyMatrix::identity(int size) {
    PolyMatrix r(size);
    for (int i = 0; i < size; ++i) r.m_[i][i] = IntPoly(Int(1));
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (size() != o.size()) throw InternalError("PolyMatrix size mismatch");
    PolyMatrix r(size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            IntPoly acc;
            for (int t = 0; t < size(); ++t) acc = acc + m_[i][t] * o.m_[t][j];
            r.m_[i][j] = acc;
        }
    return r;
}

PolyMatrix PolyMatrix::power(int n) const {
    if (n < 0) throw InternalError("negative matrix power");
    PolyMatrix result = identity(size());
    PolyMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = (n >>= 1) > 0 ? base * base : base;
    }
    return result;
}

std::vector<std::vector<Int>> PolyMatrix::eval(const Int& k) const {
    std::vector<std::vector<Int>> r(size(), std::vector<Int>(size()));
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) r[i][j] = m_[i][j].eval(k);
    return r;
}

std::vector<IntPoly> PolyMatrix::row_sums() const {
    std::vector<IntPoly> r(size());
    for (int i = 0; i < size(); ++i) {
        IntPoly acc;
        for (int j = 0; j < size(); ++j) acc = acc + m_[i][j];
        r[i] = acc;
    }
    return r;
}

}  // namespace tmc
