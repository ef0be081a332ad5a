// Bivariate polynomials in (k, z) and rational generating functions in z over Z[k].
#pragma once

#include <string>
#include <vector>

#include "tmc/intpoly.hpp"

namespace tmc {

// Coefficients ascending in z-degree, each an IntPoly in k; no trailing zero.
class BivarPoly {
  public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<IntPoly> zc) : z_(std::move(zc)) { trim(); }
    explicit BivarPoly(const IntPoly& constant);

    bool is_zero() const { return z_.empty(); }
    int degree_z() const { return static_cast<int>(z_.size()) - 1; }
    IntPoly coeff_z(int d) const;
    const std::vector<IntPoly>& coeffs_z() const { return z_; }
    const IntPoly& lead_z() const;

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const IntPoly& s) const;
    bool operator==(const BivarPoly& o) const { return z_ == o.z_; }
    bool operator!=(const BivarPoly& o) const { return z_ != o.z_; }

    Int int_content() const;                 // gcd of all integer coefficients
    IntPoly content_k() const;               // gcd over Z[k] of the z-coefficients
    BivarPoly divexact_k(const IntPoly& s) const;
    BivarPoly divexact_int(const Int& s) const;
    // exact division by a bivariate divisor (long division in z); throws if not exact
    BivarPoly divexact(const BivarPoly& d) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<IntPoly> z_;
};

// gcd in z over Z[k] via a primitive subresultant-style remainder sequence;
// returns a polynomial containing every common factor of positive z-degree
// (primitive in k), verified by exact trial division.
BivarPoly bivar_gcd_z(const BivarPoly& a, const BivarPoly& b);

// Ratio of bivariate polynomials, kept reduced: no common factor of positive
// z-degree, integer content of the pair is 1, and the denominator's z^0
// coefficient has a positive leading k-coefficient.
struct RationalGenFun {
    BivarPoly num;
    BivarPoly den;
};

RationalGenFun reduce(const RationalGenFun& r);

// num1*den2 == num2*den1
bool cross_equal(const RationalGenFun& a, const RationalGenFun& b);

// First `count` power-series coefficients in z; requires the denominator's z^0
// coefficient to be a nonzero constant, divisions checked exact.
std::vector<IntPoly> series_coefficients(const RationalGenFun& r, int count);

// Matrix helpers over BivarPoly (used for det(I - zL) and the bordered numerator).
using BivarMatrix = std::vector<std::vector<BivarPoly>>;

// fraction-free Bareiss elimination with exact divisions
BivarPoly bivar_det_bareiss(BivarMatrix m);
// cofactor expansion, for cross-checks on small matrices
BivarPoly bivar_det_cofactor(const BivarMatrix& m);

}  // namespace tmc
