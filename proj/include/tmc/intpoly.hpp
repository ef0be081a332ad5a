// Exact integer polynomials in one variable k, with interpolation and gcd.
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace tmc {

using Int = mpz_class;

// Coefficients ascending in degree, no trailing zeros; zero polynomial is empty.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit IntPoly(const Int& constant);
    explicit IntPoly(long constant);

    static IntPoly variable();                    // k
    static IntPoly falling_factorial(int s);      // k(k-1)...(k-s+1)
    static IntPoly monomial(int degree, const Int& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& lead() const;
    Int coeff(int degree) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    double eval_double(double x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // gcd of all coefficients (nonnegative); 0 for the zero polynomial
    Int content() const;
    // division with remainder asserting exactness; throws InternalError otherwise
    IntPoly divexact(const IntPoly& d) const;
    IntPoly divexact_int(const Int& s) const;

    // true if *this precedes o for k -> infinity (degree, then leading coeffs)
    bool less_at_infinity(const IntPoly& o) const;

    std::string to_string(const std::string& var = "k") const;
    std::vector<std::string> to_decimal_strings() const;

  private:
    void trim();
    std::vector<Int> c_;
};

IntPoly operator*(const Int& s, const IntPoly& p);

// gcd over Z[k] via primitive remainder sequence; result has positive leading coeff
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Unique polynomial of degree <= bound through all points; throws InternalError on
// non-integer coefficients or when oversampled points are inconsistent.
IntPoly interpolate(const std::vector<std::pair<Int, Int>>& points, int bound);

Int binomial(long n, long r);
Int factorial_falling(const Int& k, int s);  // k(k-1)...(k-s+1) evaluated

}  // namespace tmc
