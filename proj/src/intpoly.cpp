// Exact integer polynomial arithmetic, Newton interpolation, primitive-PRS gcd.
#include "tmc/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "tmc/errors.hpp"

namespace tmc {

IntPoly::IntPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(long constant) {
    if (constant != 0) c_.push_back(Int(constant));
}

IntPoly IntPoly::variable() { return monomial(1, Int(1)); }

IntPoly IntPoly::monomial(int degree, const Int& coeff) {
    if (coeff == 0) return IntPoly();
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::falling_factorial(int s) {
    IntPoly r(Int(1));
    for (int i = 0; i < s; ++i) {
        std::vector<Int> lin = {Int(-i), Int(1)};  // (k - i)
        r = r * IntPoly(std::move(lin));
    }
    return r;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lead() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(c_.size())) return Int(0);
    return c_[degree];
}

Int IntPoly::eval(const Int& x) const {
    Int r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double IntPoly::eval_double(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly();
    std::vector<Int> r(c_);
    for (auto& x : r) x *= s;
    return IntPoly(std::move(r));
}

IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::divexact_int(const Int& s) const {
    if (s == 0) throw InternalError("division by zero integer");
    std::vector<Int> r(c_);
    for (auto& x : r) {
        if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t()))
            throw InternalError("non-exact integer division of coefficients");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw InternalError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw InternalError("non-exact polynomial division (degree)");
    std::vector<Int> rem(c_);
    std::vector<Int> q(degree() - d.degree() + 1, Int(0));
    for (int i = degree(); i >= d.degree(); --i) {
        const Int& top = rem[i];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
            throw InternalError("non-exact polynomial division (leading coefficient)");
        Int qc;
        mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        q[i - d.degree()] = qc;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= qc * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw InternalError("non-exact polynomial division (remainder)");
    return IntPoly(std::move(q));
}

bool IntPoly::less_at_infinity(const IntPoly& o) const {
    int d = std::max(degree(), o.degree());
    for (int i = d; i >= 0; --i) {
        Int a = coeff(i), b = o.coeff(i);
        if (a != b) return a < b;
    }
    return false;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? "-" : "+");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            if (mag != 1) out << "*";
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.get_str());
    return out;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lead() < 0 ? -b : b;
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly u = a.divexact_int(ca), v = b.divexact_int(cb);
    if (u.degree() < v.degree()) std::swap(u, v);
    // primitive remainder sequence via pseudo-division
    while (!v.is_zero()) {
        // pseudo-remainder of lead(v)^(du-dv+1) * u by v
        int du = u.degree(), dv = v.degree();
        std::vector<Int> rem(u.coeffs());
        Int lv = v.lead();
        for (int i = du; i >= dv; --i) {
            for (int t = 0; t < i; ++t) rem[t] *= lv;
            Int top = rem[i];
            rem[i] = 0;
            for (int j = 0; j < dv; ++j) rem[i - dv + j] -= top * v.coeff(j);
            // entries above i are already zero; keep scaling consistent
            for (int t = i + 1; t <= du; ++t) rem[t] *= lv;
        }
        rem.resize(dv);
        IntPoly r{std::move(rem)};
        if (!r.is_zero()) r = r.divexact_int(r.content());
        u = v;
        v = r;
    }
    IntPoly g = u * cg;
    return g.lead() < 0 ? -g : g;
}

IntPoly interpolate(const std::vector<std::pair<Int, Int>>& points, int bound) {
    if (static_cast<int>(points.size()) < bound + 1)
        throw InternalError("interpolation needs at least bound+1 points");
    // Newton divided differences over exact rationals on the first bound+1 points
    int n = bound + 1;
    std::vector<mpq_class> xs(n), dd(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = mpq_class(points[i].first);
        dd[i] = mpq_class(points[i].second);
    }
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i) {
            mpq_class den = xs[i] - xs[i - level];
            if (den == 0) throw InternalError("interpolation nodes not distinct");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    // expand Newton form into monomial coefficients
    std::vector<mpq_class> coef(n, 0), basis(n, 0);
    basis[0] = 1;
    int basis_deg = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= basis_deg; ++j) coef[j] += dd[i] * basis[j];
        if (i + 1 < n) {
            // basis *= (x - xs[i])
            for (int j = basis_deg + 1; j >= 1; --j) basis[j] = basis[j - 1] - xs[i] * basis[j];
            basis[0] = -xs[i] * basis[0];
            ++basis_deg;
        }
    }
    std::vector<Int> ic(n);
    for (int i = 0; i < n; ++i) {
        coef[i].canonicalize();
        if (coef[i].get_den() != 1)
            throw InternalError("interpolation produced a non-integer polynomial");
        ic[i] = coef[i].get_num();
    }
    IntPoly result{std::move(ic)};
    for (const auto& [x, y] : points)
        if (result.eval(x) != y)
            throw InternalError("oversampled interpolation points are inconsistent");
    return result;
}

Int binomial(long n, long r) {
    if (r < 0 || r > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

Int factorial_falling(const Int& k, int s) {
    Int r(1);
    for (int i = 0; i < s; ++i) r *= (k - i);
    return r;
}

}  // namespace tmc
