// Bivariate polynomial arithmetic, PRS gcd in z, Bareiss determinants, series.
#include "tmc/bivar.hpp"

#include <algorithm>
#include <sstream>

#include "tmc/errors.hpp"

namespace tmc {

BivarPoly::BivarPoly(const IntPoly& constant) {
    if (!constant.is_zero()) z_.push_back(constant);
}

void BivarPoly::trim() {
    while (!z_.empty() && z_.back().is_zero()) z_.pop_back();
}

IntPoly BivarPoly::coeff_z(int d) const {
    if (d < 0 || d >= static_cast<int>(z_.size())) return IntPoly();
    return z_[d];
}

const IntPoly& BivarPoly::lead_z() const {
    if (z_.empty()) throw InternalError("leading z-coefficient of zero polynomial");
    return z_.back();
}

BivarPoly BivarPoly::operator-() const {
    std::vector<IntPoly> r(z_);
    for (auto& p : r) p = -p;
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    std::vector<IntPoly> r(std::max(z_.size(), o.z_.size()));
    for (size_t i = 0; i < z_.size(); ++i) r[i] = r[i] + z_[i];
    for (size_t i = 0; i < o.z_.size(); ++i) r[i] = r[i] + o.z_[i];
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    std::vector<IntPoly> r(std::max(z_.size(), o.z_.size()));
    for (size_t i = 0; i < z_.size(); ++i) r[i] = r[i] + z_[i];
    for (size_t i = 0; i < o.z_.size(); ++i) r[i] = r[i] - o.z_[i];
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    if (z_.empty() || o.z_.empty()) return BivarPoly();
    std::vector<IntPoly> r(z_.size() + o.z_.size() - 1);
    for (size_t i = 0; i < z_.size(); ++i)
        for (size_t j = 0; j < o.z_.size(); ++j) r[i + j] = r[i + j] + z_[i] * o.z_[j];
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator*(const IntPoly& s) const {
    std::vector<IntPoly> r(z_);
    for (auto& p : r) p = p * s;
    return BivarPoly(std::move(r));
}

Int BivarPoly::int_content() const {
    Int g(0);
    for (const auto& p : z_) {
        Int c = p.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly BivarPoly::content_k() const {
    IntPoly g;
    for (const auto& p : z_) {
        g = poly_gcd(g, p);
        if (g.degree() == 0 && g.coeff(0) == 1) break;
    }
    return g;
}

BivarPoly BivarPoly::divexact_k(const IntPoly& s) const {
    std::vector<IntPoly> r(z_);
    for (auto& p : r) p = p.divexact(s);
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::divexact_int(const Int& s) const {
    std::vector<IntPoly> r(z_);
    for (auto& p : r) p = p.divexact_int(s);
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::divexact(const BivarPoly& d) const {
    if (d.is_zero()) throw InternalError("bivariate division by zero");
    if (is_zero()) return BivarPoly();
    if (degree_z() < d.degree_z())
        throw InternalError("non-exact bivariate division (z-degree)");
    std::vector<IntPoly> rem(z_);
    std::vector<IntPoly> q(degree_z() - d.degree_z() + 1);
    for (int i = degree_z(); i >= d.degree_z(); --i) {
        if (rem[i].is_zero()) continue;
        IntPoly qc = rem[i].divexact(d.lead_z());
        q[i - d.degree_z()] = qc;
        for (int j = 0; j <= d.degree_z(); ++j)
            rem[i - d.degree_z() + j] = rem[i - d.degree_z() + j] - qc * d.coeff_z(j);
    }
    for (const auto& p : rem)
        if (!p.is_zero()) throw InternalError("non-exact bivariate division (remainder)");
    return BivarPoly(std::move(q));
}

std::string BivarPoly::to_string() const {
    if (z_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree_z(); ++i) {
        if (z_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << z_[i].to_string() << ")";
        if (i >= 1) {
            out << "*z";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

static BivarPoly primitive_part_k(const BivarPoly& p) {
    if (p.is_zero()) return p;
    return p.divexact_k(p.content_k());
}

BivarPoly bivar_gcd_z(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero()) return primitive_part_k(b);
    if (b.is_zero()) return primitive_part_k(a);
    BivarPoly u = primitive_part_k(a), v = primitive_part_k(b);
    if (u.degree_z() < v.degree_z()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree_z() == 0) {
            // primitive constant-in-z divisor: gcd has no positive z-degree part
            u = v;
            break;
        }
        // pseudo-remainder of u by v in z over Z[k]
        int du = u.degree_z(), dv = v.degree_z();
        std::vector<IntPoly> rem(u.coeffs_z());
        IntPoly lv = v.lead_z();
        for (int i = du; i >= dv; --i) {
            for (int t = 0; t < i; ++t) rem[t] = rem[t] * lv;
            IntPoly top = rem[i];
            rem[i] = IntPoly();
            for (int j = 0; j < dv; ++j)
                rem[i - dv + j] = rem[i - dv + j] - top * v.coeff_z(j);
        }
        rem.resize(dv);
        BivarPoly r{std::move(rem)};
        r = primitive_part_k(r);
        u = v;
        v = r;
    }
    BivarPoly g = primitive_part_k(u);
    // verify by exact trial division both ways
    if (g.degree_z() > 0) {
        (void)a.divexact_k(a.content_k()).divexact(g);
        (void)b.divexact_k(b.content_k()).divexact(g);
    }
    return g;
}

static BivarPoly normalize_sign(BivarPoly num, BivarPoly den, BivarPoly* num_out) {
    const IntPoly d0 = den.coeff_z(0);
    bool flip;
    if (!d0.is_zero()) {
        flip = d0.lead() < 0;
    } else {
        flip = !den.is_zero() && den.lead_z().lead() < 0;
    }
    if (flip) {
        num = -num;
        den = -den;
    }
    *num_out = num;
    return den;
}

RationalGenFun reduce(const RationalGenFun& r) {
    if (r.den.is_zero()) throw InternalError("zero denominator");
    BivarPoly num = r.num, den = r.den;
    if (!num.is_zero()) {
        BivarPoly g = bivar_gcd_z(num, den);
        if (g.degree_z() > 0) {
            // strip k-content of num/den only transiently for the exact division
            IntPoly cn = num.content_k(), cd = den.content_k();
            num = num.divexact_k(cn).divexact(g) * cn;
            den = den.divexact_k(cd).divexact(g) * cd;
        }
    }
    Int cn = num.int_content(), cd = den.int_content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        num = num.divexact_int(cg);
        den = den.divexact_int(cg);
    }
    RationalGenFun out;
    out.den = normalize_sign(num, den, &out.num);
    // reduction must preserve the fraction exactly
    if (!cross_equal(out, r)) throw InternalError("reduction changed the fraction");
    return out;
}

bool cross_equal(const RationalGenFun& a, const RationalGenFun& b) {
    return a.num * b.den == b.num * a.den;
}

std::vector<IntPoly> series_coefficients(const RationalGenFun& r, int count) {
    const IntPoly d0 = r.den.coeff_z(0);
    if (d0.is_zero())
        throw InternalError("denominator has zero constant z-term, no power series");
    if (d0.degree() != 0)
        throw InternalError("denominator z^0 coefficient is not a constant");
    Int c0 = d0.coeff(0);
    std::vector<IntPoly> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n) {
        IntPoly acc = r.num.coeff_z(n);
        for (int i = 1; i <= std::min(n, r.den.degree_z()); ++i)
            acc = acc - r.den.coeff_z(i) * out[n - i];
        out.push_back(acc.divexact_int(c0));
    }
    return out;
}

BivarPoly bivar_det_bareiss(BivarMatrix m) {
    size_t n = m.size();
    if (n == 0) return BivarPoly(IntPoly(Int(1)));
    for (const auto& row : m)
        if (row.size() != n) throw InternalError("determinant of non-square matrix");
    BivarPoly prev(IntPoly(Int(1)));
    Int sign(1);
    for (size_t c = 0; c < n - 1; ++c) {
        if (m[c][c].is_zero()) {
            size_t p = c + 1;
            while (p < n && m[p][c].is_zero()) ++p;
            if (p == n) return BivarPoly();
            std::swap(m[c], m[p]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                BivarPoly t = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                m[i][j] = t.divexact(prev);
            }
            m[i][c] = BivarPoly();
        }
        prev = m[c][c];
    }
    BivarPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

BivarPoly bivar_det_cofactor(const BivarMatrix& m) {
    size_t n = m.size();
    if (n == 0) return BivarPoly(IntPoly(Int(1)));
    if (n == 1) return m[0][0];
    BivarPoly det;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        BivarMatrix minor(n - 1, std::vector<BivarPoly>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        BivarPoly term = m[0][c] * bivar_det_cofactor(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace tmc
