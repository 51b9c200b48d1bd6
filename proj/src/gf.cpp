#include "polaris/gf.hpp"

#include <stdexcept>

namespace polaris {

namespace {

using Poly = std::vector<int>; // low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = 1;
    while ((m.back() * lead_inv) % p != 1) ++lead_inv;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int c = (a.back() * lead_inv) % p;
        for (int i = 0; i <= dm; ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            int c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field field_make(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1 || k > 4) throw std::invalid_argument("extension degree out of range");
    int q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 81) throw std::invalid_argument("field order exceeds 81");

    Field F;
    F.p = p;
    F.k = k;
    F.q = q;
    for (int code = 0; code < q; ++code) {
        Poly f(k + 1, 0);
        int c = code;
        for (int i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        if (irreducible(f, p)) {
            F.modulus = f;
            break;
        }
    }

    F.add_.assign(q * q, 0);
    F.mul_.assign(q * q, 0);
    F.neg_.assign(q, 0);
    F.inv_.assign(q, 0);
    F.frob_.assign(k * q, 0);
    F.sq_.assign(q, 0);
    std::vector<Poly> el(q);
    for (int a = 0; a < q; ++a) el[a] = F.coeffs(a);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            Poly s(k);
            for (int i = 0; i < k; ++i) s[i] = (el[a][i] + el[b][i]) % p;
            F.add_[a * q + b] = F.from_coeffs(s);
            Poly m(2 * k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i + j] = (m[i + j] + el[a][i] * el[b][j]) % p;
            Poly r = poly_mod(m, F.modulus, p);
            r.resize(k, 0);
            F.mul_[a * q + b] = F.from_coeffs(r);
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (F.add_[a * q + b] == 0) F.neg_[a] = static_cast<Elem>(b);
            if (F.mul_[a * q + b] == 1) F.inv_[a] = static_cast<Elem>(b);
        }
        F.sq_[F.mul_[a * q + a]] = 1;
    }
    for (int m = 0; m < k; ++m) {
        long e = 1;
        for (int i = 0; i < m; ++i) e *= p;
        for (int a = 0; a < q; ++a) F.frob_[m * q + a] = F.pow(static_cast<Elem>(a), e);
    }
    return F;
}

Field field_of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int v = q, k = 0;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        if (k > 0) {
            if (v != 1) break;
            return field_make(p, k);
        }
    }
    throw std::invalid_argument("field order must be a prime power");
}

Elem Field::pow(Elem a, long e) const {
    Elem r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem Field::from_int(long v) const {
    long r = ((v % p) + p) % p;
    return static_cast<Elem>(r);
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> c(k);
    int v = a;
    for (int i = 0; i < k; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + ((c[i] % p) + p) % p;
    return static_cast<Elem>(v);
}

std::string Field::name() const { return "GF(" + std::to_string(q) + ")"; }

Elem frobenius(const Field& F, Elem x, int m) {
    if (m < 0 || m >= F.k) throw std::invalid_argument("frobenius power out of range");
    return F.frob(x, m);
}

std::optional<Elem> nonsquare(const Field& F) {
    if (F.p == 2) return std::nullopt;
    for (int a = 1; a < F.q; ++a)
        if (!F.is_square(static_cast<Elem>(a))) return static_cast<Elem>(a);
    return std::nullopt;
}

std::pair<Elem, Elem> irreducible_quadratic(const Field& F) {
    for (int t = 0; t < F.q; ++t) {
        for (int d = 0; d < F.q; ++d) {
            bool root = false;
            for (int x = 0; x < F.q && !root; ++x) {
                Elem xe = static_cast<Elem>(x);
                Elem v = F.add(F.sub(F.mul(xe, xe), F.mul(static_cast<Elem>(t), xe)), static_cast<Elem>(d));
                root = (v == 0);
            }
            if (!root) return {static_cast<Elem>(t), static_cast<Elem>(d)};
        }
    }
    throw std::logic_error("no rootless quadratic");
}

} // namespace polaris
