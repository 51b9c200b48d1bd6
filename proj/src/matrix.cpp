#include "polaris/matrix.hpp"

#include <stdexcept>

namespace polaris {

Mat Mat::identity(int dim) {
    Mat I(dim);
    for (int i = 0; i < dim; ++i) I.at(i, i) = 1;
    return I;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    const int n = A.n;
    Mat C(n);
    if (F.k == 1) {
        const int p = F.p;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int acc = 0;
                for (int t = 0; t < n; ++t) acc += A.a[i * n + t] * B.a[t * n + j];
                C.a[i * n + j] = static_cast<Elem>(acc % p);
            }
        return C;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem acc = 0;
            for (int t = 0; t < n; ++t) acc = F.add(acc, F.mul(A.a[i * n + t], B.a[t * n + j]));
            C.a[i * n + j] = acc;
        }
    return C;
}

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
    Mat C(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat mat_scale(const Field& F, const Mat& A, Elem s) {
    Mat C(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(A.a[i], s);
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat frob_entries(const Field& F, const Mat& A, int m) {
    if (m % F.k == 0) return A;
    Mat B(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) B.a[i] = F.frob(A.a[i], m);
    return B;
}

void mat_vec(const Field& F, const Mat& A, const Elem* v, Elem* out) {
    const int n = A.n;
    if (F.k == 1) {
        for (int i = 0; i < n; ++i) {
            int acc = 0;
            const Elem* r = A.a.data() + i * n;
            for (int t = 0; t < n; ++t) acc += r[t] * v[t];
            out[i] = static_cast<Elem>(acc % F.p);
        }
        return;
    }
    for (int i = 0; i < n; ++i) {
        Elem acc = 0;
        const Elem* r = A.a.data() + i * n;
        for (int t = 0; t < n; ++t) acc = F.add(acc, F.mul(r[t], v[t]));
        out[i] = acc;
    }
}

Elem det(const Field& F, Mat A) {
    const int n = A.n;
    Elem d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (A.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int t = 0; t < n; ++t) std::swap(A.at(piv, t), A.at(c, t));
            d = F.neg(d);
        }
        Elem pv = A.at(c, c);
        d = F.mul(d, pv);
        Elem iv = F.inv(pv);
        for (int r = c + 1; r < n; ++r) {
            Elem f = F.mul(A.at(r, c), iv);
            if (!f) continue;
            for (int t = c; t < n; ++t) A.at(r, t) = F.sub(A.at(r, t), F.mul(f, A.at(c, t)));
        }
    }
    return d;
}

bool invertible(const Field& F, const Mat& A) { return det(F, A) != 0; }

Mat inverse(const Field& F, const Mat& A) {
    const int n = A.n;
    Mat L = A, R = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (L.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        for (int t = 0; t < n; ++t) {
            std::swap(L.at(piv, t), L.at(c, t));
            std::swap(R.at(piv, t), R.at(c, t));
        }
        Elem iv = F.inv(L.at(c, c));
        for (int t = 0; t < n; ++t) {
            L.at(c, t) = F.mul(L.at(c, t), iv);
            R.at(c, t) = F.mul(R.at(c, t), iv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !L.at(r, c)) continue;
            Elem f = L.at(r, c);
            for (int t = 0; t < n; ++t) {
                L.at(r, t) = F.sub(L.at(r, t), F.mul(f, L.at(c, t)));
                R.at(r, t) = F.sub(R.at(r, t), F.mul(f, R.at(c, t)));
            }
        }
    }
    return R;
}

int rank_of(const Field& F, std::vector<Elem> m, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int t = 0; t < cols; ++t) std::swap(m[piv * cols + t], m[rank * cols + t]);
        Elem iv = F.inv(m[rank * cols + c]);
        for (int r = rank + 1; r < rows; ++r) {
            Elem f = F.mul(m[r * cols + c], iv);
            if (!f) continue;
            for (int t = c; t < cols; ++t) m[r * cols + t] = F.sub(m[r * cols + t], F.mul(f, m[rank * cols + t]));
        }
        ++rank;
    }
    return rank;
}

Elem scalar_of(const Mat& A) {
    Elem s = A.at(0, 0);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            if (A.at(i, j) != (i == j ? s : 0)) return 0;
    return s;
}

SemilinearMap compose(const Field& F, const SemilinearMap& a, const SemilinearMap& b) {
    SemilinearMap r;
    r.M = mat_mul(F, a.M, frob_entries(F, b.M, a.frob));
    r.frob = (a.frob + b.frob) % F.k;
    return r;
}

SemilinearMap power(const Field& F, const SemilinearMap& a, long e) {
    SemilinearMap r{Mat::identity(a.M.n), 0}, b = a;
    while (e > 0) {
        if (e & 1) r = compose(F, r, b);
        b = compose(F, b, b);
        e >>= 1;
    }
    return r;
}

void apply(const Field& F, const SemilinearMap& g, const Elem* v, Elem* out) {
    if (g.frob % F.k == 0) {
        mat_vec(F, g.M, v, out);
        return;
    }
    Elem tmp[32];
    for (int i = 0; i < g.M.n; ++i) tmp[i] = F.frob(v[i], g.frob);
    mat_vec(F, g.M, tmp, out);
}

} // namespace polaris
