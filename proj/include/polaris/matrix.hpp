#pragma once
#include <vector>

#include "polaris/gf.hpp"

namespace polaris {

struct Mat {
    int n = 0;
    std::vector<Elem> a; // row-major n x n

    Mat() = default;
    explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}
    static Mat identity(int dim);

    Elem& at(int r, int c) { return a[r * n + c]; }
    Elem at(int r, int c) const { return a[r * n + c]; }
    const Elem* row(int r) const { return a.data() + r * n; }
    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

// v -> M * v^(sigma^frob), with sigma the Frobenius x -> x^p
struct SemilinearMap {
    Mat M;
    int frob = 0;
    bool operator==(const SemilinearMap& o) const { return frob == o.frob && M == o.M; }
};

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat mat_scale(const Field& F, const Mat& A, Elem s);
Mat transpose(const Mat& A);
Mat frob_entries(const Field& F, const Mat& A, int m);
void mat_vec(const Field& F, const Mat& A, const Elem* v, Elem* out);
Elem det(const Field& F, Mat A);
bool invertible(const Field& F, const Mat& A);
Mat inverse(const Field& F, const Mat& A);
// rank of a rows x cols matrix given row-major
int rank_of(const Field& F, std::vector<Elem> m, int rows, int cols);
// M is lambda * I; returns lambda or 0
Elem scalar_of(const Mat& A);

SemilinearMap compose(const Field& F, const SemilinearMap& a, const SemilinearMap& b); // a after b
SemilinearMap power(const Field& F, const SemilinearMap& a, long e);
void apply(const Field& F, const SemilinearMap& g, const Elem* v, Elem* out);

} // namespace polaris
