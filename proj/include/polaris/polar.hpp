#pragma once
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polaris/gf.hpp"
#include "polaris/matrix.hpp"
#include "polaris/roots.hpp"

namespace polaris {

enum class FormKind { Symplectic, Parabolic, Hyperbolic, Elliptic, Hermitian };

std::string kind_name(FormKind k);
FormKind kind_from_name(const std::string& s);

struct ClassicalForm {
    FormKind kind = FormKind::Symplectic;
    Field F;
    int dim = 0;
    int rank = 0;
    int sigma = 0; // Frobenius power of the field involution (hermitian only)
    Mat gram;      // b(x, y) = sum x_i G_ij y_j^sigma
    Mat quad;      // Q(x) = sum_{i<=j} Q_ij x_i x_j (orthogonal kinds)

    struct Term {
        int i, j;
        Elem c;
    };
    std::vector<Term> gram_terms, quad_terms; // nonzero entries, filled by finalize()
    void finalize();

    Elem bilinear(const Elem* x, const Elem* y) const;
    Elem quadratic(const Elem* x) const;
    bool singular(const Elem* x) const;
    bool orthogonal() const { return kind == FormKind::Parabolic || kind == FormKind::Hyperbolic || kind == FormKind::Elliptic; }
    Family family() const;
};

// Coordinates follow the Chevalley conventions: C and D use 0..2n-1 with x_i paired to x_{n+i};
// B uses 0..2n with index 0 the anisotropic coordinate.
ClassicalForm make_symplectic(const Field& F, int n);
ClassicalForm make_parabolic(const Field& F, int n);
ClassicalForm make_hyperbolic(const Field& F, int n);
// rank n, hyperbolic part on 0..2n-1, norm form of the quadratic extension on 2n, 2n+1
ClassicalForm make_elliptic(const Field& F, int n);
// F = GF(r^2); coordinates (x_{-n},...,x_{-1},x_1,...,x_n); form sum_l (-1)^l (x_{-l} y_l^s + x_l y_{-l}^s)
ClassicalForm make_hermitian(const Field& F, int n);
ClassicalForm make_form(FormKind kind, const Field& F, int n);

using Bits = std::vector<std::uint64_t>;

inline bool bit(const std::uint64_t* b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t* b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct SubspaceList {
    int d = 0;                   // projective dimension
    int k = 1;                   // basis size d+1
    std::vector<std::int32_t> basis; // count * k point indices, rows of the reduced echelon form
    size_t count() const { return basis.size() / k; }
    const std::int32_t* at(size_t i) const { return basis.data() + i * k; }
};

struct SingularSubspace {
    std::vector<int> basis; // point indices
    int dim() const { return static_cast<int>(basis.size()) - 1; }
};

class PolarSpace {
public:
    ClassicalForm form;
    int n = 0;      // rank
    int D = 0;      // ambient vector dimension
    int N = 0;      // number of points
    int words = 0;  // bitset words per point set
    bool thin = false;
    bool large = false;

    const Elem* point(int i) const { return pts_.data() + static_cast<size_t>(i) * D; }
    int pivot(int i) const { return pivot_[i]; }
    long code(const Elem* v) const;
    // index of the projective point spanned by v; -1 for zero or non-singular vectors
    int index_of(const Elem* v) const { return code_index_[code(v)]; }
    const std::uint64_t* perp(int i) const { return perp_.data() + static_cast<size_t>(i) * words; }
    bool collinear(int i, int j) const { return bit(perp(i), j); }
    Elem pair(int i, int j) const;

    const SubspaceList& subspaces(int d) const;
    std::vector<int> span_points(const int* basis, int k) const;
    // canonical reduced echelon basis (as point indices) of the span of arbitrary vectors
    std::vector<int> canonical_basis(const std::vector<std::vector<Elem>>& vecs) const;
    const SingularSubspace& reference_maximal() const { return ref_; }

    friend PolarSpace build_polar_space(const ClassicalForm& form, long budget);
    PolarSpace() = default;
    PolarSpace(PolarSpace&&) noexcept;
    PolarSpace& operator=(PolarSpace&&) noexcept;

private:
    std::vector<Elem> pts_;
    std::vector<int> pivot_;
    std::vector<std::int32_t> code_index_;
    std::vector<long> qpow_;
    Bits perp_;
    std::vector<Elem> dual_; // G * sigma(p_i) per point
    std::vector<Elem> btab_;
    SingularSubspace ref_;
    mutable std::vector<std::unique_ptr<SubspaceList>> levels_;
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

PolarSpace build_polar_space(const ClassicalForm& form, long budget = 20000);

// all singular d-spaces, each exactly once
const SubspaceList& enumerate_singular(const PolarSpace& P, int d);
bool opposite(const PolarSpace& P, const SingularSubspace& X, const SingularSubspace& Y);
bool opposite_bases(const PolarSpace& P, const int* x, const int* y, int k);
// type n-1 or n of a maximal subspace of a thin space; the reference maximal has type n
int oriflamme_type(const PolarSpace& P, const SingularSubspace& M);

struct CorankResult {
    bool is_subspace = false;
    int t = -1;                       // least t with every singular t-space meeting S
    std::optional<SingularSubspace> witness; // a (t-1)-space disjoint from S
};
CorankResult corank_of_subspace(const PolarSpace& P, const Bits& S);
bool is_subspace(const PolarSpace& P, const Bits& S);

} // namespace polaris
