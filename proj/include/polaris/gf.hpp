#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polaris {

using Elem = std::uint8_t;

// GF(p^k) with q <= 81. Elements are indices: sum c_i p^i over the modulus basis.
class Field {
public:
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus; // monic, low degree first, size k+1

    Elem add(Elem a, Elem b) const { return add_[a * q + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem div(Elem a, Elem b) const { return mul_[a * q + inv_[b]]; }
    Elem frob(Elem a, int m) const { return frob_[(m % k) * q + a]; }
    Elem pow(Elem a, long e) const;
    bool is_square(Elem a) const { return sq_[a] != 0; }
    Elem from_int(long v) const; // image of an integer in the prime field

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;
    std::string name() const;

    const Elem* add_table() const { return add_.data(); }
    const Elem* mul_table() const { return mul_.data(); }

    friend Field field_make(int p, int k);

private:
    std::vector<Elem> add_, mul_, neg_, inv_, frob_, sq_;
};

Field field_make(int p, int k);
Field field_of_order(int q);
bool is_prime(int p);

Elem frobenius(const Field& F, Elem x, int m);
std::optional<Elem> nonsquare(const Field& F);
std::pair<Elem, Elem> irreducible_quadratic(const Field& F);

} // namespace polaris
