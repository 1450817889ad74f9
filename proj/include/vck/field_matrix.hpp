#pragma once

#include <cstdint>
#include <vector>

namespace vck {

// Arithmetic in F_p for primes below 2^62 (products fit __int128).
inline constexpr uint64_t default_prime = 2305843009213693951ULL; // 2^61 - 1

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}
inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);
bool is_probable_prime(uint64_t n);

// Dense row-major matrix over F_p.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(int rows, int cols, uint64_t prime)
        : rows_(rows), cols_(cols), p_(prime), a_((size_t)rows * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint64_t prime() const { return p_; }
    uint64_t& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    uint64_t at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    int rank() const;

    // Reduce to reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref();

    FieldMatrix select_columns(const std::vector<int>& cols) const;

    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    uint64_t p_ = default_prime;
    std::vector<uint64_t> a_;
};

} // namespace vck
