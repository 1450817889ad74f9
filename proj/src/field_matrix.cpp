#include "vck/field_matrix.hpp"

#include "vck/errors.hpp"

namespace vck {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    if (a % p == 0) throw precondition_error("inv_mod: zero is not invertible");
    return pow_mod(a, p - 2, p);
}

bool is_probable_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                       29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for 64-bit inputs
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                       29ULL, 31ULL, 37ULL}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int FieldMatrix::rank() const {
    FieldMatrix tmp = *this;
    return (int)tmp.rref().size();
}

std::vector<int> FieldMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int sel = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
        uint64_t inv = inv_mod(at(row, col), p_);
        for (int c = col; c < cols_; ++c) at(row, c) = mul_mod(at(row, c), inv, p_);
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            uint64_t f = at(r, col);
            for (int c = col; c < cols_; ++c)
                at(r, c) = sub_mod(at(r, c), mul_mod(f, at(row, c), p_), p_);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

FieldMatrix FieldMatrix::select_columns(const std::vector<int>& cols) const {
    FieldMatrix m(rows_, (int)cols.size(), p_);
    for (int r = 0; r < rows_; ++r)
        for (size_t i = 0; i < cols.size(); ++i) m.at(r, (int)i) = at(r, cols[i]);
    return m;
}

} // namespace vck
