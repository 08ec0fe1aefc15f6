#pragma once

#include "skelcat/core.hpp"

namespace skelcat {

// dense complex matrix, only used at tiny sizes
struct CMat {
    int rows = 0, cols = 0;
    std::vector<Scalar> v;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), v(std::size_t(r) * c, Scalar(0)) {}

    Scalar& at(int r, int c) { return v[std::size_t(r) * cols + c]; }
    Scalar at(int r, int c) const { return v[std::size_t(r) * cols + c]; }

    static CMat eye(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    CMat mul(const CMat& o) const {
        if (cols != o.rows) throw ValidationError("CMat: shape mismatch");
        CMat out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                Scalar a = at(i, k);
                if (a == Scalar(0)) continue;
                for (int j = 0; j < o.cols; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    CMat inverse() const {
        if (rows != cols) throw ValidationError("CMat: inverse of non-square");
        int n = rows;
        CMat a = *this, inv = eye(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            double best = 0.0;
            for (int r = col; r < n; ++r) {
                double m = std::abs(a.at(r, col));
                if (m > best) { best = m; piv = r; }
            }
            if (piv < 0 || best < 1e-14)
                throw ValidationError("CMat: singular matrix");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            Scalar d = a.at(col, col);
            for (int j = 0; j < n; ++j) { a.at(col, j) /= d; inv.at(col, j) /= d; }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                Scalar f = a.at(r, col);
                if (f == Scalar(0)) continue;
                for (int j = 0; j < n; ++j) {
                    a.at(r, j) -= f * a.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }
};

}  // namespace skelcat
