#include "cjx/intlat.hpp"

#include <utility>

namespace cjx {

namespace {

/// Extended gcd: returns g = gcd(a,b) and x,y with x*a + y*b = g, g >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer r0 = a, r1 = b;
    Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;  // truncated is fine for the invariant
        Integer r2 = r0 - q * r1;
        Integer x2 = x0 - q * x1;
        Integer y2 = y0 - q * y1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        x0 = std::move(x1);
        x1 = std::move(x2);
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    g = r0;
    x = x0;
    y = y0;
}

}  // namespace

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& A, std::size_t cols) {
    const std::size_t rows = A.size();
    // Work on a copy M (rows x cols) and a cols x cols unimodular tracker U,
    // applying identical column operations to both: at the end M = A * U.
    IntMatrix M(rows, std::vector<Integer>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols && c < A[r].size(); ++c) M[r][c] = A[r][c];
    IntMatrix U(cols, std::vector<Integer>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) U[c][c] = 1;

    auto colCombine = [&](std::size_t ci, std::size_t cj, const Integer& a, const Integer& b,
                          const Integer& cc, const Integer& dd) {
        // (col_i, col_j) <- (a*col_i + b*col_j, cc*col_i + dd*col_j), det = a*dd - b*cc = +-1
        for (std::size_t r = 0; r < rows; ++r) {
            Integer ni = a * M[r][ci] + b * M[r][cj];
            Integer nj = cc * M[r][ci] + dd * M[r][cj];
            M[r][ci] = std::move(ni);
            M[r][cj] = std::move(nj);
        }
        for (std::size_t r = 0; r < cols; ++r) {
            Integer ni = a * U[r][ci] + b * U[r][cj];
            Integer nj = cc * U[r][ci] + dd * U[r][cj];
            U[r][ci] = std::move(ni);
            U[r][cj] = std::move(nj);
        }
    };

    std::size_t pivotCol = 0;
    for (std::size_t row = 0; row < rows && pivotCol < cols; ++row) {
        // clear the row to a single pivot among columns >= pivotCol
        std::size_t lead = cols;
        for (std::size_t c = pivotCol; c < cols; ++c)
            if (M[row][c] != 0) {
                lead = c;
                break;
            }
        if (lead == cols) continue;
        for (std::size_t c = lead + 1; c < cols; ++c) {
            if (M[row][c] == 0) continue;
            Integer g, x, y;
            ext_gcd(M[row][lead], M[row][c], g, x, y);
            const Integer ai = M[row][lead] / g, bi = M[row][c] / g;
            // (lead, c) <- (x*lead + y*c, -bi*lead + ai*c): new lead entry g, new c entry 0
            colCombine(lead, c, x, y, -bi, ai);
        }
        if (lead != pivotCol) {
            // swap columns lead <-> pivotCol
            for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][lead], M[r][pivotCol]);
            for (std::size_t r = 0; r < cols; ++r) std::swap(U[r][lead], U[r][pivotCol]);
        }
        ++pivotCol;
    }

    std::vector<std::vector<Integer>> kernel;
    for (std::size_t c = pivotCol; c < cols; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < rows; ++r)
            if (M[r][c] != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Integer> v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = U[r][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace cjx
