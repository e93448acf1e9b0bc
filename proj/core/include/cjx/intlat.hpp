#ifndef CJX_INTLAT_HPP
#define CJX_INTLAT_HPP

#include <vector>

#include "cjx/numbers.hpp"

namespace cjx {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Basis of the integer kernel { v in Z^cols : A v = 0 }, returned as rows.
/// Column-style elimination with unimodular column tracking: reduce A to
/// column echelon form by gcd steps; the tracked columns that end up over
/// zero columns of A form a kernel basis.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& A, std::size_t cols);

}  // namespace cjx

#endif
