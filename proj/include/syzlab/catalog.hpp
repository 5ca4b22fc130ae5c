#pragma once

#include "syzlab/resolution.hpp"

namespace syz {

/// Koszul complex on n+1 linear forms: degrees 0..n+1, b_i = C(n+1, i).
PureResolution koszul(int n);

/// Compressed Gorenstein algebra of socle degree 2t (n >= 2, t >= 1):
/// d_i = t + i for 1 <= i <= n, d_{n+1} = 2t + n + 1, b_0 = b_{n+1} = 1.
PureResolution compressed_gorenstein(int n, int t);

/// Eagon-Northcott complex of a generic (a+n) x a matrix of forms of degree d
/// (n >= 2, d >= 1, a >= 1): d_i = d(a + i - 1), b_i = C(a+n, a+i-1) C(a+i-2, i-1).
PureResolution eagon_northcott(int n, int d, int a);

}  // namespace syz
