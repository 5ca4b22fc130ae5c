#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "syzlab/resolution.hpp"
#include "syzlab/sheaf_node.hpp"

namespace syz {

/// Bundle grammar:
///   F1, F_1, G2          syzygy
///   F1*, F1^v            its dual
///   F1xF2*               F_1 tensor F_2^dual (same side; the second factor must be dualized)
///   any of the above followed by (k) for a twist
///   O(3)^2+O(-1)         line-bundle sum
/// Whitespace is ignored. Throws std::invalid_argument on malformed text.
SheafNode parse_bundle(const std::string& text);

/// Exit codes: 0 success / all yes, 1 some check failed or some verdict no,
/// 2 invalid input or usage, 3 some verdict undetermined and none no,
/// 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace syz
