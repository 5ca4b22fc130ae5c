#include "syzlab/sheaf_node.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace syz {

namespace {

void check_twist(Degree t) {
  if (t > 4 * kMaxDegree || t < -4 * kMaxDegree) throw std::out_of_range("twist out of supported range");
}

}  // namespace

SheafNode SheafNode::line_sum(std::vector<LineTerm> terms) {
  std::map<Degree, BigInt> merged;
  for (auto& term : terms) {
    check_twist(term.twist);
    if (term.mult < 0) throw std::invalid_argument("negative multiplicity in line sum");
    merged[term.twist] += term.mult;
  }
  SheafNode node;
  node.kind_ = Kind::LineSum;
  for (auto& [t, m] : merged) {
    if (m != 0) node.terms_.push_back({t, m});
  }
  return node;
}

SheafNode SheafNode::line(Degree twist, BigInt mult) { return line_sum({{twist, std::move(mult)}}); }

SheafNode SheafNode::syzygy(SyzygyId id) {
  SheafNode node;
  node.kind_ = Kind::Syzygy;
  node.a_ = id;
  return node;
}

SheafNode SheafNode::tensor(SyzygyId a, SyzygyId b) {
  if (a.side != b.side) throw std::invalid_argument("tensor factors must come from the same side");
  SheafNode node;
  node.kind_ = Kind::Tensor;
  node.a_ = a;
  node.b_ = b;
  return node;
}

SheafNode dual(const SheafNode& x) {
  SheafNode out = x;
  out.twist_ = -x.twist_;
  switch (x.kind_) {
    case SheafNode::Kind::LineSum:
      for (auto& term : out.terms_) term.twist = -term.twist;
      std::reverse(out.terms_.begin(), out.terms_.end());
      break;
    case SheafNode::Kind::Syzygy:
      out.kind_ = SheafNode::Kind::DualSyzygy;
      break;
    case SheafNode::Kind::DualSyzygy:
      out.kind_ = SheafNode::Kind::Syzygy;
      break;
    case SheafNode::Kind::Tensor:
      std::swap(out.a_, out.b_);
      break;
  }
  return out;
}

SheafNode twist(const SheafNode& x, Degree t) {
  check_twist(t);
  SheafNode out = x;
  if (x.kind_ == SheafNode::Kind::LineSum) {
    for (auto& term : out.terms_) {
      term.twist += t;
      check_twist(term.twist);
    }
    return out;
  }
  out.twist_ += t;
  check_twist(out.twist_);
  return out;
}

std::string SheafNode::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::LineSum: {
      if (terms_.empty()) return "0";
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << "O(" << terms_[i].twist << ")";
        if (terms_[i].mult != 1) os << "^" << terms_[i].mult;
      }
      return os.str();
    }
    case Kind::Syzygy:
      os << syz::to_string(a_);
      break;
    case Kind::DualSyzygy:
      os << syz::to_string(a_) << "^v";
      break;
    case Kind::Tensor:
      os << syz::to_string(a_) << " x " << syz::to_string(b_) << "^v";
      break;
  }
  if (twist_ != 0) os << "(" << twist_ << ")";
  return os.str();
}

namespace {

void check_index(const PureResolution& res, SyzygyId id) {
  if (id.index < 1 || id.index > res.n() - 1) {
    throw std::out_of_range(to_string(id) + " is outside the range 1.." + std::to_string(res.n() - 1));
  }
}

SyzygyId f_of(const PureResolution& res, SyzygyId g) {
  return SyzygyId{SyzygyId::Side::F, res.n() - g.index};
}

}  // namespace

SheafNode to_f_side(const PureResolution& res, const SheafNode& node) {
  const Degree top = res.degrees().top();
  switch (node.kind()) {
    case SheafNode::Kind::LineSum:
      return node;
    case SheafNode::Kind::Syzygy:
    case SheafNode::Kind::DualSyzygy: {
      check_index(res, node.first());
      if (node.first().side == SyzygyId::Side::F) return node;
      SheafNode f = SheafNode::syzygy(f_of(res, node.first()));
      // G_i(s) = F_{n-i}^v(s - top), G_i^v(s) = F_{n-i}(s + top)
      if (node.kind() == SheafNode::Kind::Syzygy) return twist(dual(f), node.twist() - top);
      return twist(f, node.twist() + top);
    }
    case SheafNode::Kind::Tensor: {
      check_index(res, node.first());
      check_index(res, node.second());
      if (node.first().side == SyzygyId::Side::F) return node;
      // G_a x G_b^v = F_{n-a}^v x F_{n-b}
      return twist(SheafNode::tensor(f_of(res, node.second()), f_of(res, node.first())), node.twist());
    }
  }
  return node;
}

namespace {

BigInt signed_term(int sign_exponent, BigInt v) { return sign_exponent % 2 == 0 ? v : BigInt(-v); }

// chi(F_i(s)), 0 <= i <= n, with F_0 = O^{b_0}(d_0 - top) and F_n = O^{b_{n+1}}.
BigInt chi_f(const PureResolution& res, int i, Degree s) {
  const Degree top = res.degrees().top();
  BigInt acc = 0;
  for (int k = 0; k <= i; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    acc += signed_term(i - k, res.beta(uk) * line_euler(res.n(), s + res.d(uk) - top));
  }
  return acc;
}

BigInt chi_f_dual(const PureResolution& res, int i, Degree s) {
  const Degree top = res.degrees().top();
  BigInt acc = 0;
  for (int k = i + 1; k <= res.n() + 1; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    acc += signed_term(k - i - 1, res.beta(uk) * line_euler(res.n(), s + top - res.d(uk)));
  }
  return acc;
}

}  // namespace

BigInt euler_char(const PureResolution& res, const SheafNode& node, Degree t) {
  const SheafNode f = to_f_side(res, node);
  const Degree s = f.twist() + t;
  switch (f.kind()) {
    case SheafNode::Kind::LineSum: {
      BigInt acc = 0;
      for (const auto& term : f.terms()) acc += term.mult * line_euler(res.n(), term.twist + t);
      return acc;
    }
    case SheafNode::Kind::Syzygy:
      return chi_f(res, f.first().index, s);
    case SheafNode::Kind::DualSyzygy:
      return chi_f_dual(res, f.first().index, s);
    case SheafNode::Kind::Tensor: {
      const Degree top = res.degrees().top();
      const int a = f.first().index;
      BigInt acc = 0;
      for (int k = 0; k <= a; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        acc += signed_term(a - k, res.beta(uk) * chi_f_dual(res, f.second().index, s + res.d(uk) - top));
      }
      return acc;
    }
  }
  return 0;
}

}  // namespace syz
