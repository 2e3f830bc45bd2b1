#include "mennicke/mgroup.hpp"

#include <stdexcept>

namespace mennicke {

MElem mul(const MElem& p, const MElem& q) {
  return {p.i + signed_by(q.i, p.j), p.j + signed_by(q.j, p.k), signed_by(p.k, q.i) + q.k};
}

MElem inv(const MElem& p) {
  return {-signed_by(p.i, p.j), -signed_by(p.j, p.k), -signed_by(p.k, p.i)};
}

MElem conj(const MElem& p, const MElem& g) { return mul(inv(g), p, g); }

MElem comm(const MElem& p, const MElem& q) { return mul(inv(p), inv(q), p, q); }

MElem pow(const MElem& p, const Int& n) {
  MElem base = n < 0 ? inv(p) : p;
  Int e = n < 0 ? Int(-n) : n;
  MElem acc = MElem::identity();
  while (e > 0) {
    if (is_odd(e)) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

Order order(const MElem& p) {
  if (p.is_identity()) return Order::One;
  if (is_odd(p.i) && is_odd(p.j) && is_odd(p.k)) return Order::Two;
  return Order::Infinite;
}

std::string to_string(Order o) {
  switch (o) {
    case Order::One: return "1";
    case Order::Two: return "2";
    case Order::Infinite: return "infinite";
  }
  return "?";
}

CosetClass coset_class(const MElem& p) {
  const unsigned bits = (is_odd(p.i) ? 1u : 0u) | (is_odd(p.j) ? 2u : 0u) | (is_odd(p.k) ? 4u : 0u);
  return static_cast<CosetClass>(bits);
}

std::string coset_label(CosetClass c) {
  switch (c) {
    case CosetClass::One: return "1";
    case CosetClass::X: return "x";
    case CosetClass::Y: return "y";
    case CosetClass::Z: return "z";
    case CosetClass::XY: return "xy";
    case CosetClass::YZ: return "yz";
    case CosetClass::ZX: return "zx";
    case CosetClass::XYZ: return "xyz";
  }
  return "?";
}

MElem coset_rep(CosetClass c) {
  const auto bits = static_cast<unsigned>(c);
  return {Int(bits & 1u), Int((bits >> 1) & 1u), Int((bits >> 2) & 1u)};
}

bool in_M2(const MElem& p) { return is_even(p.i) && is_even(p.j) && is_even(p.k); }

bool in_V(const MElem& p) { return is_even(p.i + p.j + p.k); }

bool in_gamma(const MElem& p, unsigned n) {
  if (n == 0) throw std::invalid_argument("in_gamma: n >= 1");
  const Int d = Int(1) << (n - 1);
  return p.i % d == 0 && p.j % d == 0 && p.k % d == 0;
}

bool is_central(const MElem& p) {
  // With P = (-1)^i, Q = (-1)^j, R = (-1)^k the conjugates of the generators
  // by p are x -> (Q, 0, 2k), y -> (-2iQ, R, 0), z -> (0, -2jR, P).
  const int P = sign_pow(p.i), Q = sign_pow(p.j), R = sign_pow(p.k);
  const bool fixes_x = Q == 1 && p.k == 0;
  const bool fixes_y = p.i == 0 && R == 1;
  const bool fixes_z = p.j == 0 && P == 1;
  return fixes_x && fixes_y && fixes_z;
}

DInfElem dinf_mul(const DInfElem& p, const DInfElem& q) {
  return {p.i + (p.j ? Int(-q.i) : q.i), p.j != q.j};
}

DInfElem dinf_inv(const DInfElem& p) {
  // (u^i v)^-1 = u^i v; (u^i)^-1 = u^-i
  return p.j ? p : DInfElem{-p.i, false};
}

DInfElem dinf_pow(const DInfElem& p, const Int& n) {
  if (p.j) return is_odd(n) ? p : DInfElem{0, false};
  return {p.i * n, false};
}

namespace {
const DInfElem kU{1, false};
const DInfElem kV{0, true};
const DInfElem kOne{0, false};

DInfElem dinf_image(const MElem& p, const DInfElem& ix, const DInfElem& iy, const DInfElem& iz) {
  return dinf_mul(dinf_mul(dinf_pow(ix, p.i), dinf_pow(iy, p.j)), dinf_pow(iz, p.k));
}
}  // namespace

DInfElem f1(const MElem& p) { return dinf_image(p, kU, kV, kOne); }
DInfElem f2(const MElem& p) { return dinf_image(p, kOne, kU, kV); }
DInfElem f3(const MElem& p) { return dinf_image(p, kV, kOne, kU); }

Word to_word(const MElem& p) {
  Word w;
  w.append('x', p.i);
  w.append('y', p.j);
  w.append('z', p.k);
  return w;
}

MElem eval_m(const Word& w) {
  MElem acc = MElem::identity();
  for (const auto& l : w) {
    MElem g;
    switch (l.gen) {
      // Powers of x, y, z are already in normal form.
      case 'x': acc = mul(acc, MElem{l.exp, 0, 0}); continue;
      case 'y': acc = mul(acc, MElem{0, l.exp, 0}); continue;
      case 'z': acc = mul(acc, MElem{0, 0, l.exp}); continue;
      case 'u': g = {1, 1, 0}; break;
      case 'v': g = {0, 1, 1}; break;
      case 'w': g = {1, 0, -1}; break;
      default: throw std::invalid_argument(std::string("eval_m: generator ") + l.gen);
    }
    acc = mul(acc, pow(g, l.exp));
  }
  return acc;
}

MElem from_normal_word(const Word& w) {
  MElem out = MElem::identity();
  int last = -1;
  for (const auto& l : w) {
    const int r = generator_rank(GroupId::M, l.gen);
    if (r <= last) throw std::invalid_argument("from_normal_word: word is not collected");
    last = r;
    (r == 0 ? out.i : r == 1 ? out.j : out.k) = l.exp;
  }
  return out;
}

std::string to_string(const MElem& p) { return to_string(to_word(p)); }

}  // namespace mennicke
