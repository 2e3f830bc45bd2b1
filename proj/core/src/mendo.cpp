#include "mennicke/mendo.hpp"

#include "mennicke/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace mennicke {

std::string relation_name(MRelation r) {
  switch (r) {
    case MRelation::XY: return "x^y=x^-1";
    case MRelation::YZ: return "y^z=y^-1";
    case MRelation::ZX: return "z^x=z^-1";
  }
  return "?";
}

std::optional<MRelation> relation_check(const MEndo& e) {
  if (conj(e.img_x, e.img_y) != inv(e.img_x)) return MRelation::XY;
  if (conj(e.img_y, e.img_z) != inv(e.img_y)) return MRelation::YZ;
  if (conj(e.img_z, e.img_x) != inv(e.img_z)) return MRelation::ZX;
  return std::nullopt;
}

MEndo make_endo_checked(const MElem& ix, const MElem& iy, const MElem& iz) {
  MEndo e{ix, iy, iz};
  if (auto bad = relation_check(e))
    throw std::invalid_argument("not an endomorphism of M: fails " + relation_name(*bad));
  return e;
}

MElem apply(const MEndo& e, const MElem& p) {
  return mul(pow(e.img_x, p.i), pow(e.img_y, p.j), pow(e.img_z, p.k));
}

MEndo compose(const MEndo& e1, const MEndo& e2) {
  return {apply(e2, e1.img_x), apply(e2, e1.img_y), apply(e2, e1.img_z)};
}

MEndo inner(const MElem& m) {
  return {conj(MElem::x(), m), conj(MElem::y(), m), conj(MElem::z(), m)};
}

IntMatrix3 m2_matrix(const MEndo& e) {
  IntMatrix3 out;
  const MElem basis[3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  for (int r = 0; r < 3; ++r) {
    const MElem img = apply(e, basis[r]);
    out[r] = {img.i / 2, img.j / 2, img.k / 2};
  }
  return out;
}

IntMatrix3 matmul(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += a[r][k] * b[k][c];
      out[r][c] = s;
    }
  return out;
}

IntMatrix3 identity_matrix3() {
  IntMatrix3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = r == c ? 1 : 0;
  return m;
}

Int det(const IntMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

F2Matrix3 mod2_matrix(const MEndo& e) {
  const MElem* img[3] = {&e.img_x, &e.img_y, &e.img_z};
  F2Matrix3 out{};
  for (int r = 0; r < 3; ++r)
    out[r] = static_cast<std::uint8_t>(static_cast<unsigned>(coset_class(*img[r])));
  return out;
}

bool f2_invertible(const F2Matrix3& m) {
  // Nonsingular iff the rows span all seven nonzero vectors.
  unsigned seen = 0;
  for (unsigned s = 1; s < 8; ++s) {
    unsigned v = 0;
    for (int r = 0; r < 3; ++r)
      if (s & (1u << r)) v ^= m[r];
    seen |= 1u << v;
  }
  return (seen & 0xFEu) == 0xFEu;
}

bool is_automorphism(const MEndo& e) {
  const Int d = det(m2_matrix(e));
  return (d == 1 || d == -1) && f2_invertible(mod2_matrix(e));
}

namespace {

std::vector<ParityClassSolution> solve_by_parity(const std::vector<std::pair<MElem, MElem>>& pairs,
                                                 bool stop_at_first) {
  auto values = [&](const MElem& t) {
    std::vector<Int> out;
    out.reserve(3 * pairs.size());
    for (const auto& pr : pairs) {
      const MElem c = conj(pr.first, t);
      out.push_back(c.i);
      out.push_back(c.j);
      out.push_back(c.k);
    }
    return out;
  };
  std::vector<Int> target;
  for (const auto& pr : pairs) {
    target.push_back(pr.second.i);
    target.push_back(pr.second.j);
    target.push_back(pr.second.k);
  }
  std::vector<ParityClassSolution> out;
  for (auto cls : kCosetClasses) {
    const MElem base = coset_rep(cls);
    const std::vector<Int> f0 = values(base);
    std::vector<std::vector<Int>> a(f0.size(), std::vector<Int>(3));
    for (int k = 0; k < 3; ++k) {
      MElem probe = base;
      (k == 0 ? probe.i : k == 1 ? probe.j : probe.k) += 2;
      const std::vector<Int> fk = values(probe);
      for (std::size_t r = 0; r < fk.size(); ++r) a[r][k] = fk[r] - f0[r];
    }
    std::vector<Int> b(f0.size());
    for (std::size_t r = 0; r < f0.size(); ++r) b[r] = target[r] - f0[r];
    const LinearSolution sol = solve_rational(std::move(a), std::move(b));
    ParityClassSolution entry;
    entry.parity = cls;
    entry.rank = sol.rank;
    if (const auto s = sol.integral()) {
      const MElem t{base.i + 2 * (*s)[0], base.j + 2 * (*s)[1], base.k + 2 * (*s)[2]};
      if (values(t) == target) entry.solution = t;
    }
    const bool found = entry.solution.has_value();
    out.push_back(std::move(entry));
    if (found && stop_at_first) break;
  }
  return out;
}

}  // namespace

std::vector<ParityClassSolution> conjugator_solutions(
    const std::vector<std::pair<MElem, MElem>>& pairs) {
  return solve_by_parity(pairs, false);
}

std::optional<MElem> solve_conjugator(const std::vector<std::pair<MElem, MElem>>& pairs) {
  auto entries = solve_by_parity(pairs, true);
  if (!entries.empty() && entries.back().solution) return entries.back().solution;
  return std::nullopt;
}

std::optional<MElem> is_inner(const MEndo& e) {
  return solve_conjugator({{MElem::x(), e.img_x}, {MElem::y(), e.img_y}, {MElem::z(), e.img_z}});
}

ClassPerm lambda_perm(const MEndo& e) {
  ClassPerm out{};
  for (auto c : kCosetClasses) out[static_cast<unsigned>(c)] = coset_class(apply(e, coset_rep(c)));
  return out;
}

namespace {

// Label order 1, x, y, z, xy, yz, zx, xyz.
int label_rank(CosetClass c) {
  static const int rank[8] = {0, 1, 2, 4, 3, 6, 5, 7};
  return rank[static_cast<unsigned>(c)];
}

}  // namespace

std::vector<std::vector<CosetClass>> orbits(const std::vector<MEndo>& gens) {
  std::vector<ClassPerm> perms;
  for (const auto& g : gens) perms.push_back(lambda_perm(g));
  std::array<int, 8> orbit_of;
  orbit_of.fill(-1);
  std::vector<std::vector<CosetClass>> out;
  for (auto c : kCosetClasses) {
    if (orbit_of[static_cast<unsigned>(c)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<CosetClass> orbit{c};
    orbit_of[static_cast<unsigned>(c)] = id;
    for (std::size_t n = 0; n < orbit.size(); ++n)
      for (const auto& p : perms) {
        const CosetClass d = p[static_cast<unsigned>(orbit[n])];
        if (orbit_of[static_cast<unsigned>(d)] < 0) {
          orbit_of[static_cast<unsigned>(d)] = id;
          orbit.push_back(d);
        }
      }
    std::sort(orbit.begin(), orbit.end(),
              [](CosetClass a, CosetClass b) { return label_rank(a) < label_rank(b); });
    out.push_back(std::move(orbit));
  }
  // Smaller orbits first, ties by first label.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return label_rank(a.front()) < label_rank(b.front());
  });
  return out;
}

std::string to_string(const std::vector<std::vector<CosetClass>>& partition) {
  std::string out;
  for (const auto& orbit : partition) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t n = 0; n < orbit.size(); ++n) {
      if (n) out += ',';
      out += coset_label(orbit[n]);
    }
    out += '}';
  }
  return out;
}

MEndo theta() { return {MElem::y(), MElem::z(), MElem::x()}; }
MEndo a_endo() { return {{1, 0, 2}, MElem::y(), MElem::z()}; }
MEndo b_endo() { return {MElem::x(), {-2, 1, 0}, MElem::z()}; }
MEndo c_endo() { return {MElem::x(), MElem::y(), {0, -2, 1}}; }

MEndo p_family(const Int& c, const Int& d, const Int& g) {
  return {mul(MElem::x(), MElem{0, 0, 2 * c}), mul(MElem::y(), MElem{2 * d, 0, 0}),
          mul(MElem::z(), MElem{0, 2 * g, 0})};
}

MEndo kernel_rep(int r, int s, int t) {
  return {mul(MElem::x(), MElem{0, 0, r}), mul(MElem::y(), MElem{s, 0, 0}),
          mul(MElem::z(), MElem{0, t, 0})};
}

std::string to_string(const MEndo& e) {
  return "x -> " + to_string(e.img_x) + ", y -> " + to_string(e.img_y) + ", z -> " +
         to_string(e.img_z);
}

MEndo parse_mendo(std::string_view text) {
  MEndo e = MEndo::identity();
  bool seen[3] = {false, false, false};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view part = text.substr(start, stop - start);
    const std::size_t arrow = part.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("parse_mendo: expected '->'");
    std::string_view lhs = part.substr(0, arrow);
    while (!lhs.empty() && lhs.front() == ' ') lhs.remove_prefix(1);
    while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
    if (lhs.size() != 1 || generator_rank(GroupId::M, lhs[0]) < 0)
      throw std::invalid_argument("parse_mendo: bad generator '" + std::string(lhs) + "'");
    const int r = generator_rank(GroupId::M, lhs[0]);
    const MElem img = eval_m(parse_word(part.substr(arrow + 2), GroupId::M));
    (r == 0 ? e.img_x : r == 1 ? e.img_y : e.img_z) = img;
    seen[r] = true;
    start = stop + 1;
  }
  if (!seen[0] || !seen[1] || !seen[2]) throw std::invalid_argument("parse_mendo: missing generator");
  return e;
}

}  // namespace mennicke
