#include "mennicke/f2quot.hpp"

#include "mennicke/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mennicke {

std::string_view quotient_name(QuotientId q) {
  switch (q) {
    case QuotientId::GModGG2: return "G/[G,G]^2";
    case QuotientId::GModGG: return "G/[G,G]";
    case QuotientId::PModM2: return "P/M^2";
    case QuotientId::PModPP: return "P/[P,P]";
  }
  return "?";
}

FiniteGroupTable::FiniteGroupTable(std::vector<PElem> reps, std::function<Elem(const PElem&)> locate)
    : reps_(std::move(reps)), locate_(std::move(locate)) {
  const std::size_t n = reps_.size();
  if (n == 0 || !reps_[0].is_identity()) throw std::invalid_argument("first representative must be 1");
  for (std::size_t a = 0; a < n; ++a)
    if (locate_(reps_[a]) != static_cast<Elem>(a))
      throw std::logic_error("representative " + to_string(reps_[a]) + " is not located at itself");
  table_.resize(n * n);
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = locate_(pmul(reps_[a], reps_[b]));
      if (c < 0 || static_cast<std::size_t>(c) >= n) throw std::logic_error("table not closed");
      table_[a * n + b] = c;
      if (c == 0) inverse_[a] = static_cast<Elem>(b);
    }
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw std::logic_error("element without inverse");
}

FiniteGroupTable::Subgroup FiniteGroupTable::all() const {
  Subgroup s(order());
  for (std::size_t a = 0; a < order(); ++a) s[a] = static_cast<Elem>(a);
  return s;
}

FiniteGroupTable::Subgroup FiniteGroupTable::generate(const std::vector<Elem>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t n = 0; n < members.size(); ++n)
    for (Elem g : gens) {
      const Elem c = mul(members[n], g);
      if (!in[c]) {
        in[c] = 1;
        members.push_back(c);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteGroupTable::Subgroup FiniteGroupTable::commutator(const Subgroup& h, const Subgroup& k) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elem> gens;
  for (Elem a : h)
    for (Elem b : k) {
      const Elem c = comm(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return generate(gens);
}

FiniteGroupTable::Subgroup FiniteGroupTable::squares(const Subgroup& h) const {
  std::vector<Elem> gens;
  for (Elem a : h) gens.push_back(mul(a, a));
  return generate(gens);
}

bool FiniteGroupTable::is_normal(const Subgroup& n, const Subgroup& in) const {
  std::vector<char> member(order(), 0);
  for (Elem a : n) member[a] = 1;
  for (Elem a : n)
    for (Elem b : in)
      if (!member[conj(a, b)]) return false;
  return true;
}

bool FiniteGroupTable::is_abelian(const Subgroup& h) const {
  for (Elem a : h)
    for (Elem b : h)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroupTable::element_order(Elem a) const {
  int n = 1;
  for (Elem p = a; p != 0; p = mul(p, a)) ++n;
  return n;
}

int FiniteGroupTable::exponent(const Subgroup& h) const {
  int e = 1;
  for (Elem a : h) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<FiniteGroupTable::Subgroup> FiniteGroupTable::index2_subgroups(const Subgroup& h) const {
  // Index-2 subgroups contain the subgroup generated by squares, and h
  // modulo it is elementary abelian; label each element by its image.
  const Subgroup sq = squares(h);
  std::vector<int> label(order(), -1);
  std::vector<Elem> labelled;
  for (Elem a : sq) {
    label[a] = 0;
    labelled.push_back(a);
  }
  int dim = 0;
  for (Elem b : h) {
    if (label[b] >= 0) continue;
    const std::size_t stop = labelled.size();
    for (std::size_t n = 0; n < stop; ++n) {
      const Elem c = mul(labelled[n], b);
      label[c] = label[labelled[n]] | (1 << dim);
      labelled.push_back(c);
    }
    ++dim;
  }
  std::vector<Subgroup> out;
  for (int f = 1; f < (1 << dim); ++f) {
    Subgroup k;
    for (Elem a : h)
      if (__builtin_popcount(static_cast<unsigned>(label[a] & f)) % 2 == 0) k.push_back(a);
    out.push_back(k);
  }
  return out;
}

FiniteGroupTable::Subgroup FiniteGroupTable::power_torsion(const Subgroup& h, const Subgroup& n,
                                                           int k) const {
  std::vector<char> member(order(), 0);
  for (Elem a : n) member[a] = 1;
  Subgroup out;
  for (Elem a : h) {
    Elem p = 0;
    for (int t = 0; t < k; ++t) p = mul(p, a);
    if (member[p]) out.push_back(a);
  }
  return out;
}

bool FiniteGroupTable::check_axioms(std::uint64_t seed, std::size_t sampled) const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    const Elem e = static_cast<Elem>(a);
    if (mul(0, e) != e || mul(e, 0) != e || mul(e, inv(e)) != 0 || mul(inv(e), e) != 0) return false;
  }
  if (sampled == 0) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Elem ab = table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) return false;
      }
    return true;
  }
  Sampler s(seed);
  for (std::size_t t = 0; t < sampled; ++t) {
    const Elem a = static_cast<Elem>(s.below(n)), b = static_cast<Elem>(s.below(n)),
               c = static_cast<Elem>(s.below(n));
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

namespace {

int parity(const Int& v) { return is_odd(v) ? 1 : 0; }

int key_mod_m2(const GElem& g) {
  return parity(g.a) | parity(g.b) << 1 | parity(g.c) << 2 | g.i << 3 | g.j << 4 | g.k << 5 | g.l << 6;
}

FiniteGroupTable build(QuotientId q) {
  std::vector<PElem> reps;
  std::function<int(const PElem&)> locate;
  switch (q) {
    case QuotientId::GModGG2:
    case QuotientId::PModM2: {
      const int halves = q == QuotientId::PModM2 ? 2 : 1;
      for (int e = 0; e < halves; ++e)
        for (int key = 0; key < 192; ++key)
          reps.push_back({GElem::make(key & 1, key >> 1 & 1, key >> 2 & 1, key >> 3 & 1, key >> 4 & 1,
                                      key >> 5 & 1, key >> 6),
                          e == 1});
      locate = [](const PElem& p) { return key_mod_m2(p.g) + (p.e ? 192 : 0); };
      break;
    }
    case QuotientId::GModGG:
      for (int key = 0; key < 12; ++key)
        reps.push_back(PElem::of(GElem::make(key & 1, 0, 0, key >> 1 & 1, 0, 0, key >> 2)));
      locate = [](const PElem& p) {
        return parity(p.g.a + p.g.b + p.g.c) | ((p.g.i + p.g.j + p.g.k) & 1) << 1 | p.g.l << 2;
      };
      break;
    case QuotientId::PModPP:
      for (int key = 0; key < 12; ++key)
        reps.push_back({GElem::make(key & 1, 0, 0, 0, 0, 0, key >> 2), (key >> 1 & 1) == 1});
      locate = [](const PElem& p) {
        return parity(p.g.a + p.g.b + p.g.c) | (p.e ? 2 : 0) | p.g.l << 2;
      };
      break;
  }
  return FiniteGroupTable(std::move(reps), std::move(locate));
}

}  // namespace

const FiniteGroupTable& materialize(QuotientId q) {
  static const FiniteGroupTable gg2 = build(QuotientId::GModGG2);
  static const FiniteGroupTable gg = build(QuotientId::GModGG);
  static const FiniteGroupTable pm2 = build(QuotientId::PModM2);
  static const FiniteGroupTable pp = build(QuotientId::PModPP);
  switch (q) {
    case QuotientId::GModGG2: return gg2;
    case QuotientId::GModGG: return gg;
    case QuotientId::PModM2: return pm2;
    case QuotientId::PModPP: return pp;
  }
  throw std::invalid_argument("unknown quotient");
}

std::string f2vec_label(F2Vec v) {
  static const char names[] = "XYZABC";
  std::string out;
  for (int b = 0; b < kSDim; ++b)
    if (v >> b & 1) {
      if (!out.empty()) out += ' ';
      out += names[b];
    }
  return out.empty() ? "1" : out;
}

GElem lift(F2Vec v) {
  return GElem::make(v & 1, v >> 1 & 1, v >> 2 & 1, v >> 3 & 1, v >> 4 & 1, v >> 5 & 1, 0);
}

F2Vec s_image(const GElem& g) {
  if (g.l != 0) throw std::invalid_argument("s_image: element outside U: " + to_string(g));
  return static_cast<F2Vec>(key_mod_m2(g));
}

namespace {

int pivot(F2Vec v) { return __builtin_ctz(v); }

}  // namespace

F2Subspace F2Subspace::span(const std::vector<F2Vec>& vectors) {
  F2Subspace s;
  for (F2Vec v : vectors) {
    v &= 0x3f;
    for (F2Vec r : s.rows_)
      if (v >> pivot(r) & 1) v ^= r;
    if (!v) continue;
    const int p = pivot(v);
    for (auto& r : s.rows_)
      if (r >> p & 1) r ^= v;
    s.rows_.push_back(v);
  }
  std::sort(s.rows_.begin(), s.rows_.end(), [](F2Vec a, F2Vec b) { return pivot(a) < pivot(b); });
  return s;
}

bool F2Subspace::contains(F2Vec v) const {
  for (F2Vec r : rows_)
    if (v >> pivot(r) & 1) v ^= r;
  return v == 0;
}

std::vector<F2Vec> F2Subspace::elements() const {
  std::vector<F2Vec> out;
  for (unsigned mask = 0; mask < (1u << rows_.size()); ++mask) {
    F2Vec v = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (mask >> r & 1) v ^= rows_[r];
    out.push_back(v);
  }
  return out;
}

std::string to_string(const F2Subspace& s) {
  std::string out;
  for (F2Vec r : s.rows()) {
    if (!out.empty()) out += ' ';
    for (int b = 0; b < kSDim; ++b) out += (r >> b & 1) ? '1' : '0';
  }
  return out.empty() ? "0" : out;
}

F2Subspace parse_f2subspace(std::string_view text) {
  std::vector<F2Vec> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text.substr(pos) == "0") break;
    if (pos + kSDim > text.size()) throw std::invalid_argument("subspace row too short");
    F2Vec v = 0;
    for (int b = 0; b < kSDim; ++b) {
      const char ch = text[pos + b];
      if (ch != '0' && ch != '1') throw std::invalid_argument("subspace rows are bit strings");
      if (ch == '1') v |= static_cast<F2Vec>(1u << b);
    }
    rows.push_back(v);
    pos += kSDim;
  }
  F2Subspace s = F2Subspace::span(rows);
  if (static_cast<std::size_t>(s.dim()) != rows.size() || to_string(s) != std::string(text))
    throw std::invalid_argument("subspace text is not in reduced row echelon form");
  return s;
}

std::vector<F2Subspace> enumerate_3subspaces() {
  std::vector<F2Subspace> out;
  for (int p0 = 0; p0 < kSDim; ++p0)
    for (int p1 = p0 + 1; p1 < kSDim; ++p1)
      for (int p2 = p1 + 1; p2 < kSDim; ++p2) {
        const int pivots[3] = {p0, p1, p2};
        const unsigned pivot_mask = 1u << p0 | 1u << p1 | 1u << p2;
        // Free columns of each row: above its pivot and not a pivot column.
        std::vector<int> free[3];
        int total = 0;
        for (int r = 0; r < 3; ++r) {
          for (int c = pivots[r] + 1; c < kSDim; ++c)
            if (!(pivot_mask >> c & 1)) free[r].push_back(c);
          total += static_cast<int>(free[r].size());
        }
        for (unsigned choice = 0; choice < (1u << total); ++choice) {
          std::vector<F2Vec> rows;
          int bit = 0;
          for (int r = 0; r < 3; ++r) {
            F2Vec v = static_cast<F2Vec>(1u << pivots[r]);
            for (int c : free[r])
              if (choice >> bit++ & 1) v |= static_cast<F2Vec>(1u << c);
            rows.push_back(v);
          }
          out.push_back(F2Subspace::span(rows));
        }
      }
  return out;
}

std::optional<IntVec3> m2_coords(const GElem& g) {
  if (g.i || g.j || g.k || g.l || is_odd(g.a) || is_odd(g.b) || is_odd(g.c)) return std::nullopt;
  return IntVec3{g.a / 2, g.b / 2, g.c / 2};
}

namespace {

GElem from_m2(const IntVec3& v) { return GElem::make(2 * v[0], 2 * v[1], 2 * v[2], 0, 0, 0, 0); }

IntVec3 must_m2(const GElem& g) {
  auto v = m2_coords(g);
  if (!v) throw std::logic_error("commutator outside M^2: " + to_string(g));
  return *v;
}

}  // namespace

Lattice3 commutator_lattice(const std::vector<GElem>& gens) {
  std::vector<GElem> all = gens;
  for (const IntVec3& e : {IntVec3{1, 0, 0}, IntVec3{0, 1, 0}, IntVec3{0, 0, 1}}) all.push_back(from_m2(e));
  Lattice3 lat;
  for (std::size_t s = 0; s < all.size(); ++s)
    for (std::size_t t = s + 1; t < all.size(); ++t) lat.add(must_m2(gcomm(all[s], all[t])));
  // Conjugation by a generator is unimodular on M^2, so closing under the
  // forward maps gives the normal closure.
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<IntVec3> basis = lat.basis();
    for (const auto& b : basis)
      for (const auto& s : all)
        if (lat.add(must_m2(gconj(from_m2(b), s)))) grew = true;
  }
  return lat;
}

}  // namespace mennicke
