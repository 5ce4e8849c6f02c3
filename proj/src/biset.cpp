#include "bisetcover/biset.hpp"

#include <algorithm>
#include <sstream>

#include "bisetcover/errors.hpp"

namespace bisetcover {

Rational parse_rational(std::string_view text) {
  Rational value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw UsageError("not a rational number: '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational harmonic(long n) {
  Rational sum = 0;
  for (long i = 1; i <= n; ++i) sum += Rational(1, i);
  return sum;
}

int floor_log2(long x) {
  int r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

std::string NodeSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each([&](int v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

bool lex_less(NodeSet a, NodeSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

GroundSet::GroundSet(int count) : n(count) {
  if (count < 1 || count > kMaxNodes) {
    throw UsageError("ground set size must be in [1, 64], got " + std::to_string(count));
  }
}

Biset::Biset(int n, NodeSet inner, NodeSet outer) : n_(n), inner_(inner), outer_(outer) {
  if (n < 1 || n > kMaxNodes) throw UsageError("ground set size must be in [1, 64]");
  if (!outer.subset_of(NodeSet::full(n))) throw UsageError("biset references a node >= n");
  if (!inner.subset_of(outer)) {
    throw UsageError("inner part " + inner.to_string() + " not contained in outer part " +
                     outer.to_string());
  }
}

std::string Biset::to_string() const { return "(" + inner_.to_string() + "," + outer_.to_string() + ")"; }

bool presentation_less(const Biset& a, const Biset& b) {
  if (a.inner() != b.inner()) return lex_less(a.inner(), b.inner());
  return lex_less(a.outer(), b.outer());
}

namespace {

void require_same_ground(const Biset& x, const Biset& y) {
  if (x.n() != y.n()) throw UsageError("bisets over different ground sets");
}

}  // namespace

bool intersects(const Biset& x, const Biset& y) {
  require_same_ground(x, y);
  return x.inner().intersects(y.inner());
}

bool crosses(const Biset& x, const Biset& y) {
  require_same_ground(x, y);
  return x.inner().intersects(y.inner()) && (x.outer() | y.outer()) != NodeSet::full(x.n());
}

Biset meet(const Biset& x, const Biset& y) {
  require_same_ground(x, y);
  return Biset(x.n(), x.inner() & y.inner(), x.outer() & y.outer());
}

Biset join(const Biset& x, const Biset& y) {
  require_same_ground(x, y);
  return Biset(x.n(), x.inner() | y.inner(), x.outer() | y.outer());
}

Biset co_biset(const Biset& x) {
  return Biset(x.n(), x.outer().complement(x.n()), x.inner().complement(x.n()));
}

bool contains(const Biset& y, const Biset& x) {
  require_same_ground(x, y);
  return x.inner().subset_of(y.inner()) && x.outer().subset_of(y.outer());
}

bool properly_contains(const Biset& y, const Biset& x) { return contains(y, x) && x != y; }

bool edge_covers(Arc e, const Biset& x) {
  return x.inner().contains(e.tail) && !x.outer().contains(e.head) && e.head < x.n();
}

CoverIndex::CoverIndex(int n, std::span<const Arc> arcs) : heads_(static_cast<std::size_t>(n)) {
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw UsageError("arc endpoint out of range");
    }
    heads_[a.tail].insert(a.head);
  }
}

bool CoverIndex::covers(const Biset& x) const {
  const NodeSet outside = x.exterior();
  bool hit = false;
  x.inner().for_each([&](int t) { hit = hit || heads_[t].intersects(outside); });
  return hit;
}

std::vector<Biset> minimal_elements(std::vector<Biset> bisets) {
  std::sort(bisets.begin(), bisets.end(), BisetLess{});
  bisets.erase(std::unique(bisets.begin(), bisets.end()), bisets.end());
  std::vector<Biset> out;
  for (const Biset& b : bisets) {
    const bool dominated = std::any_of(bisets.begin(), bisets.end(),
                                       [&](const Biset& o) { return properly_contains(b, o); });
    if (!dominated) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), presentation_less);
  return out;
}

}  // namespace bisetcover
