#include "interpcat/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace interpcat {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::S: return "S";
    case Flavor::GL: return "GL";
    case Flavor::O: return "O";
    case Flavor::Sp: return "Sp";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "S") return Flavor::S;
  if (s == "GL") return Flavor::GL;
  if (s == "O") return Flavor::O;
  if (s == "Sp") return Flavor::Sp;
  throw DomainError("unknown flavor '" + s + "' (expected S, GL, O or Sp)");
}

// ---------------------------------------------------------------- signatures

ObjectSignature ObjectSignature::make(Flavor f, int m) {
  if (f == Flavor::GL) throw DomainError("GL objects need a colour word or (r,s)");
  if (m < 0) throw DomainError("object size must be nonnegative");
  ObjectSignature s;
  s.flavor = f;
  s.size = m;
  return s;
}

ObjectSignature ObjectSignature::gl(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("GL object counts must be nonnegative");
  return gl_word(std::string(static_cast<size_t>(r), '1') + std::string(static_cast<size_t>(s), '0'));
}

ObjectSignature ObjectSignature::gl_word(const std::string& colors) {
  for (char c : colors)
    if (c != '0' && c != '1') throw DomainError("GL colour words use only '0' and '1'");
  ObjectSignature s;
  s.flavor = Flavor::GL;
  s.size = static_cast<int>(colors.size());
  s.colors = colors;
  return s;
}

int ObjectSignature::blacks() const {
  return static_cast<int>(std::count(colors.begin(), colors.end(), '1'));
}
int ObjectSignature::whites() const {
  return static_cast<int>(std::count(colors.begin(), colors.end(), '0'));
}

ObjectSignature ObjectSignature::dual() const {
  if (flavor != Flavor::GL) return *this;
  std::string d(colors.rbegin(), colors.rend());
  for (char& c : d) c = c == '1' ? '0' : '1';
  return gl_word(d);
}

std::string ObjectSignature::to_string() const {
  if (flavor == Flavor::GL) return "GL[" + colors + "]";
  return flavor_name(flavor) + "[" + std::to_string(size) + "]";
}

ObjectSignature tensor(const ObjectSignature& a, const ObjectSignature& b) {
  if (a.flavor != b.flavor) throw DomainError("tensor of objects of different flavors");
  if (a.flavor == Flavor::GL) return ObjectSignature::gl_word(a.colors + b.colors);
  return ObjectSignature::make(a.flavor, a.size + b.size);
}

// ---------------------------------------------------------------- helpers

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

template <class Labels>
std::vector<std::uint8_t> to_rgs(const Labels& raw) {
  std::vector<std::uint8_t> out(raw.size());
  std::vector<std::pair<int, int>> seen;  // raw label -> canonical label
  int next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const int r = static_cast<int>(raw[i]);
    int c = -1;
    for (const auto& [k, v] : seen)
      if (k == r) {
        c = v;
        break;
      }
    if (c < 0) {
      c = next++;
      seen.emplace_back(r, c);
    }
    if (c > 255) throw DomainError("diagram too large");
    out[i] = static_cast<std::uint8_t>(c);
  }
  return out;
}

int endpoint_from_signed(int l, int m, int v) {
  if (v > 0 && v <= l) return v - 1;
  if (v < 0 && -v <= m) return l + (-v) - 1;
  throw DomainError("endpoint " + std::to_string(v) + " out of range for a diagram " +
                    std::to_string(l) + " -> " + std::to_string(m));
}

Diagram from_blocks(Flavor f, int l, int m, const std::vector<std::vector<int>>& raw_blocks) {
  if (l < 0 || m < 0) throw DomainError("negative endpoint count");
  if (l + m > 255) throw DomainError("diagram too large");
  std::vector<int> raw(static_cast<size_t>(l + m), -1);
  for (size_t b = 0; b < raw_blocks.size(); ++b) {
    if (raw_blocks[b].empty()) throw DomainError("empty block");
    for (int v : raw_blocks[b]) {
      int e = endpoint_from_signed(l, m, v);
      if (raw[static_cast<size_t>(e)] >= 0)
        throw DomainError("endpoint " + std::to_string(v) + " appears in two blocks");
      raw[static_cast<size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < l + m; ++e)
    if (raw[static_cast<size_t>(e)] < 0) {
      int v = e < l ? e + 1 : -(e - l + 1);
      throw DomainError("endpoint " + std::to_string(v) + " is not covered");
    }
  Diagram d;
  d.flavor = f;
  d.top = l;
  d.bottom = m;
  d.label = to_rgs(raw);
  return d;
}

void check_composable(const Diagram& p, const Diagram& q) {
  if (p.flavor != q.flavor)
    throw DomainError("cannot compose diagrams of flavors " + flavor_name(p.flavor) + " and " +
                      flavor_name(q.flavor));
  if (q.bottom != p.top || q.bottom_colors != p.top_colors)
    throw DomainError("signature mismatch: " + q.target().to_string() + " vs " +
                      p.source().to_string());
}

}  // namespace

// ---------------------------------------------------------------- Diagram

int Diagram::block_count() const {
  int b = 0;
  for (auto x : label) b = std::max(b, static_cast<int>(x) + 1);
  return b;
}

std::vector<std::vector<int>> Diagram::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(block_count()));
  for (int e = 0; e < size(); ++e) out[label[static_cast<size_t>(e)]].push_back(e);
  return out;
}

std::vector<std::vector<int>> Diagram::signed_blocks() const {
  auto bl = blocks();
  for (auto& b : bl)
    for (int& e : b) e = e < top ? e + 1 : -(e - top + 1);
  return bl;
}

ObjectSignature Diagram::source() const {
  return flavor == Flavor::GL ? ObjectSignature::gl_word(top_colors)
                              : ObjectSignature::make(flavor, top);
}

ObjectSignature Diagram::target() const {
  return flavor == Flavor::GL ? ObjectSignature::gl_word(bottom_colors)
                              : ObjectSignature::make(flavor, bottom);
}

char Diagram::color(int endpoint) const {
  return endpoint < top ? top_colors[static_cast<size_t>(endpoint)]
                        : bottom_colors[static_cast<size_t>(endpoint - top)];
}

std::string Diagram::to_string() const {
  std::string s = flavor_name(flavor) + "(";
  if (flavor == Flavor::GL) s += top_colors + "->" + bottom_colors + " ";
  bool first_block = true;
  for (const auto& b : signed_blocks()) {
    s += first_block ? "" : ",";
    first_block = false;
    s += "[";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += b[i] > 0 ? std::to_string(b[i]) : std::to_string(-b[i]) + "'";
    }
    s += "]";
  }
  return s + ")";
}

// ---------------------------------------------------------------- construction

Diagram canonicalize_partition(int l, int m, const std::vector<std::vector<int>>& raw_blocks) {
  return from_blocks(Flavor::S, l, m, raw_blocks);
}

Diagram make_brauer(Flavor f, int l, int m, const std::vector<std::vector<int>>& pairs) {
  if (!is_brauer_flavor(f)) throw DomainError("make_brauer needs flavor O or Sp");
  Diagram d = from_blocks(f, l, m, pairs);
  validate(d);
  return d;
}

Diagram make_walled(const std::string& top_colors, const std::string& bottom_colors,
                    const std::vector<std::vector<int>>& pairs) {
  ObjectSignature::gl_word(top_colors);
  ObjectSignature::gl_word(bottom_colors);
  Diagram d = from_blocks(Flavor::GL, static_cast<int>(top_colors.size()),
                          static_cast<int>(bottom_colors.size()), pairs);
  d.top_colors = top_colors;
  d.bottom_colors = bottom_colors;
  validate(d);
  return d;
}

Diagram make_diagram(Flavor f, int l, int m, const std::vector<std::vector<int>>& blocks,
                     const std::string& top_colors, const std::string& bottom_colors) {
  switch (f) {
    case Flavor::S: return canonicalize_partition(l, m, blocks);
    case Flavor::O:
    case Flavor::Sp: return make_brauer(f, l, m, blocks);
    case Flavor::GL:
      if (static_cast<int>(top_colors.size()) != l || static_cast<int>(bottom_colors.size()) != m)
        throw DomainError("GL diagram colour words must match the endpoint counts");
      return make_walled(top_colors, bottom_colors, blocks);
  }
  throw DomainError("unknown flavor");
}

void validate(const Diagram& d) {
  if (static_cast<int>(d.label.size()) != d.size()) throw DomainError("diagram label length mismatch");
  if (d.flavor == Flavor::S) return;
  for (const auto& b : d.blocks()) {
    if (b.size() != 2)
      throw DomainError(flavor_name(d.flavor) + " diagrams need blocks of size 2: " + d.to_string());
    if (d.flavor != Flavor::GL) continue;
    const bool same_row = (b[0] < d.top) == (b[1] < d.top);
    const bool same_color = d.color(b[0]) == d.color(b[1]);
    if (same_row == same_color)
      throw DomainError(same_row ? "same-row GL edge must join opposite colours: " + d.to_string()
                                 : "cross-row GL edge must join equal colours: " + d.to_string());
  }
}

// ---------------------------------------------------------------- composition

Composite compose(const Diagram& p, const Diagram& q) {
  check_composable(p, q);
  const int k = q.top, l = q.bottom, m = p.bottom;
  const int n = k + l + m;
  UnionFind uf(n);
  // Q endpoint e sits at node e; P endpoint e sits at node k + e.
  {
    std::vector<int> first(static_cast<size_t>(q.size()), -1);
    for (int e = 0; e < q.size(); ++e) {
      int& f = first[q.label[static_cast<size_t>(e)]];
      if (f < 0)
        f = e;
      else
        uf.unite(f, e);
    }
  }
  {
    std::vector<int> first(static_cast<size_t>(p.size()), -1);
    for (int e = 0; e < p.size(); ++e) {
      int& f = first[p.label[static_cast<size_t>(e)]];
      if (f < 0)
        f = k + e;
      else
        uf.unite(f, k + e);
    }
  }
  Composite out;
  Diagram& d = out.diagram;
  d.flavor = p.flavor;
  d.top = k;
  d.bottom = m;
  d.top_colors = q.top_colors;
  d.bottom_colors = p.bottom_colors;
  d.label.resize(static_cast<size_t>(k + m));
  std::vector<int> canon(static_cast<size_t>(n), -1);
  int next = 0;
  auto assign = [&](int node, size_t slot) {
    int r = uf.find(node);
    int& c = canon[static_cast<size_t>(r)];
    if (c < 0) c = next++;
    d.label[slot] = static_cast<std::uint8_t>(c);
  };
  for (int i = 0; i < k; ++i) assign(i, static_cast<size_t>(i));
  for (int j = 0; j < m; ++j) assign(k + l + j, static_cast<size_t>(k + j));
  for (int j = 0; j < l; ++j) {
    int r = uf.find(k + j);
    if (canon[static_cast<size_t>(r)] < 0) {
      canon[static_cast<size_t>(r)] = next++;
      ++out.middle;
    }
  }
  return out;
}

Composite compose_partition(const Diagram& p, const Diagram& q) {
  if (p.flavor != Flavor::S || q.flavor != Flavor::S)
    throw DomainError("compose_partition expects S diagrams");
  return compose(p, q);
}

Composite compose_brauer(const Diagram& p, const Diagram& q) {
  if (!is_brauer_flavor(p.flavor) || !is_brauer_flavor(q.flavor))
    throw DomainError("compose_brauer expects O or Sp diagrams");
  return compose(p, q);
}

Composite compose_walled(const Diagram& p, const Diagram& q) {
  if (p.flavor != Flavor::GL || q.flavor != Flavor::GL)
    throw DomainError("compose_walled expects GL diagrams");
  return compose(p, q);
}

// ---------------------------------------------------------------- structure

Diagram tensor_diagram(const Diagram& p, const Diagram& q) {
  if (p.flavor != q.flavor)
    throw DomainError("tensor of diagrams of flavors " + flavor_name(p.flavor) + " and " +
                      flavor_name(q.flavor));
  const int pb = p.block_count();
  std::vector<int> raw;
  raw.reserve(static_cast<size_t>(p.size() + q.size()));
  for (int i = 0; i < p.top; ++i) raw.push_back(p.label[static_cast<size_t>(i)]);
  for (int i = 0; i < q.top; ++i) raw.push_back(pb + q.label[static_cast<size_t>(i)]);
  for (int j = 0; j < p.bottom; ++j) raw.push_back(p.label[static_cast<size_t>(p.top + j)]);
  for (int j = 0; j < q.bottom; ++j) raw.push_back(pb + q.label[static_cast<size_t>(q.top + j)]);
  Diagram d;
  d.flavor = p.flavor;
  d.top = p.top + q.top;
  d.bottom = p.bottom + q.bottom;
  d.label = to_rgs(raw);
  d.top_colors = p.top_colors + q.top_colors;
  d.bottom_colors = p.bottom_colors + q.bottom_colors;
  return d;
}

Diagram flip(const Diagram& p) {
  std::vector<int> raw;
  raw.reserve(static_cast<size_t>(p.size()));
  for (int j = 0; j < p.bottom; ++j) raw.push_back(p.label[static_cast<size_t>(p.top + j)]);
  for (int i = 0; i < p.top; ++i) raw.push_back(p.label[static_cast<size_t>(i)]);
  Diagram d;
  d.flavor = p.flavor;
  d.top = p.bottom;
  d.bottom = p.top;
  d.label = to_rgs(raw);
  d.top_colors = p.bottom_colors;
  d.bottom_colors = p.top_colors;
  return d;
}

bool refines(const Diagram& p, const Diagram& p2) {
  if (p.top != p2.top || p.bottom != p2.bottom || p.flavor != p2.flavor)
    throw DomainError("refines: endpoint sets differ");
  // Every block of p lies in one block of p2: labels of p2 are a function of labels of p.
  std::vector<int> image(static_cast<size_t>(p.block_count()), -1);
  for (int e = 0; e < p.size(); ++e) {
    int& img = image[p.label[static_cast<size_t>(e)]];
    const int v = p2.label[static_cast<size_t>(e)];
    if (img < 0)
      img = v;
    else if (img != v)
      return false;
  }
  return true;
}

std::vector<Diagram> coarsenings(const Diagram& p) {
  const int b = p.block_count();
  std::vector<Diagram> out;
  std::vector<int> rgs(static_cast<size_t>(b), 0);
  // Reverse lexicographic order of set partitions of the blocks: p itself first.
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == b) {
      Diagram d = p;
      std::vector<int> raw(static_cast<size_t>(p.size()));
      for (int e = 0; e < p.size(); ++e) raw[static_cast<size_t>(e)] = rgs[p.label[static_cast<size_t>(e)]];
      d.label = to_rgs(raw);
      out.push_back(std::move(d));
      return;
    }
    for (int v = maxv + 1; v >= 0; --v) {
      rgs[static_cast<size_t>(i)] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (b == 0) return {p};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

int closure_components(const Diagram& p) {
  if (p.top != p.bottom)
    throw DomainError("closure_components needs equal source and target counts");
  UnionFind uf(p.size());
  std::vector<int> first(static_cast<size_t>(p.size()), -1);
  for (int e = 0; e < p.size(); ++e) {
    int& f = first[p.label[static_cast<size_t>(e)]];
    if (f < 0)
      f = e;
    else
      uf.unite(f, e);
  }
  for (int i = 0; i < p.top; ++i) uf.unite(i, p.top + i);
  int comps = 0;
  for (int e = 0; e < p.size(); ++e)
    if (uf.find(e) == e) ++comps;
  return comps;
}

Diagram identity_diagram(const ObjectSignature& sig) {
  std::vector<int> perm(static_cast<size_t>(sig.size));
  std::iota(perm.begin(), perm.end(), 0);
  return permutation_diagram(sig, perm);
}

Diagram permutation_diagram(const ObjectSignature& source, const std::vector<int>& perm) {
  const int n = source.size;
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation length mismatch");
  Diagram d;
  d.flavor = source.flavor;
  d.top = n;
  d.bottom = n;
  std::vector<int> raw(static_cast<size_t>(2 * n), -1);
  std::string bottom_colors(source.colors.size(), '?');
  for (int i = 0; i < n; ++i) {
    const int j = perm[static_cast<size_t>(i)];
    if (j < 0 || j >= n || raw[static_cast<size_t>(n + j)] >= 0) throw DomainError("not a permutation");
    raw[static_cast<size_t>(i)] = i;
    raw[static_cast<size_t>(n + j)] = i;
    if (source.flavor == Flavor::GL) bottom_colors[static_cast<size_t>(j)] = source.colors[static_cast<size_t>(i)];
  }
  d.label = to_rgs(raw);
  d.top_colors = source.colors;
  d.bottom_colors = bottom_colors;
  return d;
}

// ---------------------------------------------------------------- bases

namespace {

void enumerate_rgs(int n, Flavor f, int l, int m, std::vector<Diagram>& out) {
  std::vector<std::uint8_t> rgs(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      Diagram d;
      d.flavor = f;
      d.top = l;
      d.bottom = m;
      d.label = rgs;
      out.push_back(std::move(d));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) {
    Diagram d;
    d.flavor = f;
    d.top = l;
    d.bottom = m;
    out.push_back(d);
    return;
  }
  rec(1, 0);
}

void enumerate_matchings(Flavor f, const ObjectSignature& source, const ObjectSignature& target,
                         std::vector<Diagram>& out) {
  const int l = source.size, m = target.size, n = l + m;
  if (n % 2) return;
  auto color = [&](int e) {
    return e < l ? source.colors[static_cast<size_t>(e)] : target.colors[static_cast<size_t>(e - l)];
  };
  auto allowed = [&](int a, int b) {
    if (f != Flavor::GL) return true;
    const bool same_row = (a < l) == (b < l);
    return same_row != (color(a) == color(b));
  };
  std::vector<int> partner(static_cast<size_t>(n), -1);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int e = 0; e < n; ++e)
      if (partner[static_cast<size_t>(e)] < 0) {
        a = e;
        break;
      }
    if (a < 0) {
      std::vector<int> raw(static_cast<size_t>(n));
      for (int e = 0; e < n; ++e) raw[static_cast<size_t>(e)] = std::min(e, partner[static_cast<size_t>(e)]);
      Diagram d;
      d.flavor = f;
      d.top = l;
      d.bottom = m;
      d.label = to_rgs(raw);
      d.top_colors = source.colors;
      d.bottom_colors = target.colors;
      out.push_back(std::move(d));
      return;
    }
    for (int b = a + 1; b < n; ++b) {
      if (partner[static_cast<size_t>(b)] >= 0 || !allowed(a, b)) continue;
      partner[static_cast<size_t>(a)] = b;
      partner[static_cast<size_t>(b)] = a;
      rec();
      partner[static_cast<size_t>(a)] = -1;
      partner[static_cast<size_t>(b)] = -1;
    }
  };
  rec();
}

}  // namespace

std::vector<Diagram> enumerate_basis(Flavor f, const ObjectSignature& source,
                                     const ObjectSignature& target) {
  if (source.flavor != f || target.flavor != f)
    throw DomainError("enumerate_basis: signature flavor mismatch");
  std::vector<Diagram> out;
  if (f == Flavor::S) {
    enumerate_rgs(source.size + target.size, f, source.size, target.size, out);
  } else if (f == Flavor::GL) {
    if (source.blacks() + target.whites() != target.blacks() + source.whites()) return out;
    enumerate_matchings(f, source, target, out);
  } else {
    enumerate_matchings(f, source, target, out);
  }
  return out;
}

Integer bell_number(int n) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

Integer double_factorial(int n) {
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace interpcat
