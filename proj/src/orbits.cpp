#include "kcycle/orbits.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kcycle {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::GLpq: return "glpq";
    case Kind::Sp: return "sp";
    case Kind::SO: return "so";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "glpq") return Kind::GLpq;
  if (text == "sp") return Kind::Sp;
  if (text == "so") return Kind::SO;
  return std::nullopt;
}

void Setup::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("k must satisfy 1 <= k <= n-1");
  switch (kind) {
    case Kind::GLpq:
      if (p < 1 || q < 1) throw std::invalid_argument("p and q must be at least 1");
      if (p + q != n) throw std::invalid_argument("p + q must equal n");
      break;
    case Kind::Sp:
      if (n % 2 != 0) throw std::invalid_argument("Sp(n) requires n even");
      break;
    case Kind::SO:
      break;
  }
}

bool Setup::valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string describe(const Setup& setup) {
  std::string out(to_string(setup.kind));
  out += "(n=" + std::to_string(setup.n) + ",k=" + std::to_string(setup.k);
  if (setup.kind == Kind::GLpq)
    out += ",p=" + std::to_string(setup.p) + ",q=" + std::to_string(setup.q);
  return out + ")";
}

std::string OrbitId::label() const {
  switch (form_) {
    case Form::Pair:
      return "q(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    case Form::Radical:
      return "rad" + std::to_string(a_);
    case Form::Split:
      return "rad" + std::to_string(a_) + (b_ > 0 ? "+" : "-");
  }
  return "?";
}

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<OrbitId> OrbitId::parse(std::string_view text) {
  if (text.starts_with("q(") && text.ends_with(")")) {
    const auto inner = text.substr(2, text.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto s = parse_int(inner.substr(0, comma));
    auto t = parse_int(inner.substr(comma + 1));
    if (!s || !t || *s < 0 || *t < 0) return std::nullopt;
    return pair(*s, *t);
  }
  if (text.starts_with("rad")) {
    auto rest = text.substr(3);
    if (rest.ends_with("+") || rest.ends_with("-")) {
      const int sign = rest.back() == '+' ? 1 : -1;
      auto k = parse_int(rest.substr(0, rest.size() - 1));
      if (!k || *k < 1) return std::nullopt;
      return split(*k, sign);
    }
    auto i = parse_int(rest);
    if (!i || *i < 0) return std::nullopt;
    return radical(*i);
  }
  return std::nullopt;
}

Setup dual_setup(const Setup& setup) {
  Setup out = setup;
  out.k = setup.n - setup.k;
  return out;
}

OrbitId dual_orbit(const Setup& setup, const OrbitId& orbit) {
  if (setup.kind != Kind::GLpq) return orbit;
  // dim(Ann(U) ∩ Ann(C^q)) = n - dim(U + C^q) = p - k + t
  return OrbitId::pair(setup.p - setup.k + orbit.t(),
                       setup.q - setup.k + orbit.s());
}

Setup swapped_setup(const Setup& setup) {
  Setup out = setup;
  std::swap(out.p, out.q);
  return out;
}

OrbitId swapped_orbit(const OrbitId& orbit) {
  return OrbitId::pair(orbit.t(), orbit.s());
}

NormalizedSetup normalize(const Setup& setup) {
  setup.validate();
  NormalizedSetup out{setup, setup};
  if (setup.kind == Kind::GLpq) {
    if (setup.k > setup.n - setup.k) {
      out.setup = dual_setup(out.setup);
      out.dualized = true;
    }
    if (out.setup.p < out.setup.q) {
      out.setup = swapped_setup(out.setup);
      out.swapped_pq = true;
    }
  } else if (setup.k < setup.n - setup.k) {
    out.setup = dual_setup(out.setup);
    out.dualized = true;
  }
  return out;
}

OrbitId relabel_orbit(const OrbitId& orbit, const NormalizedSetup& norm) {
  require_orbit(norm.original, orbit);
  OrbitId out = orbit;
  if (norm.dualized) out = dual_orbit(norm.original, out);
  if (norm.swapped_pq) out = swapped_orbit(out);
  return out;
}

OrbitId restore_orbit(const OrbitId& orbit, const NormalizedSetup& norm) {
  require_orbit(norm.setup, orbit);
  OrbitId out = orbit;
  if (norm.swapped_pq) out = swapped_orbit(out);
  if (norm.dualized) out = dual_orbit(dual_setup(norm.original), out);
  return out;
}

namespace {

int top_radical(const Setup& setup) { return std::min(setup.k, setup.n - setup.k); }

}  // namespace

bool is_valid_orbit(const Setup& setup, const OrbitId& orbit) {
  if (!setup.valid()) return false;
  const int k = setup.k;
  switch (setup.kind) {
    case Kind::GLpq: {
      if (orbit.form() != OrbitId::Form::Pair) return false;
      const int s = orbit.s(), t = orbit.t();
      // U/(U∩C^p) embeds in C^q and U/(U∩C^q) embeds in C^p.
      return s >= 0 && t >= 0 && s <= setup.p && t <= setup.q && s + t <= k &&
             k - s <= setup.q && k - t <= setup.p;
    }
    case Kind::Sp: {
      if (orbit.form() != OrbitId::Form::Radical) return false;
      const int i = orbit.radical_dim();
      return i >= 0 && i <= top_radical(setup) && (k - i) % 2 == 0;
    }
    case Kind::SO: {
      const int i = orbit.radical_dim();
      if (orbit.form() == OrbitId::Form::Split)
        return setup.has_split() && i == k && (orbit.sign() == 1 || orbit.sign() == -1);
      if (orbit.form() != OrbitId::Form::Radical) return false;
      if (setup.has_split() && i == k) return false;
      return i >= 0 && i <= top_radical(setup);
    }
  }
  return false;
}

void require_orbit(const Setup& setup, const OrbitId& orbit) {
  setup.validate();
  if (!is_valid_orbit(setup, orbit))
    throw std::invalid_argument("orbit " + orbit.label() + " is not valid for " +
                                describe(setup));
}

std::vector<OrbitId> enumerate_orbits(const Setup& setup) {
  setup.validate();
  std::vector<OrbitId> out;
  switch (setup.kind) {
    case Kind::GLpq:
      for (int s = 0; s <= setup.p; ++s)
        for (int t = 0; t <= setup.q; ++t)
          if (is_valid_orbit(setup, OrbitId::pair(s, t))) out.push_back(OrbitId::pair(s, t));
      break;
    case Kind::Sp:
    case Kind::SO:
      for (int i = 0; i <= top_radical(setup); ++i)
        if (is_valid_orbit(setup, OrbitId::radical(i))) out.push_back(OrbitId::radical(i));
      if (setup.has_split()) {
        out.push_back(OrbitId::split(setup.k, 1));
        out.push_back(OrbitId::split(setup.k, -1));
      }
      break;
  }
  return out;
}

bool closure_leq(const Setup& setup, const OrbitId& a, const OrbitId& b) {
  require_orbit(setup, a);
  require_orbit(setup, b);
  if (setup.kind == Kind::GLpq) return a.s() >= b.s() && a.t() >= b.t();
  using F = OrbitId::Form;
  if (b.form() == F::Split) return a == b;
  return a.radical_dim() >= b.radical_dim();
}

std::optional<std::size_t> ClosurePoset::index_of(const OrbitId& orbit) const {
  auto it = std::find(orbits.begin(), orbits.end(), orbit);
  if (it == orbits.end()) return std::nullopt;
  return static_cast<std::size_t>(it - orbits.begin());
}

ClosurePoset closure_poset(const Setup& setup) {
  ClosurePoset poset;
  poset.orbits = enumerate_orbits(setup);
  const auto& o = poset.orbits;
  for (const auto& orbit : o) poset.dimensions.push_back(orbit_dimension(setup, orbit));
  auto less = [&](std::size_t a, std::size_t b) {
    return a != b && closure_leq(setup, o[a], o[b]);
  };
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = 0; b < o.size(); ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < o.size() && covered; ++c)
        if (less(a, c) && less(c, b)) covered = false;
      if (covered) poset.covers.emplace_back(a, b);
    }
  return poset;
}

RationalMatrix bilinear_form(Kind kind, int n) {
  if (kind == Kind::GLpq) throw std::invalid_argument("GLpq preserves no bilinear form");
  if (kind == Kind::Sp && n % 2 != 0) throw std::invalid_argument("skew form needs n even");
  RationalMatrix j = RationalMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const int b = n - 1 - a;
    j(a, b) = (kind == Kind::Sp && a >= n / 2) ? Rational(-1) : Rational(1);
  }
  return j;
}

namespace {

RationalMatrix unit(int n, int a) {
  RationalMatrix e = RationalMatrix::Zero(n, 1);
  e(a, 0) = 1;
  return e;
}

RationalMatrix glpq_frame(const Setup& setup, int s, int t) {
  const int n = setup.n, p = setup.p, k = setup.k;
  const int c = k - s - t;
  RationalMatrix frame(n, n);
  int col = 0;
  auto put = [&](const RationalMatrix& v) { frame.col(col++) = v.col(0); };
  // rows of a conormal matrix: U∩C^p | U∩C^q | mixed
  for (int j = 0; j < s; ++j) put(unit(n, j));
  for (int j = 0; j < t; ++j) put(unit(n, p + j));
  for (int j = 0; j < c; ++j) put(unit(n, s + j) + unit(n, p + t + j));
  // columns: pure C^p/U | overlap | pure C^q/U
  for (int j = s + c; j < p; ++j) put(unit(n, j));
  for (int j = 0; j < c; ++j) put(unit(n, s + j));
  for (int j = p + t + c; j < n; ++j) put(unit(n, j));
  return frame;
}

RationalMatrix radical_frame(const Setup& setup, const OrbitId& orbit) {
  const int n = setup.n, k = setup.k;
  RationalMatrix frame = RationalMatrix::Identity(n, n);
  if (orbit.form() == OrbitId::Form::Split) {
    if (orbit.sign() < 0) frame.col(k - 1).swap(frame.col(k));
    return frame;
  }
  // <e_1..e_k> has radical <e_1..e_top>; pair off radical slots beyond i.
  const int i = orbit.radical_dim();
  const int top = top_radical(setup);
  if (setup.kind == Kind::SO) {
    for (int j = i; j < top; ++j) frame(n - 1 - j, j) = 1;
  } else {
    for (int j = i; j + 1 < top; j += 2) frame(n - 1 - j, j + 1) = 1;
  }
  return frame;
}

}  // namespace

BasePoint base_point(const Setup& setup, const OrbitId& orbit) {
  require_orbit(setup, orbit);
  BasePoint bp{orbit, {}, setup.k};
  bp.frame = setup.kind == Kind::GLpq ? glpq_frame(setup, orbit.s(), orbit.t())
                                      : radical_frame(setup, orbit);
  const RationalMatrix plane = bp.plane_basis();
  if (setup.kind == Kind::GLpq) {
    if (summand_intersections(setup, plane) != std::pair{orbit.s(), orbit.t()})
      throw std::logic_error("base point misses its orbit " + orbit.label());
  } else {
    const auto form = bilinear_form(setup.kind, setup.n);
    if (radical_dim_by_gram(form, plane) != orbit.radical_dim())
      throw std::logic_error("base point misses its orbit " + orbit.label());
    if (orbit.form() == OrbitId::Form::Split && split_family(setup.k, plane) != orbit.sign())
      throw std::logic_error("base point lies in the wrong family");
  }
  return bp;
}

std::vector<RationalMatrix> lie_algebra_basis(const Setup& setup) {
  setup.validate();
  const int n = setup.n;
  std::vector<RationalMatrix> basis;
  if (setup.kind == Kind::GLpq) {
    auto block = [&](int lo, int hi) {
      for (int a = lo; a < hi; ++a)
        for (int b = lo; b < hi; ++b) {
          RationalMatrix e = RationalMatrix::Zero(n, n);
          e(a, b) = 1;
          basis.push_back(std::move(e));
        }
    };
    block(0, setup.p);
    block(setup.p, n);
    return basis;
  }
  // {X : Xᵀ J + J X = 0}
  const auto j = bilinear_form(setup.kind, n);
  RationalMatrix map(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RationalMatrix e = RationalMatrix::Zero(n, n);
      e(a, b) = 1;
      const RationalMatrix image = e.transpose() * j + j * e;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) map(r * n + c, a * n + b) = image(r, c);
    }
  const auto ker = kernel(map);
  for (Index v = 0; v < ker.dim(); ++v) {
    RationalMatrix x(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) x(r, c) = ker.basis()(r * n + c, v);
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix orbit_tangent_vectors(const Setup& setup, const BasePoint& base) {
  const int n = setup.n, k = setup.k, m = n - k;
  const auto algebra = lie_algebra_basis(setup);
  const RationalMatrix inv = inverse(base.frame);
  RationalMatrix out(k * m, static_cast<Index>(algebra.size()));
  for (std::size_t v = 0; v < algebra.size(); ++v) {
    const RationalMatrix y = inv * algebra[v] * base.frame;
    // φ = y(k.., 0..k) : U -> C^n/U ; store φᵀ row-major
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < m; ++c) out(i * m + c, static_cast<Index>(v)) = y(k + c, i);
  }
  return out;
}

int orbit_dimension(const Setup& setup, const OrbitId& orbit) {
  const auto base = base_point(setup, orbit);
  return static_cast<int>(rank(orbit_tangent_vectors(setup, base)));
}

std::pair<int, int> summand_intersections(const Setup& setup,
                                          const RationalMatrix& plane) {
  const int n = setup.n, p = setup.p;
  const auto u = Subspace::span(plane);
  RationalMatrix cp = RationalMatrix::Zero(n, p), cq = RationalMatrix::Zero(n, n - p);
  cp.topRows(p).setIdentity();
  cq.bottomRows(n - p).setIdentity();
  const auto s = intersect(u, Subspace::span(cp)).dim();
  const auto t = intersect(u, Subspace::span(cq)).dim();
  return {static_cast<int>(s), static_cast<int>(t)};
}

int radical_dim_by_gram(const RationalMatrix& form, const RationalMatrix& plane) {
  const RationalMatrix gram = plane.transpose() * form * plane;
  return static_cast<int>(plane.cols() - rank(gram));
}

int radical_dim_by_intersection(const RationalMatrix& form,
                                const RationalMatrix& plane) {
  const auto u = Subspace::span(plane);
  // U^⊥ = {v : Uᵀ J v = 0}
  const RationalMatrix pairing = u.basis().transpose() * form;
  const auto perp = kernel(pairing);
  return static_cast<int>(intersect(u, perp).dim());
}

int split_family(int k, const RationalMatrix& plane) {
  const Index n = plane.rows();
  RationalMatrix ref = RationalMatrix::Zero(n, k);
  ref.topRows(k).setIdentity();
  const auto meet = intersect(Subspace::span(plane), Subspace::span(ref)).dim();
  return (meet - k) % 2 == 0 ? 1 : -1;
}

}  // namespace kcycle
