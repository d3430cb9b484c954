#include "kleinian/windows.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinian::weyl {
namespace {

using E = CrossedElement;

EchelonSpace::Row to_row(const E& x) {
  EchelonSpace::Row r;
  for (const auto& [key, c] : x.terms()) r.emplace(key, c);
  return r;
}

E from_row(int n, const EchelonSpace::Row& r) {
  E x(n);
  for (const auto& [key, c] : r) x.add_term(key, c);
  return x;
}

// Lazily extended powers x^0, x^1, ...
class PowerCache {
 public:
  explicit PowerCache(E base) : base_(std::move(base)) { powers_.push_back(E::one(base_.n())); }
  const E& get(long p) {
    while (static_cast<long>(powers_.size()) <= p) powers_.push_back(powers_.back() * base_);
    return powers_[p];
  }

 private:
  E base_;
  std::vector<E> powers_;
};

std::map<long, EchelonSpace> spaces_of(const GradedSubspaceBasis& b) {
  std::map<long, EchelonSpace> out;
  for (const auto& [deg, elems] : b.pieces) {
    auto& space = out.try_emplace(deg, b.n).first->second;
    for (const auto& x : elems) space.insert(x);
  }
  return out;
}

GradedSubspaceBasis finish(int n, std::string context, Window window, std::map<long, EchelonSpace>& spaces) {
  GradedSubspaceBasis out;
  out.n = n;
  out.context = std::move(context);
  out.window = window;
  for (long m = window.min_degree; m <= window.max_degree; ++m) {
    auto it = spaces.find(m);
    out.pieces[m] = it == spaces.end() ? std::vector<E>{} : it->second.basis(window.max_order);
  }
  return out;
}

// idempotent * (y^n)^alpha (y d_k)^beta (d_k^n)^gamma, order beta + n gamma <= N
std::map<long, EchelonSpace> monomial_spaces(const ParamVector& k, Window window, long idempotent,
                                             std::vector<std::pair<long, E>>* listing = nullptr) {
  const int n = k.n();
  const E d = d_element(k);
  PowerCache yn(E::y_power(n, n));
  PowerCache yd(E::y_power(n, 1) * d);
  PowerCache dn(power(d, n));
  const E ei = E::idempotent(n, idempotent);
  std::map<long, EchelonSpace> spaces;
  for (long gamma = 0; n * gamma <= window.max_order; ++gamma) {
    const long alpha_lo = std::max(0L, ceil_div(window.min_degree, n) + gamma);
    const long alpha_hi = floor_div(window.max_degree, n) + gamma;
    for (long beta = 0; beta + n * gamma <= window.max_order; ++beta) {
      const E tail = yd.get(beta) * dn.get(gamma);
      for (long alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
        E x = ei * yn.get(alpha) * tail;
        const long deg = n * (alpha - gamma);
        spaces.try_emplace(deg, n).first->second.insert(x);
        if (listing) listing->emplace_back(deg, std::move(x));
      }
    }
  }
  return spaces;
}

}  // namespace

// ---------------------------------------------------------------------------
// EchelonSpace

EchelonSpace::Row EchelonSpace::reduce(Row v) const {
  while (!v.empty()) {
    auto top = std::prev(v.end());
    auto it = rows_.find(top->first);
    if (it == rows_.end()) break;
    const Rational factor = top->second;
    for (const auto& [key, c] : it->second) {
      auto [slot, inserted] = v.try_emplace(key, -factor * c);
      if (!inserted) {
        slot->second -= factor * c;
        if (slot->second == 0) v.erase(slot);
      }
    }
  }
  return v;
}

bool EchelonSpace::insert(const CrossedElement& x) {
  Row r = reduce(to_row(x));
  if (r.empty()) return false;
  const TermKey pivot = std::prev(r.end())->first;
  const Rational inv = 1 / std::prev(r.end())->second;
  for (auto& [key, c] : r) c *= inv;
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool EchelonSpace::contains(const CrossedElement& x) const { return reduce(to_row(x)).empty(); }

std::size_t EchelonSpace::rank_up_to(long max_order) const {
  std::size_t count = 0;
  for (const auto& [pivot, row] : rows_)
    if (pivot.b <= max_order) ++count;
  return count;
}

std::vector<CrossedElement> EchelonSpace::basis(long max_order) const {
  std::vector<CrossedElement> out;
  for (const auto& [pivot, row] : rows_)
    if (pivot.b <= max_order) out.push_back(from_row(n_, row));
  return out;
}

// ---------------------------------------------------------------------------
// Windows

std::size_t GradedSubspaceBasis::dimension(long degree) const {
  auto it = pieces.find(degree);
  return it == pieces.end() ? 0 : it->second.size();
}

std::map<long, std::size_t> GradedSubspaceBasis::dimensions() const {
  std::map<long, std::size_t> out;
  for (const auto& [deg, elems] : pieces) out[deg] = elems.size();
  return out;
}

bool same_span(const GradedSubspaceBasis& x, const GradedSubspaceBasis& y) {
  auto sx = spaces_of(x);
  auto sy = spaces_of(y);
  std::set<long> degrees;
  for (const auto& [d, v] : x.pieces) degrees.insert(d);
  for (const auto& [d, v] : y.pieces) degrees.insert(d);
  for (long d : degrees) {
    if (x.dimension(d) != y.dimension(d)) return false;
    if (x.dimension(d) == 0) continue;
    for (const auto& v : x.pieces.at(d))
      if (!sy.at(d).contains(v)) return false;
  }
  return true;
}

GradedSubspaceBasis spherical_window(const ParamVector& k, Window window) {
  auto spaces = monomial_spaces(k, window, 0);
  return finish(k.n(), "U" + k.to_string() + " from e[y^n, yd, d^n]", window, spaces);
}

GradedSubspaceBasis spherical_pbw_window(const ParamVector& k, Window window) {
  const int n = k.n();
  PowerCache d(d_element(k));
  std::map<long, EchelonSpace> spaces;
  for (long m = window.min_degree; m <= window.max_degree; ++m) {
    if (mod(m, n) != 0) continue;
    for (long b = std::max(0L, -m); b <= window.max_order; ++b) {
      const long a = m + b;
      spaces.try_emplace(m, n).first->second.insert(E::term(n, a, 0, mod(-a, n)) * d.get(b));
    }
  }
  return finish(n, "U" + k.to_string() + " from e y^a d^b", window, spaces);
}

bool closed_under_products(const GradedSubspaceBasis& basis, CrossedElement* witness) {
  auto spaces = spaces_of(basis);
  const Window& w = basis.window;
  for (const auto& [d1, xs] : basis.pieces) {
    for (const auto& [d2, ys] : basis.pieces) {
      const long d = d1 + d2;
      if (d < w.min_degree || d > w.max_degree) continue;
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          if (x.order() + y.order() > w.max_order) continue;
          E prod = x * y;
          if (prod.is_zero()) continue;
          auto it = spaces.find(d);
          if (it == spaces.end() || !it->second.contains(prod)) {
            if (witness) *witness = std::move(prod);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bimodules

BimoduleHandle::BimoduleHandle(ParamVector source, std::vector<int> route)
    : source_(std::move(source)), route_(std::move(route)) {
  for (int p : route_)
    if (p < 1 || p > source_.n() - 1)
      throw std::invalid_argument("route step p = " + std::to_string(p) + " out of range 1.." +
                                  std::to_string(source_.n() - 1));
}

std::vector<ParamVector> BimoduleHandle::chain() const {
  std::vector<ParamVector> out{source_};
  for (int p : route_) out.push_back(out.back().plus_w(p));
  return out;
}

std::vector<std::pair<CrossedElement, CrossedElement>> BimoduleHandle::generators() const {
  const int n = source_.n();
  const auto params = chain();
  const E e = E::idempotent(n, 0);
  std::vector<std::pair<E, E>> out;
  for (std::size_t t = 0; t < route_.size(); ++t) {
    const int p = route_[t];
    out.emplace_back(e * power(d_element(params[t + 1]), p) * E::y_power(n, p), e * E::y_power(n, n));
  }
  return out;
}

std::string BimoduleHandle::describe() const {
  std::string s = "B k=" + source_.to_string() + " route=[";
  for (std::size_t t = 0; t < route_.size(); ++t) s += (t ? "," : "") + std::to_string(route_[t]);
  return s + "]";
}

BimoduleHandle basic_bimodule(const ParamVector& k, int p) {
  if (p < 1 || p > k.n() - 1)
    throw std::invalid_argument("step p = " + std::to_string(p) + " out of range 1.." + std::to_string(k.n() - 1));
  return BimoduleHandle(k, {p});
}

std::vector<int> route_for(const std::vector<long>& b) {
  std::vector<int> route;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 0) throw std::invalid_argument("route_for: b must have nonnegative entries");
    for (long c = 0; c < b[j]; ++c) route.push_back(static_cast<int>(j + 1));
  }
  return route;
}

std::vector<CrossedElement> generator_words(const BimoduleHandle& handle) {
  std::vector<E> words{E::idempotent(handle.source().n(), 0)};
  for (const auto& [g1, g2] : handle.generators()) {
    std::vector<E> next;
    for (const auto& w : words) {
      next.push_back(g1 * w);
      next.push_back(g2 * w);
    }
    words = std::move(next);
  }
  return words;
}

GradedSubspaceBasis basic_bimodule_pbw_window(const ParamVector& k, int p, Window window) {
  const int n = k.n();
  const ParamVector k1 = basic_bimodule(k, p).target();
  PowerCache d(d_element(k1));
  const E yp = E::y_power(n, p);
  std::map<long, EchelonSpace> spaces;
  for (long m = window.min_degree; m <= window.max_degree; ++m) {
    // degree a - b + p = m
    for (long b = 0; b <= window.max_order; ++b) {
      const long a = m + b - p;
      if (a < 0 || mod(b - a - p, n) != 0) continue;
      spaces.try_emplace(m, n).first->second.insert(E::term(n, a, 0, mod(-a, n)) * d.get(b) * yp);
    }
  }
  return finish(n, "B_" + std::to_string(p) + k.to_string() + " from e y^a d^b y^p", window, spaces);
}

GradedSubspaceBasis compose_bimodules(const BimoduleHandle& handle, Window window, long slack) {
  const int n = handle.source().n();
  const ParamVector target = handle.target();
  const E d = d_element(target);
  const long left_order = window.max_order + slack;
  std::map<long, EchelonSpace> spaces;
  for (const E& w : generator_words(handle)) {
    const auto wdeg = w.degree();
    if (!wdeg) throw std::logic_error("compose_bimodules: inhomogeneous generator word");
    // d^b * w for b = 0..left_order
    std::vector<E> dw{w};
    for (long b = 1; b <= left_order; ++b) dw.push_back(d * dw.back());
    for (long m = window.min_degree; m <= window.max_degree; ++m) {
      const long udeg = m - *wdeg;
      if (mod(udeg, n) != 0) continue;
      for (long b = std::max(0L, -udeg); b <= left_order; ++b) {
        const long a = udeg + b;
        spaces.try_emplace(m, n).first->second.insert(E::term(n, a, 0, mod(-a, n)) * dw[b]);
      }
    }
  }
  return finish(n, handle.describe(), window, spaces);
}

StableWindow compose_bimodules_stable(const BimoduleHandle& handle, Window window, long slack) {
  StableWindow out;
  out.basis = compose_bimodules(handle, window, slack);
  out.slack = slack;
  const auto wider = compose_bimodules(handle, window, slack + handle.source().n());
  out.stable = same_span(out.basis, wider);
  return out;
}

bool y_power_shift_holds(const ParamVector& k, int p, Window window) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  std::vector<std::pair<long, E>> left_list;
  std::vector<std::pair<long, E>> right_list;
  monomial_spaces(k, window, 0, &left_list);
  monomial_spaces(k1, window, p, &right_list);
  const E yp = E::y_power(n, p);
  GradedSubspaceBasis left{n, "y^p eUe", window, {}};
  GradedSubspaceBasis right{n, "e_p U' e_p y^p", window, {}};
  for (auto& [deg, x] : left_list) left.pieces[deg + p].push_back(yp * x);
  for (auto& [deg, x] : right_list) right.pieces[deg + p].push_back(x * yp);
  // reduce both to bases so that dimensions are meaningful
  auto reduce_all = [n](GradedSubspaceBasis& g) {
    for (auto& [deg, elems] : g.pieces) {
      EchelonSpace s(n);
      for (const auto& x : elems) s.insert(x);
      elems = s.basis(g.window.max_order);
    }
  };
  reduce_all(left);
  reduce_all(right);
  return same_span(left, right);
}

// ---------------------------------------------------------------------------
// Associated graded

std::map<GrMonomial, Rational> gr_symbol(const CrossedElement& x) {
  if (x.is_zero()) throw std::invalid_argument("gr_symbol: zero element has no symbol");
  const long top = x.order();
  std::map<GrMonomial, Rational> out;
  for (const auto& [key, c] : x.terms())
    if (key.b == top) out.emplace(GrMonomial{key.a, key.b, key.i}, c);
  return out;
}

GrSpace gr_space(const GradedSubspaceBasis& basis) {
  GrSpace out;
  for (const auto& [deg, elems] : basis.pieces) {
    EchelonSpace space(basis.n);
    for (const auto& x : elems) space.insert(x);
    std::set<TermKey> pivots;
    for (const auto& [pivot, row] : space.rows()) pivots.insert(pivot);
    for (const auto& [pivot, row] : space.rows()) {
      out.monomials.insert({pivot.a, pivot.b, pivot.i});
      for (const auto& [key, c] : row)
        if (key.b == pivot.b && !pivots.count(key)) out.monomial_basis = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient modulo d^n

QuotientDims quotient_dims_mod_dn(const BimoduleHandle& handle, long min_degree, long max_degree, long order_bound,
                                  long slack) {
  const int n = handle.source().n();
  const Window wide{min_degree, max_degree + n, order_bound + n};
  const GradedSubspaceBasis b = compose_bimodules(handle, wide, slack);
  const E dn = power(d_element(handle.source()), n);

  auto dims_at = [&](long level) {
    std::map<long, long> dims;
    for (long m = min_degree; m <= max_degree; ++m) {
      EchelonSpace image(n);
      for (const auto& x : b.pieces.at(m + n))
        if (x.order() <= level - n) image.insert(x * dn);
      EchelonSpace total = image;
      for (const auto& x : b.pieces.at(m))
        if (x.order() <= level) total.insert(x);
      dims[m] = static_cast<long>(total.rank()) - static_cast<long>(image.rank());
    }
    return dims;
  };
  QuotientDims out;
  out.dims = dims_at(order_bound);
  out.dims_next = dims_at(order_bound + n);
  out.stable = out.dims == out.dims_next;
  return out;
}

}  // namespace kleinian::weyl
