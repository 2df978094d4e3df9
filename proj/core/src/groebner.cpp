#include "toric/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/error.hpp"

namespace toric {

int grevlex_compare(const ExpVec& a, const ExpVec& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

struct GrevlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_compare(a, b) > 0; }
};

using Work = std::map<ExpVec, Rat, GrevlexGreater>;

struct Elem {
  std::vector<std::pair<ExpVec, Rat>> terms;  // grevlex descending, monic
  ExpVec lm;
  std::uint32_t sugar;
};

struct Pair {
  std::size_t i, j;
  ExpVec lcm;
  std::uint32_t sugar;
};

Work to_work(const SparsePoly& p) {
  Work w;
  for (const auto& [e, c] : p.terms()) w.emplace(e, c);
  return w;
}

void add_multiple(Work& w, const Elem& g, const ExpVec& shift, const Rat& c) {
  for (const auto& [e, a] : g.terms) {
    auto [it, inserted] = w.try_emplace(e + shift, 0);
    it->second -= c * a;
    if (sgn(it->second) == 0) w.erase(it);
  }
}

// Full reduction of w by the active elements.
Work reduce(Work w, const std::vector<Elem>& g, const std::vector<bool>& active) {
  Work out;
  while (!w.empty()) {
    auto it = w.begin();
    const Elem* div = nullptr;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (active[k] && g[k].lm.divides(it->first)) {
        div = &g[k];
        break;
      }
    }
    if (div == nullptr) {
      out.insert(out.end(), *it);
      w.erase(it);
      continue;
    }
    const ExpVec shift = it->first - div->lm;
    const Rat c = it->second;
    add_multiple(w, *div, shift, c);
  }
  return out;
}

Elem make_elem(const Work& w, std::uint32_t sugar) {
  Elem e;
  const Rat inv = Rat(1) / w.begin()->second;
  for (const auto& [m, c] : w) e.terms.emplace_back(m, c * inv);
  e.lm = e.terms.front().first;
  e.sugar = sugar;
  return e;
}

}  // namespace

GroebnerBasis::GroebnerBasis(const std::vector<SparsePoly>& generators) {
  if (generators.empty()) throw InputError("no generators");
  n_ = generators.front().ambient();
  std::vector<Elem> g;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Elem e) {
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const ExpVec l = ExpVec::lcm(g[i].lm, e.lm);
      const std::uint32_t s =
          std::max(g[i].sugar + l.degree() - g[i].lm.degree(), e.sugar + l.degree() - e.lm.degree());
      pairs.push_back({i, k, l, s});
      pending.insert({i, k});
    }
    g.push_back(std::move(e));
    active.push_back(true);
  };

  for (const auto& p : generators) {
    if (p.ambient() != n_) throw InputError("generators in different rings");
    if (p.is_zero()) continue;
    Work w = reduce(to_work(p), g, active);
    if (!w.empty()) add(make_elem(w, p.total_degree()));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return grevlex_compare(a.lcm, b.lcm) < 0;
    });
    const Pair pr = *best;
    *best = pairs.back();
    pairs.pop_back();
    pending.erase({pr.i, pr.j});

    // Product criterion: coprime leading monomials reduce to zero.
    if (ExpVec::lcm(g[pr.i].lm, g[pr.j].lm).degree() == g[pr.i].lm.degree() + g[pr.j].lm.degree()) {
      continue;
    }
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !g[k].lm.divides(pr.lcm)) continue;
      const auto ik = std::minmax(pr.i, k);
      const auto jk = std::minmax(pr.j, k);
      chain = !pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second});
    }
    if (chain) continue;

    Work s;
    add_multiple(s, g[pr.i], pr.lcm - g[pr.i].lm, Rat(-1));
    add_multiple(s, g[pr.j], pr.lcm - g[pr.j].lm, Rat(1));
    s = reduce(std::move(s), g, active);
    if (s.empty()) continue;
    add(make_elem(s, pr.sugar));
    if (g.back().lm.is_zero()) break;  // the unit ideal
  }

  // Minimal basis, then interreduce.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !g[k].lm.divides(g[i].lm)) continue;
      redundant = g[k].lm != g[i].lm || k < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Elem> minimal;
  for (auto i : keep) minimal.push_back(g[i]);
  std::vector<bool> on(minimal.size(), true);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    on[i] = false;
    Work tail;
    for (std::size_t t = 1; t < minimal[i].terms.size(); ++t) tail.insert(minimal[i].terms[t]);
    tail = reduce(std::move(tail), minimal, on);
    on[i] = true;
    Elem e;
    e.lm = minimal[i].lm;
    e.sugar = minimal[i].sugar;
    e.terms.emplace_back(e.lm, Rat(1));
    for (auto& t : tail) e.terms.push_back(t);
    minimal[i] = std::move(e);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Elem& a, const Elem& b) { return grevlex_compare(a.lm, b.lm) < 0; });
  for (auto& e : minimal) {
    lead_.push_back(e.lm);
    basis_.push_back(SparsePoly::from_terms(n_, std::move(e.terms)));
  }
}

bool GroebnerBasis::is_unit() const { return lead_.size() == 1 && lead_.front().is_zero(); }

bool GroebnerBasis::zero_dimensional() const {
  for (std::size_t i = 0; i < n_; ++i) {
    bool found = false;
    for (const auto& m : lead_) {
      if (m.degree() > 0 && m[i] == m.degree()) found = true;
    }
    if (!found && !is_unit()) return false;
  }
  return true;
}

std::vector<ExpVec> GroebnerBasis::standard_monomials() const {
  if (!zero_dimensional()) throw MathError("ideal is not zero-dimensional");
  if (is_unit()) return {};
  auto standard = [&](const ExpVec& m) {
    for (const auto& l : lead_) {
      if (l.divides(m)) return false;
    }
    return true;
  };
  // The standard monomials form an order ideal: grow it from 1.
  std::set<ExpVec> seen{ExpVec(n_)};
  std::vector<ExpVec> frontier{ExpVec(n_)};
  while (!frontier.empty()) {
    std::vector<ExpVec> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 0; i < n_; ++i) {
        ExpVec c = m + ExpVec::unit(n_, i);
        if (seen.count(c) || !standard(c)) continue;
        seen.insert(c);
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ExpVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

SparsePoly GroebnerBasis::normal_form(const SparsePoly& p) const {
  std::vector<Elem> g;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Elem e;
    Work w = to_work(basis_[i]);
    e.terms.assign(w.begin(), w.end());
    e.lm = lead_[i];
    e.sugar = 0;
    g.push_back(std::move(e));
  }
  const std::vector<bool> active(g.size(), true);
  Work r = reduce(to_work(p), g, active);
  return SparsePoly::from_terms(p.ambient(), {r.begin(), r.end()});
}

}  // namespace toric
