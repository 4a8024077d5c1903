#include "gb_kernel.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace pdme::gbk {

OrdPoly to_ord(const Poly& p, const MonomialOrder& ord) {
  OrdPoly out;
  out.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) out.t.push_back({m, c});
  std::sort(out.t.begin(), out.t.end(), [&](const Term& a, const Term& b) {
    return cmp_monomials(a.m, b.m, ord) > 0;
  });
  return out;
}

Poly to_poly(const OrdPoly& p, const RingPtr& ring) {
  Poly out = Poly::zero(ring);
  for (const auto& t : p.t) out += Poly::monomial(ring, t.m, t.c);
  return out;
}

OrdPoly scale_shift(const OrdPoly& g, const Scalar& c, const Monomial& shift) {
  OrdPoly out;
  out.t.reserve(g.t.size());
  for (const auto& t : g.t) out.t.push_back({mono_mul(t.m, shift), t.c * c});
  return out;
}

OrdPoly add(const OrdPoly& a, const OrdPoly& b, const MonomialOrder& ord) {
  OrdPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = cmp_monomials(a.t[i].m, b.t[j].m, ord);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back(b.t[j++]);
    } else {
      Scalar s = a.t[i].c + b.t[j].c;
      if (!s.is_zero()) out.t.push_back({a.t[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
  return out;
}

OrdPoly sub_scaled(const OrdPoly& p, const Scalar& c, const Monomial& shift,
                   const OrdPoly& g, const MonomialOrder& ord) {
  return add(p, scale_shift(g, -c, shift), ord);
}

OrdPoly spoly(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord) {
  const Monomial l = mono_lcm(f.lead().m, g.lead().m);
  OrdPoly a = scale_shift(f, f.lead().c.inverse(), mono_div(l, f.lead().m));
  return sub_scaled(a, g.lead().c.inverse(), mono_div(l, g.lead().m), g, ord);
}

OrdPoly normal_form(OrdPoly f, const std::vector<OrdPoly>& G,
                    const MonomialOrder& ord, StepBudget& budget,
                    std::vector<OrdPoly>* quotients) {
  if (quotients) quotients->assign(G.size(), OrdPoly{});
  OrdPoly rem;
  while (!f.empty()) {
    const Term& lt = f.lead();
    std::size_t found = G.size();
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (!G[k].empty() && mono_divides(G[k].lead().m, lt.m)) {
        found = k;
        break;
      }
    }
    if (found == G.size()) {
      rem.t.push_back(lt);
      f.t.erase(f.t.begin());
      continue;
    }
    budget.charge();
    Scalar coef = lt.c / G[found].lead().c;
    Monomial shift = mono_div(lt.m, G[found].lead().m);
    if (quotients) (*quotients)[found].t.push_back({shift, coef});
    f = sub_scaled(f, coef, shift, G[found], ord);
  }
  return rem;
}

Scalar content_normalize(OrdPoly& p) {
  if (p.empty()) return Scalar(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.denominator().get_mpz_t());
  }
  Scalar factor{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if (p.lead().c.sign() < 0) factor = -factor;
  if (!factor.is_one())
    for (auto& t : p.t) t.c *= factor;
  return factor;
}

namespace {

struct PairRec {
  std::size_t i, j; // i < j, indices into the working basis
  Monomial lcm;
};

// Normal strategy: smallest lcm under the order, ties by (i, j).
std::size_t select_pair(const std::vector<PairRec>& pairs, const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    int c = cmp_monomials(pairs[k].lcm, pairs[best].lcm, ord);
    if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) <
                                std::pair(pairs[best].i, pairs[best].j)))
      best = k;
  }
  return best;
}

// Gebauer-Moeller update: adds h to the basis, builds the new pair list.
void gm_update(std::vector<OrdPoly>& G, std::vector<PairRec>& pairs, OrdPoly h) {
  const std::size_t t = G.size();
  const Monomial& lmh = h.lead().m;

  std::vector<PairRec> cand;
  cand.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    if (!G[i].empty()) cand.push_back({i, t, mono_lcm(G[i].lead().m, lmh)});

  // Keep a candidate if its leading monomials are coprime (it is then
  // dropped below, taking divisible candidates down with it), or if no
  // other surviving candidate's lcm divides its lcm.
  std::vector<PairRec> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool coprime = mono_coprime(G[cand[a].i].lead().m, lmh);
    bool keep = coprime;
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
        if (mono_divides(cand[b].lcm, cand[a].lcm)) keep = false;
      for (const auto& d : kept) {
        if (mono_divides(d.lcm, cand[a].lcm)) {
          keep = false;
          break;
        }
      }
    }
    if (keep) kept.push_back(cand[a]);
  }
  std::vector<PairRec> fresh;
  for (auto& p : kept)
    if (!mono_coprime(G[p.i].lead().m, lmh)) fresh.push_back(std::move(p));

  // Prune old pairs whose lcm is a proper multiple of lm(h).
  std::vector<PairRec> surviving;
  surviving.reserve(pairs.size() + fresh.size());
  for (auto& p : pairs) {
    if (!mono_divides(lmh, p.lcm) ||
        mono_lcm(G[p.i].lead().m, lmh) == p.lcm ||
        mono_lcm(G[p.j].lead().m, lmh) == p.lcm)
      surviving.push_back(std::move(p));
  }
  for (auto& p : fresh) surviving.push_back(std::move(p));
  pairs = std::move(surviving);
  G.push_back(std::move(h));
}

void sort_by_leading(std::vector<OrdPoly>& G, const MonomialOrder& ord) {
  std::sort(G.begin(), G.end(), [&](const OrdPoly& a, const OrdPoly& b) {
    return cmp_monomials(a.lead().m, b.lead().m, ord) < 0;
  });
}

// Minimal basis: no leading monomial divides another's.
void minimalize(std::vector<OrdPoly>& G, const MonomialOrder& ord) {
  sort_by_leading(G, ord);
  std::vector<OrdPoly> out;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : out)
      if (mono_divides(h.lead().m, g.lead().m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  G = std::move(out);
}

} // namespace

std::vector<OrdPoly> reduced_groebner(const std::vector<OrdPoly>& gens,
                                      const MonomialOrder& ord, StepBudget& budget) {
  std::vector<OrdPoly> G;
  std::vector<PairRec> pairs;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    OrdPoly r = normal_form(g, G, ord, budget);
    if (r.empty()) continue;
    content_normalize(r);
    gm_update(G, pairs, std::move(r));
  }

  while (!pairs.empty()) {
    budget.charge();
    std::size_t k = select_pair(pairs, ord);
    PairRec p = std::move(pairs[k]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    OrdPoly s = spoly(G[p.i], G[p.j], ord);
    OrdPoly r = normal_form(std::move(s), G, ord, budget);
    if (r.empty()) continue;
    content_normalize(r);
    gm_update(G, pairs, std::move(r));
  }

  minimalize(G, ord);
  // Tail reduction against the other elements gives the unique reduced basis.
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<OrdPoly> others;
    others.reserve(G.size() - 1);
    for (std::size_t j = 0; j < G.size(); ++j)
      if (j != i) others.push_back(G[j]);
    G[i] = normal_form(std::move(G[i]), others, ord, budget);
    content_normalize(G[i]);
  }
  sort_by_leading(G, ord);
  return G;
}

TrackedBasis reduced_groebner_tracked(const std::vector<OrdPoly>& row,
                                      const MonomialOrder& ord, StepBudget& budget) {
  const std::size_t r = row.size();
  std::vector<OrdPoly> G;
  std::vector<std::vector<OrdPoly>> cof;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  // Exponent arity for cofactor constants.
  std::size_t arity = 0;
  for (const auto& f : row)
    if (!f.empty()) arity = f.lead().m.size();

  auto unit_vector = [&](std::size_t i) {
    std::vector<OrdPoly> e(r);
    e[i].t.push_back({Monomial(arity, 0), Scalar(1)});
    return e;
  };

  auto push_element = [&](OrdPoly p, std::vector<OrdPoly> pc) {
    Scalar factor = content_normalize(p);
    if (!factor.is_one())
      for (auto& q : pc)
        for (auto& t : q.t) t.c *= factor;
    std::size_t idx = G.size();
    for (std::size_t i = 0; i < idx; ++i) pairs.emplace_back(i, idx);
    G.push_back(std::move(p));
    cof.push_back(std::move(pc));
  };

  auto combine = [&](const std::vector<OrdPoly>& quotients) {
    // sum_k quotients[k] * cof[k], one coordinate at a time
    std::vector<OrdPoly> acc(r);
    for (std::size_t k = 0; k < quotients.size(); ++k) {
      for (const auto& t : quotients[k].t)
        for (std::size_t i = 0; i < r; ++i)
          if (!cof[k][i].empty())
            acc[i] = add(acc[i], scale_shift(cof[k][i], t.c, t.m), ord);
    }
    return acc;
  };

  for (std::size_t i = 0; i < r; ++i) {
    if (row[i].empty()) continue;
    std::vector<OrdPoly> q;
    OrdPoly red = normal_form(row[i], G, ord, budget, &q);
    if (red.empty()) continue;
    std::vector<OrdPoly> pc = unit_vector(i);
    std::vector<OrdPoly> sub = combine(q);
    for (std::size_t k = 0; k < r; ++k)
      pc[k] = add(pc[k], scale_shift(sub[k], Scalar(-1), Monomial(arity, 0)), ord);
    push_element(std::move(red), std::move(pc));
  }

  while (!pairs.empty()) {
    budget.charge();
    std::size_t best = 0;
    Monomial best_lcm = mono_lcm(G[pairs[0].first].lead().m, G[pairs[0].second].lead().m);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = mono_lcm(G[pairs[k].first].lead().m, G[pairs[k].second].lead().m);
      if (cmp_monomials(l, best_lcm, ord) < 0) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (mono_coprime(G[i].lead().m, G[j].lead().m)) continue;

    const Monomial l = mono_lcm(G[i].lead().m, G[j].lead().m);
    const Scalar ci = G[i].lead().c.inverse();
    const Scalar cj = G[j].lead().c.inverse();
    const Monomial si = mono_div(l, G[i].lead().m);
    const Monomial sj = mono_div(l, G[j].lead().m);
    OrdPoly s = sub_scaled(scale_shift(G[i], ci, si), cj, sj, G[j], ord);

    std::vector<OrdPoly> q;
    OrdPoly red = normal_form(std::move(s), G, ord, budget, &q);
    if (red.empty()) continue;
    std::vector<OrdPoly> pc(r);
    for (std::size_t k = 0; k < r; ++k) {
      pc[k] = add(scale_shift(cof[i][k], ci, si),
                  scale_shift(cof[j][k], -cj, sj), ord);
    }
    std::vector<OrdPoly> sub = combine(q);
    for (std::size_t k = 0; k < r; ++k)
      pc[k] = add(pc[k], scale_shift(sub[k], Scalar(-1), Monomial(arity, 0)), ord);
    push_element(std::move(red), std::move(pc));
  }

  // Minimalize, keeping cofactors aligned.
  std::vector<std::size_t> keep_order(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) keep_order[i] = i;
  std::sort(keep_order.begin(), keep_order.end(), [&](std::size_t a, std::size_t b) {
    return cmp_monomials(G[a].lead().m, G[b].lead().m, ord) < 0;
  });
  std::vector<OrdPoly> mg;
  std::vector<std::vector<OrdPoly>> mc;
  for (std::size_t idx : keep_order) {
    bool redundant = false;
    for (const auto& h : mg)
      if (mono_divides(h.lead().m, G[idx].lead().m)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      mg.push_back(std::move(G[idx]));
      mc.push_back(std::move(cof[idx]));
    }
  }

  // Tail-reduce with cofactor updates.
  for (std::size_t i = 0; i < mg.size(); ++i) {
    std::vector<OrdPoly> others;
    std::vector<std::size_t> omap;
    for (std::size_t j = 0; j < mg.size(); ++j)
      if (j != i) {
        others.push_back(mg[j]);
        omap.push_back(j);
      }
    std::vector<OrdPoly> q;
    OrdPoly red = normal_form(mg[i], others, ord, budget, &q);
    for (std::size_t k = 0; k < others.size(); ++k) {
      for (const auto& t : q[k].t)
        for (std::size_t c = 0; c < r; ++c)
          if (!mc[omap[k]][c].empty())
            mc[i][c] = add(mc[i][c], scale_shift(mc[omap[k]][c], -t.c, t.m), ord);
    }
    mg[i] = std::move(red);
    Scalar factor = content_normalize(mg[i]);
    if (!factor.is_one())
      for (auto& q2 : mc[i])
        for (auto& t : q2.t) t.c *= factor;
  }

  return TrackedBasis{std::move(mg), std::move(mc)};
}

} // namespace pdme::gbk
