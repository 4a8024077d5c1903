#include "pdme/syzygy.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "gb_kernel.hpp"

namespace pdme {

namespace {

// Scales a relation vector to integer-primitive form, first nonzero
// coordinate with positive leading coefficient.
void normalize_vector(std::vector<Poly>& v, const MonomialOrder& ord) {
  mpz_class num_gcd = 0, den_lcm = 1;
  bool any = false;
  for (const auto& p : v)
    for (const auto& [m, c] : p.terms()) {
      any = true;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
  if (!any) return;
  Scalar factor{mpq_class(den_lcm) / mpq_class(num_gcd)};
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    gbk::OrdPoly o = gbk::to_ord(p, ord);
    if ((o.lead().c * factor).sign() < 0) factor = -factor;
    break;
  }
  if (!factor.is_one())
    for (auto& p : v) p = p.scaled(factor);
}

} // namespace

SyzygyBasis syzygies(const std::vector<Poly>& row, StepBudget* budget) {
  if (row.empty()) throw ValidationError("syzygies of an empty row");
  const RingPtr& ring = row.front().ring();
  for (const auto& p : row) require_same_ring(p.ring(), ring, "syzygies");

  StepBudget local;
  StepBudget& b = budget ? *budget : local;
  const MonomialOrder ord = MonomialOrder::grevlex();
  const std::size_t r = row.size();

  // Clear Laurent denominators; Syz(row) and Syz(cleared row) match up to
  // the per-coordinate clearing units, restored at the end.
  std::vector<Poly> cleared(r, Poly());
  std::vector<Poly> units(r, Poly());
  for (std::size_t i = 0; i < r; ++i) {
    auto [cf, u] = clear_denominators(row[i]);
    cleared[i] = std::move(cf);
    units[i] = std::move(u);
  }

  std::vector<std::vector<Poly>> gens;

  // Zero entries contribute unit-vector relations and drop out of the rest.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < r; ++i) {
    if (cleared[i].is_zero()) {
      std::vector<Poly> e(r, Poly::zero(ring));
      e[i] = Poly::constant(ring, Scalar(1));
      gens.push_back(std::move(e));
    } else {
      live.push_back(i);
    }
  }

  if (!live.empty()) {
    std::vector<gbk::OrdPoly> sub;
    sub.reserve(live.size());
    for (auto i : live) sub.push_back(gbk::to_ord(cleared[i], ord));

    gbk::TrackedBasis tracked = gbk::reduced_groebner_tracked(sub, ord, b);
    const auto& G = tracked.basis;
    const auto& A = tracked.cofactors; // G[j] = sum_i A[j][i] * sub[i]
    const std::size_t t = G.size();
    const std::size_t m = live.size();

    // Q: sub[i] = sum_j Q[i][j] * G[j]
    std::vector<std::vector<gbk::OrdPoly>> Q(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<gbk::OrdPoly> q;
      gbk::OrdPoly rem = gbk::normal_form(sub[i], G, ord, b, &q);
      if (!rem.empty())
        throw Error("internal: row element failed to reduce against its own basis");
      Q[i] = std::move(q);
    }

    auto add_into = [&](std::vector<gbk::OrdPoly>& acc, const gbk::OrdPoly& coef,
                        const std::vector<gbk::OrdPoly>& vec, int sign) {
      for (const auto& term : coef.t)
        for (std::size_t i = 0; i < m; ++i)
          if (!vec[i].empty())
            acc[i] = gbk::add(acc[i],
                              gbk::scale_shift(vec[i], sign < 0 ? -term.c : term.c, term.m),
                              ord);
    };

    auto emit = [&](const std::vector<gbk::OrdPoly>& v) {
      std::vector<Poly> full(r, Poly::zero(ring));
      bool nonzero = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (v[i].empty()) continue;
        Poly p = gbk::to_poly(v[i], ring);
        // relation on the cleared row; scale back by the clearing unit
        full[live[i]] = units[live[i]] * p;
        nonzero = true;
      }
      if (nonzero) gens.push_back(std::move(full));
    };

    // Schreyer relations from all S-pairs of the reduced basis.
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        const Monomial l = mono_lcm(G[i].lead().m, G[j].lead().m);
        const Scalar ci = G[i].lead().c.inverse();
        const Scalar cj = G[j].lead().c.inverse();
        const Monomial si = mono_div(l, G[i].lead().m);
        const Monomial sj = mono_div(l, G[j].lead().m);
        gbk::OrdPoly s =
            gbk::sub_scaled(gbk::scale_shift(G[i], ci, si), cj, sj, G[j], ord);
        std::vector<gbk::OrdPoly> q;
        gbk::OrdPoly rem = gbk::normal_form(std::move(s), G, ord, b, &q);
        if (!rem.empty())
          throw Error("internal: S-polynomial of a Groebner basis did not reduce to zero");
        // sigma = ci x^si e_i - cj x^sj e_j - q, mapped through A
        std::vector<gbk::OrdPoly> rel(m);
        add_into(rel, gbk::OrdPoly{{{si, ci}}}, A[i], +1);
        add_into(rel, gbk::OrdPoly{{{sj, cj}}}, A[j], -1);
        for (std::size_t k = 0; k < t; ++k)
          if (!q[k].empty()) add_into(rel, q[k], A[k], -1);
        emit(rel);
      }
    }

    // Rows of (Id - Q*A).
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<gbk::OrdPoly> rel(m);
      rel[i].t.push_back({Monomial(ring->arity(), 0), Scalar(1)});
      for (std::size_t j = 0; j < t; ++j)
        if (!Q[i][j].empty()) add_into(rel, Q[i][j], A[j], -1);
      emit(rel);
    }
  }

  // Cleanup: normalize, dedupe, deterministic order.
  for (auto& v : gens) normalize_vector(v, ord);
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& ta = a[i].terms();
      const auto& tb = b[i].terms();
      if (ta != tb) {
        return std::lexicographical_compare(
            ta.begin(), ta.end(), tb.begin(), tb.end(), [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return x.second < y.second;
            });
      }
    }
    return false;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  SyzygyBasis out;
  out.generators = std::move(gens);
  return out;
}

} // namespace pdme
