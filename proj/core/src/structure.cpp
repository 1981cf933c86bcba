#include "kauffman/structure.hpp"

#include <algorithm>
#include <bit>

#include "kauffman/diagrams.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/rewrite.hpp"

namespace kauffman {

  namespace {

    bool is_odd(index_type x) {
      return (x & 1U) != 0;
    }

    bool in_class(DClassElement e, DClass which) {
      return is_odd(e.first) != is_odd(e.second)
             && is_odd(e.first) == (which == DClass::d1);
    }

    void check_degree(degree_type n) {
      if (n < 3) {
        throw DiagramError("degree must be at least 3");
      }
    }

    void check_budget(degree_type n, degree_type bound, char const* what) {
      if (n > bound) {
        throw BudgetExceeded(std::string(what) + " is exhaustive only up to n = "
                             + std::to_string(bound) + ", got n = "
                             + std::to_string(n));
      }
    }

    std::uint64_t bit(std::size_t k) {
      return std::uint64_t(1) << k;
    }

    std::vector<DClassElement> pick(PrincipalFactor const& pf,
                                    std::vector<std::size_t> const& idx) {
      std::vector<DClassElement> out;
      for (auto k : idx) {
        out.push_back(pf.elements[k]);
      }
      return out;
    }

    // Calls f on each m-subset of pool in lexicographic order until f
    // returns true.
    template <typename F>
    bool for_each_subset(std::vector<std::size_t> const& pool, std::size_t m, F&& f) {
      std::vector<std::size_t> pos(m);
      for (std::size_t k = 0; k < m; ++k) {
        pos[k] = k;
      }
      if (m > pool.size()) {
        return false;
      }
      while (true) {
        std::vector<std::size_t> chosen(m);
        for (std::size_t k = 0; k < m; ++k) {
          chosen[k] = pool[pos[k]];
        }
        if (f(chosen)) {
          return true;
        }
        std::size_t k = m;
        while (k > 0 && pos[k - 1] == pool.size() - m + k - 1) {
          --k;
        }
        if (k == 0) {
          return false;
        }
        ++pos[k - 1];
        for (std::size_t t = k; t < m; ++t) {
          pos[t] = pos[t - 1] + 1;
        }
      }
    }

    std::uint64_t mask_of(std::vector<std::size_t> const& idx) {
      std::uint64_t m = 0;
      for (auto k : idx) {
        m |= bit(k);
      }
      return m;
    }

  }  // namespace

  std::string_view to_string(DClass which) noexcept {
    return which == DClass::d1 ? "D1" : "D2";
  }

  Word DClassElement::word() const {
    if (first >= second) {
      return {Letter::block(first, second)};
    }
    Word w;
    for (index_type t = first; t <= second; ++t) {
      w.push_back(Letter::h(t));
    }
    return w;
  }

  std::string DClassElement::render() const {
    return "h[" + std::to_string(first) + "," + std::to_string(second) + "]";
  }

  std::vector<DClassElement> dclass(DClass which, degree_type n) {
    check_degree(n);
    std::vector<DClassElement> out;
    for (index_type i = 1; i + 1 <= n; ++i) {
      for (index_type j = 1; j + 1 <= n; ++j) {
        DClassElement e{i, j};
        if (in_class(e, which)) {
          out.push_back(e);
        }
      }
    }
    return out;
  }

  std::pair<std::vector<DClassElement>, std::vector<DClassElement>>
  dclasses(degree_type n) {
    return {dclass(DClass::d1, n), dclass(DClass::d2, n)};
  }

  std::optional<DClassElement> classify(Jnf const& j, DClass which) {
    if (j.ell != 0 || j.blocks.empty()) {
      return std::nullopt;
    }
    std::optional<DClassElement> e;
    if (j.blocks.size() == 1) {
      e = DClassElement{j.blocks[0].top, j.blocks[0].bottom};
    } else {
      for (std::size_t s = 0; s < j.blocks.size(); ++s) {
        Block b = j.blocks[s];
        if (b.top != b.bottom || (s > 0 && b.bottom != j.blocks[s - 1].bottom + 1)) {
          return std::nullopt;
        }
      }
      e = DClassElement{j.blocks.front().bottom, j.blocks.back().bottom};
    }
    if (!in_class(*e, which)) {
      return std::nullopt;
    }
    return e;
  }

  std::size_t EggboxView::idempotent_count() const {
    std::size_t k = 0;
    for (auto const& row : idempotent) {
      k += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    }
    return k;
  }

  EggboxView eggbox(DClass which, degree_type n) {
    EggboxView v;
    v.which = which;
    v.n     = n;
    for (auto const& e : dclass(which, n)) {
      if (std::find(v.rows.begin(), v.rows.end(), e.first) == v.rows.end()) {
        v.rows.push_back(e.first);
      }
      if (std::find(v.cols.begin(), v.cols.end(), e.second) == v.cols.end()) {
        v.cols.push_back(e.second);
      }
    }
    std::sort(v.cols.begin(), v.cols.end());
    for (auto i : v.rows) {
      std::vector<bool> row;
      for (auto j : v.cols) {
        row.push_back(DClassElement{i, j}.is_idempotent());
      }
      v.idempotent.push_back(std::move(row));
    }
    return v;
  }

  std::string render(EggboxView const& v) {
    std::string out = std::string(to_string(v.which)) + " (n=" + std::to_string(v.n)
                      + "): " + std::to_string(v.rows.size()) + " R-classes x "
                      + std::to_string(v.cols.size()) + " L-classes, "
                      + std::to_string(v.idempotent_count()) + " idempotents\n";
    std::size_t width = 0;
    for (auto i : v.rows) {
      for (auto j : v.cols) {
        width = std::max(width, DClassElement{i, j}.render().size() + 1);
      }
    }
    for (std::size_t r = 0; r < v.rows.size(); ++r) {
      std::string line;
      for (std::size_t c = 0; c < v.cols.size(); ++c) {
        std::string cell = DClassElement{v.rows[r], v.cols[c]}.render();
        if (v.idempotent[r][c]) {
          cell += '*';
        }
        if (c + 1 < v.cols.size()) {
          cell.resize(width + 1, ' ');
        }
        line += cell;
      }
      out += line + "\n";
    }
    return out;
  }

  nlohmann::json to_json(EggboxView const& v) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t r = 0; r < v.rows.size(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < v.cols.size(); ++c) {
        row.push_back({{"element", DClassElement{v.rows[r], v.cols[c]}.render()},
                       {"idempotent", static_cast<bool>(v.idempotent[r][c])}});
      }
      cells.push_back(std::move(row));
    }
    return {{"class", to_string(v.which)},
            {"n", v.n},
            {"rows", v.rows},
            {"cols", v.cols},
            {"idempotents", v.idempotent_count()},
            {"cells", std::move(cells)}};
  }

  std::optional<std::size_t> PrincipalFactor::index_of(DClassElement e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  std::vector<std::size_t> PrincipalFactor::idempotents() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (elements[k].is_idempotent()) {
        out.push_back(k);
      }
    }
    return out;
  }

  bool PrincipalFactor::zero_is_product() const {
    for (std::size_t x = 0; x < zero(); ++x) {
      for (std::size_t y = 0; y < zero(); ++y) {
        if (table[x][y] == zero()) {
          return true;
        }
      }
    }
    return false;
  }

  PrincipalFactor principal_factor(DClass which, degree_type n) {
    PrincipalFactor pf;
    pf.which    = which;
    pf.n        = n;
    pf.elements = dclass(which, n);
    std::size_t const size = pf.elements.size();
    pf.table.assign(size + 1, std::vector<std::size_t>(size + 1, size));
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        Word w = pf.elements[x].word();
        Word v = pf.elements[y].word();
        w.insert(w.end(), v.begin(), v.end());
        if (auto e = classify(normal_form(w), which)) {
          pf.table[x][y] = *pf.index_of(*e);
        }
      }
    }
    return pf;
  }

  std::uint64_t generated(PrincipalFactor const& pf, std::uint64_t mask) {
    if (pf.elements.size() >= 64) {
      throw BudgetExceeded("principal factor too large for bitset search");
    }
    std::vector<std::size_t> gens;
    for (std::size_t k = 0; k < pf.elements.size(); ++k) {
      if (mask & bit(k)) {
        gens.push_back(k);
      }
    }
    std::uint64_t            seen  = mask;
    std::vector<std::size_t> queue = gens;
    while (!queue.empty()) {
      std::size_t x = queue.back();
      queue.pop_back();
      for (auto g : gens) {
        std::size_t y = pf.product(x, g);
        if (y == pf.zero()) {
          seen |= bit(pf.zero());
        } else if (!(seen & bit(y))) {
          seen |= bit(y);
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  bool generates(PrincipalFactor const& pf, std::uint64_t mask) {
    std::uint64_t target = bit(pf.elements.size()) - 1;
    if (pf.zero_is_product()) {
      target |= bit(pf.zero());
    }
    return (generated(pf, mask) & target) == target;
  }

  RankResult rank_pf(PrincipalFactor const& pf, SearchLimits const& limits) {
    check_budget(pf.n, limits.max_subset_degree, "rank search");
    RankResult out;
    std::vector<index_type> rows, cols;
    for (auto const& e : pf.elements) {
      rows.push_back(e.first);
      cols.push_back(e.second);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    out.r_classes = static_cast<std::size_t>(std::unique(rows.begin(), rows.end()) - rows.begin());
    out.l_classes = static_cast<std::size_t>(std::unique(cols.begin(), cols.end()) - cols.begin());

    std::vector<std::size_t> all(pf.elements.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      all[k] = k;
    }
    for (std::size_t m = 1; m <= all.size(); ++m) {
      bool found = for_each_subset(all, m, [&](std::vector<std::size_t> const& s) {
        if (generates(pf, mask_of(s))) {
          out.rank    = m;
          out.witness = pick(pf, s);
          return true;
        }
        return false;
      });
      if (found) {
        return out;
      }
    }
    throw VerificationFailed(std::string(to_string(pf.which))
                             + " is not generated by its own elements");
  }

  IdRankResult idrank_pf(PrincipalFactor const& pf, SearchLimits const& limits) {
    check_budget(pf.n, limits.max_subset_degree, "idempotent rank search");
    auto const idem = pf.idempotents();
    if (!generates(pf, mask_of(idem))) {
      throw VerificationFailed(std::string(to_string(pf.which))
                               + " is not idempotent generated");
    }
    IdRankResult out;
    for (std::size_t m = 0; m <= idem.size(); ++m) {
      for_each_subset(idem, m, [&](std::vector<std::size_t> const& s) {
        if (generates(pf, mask_of(s))) {
          if (out.minimal_sets == 0) {
            out.witness = pick(pf, s);
          }
          ++out.minimal_sets;
        }
        return false;
      });
      if (out.minimal_sets > 0) {
        out.idrank         = m;
        out.unique_minimal = out.minimal_sets == 1;
        break;
      }
    }
    return out;
  }

  IncomparabilityReport verify_incomparable(degree_type n, SearchLimits const& limits) {
    check_degree(n);
    check_budget(n, limits.max_incomparable_degree, "incomparability search");
    IncomparabilityReport rep;
    rep.n = n;

    NormalFormIndex       index(n);
    std::vector<KElement> all;
    std::vector<KElement> members;
    for (auto const& d : enumerate(n)) {
      KElement x{0, d};
      auto     r = chi(index(x));
      all.push_back(x);
      if (r.blue == r.red) {
        members.push_back(x);
      }
    }
    rep.members_scanned = members.size();

    KElement const up   = eval(DClassElement{1, 2}.word(), n);
    KElement const down = eval(DClassElement{2, 1}.word(), n);

    auto count = [](std::vector<KElement> const& ys,
                    std::vector<KElement> const& zs,
                    KElement const&              middle,
                    KElement const&              target,
                    auto&&                       on_hit) {
      std::size_t hits = 0;
      for (auto const& y : ys) {
        KElement ym = kmul(y, middle);
        if (ym.exp != 0 || ym.diag.rank() < target.diag.rank()) {
          continue;
        }
        for (auto const& z : zs) {
          if (kmul(ym, z) == target) {
            ++hits;
            on_hit(z);
          }
        }
      }
      return hits;
    };
    auto ignore = [](KElement const&) {};
    rep.witnesses_d1_below_d2 = count(members, members, down, up, ignore);
    rep.witnesses_d2_below_d1 = count(members, members, up, down, ignore);

    PlanarDiagram const h22 = PlanarDiagram::hook(2, n);
    point_type const    m   = static_cast<point_type>(n);
    rep.factorizations = count(all, all, down, up, [&](KElement const& z) {
      if (z.diag.mate(2) == 3 && z.diag.mate(m + 2) == m + 3) {
        ++rep.with_components_23;
      }
      if (z.diag == h22) {
        ++rep.equal_to_h22;
      }
    });
    return rep;
  }

  bool RankReport::ok() const noexcept {
    return rank_total == expected_rank() && idrank_total == expected_idrank()
           && rank_d1.rank == std::max(rank_d1.r_classes, rank_d1.l_classes)
           && rank_d2.rank == std::max(rank_d2.r_classes, rank_d2.l_classes)
           && idrank_d1.unique_minimal && idrank_d2.unique_minimal
           && idrank_d1.idrank == n - 2 && idrank_d2.idrank == n - 2;
  }

  RankReport verify_main2(degree_type n, SearchLimits const& limits) {
    check_degree(n);
    check_budget(n, limits.max_subset_degree, "rank verification");
    RankReport rep;
    rep.n        = n;
    auto pf1     = principal_factor(DClass::d1, n);
    auto pf2     = principal_factor(DClass::d2, n);
    rep.rank_d1  = rank_pf(pf1, limits);
    rep.rank_d2  = rank_pf(pf2, limits);
    rep.idrank_d1 = idrank_pf(pf1, limits);
    rep.idrank_d2 = idrank_pf(pf2, limits);
    rep.rank_total       = rep.rank_d1.rank + rep.rank_d2.rank;
    rep.idrank_total     = rep.idrank_d1.idrank + rep.idrank_d2.idrank;
    rep.semigroup_rank   = rep.rank_total + 1;
    rep.semigroup_idrank = rep.idrank_total + 1;
    return rep;
  }

  namespace {
    nlohmann::json elements_json(std::vector<DClassElement> const& v) {
      nlohmann::json out = nlohmann::json::array();
      for (auto const& e : v) {
        out.push_back(e.render());
      }
      return out;
    }
  }  // namespace

  nlohmann::json to_json(RankReport const& r) {
    auto cls = [](RankResult const& rk, IdRankResult const& id) {
      return nlohmann::json{{"rank", rk.rank},
                            {"r_classes", rk.r_classes},
                            {"l_classes", rk.l_classes},
                            {"rank_witness", elements_json(rk.witness)},
                            {"idrank", id.idrank},
                            {"idrank_witness", elements_json(id.witness)},
                            {"unique_minimal", id.unique_minimal}};
    };
    return {{"n", r.n},
            {"D1", cls(r.rank_d1, r.idrank_d1)},
            {"D2", cls(r.rank_d2, r.idrank_d2)},
            {"rank", r.rank_total},
            {"idrank", r.idrank_total},
            {"expected_rank", r.expected_rank()},
            {"expected_idrank", r.expected_idrank()},
            {"semigroup_rank", r.semigroup_rank},
            {"semigroup_idrank", r.semigroup_idrank},
            {"ok", r.ok()}};
  }

  nlohmann::json to_json(IncomparabilityReport const& r) {
    return {{"n", r.n},
            {"members_scanned", r.members_scanned},
            {"witnesses_d1_below_d2", r.witnesses_d1_below_d2},
            {"witnesses_d2_below_d1", r.witnesses_d2_below_d1},
            {"factorizations", r.factorizations},
            {"with_components_23", r.with_components_23},
            {"equal_to_h22", r.equal_to_h22},
            {"ok", r.ok()},
            {"forcing_ok", r.forcing_ok()}};
  }

}  // namespace kauffman
