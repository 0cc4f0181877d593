#include "ttg/ttspec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ttg/gen.hpp"
#include "ttg/io.hpp"

namespace ttg::ttspec {

using catmod::GroupTable;
using dcat::BoundedComplex;

std::vector<PrimeDescriptor> spc_poset(const fincat::FiniteCategory& p) {
  require(io::is_poset_shaped(p), errc::invalid_params,
          "spc_poset requires a poset");
  std::vector<PrimeDescriptor> out;
  for (int x = 0; x < p.n_objects(); ++x)
    out.push_back({x, "P^" + p.object_name(x)});
  return out;
}

bool prime_membership(const BoundedComplex& c, const PrimeDescriptor& prime) {
  auto supp = dcat::support_poset(c);
  return !std::count(supp.begin(), supp.end(), prime.object);
}

IdealDescriptor ideal_from_subset(CatPtr p, std::vector<int> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (int x : objects)
    require(x >= 0 && x < p->n_objects(), errc::invalid_params,
            "ideal subset object out of range");
  return {std::move(p), std::move(objects)};
}

bool ideal_membership(const BoundedComplex& c, const IdealDescriptor& ideal) {
  require(fincat::same_category(c.cat, ideal.poset), errc::category_mismatch,
          "complex and ideal live over different posets");
  for (int x : dcat::support_poset(c))
    if (!std::count(ideal.objset.begin(), ideal.objset.end(), x)) return false;
  return true;
}

namespace {

std::string brace_list(const fincat::FiniteCategory& p,
                       const std::vector<int>& objs,
                       const std::string& prefix) {
  std::string s = "{";
  for (size_t i = 0; i < objs.size(); ++i) {
    if (i) s += ",";
    s += prefix + p.object_name(objs[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<IdealTableRow> classify_ideals(CatPtr p) {
  require(io::is_poset_shaped(*p), errc::invalid_params,
          "classify_ideals requires a poset");
  int n = p->n_objects();
  require(n <= 12, errc::unsupported_scale,
          "2^n ideal table only emitted for n <= 12");
  std::vector<IdealTableRow> rows;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IdealTableRow row;
    for (int x = 0; x < n; ++x)
      if (mask & (1 << x))
        row.subset.push_back(x);
      else
        row.cosupport.push_back(x);
    row.subset_names = brace_list(*p, row.subset, "");
    row.spc_subset = brace_list(*p, row.subset, "P^");
    row.ideal_label = row.subset.empty() ? "0" : [&] {
      std::string s = "<";
      for (size_t i = 0; i < row.subset.size(); ++i) {
        if (i) s += ",";
        s += "S_" + p->object_name(row.subset[i]);
      }
      return s + ">";
    }();
    row.is_prime = row.cosupport.size() == 1;
    row.is_zero = row.subset.empty();
    row.is_improper = row.cosupport.empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

PreimageDescriptor prime_preimage(CatPtr parent, const fincat::Subcategory& e,
                                  const IdealDescriptor& ideal_in_e) {
  require(fincat::is_convex(*parent, e.obj_to_parent), errc::not_convex,
          "preimage along a non-convex subcategory");
  PreimageDescriptor out;
  for (int x : ideal_in_e.objset)
    out.included_subset.push_back(e.obj_to_parent[x]);
  for (int x = 0; x < parent->n_objects(); ++x)
    if (e.obj_from_parent[x] < 0) out.off_subcategory.push_back(x);
  std::vector<int> all = out.included_subset;
  all.insert(all.end(), out.off_subcategory.begin(),
             out.off_subcategory.end());
  out.preimage = ideal_from_subset(parent, all);
  out.label = "<Inc" + brace_list(*parent, out.included_subset, "S_") +
              ", " + brace_list(*parent, out.off_subcategory, "S_") + ">";
  return out;
}

SpectrumDescriptor spc_ei(CatPtr c, Field k) {
  auto cl = fincat::classify(*c);  // throws NotEI when not EI
  SpectrumDescriptor sd;
  sd.cat = c;
  sd.characteristic = k.characteristic();
  for (int a = 0; a < cl.n_classes(); ++a) {
    GroupTable t = catmod::group_table_from_aut(*c, cl.aut[a]);
    long long exp = 1;
    for (int e = 0; e < t.n; ++e)
      exp = std::lcm(exp, (long long)t.order_of(e));
    auto info = groupact::make_group_info(t.n, (int)exp, t.is_abelian());
    SpectrumComponent comp;
    comp.class_id = a;
    comp.class_name = c->object_name(cl.representative[a]);
    comp.aut = info;
    if (info.order == 1) {
      comp.kind = ComponentKind::ExactPoint;
      comp.label = "point([" + comp.class_name + "])";
    } else {
      comp.kind = ComponentKind::SymbolicSpecH;
      comp.label = "Spec^h H(" + info.name + "; " + k.name() + ")";
    }
    sd.components.push_back(std::move(comp));
  }
  return sd;
}

cohom::GradedRingDescription presheaf_section(
    const fincat::FiniteCategory& p, const std::vector<int>& removed, Field k,
    int cutoff) {
  require(io::is_poset_shaped(p), errc::invalid_params,
          "presheaf sections computed for posets only");
  return cohom::section_ring(p, removed, k, cutoff);
}

/* ---------------- the ideal census ---------------- */

CensusReport oracle_ideal_census(CatPtr p, Field k,
                                 const CensusParams& params) {
  require(io::is_poset_shaped(*p), errc::invalid_params,
          "census runs on posets");
  int n = p->n_objects();
  require(n <= 3, errc::budget_exceeded,
          "census budget: at most 3 objects (got " + std::to_string(n) + ")");
  require(k.is_fp() && (k.characteristic() == 2 || k.characteristic() == 3),
          errc::invalid_params, "census runs over F_2 or F_3");

  CensusReport report;
  report.total_ideals = 1 << n;
  auto rows = classify_ideals(p);
  auto cl = fincat::classify(*p);

  auto member = [&](const BoundedComplex& c, const std::vector<int>& s) {
    return ideal_membership(c, {p, s});
  };
  auto describe = [&](const std::vector<int>& s) {
    return brace_list(*p, s, "");
  };

  std::vector<CensusSubsetReport> subset_reports(rows.size());
  std::vector<std::vector<std::string>> subset_violations(rows.size());

  auto run_subset = [&](size_t ri) {
    const auto& subset = rows[ri].subset;
    gen::Rng rng(params.seed * 1000003 + ri);
    CensusSubsetReport sr;
    sr.subset = subset;
    auto& viol = subset_violations[ri];

    // shift closure
    for (int t = 0; t < params.shifts_per_ideal; ++t) {
      auto c = gen::random_ideal_member(p, k, rng, subset);
      ++sr.shifts_checked;
      if (!member(c, subset) || !member(dcat::shift(c, 1), subset) ||
          !member(dcat::shift(c, -1), subset))
        viol.push_back("shift closure fails for " + describe(subset));
    }

    // cone closure on sampled chain maps between members
    for (int t = 0; t < params.cones_per_ideal; ++t) {
      auto a = gen::random_ideal_member(p, k, rng, subset);
      auto b = gen::random_ideal_member(p, k, rng, subset);
      auto f = gen::random_chain_map(a, b, rng);
      ++sr.cones_checked;
      if (!member(dcat::cone(f), subset))
        viol.push_back("cone closure fails for " + describe(subset));
    }

    // tensor-ideal closure: member ⊗ arbitrary stays inside
    for (int t = 0; t < params.tensors_per_ideal; ++t) {
      auto a = gen::random_ideal_member(p, k, rng, subset);
      auto d = gen::random_complex(p, k, rng);
      ++sr.tensors_checked;
      if (!member(dcat::tensor_complex(a, d), subset))
        viol.push_back("tensor closure fails for " + describe(subset));
    }

    // summand closure: if a ⊕ b lies inside, so do a and b
    for (int t = 0; t < params.summand_pairs; ++t) {
      auto a = gen::random_complex(p, k, rng);
      auto b = gen::random_complex(p, k, rng);
      ++sr.summand_pairs_checked;
      if (member(dcat::direct_sum_complex({a, b}), subset) &&
          (!member(a, subset) || !member(b, subset)))
        viol.push_back("summand closure fails for " + describe(subset));
    }

    // radicality: c ⊗ c inside forces c inside
    for (int t = 0; t < params.radical_samples; ++t) {
      auto c = gen::random_complex(p, k, rng);
      ++sr.radical_checked;
      if (member(dcat::tensor_complex(c, c), subset) && !member(c, subset))
        viol.push_back("radicality fails for " + describe(subset));
    }

    subset_reports[ri] = std::move(sr);
  };

  int workers = std::max(1, std::min<int>(params.threads, (int)rows.size()));
  if (workers == 1) {
    for (size_t ri = 0; ri < rows.size(); ++ri) run_subset(ri);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t ri = next++; ri < rows.size(); ri = next++)
          run_subset(ri);
      });
    for (auto& th : pool) th.join();
  }
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    report.subsets.push_back(subset_reports[ri]);
    for (auto& v : subset_violations[ri])
      report.violations.push_back(std::move(v));
  }

  // distinctness: simple stalks separate any two subsets
  report.distinct = true;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      int witness = -1;
      for (int x = 0; x < n; ++x) {
        bool in_i = std::count(rows[i].subset.begin(), rows[i].subset.end(), x);
        bool in_j = std::count(rows[j].subset.begin(), rows[j].subset.end(), x);
        if (in_i == in_j) continue;
        auto sx = catmod::simple_from_rep(p, k, cl, cl.class_of[x],
                                          {Matrix::identity(k, 1)});
        auto stalk = dcat::stalk_complex(sx, 0);
        if (member(stalk, rows[i].subset) != member(stalk, rows[j].subset)) {
          witness = x;
          break;
        }
      }
      if (witness < 0) {
        report.distinct = false;
        report.violations.push_back("subsets " + describe(rows[i].subset) +
                                    " and " + describe(rows[j].subset) +
                                    " not separated");
      } else {
        report.witnesses.push_back({(int)i, (int)j, witness});
      }
    }
  return report;
}

}  // namespace ttg::ttspec
