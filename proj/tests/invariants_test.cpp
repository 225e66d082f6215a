#include "expmap/invariants.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "expmap/error.hpp"
#include "expmap/linalg.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

using namespace expmap;
using expmap::testing::Instances;
using expmap::testing::Rng;

namespace {

const Instances I;

MPoly P(const std::string& s, const RingPtr& ring) { return parse_poly(s, ring); }

std::vector<std::string> strings(const std::vector<MPoly>& ps) {
  std::vector<std::string> out;
  for (const MPoly& p : ps) out.push_back(p.to_string());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadArgument;
}

bool same_span(const RingPtr& ring, const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  PolySpan sa(ring), sb(ring);
  for (const MPoly& f : a) sa.insert(f);
  for (const MPoly& f : b) sb.insert(f);
  if (sa.dim() != sb.dim()) return false;
  for (const MPoly& f : a) {
    if (!sb.contains(f)) return false;
  }
  return true;
}

// Every element of a small F_2 window: all 0/1 combinations of monomials.
std::vector<MPoly> all_window_elements(const RingPtr& ring, std::uint32_t D) {
  const std::vector<Monomial> monos = monomials_up_to(ring->nvars(), D);
  std::vector<MPoly> out;
  for (std::uint64_t mask = 1; mask < (1ULL << monos.size()); ++mask) {
    MPoly f(ring);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (mask >> i & 1) f.add_term(monos[i], FieldElem::one(ring->field()));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST(InvariantBasis, Examples) {
  EXPECT_EQ(strings(invariant_basis(I.uv_local(), DegreeWindow(2))), (std::vector<std::string>{"1", "u", "u^2"}));
  EXPECT_EQ(strings(invariant_basis(ExpMap::identity(I.quv), DegreeWindow(2))),
            (std::vector<std::string>{"1", "v", "u", "v^2", "u*v", "u^2"}));
  EXPECT_EQ(strings(invariant_basis(I.v_translate(), DegreeWindow(3))), (std::vector<std::string>{"1"}));
  EXPECT_EQ(kind_of([] { DegreeWindow(0); }), ErrorKind::BadArgument);
}

TEST(InvariantBasis, TranslateKeepsOtherVariable) {
  EXPECT_EQ(strings(invariant_basis(I.uv_translate(), DegreeWindow(2))), (std::vector<std::string>{"1", "u", "u^2"}));
}

TEST(InvariantBasis, MatchesDenseOracle) {
  for (std::uint32_t D = 1; D <= 6; ++D) {
    const auto oracle = expmap::testing::dense_uv_invariants(D);
    std::vector<MPoly> expected;
    for (const auto& v : oracle.basis) {
      MPoly f(I.quv);
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] != 0) f.add_term({oracle.columns[c].a, oracle.columns[c].b}, FieldElem(FieldSpec::rationals(), v[c].get_num(), v[c].get_den()));
      }
      expected.push_back(std::move(f));
    }
    const std::vector<MPoly> got = invariant_basis(I.uv_local(), DegreeWindow(D));
    ASSERT_EQ(got.size(), D + 1) << "D = " << D;
    ASSERT_TRUE(same_span(I.quv, got, expected)) << "D = " << D;
    for (std::uint32_t k = 0; k <= D; ++k) EXPECT_EQ(got[k], I.u().pow(k));
  }
}

TEST(InvariantBasis, ElementsAreFixed) {
  Rng rng(0xf1f1);
  std::vector<ExpMap> maps{I.uv_local(), I.uv_translate(), I.f2_square(),
                           I.map(make_ring(FieldSpec::prime(2), {"u", "v"}), {"u", "v + u*x + x^2"})};
  for (int t = 0; t < 10; ++t) {
    maps.push_back(expmap::testing::random_triangular_char0(rng, make_ring(FieldSpec::rationals(), {"a", "b", "c"})));
  }
  for (const ExpMap& m : maps) {
    for (const MPoly& f : invariant_basis(m, DegreeWindow(3))) {
      ASSERT_TRUE(m.is_invariant(f)) << f.to_string();
      ASSERT_EQ(m.apply(f), SigmaImage(f));
    }
  }
}

TEST(InvariantBasis, MonotoneInWindow) {
  for (const ExpMap& m : {I.uv_local(), I.f2_square(), ExpMap::identity(I.quv),
                          I.map(make_ring(FieldSpec::rationals(), {"a", "b", "c"}), {"a", "b + a*x", "c + 2*b*x + a*x^2"})}) {
    for (std::uint32_t D = 1; D <= 4; ++D) {
      PolySpan bigger(m.ring());
      for (const MPoly& f : invariant_basis(m, DegreeWindow(D + 1))) bigger.insert(f);
      for (const MPoly& f : invariant_basis(m, DegreeWindow(D))) ASSERT_TRUE(bigger.contains(f)) << f.to_string();
    }
  }
}

TEST(LocalSlices, Examples) {
  const LocalSlices a = find_local_slices(I.uv_local(), DegreeWindow(1));
  EXPECT_EQ(a.m_star, 1u);
  ASSERT_EQ(a.slices.size(), 1u);
  EXPECT_EQ(a.slices[0].element, I.v());
  EXPECT_EQ(a.slices[0].lc, I.u());

  const LocalSlices b = find_local_slices(I.f2_square(), DegreeWindow(1));
  EXPECT_EQ(b.m_star, 2u);
  ASSERT_EQ(b.slices.size(), 1u);
  EXPECT_EQ(b.slices[0].element, P("y0", I.f2));
  EXPECT_TRUE(b.slices[0].lc.is_one());

  const LocalSlices c = find_local_slices(I.uv_translate(), DegreeWindow(1));
  EXPECT_EQ(c.m_star, 1u);
  ASSERT_EQ(c.slices.size(), 1u);
  EXPECT_EQ(c.slices[0].element, I.v());
  EXPECT_TRUE(c.slices[0].lc.is_one());

  EXPECT_EQ(kind_of([] { find_local_slices(ExpMap::identity(I.quv), DegreeWindow(2)); }),
            ErrorKind::NoNonInvariantInWindow);
}

TEST(LocalSlices, BruteForceMinimalOverF2) {
  const RingPtr f2uv = make_ring(FieldSpec::prime(2), {"u", "v"});
  const RingPtr f2uvw = make_ring(FieldSpec::prime(2), {"u", "v", "w"});
  const std::vector<ExpMap> maps{I.map(f2uv, {"u", "v + u*x"}), I.map(f2uv, {"u", "v + u*x + x^2"}),
                                 I.map(f2uv, {"u", "v + u^2*x^2"}), I.map(f2uvw, {"u", "v + u*x^2", "w + x^4"})};
  for (const ExpMap& m : maps) {
    ASSERT_TRUE(validate(m).valid);
    for (std::uint32_t D = 1; D <= (m.ring()->nvars() == 2 ? 3u : 2u); ++D) {
      const LocalSlices ls = find_local_slices(m, DegreeWindow(D));
      std::size_t brute = 0;
      for (const MPoly& f : all_window_elements(m.ring(), D)) {
        const std::size_t d = m.apply(f).degree();
        if (d > 0 && (brute == 0 || d < brute)) brute = d;
      }
      ASSERT_EQ(ls.m_star, brute) << "D = " << D;
      for (const SliceRecord& s : ls.slices) {
        ASSERT_EQ(s.deg_sigma, brute);
        ASSERT_EQ(m.apply(s.element).degree(), brute);
      }
    }
  }
}

TEST(LocalSlices, SampledMinimalOverQ) {
  Rng rng(0x5a5a);
  for (int t = 0; t < 15; ++t) {
    const ExpMap m = expmap::testing::random_triangular_char0(rng, make_ring(FieldSpec::rationals(), {"a", "b", "c"}));
    if (!is_nontrivial(m)) continue;
    const DegreeWindow window(2);
    LocalSlices ls{0, {}};
    try {
      ls = find_local_slices(m, window);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NoNonInvariantInWindow);
      continue;
    }
    for (int k = 0; k < 100; ++k) {
      const MPoly f = expmap::testing::random_poly(rng, m.ring(), 5, 2);
      const std::size_t d = m.apply(f).degree();
      if (d > 0) ASSERT_GE(d, ls.m_star) << f.to_string();
    }
    for (const SliceRecord& s : ls.slices) {
      ASSERT_FALSE(m.is_invariant(s.element));
      ASSERT_TRUE(m.is_invariant(s.lc));
    }
  }
}

TEST(Plinth, Examples) {
  const std::vector<MPoly> a = plinth_sample(I.uv_local(), DegreeWindow(2));
  ASSERT_FALSE(a.empty());
  for (const MPoly& p : a) EXPECT_TRUE(exact_divide(p, I.u()).has_value()) << p.to_string();
  EXPECT_EQ(strings(plinth_sample(I.v_translate(), DegreeWindow(2))), (std::vector<std::string>{"1"}));
  EXPECT_EQ(strings(plinth_sample(I.f2_square(), DegreeWindow(2))), (std::vector<std::string>{"1"}));
}

TEST(Plinth, SamplesAreLeadingCoefficientsOfSlices) {
  for (const ExpMap& m : {I.uv_local(), I.uv_translate(), I.f2_square(),
                          I.map(make_ring(FieldSpec::rationals(), {"u", "v", "w", "t"}), {"u", "v", "w + u*x", "t + v*x"})}) {
    for (std::uint32_t D = 1; D <= 3; ++D) {
      const DegreeWindow window(D);
      const LocalSlices ls = find_local_slices(m, window);
      for (const MPoly& p : plinth_sample(m, window)) {
        ASSERT_TRUE(m.is_invariant(p));
        const bool found = std::any_of(ls.slices.begin(), ls.slices.end(),
                                       [&](const SliceRecord& s) { return s.lc.monic() == p; });
        ASSERT_TRUE(found) << p.to_string();
      }
      const PlinthClosureReport closure = check_plinth_closure(m, window);
      EXPECT_TRUE(closure.ok());
      EXPECT_GT(closure.checks, 0u);
    }
  }
}

TEST(MinimalSlice, Examples) {
  const MinimalSliceResult a = minimal_local_slice(I.uv_local(), DegreeWindow(2));
  ASSERT_FALSE(a.inconclusive());
  EXPECT_EQ(a.slice->element, I.v());
  EXPECT_EQ(a.slice->lc, I.u());

  const MinimalSliceResult b = minimal_local_slice(I.v_translate(), DegreeWindow(2));
  ASSERT_FALSE(b.inconclusive());
  EXPECT_EQ(b.slice->element, P("v", I.qv));
  EXPECT_TRUE(b.slice->lc.is_one());
}

TEST(MinimalSlice, InconclusiveWhenNoLeadingCoefficientDividesAll) {
  const RingPtr ring = make_ring(FieldSpec::rationals(), {"u", "v", "w", "t"});
  const ExpMap m = I.map(ring, {"u", "v", "w + u*x", "t + v*x"});
  const MinimalSliceResult r = minimal_local_slice(m, DegreeWindow(1));
  EXPECT_TRUE(r.inconclusive());
  ASSERT_EQ(r.samples.size(), 2u);
  // Brute-force oracle: no sample divides every other sample.
  for (const MPoly& p : r.samples) {
    bool divides_all = true;
    for (const MPoly& q : r.samples) divides_all = divides_all && exact_divide(q, p).has_value();
    EXPECT_FALSE(divides_all) << p.to_string();
  }
  ASSERT_EQ(r.divides.size(), r.samples.size());
  EXPECT_TRUE(r.divides[0][0]);
  EXPECT_FALSE(r.divides[0][1]);
  EXPECT_FALSE(r.divides[1][0]);
}

TEST(Residue, Examples) {
  EXPECT_TRUE(residue_is_base_field(I.uv_local(), I.u(), DegreeWindow(3)));
  EXPECT_FALSE(residue_is_base_field(I.uv_local(), P("u^2", I.quv), DegreeWindow(3)));
  EXPECT_TRUE(residue_is_base_field(I.uv_translate(), P("u - 1", I.quv), DegreeWindow(3)));
  EXPECT_EQ(kind_of([] { residue_is_base_field(I.uv_local(), I.v(), DegreeWindow(3)); }), ErrorKind::NotInvariant);
  EXPECT_EQ(kind_of([] { residue_is_base_field(I.uv_local(), P("2", I.quv), DegreeWindow(3)); }),
            ErrorKind::BadArgument);
}

TEST(Remark, Examples) {
  EXPECT_TRUE(remark_check_min_slice(I.uv_local(), I.v(), I.u(), DegreeWindow(3)));
  EXPECT_FALSE(remark_check_min_slice(I.uv_local(), P("u*v", I.quv), I.u(), DegreeWindow(3)));
  EXPECT_TRUE(remark_check_min_slice(I.uv_translate(), I.v(), P("u - 1", I.quv), DegreeWindow(3)));
  // u*v + u^2 = u*(v + u).
  EXPECT_FALSE(remark_check_min_slice(I.uv_local(), P("u*v + u^2", I.quv), I.u(), DegreeWindow(3)));
  EXPECT_EQ(kind_of([] { remark_check_min_slice(I.uv_local(), I.v(), I.v(), DegreeWindow(3)); }),
            ErrorKind::NotInvariant);
}
