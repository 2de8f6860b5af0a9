#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tsplit/errors.hpp"

namespace tsplit {
namespace {

using testing::form;
using testing::make_rng;
using testing::row_of;
using testing::uniform;
using QMap = GradedSheafMap<RationalField>;

const RationalField QQ;
const PrimeField Fp;

QMap qmap(const std::string& text) { return parse_sheaf_map(QQ, text); }

IdealCombination<RationalField> combination(const CurveContext& ctx,
                                            std::initializer_list<std::pair<std::pair<int, int>, const char*>> quadrics,
                                            std::initializer_list<std::pair<int, const char*>> linear = {}) {
  IdealCombination<RationalField> f(ctx, QQ);
  for (const auto& [ij, text] : quadrics) f.add_quadric(ij.first, ij.second, parse_poly(text, ctx, QQ, ctx.d - 2));
  for (const auto& [k, text] : linear) f.add_linear(k, parse_poly(text, ctx, QQ, ctx.d - 1));
  return f;
}

IdealCombination<RationalField> quintic() {
  return combination(CurveContext::make(5, 3, 3), {{{1, 2}, "x0^3"}, {{2, 3}, "x3^3"}});
}
IdealCombination<RationalField> cubic() {
  return combination(CurveContext::make(3, 3, 3), {{{1, 2}, "x0"}, {{2, 3}, "x3"}});
}

const char* kCubicKernel =
    "map 3 x 2 : [4,4,4] <- [1,2]\n(1,1) : t^3\n(1,2) : s^2\n(2,2) : s*t\n(3,1) : s^3\n(3,2) : t^2\n";

TEST(SheafMap, SerializationRoundTrip) {
  auto k = qmap(kCubicKernel);
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(k.entry(1, 0).is_zero(), true);
  EXPECT_EQ(qmap(k.to_string()), k);
  EXPECT_EQ(sheaf_map_from_json(QQ, sheaf_map_to_json(k)), k);
  EXPECT_THROW(qmap("map 1 x 1 : [2] <- [0]\n(1,1) : s\n"), PreconditionError);
  EXPECT_THROW(qmap("map 1 x 1 : [0] <- [2]\n(1,1) : s\n"), PreconditionError);
}

TEST(Beta, Shapes) {
  auto b = build_beta(CurveContext::make(2, 3, 3), QQ);
  EXPECT_EQ(b, qmap("map 2 x 3 : [5,5] <- [4,4,4]\n(1,1) : t\n(1,2) : -s\n(2,2) : t\n(2,3) : -s\n"));
  auto line = build_beta(CurveContext::make(2, 1, 4), QQ);
  EXPECT_EQ(line.rows(), 3u);
  EXPECT_EQ(line.cols(), 4u);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(line.entry(0, j).is_zero() == (j != 1));
  EXPECT_EQ(line.entry(2, 3), form(QQ, "1"));
}

TEST(Beta, KillsTangentLine) {
  for (int e = 1; e <= 8; ++e) {
    auto ctx = CurveContext::make(2, e, std::max(e, 3) + 1);
    EXPECT_TRUE(compose(build_beta(ctx, QQ), build_df(ctx, QQ)).is_zero()) << e;
  }
}

TEST(Psi, WorkedQuintic) {
  EXPECT_EQ(row_of(build_psi(quintic())), testing::forms(QQ, {"s^10", "t^10"}));
}

TEST(Psi, QuadricChain) {
  for (int e = 2; e <= 7; ++e) {
    auto ctx = CurveContext::make(2, e, e + 2);
    IdealCombination<RationalField> f(ctx, QQ);
    for (int l = 1; l < e; ++l) f.add_quadric(l, l + 1, MultiPoly<RationalField>::constant(ctx, QQ, 1));
    auto psi = build_psi(f);
    for (int l = 1; l < e; ++l) EXPECT_EQ(psi.entry(0, l - 1), BinaryForm<RationalField>::monomial(QQ, e - 1 - l, l - 1));
    for (int k = e; k < e + 2; ++k) EXPECT_TRUE(psi.entry(0, k - 1).is_zero());
  }
}

TEST(Psi, SingleSummand) {
  auto ctx = CurveContext::make(3, 5, 5);
  for (int l = 1; l < 5; ++l) {
    auto f = combination(ctx, {});
    f.add_quadric(l, l + 1, parse_poly("x1", ctx, QQ, 1));
    auto psi = build_psi(f);
    for (int c = 1; c < 5; ++c) {
      if (c == l) EXPECT_EQ(psi.entry(0, c - 1), form(QQ, "s^4*t").times_monomial(5 - l - 1, l - 1));
      else EXPECT_TRUE(psi.entry(0, c - 1).is_zero());
    }
  }
}

TEST(Delta, WorkedExamples) {
  EXPECT_EQ(row_of(build_delta(quintic())), testing::forms(QQ, {"s^10*t", "-s^11+t^11", "-s*t^10"}));
  EXPECT_EQ(row_of(build_delta(cubic())), testing::forms(QQ, {"s^4*t", "-s^5+t^5", "-s*t^4"}));
  auto quartic = combination(CurveContext::make(4, 4, 4), {{{1, 2}, "x0^2"}, {{2, 3}, "x2^2"}, {{3, 4}, "x4^2"}});
  EXPECT_EQ(row_of(build_delta(quartic)),
            testing::forms(QQ, {"s^10*t", "-s^11+s^5*t^6", "-s^6*t^5+t^11", "-s*t^10"}));
}

TEST(Delta, ClosedFormMatchesComposition) {
  auto rng = make_rng(20);
  for (int i = 0; i < 20; ++i) {
    int d = uniform(rng, 2, 4), e = uniform(rng, 2, 5);
    auto ctx = CurveContext::make(d, e, uniform(rng, std::max(3, e), 6));
    auto f = testing::random_ideal_combination(ctx, Fp, rng);
    auto psi = build_psi(f), delta = build_delta(f);
    // closed form (tC1, -sC1 + tC2, ..., -sC_{e-1}; G)
    auto s = form(Fp, "s"), t = form(Fp, "t");
    for (int j = 0; j < ctx.n; ++j) {
      BinaryForm<PrimeField> expect(Fp);
      if (j < e) {
        if (j < e - 1) expect += psi.entry(0, j) * t;
        if (j > 0) expect -= psi.entry(0, j - 1) * s;
      } else {
        expect = psi.entry(0, j - 1);
      }
      EXPECT_TRUE(delta.entry(0, j) == expect || (delta.entry(0, j).is_zero() && expect.is_zero()));
    }
    EXPECT_EQ(delta, compose(psi, build_beta(ctx, Fp)));
    EXPECT_TRUE(compose(delta, build_df(ctx, Fp)).is_zero());
  }
}

TEST(Compose, IdentityAndKernel) {
  auto k = qmap(kCubicKernel);
  EXPECT_EQ(compose(k, identity_map(QQ, k.source())), k);
  EXPECT_TRUE(compose(build_delta(cubic()), k).is_zero());
  EXPECT_THROW(compose(k, k), PreconditionError);
}

TEST(Dual, InvolutionAndContravariance) {
  auto st = qmap("map 1 x 2 : [1] <- [0,0]\n(1,1) : s\n(1,2) : t\n");
  EXPECT_EQ(dual(st), qmap("map 2 x 1 : [0,0] <- [-1]\n(1,1) : s\n(2,1) : t\n"));
  auto rng = make_rng(21);
  for (int i = 0; i < 30; ++i) {
    auto a = testing::random_surjective_map(Fp, rng);
    EXPECT_EQ(dual(dual(a)), a);
    auto b = kernel_matrix(a);
    auto ab = compose(a, b);
    EXPECT_EQ(dual(ab), compose(dual(b), dual(a)));
  }
}

TEST(SectionKernelDim, Examples) {
  auto st = qmap("map 1 x 2 : [1] <- [0,0]\n(1,1) : s\n(1,2) : t\n");
  EXPECT_EQ(section_kernel_dim(st, 1), 1u);
  EXPECT_EQ(section_kernel_dim(st, 0), 0u);
  auto delta = build_delta(quintic());
  EXPECT_EQ(section_kernel_dim(delta, -2), 1u);
  EXPECT_EQ(section_kernel_dim(delta, -3), 0u);
  EXPECT_EQ(section_kernel_dim(delta, -6), 0u);
  auto rng = make_rng(22);
  for (int i = 0; i < 20; ++i) {
    auto m = testing::random_surjective_map(Fp, rng);
    EXPECT_EQ(section_kernel_dim(m, -m.source().max() - 1), 0u);
  }
}

TEST(SectionKernelDim, ConvolutionOracle) {
  // (s, t): O(0)^2 -> O(1) at twist m is the 2x... map sending (a, b) to s*a + t*b; kernel is t*c, -s*c.
  auto st = qmap("map 1 x 2 : [1] <- [0,0]\n(1,1) : s\n(1,2) : t\n");
  for (int m = -1; m <= 6; ++m) EXPECT_EQ(section_kernel_dim(st, m), static_cast<std::size_t>(std::max(0, m)));
}

TEST(SplittingOfKernel, Examples) {
  EXPECT_EQ(splitting_of_kernel(build_delta(quintic())), SplittingType({-5, 2}));
  EXPECT_EQ(splitting_of_kernel(build_delta(cubic())), SplittingType({1, 2}));
  auto ctx = CurveContext::make(2, 4, 6);
  IdealCombination<RationalField> chain(ctx, QQ);
  for (int l = 1; l < 4; ++l) chain.add_quadric(l, l + 1, MultiPoly<RationalField>::constant(ctx, QQ, 1));
  EXPECT_EQ(splitting_of_kernel(build_delta(chain)), SplittingType({4, 4, 4, 4, 4}));
  EXPECT_EQ(splitting_of_kernel(build_psi(quintic())), SplittingType({-5}));
}

TEST(SplittingOfKernel, CountingFunctionIsMonotone) {
  auto rng = make_rng(23);
  for (int i = 0; i < 20; ++i) {
    auto m = testing::random_surjective_map(Fp, rng);
    auto s = splitting_of_kernel(m);
    EXPECT_EQ(static_cast<std::size_t>(s.rank()), m.cols() - generic_rank(m));
    long long prev_jump = 0;
    for (int tw = -s.max() - 1; tw <= -s.min() + 2; ++tw) {
      long long jump = static_cast<long long>(section_kernel_dim(m, tw)) - section_kernel_dim(m, tw - 1);
      EXPECT_GE(jump, prev_jump);
      prev_jump = jump;
    }
    EXPECT_EQ(prev_jump, s.rank());
    // degree of the kernel of a surjection: sum b - sum c
    EXPECT_EQ(s.degree(), m.source().sum() - m.target().sum());
  }
}

TEST(KernelMatrix, WorkedCubicIsColumnEquivalent) {
  auto delta = build_delta(cubic());
  auto k = kernel_matrix(delta);
  auto reference = qmap(kCubicKernel);
  EXPECT_EQ(SplittingType(k.source().twists), SplittingType(reference.source().twists));
  EXPECT_TRUE(compose(delta, k).is_zero());
  EXPECT_TRUE(compose(delta, reference).is_zero());
  EXPECT_TRUE(full_rank_everywhere(k));
  EXPECT_TRUE(full_rank_everywhere(reference));
}

TEST(KernelMatrix, SimpleMap) {
  auto k = kernel_matrix(qmap("map 1 x 2 : [1] <- [0,0]\n(1,1) : s\n(1,2) : t\n"));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.source().twists, std::vector<int>{-1});
  auto a = k.entry(0, 0), b = k.entry(1, 0);
  EXPECT_EQ(a.scaled(QQ.inv(a[1])), form(QQ, "t"));
  EXPECT_EQ(b.scaled(QQ.inv(a[1])), form(QQ, "-s"));
}

TEST(KernelMatrix, AgreesWithScan) {
  auto rng = make_rng(24);
  for (int i = 0; i < 40; ++i) {
    auto m = testing::random_surjective_map(Fp, rng);
    auto k = kernel_matrix(m);
    EXPECT_EQ(SplittingType(k.source().twists), splitting_of_kernel(m));
    EXPECT_TRUE(std::is_sorted(k.source().twists.rbegin(), k.source().twists.rend()));
    EXPECT_TRUE(compose(m, k).is_zero());
    EXPECT_TRUE(full_rank_everywhere(k));
  }
}

TEST(CokernelMatrix, Examples) {
  auto n = qmap(
      "map 4 x 3 : [4,4,4,3] <- [2,2,2]\n(1,2) : s^2\n(1,3) : t^2\n(2,2) : s*t\n(3,1) : s^2\n(3,2) : t^2\n"
      "(4,1) : t\n(4,3) : -s\n");
  auto delta = cokernel_matrix(n);
  EXPECT_TRUE(compose(delta, n).is_zero());
  EXPECT_EQ(delta.source(), n.target());
  // scale so that the first entry is s^4 t, then compare with the known cokernel
  auto c = QQ.inv(delta.entry(0, 0)[1]);
  std::vector<BinaryForm<RationalField>> scaled;
  for (auto f : row_of(delta)) scaled.push_back(f.scaled(c));
  EXPECT_EQ(scaled, testing::forms(QQ, {"s^4*t", "-s^5+t^5", "-s*t^4", "s^3*t^3"}));

  auto col = qmap("map 2 x 1 : [1,1] <- [0]\n(1,1) : s\n(2,1) : t\n");
  auto ck = cokernel_matrix(col);
  EXPECT_EQ(ck.target().twists, std::vector<int>{2});
  auto a = ck.entry(0, 0);
  EXPECT_EQ(a.scaled(QQ.inv(a[1])), form(QQ, "t"));
  EXPECT_EQ(ck.entry(0, 1).scaled(QQ.inv(a[1])), form(QQ, "-s"));

  EXPECT_THROW(cokernel_matrix(qmap("map 2 x 1 : [1,2] <- [0]\n(1,1) : s\n(2,1) : s^2\n")), PreconditionError);
}

TEST(CokernelMatrix, RecoversSurjection) {
  auto rng = make_rng(25);
  for (int i = 0; i < 30; ++i) {
    auto m = testing::random_surjective_map(Fp, rng);
    auto back = cokernel_matrix(kernel_matrix(m));
    EXPECT_EQ(SplittingType(back.target().twists), SplittingType(m.target().twists));
    EXPECT_TRUE(compose(back, kernel_matrix(m)).is_zero());
    EXPECT_EQ(splitting_of_kernel(back), splitting_of_kernel(m));
    EXPECT_TRUE(full_rank_everywhere(back));
  }
}

TEST(FullRankEverywhere, Examples) {
  EXPECT_TRUE(full_rank_everywhere(qmap(kCubicKernel)));
  EXPECT_FALSE(full_rank_everywhere(qmap("map 2 x 1 : [1,2] <- [0]\n(1,1) : s\n(2,1) : s*t\n")));
  EXPECT_FALSE(full_rank_everywhere(qmap("map 2 x 2 : [1,1] <- [0,0]\n(1,1) : s\n(2,1) : t\n(1,2) : s\n(2,2) : t\n")));
  EXPECT_TRUE(full_rank_everywhere(build_delta(quintic())));
}

TEST(FullRankEverywhere, QuadricKernels) {
  for (int e = 2; e <= 8; e += 2)
    for (int n = std::max(e, 3); n <= 10; ++n) {
      auto ctx = CurveContext::make(2, e, n);
      auto f = generate_example(ctx, Fp);
      auto k = kernel_matrix(build_delta(f));
      EXPECT_EQ(k.cols(), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(full_rank_everywhere(k)) << e << " " << n;
    }
}

TEST(FullRankEverywhere, DeterminantOracle) {
  auto rng = make_rng(26);
  for (int i = 0; i < 30; ++i) {
    int size = uniform(rng, 1, 4);
    std::vector<std::vector<BinaryForm<PrimeField>>> rows(size);
    std::vector<int> deg_r(size), deg_c(size);
    for (auto& d : deg_r) d = uniform(rng, 0, 3);
    for (auto& d : deg_c) d = uniform(rng, 0, 3);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) rows[r].push_back(testing::random_form(Fp, deg_r[r] + deg_c[c], rng));
    auto det = form_determinant(rows);
    auto s = Fp.random(rng), t = Fp.random_nonzero(rng);
    Matrix<PrimeField> at(Fp, size, size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) at.at(r, c) = rows[r][c].eval(s, t);
    EXPECT_EQ(det.eval(s, t), determinant(at));
  }
}

TEST(Smoothness, Examples) {
  EXPECT_TRUE(check_smooth_along_curve(cubic()));
  auto ctx = CurveContext::make(4, 3, 3);
  IdealCombination<RationalField> square(ctx, QQ);
  square.add_quadric(1, 2, build_quadric(ctx, QQ, 1, 2));
  EXPECT_FALSE(check_smooth_along_curve(square));
}

TEST(EulerCrossCheck, Examples) {
  EXPECT_THROW(h0_euler_crosscheck(quintic(), -2), PreconditionError);
  auto r = euler_routes(cubic(), -1);
  EXPECT_EQ(r.via_delta, r.via_gradient);
  EXPECT_EQ(r.via_delta, 1 + 2);  // T = O(1)+O(2) twisted by -1 has 1 + 2 sections
  for (int m = -1; m <= 3; ++m) EXPECT_TRUE(h0_euler_crosscheck(quintic(), m));
}

TEST(EulerCrossCheck, RandomCombinations) {
  auto rng = make_rng(27);
  for (int i = 0; i < 15; ++i) {
    int d = uniform(rng, 2, 4), e = uniform(rng, 2, 5);
    auto ctx = CurveContext::make(d, e, uniform(rng, std::max(3, e), 6));
    auto f = testing::random_smooth_combination(ctx, Fp, rng);
    for (int m = -1; m <= 2; ++m) EXPECT_TRUE(h0_euler_crosscheck(f, m)) << ctx.to_string() << " m=" << m;
  }
}

}  // namespace
}  // namespace tsplit
