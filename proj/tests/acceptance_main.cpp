// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace tsplit {
namespace {

using testing::form;
using testing::row_of;

const RationalField QQ;
const PrimeField Fp;
const FieldSpec kPrime = FieldSpec::prime_field(kDefaultPrime);

struct Failures {
  std::vector<std::string> items;
  void check(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

std::string describe(int d, int e, int n) {
  return "(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(n) + ")";
}

SplittingType repeated(std::initializer_list<std::pair<int, int>> twist_counts) {
  std::vector<int> parts;
  for (auto [twist, count] : twist_counts) parts.insert(parts.end(), count, twist);
  return SplittingType(parts);
}

// ---------------------------------------------------------------- 1

void worked_examples(Failures& f, std::vector<std::string>& timings) {
  auto timed = [&](const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t << name << " " << secs << "s";
    timings.push_back(t.str());
    f.check(secs < 1.0, name + " took " + std::to_string(secs) + "s");
  };

  timed("quintic", [&] {
    auto ctx = CurveContext::make(5, 3, 3);
    IdealCombination<RationalField> F(ctx, QQ);
    F.add_quadric(1, 2, parse_poly("x0^3", ctx, QQ, 3));
    F.add_quadric(2, 3, parse_poly("x3^3", ctx, QQ, 3));
    f.check(row_of(build_psi(F)) == testing::forms(QQ, {"s^10", "t^10"}), "quintic psi");
    f.check(row_of(build_delta(F)) == testing::forms(QQ, {"s^10*t", "-s^11+t^11", "-s*t^10"}), "quintic delta");
    f.check(splitting_of_kernel(build_delta(F)) == SplittingType({-5, 2}), "quintic T");
    f.check(splitting_of_kernel(build_psi(F)) == SplittingType({-5}), "quintic N");
  });

  timed("cubic-333", [&] {
    auto F = generate_example(CurveContext::make(3, 3, 3), QQ);
    f.check(row_of(build_delta(F)) == testing::forms(QQ, {"s^4*t", "-s^5+t^5", "-s*t^4"}), "(3,3,3) delta");
    f.check(splitting_of_kernel(build_delta(F)) == SplittingType({1, 2}), "(3,3,3) T");
  });

  timed("cubic-334-extension", [&] {
    auto F = generate_example(CurveContext::make(3, 3, 3), QQ);
    auto step = extend_dimension(F, SplittingType({2, 2, 2}));
    auto expected_n1 = parse_sheaf_map(QQ,
                                      "map 3 x 3 : [4,4,4] <- [2,2,2]\n(1,2) : s^2\n(1,3) : t^2\n(2,2) : s*t\n"
                                      "(3,1) : s^2\n(3,2) : t^2\n");
    f.check(step.N1 == expected_n1, "(3,3,4) N1");
    f.check(row_of(step.delta_out) == testing::forms(QQ, {"s^4*t", "-s^5+t^5", "-s*t^4", "s^3*t^3"}),
            "(3,3,4) delta_out");
    f.check(splitting_of_kernel(build_delta(step.output_F)) == SplittingType({2, 2, 2}), "(3,3,4) T");
  });

  timed("quartic-444", [&] {
    auto F = generate_example(CurveContext::make(4, 4, 4), QQ);
    f.check(splitting_of_kernel(build_delta(F)) == SplittingType({1, 1, 2}), "(4,4,4) T");
  });

  timed("quartic-466", [&] {
    auto F = generate_example(CurveContext::make(4, 6, 6), QQ);
    f.check(splitting_of_kernel(build_delta(F)) == SplittingType({3, 3, 4, 4, 4}), "(4,6,6) T");
  });
}

// ---------------------------------------------------------------- 2

void quadric_sweep(Failures& f) {
  for (int e = 2; e <= 10; ++e)
    for (int n = std::max(e, 3); n <= 10; ++n) {
      auto F = generate_example(CurveContext::make(2, e, n, kPrime), Fp);
      auto expect = e % 2 == 0 ? repeated({{e, n - 1}}) : repeated({{e - 1, 1}, {e, n - 3}, {e + 1, 1}});
      auto t = splitting_of_kernel(build_delta(F));
      f.check(t == expect, describe(2, e, n) + " T = " + t.to_string());
      f.check(is_balanced(splitting_of_kernel(build_psi(F))), describe(2, e, n) + " N not balanced");
    }
}

// ---------------------------------------------------------------- 3

SplittingType cubic_closed_form(int e, int n) {
  if (n == e) return repeated({{e - 2, 1}, {e - 1, e - 2}});
  return repeated({{e - 1, e}, {e, n - e - 1}});
}

SplittingType quartic_closed_form(int e, int n) {
  if (n == e) return repeated({{e - 3, 2}, {e - 2, e - 3}});
  if (n <= 2 * e + 1) return repeated({{e - 2, 2 * e - n + 1}, {e - 1, 2 * (n - e - 1)}});
  return repeated({{e - 1, 2 * e}, {e, n - 1 - 2 * e}});
}

ExtensionStrategy schedule_step(int d, int e, int n) {
  if (d == 3) return n == e + 1 ? ExtensionStrategy::J1 : ExtensionStrategy::J0;
  if (n == e + 1) return ExtensionStrategy::J2;
  return n <= 2 * e + 1 ? ExtensionStrategy::J1 : ExtensionStrategy::J0;
}

void cubic_quartic_sweep(Failures& f) {
  for (int d = 3; d <= 4; ++d)
    for (int e = d; e <= 9; ++e)
      for (int n = e; n <= 9; ++n) {
        std::vector<ExtensionStrategy> steps;
        auto F = generate_example(CurveContext::make(d, e, n, kPrime), Fp, &steps);
        auto t = splitting_of_kernel(build_delta(F));
        auto expect = d == 3 ? cubic_closed_form(e, n) : quartic_closed_form(e, n);
        f.check(t == expect, describe(d, e, n) + " T = " + t.to_string() + ", expected " + expect.to_string());
        std::vector<ExtensionStrategy> want;
        for (int m = e + 1; m <= n; ++m) want.push_back(schedule_step(d, e, m));
        f.check(steps == want, describe(d, e, n) + " induction schedule differs");
        f.check(check_smooth_along_curve(F), describe(d, e, n) + " singular along the curve");
      }
}

// ---------------------------------------------------------------- 4

void general_degree(Failures& f, int d) {
  for (int n = 2 * d - 2; n <= 11; ++n) {
    auto F = generate_example(CurveContext::make(d, n, n, kPrime), Fp);
    auto t = splitting_of_kernel(build_delta(F));
    auto expect = repeated({{n + 1 - d, d - 2}, {n + 2 - d, n - d + 1}});
    if (t != expect) {
      // rational backstop
      auto Fq = generate_example(CurveContext::make(d, n, n), QQ);
      t = splitting_of_kernel(build_delta(Fq));
    }
    f.check(t == expect, describe(d, n, n) + " T = " + t.to_string());
  }
}

// ---------------------------------------------------------------- 5

void kernel_oracle(Failures& f) {
  auto rng = testing::make_rng(500);
  for (int i = 0; i < 200; ++i) {
    auto m = testing::random_surjective_map(Fp, rng, 6, 8);
    auto scan = splitting_of_kernel(m);
    auto k = kernel_matrix(m);
    std::string tag = "trial " + std::to_string(i);
    f.check(SplittingType(k.source().twists) == scan, tag + " kernel twists differ from the scan");
    f.check(compose(m, k).is_zero(), tag + " M*K != 0");
    f.check(full_rank_everywhere(k), tag + " K drops rank");
  }
}

// ---------------------------------------------------------------- 6

void euler_routes_agree(Failures& f) {
  auto rng = testing::make_rng(600);
  for (int i = 0; i < 30; ++i) {
    int d = testing::uniform(rng, 2, 4), e = testing::uniform(rng, 2, 6);
    auto ctx = CurveContext::make(d, e, testing::uniform(rng, std::max(3, e), 6), kPrime);
    auto F = testing::random_smooth_combination(ctx, Fp, rng);
    for (int m = -1; m <= 2; ++m) {
      auto r = euler_routes(F, m);
      f.check(r.agree(), ctx.to_string() + " m=" + std::to_string(m) + ": " + std::to_string(r.via_delta) + " vs " +
                             std::to_string(r.via_gradient));
    }
  }
}

// ---------------------------------------------------------------- 7

void specialization_order(Failures& f) {
  // parts bounded to [-8, 8] so each (rank, degree) class is finite
  for (int r = 1; r <= 5; ++r)
    for (int deg = -12; deg <= 12; ++deg) {
      auto cls = testing::all_splittings(r, deg, -8, 8);
      std::size_t size = cls.size(), words = (size + 63) / 64;
      std::vector<std::vector<std::uint64_t>> rel(size, std::vector<std::uint64_t>(words, 0));
      auto top = balanced_of(r, deg);
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
          if (specializes_to(cls[a], cls[b])) rel[a][b / 64] |= 1ULL << (b % 64);
      auto related = [&](std::size_t a, std::size_t b) { return (rel[a][b / 64] >> (b % 64)) & 1; };
      std::string where = "rank " + std::to_string(r) + " degree " + std::to_string(deg);
      for (std::size_t a = 0; a < size; ++a) {
        f.check(related(a, a), where + " not reflexive");
        bool dominates_all = true;
        for (std::size_t b = 0; b < size; ++b) {
          if (a != b && related(a, b) && related(b, a)) f.check(false, where + " not antisymmetric");
          dominates_all = dominates_all && related(a, b);
        }
        f.check(dominates_all == (cls[a] == top), where + " maximum is not the balanced type");
        // transitivity: everything below a descendant of a is below a
        std::vector<std::uint64_t> reach(words, 0);
        for (std::size_t b = 0; b < size; ++b)
          if (related(a, b))
            for (std::size_t w = 0; w < words; ++w) reach[w] |= rel[b][w];
        for (std::size_t w = 0; w < words; ++w)
          if (reach[w] & ~rel[a][w]) f.check(false, where + " not transitive");
      }
    }
}

void glue_and_interpolation(Failures& f) {
  auto rng = testing::make_rng(700);
  for (int i = 0; i < 200; ++i) {
    int r = testing::uniform(rng, 1, 8);
    auto a = balanced_of(r, testing::uniform(rng, -30, 30));
    auto b = balanced_of(r, static_cast<long long>(r) * testing::uniform(rng, -6, 6));
    f.check(is_balanced(glue_bound(a, b)), "glue " + a.to_json() + " " + b.to_json());
  }
  for (int d = 2; d <= 8; ++d)
    for (int n = 3; n <= 14; ++n)
      for (int e = 1; e <= n; ++e) {
        auto s = balanced_of(n - 1, static_cast<long long>(e) * (n + 1 - d));
        f.check(interpolation_count(s) == expected_max(d, e, n), "interpolation " + describe(d, e, n));
      }
}

// ---------------------------------------------------------------- 8

void quadric_interpolation(Failures& f) {
  for (int e = 2; e <= 9; ++e)
    for (int n = std::max(e, 3); n <= 10; ++n) {
      auto F = generate_example(CurveContext::make(2, e, n, kPrime), Fp);
      int count = interpolation_count(splitting_of_kernel(build_delta(F)));
      long long expect = expected_max(2, e, n);
      bool ok = e % 2 ? (count == e && expect == e + 1) : (count == e + 1 && expect == e + 1);
      f.check(ok, describe(2, e, n) + " count " + std::to_string(count) + " expected " + std::to_string(expect));
    }
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Failures&, std::vector<std::string>&)> body;
};

}  // namespace
}  // namespace tsplit

int main() {
  using namespace tsplit;
  std::vector<Criterion> criteria{
      {1, "worked examples over Q", 5.0, [](Failures& f, auto& notes) { worked_examples(f, notes); }},
      {2, "quadrics sweep 2<=e<=n<=10", 60.0, [](Failures& f, auto&) { quadric_sweep(f); }},
      {3, "cubics and quartics sweeps n<=9", 300.0, [](Failures& f, auto&) { cubic_quartic_sweep(f); }},
      {4, "general degree d=5,6, e=n<=11", 600.0,
       [](Failures& f, auto& notes) {
         for (int d = 5; d <= 6; ++d) {
           auto start = std::chrono::steady_clock::now();
           general_degree(f, d);
           double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
           notes.push_back("d=" + std::to_string(d) + " " + std::to_string(secs) + "s");
           f.check(secs < 300.0, "d=" + std::to_string(d) + " over time");
         }
       }},
      {5, "kernel matrix vs nullity scan, 200 maps", 600.0, [](Failures& f, auto&) { kernel_oracle(f); }},
      {6, "Euler routes, 30 combinations", 600.0, [](Failures& f, auto&) { euler_routes_agree(f); }},
      {7, "splitting algebra properties", 600.0,
       [](Failures& f, auto&) {
         specialization_order(f);
         glue_and_interpolation(f);
       }},
      {8, "quadric interpolation parity, e<=9", 600.0, [](Failures& f, auto&) { quadric_interpolation(f); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    std::vector<std::string> notes;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(f, notes);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) f.items.push_back("exceeded " + std::to_string(c.limit_seconds) + "s");
    bool ok = f.items.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s  (%.3fs)\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(), secs);
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    for (std::size_t i = 0; i < f.items.size() && i < 10; ++i) std::printf("    - %s\n", f.items[i].c_str());
    if (f.items.size() > 10) std::printf("    ... %zu more\n", f.items.size() - 10);
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS", failed, criteria.size());
  return failed ? 1 : 0;
}
