#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rdsym/closed_form.hpp"
#include "rdsym/random.hpp"
#include "rdsym/recurrence.hpp"

using namespace rdsym;

namespace {

CoefficientSequence c(Rational v) { return CoefficientSequence::constant(std::move(v)); }
std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational{1}); }

std::vector<oracle::Q> raw(const std::vector<Rational>& v) {
  std::vector<oracle::Q> out;
  for (const auto& x : v) out.push_back(x.raw());
  return out;
}

Singularity sixth_witness(const CoefficientSequence& A, const CoefficientSequence& B,
                          const std::vector<Rational>& init, std::size_t n) {
  try {
    (void)solve_sixth(A, B, SixthInit(init), n);
  } catch (const SingularError& e) {
    return e.where();
  }
  ADD_FAILURE() << "expected singular";
  return {};
}

}  // namespace

TEST(SolveSixth, Examples) {
  EXPECT_EQ(solve_sixth(c(1), c(1), SixthInit(ones(6)), 8), Rational(2, 3));
  EXPECT_EQ(solve_sixth(c(1), c(1), SixthInit(ones(6)), 6), Rational(1, 2));
  const std::vector<Rational> init{2, -3, Rational(1, 7), 5, 9, -1};
  EXPECT_EQ(solve_sixth(CoefficientSequence::parse("explicit:1"), c(4), SixthInit(init), 3),
            Rational{5});
}

TEST(SolveSixthX, Examples) {
  EXPECT_EQ(solve_sixth_x(c(1), c(1), SixthInit(ones(6)), 1), Rational(1, 2));
  EXPECT_THROW(solve_sixth_x(c(1), c(-1), SixthInit(ones(6)), 1), SingularError);
  EXPECT_EQ(solve_sixth_x(CoefficientSequence::parse("periodic:2,3"),
                          CoefficientSequence::parse("periodic:1,1"), SixthInit(ones(6)), 1),
            Rational(1, 3));
  EXPECT_THROW(solve_sixth_x(c(1), c(1), SixthInit(ones(6)), -6), OutOfRange);
  EXPECT_EQ(solve_sixth_x(c(1), c(1), SixthInit(ones(6)), -5), Rational{1});
}

TEST(SolveSixthTwoPeriodic, Examples) {
  const SixthInit one(ones(6));
  EXPECT_EQ(solve_sixth_two_periodic(1, 1, 1, 1, one, 6), Rational(1, 2));
  EXPECT_EQ(solve_sixth_two_periodic(2, 5, 1, 7, one, 6), Rational(1, 3));
  const SixthInit init({3, Rational(-1, 2), 4, 7, Rational(2, 9), 1});
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(solve_sixth_two_periodic(Rational(3, 4), -2, 5, Rational(1, 3), init, i), init.u(i));
}

TEST(SolveSixthConstant, Examples) {
  EXPECT_EQ(solve_sixth_constant(1, 1, SixthInit(ones(6)), 6), Rational(1, 2));

  // x_{-5} = 2 (Phi = 2) with Psi = 3 keeps both chains regular.
  const SixthInit x({2, 3, 1, 1, 1, 1});
  auto [x1, branch] = solve_sixth_constant_branch(-1, 1, x, 6);
  EXPECT_EQ(x1, Rational{2});
  EXPECT_EQ(branch, SolveBranch::constant_lambda_minus_one);
  EXPECT_EQ(solve_sixth_constant(-1, 1, x, 12), Rational{2});  // x_7 = x_{-5}

  // With every other initial value 1 the odd chain has Psi = 1 and breaks
  // at its first step (x_2, u-index 7).
  const auto w = sixth_witness(c(-1), c(1), {2, 1, 1, 1, 1, 1}, 20);
  EXPECT_EQ(w, (Singularity{7, 1, 1}));
  EXPECT_THROW(solve_sixth_constant(-1, 1, SixthInit({2, 1, 1, 1, 1, 1}), 12), SingularError);
  EXPECT_EQ(solve_sixth_constant(-1, 1, SixthInit({2, 1, 1, 1, 1, 1}), 6), Rational{2});

  try {
    (void)solve_sixth_constant(1, -1, SixthInit(ones(6)), 10);
    FAIL();
  } catch (const SingularError& e) {
    EXPECT_EQ(e.where().step, 1u);
    EXPECT_EQ(e.where().chain, 0);
    EXPECT_EQ(e.where().index, 6u);
  }
  EXPECT_EQ(solve_sixth_constant_branch(1, 1, SixthInit(ones(6)), 7).second,
            SolveBranch::constant_lambda_one);
  EXPECT_EQ(solve_sixth_constant_branch(3, 1, SixthInit(ones(6)), 7).second,
            SolveBranch::constant_lambda_other);
}

TEST(SolveFifth, Examples) {
  EXPECT_EQ(solve_fifth(1, 1, FifthInit(ones(5)), 5), Rational(1, 2));
  EXPECT_EQ(solve_fifth(2, 1, FifthInit(ones(5)), 5), Rational(1, 3));
  const std::vector<Rational> init{2, -3, Rational(1, 7), 5, 9};
  EXPECT_EQ(solve_fifth(Rational(5, 3), -4, FifthInit(init), 4), Rational{9});
  EXPECT_EQ(solve_fifth_x(1, 1, FifthInit(ones(5)), 1), Rational(1, 2));
  EXPECT_THROW(solve_fifth_x(1, -1, FifthInit(ones(5)), 1), SingularError);
  EXPECT_EQ(solve_fifth_x(-1, -1, FifthInit(ones(5)), 1), Rational(-1, 2));
  EXPECT_THROW(solve_fifth_x(1, 1, FifthInit(ones(5)), -5), OutOfRange);
}

TEST(Forbidden, SixthExamples) {
  EXPECT_TRUE(forbidden_sixth(c(1), c(1), SixthInit(ones(6)), 200).defined());
  const auto v = forbidden_sixth(c(1), c(-1), SixthInit(ones(6)), 6);
  ASSERT_FALSE(v.defined());
  EXPECT_EQ(v.witness->chain, 0);
  EXPECT_EQ(v.witness->theta_step(), 0u);
  EXPECT_TRUE(forbidden_sixth(c(1), c(-1), SixthInit(ones(6)), 5).defined());
  EXPECT_FALSE(forbidden_sixth(c(-1), c(1), SixthInit(ones(6)), 60).defined());
  EXPECT_TRUE(forbidden_sixth(c(-1), c(1), SixthInit({2, 2, 1, 1, 1, 1}), 300).defined());
}

TEST(Forbidden, FifthExamples) {
  EXPECT_TRUE(forbidden_fifth(1, 1, FifthInit(ones(5)), 200).defined());
  const auto v = forbidden_fifth(1, -1, FifthInit(ones(5)), 60);
  ASSERT_FALSE(v.defined());
  EXPECT_EQ(v.witness->step, 1u);
  EXPECT_EQ(v.witness->chain, 0);
  // Delta_0 = 1/2, Delta_1 = 2, Delta_2 = 4
  const FifthInit init({Rational(1, 2), 1, 1, 2, 2});
  EXPECT_EQ(init.delta(0), Rational(1, 2));
  EXPECT_TRUE(forbidden_fifth(-1, 1, init, 60).defined());
  EXPECT_FALSE(iterate(EquationSpec::fifth(-1, 1, init.values()), 61).singular());
}

TEST(SolveSixth, MatchesOracleProperty) {
  Sampler rng(61);
  for (int i = 0; i < 300; ++i) {
    const auto A = rng.sequence(60), B = rng.sequence(60);
    const auto init = rng.rationals(6);
    const auto t = iterate(EquationSpec::sixth(A, B, init), 61);
    const SixthOrderSolution sol(A, B, SixthInit(init), 60);
    for (std::size_t n = 0; n <= 60; ++n) {
      if (n < t.size()) {
        ASSERT_EQ(sol.value(n), t.values[n]);
      } else {
        ASSERT_THROW((void)sol.value(n), SingularError);
      }
    }
    if (t.singular()) {
      ASSERT_TRUE(sol.singularity());
      EXPECT_EQ(sol.singularity()->index, *t.singular_at);
    } else {
      EXPECT_FALSE(sol.singularity());
    }
  }
}

TEST(SolveFifth, MatchesOracleProperty) {
  Sampler rng(67);
  for (int i = 0; i < 300; ++i) {
    const Rational l = rng.rational(), m = rng.rational();
    const auto init = rng.rationals(5);
    const auto t = iterate(EquationSpec::fifth(l, m, init), 61);
    const FifthOrderSolution sol(l, m, FifthInit(init), 60);
    for (std::size_t n = 0; n <= 60; ++n) {
      if (n < t.size())
        ASSERT_EQ(sol.value(n), t.values[n]);
      else
        ASSERT_THROW((void)sol.value(n), SingularError);
    }
    EXPECT_EQ(sol.singularity().has_value(), t.singular());
    if (t.singular()) {
      EXPECT_EQ(sol.singularity()->index, *t.singular_at);
    }
  }
}

TEST(SolveFifth, CrossesLambdaOneSingularities) {
  // lambda = 1, mu = -1/2, Delta_0 = 1: E_0(s) = 1 - s/2 vanishes at s = 2.
  const std::vector<Rational> init{1, 1, 1, 3, 5};
  const auto t = iterate(EquationSpec::fifth(1, Rational(-1, 2), init), 40);
  ASSERT_TRUE(t.singular());
  const FifthOrderSolution sol(1, Rational(-1, 2), FifthInit(init), 39);
  EXPECT_EQ(sol.singularity()->index, *t.singular_at);
  EXPECT_EQ(sol.singularity()->chain, 0);
  EXPECT_EQ(sol.singularity()->step, 2u);
}

TEST(BranchCoherence, TwoPeriodicAndConstantAgreeWithGeneral) {
  Sampler rng(71);
  for (int i = 0; i < 200; ++i) {
    const Rational l = rng.rational(), m = rng.rational(), e = rng.rational(), z = rng.rational();
    const auto init = rng.rationals(6);
    const SixthInit si(init);
    const auto A = CoefficientSequence::periodic({l, m});
    const auto B = CoefficientSequence::periodic({e, z});
    const SixthOrderSolution general(A, B, si, 48);
    const SixthOrderSolution constant(c(l), c(e), si, 48);
    for (long x = -5; x <= 43; ++x) {
      const auto n = static_cast<std::size_t>(x + 5);
      if (!general.singularity() || n < general.singularity()->index) {
        ASSERT_EQ(solve_sixth_two_periodic(l, m, e, z, si, n), general.value(n));
        ASSERT_EQ(solve_sixth_x(A, B, si, x), general.value(n));
      } else {
        ASSERT_THROW(solve_sixth_two_periodic(l, m, e, z, si, n), SingularError);
      }
      if (!constant.singularity() || n < constant.singularity()->index)
        ASSERT_EQ(solve_sixth_constant(l, e, si, n), constant.value(n));
      else
        ASSERT_THROW(solve_sixth_constant(l, e, si, n), SingularError);
    }
  }
}

TEST(BranchCoherence, SignedConstantBranchesAgreeWithGeneral) {
  Sampler rng(73);
  for (const Rational& lambda : {Rational{1}, Rational{-1}, Rational{2}, Rational(-1, 3)})
    for (const Rational& eta : {Rational{1}, Rational{-1}, Rational(3, 2)})
      for (int i = 0; i < 25; ++i) {
        const SixthInit si(rng.rationals(6));
        const SixthOrderSolution ref(c(lambda), c(eta), si, 60);
        for (std::size_t n = 0; n <= 60; ++n) {
          if (!ref.singularity() || n < ref.singularity()->index)
            ASSERT_EQ(solve_sixth_constant(lambda, eta, si, n), ref.value(n));
          else
            ASSERT_THROW(solve_sixth_constant(lambda, eta, si, n), SingularError);
        }
      }
}

TEST(LambdaMinusOne, TwelvePeriodic) {
  Sampler rng(79);
  int done = 0;
  while (done < 50) {
    const auto init = rng.rationals(6);
    const SixthInit si(init);
    if (si.phi() == Rational{1} || si.psi() == Rational{1}) continue;
    ++done;
    const auto t = iterate(EquationSpec::sixth(c(-1), c(1), init), 61);
    ASSERT_FALSE(t.singular());
    for (std::size_t n = 0; n + 12 < t.size(); ++n) ASSERT_EQ(t.values[n + 12], t.values[n]);
  }
}

TEST(IndexShift, XMatchesU) {
  Sampler rng(83);
  for (int i = 0; i < 50; ++i) {
    const auto A = rng.sequence(50), B = rng.sequence(50);
    const auto init6 = rng.rationals(6);
    const auto init5 = rng.rationals(5);
    const Rational l = rng.rational(), m = rng.rational();
    for (long n = 1; n <= 30; ++n) {
      try {
        EXPECT_EQ(solve_sixth_x(A, B, SixthInit(init6), n),
                  solve_sixth(A, B, SixthInit(init6), static_cast<std::size_t>(n + 5)));
      } catch (const SingularError&) {
        EXPECT_THROW(solve_sixth(A, B, SixthInit(init6), static_cast<std::size_t>(n + 5)),
                     SingularError);
      }
      try {
        EXPECT_EQ(solve_fifth_x(l, m, FifthInit(init5), n),
                  solve_fifth(l, m, FifthInit(init5), static_cast<std::size_t>(n + 4)));
      } catch (const SingularError&) {
        EXPECT_THROW(solve_fifth(l, m, FifthInit(init5), static_cast<std::size_t>(n + 4)),
                     SingularError);
      }
    }
  }
}

TEST(PrintedForms, SixthConstantTranscriptionMatchesOracle) {
  Sampler rng(89);
  for (const long lambda : {1L, -1L, 2L, -3L})
    for (const long eta : {1L, -1L})
      for (int i = 0; i < 20; ++i) {
        const auto init = rng.rationals(6);
        const auto run = oracle::sixth([&](std::size_t) { return oracle::Q(lambda); },
                                       [&](std::size_t) { return oracle::Q(eta); }, raw(init), 55);
        for (long x = 1; x + 5 < static_cast<long>(run.u.size()); ++x) {
          const auto printed = oracle::sixth_x_printed(lambda, eta, raw(init), x);
          ASSERT_TRUE(printed.has_value());
          ASSERT_EQ(*printed, run.u[static_cast<std::size_t>(x + 5)]) << lambda << ' ' << eta << ' ' << x;
          ASSERT_EQ(solve_sixth_constant(lambda, eta, SixthInit(init), static_cast<std::size_t>(x + 5)).raw(),
                    *printed);
        }
      }
}

TEST(PrintedForms, FifthTranscriptionMatchesOracle) {
  Sampler rng(97);
  for (int i = 0; i < 200; ++i) {
    const Rational l = rng.rational(), m = rng.rational();
    const auto init = rng.rationals(5);
    const auto run = oracle::fifth(l.raw(), m.raw(), raw(init), 53);
    for (long x = 1; x + 4 < static_cast<long>(run.u.size()); ++x) {
      const auto printed = oracle::fifth_x_printed(l.raw(), m.raw(), raw(init), x);
      ASSERT_TRUE(printed.has_value());
      ASSERT_EQ(*printed, run.u[static_cast<std::size_t>(x + 4)]) << "x=" << x;
    }
  }
}
