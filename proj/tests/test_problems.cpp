#include "tfcdr/caputo.hpp"
#include "tfcdr/config.hpp"
#include "tfcdr/error.hpp"
#include "tfcdr/expr.hpp"
#include "tfcdr/problem.hpp"
#include "tfcdr/spatial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

using namespace tfcdr;

namespace {

constexpr double pi = std::numbers::pi;

HalfStepHistory exact_history(const Problem& prob, const GridSpec& g) {
    HalfStepHistory h(g);
    std::vector<double> v(g.points());
    for (std::size_t n = 0; n <= 2 * g.N(); ++n) {
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (*prob.exact)(g.x(j), g.t_half(n));
        h.append(v);
    }
    return h;
}

} // namespace

TEST(Examples, ExactValues) {
    EXPECT_DOUBLE_EQ((*example1(0.5).exact)(pi / 2, 1.0), 1.0);
    EXPECT_DOUBLE_EQ((*example2(0.5).exact)(0.5, 1.0), 1.0);
}

TEST(Examples, SourceVanishesAtTimeZero) {
    for (double lam : {0.1, 0.5, 0.9}) {
        for (double x : {0.0, 0.3, 0.8}) {
            EXPECT_EQ(example1(lam).s(x, 0.0), 0.0);
            EXPECT_EQ(example2(lam).s(x, 0.0), 0.0);
        }
    }
}

TEST(Examples, ReactionVanishesAtQuarterPi) {
    EXPECT_NEAR(example2(0.5).g(0.4, pi / 4), 0.0, 1e-15);
}

TEST(Examples, ManufacturedResidualIsSmall) {
    // cD^λ u from the quadrature oracle, spatial derivatives by hand.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ux(0.0, 1.0), ut(0.05, 1.2);
    for (double lam : {0.3, 0.66, 0.9}) {
        const Problem e1 = example1(lam), e2 = example2(lam);
        for (int n = 0; n < 20; ++n) {
            const double x = ux(rng), t = ut(rng);
            {
                const double sx = std::sin(x), cx = std::cos(x);
                const auto c = caputo_quadrature_oracle([&](double s) { return s * sx; }, [&](double) { return sx; }, lam, t);
                const double r = c.value - e1.q(t) * (-t * sx) + e1.p(t) * (t * cx) + e1.g(x, t) * t * sx - e1.s(x, t);
                EXPECT_LE(std::abs(r), 1e-6) << "example1 x=" << x << " t=" << t;
            }
            {
                const double sx = std::sin(pi * x);
                const auto c = caputo_quadrature_oracle([&](double s) { return s * s * sx; }, [&](double s) { return 2 * s * sx; }, lam, t);
                const double u = t * t * sx;
                const double r = c.value - e2.q(t) * (-pi * pi * u) + e2.g(x, t) * u - e2.s(x, t);
                EXPECT_LE(std::abs(r), 1e-6) << "example2 x=" << x << " t=" << t;
            }
        }
    }
}

TEST(Examples, SignConditionsHoldOnExtendedDomain) {
    for (double lam : {0.2, 0.9}) {
        for (const Problem& prob : {example1(lam), example2(lam)}) {
            EXPECT_NO_THROW(validate(prob));
            const auto b = sample_coefficient_bounds(prob, prob.T + 0.2);
            EXPECT_GT(b.q_min, 0.0);
            EXPECT_GE(b.p_min, 0.0);
            EXPECT_GE(b.g_min, 0.0);
        }
    }
}

TEST(Validate, RejectsBadProblems) {
    Problem neg = example1(0.5);
    neg.q = [](double t) { return 0.5 - t; };
    EXPECT_THROW(validate(neg), ContractError);

    Problem no_bc = example1(0.5);
    no_bc.boundary = nullptr;
    EXPECT_THROW(validate(no_bc), ContractError);

    Problem mismatch = example2(0.5);
    mismatch.psi1 = [](double x) { return 1e-9 * x; };
    EXPECT_THROW(validate(mismatch), ContractError);
}

TEST(ErrorVsExact, ExactHistoryHasZeroError) {
    const Problem prob = example2(0.5);
    const GridSpec g(16, 8, 1.0, 1.0);
    const auto e = error_vs_exact(exact_history(prob, g), prob);
    EXPECT_LE(e.linf_l2, 1e-14);
    EXPECT_LE(e.l2_l2, 1e-14);
}

TEST(ErrorVsExact, ConstantOffsetOnInterior) {
    const Problem prob = example1(0.5);
    const std::size_t M = 16;
    const GridSpec g(M, 8, 1.0, 1.0);
    const auto exact = exact_history(prob, g);
    const double c = -0.037;
    HalfStepHistory shifted(g);
    for (std::size_t n = 0; n < exact.size(); ++n) {
        const auto u = exact.level(HalfIndex::from_twice(n));
        std::vector<double> v(u.begin(), u.end());
        for (std::size_t j = 1; j < M; ++j) v[j] += c;
        shifted.append(v);
    }
    const auto e = error_vs_exact(shifted, prob);
    EXPECT_NEAR(e.linf_l2, std::abs(c) * std::sqrt((M - 1) * g.h()), 1e-15);
    // Every one of the 2N half levels carries the same error.
    EXPECT_NEAR(e.l2_l2, std::abs(c) * std::sqrt((M - 1) * g.h()), 1e-15);
}

TEST(ErrorVsExact, NeedsExactSolution) {
    Problem prob = example1(0.5);
    prob.exact.reset();
    const GridSpec g(8, 2, 1.0, 1.0);
    HalfStepHistory h(g);
    h.append(std::vector<double>(9, 0.0));
    EXPECT_THROW(error_vs_exact(h, prob), ContractError);
    EXPECT_THROW(sample_exact(h, prob), ContractError);
}

TEST(Expr, Arithmetic) {
    EXPECT_DOUBLE_EQ(Expr::compile("1 + 2*3", 0.5)(0, 0), 7.0);
    EXPECT_DOUBLE_EQ(Expr::compile("2^3^2", 0.5)(0, 0), 512.0);
    EXPECT_DOUBLE_EQ(Expr::compile("-2^2", 0.5)(0, 0), -4.0);
    EXPECT_DOUBLE_EQ(Expr::compile("(1 - x) / 4", 0.5)(0.2, 0), 0.2);
    EXPECT_DOUBLE_EQ(Expr::compile("1.5e-1 * t", 0.5)(0, 2), 0.3);
}

TEST(Expr, FunctionsAndConstants) {
    const auto e = Expr::compile("t^(1-lambda)/gamma(2-lambda)*sin(x) + t*(sin(x)+cos(x))", 0.9);
    EXPECT_TRUE(e.uses_x());
    const double x = 0.4, t = 0.7;
    EXPECT_NEAR(e(x, t), example1(0.9).s(x, t), 1e-14 * std::abs(e(x, t)));
    EXPECT_NEAR(Expr::compile("exp(log(3)) + sqrt(16) + pi", 0)(0, 0), 7.0 + pi, 1e-14);
    EXPECT_FALSE(Expr::compile("exp(t)", 0.5).uses_x());
}

TEST(Expr, ErrorsNameTheColumn) {
    try {
        Expr::compile("1 + * 2", 0.5);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
    }
    EXPECT_THROW(Expr::compile("foo(x)", 0.5), ConfigError);
    EXPECT_THROW(Expr::compile("(x + 1", 0.5), ConfigError);
    EXPECT_THROW(Expr::compile("y", 0.5), ConfigError);
    EXPECT_THROW(Expr::compile("", 0.5), ConfigError);
}

TEST(Config, ParsesKeysAndComments) {
    const auto cfg = ConfigFile::parse("# comment\n\nname = demo\nT = 2  \n");
    EXPECT_EQ(*cfg.get("name"), "demo");
    EXPECT_EQ(*cfg.get("T"), "2");
    EXPECT_FALSE(cfg.get("L1").has_value());
}

TEST(Config, RejectsMalformedInput) {
    EXPECT_THROW(ConfigFile::parse("name demo\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("colour = red\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("T = 1\nT = 2\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("T =\n"), ConfigError);
    EXPECT_THROW(ConfigFile::load("/nonexistent/problem.cfg"), ConfigError);
}

TEST(Config, ExampleTwoFromExpressionsAgrees) {
    const double lam = 0.66;
    const auto cfg = ConfigFile::parse(
        "name = ex2\n"
        "q = exp(t)\n"
        "p = 0\n"
        "g = 1 - sin(2*t)\n"
        "s = (pi^2*t^2*exp(t) + t^2*(1 - sin(2*t)) + 2*t^(2-lambda)/gamma(3-lambda)) * sin(pi*x)\n"
        "psi1 = 0\n"
        "exact = t^2*sin(pi*x)\n");
    const Problem a = problem_from_config(cfg, lam);
    const Problem b = example2(lam);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 50; ++n) {
        const double x = u(rng), t = 1.2 * u(rng);
        const auto rel = [](double v, double w) { return std::abs(v - w) / std::max(std::abs(w), 1e-300); };
        EXPECT_LE(rel(a.s(x, t), b.s(x, t)), 1e-14);
        EXPECT_LE(rel(a.q(t), b.q(t)), 1e-14);
        EXPECT_LE(std::abs(a.boundary(x, t) - b.boundary(x, t)), 1e-15);
    }
    EXPECT_NO_THROW(validate(a));
}

TEST(Config, SeparateBoundarySides) {
    const auto cfg = ConfigFile::parse(
        "q = 1\np = 0\ng = 0\ns = 0\npsi1 = x\nL1 = 2\n"
        "boundary_left = 1 + t\nboundary_right = -t\n");
    const Problem prob = problem_from_config(cfg, 0.5);
    EXPECT_EQ(prob.L1, 2.0);
    EXPECT_EQ(prob.boundary(0.1, 3.0), 4.0);
    EXPECT_EQ(prob.boundary(1.9, 3.0), -3.0);
}

TEST(Config, ProblemErrors) {
    const std::string base = "p = 0\ng = 0\ns = 0\npsi1 = 0\n";
    EXPECT_THROW(problem_from_config(ConfigFile::parse(base + "q = 1 + x\nboundary = 0\n"), 0.5), ConfigError);
    EXPECT_THROW(problem_from_config(ConfigFile::parse(base + "q = 1\n"), 0.5), ConfigError);
    EXPECT_THROW(problem_from_config(ConfigFile::parse("q = 1\nboundary = 0\n"), 0.5), ConfigError);
    EXPECT_THROW(problem_from_config(ConfigFile::parse(base + "q = 1\nboundary = 0\nboundary_left = 1\n"), 0.5),
                 ConfigError);
}

TEST(Config, ResolveProblemByPath) {
    const auto path = std::filesystem::temp_directory_path() / "tfcdr_resolve_test.cfg";
    {
        std::ofstream out(path);
        out << "name = heat\nq = 1\np = 0\ng = 0\ns = 0\npsi1 = sin(pi*x)\nboundary = 0\n";
    }
    const Problem prob = resolve_problem(path.string(), 0.5);
    EXPECT_EQ(prob.name, "heat");
    EXPECT_EQ(resolve_problem("example1", 0.5).name, "example1");
    std::filesystem::remove(path);
    EXPECT_THROW(resolve_problem(path.string(), 0.5), ConfigError);
}
