#include "effhom/smith.hpp"

#include "oracles/bareiss.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace effhom;

namespace {

bool isDiagonal(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    return true;
}

void expectSmithForm(const IntMatrix& a) {
    const SNFResult r = smithNormalForm(a);
    SCOPED_TRACE(a.toString());
    EXPECT_EQ(r.U * a * r.V, r.D);
    EXPECT_TRUE(isDiagonal(r.D));
    EXPECT_EQ(abs(oracle::determinant(r.U)), 1);
    EXPECT_EQ(abs(oracle::determinant(r.V)), 1);

    const auto& f = r.invariantFactors;
    for (std::size_t k = 0; k < f.size(); ++k) {
        EXPECT_GT(f[k], 0);
        EXPECT_EQ(r.D(k, k), f[k]);
        if (k + 1 < f.size())
            EXPECT_EQ(f[k + 1] % f[k], 0);
    }
    for (std::size_t k = f.size(); k < std::min(a.rows(), a.cols()); ++k)
        EXPECT_EQ(r.D(k, k), 0);

    // d_1 ... d_k is the gcd of the k x k minors.
    EXPECT_EQ(r.rank(), oracle::rankByMinors(a));
    Coefficient prod = 1;
    for (std::size_t k = 0; k < f.size(); ++k) {
        prod *= f[k];
        if (k == 0 || k + 1 == f.size())
            EXPECT_EQ(prod, oracle::minorGcd(a, k + 1)) << "k=" << k + 1;
    }
}

} // namespace

TEST(Smith, SmallExample) {
    const SNFResult r = smithNormalForm(IntMatrix{{2, 4}, {6, 8}});
    EXPECT_EQ(r.invariantFactors, (std::vector<Coefficient>{2, 4}));
    expectSmithForm(IntMatrix{{2, 4}, {6, 8}});
}

TEST(Smith, ZeroAndIdentity) {
    EXPECT_TRUE(smithNormalForm(IntMatrix(3, 2)).invariantFactors.empty());
    EXPECT_EQ(smithNormalForm(IntMatrix::identity(3)).invariantFactors,
              (std::vector<Coefficient>{1, 1, 1}));
    EXPECT_EQ(smithNormalForm(IntMatrix(0, 0)).rank(), 0u);
}

TEST(Smith, NonDividingPivotIsRepaired) {
    const SNFResult r = smithNormalForm(IntMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(r.invariantFactors, (std::vector<Coefficient>{1, 6}));
    expectSmithForm(IntMatrix{{2, 0}, {0, 3}});
    expectSmithForm(IntMatrix{{4, 0, 0}, {0, 6, 0}, {0, 0, 10}});
}

TEST(Smith, RectangularAndNegative) {
    expectSmithForm(IntMatrix{{-3, 5, 7}});
    expectSmithForm(IntMatrix{{0}, {-4}, {6}});
    expectSmithForm(IntMatrix{{0, 0, 2}, {0, 0, 1}});
}

TEST(SmithProperties, RandomMatrices) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<long long> entry(-50, 50);
    std::bernoulli_distribution sparse(0.3);
    for (int n = 0; n < 100; ++n) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = sparse(rng) ? 0 : entry(rng);
        // Low-rank cases: copy a row scaled.
        if (n % 4 == 0 && a.rows() > 1)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(a.rows() - 1, j) = 3 * a(0, j);
        expectSmithForm(a);
    }
}
