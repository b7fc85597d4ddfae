#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wha/sources.hpp"

using namespace wha;

namespace {

// verification at `level` by the library, and the same verdict from the oracle
void expect_level(const WeakStructure& H, Level level, const std::string& what) {
    const VerificationReport r = verify(H, level);
    EXPECT_TRUE(r.pass()) << what << "\n" << first_failure_text(H, r);
    const oracle::Table t = oracle::read(H);
    for (AxiomId a : axioms_for(level)) EXPECT_TRUE(oracle::axiom(t, axiom_name(a))) << what << " " << axiom_name(a);
}

Vec e(std::size_t n, std::size_t i) { return Vec::basis(n, i); }

}  // namespace

TEST(TwoUnits, RandomSemigroupBases) {
    oracle::Rng r(101);
    for (int t = 0; t < 25; ++t) {
        const auto S = oracle::random_semigroup(r);
        const WeakStructure H = adjoin_two_units(oracle::semigroup_algebra(S));
        expect_level(H, Level::WeakBialgebra, "adjoin_two_units #" + std::to_string(t));
        EXPECT_EQ(H.dim(), S.size() + 2);
    }
}

TEST(TwoUnits, CounitValues) {
    const WeakStructure H = adjoin_two_units(cyclic_group_algebra(2));
    const std::size_t n = H.dim();
    EXPECT_EQ(counit(H, e(n, 0)), Scalar(2));  // eps(1)
    EXPECT_EQ(counit(H, e(n, 1)), Scalar(1));  // eps(e)
    for (std::size_t a = 2; a < n; ++a) {
        EXPECT_EQ(counit(H, e(n, a)), Scalar(1));
        // eps(a . 1) = eps(a) = 1, while eps(a) eps(1) = 2: eps is not multiplicative
        EXPECT_EQ(counit(H, multiply(H, e(n, a), e(n, 0))), Scalar(1));
        EXPECT_EQ(counit(H, e(n, a)) * counit(H, e(n, 0)), Scalar(2));
    }
    EXPECT_FALSE(residual(H, AxiomId::STRICT_EPS_MULT).pass());
    EXPECT_FALSE(residual(H, AxiomId::STRICT_DELTA_UNIT).pass());
}

TEST(TwoUnits, ZeroProductsAreRejected) {
    try {
        adjoin_two_units(null_algebra(1));
        FAIL() << "expected not-semigroup-basis";
    } catch (const MathError& ex) {
        EXPECT_EQ(ex.code(), "not-semigroup-basis");
    }
    BuildOptions off;
    off.require_semigroup_basis = false;
    const WeakStructure H = adjoin_two_units(null_algebra(1), off);
    EXPECT_FALSE(residual(H, AxiomId::WEAK_COUNIT_A).pass());
    EXPECT_FALSE(oracle::axiom(H, "WEAK_COUNIT_A"));
    RawAlgebra bad(2);
    bad.mult(0, 0, 1) = 1;
    bad.mult(1, 1, 0) = 1;  // e1 e1 = e2, e2 e2 = e1, others 0: not associative
    EXPECT_THROW(adjoin_two_units(bad), MathError);
}

TEST(Chain, RandomInputs) {
    oracle::Rng r(202);
    for (int t = 0; t < 25; ++t) {
        const std::size_t p = oracle::pick(r, 1, 4);
        const auto S = oracle::random_semigroup(r, 3);
        const WeakStructure H = chain_construction(p, oracle::semigroup_algebra(S));
        expect_level(H, Level::WeakBialgebra, "chain #" + std::to_string(t));
        // eps(e_i) = p - i + 1 for the 1-based chain index i
        for (std::size_t i = 1; i <= p; ++i) EXPECT_EQ(counit(H, e(H.dim(), i - 1)), Scalar(static_cast<long>(p - i + 1)));
        for (std::size_t f = p; f < H.dim(); ++f) EXPECT_EQ(counit(H, e(H.dim(), f)), Scalar(1));
    }
}

TEST(MaxAlgebra, WeakHopfForSmallN) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const WeakStructure H = max_algebra_whopf(n);
        expect_level(H, Level::WeakHopf, "max " + std::to_string(n));
        EXPECT_EQ(*H.antipode, Mat::identity(n));
    }
    EXPECT_THROW(max_algebra_whopf(1), InputError);
}

TEST(AdjoinUnit, RandomBialgebras) {
    oracle::Rng r(303);
    for (int t = 0; t < 22; ++t) {
        WeakStructure B = oracle::monoid_bialgebra(oracle::with_identity(oracle::random_semigroup(r, 3)));
        B.antipode.reset();
        if (t % 2 == 1) B = transport(B, BasisChange::from(oracle::random_invertible(r, B.dim())));
        ASSERT_TRUE(satisfies(B, Level::StrictBialgebra));
        const WeakStructure H = adjoin_unit_to_bialgebra(B);
        expect_level(H, Level::WeakBialgebra, "adjoin bialgebra #" + std::to_string(t));
        EXPECT_EQ(H.dim(), B.dim() + 1);
        EXPECT_EQ(counit(H, H.alg.unit), Scalar(2));
    }
}

TEST(AdjoinUnit, RandomHopfAlgebras) {
    oracle::Rng r(404);
    for (int t = 0; t < 22; ++t) {
        WeakStructure B = t % 5 == 4 ? sweedler4() : oracle::monoid_bialgebra(oracle::random_group(r));
        if (t % 2 == 1) B = transport(B, BasisChange::from(oracle::random_invertible(r, B.dim())));
        const WeakStructure H = adjoin_unit_to_hopf(B);
        expect_level(H, Level::WeakHopf, "adjoin hopf #" + std::to_string(t));
        EXPECT_EQ(H.dim(), B.dim() + 1);
    }
}

TEST(AdjoinUnit, PreconditionsAreChecked) {
    EXPECT_THROW(adjoin_unit_to_bialgebra(sweedler5()), MathError);
    WeakStructure B = sweedler4();
    B.antipode.reset();
    EXPECT_THROW(adjoin_unit_to_hopf(B), MathError);
}

TEST(TwoUnitVariants, RandomBialgebras) {
    oracle::Rng r(505);
    for (int t = 0; t < 22; ++t) {
        WeakStructure B = oracle::monoid_bialgebra(oracle::with_identity(oracle::random_semigroup(r, 3)));
        if (t % 2 == 1) B = transport(B, BasisChange::from(oracle::random_invertible(r, B.dim())));
        expect_level(two_unit_variant_a(B), Level::WeakBialgebra, "variant a #" + std::to_string(t));
        expect_level(two_unit_variant_b(B), Level::WeakBialgebra, "variant b #" + std::to_string(t));
        EXPECT_EQ(two_unit_variant_a(B).dim(), B.dim() + 2);
    }
}

TEST(TwoUnitVariants, AntipodeOnlyForVariantB) {
    oracle::Rng r(606);
    for (int t = 0; t < 20; ++t) {
        WeakStructure B = t % 4 == 3 ? sweedler4() : oracle::monoid_bialgebra(oracle::random_group(r));
        if (t % 2 == 1) B = transport(B, BasisChange::from(oracle::random_invertible(r, B.dim())));
        expect_level(two_unit_variant_b(B, true), Level::WeakHopf, "variant b hopf #" + std::to_string(t));
        // S(1) = 1, S(e) = e does not make variant a weak Hopf: at x = 1, 1_(1) S(1_(2)) = e
        const WeakStructure A = two_unit_variant_a(B, true);
        EXPECT_FALSE(residual(A, AxiomId::ANTIPODE_1).pass());
        EXPECT_FALSE(oracle::axiom(A, "ANTIPODE_1"));
        Tensor2 d = comultiply(A, A.alg.unit);
        Vec lhs(A.dim());
        for (std::size_t p = 0; p < A.dim(); ++p)
            for (std::size_t q = 0; q < A.dim(); ++q)
                if (!d(p, q).is_zero()) lhs += d(p, q) * multiply(A, e(A.dim(), p), apply_antipode(A, e(A.dim(), q)));
        EXPECT_EQ(lhs, e(A.dim(), 1));
    }
}

TEST(Taft, DimensionsAndLevels) {
    for (std::size_t n : {2u, 3u}) {
        const WeakStructure T = taft_hopf(n);
        EXPECT_EQ(T.dim(), n * n);
        EXPECT_TRUE(satisfies(T, Level::StrictHopf)) << n;
        const WeakStructure W = taft_weak_hopf(n);
        EXPECT_EQ(W.dim(), n * n + 1);
        expect_level(W, Level::WeakHopf, "taft weak " + std::to_string(n));
        EXPECT_EQ(W.conductor, static_cast<int>(n));
    }
}

TEST(Sweedler, FiveDimensionalFlags) {
    const WeakStructure H = sweedler5();
    expect_level(H, Level::WeakHopf, "sweedler5");
    EXPECT_EQ(H.dim(), 5u);
    const auto inv = oracle::invariants(H);
    EXPECT_FALSE(inv.commutative);
    EXPECT_FALSE(inv.cocommutative);
    EXPECT_EQ(sweedler5(), adjoin_unit_to_hopf(sweedler4()));
}

TEST(OrthogonalIdempotents, ValidOnlyUpToThree) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 2; k <= n; ++k) {
            const WeakStructure H = orthogonal_idempotents(n, k);
            const bool ok = satisfies(H, Level::WeakBialgebra);
            EXPECT_EQ(ok, n <= 3) << n << " " << k;
            bool o = true;
            for (AxiomId a : axioms_for(Level::WeakBialgebra)) o = o && oracle::axiom(H, axiom_name(a));
            EXPECT_EQ(ok, o) << n << " " << k;
        }
}

TEST(WeakFromIdempotent, RelativeUnit) {
    // Z/2 with two units: e is a unit for span{e, g0, g1}, g1 g1 = g0 is not idempotent
    const WeakStructure H = weak_from_idempotent(adjoin_two_units(cyclic_group_algebra(2)).alg, e(4, 1));
    expect_level(H, Level::WeakBialgebra, "weak_from_idempotent");
    EXPECT_EQ(H, adjoin_two_units(cyclic_group_algebra(2)));
    try {
        weak_from_idempotent(adjoin_two_units(cyclic_group_algebra(2)).alg, e(4, 3));
        FAIL();
    } catch (const MathError& ex) {
        EXPECT_EQ(ex.code(), "not-idempotent");
    }
}

TEST(Sources, ConstructByName) {
    for (const auto& info : construction_names()) {
        ConstructRequest q;
        q.name = info.name;
        if (info.name == "adjoin-two-units" || info.name == "chain") q.base = "zmod:2";
        if (info.name == "weak-from-idempotent") {
            q.base = "max:3";
            q.idempotent = 2;
        }
        if (info.name == "adjoin-unit-bialgebra" || info.name == "adjoin-unit-hopf" || info.name == "variant-a" || info.name == "variant-b")
            q.base = "group:2";
        if (info.name == "orthogonal-idempotents") q.split = 2;
        q.n = info.name == "taft-hopf" || info.name == "taft-weak-hopf" ? 2 : 3;
        if (info.name == "variant-b") q.antipode = true;
        Built b;
        try {
            b = construct(q);
        } catch (const Error& ex) {
            ADD_FAILURE() << info.name << ": " << ex.what();
            continue;
        }
        EXPECT_TRUE(satisfies(b.structure, b.promised)) << info.name;
    }
    EXPECT_THROW(construct({"no-such", 1, 0, 0, "", false, false}), InputError);
    EXPECT_THROW(resolve_structure("taft:x"), InputError);
}
