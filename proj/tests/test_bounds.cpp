#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "special_locus/bounds.hpp"

using namespace special_locus;

namespace {

HeightValue log_height(long n) { return HeightValue::log_of(BigInt(n)); }

CurveParams params(long d, long d1, long d2, HeightValue h) {
  CurveParams p;
  p.d = d;
  p.delta1 = d1;
  p.delta2 = d2;
  p.height = std::move(h);
  return p;
}

}  // namespace

TEST(TheoremBounds, Examples) {
  const BoundReport flat = theorem_bounds(params(1, 1, 1, HeightValue::exact_zero()));
  EXPECT_TRUE(oracle::agrees(flat.c, "132065918850.77170803749203440972832424521532487007", 40));
  EXPECT_TRUE(oracle::agrees(flat.disc_bound, "11436265541697533478320893.497831735912623704114689", 40));
  EXPECT_TRUE(oracle::agrees(flat.order_bound, "280814920311806.36396834543861429443621786237112175", 40));

  const BoundReport k = theorem_bounds(params(1, 1, 1, log_height(1728)));
  EXPECT_TRUE(oracle::agrees(k.c, "984514439887.93512332589132235709481196114616898873", 40));

  const BoundReport wide = theorem_bounds(params(2, 1, 2, log_height(3)));
  EXPECT_TRUE(oracle::agrees(wide.c, "144589271200209.69988426841886921939361486862343134", 40));
  EXPECT_TRUE(oracle::agrees(wide.disc_bound, "1389051620139697448217771417879.2794620139621081577", 40));
}

TEST(TheoremBounds, RationalCurvesIgnoreDelta1) {
  for (long d1 = 1; d1 <= 6; ++d1) {
    const BoundReport r = theorem_bounds(params(1, d1, 2, log_height(7)));
    const BoundReport base = theorem_bounds(params(1, 1, 2, log_height(7)));
    EXPECT_TRUE(r.c.overlaps(base.c) && base.c.overlaps(r.c)) << d1;
  }
}

TEST(TheoremBounds, MonotoneInEveryArgument) {
  const IntervalReal base = theorem_bounds(params(2, 2, 2, log_height(50))).c;
  EXPECT_TRUE(base.certainly_less(theorem_bounds(params(3, 2, 2, log_height(50))).c));
  EXPECT_TRUE(base.certainly_less(theorem_bounds(params(2, 3, 2, log_height(50))).c));
  EXPECT_TRUE(base.certainly_less(theorem_bounds(params(2, 2, 3, log_height(50))).c));
  EXPECT_TRUE(base.certainly_less(theorem_bounds(params(2, 2, 2, log_height(51))).c));
}

TEST(TheoremBounds, RejectsInvalidParameters) {
  EXPECT_THROW(theorem_bounds(params(0, 1, 1, HeightValue::exact_zero())), DomainError);
  EXPECT_THROW(theorem_bounds(params(1, 0, 1, HeightValue::exact_zero())), DomainError);
  EXPECT_THROW(theorem_bounds(params(1, 1, 0, HeightValue::exact_zero())), DomainError);
  HeightValue negative{IntervalReal::from_int(-1L)};
  EXPECT_THROW(theorem_bounds(params(1, 1, 1, negative)), DomainError);
}

TEST(BakerWustholz, Examples) {
  EXPECT_TRUE(oracle::agrees(baker_wustholz_constant(2, 1), "1255940636.5488819676622116417749428308640679667166", 40));
  EXPECT_TRUE(oracle::agrees(baker_wustholz_constant(2, 2), "30142575277.173167223893079402598627940737631201199", 40));
  EXPECT_TRUE(oracle::agrees(baker_wustholz_constant(1, 1), "817669.68525317836436341903761389507217712758249781", 40));
}

TEST(DistanceConstants, Examples) {
  EXPECT_TRUE(oracle::agrees(distance_constant(), "2846187641.7976133740794729025015544460831404705029", 40));
  EXPECT_TRUE(oracle::agrees(mahler_constant_c2(), "16424723191.04348065064094116315753420085298101438", 40));
  EXPECT_TRUE(mahler_constant_c1().certainly_less(mahler_constant_c2()));
}

TEST(DistanceRootOfUnity, Examples) {
  EXPECT_TRUE(oracle::agrees(distance_root_of_unity_bound(1, HeightValue::exact_zero(), OrderN(2)),
                             "-10939675445.427213034832386748662917177743977467119", 40));
  EXPECT_TRUE(oracle::agrees(distance_root_of_unity_bound(2, log_height(2), OrderN(12)),
                             "-235309957451.49941867971691957319978023465824811973", 40));
}

TEST(DistanceRootOfUnity, OrdersOneAndTwoAgree) {
  const IntervalReal a = distance_root_of_unity_bound(3, log_height(5), OrderN(1));
  const IntervalReal b = distance_root_of_unity_bound(3, log_height(5), OrderN(2));
  EXPECT_TRUE(a.overlaps(b) && b.overlaps(a));
  EXPECT_TRUE(distance_root_of_unity_bound(3, log_height(5), OrderN(3)).certainly_less(b));
}

TEST(PolyRootOfUnity, Examples) {
  EXPECT_TRUE(oracle::agrees(poly_root_of_unity_bound(1, HeightValue::exact_zero(), OrderN(2), FinalForm{}),
                             "-45770559649.735471022168685181754142499675109523574", 40));
  EXPECT_TRUE(oracle::agrees(
      poly_root_of_unity_bound(2, HeightValue::exact_zero(), OrderN(3), MahlerForm{IntervalReal::from_int(1L)}),
      "-104033852144.37673639743626132296246585246577562321", 40));
  const IntervalReal zero = poly_root_of_unity_bound(0, log_height(9), OrderN(7), FinalForm{});
  EXPECT_TRUE(zero.is_point() && zero.contains(BigRat(0)));
  EXPECT_THROW(poly_root_of_unity_bound(2, HeightValue::exact_zero(), OrderN(3),
                                        MahlerForm{IntervalReal::from_rat(BigRat(1, 2))}),
               DomainError);
}

TEST(RootSeparation, Examples) {
  const IntervalReal golden = (IntervalReal::from_int(1L) + sqrt(IntervalReal::from_int(5L))) / IntervalReal::from_int(2L);
  EXPECT_TRUE(oracle::agrees(root_separation_bound(2, golden), "0.26761656732981744895647738228456590548626455643515", 40));
  EXPECT_TRUE(oracle::agrees(root_separation_bound(2, IntervalReal::from_int(2L)),
                             "0.2165063509461096616909307926882340458678506567263", 40));
  const IntervalReal ninth = root_separation_bound(3, IntervalReal::from_int(1L));
  EXPECT_TRUE(ninth.contains(BigRat(1, 9)));
  EXPECT_LT(mpfr_cmp_d(ninth.width().get(), 1e-60), 0);
  EXPECT_THROW(root_separation_bound(1, IntervalReal::from_int(1L)), DomainError);
}

TEST(ClassNumberBound, Examples) {
  EXPECT_TRUE(oracle::agrees(class_number_upper_bound(Discriminant(-4)),
                             "2.1557819453457690597368958354521056602064361608423", 40));
  EXPECT_TRUE(oracle::agrees(class_number_upper_bound(Discriminant(-3)),
                             "1.7083544904517799657740356036110680245639669418899", 40));
  EXPECT_TRUE(oracle::agrees(class_number_upper_bound(Discriminant(-23)),
                             "7.8396430614263299110308174725835735278101451568945", 40));
}

TEST(AuxiliarySolve, Examples) {
  struct Row {
    const char* a;
    const char* p;
    const char* q;
  };
  for (const Row& r : {Row{"10001", "184227.22822026427392023479430633899604528069615436",
                           "5651249.7125558009351759382160688477811607863040349"},
                       Row{"100000", "2302585.0929940456840179914546843642076011014886288",
                           "97162731.543033517274758129513041727625086657929534"},
                       Row{"1000000", "27631021.115928548208215897456212370491213217863545",
                           "1503541568.505940228673080051255469633060489882817"}}) {
    const AuxSolution s = auxiliary_solve(IntervalReal::from_rat(oracle::decimal(r.a)));
    EXPECT_TRUE(oracle::agrees(s.p_bound, r.p, 40)) << r.a;
    EXPECT_TRUE(oracle::agrees(s.q_bound, r.q, 40)) << r.a;
  }
  EXPECT_THROW(auxiliary_solve(IntervalReal::from_int(10000L)), DomainError);
  EXPECT_THROW(auxiliary_solve(IntervalReal::from_int(5L)), DomainError);
}

TEST(AuxiliarySolve, MonotoneInA) {
  AuxSolution prev = auxiliary_solve(IntervalReal::from_int(10001L));
  for (long a = 20000; a <= 10000000; a *= 2) {
    const AuxSolution s = auxiliary_solve(IntervalReal::from_int(a));
    EXPECT_TRUE(prev.p_bound.certainly_less(s.p_bound)) << a;
    EXPECT_TRUE(prev.q_bound.certainly_less(s.q_bound)) << a;
    prev = s;
  }
}

TEST(ProofConstants, Examples) {
  const ProofConstants one = assemble_proof_constants(1, HeightValue{IntervalReal::from_int(1L)});
  EXPECT_TRUE(oracle::agrees(one.a, "84075775201.187608834212814177367439192803711676053", 40));
  const ProofConstants two = assemble_proof_constants(2, HeightValue::exact_zero());
  EXPECT_TRUE(oracle::agrees(two.a, "1513363953621.3769590158306551926139054704668101689", 40));
  EXPECT_TRUE(oracle::agrees(one.p_of(Discriminant(-163)), "48.766902940959375335408764830458766676250477466274", 40));
  EXPECT_TRUE(oracle::agrees(two.p_of(Discriminant(-163)), "97.533805881918750670817529660917533352500954932549", 40));
  EXPECT_TRUE(one.q_of(OrderN(17)).contains(BigRat(34)));
}

TEST(ProofConstants, BelowTheoremConstant) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const long d2 = 1 + static_cast<long>(rng() % 6);
    const long d1 = 1 + static_cast<long>(rng() % 6);
    const long h = 1 + static_cast<long>(rng() % 100000);
    const HeightValue height = log_height(h);
    const IntervalReal a = assemble_proof_constants(d2, height).a;
    const IntervalReal c = theorem_bounds(params(1, d1, d2, height)).c;
    EXPECT_TRUE(a.certainly_less(c)) << d1 << " " << d2 << " " << h;
  }
}
