#include <gtest/gtest.h>

#include <random>
#include <set>

#include "special_locus/arithmetic.hpp"
#include "special_locus/bounds.hpp"
#include "special_locus/search.hpp"

using namespace special_locus;

namespace {

const char* kHeegnerLine = "X - 262537412640768000*Y + 525074825281536000";

SearchResult run(const std::string& text, std::int64_t max_disc, std::uint64_t max_order, unsigned workers = 1,
                 bool prune = true) {
  SearchConfig c;
  c.curve = parse_polynomial(text);
  c.max_disc = max_disc;
  c.max_order = max_order;
  c.workers = workers;
  c.prune = prune;
  return search_special_points(c);
}

std::vector<std::pair<std::int64_t, std::uint64_t>> pairs(const SearchResult& r) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> out;
  for (const auto& h : r.hits) out.emplace_back(h.d.value(), h.n);
  return out;
}

// Number of (alpha, lambda) boxes, alpha a conjugate of j(D) and lambda a
// primitive N-th root of unity, whose image under F contains zero.
int zero_boxes(const BiPoly& f, Discriminant d, std::uint64_t n, Precision precision) {
  const auto cp = class_polynomial_at(d, std::max(precision, class_polynomial_start_precision(d)));
  if (!cp) return -1;
  int count = 0;
  for (const auto& alpha : cp->roots)
    for (std::uint64_t k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1 &&
          eval_interval(f, alpha, IntervalComplex::root_of_unity(static_cast<long>(k), static_cast<long>(n), precision))
              .contains_zero())
        ++count;
  return count;
}

BiPoly random_curve(std::mt19937_64& rng) {
  const int dx = 1 + static_cast<int>(rng() % 2), dy = 1 + static_cast<int>(rng() % 2);
  std::vector<std::vector<BigInt>> grid(dx + 1, std::vector<BigInt>(dy + 1));
  for (auto& row : grid)
    for (auto& c : row) c = BigInt(static_cast<long>(rng() % 41) - 20);
  return BiPoly(grid);
}

}  // namespace

TEST(ValidateCurve, Examples) {
  const ValidatedCurve k = validate_curve(parse_polynomial("X + 1728*Y"));
  EXPECT_EQ(k.delta1, 1);
  EXPECT_EQ(k.delta2, 1);
  const ValidatedCurve scaled = validate_curve(BiPoly({{BigInt(4)}, {BigInt(0), BigInt(6)}}));
  EXPECT_EQ(scaled.poly, parse_polynomial("2 + 3*X*Y"));

  EXPECT_THROW(validate_curve(parse_polynomial("(X - 1)*(Y - 1)")), AxisLineFactor);
  try {
    validate_curve(parse_polynomial("(X^2 + 1)*(X + Y)"));
    FAIL();
  } catch (const AxisLineFactor& e) {
    EXPECT_EQ(e.kind(), AxisLineFactor::Kind::vertical);
  }
  try {
    validate_curve(parse_polynomial("(Y + 1)*(X*Y + 3)"));
    FAIL();
  } catch (const AxisLineFactor& e) {
    EXPECT_EQ(e.kind(), AxisLineFactor::Kind::horizontal);
  }
  EXPECT_THROW(validate_curve(parse_polynomial("17")), ConstantPolynomial);
  EXPECT_THROW(validate_curve(BiPoly()), ZeroPolynomial);
}

TEST(MembershipCertificate, Examples) {
  const BiPoly f = parse_polynomial("X + 1728*Y");
  const auto at_minus_one = membership_certificate(f, Discriminant(-4), OrderN(2));
  ASSERT_TRUE(at_minus_one.has_value());
  EXPECT_EQ(at_minus_one->to_string(), "X - 1728");
  EXPECT_FALSE(membership_certificate(f, Discriminant(-4), OrderN(1)).has_value());
  EXPECT_FALSE(membership_certificate(f, Discriminant(-3), OrderN(2)).has_value());
  // alpha = 0 with lambda a primitive cube root of unity.
  const auto zero = membership_certificate(parse_polynomial("X + Y^3 - 1"), Discriminant(-3), OrderN(3));
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->to_string(), "X");
}

TEST(Search, Examples) {
  const SearchResult two = run("2*X + 5103*Y + 1647", 30, 10);
  EXPECT_EQ(pairs(two), (decltype(pairs(two)){{-4, 2}, {-7, 1}}));
  EXPECT_TRUE(two.flagged.empty());
  for (const auto& h : two.hits) {
    ASSERT_EQ(h.witnesses.size(), 1u);
    EXPECT_EQ(h.witnesses[0].status, WitnessStatus::certified_pair_set);
  }
  EXPECT_EQ(pairs(run("X + 1728*Y", 30, 10)), (decltype(pairs(two)){{-4, 2}}));
  const SearchResult heegner = run(kHeegnerLine, 200, 10, 4);
  EXPECT_EQ(pairs(heegner), (decltype(pairs(two)){{-163, 1}}));
  EXPECT_TRUE(run("X - Y + 5", 40, 12).hits.empty());
}

TEST(Search, RejectsInvalidCurves) {
  EXPECT_THROW(run("(X - 1)*(Y - 1)", 10, 5), AxisLineFactor);
  EXPECT_THROW(run("3", 10, 5), ConstantPolynomial);
}

TEST(Search, WorkerCountDoesNotChangeResult) {
  for (const char* text : {"2*X + 5103*Y + 1647", "X*Y^2 - 3375*Y + X", "X^2 - 1728*X*Y + 287496*Y"}) {
    const SearchResult one = run(text, 60, 12, 1);
    const SearchResult four = run(text, 60, 12, 4);
    ASSERT_EQ(pairs(one), pairs(four)) << text;
    for (std::size_t i = 0; i < one.hits.size(); ++i) {
      EXPECT_EQ(one.hits[i].certificate, four.hits[i].certificate);
      ASSERT_EQ(one.hits[i].witnesses.size(), four.hits[i].witnesses.size());
      for (std::size_t w = 0; w < one.hits[i].witnesses.size(); ++w)
        EXPECT_EQ(one.hits[i].witnesses[w].status, four.hits[i].witnesses[w].status);
    }
  }
}

TEST(Search, PruningIsSound) {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 12) {
    const BiPoly f = random_curve(rng);
    try {
      validate_curve(f);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    SearchConfig c;
    c.curve = f;
    c.max_disc = 40;
    c.max_order = 12;
    const auto pruned = pairs(search_special_points(c));
    c.prune = false;
    EXPECT_EQ(pruned, pairs(search_special_points(c))) << f.to_string();
  }
}

TEST(Search, AgreesWithIntervalEnumeration) {
  std::mt19937_64 rng(37);
  std::vector<BiPoly> curves = {parse_polynomial("2*X + 5103*Y + 1647"), parse_polynomial("X^2 - 1728*X*Y + 287496*Y")};
  while (curves.size() < 6) {
    const BiPoly f = random_curve(rng);
    try {
      validate_curve(f);
      curves.push_back(f);
    } catch (const Error&) {
    }
  }
  for (const BiPoly& f : curves) {
    SearchConfig c;
    c.curve = f;
    c.max_disc = 30;
    c.max_order = 8;
    const auto hits = pairs(search_special_points(c));
    const std::set<std::pair<std::int64_t, std::uint64_t>> hit_set(hits.begin(), hits.end());
    for (const Discriminant d : discriminants_up_to(30)) {
      for (std::uint64_t n = 1; n <= 8; ++n) {
        const int coarse = zero_boxes(f, d, n, 256);
        const int fine = zero_boxes(f, d, n, 512);
        if (hit_set.count({d.value(), n})) {
          EXPECT_GT(fine, 0) << f.to_string() << " " << d.value() << " " << n;
          EXPECT_LE(fine, coarse);
        } else {
          EXPECT_EQ(fine, 0) << f.to_string() << " " << d.value() << " " << n;
        }
      }
    }
  }
}

TEST(Search, WitnessesMatchCertificate) {
  for (const char* text : {"2*X + 5103*Y + 1647", "X + 1728*Y", "X^2 - 1728*X*Y + 287496*Y", "X*Y^2 - 3375*Y + X"}) {
    const BiPoly f = parse_polynomial(text);
    SearchConfig c;
    c.curve = f;
    c.max_disc = 60;
    c.max_order = 12;
    for (const auto& h : search_special_points(c).hits) {
      int certified = 0;
      for (const auto& w : h.witnesses) {
        EXPECT_TRUE(eval_interval(f, w.alpha, w.lambda).contains_zero());
        if (w.status == WitnessStatus::certified_pair_set) ++certified;
        EXPECT_EQ(std::gcd(w.lambda_k, h.n), 1u);
      }
      EXPECT_GE(static_cast<int>(h.witnesses.size()), h.certificate.degree()) << text;
      if (certified > 0) EXPECT_EQ(certified, h.certificate.degree()) << text;
    }
  }
}

TEST(Search, HitsRespectTheoremBounds) {
  for (const char* text : {"2*X + 5103*Y + 1647", kHeegnerLine, "X*Y^2 - 3375*Y + X"}) {
    const ValidatedCurve v = validate_curve(parse_polynomial(text));
    CurveParams p;
    p.delta1 = v.delta1;
    p.delta2 = v.delta2;
    p.height = poly_height(v.poly);
    const BoundReport b = theorem_bounds(p);
    for (const auto& h : run(text, 200, 12, 4).hits) {
      EXPECT_TRUE(IntervalReal::from_int(h.d.magnitude()).certainly_less(b.disc_bound));
      EXPECT_TRUE(IntervalReal::from_int(static_cast<long>(h.n)).certainly_less(b.order_bound));
      EXPECT_LE(euler_phi(OrderN(h.n)), static_cast<std::uint64_t>(v.delta2 * class_number(h.d)));
    }
  }
}

TEST(DiscriminantsUpTo, Examples) {
  std::vector<std::int64_t> values;
  for (const auto d : discriminants_up_to(20)) values.push_back(d.value());
  EXPECT_EQ(values, (std::vector<std::int64_t>{-3, -4, -7, -8, -11, -12, -15, -16, -19, -20}));
  EXPECT_TRUE(discriminants_up_to(2).empty());
}

TEST(LeadingCoefficient, Examples) {
  const LeadingCoefficient a = leading_nonvanishing_coefficient(parse_polynomial("(Y + 1)*X^2 + X + 1"), OrderN(2));
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.g_m, UniPoly{1});
  const LeadingCoefficient b = leading_nonvanishing_coefficient(parse_polynomial("(Y + 1)*X^2 + X + 1"), OrderN(3));
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.g_m, (UniPoly{1, 1}));
  const LeadingCoefficient c = leading_nonvanishing_coefficient(parse_polynomial("X + 1728*Y"), OrderN(1));
  EXPECT_EQ(c.m, 1);
  EXPECT_THROW(leading_nonvanishing_coefficient(parse_polynomial("(Y + 1)*X + Y + 1"), OrderN(2)), InternalError);
}

TEST(ProofTrace, HeegnerLineLargeBranch) {
  const BiPoly f = parse_polynomial(kHeegnerLine);
  const SearchResult r = run(kHeegnerLine, 200, 10, 4);
  ASSERT_EQ(r.hits.size(), 1u);
  const TraceReport t = proof_trace(r.hits[0], f);
  EXPECT_TRUE(t.large_branch);
  EXPECT_EQ(t.d, -163);
  EXPECT_EQ(t.n, 1u);
  ASSERT_TRUE(t.m.has_value());
  EXPECT_EQ(*t.m, 1);
  EXPECT_TRUE(t.all_hold());
  for (const char* name : {"phi_class_number", "class_number_bound", "disc_within_bound", "order_within_bound",
                           "alpha_growth", "disc_below_log_alpha", "g_m_nonvanishing", "lambda_located",
                           "g_m_upper_bound", "g_m_log_upper_bound", "g_m_log_lower_bound", "disc_against_order"}) {
    const TraceCheck* c = t.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, Certainty::holds) << name;
  }
  EXPECT_EQ(t.find("phi_floor"), nullptr);
  EXPECT_EQ(t.find("no_such_check"), nullptr);
}

TEST(ProofTrace, SmallDiscriminants) {
  const BiPoly f = parse_polynomial("2*X + 5103*Y + 1647");
  for (const auto& h : run("2*X + 5103*Y + 1647", 30, 10).hits) {
    const TraceReport t = proof_trace(h, f);
    EXPECT_FALSE(t.large_branch);
    EXPECT_FALSE(t.m.has_value());
    EXPECT_TRUE(t.all_hold()) << h.d.value();
    EXPECT_EQ(t.find("alpha_growth"), nullptr);
    EXPECT_NE(t.find("class_number_bound"), nullptr);
  }
}
