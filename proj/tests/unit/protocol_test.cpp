#include <cmath>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "icc/protocol.hpp"

using namespace icc;

namespace {

const double kGolden = std::log2((1.0 + std::sqrt(5.0)) / 2.0);

// Words of the lifted message shift: one marker in each n-window, so markers
// sit on one residue class mod n, each carrying one of m messages.
BigCount lifted_count(std::size_t len, std::size_t n, std::size_t m) {
  BigCount total = 0;
  for (std::size_t phase = 0; phase < n; ++phase) {
    std::size_t markers = 0;
    for (std::size_t i = 0; i < len; ++i) markers += (i % n) == phase;
    BigCount c = 1;
    for (std::size_t i = 0; i < markers; ++i) c *= m;
    total += c;
  }
  // phases with no marker in range all give the blank word
  if (len + 1 < n) total -= n - len - 1;
  return total;
}

void expect_witness_separates(const SoficPresentation& s, const SoficPresentation& projected, const Word& w) {
  EXPECT_NE(admits(s, w), admits(projected, w));
}

}  // namespace

TEST(Protocol, EqualityProtocolsValidate) {
  for (const SftPresentation& t : {full_shift(Alphabet::digits(2)), golden_mean_shift(), full_shift(Alphabet::digits(3))}) {
    const ValidationReport v = protocol_validate(diagonal_shift(t), eq_protocol(t));
    EXPECT_TRUE(v.valid);
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_NEAR(v.entropy_z.bits(), entropy(t).bits(), 1e-9);
  }
  const ValidationReport even = protocol_validate(diagonal_shift(even_shift()), eq_protocol(even_shift()));
  EXPECT_TRUE(even.valid);
  EXPECT_NEAR(even.entropy_z.bits(), kGolden, 1e-9);
}

TEST(Protocol, SftAndSoficRoutesAgree) {
  const SftPresentation g = golden_mean_shift();
  const ValidationReport a = protocol_validate(diagonal_shift(g), eq_protocol(g));
  const ValidationReport b = protocol_validate(sofic_from_sft(diagonal_shift(g)), to_sofic(eq_protocol(g)));
  EXPECT_EQ(a.valid, b.valid);
  EXPECT_NEAR(a.entropy_z.bits(), b.entropy_z.bits(), 1e-9);
}

TEST(Protocol, WrongProtocolHasASeparatingWitness) {
  const SftPresentation f2 = full_shift(Alphabet::digits(2));
  const ProtocolTriple p = eq_protocol(golden_mean_shift());
  const SftPresentation s = diagonal_shift(f2);
  const ValidationReport v = protocol_validate(s, p);
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.witness.has_value());
  const ProtocolLanguage l = protocol_language(p);
  expect_witness_separates(sofic_from_sft(s), project(l.l, {0, 1}), *v.witness);
}

TEST(Protocol, TrivialProtocolComputesTheProduct) {
  const SftPresentation g = golden_mean_shift(), f = full_shift(Alphabet::digits(2));
  const ValidationReport v = protocol_validate(product_shift(g, f), trivial_protocol(g, f));
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.entropy_z.bits(), 0.0);
  EXPECT_FALSE(protocol_validate(product_shift(f, f), trivial_protocol(g, f)).valid);
}

TEST(Protocol, RelationShiftIsPointwise) {
  const SftPresentation s = relation_shift(RelationMatrix::neq(1));
  EXPECT_NEAR(entropy(s).bits(), 1.0, 1e-9);
  EXPECT_EQ(s.window(), 1);
  EXPECT_NEAR(entropy(leq_shift()).bits(), std::log2(3.0), 1e-9);
}

TEST(Lift, MessageShiftCountsAndEntropy) {
  for (const RelationMatrix& r : {RelationMatrix::eq(1), RelationMatrix::neq(1)}) {
    for (int n = 1; n <= 3; ++n) {
      const CoverResult c = cover_number_exact(tensor_power(r, n));
      const ProtocolTriple p = lift_protocol(r, c.rectangles, n);
      const std::size_t m = c.cover_number;
      for (std::size_t len = 1; len <= 7; ++len) {
        EXPECT_EQ(count_words(p.z, len), lifted_count(len, static_cast<std::size_t>(n), m)) << n << " " << len;
      }
      EXPECT_NEAR(entropy(p.z).bits(), std::log2(static_cast<double>(m)) / n, 1e-9);
      EXPECT_TRUE(protocol_validate(relation_shift(r), p).valid) << n;
    }
  }
}

TEST(Lift, RejectsANonCover) {
  const RelationMatrix r = RelationMatrix::eq(1);
  EXPECT_THROW(lift_protocol(r, {{{0}, {0}}}, 1), InputError);
  EXPECT_THROW(lift_protocol(r, {}, 1), InputError);
}

TEST(Lift, LiftedNonMinimalCoverStillValidates) {
  const RelationMatrix r = RelationMatrix::neq(1);
  const CoverResult g = cover_number_greedy(tensor_power(r, 2));
  EXPECT_TRUE(protocol_validate(relation_shift(r), lift_protocol(r, g.rectangles, 2)).valid);
}

TEST(Extract, RoundTripIsSoundAndComplete) {
  for (const RelationMatrix& r : {RelationMatrix::eq(1), RelationMatrix::neq(1)}) {
    const ProtocolTriple p = lift_protocol(r, cover_number_exact(tensor_power(r, 2)).rectangles, 2);
    for (int n = 2; n <= 3; ++n) {
      const ExtractedProtocol e = extract_protocol(p, r, n);
      EXPECT_TRUE(e.sound);
      EXPECT_TRUE(e.complete);
      EXPECT_FALSE(e.defect.has_value());
      EXPECT_EQ(e.c_n, lifted_count(static_cast<std::size_t>(n), 2, 4));
      EXPECT_NEAR(e.bits, log2_count(e.c_n) + 4.0 * std::log2(static_cast<double>(e.r)), 1e-12);
    }
  }
}

TEST(Extract, RejectsShortBlocksAndForeignAlphabets) {
  const RelationMatrix r = RelationMatrix::eq(1);
  const ProtocolTriple p = lift_protocol(r, cover_number_exact(tensor_power(r, 2)).rectangles, 2);
  EXPECT_THROW(extract_protocol(p, r, 1), InputError);
  EXPECT_THROW(extract_protocol(p, RelationMatrix::eq(2), 2), InputError);
}

TEST(Extract, IncompleteProtocolIsDetected) {
  // a protocol for EQ_1 cannot compute NEQ_1
  const RelationMatrix eq = RelationMatrix::eq(1);
  const RelationMatrix neq = RelationMatrix::neq(1);
  const ProtocolTriple p = lift_protocol(eq, cover_number_exact(eq).rectangles, 1);
  RelationMatrix relabelled(neq.x_labels(), neq.y_labels());
  for (auto [x, y] : neq.ones()) relabelled.set(x, y);
  const ExtractedProtocol e = extract_protocol(p, relabelled, 1);
  EXPECT_FALSE(e.sound && e.complete);
  EXPECT_TRUE(e.defect.has_value());
}

TEST(Conditional, LeqMatchesTheZeroFraction) {
  const SftPresentation leq = leq_shift();
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      Word x(p);
      for (std::size_t i = 0; i < p; ++i) x[i] = (mask >> i) & 1u;
      EXPECT_NEAR(conditional_entropy(leq, {x}).bits(), oracle::leq_conditional(x), 1e-9);
    }
  }
}

TEST(Conditional, EqualityHasNoFreedom) {
  const SftPresentation eq = diagonal_shift(golden_mean_shift());
  EXPECT_NEAR(conditional_entropy(eq, {{0, 1}}).bits(), 0.0, 1e-12);
  EXPECT_NEAR(conditional_entropy_sup(eq, 4).estimate, 0.0, 1e-12);
}

TEST(Conditional, InadmissibleXThrows) {
  RelationMatrix r(2, 2);
  r.set(0, 0);
  r.set(0, 1);
  const SftPresentation s = relation_shift(r);
  EXPECT_NEAR(conditional_entropy(s, {{0}}).bits(), 1.0, 1e-9);
  EXPECT_THROW(conditional_entropy(s, {{1}}), InputError);
  EXPECT_THROW(conditional_entropy(s, {{}}), InputError);
}

TEST(Conditional, SupOverPeriods) {
  const ConditionalReport rep = conditional_entropy_sup(leq_shift(), 3);
  EXPECT_NEAR(rep.estimate, 1.0, 1e-9);
  EXPECT_EQ(rep.argmax.cycle, Word{0});
  EXPECT_NEAR(rep.h_y.bits(), 1.0, 1e-9);
  EXPECT_NEAR(rep.bound_estimate, 0.0, 1e-9);
  EXPECT_GT(rep.cycles_checked, 0u);
}

TEST(Fooling, DiagonalCertificates) {
  for (const SftPresentation& t : {full_shift(Alphabet::digits(2)), golden_mean_shift()}) {
    const SftPresentation d = diagonal_shift(t);
    const FoolingReport f = fooling_certificate(d, d);
    EXPECT_TRUE(f.certified);
    EXPECT_NEAR(f.bound, entropy(t).bits(), 2e-6);
  }
  const SoficPresentation de = diagonal_shift(even_shift());
  const FoolingReport f = fooling_certificate(de, de);
  EXPECT_TRUE(f.certified);
  EXPECT_NEAR(f.bound, kGolden, 2e-6);
}

TEST(Fooling, FullProductIsNotFooling) {
  const SftPresentation f2 = full_shift(Alphabet::digits(2));
  const SftPresentation all = product_shift(f2, f2);
  const FoolingReport f = fooling_certificate(all, all);
  EXPECT_FALSE(f.certified);
  EXPECT_EQ(f.bound, 0.0);
  EXPECT_NEAR(f.h_cross.bits(), 4.0, 1e-9);
}

TEST(Fooling, FMustLieInS) {
  const SftPresentation f2 = full_shift(Alphabet::digits(2));
  EXPECT_THROW(fooling_certificate(diagonal_shift(golden_mean_shift()), diagonal_shift(f2)), InputError);
}

TEST(CommonFactor, IdentityOnTheDiagonal) {
  const SftPresentation g = golden_mean_shift();
  const BlockCode id = BlockCode::identity(g.alphabet());
  const CommonFactorReport r = common_factor_bound(diagonal_shift(g), id, id, sofic_from_sft(g));
  EXPECT_TRUE(r.accepted);
  EXPECT_NEAR(r.bound.bits(), kGolden, 1e-9);
}

TEST(CommonFactor, RejectsNonOntoAndNonCommuting) {
  const SftPresentation g = golden_mean_shift(), f2 = full_shift(Alphabet::digits(2));
  const BlockCode id = BlockCode::identity(g.alphabet());
  const CommonFactorReport wide = common_factor_bound(diagonal_shift(g), id, id, sofic_from_sft(f2));
  EXPECT_FALSE(wide.accepted);
  EXPECT_TRUE(wide.witness.has_value());
  const CommonFactorReport cross = common_factor_bound(product_shift(f2, f2), id, id, sofic_from_sft(f2));
  EXPECT_FALSE(cross.accepted);
  EXPECT_FALSE(cross.reason.empty());
}
