#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icc/block_code.hpp"
#include "icc/cover.hpp"
#include "icc/entropy.hpp"
#include "icc/relation.hpp"
#include "icc/sft.hpp"
#include "icc/sofic.hpp"

namespace icc {

/// Infinite nondeterministic protocol (Z, S_X, S_Y) of finite type. Z is over
/// C, S_X over A x C and S_Y over B x C.
struct ProtocolTriple {
  Alphabet a, b, c;
  SftPresentation z, sx, sy;
};

/// Same with sofic constituents.
struct SoficProtocol {
  Alphabet a, b, c;
  SoficPresentation z, sx, sy;
};

SoficProtocol to_sofic(const ProtocolTriple& p);

/// L = {(x, y, z) : z in Z, (x, z) in S_X, (y, z) in S_Y} over A x B x C.
struct ProtocolLanguage {
  SftPresentation l;
  int r = 1;
};

ProtocolLanguage protocol_language(const ProtocolTriple& p, std::size_t guard = kDefaultStateGuard);
SoficPresentation protocol_language(const SoficProtocol& p, std::size_t guard = kDefaultStateGuard);

struct ValidationReport {
  bool valid = false;
  /// Shortest word over A x B in exactly one of S and the projection of L.
  std::optional<Word> witness;
  EntropyValue entropy_z = EntropyValue::negative_infinity();
};

/// Exact check that the projection of L onto A x B equals S.
ValidationReport protocol_validate(const SftPresentation& s, const ProtocolTriple& p, double tol = 1e-9,
                                   std::size_t guard = kDefaultStateGuard);
ValidationReport protocol_validate(const SoficPresentation& s, const SoficProtocol& p, double tol = 1e-9,
                                   std::size_t guard = kDefaultStateGuard);

/// {(t, t) : t in T} over T's alphabet squared.
SftPresentation diagonal_shift(const SftPresentation& t);
SoficPresentation diagonal_shift(const SoficPresentation& t);

/// Alice sends her input: Z = T, S_X = S_Y = diagonal.
ProtocolTriple eq_protocol(const SftPresentation& t);
SoficProtocol eq_protocol(const SoficPresentation& t);

/// Z is a single fixed point; validates X x Y.
ProtocolTriple trivial_protocol(const SftPresentation& x, const SftPresentation& y);

/// R^Z: pairs of sequences related pointwise by R, a window-1 SFT over the
/// product of the label alphabets.
SftPresentation relation_shift(const RelationMatrix& r);
/// x_i <= y_i for all i, over {0,1} x {0,1}.
SftPresentation leq_shift();

/// Protocol for R^Z from a cover of R^n. Messages are z_0 .. z_{m-1} plus the
/// blank "_"; Z' has exactly one message in every n-window, and at each
/// message k the next n letters of x (of y) must lie in the rows (columns) of
/// rectangle k.
ProtocolTriple lift_protocol(const RelationMatrix& r, const std::vector<Rectangle>& cover, int n);

struct ExtractedProtocol {
  int n = 0;
  int r = 0;
  BigCount c_n = 0;
  /// log2(c_n) + 4 log2(r).
  double bits = 0.0;
  std::size_t messages = 0;
  /// Distinct nonempty rectangles of R^n, indexed as in tensor_power.
  std::vector<Rectangle> rectangles;
  bool sound = false;
  bool complete = false;
  std::optional<std::string> defect;
};

/// Finite protocol for R^n: a message is a Z-word z of length n with the
/// first and last r letters of x and of y; each side accepts if its input
/// pairs with z in its shift and both border triples occur in L.
ExtractedProtocol extract_protocol(const ProtocolTriple& p, const RelationMatrix& r, int n,
                                   std::size_t guard = kDefaultStateGuard);

struct PeriodicWord {
  Word cycle;
  std::size_t period() const { return cycle.size(); }
};

/// H_S(Y|x) for periodic x, as (1/p) log2 of the spectral radius of the
/// product of the per-position transfer matrices. Throws InputError when x
/// does not occur in the projection of S to A.
EntropyValue conditional_entropy(const SftPresentation& s, const PeriodicWord& x, double tol = 1e-12);

struct ConditionalReport {
  /// Max of H_S(Y|x) over admissible periodic x of period <= p; an estimate
  /// of H_S(Y|X) from below.
  double estimate = 0.0;
  PeriodicWord argmax;
  EntropyValue h_y = EntropyValue::negative_infinity();
  /// H(Y) - estimate; a lower bound on N(S) only if the estimate is the sup.
  double bound_estimate = 0.0;
  std::size_t cycles_checked = 0;
};

ConditionalReport conditional_entropy_sup(const SftPresentation& s, int max_period, double tol = 1e-12,
                                          std::size_t guard = kDefaultStateGuard);

struct FoolingReport {
  EntropyValue h_f = EntropyValue::negative_infinity();
  EntropyValue h_cross = EntropyValue::negative_infinity();
  bool certified = false;
  /// H(F) when certified, otherwise 0.
  double bound = 0.0;
};

/// Cross shift {(x, y, x', y') : (x, y), (x', y') in F, (x, y'), (x', y) in S};
/// certified when H(cross) <= H(F) + 2 tol. Throws InputError unless F is
/// contained in S.
FoolingReport fooling_certificate(const SftPresentation& s, const SftPresentation& f, double tol = 1e-9,
                                  std::size_t guard = kDefaultStateGuard);
FoolingReport fooling_certificate(const SoficPresentation& s, const SoficPresentation& f, double tol = 1e-9,
                                  std::size_t guard = kDefaultStateGuard);

struct CommonFactorReport {
  bool accepted = false;
  EntropyValue bound = EntropyValue::negative_infinity();
  std::string reason;
  /// Failing window of S, or a word distinguishing an image from F.
  std::optional<Word> witness;
};

/// Accepts when phi(X) = F = psi(Y) and phi(x) = psi(y) on every window of S,
/// where X and Y are the projections of S.
CommonFactorReport common_factor_bound(const SftPresentation& s, const BlockCode& phi, const BlockCode& psi,
                                       const SoficPresentation& f, double tol = 1e-9,
                                       std::size_t guard = kDefaultStateGuard);

}  // namespace icc
