#pragma once

// Graded kernels of presentation maps y_e -> f_e by exact linear algebra,
// one multidegree block at a time.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "joinmeet/join_meet.hpp"
#include "joinmeet/linalg.hpp"
#include "joinmeet/polynomial.hpp"

namespace joinmeet {

/// pi : K[y_e] -> S, y_e |-> f_e. Images are nonzero, homogeneous and of a
/// common degree; tags are distinct.
class PresentationMap {
 public:
  /// Images live in `target`. Throws InputError when the invariants fail.
  PresentationMap(RingHandle target, std::vector<std::string> tags, std::vector<Polynomial> images);

  const std::vector<std::string>& tags() const { return tags_; }
  const std::vector<Polynomial>& images() const { return images_; }
  /// Ring with variables y[tag].
  const RingHandle& source() const { return source_; }
  const RingHandle& target() const { return target_; }
  std::size_t size() const { return tags_.size(); }
  /// Common degree g of the images (0 for the empty map).
  std::uint32_t image_degree() const { return g_; }

  /// pi(p) for p in the source ring.
  Polynomial apply(const Polynomial& p) const;

 private:
  std::vector<std::string> tags_;
  std::vector<Polynomial> images_;
  RingHandle source_, target_;
  std::uint32_t g_ = 0;
};

/// y_e |-> f_e over the incomparable pairs of the system.
PresentationMap presentation_of(const JoinMeetSystem& sys);

struct FieldMode {
  /// 0 means the rationals.
  std::uint32_t prime = 0;

  static FieldMode rationals() { return {}; }
  static FieldMode prime_field(std::uint32_t p = kDefaultPrime) { return {p}; }
  /// "q" / "Q" or "fp" / "fp:<p>"; throws InputError.
  static FieldMode parse(const std::string& text);
  bool is_prime() const { return prime != 0; }
  /// "Q" or "Fp(<p>)".
  std::string name() const;
};

struct KernelOptions {
  FieldMode field;
  /// Cap on the total number of matrix entries built, summed over degrees.
  std::size_t budget_cells = 60'000'000;
  /// Order on the y-monomials; defaults to degrevlex by presentation index.
  std::optional<MonomialOrder> order;
  bool minimal_generators = true;
  /// Keep rational kernel bases in the report.
  bool keep_kernel_basis = false;
  /// Stop after the first degree with a nonzero kernel.
  bool stop_at_nonzero = false;
};

struct DegreeReport {
  std::uint32_t degree = 0;
  std::size_t monomials = 0;
  std::size_t dim_kernel = 0;
  /// monomials - dim_kernel: dimension of the span of degree-d products of the f's.
  std::size_t hilbert = 0;
  std::size_t blocks = 0;
  /// Monic, over Q, verified by substitution; sorted by leading y-monomial.
  std::vector<Polynomial> minimal_generators;
  std::vector<Polynomial> kernel_basis;
};

struct GradedKernelReport {
  std::uint32_t cap = 0;
  FieldMode field;
  MonomialOrder order;
  /// degrees[k] describes degree k+1; shorter than cap after stop_at_nonzero.
  std::vector<DegreeReport> degrees;

  const DegreeReport* at(std::uint32_t d) const;
  bool kernel_zero() const;
  /// Smallest degree with a minimal generator.
  std::optional<std::uint32_t> first_generator_degree() const;
  std::map<std::uint32_t, std::size_t> generator_degrees() const;
};

/// Incremental engine: degree d is computed from degree d-1's kernel.
class GradedKernel {
 public:
  GradedKernel(const PresentationMap& m, KernelOptions opts = {});
  ~GradedKernel();
  GradedKernel(const GradedKernel&) = delete;
  GradedKernel& operator=(const GradedKernel&) = delete;

  const MonomialOrder& order() const;
  /// Multidegree grading of the y-variables (rows of an integer matrix).
  const std::vector<std::vector<std::int64_t>>& grading() const;

  /// Computes (and caches) degree d; all lower degrees are computed first.
  const DegreeReport& degree(std::uint32_t d);
  /// Reduced rational basis of ker(pi)_d: each element is its leading
  /// monomial plus standard monomials, monic; sorted by leading monomial.
  std::vector<Polynomial> kernel_basis(std::uint32_t d);
  /// Homogeneous p of degree d in the source ring lies in the span of kernel_basis(d).
  bool in_kernel_span(const Polynomial& p);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Throws BudgetExceeded when the cell budget runs out.
GradedKernelReport graded_kernel(const PresentationMap& m, std::uint32_t cap,
                                 const KernelOptions& opts = {});

/// Exponent vectors of in(f_e) under `order` are linearly independent over Q.
bool leading_exponents_independent(const PresentationMap& m, const MonomialOrder& order);

/// Seeded random search over positive integer weight orders (degrevlex
/// tiebreak) for one making the leading exponents independent. Finding one
/// certifies algebraic independence; not finding one proves nothing.
std::optional<MonomialOrder> find_independent_leading_order(const PresentationMap& m,
                                                            std::size_t trials = 4000,
                                                            std::uint64_t seed = 1);

}  // namespace joinmeet
