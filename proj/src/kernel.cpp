#include "joinmeet/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <unordered_map>

#include "joinmeet/error.hpp"

namespace joinmeet {

PresentationMap::PresentationMap(RingHandle target, std::vector<std::string> tags,
                                 std::vector<Polynomial> images)
    : tags_(std::move(tags)), images_(std::move(images)), target_(std::move(target)) {
  if (!target_) throw InputError("presentation map needs a target ring");
  if (tags_.size() != images_.size()) throw InputError("presentation map: tag/image count mismatch");
  std::set<std::string> seen;
  std::vector<std::string> names;
  for (std::size_t e = 0; e < tags_.size(); ++e) {
    if (!seen.insert(tags_[e]).second) throw InputError("presentation map: duplicate tag " + tags_[e]);
    const auto& f = images_[e];
    if (f.ring() != target_) throw RingMismatch();
    if (f.is_zero()) throw InputError("presentation map: zero image for " + tags_[e]);
    if (!f.is_homogeneous()) throw InputError("presentation map: inhomogeneous image for " + tags_[e]);
    if (e == 0) g_ = f.degree();
    if (f.degree() != g_) throw InputError("presentation map: images of unequal degree");
    names.push_back("y[" + tags_[e] + "]");
  }
  source_ = make_ring(std::move(names));
}

Polynomial PresentationMap::apply(const Polynomial& p) const {
  if (p.ring() != source_) throw RingMismatch();
  return p.substitute(images_, target_);
}

PresentationMap presentation_of(const JoinMeetSystem& sys) {
  return PresentationMap(sys.ring, sys.tags, sys.binomials);
}

FieldMode FieldMode::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text == "fp" || text == "Fp") return prime_field();
  const std::string prefix = text.substr(0, 3);
  if (prefix == "fp:" || prefix == "Fp:") {
    std::uint32_t p = 0;
    const char* b = text.data() + 3;
    const char* e = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(b, e, p);
    if (ec != std::errc{} || ptr != e || p < 3) throw InputError("bad prime in field '" + text + "'");
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw InputError("field modulus " + std::to_string(p) + " is not prime");
    return prime_field(p);
  }
  throw InputError("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string FieldMode::name() const { return is_prime() ? "Fp(" + std::to_string(prime) + ")" : "Q"; }

const DegreeReport* GradedKernelReport::at(std::uint32_t d) const {
  if (d == 0 || d > degrees.size()) return nullptr;
  return &degrees[d - 1];
}

bool GradedKernelReport::kernel_zero() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& r) { return r.dim_kernel == 0; });
}

std::optional<std::uint32_t> GradedKernelReport::first_generator_degree() const {
  for (const auto& r : degrees)
    if (!r.minimal_generators.empty()) return r.degree;
  return std::nullopt;
}

std::map<std::uint32_t, std::size_t> GradedKernelReport::generator_degrees() const {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& r : degrees) out[r.degree] = r.minimal_generators.size();
  return out;
}

namespace {

using Key = std::vector<std::int64_t>;

struct Block {
  Key key;
  /// Ascending in the order on A.
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
};

struct Slice {
  std::vector<Block> blocks;
  std::map<Key, std::size_t> by_key;
  std::size_t monomials = 0;
};

template <class F>
struct BlockKernel {
  /// Vectors over the block's local monomial indices; the last entry is the lead.
  std::vector<SparseVec<typename F::Elem>> basis;
};

void add_scaled(Key& k, const Key& v, std::uint32_t times) {
  for (std::size_t r = 0; r < k.size(); ++r) k[r] += v[r] * times;
}

}  // namespace

struct GradedKernel::Impl {
  PresentationMap map;
  KernelOptions opts;
  MonomialOrder order;
  IntegerField qf;
  PrimeField pf;
  std::vector<std::vector<std::int64_t>> grading;
  std::vector<Key> ydeg;
  std::vector<std::vector<std::pair<Monomial, mpz_class>>> int_images;
  /// f_e = int_images[e] / scale[e].
  std::vector<mpz_class> scale;
  std::map<std::uint32_t, Slice> slices;
  std::map<std::uint32_t, DegreeReport> reports;
  std::map<std::pair<std::uint32_t, std::size_t>, BlockKernel<IntegerField>> qk;
  std::map<std::pair<std::uint32_t, std::size_t>, BlockKernel<PrimeField>> pk;
  std::size_t cells = 0;

  Impl(const PresentationMap& m, KernelOptions o)
      : map(m), opts(std::move(o)), order(opts.order.value_or(MonomialOrder::degrevlex())) {
    if (opts.field.is_prime()) pf.p = opts.field.prime;
    const std::size_t n = map.target()->size();
    // Grading: integer vectors w with w.(a - b) = 0 for any two terms of an image.
    std::vector<std::vector<mpq_class>> diffs;
    for (const auto& f : map.images()) {
      const auto& ts = f.terms();
      for (std::size_t k = 1; k < ts.size(); ++k) {
        std::vector<mpq_class> row(n, 0);
        for (auto [v, e] : ts[k].m.entries()) row[v] += e;
        for (auto [v, e] : ts[0].m.entries()) row[v] -= e;
        diffs.push_back(std::move(row));
      }
    }
    for (const auto& w : integer_null_space(std::move(diffs), n)) {
      std::vector<std::int64_t> row;
      for (const auto& x : w) {
        if (!x.fits_slong_p()) throw InvariantViolation("grading vector out of range");
        row.push_back(x.get_si());
      }
      grading.push_back(std::move(row));
    }
    for (const auto& f : map.images()) {
      Key k(grading.size(), 0);
      for (std::size_t r = 0; r < grading.size(); ++r)
        for (auto [v, e] : f.terms()[0].m.entries()) k[r] += grading[r][v] * e;
      ydeg.push_back(std::move(k));
      mpz_class den = 1;
      for (const auto& t : f.terms()) den = lcm(den, t.c.get_den());
      std::vector<std::pair<Monomial, mpz_class>> img;
      for (const auto& t : f.terms()) {
        mpq_class s = t.c * den;
        img.emplace_back(t.m, s.get_num());
      }
      int_images.push_back(std::move(img));
      scale.push_back(den);
    }
  }

  const Slice& slice(std::uint32_t d) {
    auto it = slices.find(d);
    if (it != slices.end()) return it->second;
    const Var s = static_cast<Var>(map.size());
    std::map<Key, std::vector<Monomial>> groups;
    std::vector<Monomial::Entry> cur;
    std::size_t count = 0;
    // Nondecreasing variable sequences of length d.
    auto rec = [&](auto&& self, Var from, std::uint32_t left, Key& key) -> void {
      if (left == 0) {
        groups[key].push_back(Monomial::from_entries(cur));
        ++count;
        return;
      }
      for (Var v = from; v < s; ++v) {
        for (std::uint32_t e = left; e >= 1; --e) {
          cur.emplace_back(v, e);
          add_scaled(key, ydeg[v], e);
          self(self, v + 1, left - e, key);
          for (std::size_t r = 0; r < key.size(); ++r) key[r] -= ydeg[v][r] * e;
          cur.pop_back();
        }
      }
    };
    Key key(grading.size(), 0);
    if (d > 0) rec(rec, 0, d, key);
    Slice sl;
    sl.monomials = count;
    for (auto& [k, monos] : groups) {
      Block b;
      b.key = k;
      std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& c) { return order.less(a, c); });
      for (std::uint32_t i = 0; i < monos.size(); ++i) b.index.emplace(monos[i], i);
      b.monos = std::move(monos);
      sl.by_key.emplace(k, sl.blocks.size());
      sl.blocks.push_back(std::move(b));
    }
    return slices.emplace(d, std::move(sl)).first->second;
  }

  std::vector<std::pair<Monomial, mpz_class>> image_of(const Monomial& u) {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc{{Monomial{}, 1}};
    for (auto [v, e] : u.entries()) {
      for (std::uint32_t k = 0; k < e; ++k) {
        std::unordered_map<Monomial, mpz_class, MonomialHash> next;
        for (const auto& [m, c] : acc)
          for (const auto& [mm, cc] : int_images[v]) next[m * mm] += c * cc;
        acc = std::move(next);
      }
    }
    std::vector<std::pair<Monomial, mpz_class>> out;
    for (auto& [m, c] : acc)
      if (sgn(c) != 0) out.emplace_back(m, std::move(c));
    return out;
  }

  template <class F>
  auto& cache() {
    if constexpr (std::is_same_v<F, IntegerField>)
      return qk;
    else
      return pk;
  }

  template <class F>
  const F& field() {
    if constexpr (std::is_same_v<F, IntegerField>)
      return qf;
    else
      return pf;
  }

  // Monomials are fed in ascending order; a monomial whose image depends on
  // earlier ones yields the kernel element "monomial minus standard part".
  template <class F>
  const BlockKernel<F>& kernel_of(std::uint32_t d, std::size_t b) {
    auto& c = cache<F>();
    auto it = c.find({d, b});
    if (it != c.end()) return it->second;
    const Block& blk = slice(d).blocks[b];
    const F& f = field<F>();
    Echelon<F> ech(f);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> cols;
    BlockKernel<F> out;
    for (std::uint32_t k = 0; k < blk.monos.size(); ++k) {
      auto img = image_of(blk.monos[k]);
      cells += img.size();
      if (cells > opts.budget_cells)
        throw BudgetExceeded("graded kernel exceeded the cell budget of " + std::to_string(opts.budget_cells));
      SparseVec<typename F::Elem> v;
      for (auto& [m, x] : img) {
        auto [ci, fresh] = cols.emplace(m, static_cast<std::uint32_t>(cols.size()));
        (void)fresh;
        if constexpr (std::is_same_v<F, IntegerField>) {
          v.emplace_back(ci->second, std::move(x));
        } else {
          auto r = f.from(x);
          if (r) v.emplace_back(ci->second, r);
        }
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      SparseVec<typename F::Elem> track;
      track.emplace_back(k, typename F::Elem(1));
      if (ech.reduce(v, &track)) {
        out.basis.push_back(std::move(track));
      } else {
        ech.add(std::move(v), std::move(track));
      }
    }
    return c.emplace(std::make_pair(d, b), std::move(out)).first->second;
  }

  // Kernel elements of block b in degree d not in A_1 * ker_{d-1}.
  template <class F>
  std::vector<SparseVec<typename F::Elem>> minimal_in_block(std::uint32_t d, std::size_t b) {
    const auto& kb = kernel_of<F>(d, b);
    if (kb.basis.empty()) return {};
    Echelon<F> ech(field<F>());
    if (d >= 2) {
      const Block& blk = slice(d).blocks[b];
      const Slice& lower = slice(d - 1);
      for (Var v = 0; v < map.size(); ++v) {
        Key k = blk.key;
        for (std::size_t r = 0; r < k.size(); ++r) k[r] -= ydeg[v][r];
        auto it = lower.by_key.find(k);
        if (it == lower.by_key.end()) continue;
        const Block& lb = lower.blocks[it->second];
        const auto& lk = kernel_of<F>(d - 1, it->second);
        const Monomial yv = Monomial::var(v);
        for (const auto& vec : lk.basis) {
          SparseVec<typename F::Elem> w;
          for (const auto& [i, c] : vec) w.emplace_back(blk.index.at(lb.monos[i] * yv), c);
          std::sort(w.begin(), w.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
          ech.insert(std::move(w));
          if (ech.rank() == kb.basis.size()) return {};
        }
      }
    }
    std::vector<SparseVec<typename F::Elem>> out;
    for (const auto& vec : kb.basis) {
      auto w = vec;
      if (!ech.reduce(w, nullptr)) {
        out.push_back(vec);
        ech.add(std::move(w));
      }
    }
    return out;
  }

  Polynomial to_poly(std::uint32_t d, std::size_t b, const SparseVec<mpz_class>& vec) {
    const Block& blk = slice(d).blocks[b];
    std::vector<Term> terms;
    for (const auto& [i, c] : vec) {
      const Monomial& u = blk.monos[i];
      mpz_class s = 1;
      for (auto [v, e] : u.entries()) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), scale[v].get_mpz_t(), e);
        s *= p;
      }
      terms.push_back({u, Rational(c * s)});
    }
    return Polynomial::from_terms(map.source(), std::move(terms)).monic(order);
  }

  void verify(const Polynomial& p) {
    if (!map.apply(p).is_zero())
      throw InvariantViolation("kernel element does not vanish under substitution: " + p.to_string(order));
  }

  void sort_by_lead(std::vector<Polynomial>& ps) {
    std::sort(ps.begin(), ps.end(), [&](const Polynomial& a, const Polynomial& c) {
      return order.less(a.leading_term(order).m, c.leading_term(order).m);
    });
  }

  std::vector<Polynomial> kernel_basis(std::uint32_t d) {
    std::vector<Polynomial> out;
    const Slice& sl = slice(d);
    for (std::size_t b = 0; b < sl.blocks.size(); ++b)
      for (const auto& vec : kernel_of<IntegerField>(d, b).basis) out.push_back(to_poly(d, b, vec));
    sort_by_lead(out);
    return out;
  }

  const DegreeReport& degree(std::uint32_t d) {
    if (d == 0) throw InputError("kernel degrees start at 1");
    auto it = reports.find(d);
    if (it != reports.end()) return it->second;
    if (d > 1) degree(d - 1);
    const Slice& sl = slice(d);
    DegreeReport r;
    r.degree = d;
    r.monomials = sl.monomials;
    r.blocks = sl.blocks.size();
    const bool prime = opts.field.is_prime();
    for (std::size_t b = 0; b < sl.blocks.size(); ++b)
      r.dim_kernel += prime ? kernel_of<PrimeField>(d, b).basis.size() : kernel_of<IntegerField>(d, b).basis.size();
    r.hilbert = r.monomials - r.dim_kernel;
    if (opts.minimal_generators && r.dim_kernel > 0) {
      for (std::size_t b = 0; b < sl.blocks.size(); ++b) {
        // Over Fp only a nonzero count triggers the exact recomputation.
        if (prime && minimal_in_block<PrimeField>(d, b).empty()) continue;
        for (const auto& vec : minimal_in_block<IntegerField>(d, b)) {
          auto p = to_poly(d, b, vec);
          verify(p);
          r.minimal_generators.push_back(std::move(p));
        }
      }
      sort_by_lead(r.minimal_generators);
    }
    if (opts.keep_kernel_basis) {
      r.kernel_basis = kernel_basis(d);
      for (const auto& p : r.kernel_basis) verify(p);
    }
    return reports.emplace(d, std::move(r)).first->second;
  }
};

GradedKernel::GradedKernel(const PresentationMap& m, KernelOptions opts)
    : impl_(std::make_unique<Impl>(m, std::move(opts))) {}

GradedKernel::~GradedKernel() = default;

const MonomialOrder& GradedKernel::order() const { return impl_->order; }

const std::vector<std::vector<std::int64_t>>& GradedKernel::grading() const { return impl_->grading; }

const DegreeReport& GradedKernel::degree(std::uint32_t d) { return impl_->degree(d); }

std::vector<Polynomial> GradedKernel::kernel_basis(std::uint32_t d) { return impl_->kernel_basis(d); }

bool GradedKernel::in_kernel_span(const Polynomial& p) {
  if (p.ring() != impl_->map.source()) throw RingMismatch();
  if (p.is_zero()) return true;
  if (!p.is_homogeneous()) return false;
  const auto basis = kernel_basis(p.degree());
  return normal_form(p, basis, impl_->order).is_zero();
}

GradedKernelReport graded_kernel(const PresentationMap& m, std::uint32_t cap, const KernelOptions& opts) {
  if (cap == 0) throw InputError("degree cap must be positive");
  GradedKernel engine(m, opts);
  GradedKernelReport rep;
  rep.cap = cap;
  rep.field = opts.field;
  rep.order = engine.order();
  for (std::uint32_t d = 1; d <= cap; ++d) {
    rep.degrees.push_back(engine.degree(d));
    if (opts.stop_at_nonzero && rep.degrees.back().dim_kernel > 0) break;
  }
  return rep;
}

bool leading_exponents_independent(const PresentationMap& m, const MonomialOrder& order) {
  const std::size_t n = m.target()->size();
  std::vector<std::vector<mpq_class>> rows;
  const std::size_t s = m.size();
  for (const auto& f : m.images()) {
    std::vector<mpq_class> row(n, 0);
    for (auto [v, e] : f.leading_term(order).m.entries()) row[v] = e;
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows)) == s;
}

std::optional<MonomialOrder> find_independent_leading_order(const PresentationMap& m, std::size_t trials,
                                                            std::uint64_t seed) {
  const std::size_t n = m.target()->size();
  if (m.size() > n) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, 64);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = dist(rng);
    auto order = MonomialOrder::weight(std::move(w), MonomialOrder::degrevlex());
    if (leading_exponents_independent(m, order)) return order;
  }
  return std::nullopt;
}

}  // namespace joinmeet
