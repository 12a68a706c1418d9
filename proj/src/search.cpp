#include "swrbd/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace swrbd {

namespace {

bool lex_less(const ClassVector& a, const ClassVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

// Mod-2 characteristic test packed into 64-bit blocks: K is characteristic
// iff for every row r of the gram matrix, <K, e_r> and (e_r)^2 agree mod 2.
struct ParityTester {
  std::size_t n = 0;
  std::size_t blocks = 0;
  std::vector<std::uint64_t> rows;  // row-major gram mod 2
  std::vector<std::uint8_t> diag;   // gram diagonal mod 2

  explicit ParityTester(const IntMatrix& gram) {
    n = gram.rows();
    blocks = (n + 63) / 64;
    rows.assign(n * blocks, 0);
    diag.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (mpz_odd_p(gram(i, j).get_mpz_t())) rows[i * blocks + j / 64] |= 1ull << (j % 64);
      diag[i] = mpz_odd_p(gram(i, i).get_mpz_t()) ? 1 : 0;
    }
  }

  bool test(const IntVector& k, std::vector<std::uint64_t>& mask_scratch) const {
    mask_scratch.assign(blocks, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (mpz_odd_p(k[j].get_mpz_t())) mask_scratch[j / 64] |= 1ull << (j % 64);
    for (std::size_t i = 0; i < n; ++i) {
      int par = 0;
      for (std::size_t b = 0; b < blocks; ++b)
        par ^= __builtin_popcountll(rows[i * blocks + b] & mask_scratch[b]) & 1;
      if (par != diag[i]) return false;
    }
    return true;
  }
};

struct PipelineContext {
  const SearchConfig* cfg = nullptr;
  std::size_t rank = 0;
  std::size_t n_spheres = 0;
  BigInt det;                            // basis determinant
  IntMatrix adjugate;                    // det * inverse of the evaluation matrix
  std::vector<IntVector> tuple_base_w;   // adjugate . rhs at the grid origin, per tuple
  std::vector<IntVector> step;           // per sphere: 2 * adjugate column
  std::vector<std::uint64_t> dims;       // per sphere: p + 1
  std::uint64_t grid_size = 1;
  IntVector grid_minimum;                // per sphere: -p
  ParityTester parity;
  BigInt bound;                          // derived_bound(form)
  IntVector g_h, g_hprime;               // gram.H, gram.H'

  explicit PipelineContext(const SearchConfig& c) : parity(c.form().gram()) { build(c); }

 private:
  void build(const SearchConfig& c);
};

void PipelineContext::build(const SearchConfig& c) {
  cfg = &c;
  rank = c.form().rank();
  n_spheres = c.spheres().size();
  det = c.basis_determinant();
  bound = derived_bound(c.form());
  g_h = mat_vec(c.form().gram(), c.H());
  g_hprime = mat_vec(c.form().gram(), c.Hprime());

  RatMatrix inv = invert(c.basis_evaluation_matrix());
  adjugate = IntMatrix(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      BigRat v = inv(i, j) * BigRat(det);
      if (v.get_den() != 1)
        throw ValidationError("internal: adjugate entry is not integral");
      adjugate(i, j) = v.get_num();
    }

  const std::size_t chain_len = c.chain().classes().size();
  dims.resize(n_spheres);
  step.resize(n_spheres);
  grid_minimum.resize(n_spheres);
  for (std::size_t s = 0; s < n_spheres; ++s) {
    long p = c.spheres()[s].p;
    dims[s] = static_cast<std::uint64_t>(p) + 1;
    grid_minimum[s] = -p;
    IntVector col(rank);
    for (std::size_t i = 0; i < rank; ++i) col[i] = 2 * adjugate(i, chain_len + s);
    step[s] = std::move(col);
    if (grid_size > UINT64_MAX / dims[s])
      throw ValidationError("search space exceeds supported size");
    grid_size *= dims[s];
  }

  tuple_base_w.clear();
  for (const ExtensionTuple& t : c.chain().extension_tuples()) {
    IntVector rhs(rank, BigInt(0));
    for (std::size_t j = 0; j < chain_len; ++j) rhs[c.chain().chain_order()[j]] = t[j];
    for (std::size_t s = 0; s < n_spheres; ++s) rhs[chain_len + s] = grid_minimum[s];
    tuple_base_w.push_back(mat_vec(adjugate, rhs));
  }
}

struct TaskResult {
  std::uint64_t characteristic = 0;
  std::uint64_t dimension = 0;
  std::uint64_t basic = 0;
  std::uint64_t zero_pairing = 0;
  std::vector<ClassVector> survivors;  // in grid order within the task
};

// Processes grid indices [begin, end) of one extension tuple. The candidate
// numerator vector w = adjugate . rhs is maintained incrementally; a grid
// step changes one sphere evaluation by +2 (plus odometer carries).
void process_chunk(const PipelineContext& ctx, std::size_t tuple_idx, std::uint64_t begin,
                   std::uint64_t end, TaskResult& out) {
  const std::size_t n = ctx.rank;
  const std::size_t m = ctx.n_spheres;

  IntVector w = ctx.tuple_base_w[tuple_idx];
  std::vector<std::uint64_t> digit(m, 0);
  {
    std::uint64_t rem = begin;
    for (std::size_t j = m; j-- > 0;) {
      digit[j] = rem % ctx.dims[j];
      rem /= ctx.dims[j];
    }
    for (std::size_t j = 0; j < m; ++j)
      if (digit[j] != 0)
        for (std::size_t i = 0; i < n; ++i)
          mpz_addmul_ui(w[i].get_mpz_t(), ctx.step[j][i].get_mpz_t(), digit[j]);
  }

  IntVector k(n);
  std::vector<std::uint64_t> mask;
  BigInt t;

  for (std::uint64_t idx = begin; idx < end; ++idx) {
    bool integral = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!mpz_divisible_p(w[i].get_mpz_t(), ctx.det.get_mpz_t())) {
        integral = false;
        break;
      }
    if (integral) {
      for (std::size_t i = 0; i < n; ++i)
        mpz_divexact(k[i].get_mpz_t(), w[i].get_mpz_t(), ctx.det.get_mpz_t());
      if (ctx.parity.test(k, mask)) {
        ++out.characteristic;
        // ambient square k^T G k
        const IntMatrix& g = ctx.cfg->form().gram();
        BigInt sq = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (k[i] == 0) continue;
          t = 0;
          for (std::size_t j = 0; j < n; ++j)
            mpz_addmul(t.get_mpz_t(), g(i, j).get_mpz_t(), k[j].get_mpz_t());
          mpz_addmul(sq.get_mpz_t(), k[i].get_mpz_t(), t.get_mpz_t());
        }
        if (sq >= ctx.bound) {
          ++out.dimension;
          BigInt a = dot(k, ctx.g_h);
          BigInt b = dot(k, ctx.g_hprime);
          if (a == 0 || b == 0) {
            ++out.zero_pairing;
          } else if (sgn(a) != sgn(b)) {
            ++out.basic;
            out.survivors.push_back(k);
          }
        }
      }
    }
    if (idx + 1 == end) break;
    // advance the odometer (least significant digit last)
    std::size_t j = m;
    while (j-- > 0) {
      if (++digit[j] < ctx.dims[j]) {
        for (std::size_t i = 0; i < n; ++i) w[i] += ctx.step[j][i];
        break;
      }
      digit[j] = 0;
      const std::uint64_t span = ctx.dims[j] - 1;
      for (std::size_t i = 0; i < n; ++i)
        mpz_submul_ui(w[i].get_mpz_t(), ctx.step[j][i].get_mpz_t(), span);
    }
  }
}

}  // namespace

SearchConfig::SearchConfig(std::string label, IntMatrix gram,
                           std::vector<ClassVector> chain_classes,
                           std::vector<ExtensionTuple> extension_tuples,
                           std::vector<ClassVector> spheres, ClassVector h, ClassVector h_prime)
    : label_(std::move(label)),
      form_(std::move(gram)),
      chain_(form_, std::move(chain_classes), std::move(extension_tuples)),
      h_(std::move(h)),
      h_prime_(std::move(h_prime)) {
  const std::size_t n = form_.rank();
  if (chain_.classes().size() + spheres.size() != n)
    throw ValidationError("config '" + label_ + "': " + std::to_string(chain_.classes().size()) +
                          " chain classes + " + std::to_string(spheres.size()) +
                          " spheres do not form a rank-" + std::to_string(n) + " basis");
  spheres_.reserve(spheres.size());
  for (std::size_t s = 0; s < spheres.size(); ++s) {
    try {
      spheres_.emplace_back(form_, std::move(spheres[s]));
    } catch (const ValidationError& e) {
      throw ValidationError("sphere S" + std::to_string(s + 1) + ": " + e.what());
    }
  }
  for (std::size_t s = 0; s < spheres_.size(); ++s)
    for (std::size_t r = 0; r < chain_.classes().size(); ++r) {
      BigInt v = pairing(form_, spheres_[s].cls, chain_.classes()[r]);
      if (v != 0)
        throw ValidationError("sphere S" + std::to_string(s + 1) +
                              " is not orthogonal to chain class R" + std::to_string(r) +
                              " (pairing = " + v.get_str() + ")");
    }
  if (h_.size() != n || h_prime_.size() != n)
    throw ValidationError("config '" + label_ + "': H and H' must have length " +
                          std::to_string(n));
  for (std::size_t r = 0; r < chain_.classes().size(); ++r) {
    BigInt v = pairing(form_, h_, chain_.classes()[r]);
    if (v != 0)
      throw ValidationError("H is not orthogonal to chain class R" + std::to_string(r) +
                            " (pairing = " + v.get_str() + ")");
  }
  if (square(form_, h_) <= 0)
    throw ValidationError("H must have positive square, got " + square(form_, h_).get_str());
  if (pairing(form_, h_, h_prime_) <= 0)
    throw ValidationError("H.H' must be positive, got " +
                          pairing(form_, h_, h_prime_).get_str());

  std::vector<ClassVector> basis = chain_.classes();
  for (const SphereClass& s : spheres_) basis.push_back(s.cls);
  eval_matrix_ = evaluation_matrix(form_, basis);
  eval_det_ = determinant(eval_matrix_);
  if (eval_det_ == 0)
    throw ValidationError("chain classes and spheres do not form a rational basis "
                          "(evaluation matrix is singular)");
}

bool SearchConfig::operator==(const SearchConfig& other) const {
  return label_ == other.label_ && form_ == other.form_ && chain_ == other.chain_ &&
         spheres_ == other.spheres_ && h_ == other.h_ && h_prime_ == other.h_prime_;
}

std::vector<CheckResult> check_config(const SearchConfig& config) {
  std::vector<CheckResult> out;
  auto add = [&out](const std::string& name, bool ok, std::string detail = "") {
    out.push_back({name, ok, std::move(detail)});
  };
  const IntersectionForm& form = config.form();
  const BlowdownChain& chain = config.chain();
  const std::size_t n = form.rank();

  bool symmetric = true;
  for (std::size_t i = 0; i < n && symmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (form.gram()(i, j) != form.gram()(j, i)) {
        symmetric = false;
        break;
      }
  add("gram matrix symmetric", symmetric);
  add("form nondegenerate (signature " + std::to_string(form.b_plus()) + "+/" +
          std::to_string(form.b_minus()) + "-)",
      form.b_plus() + form.b_minus() == static_cast<int>(n));
  add("chain + spheres span the rank",
      chain.classes().size() + config.spheres().size() == n);

  const BigInt heavy = -4 - chain.p();
  std::size_t heavy_count = 0, light_count = 0;
  for (std::size_t i = 0; i < chain.classes().size(); ++i) {
    if (chain.chain_gram()(i, i) == heavy)
      ++heavy_count;
    else if (chain.chain_gram()(i, i) == -2)
      ++light_count;
  }
  add("chain squares (-4-p once, -2 elsewhere)",
      heavy_count == 1 && heavy_count + light_count == chain.classes().size());
  {
    IntersectionForm chain_form(chain.chain_gram());
    add("chain gram negative definite", chain_form.b_plus() == 0);
  }
  add("chain is a linear path from the heavy sphere",
      chain.chain_order().size() == chain.classes().size() &&
          chain.chain_gram()(chain.chain_order()[0], chain.chain_order()[0]) == heavy);

  bool parity_ok = true, checksum_ok = true;
  const BigRat expected(-(chain.p() + 1));
  for (const ExtensionTuple& e : chain.extension_tuples()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      BigInt diff =
          e[j] - chain.chain_gram()(chain.chain_order()[j], chain.chain_order()[j]);
      if (mpz_odd_p(diff.get_mpz_t())) parity_ok = false;
    }
    if (k0_square(chain, e) != expected) checksum_ok = false;
  }
  add("extension tuples characteristic parity", parity_ok);
  add("extension tuples K0^2 = -(p+1)", checksum_ok,
      std::to_string(chain.extension_tuples().size()) + " tuples");

  bool sphere_neg = true;
  for (const SphereClass& s : config.spheres())
    if (square(form, s.cls) >= 0) sphere_neg = false;
  add("sphere squares negative", sphere_neg);

  bool orth = true;
  for (const SphereClass& s : config.spheres())
    for (const ClassVector& r : chain.classes())
      if (pairing(form, s.cls, r) != 0) orth = false;
  add("spheres orthogonal to the chain", orth);

  bool h_orth = true;
  for (const ClassVector& r : chain.classes())
    if (pairing(form, config.H(), r) != 0) h_orth = false;
  add("H orthogonal to the chain", h_orth);
  add("H has positive square", square(form, config.H()) > 0,
      "H^2 = " + square(form, config.H()).get_str());
  add("H.H' positive", pairing(form, config.H(), config.Hprime()) > 0,
      "H.H' = " + pairing(form, config.H(), config.Hprime()).get_str());
  add("evaluation basis invertible", config.basis_determinant() != 0,
      "det = " + config.basis_determinant().get_str());
  return out;
}

std::vector<BigInt> adjunctive_range(const SphereClass& s) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(s.p) + 1);
  for (long v = -s.p; v <= s.p; v += 2) out.emplace_back(v);
  return out;
}

RationalClass solve_candidate(const SearchConfig& config, const ExtensionTuple& tuple,
                              const IntVector& sphere_evals) {
  const std::size_t chain_len = config.chain().classes().size();
  if (tuple.size() != chain_len)
    throw DimensionError("solve_candidate: tuple length " + std::to_string(tuple.size()) +
                         ", expected " + std::to_string(chain_len));
  if (sphere_evals.size() != config.spheres().size())
    throw DimensionError("solve_candidate: " + std::to_string(sphere_evals.size()) +
                         " sphere evaluations, expected " +
                         std::to_string(config.spheres().size()));
  IntVector rhs(config.form().rank(), BigInt(0));
  for (std::size_t j = 0; j < chain_len; ++j) rhs[config.chain().chain_order()[j]] = tuple[j];
  for (std::size_t s = 0; s < sphere_evals.size(); ++s) rhs[chain_len + s] = sphere_evals[s];
  return solve(config.basis_evaluation_matrix(), rhs);
}

StageReport run_pipeline(const SearchConfig& config, unsigned threads) {
  if (threads == 0) threads = 1;
  PipelineContext ctx(config);
  const std::size_t n_tuples = config.chain().extension_tuples().size();

  StageReport report;
  report.count_candidates = static_cast<std::uint64_t>(n_tuples) * ctx.grid_size;
  if (n_tuples == 0 || ctx.grid_size == 0) return report;

  // Fixed task decomposition (independent of the worker count); workers pull
  // tasks dynamically, results merge in task order.
  struct Task {
    std::size_t tuple_idx;
    std::uint64_t begin, end;
  };
  std::vector<Task> tasks;
  const std::uint64_t chunks_per_tuple =
      std::min<std::uint64_t>(ctx.grid_size, threads > 1 ? 4 * threads : 1);
  for (std::size_t t = 0; t < n_tuples; ++t)
    for (std::uint64_t c = 0; c < chunks_per_tuple; ++c) {
      std::uint64_t begin = ctx.grid_size * c / chunks_per_tuple;
      std::uint64_t end = ctx.grid_size * (c + 1) / chunks_per_tuple;
      if (begin < end) tasks.push_back({t, begin, end});
    }

  std::vector<TaskResult> results(tasks.size());
  if (threads == 1 || tasks.size() == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      process_chunk(ctx, tasks[i].tuple_idx, tasks[i].begin, tasks[i].end, results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        process_chunk(ctx, tasks[i].tuple_idx, tasks[i].begin, tasks[i].end, results[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const TaskResult& r : results) {
    report.count_characteristic += r.characteristic;
    report.count_dimension += r.dimension;
    report.count_basic += r.basic;
    report.zero_pairing_diagnostics += r.zero_pairing;
    for (const ClassVector& k : r.survivors) report.basic_classes.push_back(k);
  }
  std::sort(report.basic_classes.begin(), report.basic_classes.end(), lex_less);
  return report;
}

bool verify_lemma_hypothesis(const SearchConfig& config, StageReport& report) {
  bool ok = true;
  for (const ClassVector& k : report.basic_classes)
    if (formal_dimension(config.chain(), config.form(), k) != 0) {
      ok = false;
      break;
    }
  report.lemma_verified = ok;
  return ok;
}

bool check_minimality(const SearchConfig& config, StageReport& report) {
  if (!report.lemma_verified)
    throw ValidationError("check_minimality requires a verified complete basic-class list "
                          "(lemma hypothesis not established)");
  const BigRat blowup_square(-4);
  bool minimal = true;
  for (std::size_t i = 0; i < report.basic_classes.size() && minimal; ++i)
    for (std::size_t j = i + 1; j < report.basic_classes.size(); ++j) {
      ClassVector diff(report.basic_classes[i].size());
      for (std::size_t c = 0; c < diff.size(); ++c)
        diff[c] = report.basic_classes[i][c] - report.basic_classes[j][c];
      if (blown_down_square(config.chain(), config.form(), diff) == blowup_square) {
        minimal = false;
        break;
      }
    }
  report.minimal = minimal;
  return minimal;
}

}  // namespace swrbd
