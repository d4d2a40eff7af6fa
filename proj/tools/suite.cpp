#include "qmb/suite.hpp"

#include "qmb/checks.hpp"
#include "qmb/uqaction.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace qmb {

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups{"relations", "fock", "embedding", "equivalence", "uq", "all"};
  return groups;
}

namespace {

template <Scalar S>
void add_relations(std::vector<SuiteJob>& jobs, const AlgebraConfig& cfg, const Field<S>& f, int d) {
  const int small = std::min(d, 3);
  jobs.push_back({"dimensions", [=] { return dimension_check(PolAlgebra<S>(cfg, f), d); }});
  jobs.push_back({"associativity", [=] { return associativity_check(PolAlgebra<S>(cfg, f), small); }});
  jobs.push_back({"involution", [=] { return involution_check(PolAlgebra<S>(cfg, f), small); }});
  jobs.push_back({"y_commutation", [=] { return y_commutation_check(PolAlgebra<S>(cfg, f)); }});
  jobs.push_back({"t_relations", [=] { return t_relations_check(TildeG<S>(cfg, f, d)); }});
  jobs.push_back({"diagonal_t_x", [=] { return diagonal_check(TildeG<S>(cfg, f, d)); }});
  jobs.push_back({"star_identity", [=] { return star_identity_check(TildeG<S>(cfg, f, d)); }});
  jobs.push_back({"weighted_adjoint", [=] { return weighted_adjoint_check(TildeG<S>(cfg, f, d)); }});
}

template <Scalar S>
void add_fock(std::vector<SuiteJob>& jobs, const AlgebraConfig& cfg, const Field<S>& f, int d) {
  if constexpr (std::is_same_v<S, Rational>) {
    jobs.push_back({"positivity", [=] {
                      PolAlgebra<Rational> alg(cfg, f);
                      return positivity_report(FockSpace<Rational>(alg), d);
                    }});
  }
  jobs.push_back({"y_spectrum", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return y_spectrum_check(FockSpace<S>(alg), d);
                  }});
  jobs.push_back({"vacuum_kernel", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return vacuum_kernel_check(FockSpace<S>(alg), d);
                  }});
  jobs.push_back({"fock_adjointness", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return fock_adjointness_check(FockSpace<S>(alg), d);
                  }});
  for (int total = 0; total <= std::min(d, 3); ++total)
    for (int k = total; k >= 0; --k) {
      const int l = total - k;
      jobs.push_back({"faithfulness_rank", [=] {
                        PolAlgebra<S> alg(cfg, f);
                        return faithfulness_rank_check(FockSpace<S>(alg), k, l);
                      }});
    }
}

template <Scalar S>
void add_embedding(std::vector<SuiteJob>& jobs, const AlgebraConfig& cfg, const Field<S>& f, int d) {
  jobs.push_back({"minor_embedding", [=] { return minor_embedding_check(Realizations<S>(cfg, f, d)); }});
  jobs.push_back({"resolution_of_identity", [=] { return resolution_check(TildeG<S>(cfg, f, d)); }});
  jobs.push_back({"y_image", [=] { return y_image_check(Realizations<S>(cfg, f, d)); }});
  jobs.push_back({"t_star_formula", [=] { return t_star_formula_check(TildeG<S>(cfg, f, d)); }});
}

CheckReport norm_report(const AlgebraConfig& cfg, const Rational& q, int d) {
  auto rep = make_report("norm_bound", cfg, Field<Rational>(q), d);
  return timed(rep, [&](CheckReport& r) {
    if (q.sign() <= 0 || q >= Rational(1)) {
      r.verdict = Verdict::Fail;
      r.witness = "the bound is only claimed for 0 < q < 1";
      return;
    }
    const auto res = norm_Z(cfg, d, q);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", res.norm);
    r.details.emplace_back("norm", buf);
    r.details.emplace_back("tolerance", "1e-10");
    r.details.emplace_back("converged", res.converged ? "true" : "false");
    if (!res.converged || res.norm > 1.0 + 1e-9) {
      r.verdict = Verdict::Fail;
      r.witness = res.converged ? std::string("norm ") + buf + " exceeds 1" : "power iteration did not converge";
    }
  });
}

template <Scalar S>
void add_equivalence(std::vector<SuiteJob>& jobs, const AlgebraConfig& cfg, const Field<S>& f, int d) {
  jobs.push_back({"J_rank", [=] { return j_rank_check(Realizations<S>(cfg, f, d)); }});
  jobs.push_back({"intertwiner", [=] { return intertwiner_check(Realizations<S>(cfg, f, d)); }});
  jobs.push_back({"gram_match", [=] { return gram_match_check(Realizations<S>(cfg, f, d)); }});
  if constexpr (std::is_same_v<S, Rational>) {
    const Rational q = f.q();
    jobs.push_back({"norm_bound", [=] { return norm_report(cfg, q, d); }});
  }
}

template <Scalar S>
void add_uq(std::vector<SuiteJob>& jobs, const AlgebraConfig& cfg, const Field<S>& f, int d) {
  const int rel = std::min(d, 3), law = std::min(d, 2);
  jobs.push_back({"uq_relations", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return uq_relations_check(UqAction<S>(alg), rel);
                  }});
  jobs.push_back({"module_algebra", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return module_algebra_check(UqAction<S>(alg), law);
                  }});
  jobs.push_back({"lowest_weight_vectors", [=] {
                    PolAlgebra<S> alg(cfg, f);
                    return lowest_weight_check(UqAction<S>(alg), d);
                  }});
}

template <Scalar S>
void add_group(std::vector<SuiteJob>& jobs, const std::string& group, const AlgebraConfig& cfg, const Field<S>& f,
               int d) {
  if (group == "relations") add_relations(jobs, cfg, f, d);
  if (group == "fock") add_fock(jobs, cfg, f, d);
  if (group == "embedding") add_embedding(jobs, cfg, f, d);
  if (group == "equivalence") add_equivalence(jobs, cfg, f, d);
  if (group == "uq") add_uq(jobs, cfg, f, d);
}

}  // namespace

std::vector<SuiteJob> suite_jobs(const std::string& group, const SuiteOptions& o) {
  const auto& groups = suite_groups();
  if (std::find(groups.begin(), groups.end(), group) == groups.end())
    throw ConfigError("unknown check group '" + group + "'");
  o.config.validate();
  if (o.cutoff < 0) throw ConfigError("cutoff must be nonnegative");
  std::vector<SuiteJob> jobs;
  for (const auto& g : groups) {
    if (g == "all" || (group != "all" && g != group)) continue;
    if (o.symbolic) {
      add_group(jobs, g, o.config, Field<Laurent>(), o.cutoff);
    } else if (g == "uq" && !o.q.exact_sqrt()) {
      // The action involves q^{1/2}; without a rational root it is checked symbolically.
      add_group(jobs, g, o.config, Field<Laurent>(), o.cutoff);
    } else {
      add_group(jobs, g, o.config, Field<Rational>(o.q), o.cutoff);
    }
  }
  return jobs;
}

std::vector<CheckReport> run_jobs(const std::vector<SuiteJob>& jobs, int threads) {
  std::vector<CheckReport> out(jobs.size());
  if (jobs.empty()) return out;
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        out[i] = jobs[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<CheckReport> run_suite(const std::string& group, const SuiteOptions& options) {
  return run_jobs(suite_jobs(group, options), options.threads);
}

int threads_from_env() {
  const char* v = std::getenv("QMB_THREADS");
  if (!v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n <= 0) return 0;
  return static_cast<int>(std::min(n, 256L));
}

}  // namespace qmb
