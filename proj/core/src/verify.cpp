// Copyright 2026 The macbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "macbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "macbound/classical_bounds.hpp"
#include "macbound/decoders.hpp"
#include "macbound/error.hpp"
#include "macbound/hermitian.hpp"
#include "macbound/io.hpp"
#include "macbound/model.hpp"
#include "macbound/quantum_bounds.hpp"
#include "macbound/random.hpp"
#include "macbound/spectrum.hpp"

namespace macbound {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxReportedFailures = 10;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void declare(const std::string& name, double tol) {
    index_[name] = r_.checks.size();
    r_.checks.push_back({name, tol, 0, 0, std::numeric_limits<double>::infinity()});
  }

  void set_instance(std::size_t i, std::uint64_t seed, std::function<std::string()> detail) {
    instance_ = i;
    instance_seed_ = seed;
    detail_ = std::move(detail);
  }

  // Records one check. NaN slack counts as a failure.
  void record(const std::string& name, double slack) {
    auto& c = r_.checks[index_.at(name)];
    ++c.count;
    if (std::isnan(slack)) slack = -std::numeric_limits<double>::infinity();
    c.min_slack = std::min(c.min_slack, slack);
    if (slack < -c.tolerance) {
      ++c.failures;
      if (r_.failures.size() < kMaxReportedFailures) {
        r_.failures.push_back({name, instance_, instance_seed_, slack, detail_ ? detail_() : ""});
      }
    }
  }

  void equal(const std::string& name, double a, double b) { record(name, -std::abs(a - b)); }

 private:
  SuiteResult& r_;
  std::map<std::string, std::size_t> index_;
  std::size_t instance_ = 0;
  std::uint64_t instance_seed_ = 0;
  std::function<std::string()> detail_;
};

std::size_t rand_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

// Flat Dirichlet; one entry is zeroed a quarter of the time.
Distribution random_distribution(std::size_t k, Rng& rng) {
  auto v = flat_dirichlet(k, rng);
  if (k > 1 && uniform01(rng) < 0.25) {
    v[rand_size(rng, 0, k - 1)] = 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    for (double& x : v) x /= s;
  }
  return Distribution(std::move(v));
}

// Stochastic rows with about a quarter replaced by point masses.
Eigen::MatrixXd mixed_rows(std::size_t rows, std::size_t cols, Rng& rng) {
  Eigen::MatrixXd w = random_stochastic_rows(rows, cols, rng);
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    if (uniform01(rng) < 0.25) {
      w.row(r).setZero();
      w(r, static_cast<Eigen::Index>(rand_size(rng, 0, cols - 1))) = 1.0;
    }
  }
  return w;
}

ClassicalMAC random_mac(std::size_t n1, std::size_t n2, std::size_t m, Rng& rng) {
  return ClassicalMAC(n1, n2, mixed_rows(n1 * n2, m, rng));
}

ClassicalMAC adder_mac() {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 3);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) w(x1 * 2 + x2, x1 + x2) = 1.0;
  }
  return ClassicalMAC(2, 2, w);
}

// Distinct symbols in random order, size in [1, n].
std::vector<std::size_t> random_codebook(std::size_t n, Rng& rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(all[i - 1], all[rand_size(rng, 0, i - 1)]);
  all.resize(rand_size(rng, 1, n));
  return all;
}

EncoderPair random_encoders(std::size_t M1, std::size_t n1, std::size_t M2, std::size_t n2,
                            Rng& rng) {
  const bool deterministic = uniform01(rng) < 0.5;
  Eigen::MatrixXd f1 = deterministic ? random_deterministic_rows(M1, n1, rng) : mixed_rows(M1, n1, rng);
  Eigen::MatrixXd f2 = deterministic ? random_deterministic_rows(M2, n2, rng) : mixed_rows(M2, n2, rng);
  return EncoderPair(StochasticMatrix(std::move(f1)), StochasticMatrix(std::move(f2)));
}

Decoder random_deterministic_decoder(std::size_t d1, std::size_t d2, std::size_t m, Rng& rng) {
  return Decoder(d1, d2, StochasticMatrix(random_deterministic_rows(m, d1 * d2, rng)));
}

// q random; q1, q2 entrywise fractions of q.
DominatedFamily random_dominated_family(std::size_t n1, std::size_t n2, std::size_t m, Rng& rng) {
  Distribution q(flat_dirichlet(m, rng));
  Eigen::MatrixXd q1(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(m));
  Eigen::MatrixXd q2(static_cast<Eigen::Index>(n2), static_cast<Eigen::Index>(m));
  for (Eigen::Index y = 0; y < static_cast<Eigen::Index>(m); ++y) {
    for (Eigen::Index x = 0; x < q1.rows(); ++x) q1(x, y) = q[static_cast<std::size_t>(y)] * uniform01(rng);
    for (Eigen::Index x = 0; x < q2.rows(); ++x) q2(x, y) = q[static_cast<std::size_t>(y)] * uniform01(rng);
  }
  return DominatedFamily(std::move(q), std::move(q1), std::move(q2));
}

Distribution output_distribution(const JointPMF& joint) {
  const Eigen::VectorXd py = joint.output_marginal();
  return Distribution(std::vector<double>(py.data(), py.data() + py.size()));
}

std::vector<AlphaTriple> alpha_grid(std::initializer_list<double> values) {
  std::vector<AlphaTriple> out;
  for (double a : values) {
    for (double b : values) {
      for (double c : values) out.emplace_back(a, b, c);
    }
  }
  return out;
}

json probs_json(const Distribution& d) {
  json a = json::array();
  for (double v : d.probs()) a.push_back(v);
  return a;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json channel_json(const ClassicalMAC& w) { return json::parse(serialize_channel(w)); }
json channel_json(const CqMAC& w) { return json::parse(serialize_channel(w)); }

json encoders_json(const EncoderPair& enc) {
  return {{"f1", matrix_json(enc.first().matrix())}, {"f2", matrix_json(enc.second().matrix())}};
}

// ---------------------------------------------------------------------------

void suite_theorem1(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  rec.declare("theorem1", 1e-9);
  rec.declare("cor1<=min_error", 1e-9);
  rec.declare("cor2<=min_error", 1e-9);
  const auto grid = alpha_grid({0.0, 1e-3, 0.1, 0.25, 0.5, 1.0});
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    const auto n1 = rand_size(rng, 1, 3), n2 = rand_size(rng, 1, 3), m = rand_size(rng, 1, 4);
    const auto w = random_mac(n1, n2, m, rng);
    const auto p = random_distribution(n1 * n2, rng);
    const auto joint = joint_from_setting1(p, w);
    rec.set_instance(i, s, [&] {
      return json{{"channel", channel_json(w)}, {"input", probs_json(p)}}.dump();
    });

    std::vector<DominatedFamily> families;
    families.push_back(DominatedFamily::from_marginals(joint));
    families.push_back(DominatedFamily::output_only(output_distribution(joint), n1, n2));
    const double c1 = uniform01(rng);
    const double c2 = uniform01(rng);
    families.emplace_back(output_distribution(joint), Eigen::MatrixXd(c1 * joint.x1y_marginal()),
                          Eigen::MatrixXd(c2 * joint.x2y_marginal()));
    families.push_back(random_dominated_family(n1, n2, m, rng));
    families.push_back(DominatedFamily::output_only(Distribution(flat_dirichlet(m, rng)), n1, n2));

    std::vector<double> pes{pe_setting1(p, w, map_decoder(joint))};
    for (int k = 0; k < 25; ++k) pes.push_back(pe_setting1(p, w, random_decoder(n1, n2, m, rng)));
    for (int k = 0; k < 25; ++k) {
      pes.push_back(pe_setting1(p, w, random_deterministic_decoder(n1, n2, m, rng)));
    }
    const double pmin = min_error(joint);

    for (const auto& a : grid) {
      for (const auto& fam : families) {
        const double sum = theorem1_positive_part_sum(joint, fam, a);
        for (double pe : pes) rec.record("theorem1", sum - (1.0 - pe - a.sum()));
        rec.record("cor1<=min_error", pmin - cor1_bound(joint, fam, a).bound);
      }
      rec.record("cor2<=min_error", pmin - cor2_bound(joint, a).bound);
    }
  }
}

void suite_yo_vs_han(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  rec.declare("yo>=han", 1e-12);
  rec.declare("theorem1>=cor1", 1e-12);
  rec.declare("cor1==yo", 1e-12);
  rec.declare("cor4==yo", 1e-12);
  rec.declare("yo_specialized==yo", 1e-12);
  const std::vector<double> gammas{0.01, 0.05, 0.1, 0.2, 0.5, 1.0};
  const std::vector<double> gamma_primes{0.1, 0.5, 1.0, 2.0, 5.0};
  const auto grid = alpha_grid({0.0, 0.1, 0.25, 0.5, 1.0});
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    const auto n1 = rand_size(rng, 2, 4), n2 = rand_size(rng, 2, 4), m = rand_size(rng, 2, 4);
    const auto w = random_mac(n1, n2, m, rng);
    auto c1 = random_codebook(n1, rng);
    auto c2 = random_codebook(n2, rng);
    const CodebookPair cb(std::move(c1), std::move(c2));
    const auto qc = ClassicalMAC(n1, n2, random_stochastic_rows(n1 * n2, m, rng));
    const Distribution pi(flat_dirichlet(3, rng));
    rec.set_instance(i, s, [&] {
      return json{{"channel", channel_json(w)},
                  {"codebooks", {{"c1", cb.first()}, {"c2", cb.second()}}},
                  {"qcond", channel_json(qc)},
                  {"pi", probs_json(pi)}}
          .dump();
    });

    for (double g : gammas) {
      rec.record("yo>=han", yo_specialized(w, cb, g).bound - han_bound(w, cb, g).bound);
    }

    const auto embed = setting3_embed(cb, w);
    const auto joint = joint_from_setting1(embed.input, embed.channel);
    const std::vector<DominatedFamily> families{
        DominatedFamily::from_marginals(joint),
        random_dominated_family(cb.M1(), cb.M2(), m, rng)};
    for (const auto& a : grid) {
      for (const auto& fam : families) {
        rec.record("theorem1>=cor1",
                   theorem1_bound(joint, fam, a).bound - cor1_bound(joint, fam, a).bound);
      }
    }

    const double M1 = static_cast<double>(cb.M1());
    const double M2 = static_cast<double>(cb.M2());
    const double M3 = static_cast<double>(cb.M3());
    const auto enc = EncoderPair::deterministic(cb.first(), n1, cb.second(), n2);
    for (const ClassicalMAC* q : {&w, &qc}) {
      const auto qj = joint_from_setting1(Distribution::uniform(cb.M3()),
                                          restrict_to_codebooks(*q, cb));
      const auto fam = DominatedFamily::from_marginals(qj);
      for (double gp : gamma_primes) {
        const double yo = yagi_oohama_bound(w, cb, *q, pi, gp).bound;
        const AlphaTriple a(gp * pi[0] / M1, gp * pi[1] / M2, gp * pi[2] / M3);
        rec.equal("cor1==yo", cor1_bound(joint, fam, a).bound, yo);
        rec.equal("cor4==yo", cor4_bound(w, enc, *q, pi, gp).bound, yo);
      }
    }
    const double total = M1 + M2 + M3;
    const Distribution share({M1 / total, M2 / total, M3 / total});
    for (double g : gammas) {
      rec.equal("yo_specialized==yo", yo_specialized(w, cb, g).bound,
                yagi_oohama_bound(w, cb, w, share, g * total).bound);
    }
  }
}

void suite_quantum_classical(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  for (const char* c : {"theorem2==theorem1", "cor5==cor1", "cor6==cor2", "cor7==cor3",
                        "pe_q1==pe_setting1", "pe_q2==pe_setting2"}) {
    rec.declare(c, 1e-9);
  }
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    const auto n1 = rand_size(rng, 1, 3), n2 = rand_size(rng, 1, 3), m = rand_size(rng, 1, 4);
    const auto w = random_mac(n1, n2, m, rng);
    const auto p = random_distribution(n1 * n2, rng);
    const auto M1 = rand_size(rng, 1, 3), M2 = rand_size(rng, 1, 3);
    const auto enc = random_encoders(M1, n1, M2, n2, rng);
    rec.set_instance(i, s, [&] {
      return json{{"channel", channel_json(w)}, {"input", probs_json(p)},
                  {"encoders", encoders_json(enc)}}
          .dump();
    });
    const auto wq = diag_embed(w);
    const auto joint = joint_from_setting1(p, w);
    const auto fam = DominatedFamily::from_marginals(joint);
    const auto sfam = average_family(p, wq);

    std::vector<AlphaTriple> alphas{AlphaTriple(0, 0, 0.5), AlphaTriple(0, 0, 0)};
    for (int k = 0; k < 6; ++k) {
      const double a1 = 0.6 * uniform01(rng), a2 = 0.6 * uniform01(rng), a3 = 0.6 * uniform01(rng);
      alphas.emplace_back(a1, a2, a3);
    }
    for (const auto& a : alphas) {
      rec.equal("theorem2==theorem1", theorem2_positive_part_sum(p, wq, sfam, a),
                theorem1_positive_part_sum(joint, fam, a));
      rec.equal("cor5==cor1", cor5_bound(p, wq, sfam, a).bound, cor1_bound(joint, fam, a).bound);
      rec.equal("cor6==cor2", cor6_bound(p, wq, a).bound, cor2_bound(joint, a).bound);
      const AlphaTriple g(3 * a.a1(), 3 * a.a2(), 3 * a.a3());
      rec.equal("cor7==cor3",
                cor7_bound(wq, enc, induced_encoder_sigma_family(wq, enc), g).bound,
                cor3_bound(w, enc, induced_encoder_family(w, enc), g).bound);
    }
    std::vector<Decoder> decoders{map_decoder(joint), random_decoder(n1, n2, m, rng),
                                  random_deterministic_decoder(n1, n2, m, rng)};
    for (const auto& g : decoders) {
      rec.equal("pe_q1==pe_setting1", pe_q1(p, wq, diag_povm(g)), pe_setting1(p, w, g));
    }
    for (int k = 0; k < 3; ++k) {
      const auto g = k == 0 ? random_deterministic_decoder(enc.M1(), enc.M2(), m, rng)
                            : random_decoder(enc.M1(), enc.M2(), m, rng);
      rec.equal("pe_q2==pe_setting2", pe_q2(wq, enc, diag_povm(g)), pe_setting2(w, enc, g));
    }
  }
}

void suite_theorem2(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  rec.declare("theorem2", 1e-8);
  rec.declare("cor5<=pe", 1e-8);
  rec.declare("cor6<=pe", 1e-8);
  const auto grid = alpha_grid({0.0, 0.1, 0.25, 0.5, 1.0});
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    const auto n1 = rand_size(rng, 1, 3), n2 = rand_size(rng, 1, 3);
    const auto dim = static_cast<Eigen::Index>(rand_size(rng, 1, 4));
    const auto wq = random_cq_mac(n1, n2, dim, rng);
    const auto p = random_distribution(n1 * n2, rng);
    const double mix = uniform01(rng);
    rec.set_instance(i, s, [&] {
      return json{{"channel", channel_json(wq)}, {"input", probs_json(p)}, {"mix", mix}}.dump();
    });
    const std::vector<SigmaFamily> families{average_family(p, wq),
                                            constructive_sigma_family(p, wq, mix)};
    std::vector<double> pes{pe_q1(p, wq, pgm_decoder(p, wq))};
    for (int k = 0; k < 50; ++k) pes.push_back(pe_q1(p, wq, random_povm(dim, n1, n2, rng)));
    const double pe_best = *std::min_element(pes.begin(), pes.end());
    for (const auto& a : grid) {
      for (const auto& fam : families) {
        const double sum = theorem2_positive_part_sum(p, wq, fam, a);
        for (double pe : pes) rec.record("theorem2", sum - (1.0 - pe - a.sum()));
        rec.record("cor5<=pe", pe_best - cor5_bound(p, wq, fam, a).bound);
      }
      rec.record("cor6<=pe", pe_best - cor6_bound(p, wq, a).bound);
    }
  }
}

void suite_linalg(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  rec.declare("positive_part_identity", 1e-10);
  rec.declare("projector_idempotent", 1e-10);
  rec.declare("positive_part_monotone", 1e-10);
  rec.declare("eigenvalues_vs_reference", 1e-10);
  rec.declare("eigen_reconstruction", 1e-10);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    const auto dim = static_cast<Eigen::Index>(rand_size(rng, 1, 6));
    HermitianOperator a = random_hermitian(dim, rng);
    if (i % 4 == 3) {
      // Repeated eigenvalues in a random basis.
      Eigen::VectorXd d(dim);
      for (Eigen::Index k = 0; k < dim; ++k) d(k) = static_cast<double>(k % 2) - 0.5;
      a = conjugate_by(random_unitary(dim, rng), HermitianOperator::diagonal(d));
    }
    const auto c = random_hermitian(dim, rng);
    const auto b = a + uniform01(rng) * random_psd(dim, rng);
    rec.set_instance(i, s, [&] {
      return json{{"dim", static_cast<std::size_t>(dim)}}.dump();
    });
    const double scale = std::max(1.0, a.matrix().norm());

    rec.equal("positive_part_identity", positive_part_trace(a),
              trace_product(a, projector_geq(a, HermitianOperator::zero(dim)).op()));
    const auto proj = projector_leq(a, c).matrix();
    rec.record("projector_idempotent", -(proj * proj - proj).norm());
    rec.record("positive_part_monotone", positive_part_trace(b) - positive_part_trace(a));

    const auto eig = hermitian_eig(a);
    Eigen::SelfAdjointEigenSolver<CMatrix> ref(a.matrix());
    Eigen::VectorXd ref_values = ref.eigenvalues().reverse();
    rec.record("eigenvalues_vs_reference", -(eig.values - ref_values).cwiseAbs().maxCoeff() / scale);
    const CMatrix rebuilt = eig.vectors * eig.values.cast<std::complex<double>>().asDiagonal() *
                            eig.vectors.adjoint();
    const double orth =
        (eig.vectors.adjoint() * eig.vectors - CMatrix::Identity(dim, dim)).norm();
    rec.record("eigen_reconstruction",
               -std::max((rebuilt - a.matrix()).norm() / scale, orth));
  }
}

void suite_eq74(Recorder& rec, std::uint64_t seed, std::size_t instances) {
  rec.declare("converse_inequality", kConverseTolerance);
  rec.declare("stochastic_encoder_bound", 1e-8);
  rec.declare("chain_code_to_a", 1e-10);
  rec.declare("chain_a_to_b", 1e-10);
  rec.declare("chain_b_to_complement", 1e-10);
  rec.declare("rate_precondition", 0.0);
  const std::vector<double> gammas{0.05, 0.1, 0.5};
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = derive_seed(seed, i);
    Rng rng(s);
    CqMAC base;
    switch (i % 3) {
      case 0:
        base = random_cq_mac(2, 2, 2, rng);
        break;
      case 1:
        base = diag_embed(adder_mac());
        break;
      default:
        base = diag_embed(random_mac(2, 2, 2, rng));
        break;
    }
    const std::size_t n = rand_size(rng, 1, base.dim() > 2 ? 2 : 3);
    const auto wn = product_extend(base, n);
    const auto M1 = rand_size(rng, 1, 4), M2 = rand_size(rng, 1, 4);
    const auto enc = random_encoders(M1, wn.n1(), M2, wn.n2(), rng);
    const bool use_pgm = uniform01(rng) < 0.5;
    const CodeInstance code{n, enc,
                            use_pgm ? pgm_decoder(wn, enc) : random_povm(wn.dim(), M1, M2, rng)};
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    const auto [p1, p2] = induced_input(enc);
    const auto st = wp_triple(p1, p2, wn);
    const double dn = static_cast<double>(n);
    for (double g : gammas) {
      const RatePair rates(u1 * (std::log(static_cast<double>(M1)) / dn + g),
                           u2 * (std::log(static_cast<double>(M2)) / dn + g));
      rec.set_instance(i, s, [&] {
        return json{{"channel", channel_json(base)}, {"n", n}, {"encoders", encoders_json(enc)},
                    {"decoder", use_pgm ? "pgm" : "random"}, {"gamma", g},
                    {"r1", rates.r1}, {"r2", rates.r2}}
            .dump();
      });
      const auto r = finite_n_converse_check(wn, code, st, g, rates);
      rec.record("converse_inequality", r.slack);
      rec.record("stochastic_encoder_bound",
                 r.error_probability - (1.0 - r.message_sum - 3.0 * std::exp(-dn * g)));
      rec.record("chain_code_to_a", r.a_sum - r.message_sum);
      rec.record("chain_a_to_b", r.b_sum - r.a_sum);
      rec.record("chain_b_to_complement", r.b_complement - r.b_sum);
      rec.record("rate_precondition", r.precondition_met ? 0.0 : -1.0);
    }
  }
}

using SuiteFn = void (*)(Recorder&, std::uint64_t, std::size_t);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  std::size_t default_instances;
};

const SuiteEntry kSuites[] = {
    {"theorem1", suite_theorem1, 500},
    {"theorem2", suite_theorem2, 200},
    {"yo-vs-han", suite_yo_vs_han, 200},
    {"quantum-classical", suite_quantum_classical, 200},
    {"eq74", suite_eq74, 100},
    {"linalg", suite_linalg, 200},
};

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& e : kSuites) {
    if (name == e.name) return e;
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (c.failures != 0) return false;
  }
  return true;
}

const CheckStat& SuiteResult::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::size_t default_instances(const std::string& suite) {
  return find_suite(suite).default_instances;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t instances) {
  const auto& entry = find_suite(suite);
  SuiteResult r;
  r.suite = suite;
  r.seed = seed;
  r.instances = instances;
  Recorder rec(r);
  entry.fn(rec, seed, instances);
  return r;
}

std::string suite_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry = {{"name", c.name}, {"tolerance", c.tolerance}, {"count", c.count},
                  {"failures", c.failures}};
    entry["min_slack"] = std::isfinite(c.min_slack) ? json(c.min_slack) : json(nullptr);
    checks.push_back(std::move(entry));
  }
  json failures = json::array();
  for (const auto& f : r.failures) {
    json detail = f.detail.empty() ? json(nullptr) : json::parse(f.detail);
    failures.push_back({{"check", f.check}, {"instance", f.instance},
                        {"instance_seed", f.instance_seed}, {"slack", f.slack},
                        {"detail", detail}});
  }
  json doc = {{"suite", r.suite},   {"seed", r.seed},     {"instances", r.instances},
              {"passed", r.passed()}, {"checks", checks}, {"failures", failures}};
  return doc.dump(2);
}

}  // namespace macbound
