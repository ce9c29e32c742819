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

#include "macbound/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "macbound/error.hpp"

namespace macbound {
namespace {

std::size_t checked_power(std::size_t base, std::size_t n, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && out > cap / base) {
      throw SizeCapExceeded("product extension exceeds size cap of " + std::to_string(cap));
    }
    out *= base;
  }
  return out;
}

// Clamps accumulation noise and checks a probability vector in place.
template <typename Range>
void normalize_check(Range&& values, const std::string& what) {
  double sum = 0.0;
  for (auto& v : values) {
    if (!std::isfinite(v)) throw InvalidModel(what + ": non-finite entry");
    if (v < 0.0) {
      if (v < -kClampTolerance) {
        throw InvalidModel(what + ": negative entry " + std::to_string(v));
      }
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidModel(what + ": entries sum to " + std::to_string(sum));
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidModel("distribution: empty alphabet");
  normalize_check(probs_, "distribution");
}

Distribution Distribution::uniform(std::size_t k) {
  if (k == 0) throw InvalidModel("distribution: empty alphabet");
  return Distribution(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Distribution Distribution::point_mass(std::size_t k, std::size_t at) {
  if (at >= k) throw InvalidModel("distribution: point mass outside alphabet");
  std::vector<double> v(k, 0.0);
  v[at] = 1.0;
  return Distribution(std::move(v));
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd rows) : m_(std::move(rows)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw InvalidModel("stochastic matrix: empty");
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    auto row = m_.row(r);
    normalize_check(row, "row " + std::to_string(r));
  }
}

ClassicalMAC::ClassicalMAC(std::size_t n1, std::size_t n2, Eigen::MatrixXd w)
    : n1_(n1), n2_(n2) {
  if (n1 == 0 || n2 == 0) throw InvalidModel("channel: empty input alphabet");
  if (static_cast<std::size_t>(w.rows()) != n1 * n2) {
    throw DimensionMismatch("channel: expected " + std::to_string(n1 * n2) + " rows, got " +
                            std::to_string(w.rows()));
  }
  w_ = StochasticMatrix(std::move(w));
}

EncoderPair::EncoderPair(StochasticMatrix f1, StochasticMatrix f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {}

EncoderPair EncoderPair::deterministic(std::span<const std::size_t> c1, std::size_t n1,
                                       std::span<const std::size_t> c2, std::size_t n2) {
  auto build = [](std::span<const std::size_t> c, std::size_t n) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(c.size()),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw InvalidModel("encoder: codeword out of range");
      f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c[i])) = 1.0;
    }
    return StochasticMatrix(std::move(f));
  };
  return EncoderPair(build(c1, n1), build(c2, n2));
}

CodebookPair::CodebookPair(std::vector<std::size_t> c1, std::vector<std::size_t> c2)
    : c1_(std::move(c1)), c2_(std::move(c2)) {
  auto check = [](const std::vector<std::size_t>& c, const char* name) {
    if (c.empty()) throw InvalidModel(std::string("codebook ") + name + ": empty");
    std::set<std::size_t> seen(c.begin(), c.end());
    if (seen.size() != c.size()) {
      throw InvalidModel(std::string("codebook ") + name + ": duplicate codeword");
    }
  };
  check(c1_, "c1");
  check(c2_, "c2");
}

void CodebookPair::check_range(std::size_t n1, std::size_t n2) const {
  for (auto c : c1_) {
    if (c >= n1) throw InvalidModel("codebook c1: codeword " + std::to_string(c) + " out of range");
  }
  for (auto c : c2_) {
    if (c >= n2) throw InvalidModel("codebook c2: codeword " + std::to_string(c) + " out of range");
  }
}

JointPMF::JointPMF(std::size_t n1, std::size_t n2, Eigen::MatrixXd p)
    : n1_(n1), n2_(n2), p_(std::move(p)) {
  if (static_cast<std::size_t>(p_.rows()) != n1 * n2 || p_.cols() == 0) {
    throw DimensionMismatch("joint: shape does not match n1*n2 x m");
  }
  for (Eigen::Index i = 0; i < p_.size(); ++i) {
    double& v = p_.data()[i];
    if (!std::isfinite(v) || v < -kClampTolerance) throw InvalidModel("joint: invalid entry");
    if (v < 0.0) v = 0.0;
  }
  const double total = p_.sum();
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw InvalidModel("joint: entries sum to " + std::to_string(total));
  }
  const auto m = p_.cols();
  py_ = Eigen::VectorXd::Zero(m);
  px1y_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n1), m);
  px2y_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n2), m);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      auto row = p_.row(static_cast<Eigen::Index>(x1 * n2 + x2));
      px1y_.row(static_cast<Eigen::Index>(x1)) += row;
      px2y_.row(static_cast<Eigen::Index>(x2)) += row;
      py_ += row.transpose();
    }
  }
  px1_ = px1y_.rowwise().sum();
  px2_ = px2y_.rowwise().sum();
}

double JointPMF::px1x2(std::size_t x1, std::size_t x2) const {
  return p_.row(static_cast<Eigen::Index>(x1 * n2_ + x2)).sum();
}

double JointPMF::py_given_x1(std::size_t y, std::size_t x1) const {
  if (!defined_given_x1(x1)) {
    throw UndefinedConditional("p(y|x1) undefined at x1=" + std::to_string(x1));
  }
  return px1y(x1, y) / px1(x1);
}

double JointPMF::py_given_x2(std::size_t y, std::size_t x2) const {
  if (!defined_given_x2(x2)) {
    throw UndefinedConditional("p(y|x2) undefined at x2=" + std::to_string(x2));
  }
  return px2y(x2, y) / px2(x2);
}

Distribution product_input(const Distribution& p1, const Distribution& p2) {
  std::vector<double> v(p1.size() * p2.size());
  for (std::size_t a = 0; a < p1.size(); ++a) {
    for (std::size_t b = 0; b < p2.size(); ++b) v[a * p2.size() + b] = p1[a] * p2[b];
  }
  return Distribution(std::move(v));
}

JointPMF joint_from_setting1(const Distribution& p, const ClassicalMAC& w) {
  if (p.size() != w.n1() * w.n2()) {
    throw DimensionMismatch("input distribution size " + std::to_string(p.size()) +
                            " does not match n1*n2 = " + std::to_string(w.n1() * w.n2()));
  }
  Eigen::MatrixXd joint = w.matrix();
  for (std::size_t k = 0; k < p.size(); ++k) joint.row(static_cast<Eigen::Index>(k)) *= p[k];
  return JointPMF(w.n1(), w.n2(), std::move(joint));
}

std::pair<Distribution, Distribution> induced_input(const EncoderPair& enc) {
  auto mix = [](const StochasticMatrix& f) {
    Eigen::VectorXd avg = f.matrix().colwise().mean().transpose();
    return Distribution(std::vector<double>(avg.data(), avg.data() + avg.size()));
  };
  return {mix(enc.first()), mix(enc.second())};
}

JointPMF joint_from_setting2(const EncoderPair& enc, const ClassicalMAC& w) {
  if (enc.n1() != w.n1() || enc.n2() != w.n2()) {
    throw DimensionMismatch("encoder output alphabets do not match channel inputs");
  }
  // Summed message by message rather than through induced_input so the two
  // constructions can be compared against each other.
  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(w.matrix().rows(), w.matrix().cols());
  const double scale = 1.0 / static_cast<double>(enc.M3());
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
        const double a = enc.f1(x1, m1);
        if (a == 0.0) continue;
        for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
          const double b = enc.f2(x2, m2);
          if (b == 0.0) continue;
          const auto r = static_cast<Eigen::Index>(w.pair_index(x1, x2));
          joint.row(r) += (scale * a * b) * w.matrix().row(r);
        }
      }
    }
  }
  return JointPMF(w.n1(), w.n2(), std::move(joint));
}

ClassicalMAC restrict_to_codebooks(const ClassicalMAC& w, const CodebookPair& cb) {
  cb.check_range(w.n1(), w.n2());
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(cb.M3()), w.matrix().cols());
  for (std::size_t i = 0; i < cb.M1(); ++i) {
    for (std::size_t j = 0; j < cb.M2(); ++j) {
      rows.row(static_cast<Eigen::Index>(i * cb.M2() + j)) =
          w.matrix().row(static_cast<Eigen::Index>(w.pair_index(cb.first()[i], cb.second()[j])));
    }
  }
  return ClassicalMAC(cb.M1(), cb.M2(), std::move(rows));
}

Setting3Embedding setting3_embed(const CodebookPair& cb, const ClassicalMAC& w) {
  return {Distribution::uniform(cb.M3()), restrict_to_codebooks(w, cb)};
}

ClassicalMAC product_extend(const ClassicalMAC& w, std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidModel("product_extend: n must be positive");
  const std::size_t n1 = checked_power(w.n1(), n, cap);
  const std::size_t n2 = checked_power(w.n2(), n, cap);
  const std::size_t m = checked_power(w.m(), n, cap);
  if (n1 * n2 > cap / m) {
    throw SizeCapExceeded("product extension exceeds size cap of " + std::to_string(cap));
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n1 * n2), static_cast<Eigen::Index>(m));
  std::vector<std::size_t> a1(n), a2(n), b(n);
  for (std::size_t s1 = 0; s1 < n1; ++s1) {
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      std::size_t r1 = s1, r2 = s2;
      for (std::size_t k = n; k-- > 0;) {
        a1[k] = r1 % w.n1();
        r1 /= w.n1();
        a2[k] = r2 % w.n2();
        r2 /= w.n2();
      }
      for (std::size_t t = 0; t < m; ++t) {
        std::size_t r = t;
        double prob = 1.0;
        for (std::size_t k = n; k-- > 0;) {
          prob *= w(a1[k], a2[k], r % w.m());
          r /= w.m();
        }
        out(static_cast<Eigen::Index>(s1 * n2 + s2), static_cast<Eigen::Index>(t)) = prob;
      }
    }
  }
  return ClassicalMAC(n1, n2, std::move(out));
}

Distribution product_extend(const Distribution& p, std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidModel("product_extend: n must be positive");
  const std::size_t k = checked_power(p.size(), n, cap);
  std::vector<double> v(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t r = s;
    double prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      prob *= p[r % p.size()];
      r /= p.size();
    }
    v[s] = prob;
  }
  return Distribution(std::move(v));
}

}  // namespace macbound
