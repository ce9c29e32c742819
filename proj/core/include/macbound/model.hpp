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

#pragma once

// Probability model for the two-user multiple access channel: distributions,
// channels, encoders, codebooks and the joint distribution p(x1,x2,y).
//
// Alphabets are index sets 0..k-1. Pairs (x1,x2) are flattened as x1*n2 + x2.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace macbound {

// Tolerance on the sum of a probability vector.
inline constexpr double kSumTolerance = 1e-12;
// Entries in [-kClampTolerance, 0) are treated as accumulation noise and set to 0.
inline constexpr double kClampTolerance = 1e-15;
// Default cap on the number of entries of an n-fold product channel.
inline constexpr std::size_t kDefaultProductCap = 1'000'000;

class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t k);
  static Distribution point_mass(std::size_t k, std::size_t at);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

// Matrix whose rows are distributions over the column index.
class StochasticMatrix {
 public:
  StochasticMatrix() = default;
  explicit StochasticMatrix(Eigen::MatrixXd rows);

  Eigen::Index rows() const noexcept { return m_.rows(); }
  Eigen::Index cols() const noexcept { return m_.cols(); }
  double operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// W(y|x1,x2). Also used for auxiliary channels q(y|x1,x2).
class ClassicalMAC {
 public:
  ClassicalMAC() = default;
  // `w` has n1*n2 rows (pair index x1*n2+x2) and m columns.
  ClassicalMAC(std::size_t n1, std::size_t n2, Eigen::MatrixXd w);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t m() const noexcept { return static_cast<std::size_t>(w_.cols()); }
  std::size_t pair_index(std::size_t x1, std::size_t x2) const noexcept { return x1 * n2_ + x2; }

  double operator()(std::size_t x1, std::size_t x2, std::size_t y) const {
    return w_(static_cast<Eigen::Index>(pair_index(x1, x2)), static_cast<Eigen::Index>(y));
  }
  const Eigen::MatrixXd& matrix() const noexcept { return w_.matrix(); }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  StochasticMatrix w_;
};

// Stochastic encoders f1(x1|m1), f2(x2|m2). Row m of f1 is the distribution of x1 given m.
class EncoderPair {
 public:
  EncoderPair() = default;
  EncoderPair(StochasticMatrix f1, StochasticMatrix f2);

  // Deterministic encoders sending message i to codeword c[i].
  static EncoderPair deterministic(std::span<const std::size_t> c1, std::size_t n1,
                                   std::span<const std::size_t> c2, std::size_t n2);

  std::size_t M1() const noexcept { return static_cast<std::size_t>(f1_.rows()); }
  std::size_t M2() const noexcept { return static_cast<std::size_t>(f2_.rows()); }
  std::size_t M3() const noexcept { return M1() * M2(); }
  std::size_t n1() const noexcept { return static_cast<std::size_t>(f1_.cols()); }
  std::size_t n2() const noexcept { return static_cast<std::size_t>(f2_.cols()); }

  double f1(std::size_t x1, std::size_t m1) const {
    return f1_(static_cast<Eigen::Index>(m1), static_cast<Eigen::Index>(x1));
  }
  double f2(std::size_t x2, std::size_t m2) const {
    return f2_(static_cast<Eigen::Index>(m2), static_cast<Eigen::Index>(x2));
  }
  const StochasticMatrix& first() const noexcept { return f1_; }
  const StochasticMatrix& second() const noexcept { return f2_; }

 private:
  StochasticMatrix f1_;
  StochasticMatrix f2_;
};

class CodebookPair {
 public:
  CodebookPair() = default;
  CodebookPair(std::vector<std::size_t> c1, std::vector<std::size_t> c2);

  const std::vector<std::size_t>& first() const noexcept { return c1_; }
  const std::vector<std::size_t>& second() const noexcept { return c2_; }
  std::size_t M1() const noexcept { return c1_.size(); }
  std::size_t M2() const noexcept { return c2_.size(); }
  std::size_t M3() const noexcept { return M1() * M2(); }

  // Throws InvalidModel if a codeword is outside 0..n-1.
  void check_range(std::size_t n1, std::size_t n2) const;

 private:
  std::vector<std::size_t> c1_;
  std::vector<std::size_t> c2_;
};

// p(x1,x2,y) with marginals p(y), p(x1,y), p(x2,y), p(x1), p(x2) cached by
// direct summation. Conditionals p(y|x1), p(y|x2) are undefined where the
// conditioning marginal is zero; asking for one throws UndefinedConditional.
class JointPMF {
 public:
  JointPMF() = default;
  // `p` has n1*n2 rows (pair index) and m columns.
  JointPMF(std::size_t n1, std::size_t n2, Eigen::MatrixXd p);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t m() const noexcept { return static_cast<std::size_t>(p_.cols()); }

  double operator()(std::size_t x1, std::size_t x2, std::size_t y) const {
    return p_(static_cast<Eigen::Index>(x1 * n2_ + x2), static_cast<Eigen::Index>(y));
  }
  double py(std::size_t y) const { return py_(static_cast<Eigen::Index>(y)); }
  double px1y(std::size_t x1, std::size_t y) const {
    return px1y_(static_cast<Eigen::Index>(x1), static_cast<Eigen::Index>(y));
  }
  double px2y(std::size_t x2, std::size_t y) const {
    return px2y_(static_cast<Eigen::Index>(x2), static_cast<Eigen::Index>(y));
  }
  double px1(std::size_t x1) const { return px1_(static_cast<Eigen::Index>(x1)); }
  double px2(std::size_t x2) const { return px2_(static_cast<Eigen::Index>(x2)); }
  double px1x2(std::size_t x1, std::size_t x2) const;

  bool defined_given_x1(std::size_t x1) const { return px1(x1) > 0.0; }
  bool defined_given_x2(std::size_t x2) const { return px2(x2) > 0.0; }
  double py_given_x1(std::size_t y, std::size_t x1) const;
  double py_given_x2(std::size_t y, std::size_t x2) const;

  const Eigen::MatrixXd& matrix() const noexcept { return p_; }
  const Eigen::VectorXd& output_marginal() const noexcept { return py_; }
  const Eigen::MatrixXd& x1y_marginal() const noexcept { return px1y_; }
  const Eigen::MatrixXd& x2y_marginal() const noexcept { return px2y_; }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  Eigen::MatrixXd p_;
  Eigen::VectorXd py_;
  Eigen::MatrixXd px1y_;
  Eigen::MatrixXd px2y_;
  Eigen::VectorXd px1_;
  Eigen::VectorXd px2_;
};

// Product p1(x1)p2(x2) flattened over pair index x1*n2+x2.
Distribution product_input(const Distribution& p1, const Distribution& p2);

JointPMF joint_from_setting1(const Distribution& p, const ClassicalMAC& w);

// (1/M1M2) sum_{m1,m2} f1(x1|m1) f2(x2|m2) W(y|x1,x2).
JointPMF joint_from_setting2(const EncoderPair& enc, const ClassicalMAC& w);

// Uniform mixtures of the encoder rows: p1(x1) = (1/M1) sum_m f1(x1|m), same for user 2.
std::pair<Distribution, Distribution> induced_input(const EncoderPair& enc);

// Codebook instance recast as an input distribution. Codeword indices replace
// symbols: row (i,j) of `channel` is W(.|c1[i],c2[j]) and `input` is uniform
// over the M1 x M2 index grid.
struct Setting3Embedding {
  Distribution input;
  ClassicalMAC channel;
};

Setting3Embedding setting3_embed(const CodebookPair& cb, const ClassicalMAC& w);

// Rows of `w` restricted to codeword pairs (no input distribution attached).
ClassicalMAC restrict_to_codebooks(const ClassicalMAC& w, const CodebookPair& cb);

// n-fold memoryless extension W^n. Strings are indexed in mixed radix with the
// first letter most significant.
ClassicalMAC product_extend(const ClassicalMAC& w, std::size_t n,
                            std::size_t cap = kDefaultProductCap);

// i.i.d. extension p^n with the same string indexing as product_extend.
Distribution product_extend(const Distribution& p, std::size_t n,
                            std::size_t cap = kDefaultProductCap);

}  // namespace macbound
