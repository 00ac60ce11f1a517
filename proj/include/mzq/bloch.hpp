// Copyright 2026 The mzq Authors
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

#include <utility>

#include "mzq/tolerances.hpp"
#include "mzq/vec3.hpp"

namespace mzq {

/// Real 3-vector s with |s| <= 1 parametrizing rho = (I + s.sigma) / 2.
///
/// Construction rejects non-finite components and norms above 1 + eps_pos.
/// Norms in (1, 1 + eps_pos] are rescaled onto the unit sphere so that
/// round-off from composed rotations never produces an unphysical state.
class BlochVector {
 public:
  BlochVector() = default;
  BlochVector(double sx, double sy, double sz, double eps_pos = kEpsPos);
  explicit BlochVector(const Vec3& s, double eps_pos = kEpsPos)
      : BlochVector(s.x, s.y, s.z, eps_pos) {}

  double x() const { return s_.x; }
  double y() const { return s_.y; }
  double z() const { return s_.z; }
  const Vec3& vec() const { return s_; }

  double norm() const { return s_.norm(); }
  double norm_squared() const { return s_.norm_squared(); }

  bool operator==(const BlochVector&) const = default;

 private:
  Vec3 s_;
};

/// A qubit density operator in Bloch form.
///
/// The derived variables follow the matrix layout
///   [[w+, r e^{-i theta}], [r e^{i theta}, w-]]
/// with w+- = (1 +- sz)/2, r = |(sx, sy)|/2 and theta = atan2(sy, sx) in [0, 2 pi).
/// theta is 0 when r = 0.
class QubitState {
 public:
  QubitState() = default;
  explicit QubitState(const BlochVector& s) : bloch_(s) {}
  QubitState(double sx, double sy, double sz) : bloch_(sx, sy, sz) {}

  /// Builds the state from the matrix variables (w+, r, theta).
  static QubitState from_matrix_variables(double w_plus, double r, double theta);

  const BlochVector& bloch() const { return bloch_; }

  double w_plus() const { return 0.5 * (1.0 + bloch_.z()); }
  double w_minus() const { return 0.5 * (1.0 - bloch_.z()); }
  double r() const;
  double theta() const;

  bool operator==(const QubitState&) const = default;

 private:
  BlochVector bloch_;
};

/// Unit vector on the Bloch sphere; |a| = 1 within kEpsUnit.
class UnitAxis {
 public:
  explicit UnitAxis(const Vec3& a);
  UnitAxis(double ax, double ay, double az) : UnitAxis(Vec3{ax, ay, az}) {}

  /// Scales any nonzero vector onto the sphere.
  static UnitAxis normalized(const Vec3& v);

  const Vec3& vec() const { return a_; }
  double dot(const Vec3& v) const { return a_.dot(v); }

  bool operator==(const UnitAxis&) const = default;

 private:
  Vec3 a_;
};

/// Hermitian two-level observable alpha1 I + alpha2 a.sigma.
class BlochObservable {
 public:
  BlochObservable(double alpha1, double alpha2, const UnitAxis& axis);
  explicit BlochObservable(const UnitAxis& axis) : BlochObservable(0.0, 1.0, axis) {}

  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  const UnitAxis& axis() const { return axis_; }

  /// {alpha1 + alpha2, alpha1 - alpha2}: the + and - outcome values.
  std::pair<double, double> eigenvalues() const { return {alpha1_ + alpha2_, alpha1_ - alpha2_}; }

  bool operator==(const BlochObservable&) const = default;

 private:
  double alpha1_;
  double alpha2_;
  UnitAxis axis_;
};

/// Two-outcome distribution {p+, p-}.
class ProbPair {
 public:
  ProbPair(double p_plus, double p_minus);

  /// {(1 + u)/2, (1 - u)/2} for a signed projection u in [-1, 1].
  static ProbPair from_projection(double u);

  double p_plus() const { return p_plus_; }
  double p_minus() const { return p_minus_; }
  double max() const { return p_plus_ > p_minus_ ? p_plus_ : p_minus_; }

 private:
  double p_plus_;
  double p_minus_;
};

/// a.s clamped to [-1, 1].
double projection(const BlochObservable& obs, const QubitState& state);

ProbPair probabilities(const BlochObservable& obs, const QubitState& state);
double expectation(const BlochObservable& obs, const QubitState& state);
double variance(const BlochObservable& obs, const QubitState& state);

/// max_ij |<a_i|b_j>| = sqrt((1 + |a.b|)/2), in [1/sqrt(2), 1].
double overlap(const BlochObservable& a, const BlochObservable& b);

/// Tr rho^2 = (1 + |s|^2)/2.
double purity(const QubitState& state);
bool is_pure(const QubitState& state, double eps_pure = kEpsPure);

}  // namespace mzq
