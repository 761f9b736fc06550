// Copyright 2026 The hamrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "hamrec/core/linalg.hpp"

namespace hamrec {

using Vec3 = Eigen::Vector3d;

/// H = n . sigma for a unit vector n.
class BlochHamiltonian {
 public:
  explicit BlochHamiltonian(const Vec3 &n) : n_(n) {
    if (!n.allFinite() || std::abs(n.norm() - 1.0) > 1e-12)
      throw DomainError("BlochHamiltonian: axis must be a unit vector");
  }
  BlochHamiltonian(double x, double y, double z)
      : BlochHamiltonian(Vec3(x, y, z)) {}

  /// Normalizes v first; v must be nonzero.
  static BlochHamiltonian normalized(const Vec3 &v) {
    if (!v.allFinite() || v.norm() < 1e-12)
      throw DomainError("BlochHamiltonian: zero axis");
    return BlochHamiltonian(Vec3(v / v.norm()));
  }
  static BlochHamiltonian x() { return BlochHamiltonian(1, 0, 0); }
  static BlochHamiltonian y() { return BlochHamiltonian(0, 1, 0); }
  static BlochHamiltonian z() { return BlochHamiltonian(0, 0, 1); }

  /// Accepts "x", "y", "z" or "nx,ny,nz" (normalized on parse).
  static BlochHamiltonian parse(const std::string &s) {
    if (s == "x" || s == "X") return x();
    if (s == "y" || s == "Y") return y();
    if (s == "z" || s == "Z") return z();
    std::array<double, 3> v{};
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= 3) throw DomainError("axis: expected three components");
      try {
        size_t used = 0;
        v[i++] = std::stod(item, &used);
        if (used != item.size()) throw DomainError("axis: bad number");
      } catch (const std::logic_error &) {
        throw DomainError("axis: cannot parse '" + s + "'");
      }
    }
    if (i != 3) throw DomainError("axis: expected three components");
    return normalized(Vec3(v[0], v[1], v[2]));
  }

  const Vec3 &axis() const { return n_; }

  ComplexMatrix matrix() const {
    return n_(0) * pauli_x() + n_(1) * pauli_y() + n_(2) * pauli_z();
  }

 private:
  Vec3 n_;
};

/// exp(-i theta n.sigma) = cos(theta) I - i sin(theta) n.sigma.
inline ComplexMatrix rotation_gate(const BlochHamiltonian &h, double theta) {
  return std::cos(theta) * pauli_i() - I_UNIT * std::sin(theta) * h.matrix();
}

/// SU(2) element U with U (n.sigma) U^dagger = (R n).sigma for R in SO(3).
inline ComplexMatrix su2_from_rotation(const Eigen::Matrix3d &r) {
  if ((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() >
          1e-10 ||
      std::abs(r.determinant() - 1.0) > 1e-10)
    throw DomainError("su2_from_rotation: not a proper rotation");
  Eigen::Quaterniond q(r);
  q.normalize();
  // rotation by angle a about m corresponds to exp(-i a m.sigma / 2)
  return q.w() * pauli_i() -
         I_UNIT * (q.x() * pauli_x() + q.y() * pauli_y() + q.z() * pauli_z());
}

/// U with U (n0.sigma) U^dagger = X and U (n1.sigma) U^dagger = Z.
inline ComplexMatrix frame_unitary(const BlochHamiltonian &h0,
                                   const BlochHamiltonian &h1) {
  const Vec3 &n0 = h0.axis();
  const Vec3 &n1 = h1.axis();
  if (std::abs(n0.dot(n1)) > 1e-12)
    throw DomainError("frame_unitary: axes must be orthogonal");
  Vec3 n2 = n1.cross(n0);
  Eigen::Matrix3d frame;
  frame.col(0) = n0;
  frame.col(1) = n2;
  frame.col(2) = n1;
  return su2_from_rotation(frame.transpose());
}

/// V with V Z V^dagger = n.sigma.
inline ComplexMatrix z_to_axis_unitary(const BlochHamiltonian &h) {
  const Vec3 &n = h.axis();
  Vec3 z(0, 0, 1);
  Vec3 m = z.cross(n);
  double s = m.norm(), c = z.dot(n);
  if (s < 1e-15) {
    if (c > 0) return pauli_i();
    return -I_UNIT * pauli_x();  // pi rotation about x
  }
  m /= s;
  double angle = std::atan2(s, c);
  return std::cos(angle / 2) * pauli_i() -
         I_UNIT * std::sin(angle / 2) *
             (m(0) * pauli_x() + m(1) * pauli_y() + m(2) * pauli_z());
}

}  // namespace hamrec
