// Copyright 2026 The horoflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "plane.hpp"

namespace horoflow {

/// All reduced words of length <= L in a finite generating set and its
/// inverses, deduplicated up to projective equality.
///
/// Elements are held as a word tree (parent, last letter) with binary64
/// shadows for fast screening; exact matrices are rebuilt on demand at the
/// caller's working precision.
class FuchsianWordBall {
 public:
  /// Throws DomainError for an empty generator list or a negative length.
  FuchsianWordBall(std::vector<Isometry> generators, int max_word_length);

  struct Shadow {
    double a, b, c, d;
  };

  std::size_t size() const { return shadow_.size(); }
  int max_word_length() const { return max_length_; }
  const std::vector<Isometry>& generators() const { return generators_; }

  /// Letters of element k: +j+1 for generator j, -(j+1) for its inverse.
  std::vector<int> word(std::size_t k) const;
  /// Word length of element k.
  int length(std::size_t k) const { return length_[k]; }
  /// Exact product of the letters of element k, left to right.
  Isometry element(std::size_t k) const;
  const Shadow& shadow(std::size_t k) const { return shadow_[k]; }

  /// Number of reduced words rejected as projective duplicates.
  std::size_t duplicates() const { return duplicates_; }

 private:
  Isometry letter(int code) const;

  std::vector<Isometry> generators_;
  int max_length_;
  std::vector<Shadow> shadow_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int16_t> last_;
  std::vector<std::int8_t> length_;
  std::size_t duplicates_ = 0;
};

struct QuotientMatch {
  Real value;
  std::size_t element;
};

/// min over gamma in the ball of d1(u, gamma v): an upper bound for the
/// distance in the quotient by the group the ball approximates.
QuotientMatch d1_quotient_match(const UnitTangent& u, const UnitTangent& v,
                                const FuchsianWordBall& ball);
Real d1_quotient(const UnitTangent& u, const UnitTangent& v, const FuchsianWordBall& ball);

/// min over gamma in the ball with gamma(inf) finite of |xi - gamma(inf)|.
QuotientMatch orbit_gap_to_infinity(const Real& xi, const FuchsianWordBall& ball);

}  // namespace horoflow
