// Copyright 2026 The selfdual Authors.
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

#include "selfdual/ag_code.h"

#include <string>

#include "selfdual/error.h"
#include "selfdual/selfdual.h"

namespace selfdual {
namespace {

std::vector<Place> EvaluationPlaces(const Divisor& d) {
  std::vector<Place> places;
  for (const auto& [place, c] : d.terms()) {
    if (c != 1) {
      throw Error(ErrorCode::kDomainError,
                  "D must be a sum of distinct places; coefficient " +
                      std::to_string(c) + " at " + place.ToString());
    }
    if (!place.IsRational()) {
      throw Error(ErrorCode::kNonRationalEvaluationPlace,
                  "evaluation place " + place.ToString() + " is not rational");
    }
    places.push_back(place);
  }
  return places;
}

const FiniteField& FieldOf(const Divisor& d) {
  if (d.IsZero()) throw Error(ErrorCode::kDomainError, "D is empty");
  return d.terms().begin()->first.field();
}

}  // namespace

bool IsCertified(const Divisor& d, const Differential& omega) {
  if (omega.f.IsZero()) return false;
  std::optional<Elt> common;
  for (const auto& [place, c] : d.terms()) {
    if (!place.IsRational()) return false;
    if (Valuation(omega, place) != -1) return false;
    const Elt r = Residue(omega, place);
    if (common && *common != r) return false;
    common = r;
  }
  return true;
}

LinearCode ClCode(const AGCodeSpec& spec) {
  const std::vector<Place> places = EvaluationPlaces(spec.d);
  for (const auto& [place, c] : spec.g.terms()) {
    if (spec.d.Coeff(place) != 0) {
      throw Error(ErrorCode::kSupportOverlap,
                  "supp G meets supp D at " + place.ToString());
    }
  }
  std::vector<Vector> rows;
  for (const auto& f : RiemannRochBasis(spec.field, spec.g)) {
    Vector row;
    row.reserve(places.size());
    for (const auto& place : places) row.push_back(f.ValueAt(place));
    rows.push_back(std::move(row));
  }
  return LinearCode::FromRows(spec.field, places.size(), rows);
}

LinearCode AgDual(const AGCodeSpec& spec) {
  if (!spec.omega || !IsCertified(spec.d, *spec.omega)) {
    throw Error(ErrorCode::kOmegaNotCertified,
                "omega must have simple poles with equal residues on D");
  }
  AGCodeSpec dual = spec;
  dual.g = spec.d + DifferentialDivisor(*spec.omega) - spec.g;
  return ClCode(dual);
}

Differential MakeOmegaFor(const Divisor& d) {
  const FiniteField& field = FieldOf(d);
  Polynomial u = Polynomial::Constant(field, 1);
  for (const auto& place : EvaluationPlaces(d)) {
    if (place.IsInfinite()) {
      throw Error(ErrorCode::kInfinitePlaceInD,
                  "du/u construction needs finite places only");
    }
    u = u * place.Poly();
  }
  Differential omega{RationalFunction(u.Derivative(), u)};
  if (!IsCertified(d, omega)) {
    throw Error(ErrorCode::kOmegaNotCertified, "du/u failed certification");
  }
  return omega;
}

SelfDualAgResult SelfDualAg(const Divisor& d, const Differential& omega) {
  const FiniteField& field = FieldOf(d);
  const std::size_t n = EvaluationPlaces(d).size();
  if (!CheckStar(field.q(), n).satisfied) {
    throw Error(ErrorCode::kStarViolated,
                "no self-dual code of length " + std::to_string(n) +
                    " exists over F_" + std::to_string(field.q()));
  }
  if (!IsCertified(d, omega)) {
    throw Error(ErrorCode::kOmegaNotCertified,
                "omega must have simple poles with equal residues on D");
  }
  const Divisor canonical = DifferentialDivisor(omega);
  const Divisor sum = d + canonical;
  const Divisor floor = sum.FloorEven();
  const Divisor g = floor.Half();

  AGCodeSpec spec{field, d, g, omega};
  LinearCode base = ClCode(spec);
  if (!IsSelfOrthogonal(base)) {
    throw Error(ErrorCode::kNotSelfOrthogonal,
                "C_L(G, D) is not self-orthogonal");
  }
  const bool extend = !IsSelfDual(base);
  LinearCode code = extend ? EmbedSelfDual(base) : base;
  return SelfDualAgResult{std::move(code), floor.Degree() / 2 -
                                               canonical.Degree(),
                          g, std::move(base), extend};
}

}  // namespace selfdual
