#pragma once

#include "toric/fan.hpp"

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace toric::testing {

using Rng = std::mt19937_64;

LatticeVector vec(std::initializer_list<std::int64_t> xs);
std::vector<Integer> ints(std::initializer_list<std::int64_t> xs);

std::shared_ptr<const Fan> share(Fan f);

/// Rays (1,1),(0,1),(-1,1),(0,-1) with the four consecutive cones.
std::shared_ptr<const Fan> kite_fan();
/// Values (0,-2,0,-2) on kite_fan.
SupportFunction kite_support();

/// Fan of the projective plane: rays e1, e2, -e1-e2.
std::shared_ptr<const Fan> plane_fan();
/// The octahedron's normal fan: six cones on four rays each.
NormalFan octahedron_normal_fan();

/// Complete fan on 3..7 primitive rays from [-3,3]^2.
std::shared_ptr<const Fan> random_fan_2d(Rng& rng);
/// Face fan of a random subset of {-1,0,1}^3 containing 0 in its interior.
std::shared_ptr<const Fan> random_fan_3d(Rng& rng);

/// Smallest L > 0 such that the function with value L on every ray is
/// integral and linear on each maximal cone. Requires the rays of every
/// maximal cone to lie on an affine hyperplane.
Integer gauge_scale(const Fan& fan);

/// Random small ray values accepted by support_from_ray_values (on 2-d fans
/// also built by walking around the circle); falls back to a linear function
/// plus a multiple of the gauge.
SupportFunction random_support(const std::shared_ptr<const Fan>& fan, Rng& rng);

int uniform(Rng& rng, int lo, int hi);

/// Lattice points of the box satisfying the predicate, lexicographic.
std::vector<LatticeVector> scan(const LatticeVector& lo, const LatticeVector& hi,
                                const std::function<bool(const LatticeVector&)>& keep);

/// sum over cones of (-1)^codim [<b, v> >= -value(v) for all rays v of the cone],
/// from the ray values alone.
Integer oracle_signed_count(const Fan& fan, const std::vector<Integer>& values, const LatticeVector& b);

} // namespace toric::testing
