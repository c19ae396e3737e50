#pragma once

#include <vector>

#include "irsim/config.hpp"
#include "irsim/rng.hpp"

namespace irsim {

struct NodeKinematics {
  Vec3 position;  // m
  Vec3 velocity;  // m/s, planar (z = 0)

  friend bool operator==(const NodeKinematics&, const NodeKinematics&) = default;
};

/// K nodes uniform over the region, heading uniform on [0, 2pi), speed
/// uniform on [0, v_max]. Draw order per node: x, y, z, heading, speed.
std::vector<NodeKinematics> init_nodes(RandomStream& rng, const SimConfig& cfg);

/// Moves by dt * v, then mirrors every violated coordinate about its bound
/// and negates that velocity component until the node is inside.
NodeKinematics step_kinematics(NodeKinematics node, double dt, const Box& bounds);

}  // namespace irsim
