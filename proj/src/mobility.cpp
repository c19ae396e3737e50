#include "irsim/mobility.hpp"

#include <cmath>

namespace irsim {

std::vector<NodeKinematics> init_nodes(RandomStream& rng, const SimConfig& cfg) {
  std::vector<NodeKinematics> nodes;
  nodes.reserve(static_cast<std::size_t>(cfg.num_nodes));
  const Box& r = cfg.region;
  for (int k = 0; k < cfg.num_nodes; ++k) {
    NodeKinematics node;
    node.position.x = r.min.x + (r.max.x - r.min.x) * rng.uniform();
    node.position.y = r.min.y + (r.max.y - r.min.y) * rng.uniform();
    node.position.z = r.min.z + (r.max.z - r.min.z) * rng.uniform();
    const double heading = kTwoPi * rng.uniform();
    const double speed = cfg.v_max_mps * rng.uniform();
    node.velocity = {speed * std::cos(heading), speed * std::sin(heading), 0.0};
    nodes.push_back(node);
  }
  return nodes;
}

NodeKinematics step_kinematics(NodeKinematics node, double dt, const Box& bounds) {
  node.position = node.position + dt * node.velocity;
  for (int axis = 0; axis < 3; ++axis) {
    const double lo = bounds.min[axis];
    const double hi = bounds.max[axis];
    double& x = node.position[axis];
    double& v = node.velocity[axis];
    // Each mirror shrinks the overshoot by the box extent; a degenerate
    // (zero-extent) axis is clamped.
    if (hi <= lo) {
      if (x != lo) {
        x = lo;
        v = -v;
      }
      continue;
    }
    while (x < lo || x > hi) {
      x = x > hi ? 2.0 * hi - x : 2.0 * lo - x;
      v = -v;
    }
  }
  return node;
}

}  // namespace irsim
