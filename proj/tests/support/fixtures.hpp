#pragma once

#include <string>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa::fixtures {

// One vertex v with a single loop x; its algebra is the Laurent ring.
inline GraphPtr one_loop() {
  return Graph::Builder().vertex("v").edge("x", "v", "v").build();
}

// One vertex v with n loops y1..yn.
inline GraphPtr rose(int n) {
  Graph::Builder b;
  b.vertex("v");
  for (int i = 1; i <= n; ++i) b.edge("y" + std::to_string(i), "v", "v");
  return b.build();
}

// Oriented n-line: v1 -e1-> v2 -e2-> ... -> vn.
inline GraphPtr line(int n) {
  Graph::Builder b;
  for (int i = 1; i <= n; ++i) b.vertex("v" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    b.edge("e" + std::to_string(i), "v" + std::to_string(i),
           "v" + std::to_string(i + 1));
  return b.build();
}

// Infinite clock, materializing k of its edges: flagged center v with
// f1 -> w1, ..., fk -> wk.
inline GraphPtr infinite_clock(int k) {
  Graph::Builder b;
  b.vertex("v", /*infinite_emitter=*/true);
  for (int i = 1; i <= k; ++i) {
    b.vertex("w" + std::to_string(i));
    b.edge("f" + std::to_string(i), "v", "w" + std::to_string(i));
  }
  return b.build();
}

// Infinite clock with a single materialized edge named f, range w (the
// worked two-vertex example).
inline GraphPtr clock_fw() {
  return Graph::Builder()
      .vertex("v", true)
      .vertex("w")
      .edge("f", "v", "w")
      .build();
}

// Finite clock with k fingers: ordinary center v, edges c1..ck to sinks.
inline GraphPtr finite_clock(int k) {
  Graph::Builder b;
  b.vertex("v");
  for (int i = 1; i <= k; ++i) {
    b.vertex("w" + std::to_string(i));
    b.edge("c" + std::to_string(i), "v", "w" + std::to_string(i));
  }
  return b.build();
}

// v -e-> w -f-> v, the 2-cycle.
inline GraphPtr two_cycle() {
  return Graph::Builder()
      .vertex("v")
      .vertex("w")
      .edge("e", "v", "w")
      .edge("f", "w", "v")
      .build();
}

inline GraphPtr isolated() { return Graph::Builder().vertex("u").build(); }

}  // namespace lpa::fixtures
