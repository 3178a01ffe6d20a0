#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpa/theta.hpp"

namespace lpa {

/// Data of the subalgebra B(a_1,...,a_l) attached to a finite set of
/// nonzero elements: F is the set of edges appearing in the terms of
/// positive total length, S the set of vertices appearing as length-0
/// terms, partitioned as
///   S1 = S n r(F),              and on T = S \ S1:
///   S2 = { v : s^-1(v) nonempty and contained in F }
///   S3 = { v : s^-1(v) n F empty }
///   S4 = { v : s^-1(v) meets both F and its complement }.
/// A flagged infinite emitter always has edges outside F, so it lands in
/// S4 as soon as one of its materialized edges is in F. For w in S4,
/// u_w = w - sum_{f in F, s(f)=w} ff*. The subalgebra is generated by the
/// theta images together with S3 and the u_w; when F is empty (vertex-only
/// inputs) it degenerates to the span of the vertices and theta is absent.
struct SubalgebraData {
  std::vector<Element> inputs;
  GraphPtr graph;
  Field field;
  std::vector<std::uint32_t> f_set;          // sorted edge indices
  std::vector<std::uint32_t> s_all;          // sorted vertex indices
  std::vector<std::uint32_t> s1, s2, s3, s4; // sorted, disjoint, cover s_all
  std::map<std::uint32_t, Element> u_elements;  // w in S4 -> u_w
  std::optional<ThetaMap> theta;             // absent iff f_set empty

  /// G^0 u G^1 u (G^1)* u { v in S3 } u { u_w }.
  std::vector<Element> generators() const;

  nlohmann::json to_json() const;
};

SubalgebraData build_bs(const std::vector<Element>& inputs);

/// Orthogonality package of the direct-sum decomposition: the S3 vertices
/// and the u_w are pairwise orthogonal idempotents, and each annihilates
/// every member of G^0 on both sides.
bool verify_direct_sum(const SubalgebraData& d);

/// Every input lies in the span of products of at most length_bound
/// generators.
bool verify_membership(const SubalgebraData& d, int length_bound,
                       bool* saturated = nullptr);

/// Upward directedness witness: every generator of B(s1_inputs) and of
/// B(s2_inputs) lies in the bounded product span of B(T), where T is the
/// union of the two generator sets taken as new inputs.
bool verify_directedness(const std::vector<Element>& s1_inputs,
                         const std::vector<Element>& s2_inputs,
                         int length_bound);

}  // namespace lpa
