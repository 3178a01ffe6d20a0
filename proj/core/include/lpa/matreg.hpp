#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

/// The isomorphism of the algebra of a finite acyclic graph without
/// infinite emitters with a direct sum of matrix rings, one block per sink.
/// Block i is indexed by the paths ending at sink w_i; a monomial pq* with
/// common range v maps, after CK2-expanding v to sink form
/// pq* = sum over paths a from v to a sink of (pa)(qa)*, to the matrix
/// units E_{pa,qa} of the blocks of the receiving sinks.
class MatDecomposition {
 public:
  static MatDecomposition build(const GraphPtr& g, Field field);

  const GraphPtr& graph() const { return graph_; }
  const Field& field() const { return field_; }
  const std::vector<std::uint32_t>& sink_vertices() const { return sinks_; }
  std::size_t block_count() const { return sinks_.size(); }
  std::size_t block_size(std::size_t i) const { return blocks_[i].size(); }
  std::vector<std::size_t> block_sizes() const;
  const std::vector<Path>& block_basis(std::size_t i) const {
    return blocks_[i];
  }

  std::vector<Matrix> forward(const Element& a) const;
  /// The element pq* for basis paths p, q of block i.
  Element backward_unit(std::size_t i, std::size_t p, std::size_t q) const;
  Element backward(const std::vector<Matrix>& mats) const;

  Element algebra_identity() const {
    return Element::identity(graph_, field_);
  }

 private:
  GraphPtr graph_;
  Field field_;
  std::vector<std::uint32_t> sinks_;
  std::vector<std::vector<Path>> blocks_;
  std::vector<std::map<Path, std::size_t>> index_;  // per block: path -> row
  // per vertex: (block, path-from-vertex-to-that-block's-sink)
  std::vector<std::vector<std::pair<std::size_t, Path>>> to_sink_;
};

/// Equivalent entry point matching the graph-level operation.
MatDecomposition decompose(const GraphPtr& g,
                           Field field = Field::rationals());

/// Number of irreducible monomials pq* (the normal-form basis size);
/// equals the sum of the squared block sizes.
std::size_t dimension(const GraphPtr& g);

/// Machine-checkable regularity witnesses. Every certificate carries
/// exactly the data needed to re-verify it by multiplication, independent
/// of how it was produced.
struct RegularityCertificate {
  enum class Kind { VonNeumann, Drazin, PiRegular, UnitRegular, SpecialClean };

  Kind kind;
  Element subject;
  std::optional<Element> y;       // von Neumann / pi-regular inner inverse
  int n = 0;                      // Drazin / pi-regular exponent
  std::optional<Element> x;       // Drazin inverse
  std::optional<Element> u;       // unit
  std::optional<Element> u_inv;
  std::optional<Element> e;       // clean idempotent

  std::string kind_name() const;
  nlohmann::json to_json() const;
};

/// Independent re-check of a certificate. Identities are verified by
/// multiplication; the trivial-intersection clause of a special-clean
/// certificate is re-checked through the rank identity
/// rank([A|E]) = rank(A) + rank(E) per block.
bool verify_certificate(const MatDecomposition& d,
                        const RegularityCertificate& c);

/// y with a y a = a. Per block, from A = U D V the inner inverse is
/// V^-1 U^-1.
RegularityCertificate vn_inverse(const MatDecomposition& d, const Element& a);

/// (n, x) with ax = xa and a^{n+1} x = a^n = x a^{n+1}; n is the largest
/// per-block Drazin index (least k >= 1 with rank A^k = rank A^{k+1}) and x
/// the Drazin inverse from the core-nilpotent decomposition.
RegularityCertificate drazin_witness(const MatDecomposition& d,
                                     const Element& a);

/// (n, y = x^n) with a^n y a^n = a^n, iterated out of a Drazin witness.
RegularityCertificate pi_witness_from_drazin(const RegularityCertificate& c);

/// Unit u with a u a = a and u u^-1 = u^-1 u = identity (the sum of all
/// vertices). Uses the same rank factorization as vn_inverse.
RegularityCertificate unit_regular_inverse(const MatDecomposition& d,
                                           const Element& a);

/// (e, u, u^-1) with e idempotent, a = e + u, u a unit, and aR n eR = 0.
RegularityCertificate special_clean(const MatDecomposition& d,
                                    const Element& a);

}  // namespace lpa
